#include "parafree/gog.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "parafree/errors.hpp"

namespace parafree {

namespace {

bool is_odd_prime(std::int64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

BigInt big_pow(std::int64_t base, std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::int64_t small_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<std::vector<std::pair<int, int>>> adjacency(const GroupTree& t) {
  std::vector<std::vector<std::pair<int, int>>> adj(t.vertex_count());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    adj[t.edges[e].u].emplace_back(t.edges[e].v, static_cast<int>(e));
    adj[t.edges[e].v].emplace_back(t.edges[e].u, static_cast<int>(e));
  }
  return adj;
}

std::vector<int> bfs_depths(const GroupTree& t, int root) {
  auto adj = adjacency(t);
  std::vector<int> depth(t.vertex_count(), -1);
  std::queue<int> q;
  depth[root] = 0;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [u, e] : adj[v])
      if (depth[u] < 0) {
        depth[u] = depth[v] + 1;
        q.push(u);
      }
  }
  return depth;
}

}  // namespace

BigInt GroupTree::vertex_order(int v) const {
  return big_pow(p, vertex_exp[v]);
}

BigInt GroupTree::edge_order(int e) const { return big_pow(p, edges[e].exp); }

GroupTree GroupTree::make(std::int64_t p, std::vector<int> vertex_exp,
                          std::vector<Edge> edges) {
  if (!is_odd_prime(p)) throw Error("p must be an odd prime");
  GroupTree t{p, std::move(vertex_exp), std::move(edges)};
  const int k = t.vertex_count();
  if (k < 1) throw Error("tree needs at least one vertex");
  for (int m : t.vertex_exp)
    if (m < 1) throw Error("vertex exponents must be >= 1");
  if (static_cast<int>(t.edges.size()) != k - 1)
    throw Error("a tree on k vertices has k-1 edges");
  for (const Edge& e : t.edges) {
    if (e.u < 0 || e.u >= k || e.v < 0 || e.v >= k || e.u == e.v)
      throw Error("edge endpoints out of range");
    if (e.exp < 0 || e.exp >= t.vertex_exp[e.u] || e.exp >= t.vertex_exp[e.v])
      throw Error("edge group must be a proper subgroup of both endpoints");
  }
  std::vector<int> depth = bfs_depths(t, 0);
  if (std::count(depth.begin(), depth.end(), -1) != 0)
    throw Error("edge set is not connected");
  return t;
}

std::pair<std::vector<int>, std::vector<int>> order_tree(const GroupTree& t,
                                                         int root) {
  if (root < 0 || root >= t.vertex_count())
    throw Error("root is not a vertex of the tree");
  std::vector<int> depth = bfs_depths(t, root);
  std::vector<int> vertices, edges;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto& edge = t.edges[e];
    vertices.push_back(depth[edge.u] > depth[edge.v] ? edge.u : edge.v);
    edges.push_back(static_cast<int>(e));
  }
  vertices.push_back(root);
  return {vertices, edges};
}

BigInt ab_order(const GroupTree& t) {
  std::int64_t exp = 0;
  for (int m : t.vertex_exp) exp += m;
  for (const auto& e : t.edges) exp -= e.exp;
  return big_pow(t.p, exp);
}

ConstraintReport check_constraints(const GroupTree& t, int n) {
  ConstraintReport r;
  r.product_lhs = ab_order(t);
  r.product_rhs = big_pow(t.p, n);
  r.product_ok = r.product_lhs == r.product_rhs;

  r.euler_lhs = Rational(0);
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    r.euler_lhs += Rational(1, small_pow(t.p, t.edges[e].exp));
  for (int v = 0; v < t.vertex_count(); ++v)
    r.euler_lhs -= Rational(1, small_pow(t.p, t.vertex_exp[v]));
  r.euler_rhs = Rational(n) - Rational(1) - Rational(n, t.p);
  r.euler_ok = r.euler_lhs == r.euler_rhs;
  return r;
}

Presentation tree_pi1_presentation(const GroupTree& t) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> vgen(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int j = 0; j < t.vertex_exp[v]; ++j) {
      vgen[v].push_back(static_cast<int>(names.size()));
      names.push_back("v" + std::to_string(v) + "g" + std::to_string(j));
    }
  Alphabet a(names);

  std::vector<Word> relators;
  for (int v = 0; v < t.vertex_count(); ++v) {
    for (int g : vgen[v]) relators.push_back(Word::generator(a, g, t.p));
    for (std::size_t i = 0; i < vgen[v].size(); ++i)
      for (std::size_t j = i + 1; j < vgen[v].size(); ++j)
        relators.push_back(commutator(Word::generator(a, vgen[v][i]),
                                      Word::generator(a, vgen[v][j])));
  }
  // Edge subgroup C_p^exp identified along the first exp basis generators
  // of each endpoint.
  for (const auto& e : t.edges)
    for (int j = 0; j < e.exp; ++j)
      relators.push_back(multiply(Word::generator(a, vgen[e.u][j]),
                                  Word::generator(a, vgen[e.v][j], -1)));
  return Presentation::make(a, std::move(relators));
}

namespace {

// A connected tree in which every edge group is nontrivial. Building blocks
// of the search: a full candidate is a multiset of these, joined by trivial
// edges (the joining shape does not change the fundamental group, so it is
// normalized to a chain).
struct Component {
  std::vector<int> vexp;
  std::vector<GroupTree::Edge> edges;

  int contribution() const {
    int c = 0;
    for (int m : vexp) c += m;
    for (const auto& e : edges) c -= e.exp;
    return c;
  }
};

std::string component_encoding(const Component& c, int v, int parent) {
  std::vector<std::vector<std::pair<int, int>>> adj(c.vexp.size());
  for (const auto& e : c.edges) {
    adj[e.u].emplace_back(e.v, e.exp);
    adj[e.v].emplace_back(e.u, e.exp);
  }
  // Recursive AHU encoding with vertex and edge labels.
  std::function<std::string(int, int)> enc = [&](int x, int par) {
    std::vector<std::string> kids;
    for (auto [y, exp] : adj[x])
      if (y != par) kids.push_back("(" + std::to_string(exp) + enc(y, x) + ")");
    std::sort(kids.begin(), kids.end());
    std::string s = "[" + std::to_string(c.vexp[x]);
    for (const auto& k : kids) s += k;
    return s + "]";
  };
  return enc(v, parent);
}

std::string canonical_encoding(const Component& c) {
  std::string best;
  for (std::size_t v = 0; v < c.vexp.size(); ++v) {
    std::string e = component_encoding(c, static_cast<int>(v), -1);
    if (best.empty() || e < best) best = e;
  }
  return best;
}

// All components up to isomorphism with size <= max_k vertices, exponents
// <= max_exponent, grown by leaf attachment with canonical deduplication.
// The exponent contribution (sum of vertex exponents minus edge exponents)
// is at least 1 per vertex and only grows under attachment, so components
// exceeding max_contribution can never appear in a satisfying tree and are
// pruned.
std::vector<Component> enumerate_components(int max_k, int max_exponent,
                                            int max_contribution,
                                            std::int64_t cap) {
  std::map<std::string, Component> seen;
  std::vector<Component> frontier;
  for (int m = 1; m <= std::min(max_exponent, max_contribution); ++m) {
    Component c{{m}, {}};
    seen.emplace(canonical_encoding(c), c);
    frontier.push_back(c);
  }
  for (int size = 2; size <= max_k; ++size) {
    std::vector<Component> next;
    for (const Component& c : frontier)
      for (std::size_t v = 0; v < c.vexp.size(); ++v)
        for (int m = 2; m <= max_exponent; ++m)
          for (int e = 1; e < std::min(m, c.vexp[v]); ++e) {
            if (c.contribution() + m - e > max_contribution) continue;
            Component grown = c;
            grown.vexp.push_back(m);
            grown.edges.push_back({static_cast<int>(v),
                                   static_cast<int>(grown.vexp.size()) - 1, e});
            std::string key = canonical_encoding(grown);
            if (seen.emplace(key, grown).second) next.push_back(grown);
            if (static_cast<std::int64_t>(seen.size()) > cap)
              throw ResourceLimitError("component enumeration exceeded cap");
          }
    frontier = std::move(next);
  }
  std::vector<Component> out;
  for (auto& [key, c] : seen) out.push_back(std::move(c));
  return out;  // sorted by canonical encoding via the map
}

GroupTree assemble(std::int64_t p, const std::vector<const Component*>& parts) {
  std::vector<int> vexp;
  std::vector<GroupTree::Edge> edges;
  int prev_head = -1;
  for (const Component* c : parts) {
    int base = static_cast<int>(vexp.size());
    vexp.insert(vexp.end(), c->vexp.begin(), c->vexp.end());
    for (const auto& e : c->edges) edges.push_back({base + e.u, base + e.v, e.exp});
    if (prev_head >= 0) edges.push_back({prev_head, base, 0});
    prev_head = base;
  }
  return GroupTree::make(p, std::move(vexp), std::move(edges));
}

// Consistency check mirroring the divisibility step of the uniqueness
// proof: any tree meeting the Euler constraint whose maximal vertex order
// exceeds p must contain a multiple of p many maximal vertices.
void assert_divisibility_step(const GroupTree& t, const ConstraintReport& r) {
  if (!r.euler_ok) return;
  int max_exp = *std::max_element(t.vertex_exp.begin(), t.vertex_exp.end());
  if (max_exp <= 1) return;
  auto count = std::count(t.vertex_exp.begin(), t.vertex_exp.end(), max_exp);
  if (count % t.p != 0)
    throw ClaimViolationError(
        "divisibility step violated on candidate tree " + to_string(t));
}

}  // namespace

std::vector<GroupTree> enumerate_admissible(std::int64_t p, int n, int max_k,
                                            int max_exponent,
                                            std::int64_t candidate_cap) {
  if (!is_odd_prime(p)) throw Error("p must be an odd prime");
  if (n < 1 || max_k < 1) throw Error("n and max_k must be >= 1");
  std::vector<Component> comps =
      enumerate_components(max_k, max_exponent, n, candidate_cap);

  std::vector<GroupTree> found;
  std::vector<const Component*> chosen;
  std::int64_t candidates = 0;
  // Multisets in nondecreasing component order. Every component raises the
  // exponent sum by >= 1 and trivial joining edges add nothing, so partial
  // sums above n (the product constraint in exponent form) are pruned.
  std::function<void(std::size_t, int, int)> pick = [&](std::size_t from,
                                                        int size_sum,
                                                        int contrib_sum) {
    if (!chosen.empty() && contrib_sum == n) {
      if (++candidates > candidate_cap)
        throw ResourceLimitError("tree search exceeded candidate cap");
      GroupTree t = assemble(p, chosen);
      ConstraintReport r = check_constraints(t, n);
      assert_divisibility_step(t, r);
      if (r.satisfied()) found.push_back(std::move(t));
    }
    for (std::size_t i = from; i < comps.size(); ++i) {
      int size = static_cast<int>(comps[i].vexp.size());
      int contrib = comps[i].contribution();
      if (size_sum + size > max_k || contrib_sum + contrib > n) continue;
      chosen.push_back(&comps[i]);
      pick(i, size_sum + size, contrib_sum + contrib);
      chosen.pop_back();
    }
  };
  pick(0, 0, 0);

  std::sort(found.begin(), found.end(),
            [](const GroupTree& a, const GroupTree& b) {
              if (a.vertex_count() != b.vertex_count())
                return a.vertex_count() < b.vertex_count();
              if (a.vertex_exp != b.vertex_exp)
                return a.vertex_exp < b.vertex_exp;
              return to_string(a) < to_string(b);
            });
  return found;
}

std::string to_string(const GroupTree& t) {
  std::string s = "p=" + std::to_string(t.p) + " vertices[";
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v) s += ',';
    s += std::to_string(t.vertex_exp[v]);
  }
  s += "] edges[";
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (e) s += ',';
    s += std::to_string(t.edges[e].u) + "-" + std::to_string(t.edges[e].v) +
         ":" + std::to_string(t.edges[e].exp);
  }
  return s + "]";
}

}  // namespace parafree
