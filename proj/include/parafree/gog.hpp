#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "parafree/coset.hpp"
#include "parafree/intmat.hpp"

namespace parafree {

using Rational = boost::rational<std::int64_t>;

// A finite tree of finite elementary abelian p-groups. Vertex i carries
// C_p^{vertex_exp[i]}; an edge carries C_p^{exp} embedded properly into both
// endpoint groups (exp < vertex_exp at both ends).
struct GroupTree {
  struct Edge {
    int u;
    int v;
    int exp;  // 0 = trivial edge group
    bool operator==(const Edge&) const = default;
  };

  std::int64_t p = 3;
  std::vector<int> vertex_exp;
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(vertex_exp.size()); }
  BigInt vertex_order(int v) const;
  BigInt edge_order(int e) const;

  // Validates primality of p (odd), the tree property, and properness of
  // every edge group. Throws Error on violation.
  static GroupTree make(std::int64_t p, std::vector<int> vertex_exp,
                        std::vector<Edge> edges);

  bool operator==(const GroupTree&) const = default;
};

// Enumerations v_1..v_k, e_1..e_{k-1} (as indices) with v_k = root and each
// v_i the endpoint of e_i farther from the root. Edges keep input order.
std::pair<std::vector<int>, std::vector<int>> order_tree(const GroupTree& t,
                                                         int root);

// Order of the abelianization of pi_1: product of vertex group orders
// divided by product of edge group orders.
BigInt ab_order(const GroupTree& t);

// The two arithmetic constraints a tree of groups must satisfy to present
// a group with the lower central series quotients of C_p^{*n}:
//   product:  prod |V_i| / prod |E_i| = p^n
//   euler:    sum 1/|E_i| - sum 1/|V_i| = n - 1 - n/p
struct ConstraintReport {
  BigInt product_lhs;
  BigInt product_rhs;
  Rational euler_lhs;
  Rational euler_rhs;
  bool product_ok = false;
  bool euler_ok = false;

  bool satisfied() const { return product_ok && euler_ok; }
};

ConstraintReport check_constraints(const GroupTree& t, int n);

// Presentation of pi_1: per-vertex generators v<i>g<j> with p-th power and
// commutation relators, plus identification of the first edge_exp basis
// generators across each edge.
Presentation tree_pi1_presentation(const GroupTree& t);

// Exhaustive search for trees satisfying both constraints, with at most
// max_k vertices and vertex exponents at most max_exponent. Results are
// deduplicated up to isomorphism; trees differing only in how trivial edges
// attach their free factors are identified (same fundamental group) and
// represented by a canonical chain. candidate_cap guards the search space.
std::vector<GroupTree> enumerate_admissible(std::int64_t p, int n, int max_k,
                                            int max_exponent,
                                            std::int64_t candidate_cap = 1000000);

std::string to_string(const GroupTree& t);

}  // namespace parafree
