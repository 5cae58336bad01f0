#include "parafree/rewriting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parafree/errors.hpp"

namespace parafree {

bool SchreierGenerator::is_conjugate_of(int source_gen) const {
  const auto& syl = schreier_word.syllables();
  if (syl.size() % 2 == 0) return false;
  std::size_t mid = syl.size() / 2;
  if (syl[mid].gen != source_gen || syl[mid].exp != 1) return false;
  for (std::size_t i = 0; i < mid; ++i) {
    const Syllable& l = syl[mid - 1 - i];
    const Syllable& r = syl[mid + 1 + i];
    if (l.gen != r.gen || l.exp != -r.exp) return false;
  }
  return true;
}

namespace {

struct Bfs {
  std::vector<int> order;   // rank -> coset
  std::vector<int> rank;    // coset -> rank
  std::vector<Word> words;  // rank -> transversal word
  // tree[coset * ngens + gen]: the positive edge (coset, gen) discovered
  // its target during the search.
  std::vector<bool> tree;
};

Bfs breadth_first(const CosetTable& table, const Alphabet& alphabet,
                  std::vector<int> gen_order) {
  if (!table.closed()) throw Error("coset table is not closed");
  const int ngens = table.generator_count();
  if (alphabet.size() != ngens)
    throw Error("alphabet size does not match the coset table");
  if (gen_order.empty())
    for (int g = 0; g < ngens; ++g) gen_order.push_back(g);

  Bfs b;
  b.rank.assign(table.size(), -1);
  b.tree.assign(static_cast<std::size_t>(table.size()) * ngens, false);
  b.order.push_back(0);
  b.rank[0] = 0;
  b.words.emplace_back(alphabet);
  for (std::size_t head = 0; head < b.order.size(); ++head) {
    int c = b.order[head];
    for (int g : gen_order) {
      int d = table.step(c, g);
      if (b.rank[d] >= 0) continue;
      b.rank[d] = static_cast<int>(b.order.size());
      b.order.push_back(d);
      b.words.push_back(multiply(b.words[head], Word::generator(alphabet, g)));
      b.tree[static_cast<std::size_t>(c) * ngens + g] = true;
    }
  }
  if (static_cast<int>(b.order.size()) != table.size())
    throw Error("coset table is not transitive");  // cannot happen when closed
  return b;
}

struct CheckedAbelianInvariants {
  std::vector<BigInt> nontrivial;  // factors != 1, zeros included
};

CheckedAbelianInvariants reduced_invariants(const Presentation& p) {
  SmithForm s = abelian_invariants(p);
  CheckedAbelianInvariants out;
  for (const BigInt& d : s.invariant_factors)
    if (d != 1) out.nontrivial.push_back(d);
  return out;
}

// Letter-level canonical form of a cyclic word: the lexicographically least
// rotation of the word or its inverse. Used to identify duplicate relators.
std::vector<int> cyclic_key(const Word& w) {
  std::vector<int> letters;
  for (const Syllable& s : w.syllables()) {
    int l = 2 * s.gen + (s.exp < 0 ? 1 : 0);
    for (std::int64_t i = 0, n = s.exp < 0 ? -s.exp : s.exp; i < n; ++i)
      letters.push_back(l);
  }
  std::vector<int> inv(letters.rbegin(), letters.rend());
  for (int& l : inv) l ^= 1;

  std::vector<int> best;
  bool first = true;
  for (const auto& seq : {letters, inv})
    for (std::size_t r = 0; r < seq.size(); ++r) {
      std::vector<int> rot(seq.begin() + r, seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + r);
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  return best;
}

Word cyclically_reduce(const Word& w) {
  std::vector<Syllable> syl = w.syllables();
  while (syl.size() >= 2 && syl.front().gen == syl.back().gen) {
    Syllable merged{syl.front().gen, syl.front().exp + syl.back().exp};
    syl.erase(syl.begin());
    syl.pop_back();
    if (merged.exp != 0) syl.push_back(merged);
  }
  return Word::reduce(w.alphabet(), syl);
}

}  // namespace

std::vector<Word> schreier_transversal(const CosetTable& table,
                                       const Alphabet& alphabet,
                                       const std::vector<int>& gen_order) {
  return breadth_first(table, alphabet, gen_order).words;
}

SchreierData rs_presentation(const Presentation& pres, const CosetTable& table,
                             const std::vector<int>& gen_order) {
  const int ngens = pres.alphabet.size();
  Bfs bfs = breadth_first(table, pres.alphabet, gen_order);

  // Nontrivial Schreier generators, ordered by (transversal rank, generator).
  // sub_index[coset * ngens + gen] -> subgroup generator index, -1 for tree
  // edges (whose Schreier word freely reduces to the identity).
  std::vector<int> sub_index(static_cast<std::size_t>(table.size()) * ngens, -1);
  std::vector<SchreierGenerator> gens;
  std::vector<std::string> names;
  for (int rank = 0; rank < table.size(); ++rank) {
    int c = bfs.order[rank];
    for (int g = 0; g < ngens; ++g) {
      if (bfs.tree[static_cast<std::size_t>(c) * ngens + g]) continue;
      int d = table.step(c, g);
      Word word = multiply(multiply(bfs.words[rank], Word::generator(pres.alphabet, g)),
                           invert(bfs.words[bfs.rank[d]]));
      SchreierGenerator sg;
      sg.coset = rank;
      sg.gen = g;
      sg.schreier_word = word;
      sg.name = "x" + std::to_string(gens.size() + 1);
      sub_index[static_cast<std::size_t>(c) * ngens + g] =
          static_cast<int>(gens.size());
      names.push_back(sg.name);
      gens.push_back(std::move(sg));
    }
  }
  Alphabet sub_alphabet(names);

  // Reidemeister rewriting of u = t r t^-1, traced from coset 0. A positive
  // letter g at coset c emits the generator of edge (c, g); a negative one
  // emits the inverse of the generator of the edge arriving at c.
  auto rewrite = [&](const Word& u) {
    std::vector<Syllable> out;
    int c = 0;
    for (const Syllable& s : u.syllables()) {
      bool inv = s.exp < 0;
      for (std::int64_t i = 0, n = inv ? -s.exp : s.exp; i < n; ++i) {
        int edge_coset = inv ? table.step(c, s.gen, true) : c;
        int idx = sub_index[static_cast<std::size_t>(edge_coset) * ngens + s.gen];
        if (idx >= 0) out.push_back(Syllable{idx, inv ? -1 : 1});
        c = inv ? edge_coset : table.step(c, s.gen);
      }
    }
    return Word::reduce(sub_alphabet, out);
  };

  // Conjugates of one relator often rewrite to rotations of the same cyclic
  // word; keep one copy of each.
  std::vector<Word> relators;
  std::set<std::vector<int>> seen;
  for (int rank = 0; rank < table.size(); ++rank)
    for (const Word& r : pres.relators) {
      Word u = multiply(multiply(bfs.words[rank], r), invert(bfs.words[rank]));
      Word rewritten = rewrite(u);
      if (rewritten.is_identity()) continue;
      if (seen.insert(cyclic_key(rewritten)).second)
        relators.push_back(rewritten);
    }

  SchreierData data;
  data.transversal = bfs.words;
  data.generators = std::move(gens);
  data.presentation = Presentation{std::move(sub_alphabet), std::move(relators)};
  return data;
}

namespace {

// Removes the given generators and renames the rest, keeping their names.
// substitutions[g] (over the old alphabet) replaces syllables of g; dropped
// generators must substitute to words that avoid all dropped generators.
struct SimplifyState {
  std::vector<SchreierGenerator> gens;
  std::vector<Word> relators;
  Alphabet alphabet;

  void normalize() {
    for (Word& r : relators) r = cyclically_reduce(r);
    std::erase_if(relators, [](const Word& r) { return r.is_identity(); });
    std::set<std::vector<int>> seen;
    std::vector<Word> kept;
    for (const Word& r : relators)
      if (seen.insert(cyclic_key(r)).second) kept.push_back(r);
    relators = std::move(kept);
  }

  void substitute_generator(int g, const Word& value) {
    std::vector<Word> images;
    for (int i = 0; i < alphabet.size(); ++i)
      images.push_back(i == g ? value : Word::generator(alphabet, i));
    for (Word& r : relators) r = substitute(r, images);
  }

  void drop_generator(int g) {
    std::vector<std::string> names;
    for (int i = 0; i < alphabet.size(); ++i)
      if (i != g) names.push_back(alphabet.name(i));
    Alphabet next(names);
    std::vector<Word> images;
    for (int i = 0; i < alphabet.size(); ++i)
      images.push_back(i == g ? Word(next)
                              : Word::generator(next, alphabet.name(i)));
    for (Word& r : relators) r = substitute(r, images);
    gens.erase(gens.begin() + g);
    alphabet = next;
  }

  // Letter count of generator g in relator r.
  static std::int64_t occurrences(const Word& r, int g) {
    std::int64_t n = 0;
    for (const Syllable& s : r.syllables())
      if (s.gen == g) n += s.exp < 0 ? -s.exp : s.exp;
    return n;
  }

  bool kill_dead_generator() {
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (relators[i].letter_length() != 1) continue;
      int g = relators[i].syllables()[0].gen;
      relators.erase(relators.begin() + i);
      substitute_generator(g, Word(alphabet));
      drop_generator(g);
      return true;
    }
    return false;
  }

  bool eliminate_single_occurrence() {
    for (std::size_t i = 0; i < relators.size(); ++i) {
      const Word r = relators[i];
      for (const Syllable& s : r.syllables()) {
        if (s.exp != 1 && s.exp != -1) continue;
        const int gen = s.gen;
        if (occurrences(r, gen) != 1) continue;
        // Rotate (and invert if needed) so the relator reads g * w with w
        // free of g; then g = w^-1 in the subgroup.
        Word rot = s.exp == 1 ? r : invert(r);
        std::vector<Syllable> syl = rot.syllables();
        std::size_t pos = 0;
        while (syl[pos].gen != gen) ++pos;
        std::rotate(syl.begin(), syl.begin() + pos, syl.end());
        syl.erase(syl.begin());
        Word value = invert(Word::reduce(rot.alphabet(), syl));
        relators.erase(relators.begin() + i);
        substitute_generator(gen, value);
        drop_generator(gen);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

SchreierData simplify(const SchreierData& data) {
  CheckedAbelianInvariants before = reduced_invariants(data.presentation);

  SimplifyState st{data.generators, data.presentation.relators,
                   data.presentation.alphabet};
  st.normalize();
  for (;;) {
    if (st.kill_dead_generator()) {
      st.normalize();
      continue;
    }
    if (st.eliminate_single_occurrence()) {
      st.normalize();
      continue;
    }
    break;
  }

  SchreierData out;
  out.transversal = data.transversal;
  out.generators = std::move(st.gens);
  out.presentation = Presentation{st.alphabet, std::move(st.relators)};

  CheckedAbelianInvariants after = reduced_invariants(out.presentation);
  if (before.nontrivial != after.nontrivial)
    throw Error("internal error: simplification changed abelian invariants");
  return out;
}

KernelSubgroup exponent_kernel_generators(
    const Presentation& pres, const std::vector<std::int64_t>& gen_images,
    std::int64_t modulus) {
  if (modulus < 1) throw Error("modulus must be >= 1");
  if (static_cast<int>(gen_images.size()) != pres.alphabet.size())
    throw Error("need one image per generator");
  auto reduce_mod = [&](std::int64_t x) {
    x %= modulus;
    return x < 0 ? x + modulus : x;
  };
  for (const Word& r : pres.relators) {
    std::int64_t sum = 0;
    for (int g = 0; g < pres.alphabet.size(); ++g)
      sum += gen_images[g] * r.exponent_sum(g);
    if (reduce_mod(sum) != 0)
      throw Error("relator '" + to_string(r) +
                  "' has nonzero image; the map is not well defined");
  }

  // Transversal words for the image subgroup of Z_modulus, breadth-first.
  std::map<std::int64_t, Word> transversal;
  std::vector<std::int64_t> order{0};
  transversal.emplace(0, Word(pres.alphabet));
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int g = 0; g < pres.alphabet.size(); ++g) {
      std::int64_t next = reduce_mod(order[head] + gen_images[g]);
      if (transversal.count(next)) continue;
      transversal.emplace(next, multiply(transversal.at(order[head]),
                                         Word::generator(pres.alphabet, g)));
      order.push_back(next);
    }

  KernelSubgroup out;
  out.image_order = static_cast<int>(order.size());
  for (std::int64_t r : order)
    for (int g = 0; g < pres.alphabet.size(); ++g) {
      Word u = multiply(
          multiply(transversal.at(r), Word::generator(pres.alphabet, g)),
          invert(transversal.at(reduce_mod(r + gen_images[g]))));
      if (!u.is_identity()) out.generators.push_back(u);
    }
  return out;
}

KernelSubgroup abelianized_kernel_generators(
    const Presentation& pres, const std::vector<std::int64_t>& moduli) {
  const int n = pres.alphabet.size();
  if (static_cast<int>(moduli.size()) != n)
    throw Error("need one modulus per generator");
  for (std::int64_t m : moduli)
    if (m < 1) throw Error("moduli must be >= 1");
  auto step = [&](std::vector<std::int64_t> v, int g, std::int64_t delta) {
    v[g] = ((v[g] + delta) % moduli[g] + moduli[g]) % moduli[g];
    return v;
  };
  for (const Word& r : pres.relators)
    for (int g = 0; g < n; ++g)
      if (r.exponent_sum(g) % moduli[g] != 0)
        throw Error("relator '" + to_string(r) +
                    "' has nonzero image; the map is not well defined");

  std::map<std::vector<std::int64_t>, Word> transversal;
  std::vector<std::vector<std::int64_t>> order{std::vector<std::int64_t>(n, 0)};
  transversal.emplace(order[0], Word(pres.alphabet));
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int g = 0; g < n; ++g) {
      auto next = step(order[head], g, 1);
      if (transversal.count(next)) continue;
      transversal.emplace(next, multiply(transversal.at(order[head]),
                                         Word::generator(pres.alphabet, g)));
      order.push_back(next);
    }

  KernelSubgroup out;
  out.image_order = static_cast<int>(order.size());
  for (const auto& r : order)
    for (int g = 0; g < n; ++g) {
      Word u = multiply(
          multiply(transversal.at(r), Word::generator(pres.alphabet, g)),
          invert(transversal.at(step(r, g, 1))));
      if (!u.is_identity()) out.generators.push_back(u);
    }
  return out;
}

}  // namespace parafree
