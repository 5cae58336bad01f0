#pragma once

#include <cstdint>
#include <vector>

#include "parafree/word.hpp"

namespace parafree {

// A finite presentation: generators plus freely reduced, nonempty relators.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  static Presentation make(Alphabet alphabet, std::vector<Word> relators);
};

inline constexpr int kDefaultMaxCosets = 100000;

// A Todd-Coxeter coset table. Rows are cosets of a subgroup H <= G, columns
// are generators and their inverses; a closed table is a transitive
// permutation representation of G on the right cosets of H, with coset 0
// (printed 1-based as coset 1) being H itself.
class CosetTable {
 public:
  CosetTable(int ngens, int ncosets, std::vector<int> entries, bool closed);

  int generator_count() const { return ngens_; }
  int size() const { return ncosets_; }
  bool closed() const { return closed_; }

  // Image of a coset under one generator (or its inverse); -1 if undefined.
  int step(int coset, int gen, bool inverse = false) const {
    return entries_[static_cast<std::size_t>(coset) * 2 * ngens_ + 2 * gen +
                    (inverse ? 1 : 0)];
  }
  // Image of a coset under a whole word.
  int apply(int coset, const Word& w) const;

  // Every entry defined, every generator column a permutation.
  bool is_permutation_representation() const;
  // The word acts as the identity permutation on all cosets.
  bool fixes_all_cosets(const Word& w) const;

 private:
  int ngens_;
  int ncosets_;
  std::vector<int> entries_;  // row-major, 2*ngens per coset
  bool closed_;
};

// Coset enumeration (HLT strategy with coincidence handling) for the
// subgroup *generated by* subgroup_gens. Normal closures are not taken; to
// quotient by extra relators use quotient_order instead. Deterministic for
// fixed inputs. Throws ResourceLimitError when more than max_cosets rows
// would be needed (inconclusive; Todd-Coxeter cannot prove infiniteness).
CosetTable todd_coxeter(const Presentation& pres,
                        const std::vector<Word>& subgroup_gens,
                        int max_cosets = kDefaultMaxCosets);

// Order of <alphabet | relators + extra_relators>, by enumerating the
// cosets of the trivial subgroup.
std::int64_t quotient_order(const Presentation& pres,
                            const std::vector<Word>& extra_relators,
                            int max_cosets = kDefaultMaxCosets);

// Convenience: the closed table of the quotient itself.
CosetTable quotient_table(const Presentation& pres,
                          const std::vector<Word>& extra_relators,
                          int max_cosets = kDefaultMaxCosets);

// True iff w stabilizes every coset of a closed table.
bool word_is_identity_in_quotient(const CosetTable& table, const Word& w);

}  // namespace parafree
