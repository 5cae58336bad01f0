#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parafree/coset.hpp"
#include "parafree/intmat.hpp"
#include "parafree/word.hpp"

namespace parafree {

// One subgroup generator produced by the Reidemeister-Schreier method:
// the word t * g * t'^-1 where t, t' are transversal representatives.
struct SchreierGenerator {
  int coset;           // transversal index of t
  int gen;             // source generator
  Word schreier_word;  // over the source alphabet, freely reduced
  std::string name;    // name in the subgroup presentation

  // Whether the word has the literal shape u * a * u^-1 for the given
  // source generator (single positive occurrence at the centre).
  bool is_conjugate_of(int source_gen) const;
};

// Output of the Reidemeister-Schreier method for a closed coset table.
struct SchreierData {
  std::vector<Word> transversal;             // breadth-first order, [0] = 1
  std::vector<SchreierGenerator> generators; // parallel to the new alphabet
  Presentation presentation;                 // subgroup presentation
};

// Prefix-closed Schreier transversal, chosen breadth-first over positive
// generator edges. gen_order lists source generators in exploration order
// (empty = alphabet order); it controls which representatives are found
// first, e.g. b-before-a reproduces the basis {1, b, b^2, ...} for kernels
// where only b moves cosets.
std::vector<Word> schreier_transversal(const CosetTable& table,
                                       const Alphabet& alphabet,
                                       const std::vector<int>& gen_order = {});

// Subgroup presentation on the nontrivial Schreier generators, with one
// relator for each rewritten conjugate t * r * t^-1. Generators whose
// Schreier word freely reduces to the identity (tree edges) are dropped.
SchreierData rs_presentation(const Presentation& pres, const CosetTable& table,
                             const std::vector<int>& gen_order = {});

// Tietze cleanup: drops duplicate and empty relators, removes generators
// killed by single-letter relators, and eliminates generators that occur
// exactly once in some relator. Preserves the group up to isomorphism
// (checked via abelian invariants).
SchreierData simplify(const SchreierData& data);

// Schreier generators for the kernel of the exponent-sum homomorphism
// G -> Z_modulus determined by gen_images. The presentation's relators must
// have zero image (checked). Feeding these to todd_coxeter enumerates the
// kernel's cosets; the closed table has image_order rows.
struct KernelSubgroup {
  std::vector<Word> generators;
  int image_order;  // order of the image subgroup of Z_modulus
};
KernelSubgroup exponent_kernel_generators(const Presentation& pres,
                                          const std::vector<std::int64_t>& gen_images,
                                          std::int64_t modulus);

// Schreier generators for the kernel of G -> Z_m1 x ... x Z_mn sending the
// i-th generator to the i-th standard basis vector. With moduli equal to
// the abelian invariants of G this is the commutator subgroup [G, G].
KernelSubgroup abelianized_kernel_generators(const Presentation& pres,
                                             const std::vector<std::int64_t>& moduli);

}  // namespace parafree
