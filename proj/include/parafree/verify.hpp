#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parafree/coset.hpp"
#include "parafree/intmat.hpp"
#include "parafree/rewriting.hpp"
#include "parafree/word.hpp"

namespace parafree {

// The parametrized presentations under comparison, all over {a, b}:
//   Gamma = <a,b | a^(p^l),           b^(p^k)>
//   G1    = <a,b | (a[b,a])^(p^l),    b^(p^k)>
//   G2    = <a,b | (a[a^(p^l),b])^(p^l), b^(p^k)>
//   H     = <a,b | a[a^(p^l),b],      b^(p^l)>
// together with the endomorphism images defining the comparison maps.
struct ParaFamily {
  std::int64_t p;
  int l;
  int k;
  Alphabet alphabet;
  Presentation gamma, g1, g2, h;
  std::vector<Word> phi1;  // a -> a[b,a],          b -> b
  std::vector<Word> phi2;  // a -> a[a^(p^l), b],   b -> b

  static ParaFamily make(std::int64_t p, int l = 1, int k = 1);
  std::int64_t pl() const;  // p^l
  std::int64_t pk() const;  // p^k
};

enum class Family { g1, g2 };

enum class Verdict { match, mismatch, inconclusive };

struct ClassResult {
  int class_index;
  std::int64_t order_g = 0;       // 0 when inconclusive
  std::int64_t order_gamma = 0;
  bool epi_ok = false;
  Verdict verdict = Verdict::inconclusive;
};

// Per-class comparison of lower central series quotients.
struct LcsReport {
  std::vector<ClassResult> per_class;

  bool all_match() const;
  bool any_mismatch() const;
  bool any_inconclusive() const;
};

// For each class i in [2, max_class], certifies G/gamma_i = Gamma/gamma_i by
// (1) equal quotient orders, (2) a checked epimorphism Gamma/gamma_i ->
// G/gamma_i (relator images trivial in the quotient, images generating its
// abelianization mod p). Equal finite order plus surjectivity is an
// isomorphism. Resource exhaustion yields `inconclusive`, never `mismatch`.
LcsReport verify_weakly_para(const ParaFamily& fam, Family which,
                             int max_class, int max_cosets = kDefaultMaxCosets);

// Same comparison for an arbitrary candidate group: images[i] is the image
// in `g` of gamma's i-th generator.
LcsReport lcs_compare(const Presentation& gamma, const Presentation& g,
                      const std::vector<Word>& images, std::int64_t p,
                      int max_class, int max_cosets = kDefaultMaxCosets);

// The relation matrix of the simplified Reidemeister-Schreier presentation
// of ker(H -> C_p), H = <a,b | a[a^p,b], b^p>, with the b-first Schreier
// basis {1, b, ..., b^(p-1)}. Result is p x p with |det| = p^p - (p-1)^p.
IntMatrix matrix_A(std::int64_t p, int max_cosets = kDefaultMaxCosets);

// Full kernel data behind matrix_A, reusable for arbitrary exponent maps.
struct KernelFacts {
  SchreierData simplified;    // kernel presentation after Tietze cleanup
  IntMatrix matrix;           // its relation matrix
  SmithForm invariants;       // abelian invariants of the kernel
  std::optional<BigInt> det;  // |det| when the matrix is square
  bool kernel_nontrivial;     // abelianization of the kernel is nontrivial
};
KernelFacts kernel_facts(const Presentation& pres,
                         const std::vector<std::int64_t>& gen_images,
                         std::int64_t modulus,
                         const std::vector<int>& gen_order = {},
                         int max_cosets = kDefaultMaxCosets);

// The evidence chain for "G2 is weakly para-Gamma but not residually
// nilpotent": (1) weakly-para up to max_class; (2) the kernel of
// H -> C_{p^l} has nontrivial abelianization, so a != 1 in H. The remaining
// implications (a^(p^l) != 1 in G2, hence ker(G2 -> Gamma) != 1, hence G2
// is not residually nilpotent) are supplied reasoning, recorded as text.
struct NonResidualNilpotenceReport {
  LcsReport weakly_para;
  KernelFacts kernel;
  Verdict verdict;  // match = chain certified, mismatch = chain broken
  std::vector<std::string> reasoning;
};
NonResidualNilpotenceReport verify_not_residually_nilpotent(
    const ParaFamily& fam, int max_class, int max_cosets = kDefaultMaxCosets);

enum class TypeLabel { type_one, type_two, type_three, unknown };

// Published labels for the two known families; everything else is unknown.
// The label for Family::g1 applies to the residually nilpotent quotient of
// G1, whose residual nilpotence is not certified here.
TypeLabel type_label(const LcsReport& report, std::optional<Family> family);

std::string to_string(TypeLabel label);
std::string to_string(Verdict v);

}  // namespace parafree
