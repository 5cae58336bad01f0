#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parafree/coset.hpp"
#include "parafree/word.hpp"

namespace parafree {

// The free product C_{p^l} * C_{p^k} on generators a, b. p must be prime;
// p = 2 is computed but flagged, since the statements mirrored here are
// proved for odd primes only.
struct FreeProductContext {
  std::int64_t p;
  int l;
  int k;
  Alphabet alphabet;  // {a, b}

  std::int64_t order_a() const;  // p^l
  std::int64_t order_b() const;  // p^k
  bool odd_prime() const { return p % 2 == 1; }

  static FreeProductContext make(std::int64_t p, int l = 1, int k = 1);
  // <a, b | a^(p^l), b^(p^k)>
  Presentation presentation() const;
};

enum class Factor { first, second };

struct NFSyllable {
  Factor factor;
  std::int64_t exp;  // in [1, factor order)
  bool operator==(const NFSyllable&) const = default;
};

// The unique normal form of an element of C_{p^l} * C_{p^k}: an alternating
// sequence of nontrivial factor syllables; empty = identity.
struct SyllableNF {
  std::vector<NFSyllable> syllables;

  bool is_identity() const { return syllables.empty(); }
  bool operator==(const SyllableNF&) const = default;
};

SyllableNF nf_reduce(const FreeProductContext& ctx, const Word& w);
bool nf_equal(const FreeProductContext& ctx, const Word& u, const Word& v);

// A cyclically reduced conjugate: first and last syllables in different
// factors, or length <= 1.
SyllableNF cyclic_reduce(const FreeProductContext& ctx, const SyllableNF& nf);

struct ElementOrder {
  bool infinite = false;
  std::int64_t value = 0;  // meaningful only when finite

  static ElementOrder inf() { return {true, 0}; }
  static ElementOrder finite(std::int64_t n) { return {false, n}; }
  bool operator==(const ElementOrder&) const = default;
};

// Order of the element represented by w: infinite iff its cyclically
// reduced form has >= 2 syllables; otherwise the order within one factor.
ElementOrder element_order(const FreeProductContext& ctx, const Word& w);

enum class InfOrderVerdict { infinite_confirmed, precondition_violated };

// Machine check of the statement: for gamma nontrivial and not a power of
// b, the element gamma * [b, gamma] has infinite order. A finite order here
// would falsify the statement and throws ClaimViolationError.
InfOrderVerdict check_inf_order_claim(const FreeProductContext& ctx,
                                      const Word& gamma);

// Word over ctx's alphabet spelling the normal form.
Word nf_to_word(const FreeProductContext& ctx, const SyllableNF& nf);

// All normal forms with at most max_syllables syllables, identity first,
// in deterministic order. Grows like (m1 m2)^(len/2); small lengths only.
std::vector<SyllableNF> enumerate_normal_forms(const FreeProductContext& ctx,
                                               int max_syllables);

std::string to_string(const FreeProductContext& ctx, const SyllableNF& nf);

}  // namespace parafree
