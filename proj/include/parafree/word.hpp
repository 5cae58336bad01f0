#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parafree/errors.hpp"

namespace parafree {

// A finite ordered alphabet of generator names. Names are nonempty
// alphanumeric identifiers (first character alphabetic) and pairwise
// distinct. Cheap to copy; the name list is shared.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_->size()); }
  const std::string& name(int i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<int> find(std::string_view name) const;
  // Throws AlphabetError for unknown names.
  int index_of(std::string_view name) const;

  bool operator==(const Alphabet& other) const;
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// One run of a single generator: gen^exp with exp != 0 in any stored Word.
struct Syllable {
  int gen;
  std::int64_t exp;
  bool operator==(const Syllable&) const = default;
};

// A freely reduced word over an alphabet, stored in syllable (run-length)
// form. Adjacent syllables always have distinct generators and no syllable
// has exponent zero; the empty sequence is the identity.
class Word {
 public:
  Word() = default;                    // identity over the empty alphabet
  explicit Word(Alphabet a) : alphabet_(std::move(a)) {}

  // Free reduction of an arbitrary syllable sequence (the only constructor
  // of nontrivial words, so the reduced-form invariant always holds).
  static Word reduce(Alphabet a, const std::vector<Syllable>& raw);
  static Word generator(const Alphabet& a, int gen, std::int64_t exp = 1);
  static Word generator(const Alphabet& a, std::string_view name,
                        std::int64_t exp = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  // Number of letters, i.e. sum of |exponent| over syllables.
  std::int64_t letter_length() const;
  // Sum of exponents of one generator (image under abelianization).
  std::int64_t exponent_sum(int gen) const;

  bool operator==(const Word&) const;
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word&) const;  // lexicographic on syllables

 private:
  Alphabet alphabet_;
  std::vector<Syllable> syllables_;
};

Word free_reduce(const Alphabet& a, const std::vector<Syllable>& raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, std::int64_t e);
// Commutator [x, y] = x^-1 y^-1 x y.
Word commutator(const Word& x, const Word& y);
// Conjugate x^g = g^-1 x g.
Word conjugate(const Word& x, const Word& g);

// Homomorphic image of w: generator i maps to images[i]. All images must
// share one target alphabet; images.size() must equal w's alphabet size.
Word substitute(const Word& w, const std::vector<Word>& images);

// All left-normed commutators [x1, x2, ..., x_c] with entries ranging over
// the alphabet, x1 != x2, in lexicographic tuple order. Their normal closure
// in any group generated by the alphabet is the term gamma_c of its lower
// central series.
std::vector<Word> lcs_relators(const Alphabet& a, int class_index);

// Printer for the word grammar: syllables as `a`, `a^3`, `a^-2` joined by
// `*`; the identity prints as `1`.
std::string to_string(const Word& w);

}  // namespace parafree
