#include "parafree/word.hpp"

#include <algorithm>
#include <cctype>

namespace parafree {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
}

const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto empty =
      std::make_shared<const std::vector<std::string>>();
  return empty;
}

}  // namespace

Alphabet::Alphabet() : names_(empty_names()) {}

Alphabet::Alphabet(std::vector<std::string> names) {
  for (const auto& n : names) {
    if (!valid_identifier(n))
      throw AlphabetError("invalid generator name: '" + n + "'");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw AlphabetError("duplicate generator name: '" + names[i] + "'");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

int Alphabet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw AlphabetError("unknown generator: '" + std::string(name) + "'");
}

bool Alphabet::operator==(const Alphabet& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

Word Word::reduce(Alphabet a, const std::vector<Syllable>& raw) {
  Word w(std::move(a));
  for (const Syllable& s : raw) {
    if (s.gen < 0 || s.gen >= w.alphabet_.size())
      throw AlphabetError("syllable generator index out of range");
    if (s.exp == 0) continue;
    if (!w.syllables_.empty() && w.syllables_.back().gen == s.gen) {
      w.syllables_.back().exp += s.exp;
      if (w.syllables_.back().exp == 0) w.syllables_.pop_back();
    } else {
      w.syllables_.push_back(s);
    }
  }
  return w;
}

Word Word::generator(const Alphabet& a, int gen, std::int64_t exp) {
  return reduce(a, {Syllable{gen, exp}});
}

Word Word::generator(const Alphabet& a, std::string_view name,
                     std::int64_t exp) {
  return generator(a, a.index_of(name), exp);
}

std::int64_t Word::letter_length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

std::int64_t Word::exponent_sum(int gen) const {
  std::int64_t n = 0;
  for (const auto& s : syllables_)
    if (s.gen == gen) n += s.exp;
  return n;
}

bool Word::operator==(const Word& o) const {
  return alphabet_ == o.alphabet_ && syllables_ == o.syllables_;
}

bool Word::operator<(const Word& o) const {
  return std::lexicographical_compare(
      syllables_.begin(), syllables_.end(), o.syllables_.begin(),
      o.syllables_.end(), [](const Syllable& x, const Syllable& y) {
        return x.gen != y.gen ? x.gen < y.gen : x.exp < y.exp;
      });
}

Word free_reduce(const Alphabet& a, const std::vector<Syllable>& raw) {
  return Word::reduce(a, raw);
}

Word multiply(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet())
    throw AlphabetError("multiply: words over different alphabets");
  std::vector<Syllable> cat = u.syllables();
  cat.insert(cat.end(), v.syllables().begin(), v.syllables().end());
  return Word::reduce(u.alphabet(), cat);
}

Word invert(const Word& w) {
  std::vector<Syllable> rev(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : rev) s.exp = -s.exp;
  return Word::reduce(w.alphabet(), rev);
}

Word power(const Word& w, std::int64_t e) {
  if (e < 0) return power(invert(w), -e);
  Word acc(w.alphabet());
  for (std::int64_t i = 0; i < e; ++i) acc = multiply(acc, w);
  return acc;
}

Word commutator(const Word& x, const Word& y) {
  return multiply(multiply(invert(x), invert(y)), multiply(x, y));
}

Word conjugate(const Word& x, const Word& g) {
  return multiply(multiply(invert(g), x), g);
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != w.alphabet().size())
    throw AlphabetError("substitute: need one image per generator");
  Alphabet target = images.empty() ? w.alphabet() : images[0].alphabet();
  for (const Word& im : images)
    if (im.alphabet() != target)
      throw AlphabetError("substitute: images over different alphabets");
  Word acc(target);
  for (const Syllable& s : w.syllables())
    acc = multiply(acc, power(images[s.gen], s.exp));
  return acc;
}

std::vector<Word> lcs_relators(const Alphabet& a, int class_index) {
  if (class_index < 2)
    throw Error("lcs_relators: class index must be >= 2");
  std::vector<Word> gens;
  for (int i = 0; i < a.size(); ++i) gens.push_back(Word::generator(a, i));

  // Left-normed commutators of weight exactly class_index, built by
  // extending weight-(c-1) commutators on the right.
  std::vector<Word> level;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (x != y) level.push_back(commutator(gens[x], gens[y]));
  for (int c = 3; c <= class_index; ++c) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (int x = 0; x < a.size(); ++x) next.push_back(commutator(w, gens[x]));
    level = std::move(next);
  }
  std::erase_if(level, [](const Word& w) { return w.is_identity(); });
  return level;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.syllables().size(); ++i) {
    const Syllable& s = w.syllables()[i];
    if (i > 0) out += '*';
    out += w.alphabet().name(s.gen);
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

}  // namespace parafree
