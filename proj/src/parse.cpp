#include "parafree/parse.hpp"

#include <cctype>
#include <cstdint>

#include "parafree/errors.hpp"

namespace parafree {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    char c = peek();
    ++pos_;
    return c;
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool at_identifier() { return std::isalpha(static_cast<unsigned char>(peek())); }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  std::string identifier() {
    if (!at_identifier()) throw ParseError("expected an identifier", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    bool neg = accept('-');
    if (!at_digit()) throw ParseError("expected an integer", pos_);
    std::int64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 60)) throw ParseError("exponent too large", pos_);
      ++pos_;
    }
    return neg ? -v : v;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  std::string_view text_;
  std::size_t pos_ = 0;
};

class WordParser {
 public:
  WordParser(const Alphabet& alphabet, Lexer& lex)
      : alphabet_(alphabet), lex_(lex) {}

  Word word() {
    Word acc(alphabet_);
    acc = multiply(acc, factor());
    for (;;) {
      if (lex_.accept('*')) {
        acc = multiply(acc, factor());
        continue;
      }
      char c = lex_.peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[')
        acc = multiply(acc, factor());
      else
        return acc;
    }
  }

 private:
  Word factor() {
    Word base = atom();
    if (lex_.accept('^')) return power(base, lex_.integer());
    return base;
  }

  Word atom() {
    if (lex_.accept('(')) {
      Word w = word();
      lex_.expect(')');
      return w;
    }
    if (lex_.accept('[')) {
      Word x = word();
      lex_.expect(',');
      Word y = word();
      lex_.expect(']');
      return commutator(x, y);
    }
    if (lex_.at_identifier()) {
      std::size_t pos = lex_.pos();
      std::string name = lex_.identifier();
      auto idx = alphabet_.find(name);
      if (!idx) throw ParseError("unknown generator '" + name + "'", pos);
      return Word::generator(alphabet_, *idx);
    }
    if (lex_.at_digit()) {
      std::size_t pos = lex_.pos();
      if (lex_.integer() != 1)
        throw ParseError("only '1' denotes the identity word", pos);
      return Word(alphabet_);
    }
    throw ParseError("expected a word", lex_.pos());
  }

  const Alphabet& alphabet_;
  Lexer& lex_;
};

}  // namespace

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Lexer lex(text);
  WordParser p(alphabet, lex);
  Word w = p.word();
  if (!lex.at_end()) throw ParseError("trailing input after word", lex.pos());
  return w;
}

Presentation parse_presentation(std::string_view text) {
  Lexer lex(text);
  lex.expect('<');
  std::vector<std::string> names;
  names.push_back(lex.identifier());
  while (lex.accept(',')) names.push_back(lex.identifier());
  Alphabet alphabet(names);
  lex.expect('|');

  std::vector<Word> relators;
  if (!lex.accept('>')) {
    WordParser p(alphabet, lex);
    std::size_t pos = lex.pos();
    relators.push_back(p.word());
    if (relators.back().is_identity())
      throw ParseError("relator is trivial after free reduction", pos);
    while (lex.accept(',')) {
      pos = lex.pos();
      relators.push_back(p.word());
      if (relators.back().is_identity())
        throw ParseError("relator is trivial after free reduction", pos);
    }
    lex.expect('>');
  }
  if (!lex.at_end())
    throw ParseError("trailing input after presentation", lex.pos());
  return Presentation::make(std::move(alphabet), std::move(relators));
}

std::string to_string(const Presentation& pres) {
  std::string out = "<";
  for (int i = 0; i < pres.alphabet.size(); ++i) {
    if (i) out += ',';
    out += pres.alphabet.name(i);
  }
  out += " | ";
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(pres.relators[i]);
  }
  return out + ">";
}

}  // namespace parafree
