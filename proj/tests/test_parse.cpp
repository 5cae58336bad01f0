#include "doctest.h"
#include "oracles.hpp"
#include "parafree/parse.hpp"

using namespace parafree;

namespace {
const Alphabet ab({"a", "b"});
}

TEST_CASE("word grammar") {
  CHECK(parse_word(ab, "1").is_identity());
  CHECK(parse_word(ab, "a") == Word::generator(ab, 0));
  CHECK(parse_word(ab, "a^3") == Word::generator(ab, 0, 3));
  CHECK(parse_word(ab, "a^-2") == Word::generator(ab, 0, -2));
  CHECK(parse_word(ab, "a*b") ==
        multiply(Word::generator(ab, 0), Word::generator(ab, 1)));
  CHECK(parse_word(ab, "a b") == parse_word(ab, "a*b"));  // juxtaposition
  CHECK(parse_word(ab, "[a,b]") ==
        commutator(Word::generator(ab, 0), Word::generator(ab, 1)));
  CHECK(parse_word(ab, "(a*[b,a])^3") ==
        power(multiply(Word::generator(ab, 0),
                       commutator(Word::generator(ab, 1), Word::generator(ab, 0))),
              3));
  CHECK(parse_word(ab, "a^2 (b a)^-1") ==
        multiply(Word::generator(ab, 0, 2),
                 invert(multiply(Word::generator(ab, 1), Word::generator(ab, 0)))));
  CHECK(parse_word(ab, "a^0").is_identity());
}

TEST_CASE("word grammar errors") {
  CHECK_THROWS_AS(parse_word(ab, "c"), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "ab"), ParseError);  // single unknown ident
  CHECK_THROWS_AS(parse_word(ab, "a^"), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "(a"), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "[a b]"), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "a)"), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "2"), ParseError);
  try {
    parse_word(ab, "a * c");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("presentation grammar") {
  Presentation p = parse_presentation("<a,b | a^3, b^3>");
  CHECK(p.alphabet.size() == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == Word::generator(p.alphabet, 0, 3));

  Presentation g1 = parse_presentation("<a,b | (a*[b,a])^3, b^3>");
  Word a = Word::generator(g1.alphabet, 0), b = Word::generator(g1.alphabet, 1);
  CHECK(g1.relators[0] == power(multiply(a, commutator(b, a)), 3));

  Presentation free2 = parse_presentation("<a,b | >");
  CHECK(free2.relators.empty());

  CHECK_THROWS_AS(parse_presentation("<a | a^0>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<a,a | a^2>"), AlphabetError);
  CHECK_THROWS_AS(parse_presentation("a^3"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<a | a^3> junk"), ParseError);
}

TEST_CASE("printer and parser round-trip") {
  oracles::TestRng rng(464);
  for (int i = 0; i < 200; ++i) {
    Word w = oracles::random_word(rng, ab, 8, 5);
    CHECK(parse_word(ab, to_string(w)) == w);
  }
  for (const char* text :
       {"<a,b | a^3, b^3>", "<a,b | (a*[b,a])^3, b^3>", "<a,b | >",
        "<x,y,z | x*y*z^-1, [x,y]>"}) {
    Presentation p = parse_presentation(text);
    Presentation q = parse_presentation(to_string(p));
    CHECK(p.alphabet == q.alphabet);
    CHECK(p.relators == q.relators);
  }
}
