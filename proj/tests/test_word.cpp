#include "doctest.h"
#include "oracles.hpp"
#include "parafree/word.hpp"

using namespace parafree;

namespace {
const Alphabet ab({"a", "b"});
Word gen(const char* name, std::int64_t e = 1) {
  return Word::generator(ab, name, e);
}
}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(ab, {{0, 1}, {0, -1}}).is_identity());
  CHECK(free_reduce(ab, {{0, 2}, {0, 3}}) == gen("a", 5));
  // a b b^-1 a collapses stepwise to a^2
  Word w = free_reduce(ab, {{0, 1}, {1, 1}, {1, -1}, {0, 1}});
  CHECK(w == gen("a", 2));
  CHECK(w == oracles::letter_stack_reduce(ab, {{0, 1}, {1, 1}, {1, -1}, {0, 1}}));
  CHECK_THROWS_AS(free_reduce(ab, {{7, 1}}), AlphabetError);
}

TEST_CASE("free reduction is idempotent and matches the letter oracle") {
  oracles::TestRng rng(101);
  for (int i = 0; i < 300; ++i) {
    auto raw = oracles::random_raw_word(rng, 2, 8, 4);
    Word once = free_reduce(ab, raw);
    CHECK(free_reduce(ab, once.syllables()) == once);
    CHECK(once == oracles::letter_stack_reduce(ab, raw));
    for (std::size_t j = 0; j + 1 < once.syllables().size(); ++j)
      CHECK(once.syllables()[j].gen != once.syllables()[j + 1].gen);
  }
}

TEST_CASE("multiply") {
  CHECK(multiply(gen("a"), gen("a", -1)).is_identity());
  Word uv = multiply(multiply(gen("a"), gen("b")),
                     multiply(gen("b", -1), gen("a")));
  CHECK(uv == gen("a", 2));
  Word w = multiply(gen("a", 2), gen("b", -3));
  CHECK(multiply(Word(ab), w) == w);
  CHECK(multiply(w, Word(ab)) == w);

  Alphabet other({"x"});
  CHECK_THROWS_AS(multiply(gen("a"), Word::generator(other, "x")),
                  AlphabetError);
}

TEST_CASE("multiply is associative with identity (randomized)") {
  oracles::TestRng rng(202);
  for (int i = 0; i < 200; ++i) {
    Word u = oracles::random_word(rng, ab, 6, 3);
    Word v = oracles::random_word(rng, ab, 6, 3);
    Word w = oracles::random_word(rng, ab, 6, 3);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, invert(u)).is_identity());
  }
}

TEST_CASE("invert") {
  CHECK(invert(Word(ab)).is_identity());
  Word w = multiply(gen("a", 2), gen("b", -1));
  CHECK(invert(w) == multiply(gen("b"), gen("a", -2)));
  oracles::TestRng rng(303);
  for (int i = 0; i < 100; ++i) {
    Word u = oracles::random_word(rng, ab, 8, 3);
    CHECK(invert(invert(u)) == u);
  }
}

TEST_CASE("commutator convention [x,y] = x^-1 y^-1 x y") {
  CHECK(commutator(gen("a"), gen("a")).is_identity());
  Word expected = multiply(multiply(gen("a", -1), gen("b", -1)),
                           multiply(gen("a"), gen("b")));
  CHECK(commutator(gen("a"), gen("b")) == expected);
  // gamma*[b,gamma] expands to gamma b^-1 gamma^-1 b gamma
  oracles::TestRng rng(404);
  for (int i = 0; i < 50; ++i) {
    Word g = oracles::random_word(rng, ab, 5, 2);
    Word lhs = multiply(g, commutator(gen("b"), g));
    Word rhs = free_reduce(ab, [&] {
      std::vector<Syllable> s = g.syllables();
      s.push_back({1, -1});
      Word gi = invert(g);
      s.insert(s.end(), gi.syllables().begin(), gi.syllables().end());
      s.push_back({1, 1});
      s.insert(s.end(), g.syllables().begin(), g.syllables().end());
      return s;
    }());
    CHECK(lhs == rhs);
    CHECK(commutator(g, g).is_identity());
    CHECK(commutator(g, Word(ab)).is_identity());
  }
}

TEST_CASE("substitute") {
  Word a = gen("a"), b = gen("b");
  Word g1_base = multiply(a, commutator(b, a));  // a[b,a]
  SUBCASE("a^p maps to (a[b,a])^p") {
    for (int p : {3, 5}) {
      Word image = substitute(power(a, p), {g1_base, b});
      CHECK(image == power(g1_base, p));
    }
  }
  SUBCASE("a maps to a[a^p,b], spelled out") {
    int p = 3;
    Word image = substitute(a, {multiply(a, commutator(power(a, p), b)), b});
    // a * a^-p b^-1 a^p b = a^(1-p) b^-1 a^p b
    Word manual = free_reduce(
        ab, {{0, 1 - p}, {1, -1}, {0, p}, {1, 1}});
    CHECK(image == manual);
  }
  SUBCASE("identity map") {
    oracles::TestRng rng(505);
    for (int i = 0; i < 50; ++i) {
      Word w = oracles::random_word(rng, ab, 6, 3);
      CHECK(substitute(w, {a, b}) == w);
    }
  }
  SUBCASE("distributes over multiply") {
    oracles::TestRng rng(606);
    std::vector<Word> images = {multiply(a, commutator(b, a)), multiply(b, a)};
    for (int i = 0; i < 100; ++i) {
      Word u = oracles::random_word(rng, ab, 5, 2);
      Word v = oracles::random_word(rng, ab, 5, 2);
      CHECK(substitute(multiply(u, v), images) ==
            multiply(substitute(u, images), substitute(v, images)));
    }
  }
  SUBCASE("missing image") {
    CHECK_THROWS_AS(substitute(a, {a}), AlphabetError);
  }
}

TEST_CASE("lcs relators") {
  auto w2 = lcs_relators(ab, 2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == commutator(gen("a"), gen("b")));
  CHECK(w2[1] == commutator(gen("b"), gen("a")));

  auto w3 = lcs_relators(ab, 3);
  REQUIRE(w3.size() == 4);
  CHECK(w3[0] == commutator(commutator(gen("a"), gen("b")), gen("a")));
  CHECK(w3[1] == commutator(commutator(gen("a"), gen("b")), gen("b")));
  CHECK(w3[2] == commutator(commutator(gen("b"), gen("a")), gen("a")));
  CHECK(w3[3] == commutator(commutator(gen("b"), gen("a")), gen("b")));

  CHECK(lcs_relators(Alphabet({"a"}), 2).empty());
  CHECK_THROWS_AS(lcs_relators(ab, 1), Error);
}

TEST_CASE("word printing") {
  CHECK(to_string(Word(ab)) == "1");
  CHECK(to_string(multiply(gen("a", 2), gen("b", -1))) == "a^2*b^-1");
}
