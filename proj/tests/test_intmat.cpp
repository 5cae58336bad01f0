#include "doctest.h"
#include "oracles.hpp"
#include "parafree/intmat.hpp"
#include "parafree/parse.hpp"

using namespace parafree;

namespace {

IntMatrix mat(int r, int c, std::vector<long long> vals) {
  std::vector<BigInt> big(vals.begin(), vals.end());
  return IntMatrix(r, c, std::move(big));
}

const IntMatrix published_p3 = mat(3, 3, {-3, 2, 0, 0, -3, 2, -2, 0, 3});

IntMatrix random_matrix(oracles::TestRng& rng, int r, int c, int span) {
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rng.range(-span, span);
  return m;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  SmithForm id3 = smith_normal_form(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(id3.invariant_factors == std::vector<BigInt>{1, 1, 1});
  CHECK(id3.rank == 3);

  SmithForm d23 = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
  CHECK(d23.invariant_factors == std::vector<BigInt>{1, 6});

  SmithForm published = smith_normal_form(published_p3);
  CHECK(published.invariant_factors == std::vector<BigInt>{1, 1, 19});
}

TEST_CASE("smith form divisibility chain and minor-gcd oracle (randomized)") {
  oracles::TestRng rng(131);
  for (int trial = 0; trial < 120; ++trial) {
    int r = 1 + (int)rng.below(4), c = 1 + (int)rng.below(4);
    IntMatrix m = random_matrix(rng, r, c, 6);
    SmithForm s = smith_normal_form(m);
    REQUIRE((int)s.invariant_factors.size() == std::min(r, c));
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
      const BigInt& d = s.invariant_factors[i];
      const BigInt& e = s.invariant_factors[i + 1];
      CHECK(d >= 0);
      if (d == 0)
        CHECK(e == 0);  // zeros only at the tail
      else
        CHECK(e % d == 0);
    }
    CHECK(s.invariant_factors == oracles::invariant_factors_minor_gcd(m));
  }
}

TEST_CASE("smith form is invariant under permutations and sign flips") {
  oracles::TestRng rng(242);
  IntMatrix m = random_matrix(rng, 3, 4, 5);
  SmithForm base = smith_normal_form(m);
  SUBCASE("row swap") {
    IntMatrix w = m;
    for (int j = 0; j < 4; ++j) std::swap(w.at(0, j), w.at(2, j));
    CHECK(smith_normal_form(w).invariant_factors == base.invariant_factors);
  }
  SUBCASE("column swap and sign flip") {
    IntMatrix w = m;
    for (int i = 0; i < 3; ++i) {
      std::swap(w.at(i, 1), w.at(i, 3));
      w.at(i, 0) = -w.at(i, 0);
    }
    CHECK(smith_normal_form(w).invariant_factors == base.invariant_factors);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(published_p3) == 19);
  CHECK(determinant(mat(2, 2, {1, 0, 0, 1})) == 1);
  CHECK_THROWS_AS(determinant(mat(2, 3, {1, 2, 3, 4, 5, 6})), Error);
  CHECK(determinant(mat(2, 2, {2, 4, 1, 2})) == 0);
  // Zero leading pivot forces a row swap.
  CHECK(determinant(mat(2, 2, {0, 1, 1, 0})) == -1);
}

TEST_CASE("determinant matches cofactor expansion (randomized)") {
  oracles::TestRng rng(353);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + (int)rng.below(5);
    IntMatrix m = random_matrix(rng, n, n, 7);
    BigInt d = determinant(m);
    CHECK(d == oracles::det_cofactor(m));
    BigInt abs_d = d < 0 ? BigInt(-d) : d;
    if (d != 0)
      CHECK(smith_normal_form(m).torsion_order() == abs_d);
  }
}

TEST_CASE("abelian invariants of presentations") {
  SmithForm s1 = abelian_invariants(parse_presentation("<a,b | (a*[b,a])^3, b^3>"));
  CHECK(s1.invariant_factors == std::vector<BigInt>{3, 3});

  SmithForm s2 = abelian_invariants(parse_presentation("<a,b | >"));
  CHECK(s2.invariant_factors == std::vector<BigInt>{0, 0});

  SmithForm s3 = abelian_invariants(parse_presentation("<a | a^3, a^5>"));
  CHECK(s3.invariant_factors == std::vector<BigInt>{1});
}
