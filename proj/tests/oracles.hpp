// Test-only reference implementations, kept independent of the library
// algorithms they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "parafree/errors.hpp"
#include "parafree/freeprod.hpp"
#include "parafree/intmat.hpp"
#include "parafree/word.hpp"

namespace oracles {

using parafree::BigInt;
using parafree::FreeProductContext;
using parafree::IntMatrix;
using parafree::Syllable;
using parafree::Word;

// ---------------------------------------------------------------------------
// Free reduction by explicit letter-by-letter stack simulation.
inline Word letter_stack_reduce(const parafree::Alphabet& a,
                                const std::vector<Syllable>& raw) {
  std::vector<std::pair<int, int>> stack;  // (gen, +-1)
  for (const Syllable& s : raw) {
    int sign = s.exp < 0 ? -1 : 1;
    for (std::int64_t i = 0, n = s.exp * sign; i < n; ++i) {
      if (!stack.empty() && stack.back().first == s.gen &&
          stack.back().second == -sign)
        stack.pop_back();
      else
        stack.emplace_back(s.gen, sign);
    }
  }
  std::vector<Syllable> out;
  for (auto [gen, sign] : stack) out.push_back({gen, sign});
  return Word::reduce(a, out);
}

// ---------------------------------------------------------------------------
// Brute-force normal form in C_{p^l} * C_{p^k}: explore every order of
// applying the rewriting rules (merge adjacent same-generator runs, reduce
// an exponent into [0, order), drop empty runs) and insist all maximal
// rewrite paths reach one common terminal word. Returns that terminal.
using RunWord = std::vector<std::pair<int, std::int64_t>>;  // (gen, exp != 0)

inline RunWord nf_bruteforce(const FreeProductContext& ctx,
                             const std::vector<Syllable>& raw) {
  const std::int64_t orders[2] = {ctx.order_a(), ctx.order_b()};
  RunWord start;
  for (const Syllable& s : raw)
    if (s.exp != 0) start.emplace_back(s.gen, s.exp);

  std::set<RunWord> visited;
  std::set<RunWord> terminals;
  std::vector<RunWord> todo{start};
  visited.insert(start);
  while (!todo.empty()) {
    RunWord w = std::move(todo.back());
    todo.pop_back();
    std::vector<RunWord> next;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].first == w[i + 1].first) {
        RunWord m = w;
        m[i].second += m[i + 1].second;
        m.erase(m.begin() + i + 1);
        if (m[i].second == 0) m.erase(m.begin() + i);
        next.push_back(std::move(m));
      }
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::int64_t m = orders[w[i].first];
      if (w[i].second >= 0 && w[i].second < m) continue;
      RunWord r = w;
      r[i].second = ((r[i].second % m) + m) % m;
      if (r[i].second == 0) r.erase(r.begin() + i);
      next.push_back(std::move(r));
    }
    if (next.empty()) {
      terminals.insert(w);
      continue;
    }
    for (RunWord& n : next)
      if (visited.insert(n).second) todo.push_back(std::move(n));
  }
  if (terminals.size() != 1)
    throw parafree::Error("rewriting oracle: confluence failure");
  return *terminals.begin();
}

inline RunWord nf_as_runs(const parafree::SyllableNF& nf) {
  RunWord out;
  for (const auto& s : nf.syllables)
    out.emplace_back(s.factor == parafree::Factor::first ? 0 : 1, s.exp);
  return out;
}

// ---------------------------------------------------------------------------
// Determinant by Laplace cofactor expansion.
inline BigInt det_cofactor(const IntMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt sum = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int c = 0, mc = 0; c < n; ++c)
        if (c != j) minor.at(i - 1, mc++) = m.at(i, c);
    BigInt term = m.at(0, j) * det_cofactor(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Invariant factors via gcds of k x k minors: d_k = D_k / D_{k-1} where
// D_k is the gcd of all k x k minors (D_0 = 1).
inline std::vector<BigInt> invariant_factors_minor_gcd(const IntMatrix& m) {
  const int n = std::min(m.rows(), m.cols());
  auto gcd_of_minors = [&](int k) {
    BigInt g = 0;
    std::vector<int> rsel, csel;
    std::function<void(int, int)> pick_cols = [&](int start, int depth) {
      if (depth == k) {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
        g = boost::multiprecision::gcd(g, det_cofactor(sub));
        return;
      }
      for (int c = start; c < m.cols(); ++c) {
        csel.push_back(c);
        pick_cols(c + 1, depth + 1);
        csel.pop_back();
      }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
      if (depth == k) {
        pick_cols(0, 0);
        return;
      }
      for (int r = start; r < m.rows(); ++r) {
        rsel.push_back(r);
        pick_rows(r + 1, depth + 1);
        rsel.pop_back();
      }
    };
    pick_rows(0, 0);
    return g < 0 ? BigInt(-g) : g;
  };

  std::vector<BigInt> out(n, 0);
  BigInt prev = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt dk = gcd_of_minors(k);
    if (dk == 0) break;  // all further minors vanish as well
    out[k - 1] = dk / prev;
    prev = dk;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic random data. Raw engine draws, no distributions, so results
// are identical across standard library implementations.
struct TestRng {
  std::mt19937_64 engine;
  explicit TestRng(std::uint64_t seed) : engine(seed) {}
  std::int64_t below(std::int64_t n) {
    return static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(n));
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }
};

inline std::vector<Syllable> random_raw_word(TestRng& rng, int ngens,
                                             int max_syllables,
                                             std::int64_t max_abs_exp) {
  int len = static_cast<int>(rng.below(max_syllables + 1));
  std::vector<Syllable> raw;
  for (int i = 0; i < len; ++i) {
    std::int64_t e = rng.range(-max_abs_exp, max_abs_exp);
    raw.push_back({static_cast<int>(rng.below(ngens)), e});
  }
  return raw;
}

inline Word random_word(TestRng& rng, const parafree::Alphabet& a,
                        int max_syllables, std::int64_t max_abs_exp) {
  return Word::reduce(a, random_raw_word(rng, a.size(), max_syllables,
                                         max_abs_exp));
}

}  // namespace oracles
