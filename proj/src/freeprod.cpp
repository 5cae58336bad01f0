#include "parafree/freeprod.hpp"

#include <numeric>

#include "parafree/errors.hpp"

namespace parafree {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t int_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::int64_t{1} << 56) / base)
      throw Error("factor order overflows");
    r *= base;
  }
  return r;
}

}  // namespace

std::int64_t FreeProductContext::order_a() const { return int_pow(p, l); }
std::int64_t FreeProductContext::order_b() const { return int_pow(p, k); }

FreeProductContext FreeProductContext::make(std::int64_t p, int l, int k) {
  if (!is_prime(p)) throw Error("p must be prime");
  if (l < 1 || k < 1) throw Error("factor exponents must be >= 1");
  FreeProductContext ctx{p, l, k, Alphabet({"a", "b"})};
  (void)ctx.order_a();
  (void)ctx.order_b();
  return ctx;
}

Presentation FreeProductContext::presentation() const {
  return Presentation::make(
      alphabet, {Word::generator(alphabet, 0, order_a()),
                 Word::generator(alphabet, 1, order_b())});
}

SyllableNF nf_reduce(const FreeProductContext& ctx, const Word& w) {
  if (w.alphabet() != ctx.alphabet)
    throw AlphabetError("word is not over the free product's alphabet {a, b}");
  const std::int64_t orders[2] = {ctx.order_a(), ctx.order_b()};
  SyllableNF nf;
  for (const Syllable& s : w.syllables()) {
    Factor f = s.gen == 0 ? Factor::first : Factor::second;
    std::int64_t m = orders[s.gen];
    std::int64_t e = s.exp % m;
    if (e < 0) e += m;
    if (e == 0) continue;
    if (!nf.syllables.empty() && nf.syllables.back().factor == f) {
      // The stack alternates factors, so after one merge the new top is
      // from the other factor and no cascade is possible here.
      std::int64_t merged = (nf.syllables.back().exp + e) % m;
      nf.syllables.pop_back();
      if (merged != 0) nf.syllables.push_back({f, merged});
    } else {
      nf.syllables.push_back({f, e});
    }
  }
  return nf;
}

bool nf_equal(const FreeProductContext& ctx, const Word& u, const Word& v) {
  return nf_reduce(ctx, u) == nf_reduce(ctx, v);
}

SyllableNF cyclic_reduce(const FreeProductContext& ctx, const SyllableNF& nf) {
  SyllableNF out = nf;
  auto& syl = out.syllables;
  while (syl.size() >= 2 && syl.front().factor == syl.back().factor) {
    std::int64_t m =
        syl.front().factor == Factor::first ? ctx.order_a() : ctx.order_b();
    std::int64_t merged = (syl.back().exp + syl.front().exp) % m;
    Factor f = syl.front().factor;
    syl.erase(syl.begin());
    syl.pop_back();
    if (merged != 0) syl.push_back({f, merged});
  }
  return out;
}

ElementOrder element_order(const FreeProductContext& ctx, const Word& w) {
  SyllableNF nf = cyclic_reduce(ctx, nf_reduce(ctx, w));
  if (nf.syllables.size() >= 2) return ElementOrder::inf();
  if (nf.syllables.empty()) return ElementOrder::finite(1);
  const NFSyllable& s = nf.syllables[0];
  std::int64_t m = s.factor == Factor::first ? ctx.order_a() : ctx.order_b();
  return ElementOrder::finite(m / std::gcd(m, s.exp));
}

InfOrderVerdict check_inf_order_claim(const FreeProductContext& ctx,
                                      const Word& gamma) {
  SyllableNF nf = nf_reduce(ctx, gamma);
  bool power_of_b = nf.is_identity() ||
                    (nf.syllables.size() == 1 &&
                     nf.syllables[0].factor == Factor::second);
  if (power_of_b) return InfOrderVerdict::precondition_violated;

  Word b = Word::generator(ctx.alphabet, 1);
  Word g = nf_to_word(ctx, nf);
  Word candidate = multiply(g, commutator(b, g));
  ElementOrder order = element_order(ctx, candidate);
  if (!order.infinite)
    throw ClaimViolationError(
        "gamma*[b,gamma] has finite order " + std::to_string(order.value) +
        " for gamma = " + to_string(g) + " (p=" + std::to_string(ctx.p) +
        ", l=" + std::to_string(ctx.l) + ", k=" + std::to_string(ctx.k) + ")");
  return InfOrderVerdict::infinite_confirmed;
}

Word nf_to_word(const FreeProductContext& ctx, const SyllableNF& nf) {
  std::vector<Syllable> syl;
  syl.reserve(nf.syllables.size());
  for (const NFSyllable& s : nf.syllables)
    syl.push_back({s.factor == Factor::first ? 0 : 1, s.exp});
  return Word::reduce(ctx.alphabet, syl);
}

std::string to_string(const FreeProductContext& ctx, const SyllableNF& nf) {
  return to_string(nf_to_word(ctx, nf));
}

std::vector<SyllableNF> enumerate_normal_forms(const FreeProductContext& ctx,
                                               int max_syllables) {
  std::vector<SyllableNF> all{SyllableNF{}};
  std::vector<SyllableNF> level{SyllableNF{}};
  for (int len = 1; len <= max_syllables; ++len) {
    std::vector<SyllableNF> next;
    for (const SyllableNF& nf : level)
      for (Factor f : {Factor::first, Factor::second}) {
        if (!nf.syllables.empty() && nf.syllables.back().factor == f) continue;
        std::int64_t m = f == Factor::first ? ctx.order_a() : ctx.order_b();
        for (std::int64_t e = 1; e < m; ++e) {
          SyllableNF ext = nf;
          ext.syllables.push_back({f, e});
          next.push_back(ext);
        }
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

}  // namespace parafree
