#include "parafree/verify.hpp"

#include <algorithm>

#include "parafree/errors.hpp"

namespace parafree {

namespace {

std::int64_t int_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::int64_t ParaFamily::pl() const { return int_pow(p, l); }
std::int64_t ParaFamily::pk() const { return int_pow(p, k); }

ParaFamily ParaFamily::make(std::int64_t p, int l, int k) {
  if (!is_prime(p)) throw Error("p must be prime");
  if (l < 1 || k < 1) throw Error("l and k must be >= 1");
  Alphabet ab({"a", "b"});
  Word a = Word::generator(ab, 0);
  Word b = Word::generator(ab, 1);
  std::int64_t pl = int_pow(p, l);
  std::int64_t pk = int_pow(p, k);

  Word a_pl = power(a, pl);
  Word b_pk = power(b, pk);
  Word b_pl = power(b, pl);
  Word g1_base = multiply(a, commutator(b, a));          // a[b,a]
  Word g2_base = multiply(a, commutator(a_pl, b));       // a[a^(p^l), b]

  ParaFamily fam{p,
                 l,
                 k,
                 ab,
                 Presentation::make(ab, {a_pl, b_pk}),
                 Presentation::make(ab, {power(g1_base, pl), b_pk}),
                 Presentation::make(ab, {power(g2_base, pl), b_pk}),
                 Presentation::make(ab, {g2_base, b_pl}),
                 {g1_base, b},
                 {g2_base, b}};
  return fam;
}

bool LcsReport::all_match() const {
  return !per_class.empty() &&
         std::all_of(per_class.begin(), per_class.end(),
                     [](const ClassResult& c) { return c.verdict == Verdict::match; });
}

bool LcsReport::any_mismatch() const {
  return std::any_of(per_class.begin(), per_class.end(),
                     [](const ClassResult& c) { return c.verdict == Verdict::mismatch; });
}

bool LcsReport::any_inconclusive() const {
  return std::any_of(
      per_class.begin(), per_class.end(),
      [](const ClassResult& c) { return c.verdict == Verdict::inconclusive; });
}

namespace {

// The surjectivity half of the isomorphism certificate: the images must
// (a) kill gamma's relators in G/gamma_i and (b) generate. For the
// nilpotent quotient it is enough that the exponent-sum vectors of the
// images span Z^2 modulo p (generators of the Frattini quotient lift).
bool epimorphism_certificate(const Presentation& gamma,
                             const std::vector<Word>& images,
                             const CosetTable& g_quotient_table,
                             std::int64_t p) {
  for (const Word& r : gamma.relators)
    if (!word_is_identity_in_quotient(g_quotient_table, substitute(r, images)))
      return false;

  const int n = gamma.alphabet.size();
  if (static_cast<int>(images.size()) != n) return false;
  if (n != 2) throw Error("epimorphism certificate implemented for rank 2");
  auto m = [&](int i, int j) {
    std::int64_t e = images[i].exponent_sum(j) % p;
    return e < 0 ? e + p : e;
  };
  std::int64_t det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) % p;
  return det != 0;
}

}  // namespace

LcsReport lcs_compare(const Presentation& gamma, const Presentation& g,
                      const std::vector<Word>& images, std::int64_t p,
                      int max_class, int max_cosets) {
  if (max_class < 2) throw Error("max_class must be >= 2");
  LcsReport report;
  for (int c = 2; c <= max_class; ++c) {
    ClassResult res;
    res.class_index = c;
    std::vector<Word> gamma_lcs = lcs_relators(gamma.alphabet, c);
    std::vector<Word> g_lcs = lcs_relators(g.alphabet, c);
    try {
      res.order_gamma = quotient_order(gamma, gamma_lcs, max_cosets);
      CosetTable g_table = quotient_table(g, g_lcs, max_cosets);
      res.order_g = g_table.size();
      res.epi_ok = epimorphism_certificate(gamma, images, g_table, p);
      res.verdict = (res.order_g == res.order_gamma && res.epi_ok)
                        ? Verdict::match
                        : Verdict::mismatch;
    } catch (const ResourceLimitError&) {
      res.verdict = Verdict::inconclusive;
    }
    report.per_class.push_back(res);
  }
  // Quotient towers are compatible: a certificate at class i+1 restricts to
  // class i, so the flags must be monotone.
  for (std::size_t i = 0; i + 1 < report.per_class.size(); ++i)
    if (report.per_class[i + 1].epi_ok && !report.per_class[i].epi_ok &&
        report.per_class[i].verdict != Verdict::inconclusive)
      throw Error("internal error: epimorphism certificates not monotone");
  return report;
}

LcsReport verify_weakly_para(const ParaFamily& fam, Family which,
                             int max_class, int max_cosets) {
  const Presentation& g = which == Family::g1 ? fam.g1 : fam.g2;
  const std::vector<Word>& images = which == Family::g1 ? fam.phi1 : fam.phi2;
  return lcs_compare(fam.gamma, g, images, fam.p, max_class, max_cosets);
}

KernelFacts kernel_facts(const Presentation& pres,
                         const std::vector<std::int64_t>& gen_images,
                         std::int64_t modulus,
                         const std::vector<int>& gen_order, int max_cosets) {
  KernelSubgroup sub = exponent_kernel_generators(pres, gen_images, modulus);
  CosetTable table = todd_coxeter(pres, sub.generators, max_cosets);
  if (table.size() != sub.image_order)
    throw Error("internal error: kernel index does not match image order");
  SchreierData data = simplify(rs_presentation(pres, table, gen_order));

  KernelFacts facts{data, relation_matrix(data.presentation),
                    abelian_invariants(data.presentation), std::nullopt, false};
  if (facts.matrix.rows() == facts.matrix.cols()) {
    BigInt d = determinant(facts.matrix);
    facts.det = d < 0 ? BigInt(-d) : d;
  }
  facts.kernel_nontrivial = !facts.invariants.is_trivial_group();
  return facts;
}

IntMatrix matrix_A(std::int64_t p, int max_cosets) {
  if (!is_prime(p)) throw Error("p must be prime");
  ParaFamily fam = ParaFamily::make(p, 1, 1);
  // b-first transversal, reproducing the Schreier basis {1, b, .., b^(p-1)}.
  return kernel_facts(fam.h, {0, 1}, p, {1, 0}, max_cosets).matrix;
}

NonResidualNilpotenceReport verify_not_residually_nilpotent(
    const ParaFamily& fam, int max_class, int max_cosets) {
  NonResidualNilpotenceReport out{
      verify_weakly_para(fam, Family::g2, max_class, max_cosets),
      kernel_facts(fam.h, {0, 1}, fam.pl(), {1, 0}, max_cosets),
      Verdict::inconclusive,
      {}};

  if (out.weakly_para.any_mismatch() || !out.kernel.kernel_nontrivial)
    out.verdict = Verdict::mismatch;
  else if (out.weakly_para.all_match() && out.kernel.kernel_nontrivial)
    out.verdict = Verdict::match;

  std::string pl = std::to_string(fam.pl());
  out.reasoning = {
      "machine fact: G2 and Gamma have equal lower central quotients with "
      "epimorphism certificates through class " + std::to_string(max_class),
      "machine fact: ker(H -> C_" + pl + ") has nontrivial abelianization, "
      "so a != 1 in H",
      "supplied reasoning: a != 1 in H forces a^" + pl + " != 1 in G2",
      "supplied reasoning: a^" + pl + " = 1 in Gamma, so ker(G2 -> Gamma) "
      "is nontrivial",
      "supplied reasoning: a weakly para group mapping onto Gamma with "
      "nontrivial kernel is not residually nilpotent"};
  return out;
}

TypeLabel type_label(const LcsReport& report, std::optional<Family> family) {
  if (!family || !report.all_match()) return TypeLabel::unknown;
  return *family == Family::g2 ? TypeLabel::type_two : TypeLabel::type_three;
}

std::string to_string(TypeLabel label) {
  switch (label) {
    case TypeLabel::type_one: return "Type I";
    case TypeLabel::type_two: return "Type II";
    case TypeLabel::type_three: return "Type III";
    default: return "unknown";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    default: return "inconclusive";
  }
}

}  // namespace parafree
