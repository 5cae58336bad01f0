#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "parafree/errors.hpp"
#include "parafree/freeprod.hpp"
#include "parafree/gog.hpp"
#include "parafree/intmat.hpp"
#include "parafree/parse.hpp"
#include "parafree/report.hpp"
#include "parafree/rewriting.hpp"
#include "parafree/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace parafree;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

int default_max_cosets() {
  if (const char* env = std::getenv("PARAFREE_MAX_COSETS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return kDefaultMaxCosets;
}

void warn_if_even(std::int64_t p) {
  if (p == 2)
    std::cerr << "warning: p = 2 is computed but outside the scope of the "
                 "statements this tool certifies (they require an odd prime)\n";
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

IntMatrix parse_csv_matrix(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  std::string row_buf;
  std::stringstream ss(text);
  while (std::getline(ss, row_buf, ';')) {
    std::stringstream rs(row_buf);
    std::string cell;
    std::vector<BigInt> row;
    while (std::getline(rs, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(" \t\r\n"));
      cell.erase(cell.find_last_not_of(" \t\r\n") + 1);
      if (!cell.empty()) row.push_back(BigInt(cell));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("empty matrix");
  std::vector<BigInt> flat;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw Error("ragged matrix rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return IntMatrix(static_cast<int>(rows.size()),
                   static_cast<int>(rows[0].size()), std::move(flat));
}

std::vector<std::pair<std::string, std::int64_t>> parse_map_option(
    const std::string& text) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error("--map entries must look like gen:int");
    out.emplace_back(item.substr(0, colon),
                     std::stoll(item.substr(colon + 1)));
  }
  return out;
}

json presentation_json(const Presentation& p) {
  json gens = json::array();
  for (int i = 0; i < p.alphabet.size(); ++i) gens.push_back(p.alphabet.name(i));
  json rels = json::array();
  for (const Word& r : p.relators) rels.push_back(to_string(r));
  return {{"generators", gens}, {"relators", rels}};
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

struct Options {
  std::int64_t p = 3;
  int l = 1;
  int k = 1;
  int n = 2;
  int max_class = 0;
  int max_cosets = default_max_cosets();
  int max_k = 4;
  int max_exp = 3;
  std::uint64_t seed = 2024;
  bool json_output = false;
  bool csv = false;
  std::string word_text;
  std::string pres_text;
  std::string family = "G1";
  std::string map_text;
  std::int64_t modulus = 3;
  std::vector<std::string> subgroup_words;
  std::string matrix_text;
  std::string matrix_file;
};

int run_nf(const Options& opt) {
  warn_if_even(opt.p);
  FreeProductContext ctx = FreeProductContext::make(opt.p, opt.l, opt.k);
  Word w = parse_word(ctx.alphabet, opt.word_text);
  std::cout << to_string(ctx, nf_reduce(ctx, w)) << "\n";
  return kExitOk;
}

int run_order(const Options& opt) {
  warn_if_even(opt.p);
  FreeProductContext ctx = FreeProductContext::make(opt.p, opt.l, opt.k);
  Word w = parse_word(ctx.alphabet, opt.word_text);
  ElementOrder ord = element_order(ctx, w);
  if (ord.infinite)
    std::cout << "inf\n";
  else
    std::cout << ord.value << "\n";
  return kExitOk;
}

int run_tc(const Options& opt) {
  Presentation pres = parse_presentation(opt.pres_text);
  std::vector<Word> subgens;
  for (const std::string& s : opt.subgroup_words)
    subgens.push_back(parse_word(pres.alphabet, s));
  CosetTable t = todd_coxeter(pres, subgens, opt.max_cosets);
  std::cout << t.size() << "\n";
  if (opt.csv) {
    std::cout << "coset";
    for (int g = 0; g < pres.alphabet.size(); ++g)
      std::cout << "," << pres.alphabet.name(g) << ","
                << pres.alphabet.name(g) << "^-1";
    std::cout << "\n";
    for (int c = 0; c < t.size(); ++c) {
      std::cout << c + 1;
      for (int g = 0; g < pres.alphabet.size(); ++g)
        std::cout << "," << t.step(c, g) + 1 << "," << t.step(c, g, true) + 1;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_rs(const Options& opt) {
  Presentation pres = parse_presentation(opt.pres_text);
  std::vector<std::int64_t> images(pres.alphabet.size(), 0);
  for (const auto& [name, value] : parse_map_option(opt.map_text))
    images[pres.alphabet.index_of(name)] = value;
  KernelFacts facts = kernel_facts(pres, images, opt.modulus, {}, opt.max_cosets);

  json out = {{"kernel_presentation", presentation_json(facts.simplified.presentation)},
              {"relation_matrix", matrix_json(facts.matrix)}};
  json gens = json::array();
  for (const SchreierGenerator& g : facts.simplified.generators)
    gens.push_back({{"name", g.name}, {"word", to_string(g.schreier_word)}});
  out["schreier_generators"] = gens;
  json transversal = json::array();
  for (const Word& t : facts.simplified.transversal)
    transversal.push_back(to_string(t));
  out["transversal"] = transversal;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_abelianize(const Options& opt) {
  Presentation pres = parse_presentation(opt.pres_text);
  SmithForm s = abelian_invariants(pres);
  json factors = json::array();
  for (const BigInt& d : s.invariant_factors) factors.push_back(json_int(d));
  std::cout << factors.dump() << "\n";
  return kExitOk;
}

int run_det(const Options& opt) {
  std::string text = opt.matrix_text;
  if (!opt.matrix_file.empty()) {
    std::ifstream in(opt.matrix_file);
    if (!in) throw Error("cannot read " + opt.matrix_file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    // Newlines separate rows in files.
    for (char& c : text)
      if (c == '\n') c = ';';
  }
  if (text.empty()) throw Error("pass --matrix or --file");
  std::cout << determinant(parse_csv_matrix(text)).str() << "\n";
  return kExitOk;
}

int run_lcs_compare(const Options& opt) {
  warn_if_even(opt.p);
  ParaFamily fam = ParaFamily::make(opt.p, opt.l, opt.k);
  Family which = opt.family == "G2" ? Family::g2 : Family::g1;
  int max_class = opt.max_class > 0 ? opt.max_class : (opt.p == 3 ? 5 : 3);
  LcsReport report = verify_weakly_para(fam, which, max_class, opt.max_cosets);
  if (opt.json_output) {
    std::cout << lcs_report_json(report).dump(2) << "\n";
  } else {
    std::cout << "comparing " << (which == Family::g1 ? to_string(fam.g1)
                                                      : to_string(fam.g2))
              << " against " << to_string(fam.gamma) << "\n";
    for (const ClassResult& c : report.per_class)
      std::cout << "class " << c.class_index << ": |G/gamma_i| = " << c.order_g
                << ", |Gamma/gamma_i| = " << c.order_gamma
                << ", epimorphism " << (c.epi_ok ? "ok" : "missing") << " -> "
                << to_string(c.verdict) << "\n";
  }
  if (report.any_mismatch()) return kExitCheckFailed;
  if (report.any_inconclusive()) return kExitInconclusive;
  return kExitOk;
}

int run_gog_search(const Options& opt) {
  std::vector<GroupTree> trees =
      enumerate_admissible(opt.p, opt.n, opt.max_k, opt.max_exp);
  if (opt.json_output) {
    json arr = json::array();
    for (const GroupTree& t : trees) {
      ConstraintReport r = check_constraints(t, opt.n);
      json edges = json::array();
      for (const auto& e : t.edges)
        edges.push_back({{"u", e.u}, {"v", e.v}, {"exp", e.exp}});
      arr.push_back({{"vertex_exponents", t.vertex_exp},
                     {"edges", edges},
                     {"product", json_int(r.product_lhs)},
                     {"euler", rational_str(r.euler_lhs)},
                     {"euler_rhs", rational_str(r.euler_rhs)}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << trees.size() << " admissible tree(s) for p=" << opt.p
              << ", n=" << opt.n << "\n";
    for (const GroupTree& t : trees) {
      ConstraintReport r = check_constraints(t, opt.n);
      std::cout << to_string(t) << "\n  product " << r.product_lhs.str()
                << " = " << r.product_rhs.str() << ", euler "
                << rational_str(r.euler_lhs) << " = "
                << rational_str(r.euler_rhs) << "\n";
    }
  }
  return kExitOk;
}

int run_matrix_a(const Options& opt) {
  IntMatrix m = matrix_A(opt.p, opt.max_cosets);
  BigInt d = determinant(m);
  if (d < 0) d = -d;
  std::string identity = d.str() + " = " + std::to_string(opt.p) + "^" +
                         std::to_string(opt.p) + " - " +
                         std::to_string(opt.p - 1) + "^" +
                         std::to_string(opt.p);
  if (opt.json_output) {
    json out = {{"p", opt.p},
                {"matrix", matrix_json(m)},
                {"abs_det", json_int(d)},
                {"identity", identity}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(m) << "|det| = " << identity << "\n";
  }
  return kExitOk;
}

int run_verify_paper(const Options& opt) {
  SuiteConfig config;
  config.p = opt.p;
  config.l = opt.l;
  config.k = opt.k;
  config.max_class = opt.max_class;
  config.max_cosets = opt.max_cosets;
  config.seed = opt.seed;
  std::vector<CheckResult> results = run_paper_suite(config);
  if (opt.json_output)
    std::cout << suite_to_json(results).dump(2) << "\n";
  else
    std::cout << suite_to_text(results);
  return suite_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parafree: exact computations around free products of cyclic "
               "p-groups, their lower central series quotients, and trees of "
               "groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_plk = [&](CLI::App* cmd) {
    cmd->add_option("--p", opt.p, "prime p")->required();
    cmd->add_option("--l", opt.l, "exponent of the first factor order p^l");
    cmd->add_option("--k", opt.k, "exponent of the second factor order p^k");
  };
  auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--max-cosets", opt.max_cosets,
                    "coset table row limit (env PARAFREE_MAX_COSETS)");
  };

  CLI::App* nf = app.add_subcommand("nf", "normal form in C_{p^l} * C_{p^k}");
  add_plk(nf);
  nf->add_option("word", opt.word_text, "word in a, b")->required();

  CLI::App* order = app.add_subcommand("order", "element order (or inf)");
  add_plk(order);
  order->add_option("word", opt.word_text, "word in a, b")->required();

  CLI::App* tc = app.add_subcommand("tc", "coset enumeration");
  tc->add_option("--pres", opt.pres_text, "presentation <a,b | ...>")->required();
  tc->add_option("--subgroup", opt.subgroup_words,
                 "subgroup generator words (repeatable)");
  tc->add_flag("--csv", opt.csv, "print the closed table as CSV");
  add_limit(tc);

  CLI::App* rs = app.add_subcommand(
      "rs", "Reidemeister-Schreier presentation of an exponent-map kernel");
  rs->add_option("--pres", opt.pres_text, "presentation")->required();
  rs->add_option("--map", opt.map_text, "generator images, e.g. a:0,b:1")
      ->required();
  rs->add_option("--modulus", opt.modulus, "modulus of the target C_m")
      ->required();
  add_limit(rs);

  CLI::App* ab = app.add_subcommand("abelianize", "abelian invariants");
  ab->add_option("--pres", opt.pres_text, "presentation")->required();

  CLI::App* det = app.add_subcommand("det", "exact determinant of a CSV matrix");
  det->add_option("--matrix", opt.matrix_text, "rows 1,2;3,4");
  det->add_option("--file", opt.matrix_file, "CSV file, one row per line");

  CLI::App* lcs = app.add_subcommand(
      "lcs-compare", "lower central quotients of G1/G2 against Gamma");
  add_plk(lcs);
  lcs->add_option("--family", opt.family, "G1 or G2")
      ->check(CLI::IsMember({"G1", "G2"}));
  lcs->add_option("--max-class", opt.max_class, "highest class (default by p)");
  lcs->add_flag("--json", opt.json_output, "JSON output");
  add_limit(lcs);

  CLI::App* gog = app.add_subcommand(
      "gog-search", "exhaustive admissible tree-of-groups search");
  gog->add_option("--p", opt.p, "odd prime")->required();
  gog->add_option("--n", opt.n, "target rank n")->required();
  gog->add_option("--max-k", opt.max_k, "max vertices");
  gog->add_option("--max-exp", opt.max_exp, "max vertex exponent");
  gog->add_flag("--json", opt.json_output, "JSON output");

  CLI::App* ma = app.add_subcommand(
      "matrix-a", "kernel relation matrix of <a,b | a[a^p,b], b^p> -> C_p");
  ma->add_option("--p", opt.p, "prime p")->required();
  ma->add_flag("--json", opt.json_output, "JSON output");
  add_limit(ma);

  CLI::App* vp = app.add_subcommand("verify-paper",
                                    "run the full certification suite");
  vp->add_option("--p", opt.p, "odd prime");
  vp->add_option("--l", opt.l, "first factor exponent");
  vp->add_option("--k", opt.k, "second factor exponent");
  vp->add_option("--max-class", opt.max_class, "highest class (default by p)");
  vp->add_option("--seed", opt.seed, "seed for the randomized suites");
  vp->add_flag("--json", opt.json_output, "JSON output");
  add_limit(vp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*nf) return run_nf(opt);
    if (*order) return run_order(opt);
    if (*tc) return run_tc(opt);
    if (*rs) return run_rs(opt);
    if (*ab) return run_abelianize(opt);
    if (*det) return run_det(opt);
    if (*lcs) return run_lcs_compare(opt);
    if (*gog) return run_gog_search(opt);
    if (*ma) return run_matrix_a(opt);
    if (*vp) return run_verify_paper(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const ClaimViolationError& e) {
    std::cerr << "CHECK FAILED: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
