#include "factolab/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "factolab/json_io.hpp"

namespace factolab::cli {

namespace {

using json_io::Json;

struct Options {
  std::string format = "json";
  bool auto_reduce = false;

  std::string path;
  std::string element;
  std::vector<std::int64_t> a, b;
  std::size_t m = 0, n = 0;
  std::optional<std::int64_t> k;
  std::int64_t pair_a = 0, pair_b = 0;
  std::size_t atom_i = 0, atom_j = 0;
};

std::size_t truncation(const Options& opt) {
  std::int64_t k = static_cast<std::int64_t>(kDefaultTruncation);
  if (opt.k) {
    k = *opt.k;
  } else if (const char* env = std::getenv("FACTOLAB_TRUNCATION_K"); env && *env) {
    std::int64_t parsed = 0;
    std::istringstream in(env);
    if (!(in >> parsed) || !in.eof()) throw ParseError(std::string("FACTOLAB_TRUNCATION_K is not an integer: ") + env);
    k = parsed;
  }
  if (k < 2) throw DomainError("truncation K must be at least 2, got " + std::to_string(k));
  return static_cast<std::size_t>(k);
}

// Validation order surfaces NotPointed and NotAnAtom with their witnesses
// before classification.
Presentation load_presentation(const Options& opt) {
  Presentation p = json_io::presentation_from_json(json_io::read_file(opt.path));
  validate_presentation(p);
  return normalize_atoms(p, opt.auto_reduce ? NormalizeMode::AutoReduce : NormalizeMode::Reject);
}

Element parse_element(const std::string& text) {
  std::string trimmed = text;
  auto first = trimmed.find_first_not_of(" \t");
  if (first != std::string::npos && trimmed[first] == '[') return json_io::rational_vector_from_json(json_io::parse_text(trimmed));
  Element x;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto lo = part.find_first_not_of(" \t");
    auto hi = part.find_last_not_of(" \t");
    if (lo == std::string::npos) throw ParseError("empty coordinate in element \"" + text + "\"");
    x.push_back(parse_rational(std::string_view(part).substr(lo, hi - lo + 1)));
  }
  if (x.empty()) throw ParseError("empty element");
  return x;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::set<std::size_t>& v) {
  std::string s = "{";
  bool first = true;
  for (auto x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "}";
}

std::string relation_text(const FactorizationRelation& rel) {
  return "(" + join(rel.left.multiplicities) + ") ~ (" + join(rel.right.multiplicities) + ")";
}

void report_text(std::ostream& out, const ClassificationReport& r) {
  out << "atoms: " << r.num_atoms << "\n"
      << "kernel rank: " << r.kernel_rank << "\n"
      << "UFM: " << r.is_UFM << "  LFM: " << r.is_LFM << "  HFM: " << r.is_HFM << "  PLSM: " << r.is_PLSM << "\n"
      << "prime: " << join(r.prime) << "  purely long: " << join(r.purely_long)
      << "  purely short: " << join(r.purely_short) << "\n"
      << "master: " << (r.master ? relation_text(*r.master) : std::string("none")) << "\n";
}

Json construction(const MasterSpec& spec) {
  Presentation p = build_master_monoid(spec);
  ClassificationReport report = classify(p);
  FactorizationRelation expected = expected_master_relation(spec);
  FactorizationRelation swapped{expected.right, expected.left};
  bool matches = report.master && (*report.master == expected || *report.master == swapped);
  return Json{{"spec", Json{{"a", json_io::int64_vector_to_json(spec.a)}, {"b", json_io::int64_vector_to_json(spec.b)}}},
              {"presentation", json_io::presentation_to_json(p)},
              {"report", json_io::report_to_json(report, p)},
              {"expected_master", json_io::relation_to_json(expected, p)},
              {"master_matches", matches}};
}

int emit_construction(const Options& opt, std::ostream& out, const MasterSpec& spec) {
  Json j = construction(spec);
  if (opt.format == "text") {
    Presentation p = build_master_monoid(spec);
    out << p.label << "\n";
    report_text(out, classify(p));
    out << "master matches spec: " << j["master_matches"].get<bool>() << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  Presentation p = load_presentation(opt);
  ClassificationReport report = classify(p);
  if (opt.format == "text") {
    out << (p.label.empty() ? std::string("presentation") : p.label) << "\n";
    report_text(out, report);
  } else {
    out << Json{{"presentation", json_io::presentation_to_json(p)}, {"report", json_io::report_to_json(report, p)}}
               .dump(2)
        << "\n";
  }
  return kExitOk;
}

int cmd_factorize(const Options& opt, std::ostream& out) {
  Presentation p = load_presentation(opt);
  Element x = parse_element(opt.element);
  if (x.size() != p.dim) {
    throw DomainError("element has " + std::to_string(x.size()) + " coordinates, presentation has dim " +
                      std::to_string(p.dim));
  }
  Grading h = validate_presentation(p);
  auto zs = enumerate_factorizations(p, x, h);
  std::set<std::int64_t> lengths;
  for (const auto& z : zs) lengths.insert(z.length());
  if (opt.format == "text") {
    out << "|Z(x)| = " << zs.size() << "\n";
    for (const auto& z : zs) out << "  (" << join(z.multiplicities) << ")  length " << z.length() << "\n";
    out << "L(x) = {";
    bool first = true;
    for (auto l : lengths) {
      out << (first ? "" : ",") << l;
      first = false;
    }
    out << "}\n";
  } else {
    Json zj = Json::array();
    for (const auto& z : zs) zj.push_back(json_io::int64_vector_to_json(z.multiplicities));
    Json lj = Json::array();
    for (auto l : lengths) lj.push_back(l);
    out << Json{{"element", json_io::rational_vector_to_json(x)},
                {"in_monoid", !zs.empty()},
                {"factorizations", std::move(zj)},
                {"lengths", std::move(lj)}}
               .dump(2)
        << "\n";
  }
  return kExitOk;
}

int cmd_gallery(const Options& opt, std::ostream& out) {
  const std::size_t k = truncation(opt);
  Json fixtures = Json::array();
  bool all_pass = true;
  for (const auto& f : fixture_gallery(k)) {
    ClassificationReport report = classify(f.presentation);
    auto mismatches = compare(f.expected, report);
    all_pass = all_pass && mismatches.empty();
    if (opt.format == "text") {
      out << (mismatches.empty() ? "PASS " : "FAIL ") << f.name << "  (" << f.presentation.label << ")\n";
      for (const auto& m : mismatches) out << "    " << m << "\n";
    } else {
      Json j = json_io::fixture_to_json(f);
      j["report"] = json_io::report_to_json(report, f.presentation);
      j["mismatches"] = mismatches;
      j["pass"] = mismatches.empty();
      fixtures.push_back(std::move(j));
    }
  }
  if (opt.format != "text") out << Json{{"truncation", k}, {"fixtures", std::move(fixtures)}, {"all_pass", all_pass}}.dump(2) << "\n";
  return all_pass ? kExitOk : kExitMismatch;
}

int cmd_semiring_atom(const Options& opt, std::ostream& out) {
  SemiringPolynomial f = json_io::polynomial_from_json(json_io::read_file(opt.path));
  AtomTestResult result = natural_atom_test(f);
  if (opt.format == "text") {
    out << to_string(f) << ": " << (result.is_atom ? "irreducible" : "reducible") << "\n";
    if (result.factors) out << "  = (" << to_string(result.factors->first) << ") * (" << to_string(result.factors->second) << ")\n";
  } else {
    Json factors = nullptr;
    if (result.factors) {
      factors = Json::array({json_io::polynomial_to_json(result.factors->first), json_io::polynomial_to_json(result.factors->second)});
    }
    out << Json{{"polynomial", json_io::polynomial_to_json(f)},
                {"text", to_string(f)},
                {"is_atom", result.is_atom},
                {"is_additive_atom", is_additive_atom(f)},
                {"factors", std::move(factors)}}
               .dump(2)
        << "\n";
  }
  return kExitOk;
}

int cmd_algebra_witness(const Options& opt, std::ostream& out) {
  AlgebraWitness w = algebra_witness(opt.pair_a, opt.pair_b);
  bool irreducible = binomial_irreducibility_check(w);
  bool equal = w.z1.product() == w.z2.product();
  if (opt.format == "text") {
    out << "a=" << w.a << " b=" << w.b << "  p=" << w.p << " Q=" << w.Q << " r=" << w.r << " S=" << w.S << " c=" << w.c
        << "\n"
        << "a1 = " << to_string(w.a1) << "\n"
        << "a2 = " << to_string(w.a2) << "\n"
        << "|z1| = " << w.z1.length() << "  |z2| = " << w.z2.length() << "  products equal: " << equal
        << "  binomials irreducible: " << irreducible << "\n";
  } else {
    Json j = json_io::algebra_witness_to_json(w);
    j["products_equal"] = equal;
    j["binomials_irreducible"] = irreducible;
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_case1(const Options& opt, std::ostream& out) {
  Presentation p = load_presentation(opt);
  MonomialRelation rel = case1_relation(p, opt.atom_i, opt.atom_j);
  auto candidates = purity_candidates(p.size(), {rel.relation});
  if (opt.format == "text") {
    out << relation_text(rel.relation) << "  exponent " << to_string(rel.product_exponent) << "  "
        << (rel.relation.balanced() ? "balanced" : "unbalanced") << "\n"
        << "purity candidates: " << join(candidates) << "\n";
  } else {
    Json cj = Json::array();
    for (auto c : candidates) cj.push_back(c);
    out << Json{{"relation", json_io::relation_to_json(rel.relation, p)},
                {"product_exponent", json_io::rational_to_json(rel.product_exponent)},
                {"balanced", rel.relation.balanced()},
                {"purity_candidates", std::move(cj)}}
               .dump(2)
        << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact factorization analysis of finitely generated monoids"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::function<int()> action;
  auto add = [&](const char* name, const char* help, std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* analyze = add("analyze", "Classify a presentation", [&] { return cmd_analyze(opt, out); });
  analyze->add_option("presentation", opt.path)->required();
  analyze->add_flag("--auto-reduce", opt.auto_reduce, "Drop non-atoms and duplicates instead of failing");

  auto* factorize = add("factorize", "Enumerate Z(x) and L(x)", [&] { return cmd_factorize(opt, out); });
  factorize->add_option("presentation", opt.path)->required();
  factorize->add_option("--element", opt.element, "JSON array or comma list of rationals")->required();
  factorize->add_flag("--auto-reduce", opt.auto_reduce);

  auto* master = add("construct-master", "Build the monoid of a master relation",
                     [&] { return emit_construction(opt, out, MasterSpec{opt.a, opt.b}); });
  master->add_option("--a", opt.a, "Long-side coefficients")->required()->delimiter(',');
  master->add_option("--b", opt.b, "Short-side coefficients")->required()->delimiter(',');

  auto* pls = add("pls-example", "PLSM with m purely long and n purely short atoms",
                  [&] { return emit_construction(opt, out, pls_spec(opt.m, opt.n)); });
  pls->add_option("m", opt.m)->required();
  pls->add_option("n", opt.n)->required();

  auto* gallery = add("gallery", "Classify every fixture and diff against expectations", [&] { return cmd_gallery(opt, out); });
  gallery->add_option("--k", opt.k, "Truncation parameter");

  auto* atom = add("semiring-atom", "Irreducibility of a polynomial in N0[x;M]", [&] { return cmd_semiring_atom(opt, out); });
  atom->add_option("polynomial", opt.path)->required();

  auto* witness = add("algebra-witness", "Equal-length factorizations in Q[x;<a,b>]",
                      [&] { return cmd_algebra_witness(opt, out); });
  witness->add_option("a", opt.pair_a)->required();
  witness->add_option("b", opt.pair_b)->required();

  auto* case1 = add("case1", "Monomial relation between two Puiseux atoms", [&] { return cmd_case1(opt, out); });
  case1->add_option("presentation", opt.path)->required();
  case1->add_option("i", opt.atom_i)->required();
  case1->add_option("j", opt.atom_j)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << json_io::error_to_json(e).dump(2) << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << Json{{"error", "InputError"}, {"message", e.what()}}.dump(2) << "\n";
    return kExitInputError;
  }
}

}  // namespace factolab::cli
