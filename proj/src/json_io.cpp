#include "factolab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace factolab::json_io {

namespace {

std::string type_of(const Json& j) { return j.type_name(); }

const Json& require_field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError(std::string("expected an object with field \"") + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

Json index_set_to_json(const std::set<std::size_t>& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i);
  return out;
}

Json optional_index_set(const std::optional<std::set<std::size_t>>& s) {
  return s ? index_set_to_json(*s) : Json(nullptr);
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

Json rational_to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw ParseError("expected a rational string or integer, got " + type_of(j));
}

Json integer_vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json int64_vector_to_json(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json rational_vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + type_of(j));
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json presentation_to_json(const Presentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(rational_vector_to_json(g));
  return Json{{"dim", p.dim}, {"generators", std::move(gens)}, {"label", p.label}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  const Json& dim = require_field(j, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) throw ParseError("\"dim\" must be a positive integer");
  p.dim = dim.get<std::size_t>();
  const Json& gens = require_field(j, "generators");
  if (!gens.is_array()) throw ParseError("\"generators\" must be an array");
  for (const auto& g : gens) p.generators.push_back(rational_vector_from_json(g));
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw ParseError("\"label\" must be a string");
    p.label = it->get<std::string>();
  }
  return p;
}

Json relation_to_json(const FactorizationRelation& rel, const Presentation& p) {
  return Json{{"left", int64_vector_to_json(rel.left.multiplicities)},
              {"right", int64_vector_to_json(rel.right.multiplicities)},
              {"left_length", rel.left.length()},
              {"right_length", rel.right.length()},
              {"element", rational_vector_to_json(evaluate(p, rel.left))}};
}

Json kernel_witness_to_json(const IntVector& z, const Presentation& p) {
  Json out{{"vector", integer_vector_to_json(z)}};
  out["relation"] = relation_to_json(relation_from_kernel_vector(z), p);
  return out;
}

Json report_to_json(const ClassificationReport& report, const Presentation& p) {
  Json basis = Json::array();
  for (const auto& b : report.kernel.vectors) basis.push_back(integer_vector_to_json(b));
  Json labels = Json::array();
  for (auto l : report.labels) labels.push_back(to_string(l));

  auto witness = [&](const std::optional<IntVector>& z) { return z ? kernel_witness_to_json(*z, p) : Json(nullptr); };
  auto per_atom = [&](const std::vector<std::optional<IntVector>>& zs) {
    Json out = Json::array();
    for (const auto& z : zs) out.push_back(witness(z));
    return out;
  };

  return Json{
      {"num_atoms", report.num_atoms},
      {"kernel_rank", report.kernel_rank},
      {"kernel_basis", std::move(basis)},
      {"is_UFM", report.is_UFM},
      {"is_LFM", report.is_LFM},
      {"is_proper_LFM", report.is_proper_LFM()},
      {"is_HFM", report.is_HFM},
      {"is_FFM", report.is_FFM},
      {"is_BFM", report.is_BFM},
      {"finite_factorization_note", kFiniteFactorizationNote},
      {"is_PLSM", report.is_PLSM},
      {"labels", std::move(labels)},
      {"prime", index_set_to_json(report.prime)},
      {"purely_long", index_set_to_json(report.purely_long)},
      {"purely_short", index_set_to_json(report.purely_short)},
      {"master", report.master ? relation_to_json(*report.master, p) : Json(nullptr)},
      {"witnesses",
       Json{{"not_ufm", witness(report.witnesses.not_ufm)},
            {"not_lfm", witness(report.witnesses.not_lfm)},
            {"not_hfm", witness(report.witnesses.not_hfm)},
            {"not_purely_long", per_atom(report.witnesses.not_purely_long)},
            {"not_purely_short", per_atom(report.witnesses.not_purely_short)}}}};
}

Json expected_to_json(const ExpectedVerdicts& e) {
  return Json{{"is_UFM", optional_bool(e.is_UFM)},
              {"is_LFM", optional_bool(e.is_LFM)},
              {"is_HFM", optional_bool(e.is_HFM)},
              {"is_PLSM", optional_bool(e.is_PLSM)},
              {"kernel_rank", e.kernel_rank ? Json(*e.kernel_rank) : Json(nullptr)},
              {"prime", optional_index_set(e.prime)},
              {"purely_long", optional_index_set(e.purely_long)},
              {"purely_short", optional_index_set(e.purely_short)}};
}

Json fixture_to_json(const Fixture& f) {
  Json out = presentation_to_json(f.presentation);
  out["name"] = f.name;
  out["expected"] = expected_to_json(f.expected);
  return out;
}

Json polynomial_to_json(const SemiringPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({rational_to_json(e), rational_to_json(c)}));
  const auto& monoid = f.monoid();
  return Json{{"coeff_domain", f.domain() == CoeffDomain::Naturals ? "N" : "Q"},
              {"monoid", monoid.is_naturals() ? Json("N0") : presentation_to_json(*monoid.presentation())},
              {"terms", std::move(terms)}};
}

SemiringPolynomial polynomial_from_json(const Json& j) {
  const Json& domain_json = require_field(j, "coeff_domain");
  CoeffDomain domain;
  if (domain_json == "N") {
    domain = CoeffDomain::Naturals;
  } else if (domain_json == "Q") {
    domain = CoeffDomain::Rationals;
  } else {
    throw ParseError("\"coeff_domain\" must be \"N\" or \"Q\"");
  }

  const Json& monoid_json = require_field(j, "monoid");
  ExponentMonoid monoid;
  if (monoid_json == "N0") {
    monoid = ExponentMonoid::naturals();
  } else if (monoid_json.is_object()) {
    monoid = ExponentMonoid::puiseux(presentation_from_json(monoid_json));
  } else {
    throw ParseError("\"monoid\" must be \"N0\" or a presentation object");
  }

  const Json& terms_json = require_field(j, "terms");
  if (!terms_json.is_array()) throw ParseError("\"terms\" must be an array");
  SemiringPolynomial::Terms terms;
  for (const auto& t : terms_json) {
    if (!t.is_array() || t.size() != 2) throw ParseError("each term must be a pair [exponent, coefficient]");
    Rational e = rational_from_json(t[0]);
    if (terms.count(e)) throw ParseError("repeated exponent " + to_string(e));
    terms.emplace(std::move(e), rational_from_json(t[1]));
  }
  return SemiringPolynomial(domain, std::move(monoid), std::move(terms));
}

Json formal_factorization_to_json(const FormalFactorization& z) {
  Json factors = Json::array();
  for (const auto& f : z.factors) {
    factors.push_back(Json{{"factor", to_string(f.factor)}, {"multiplicity", f.multiplicity}});
  }
  return Json{{"factors", std::move(factors)}, {"length", z.length()}};
}

Json algebra_witness_to_json(const AlgebraWitness& w) {
  return Json{{"a", w.a},
              {"b", w.b},
              {"p", w.p},
              {"Q", w.Q},
              {"r", w.r},
              {"S", w.S},
              {"c", w.c},
              {"a1", to_string(w.a1)},
              {"a2", to_string(w.a2)},
              {"f", polynomial_to_json(w.f)},
              {"f_text", to_string(w.f)},
              {"z1", formal_factorization_to_json(w.z1)},
              {"z2", formal_factorization_to_json(w.z2)}};
}

Json error_to_json(const Error& e) {
  Json out{{"error", e.kind()}, {"message", e.what()}};
  if (auto* pe = dynamic_cast<const ParseError*>(&e); pe && pe->position()) out["position"] = *pe->position();
  if (auto* ig = dynamic_cast<const InvalidGenerator*>(&e)) out["index"] = ig->index();
  if (auto* np = dynamic_cast<const NotPointed*>(&e)) out["witness"] = int64_vector_to_json(np->witness());
  if (auto* na = dynamic_cast<const NotAnAtom*>(&e)) {
    out["index"] = na->index();
    out["witness"] = int64_vector_to_json(na->witness());
  }
  if (auto* dg = dynamic_cast<const DuplicateGenerator*>(&e)) {
    out["index"] = dg->index();
    out["first"] = dg->first();
  }
  return out;
}

}  // namespace factolab::json_io
