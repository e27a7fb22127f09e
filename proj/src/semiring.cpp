#include "factolab/semiring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "factolab/errors.hpp"

namespace factolab {

namespace {

constexpr std::int64_t kMaxMembershipTable = 100'000'000;

void require_compatible(const SemiringPolynomial& f, const SemiringPolynomial& g, const char* op) {
  if (f.domain() != g.domain() || !(f.monoid() == g.monoid())) {
    throw DomainError(std::string(op) + ": polynomials live in different semirings");
  }
}

bool is_natural_coefficient(const Rational& c) { return c.get_den() == 1 && sgn(c) > 0; }

std::int64_t checked_int64(const Integer& n, const char* what) {
  if (!n.fits_slong_p()) throw DomainError(std::string(what) + " does not fit in 64 bits");
  return n.get_si();
}

std::string exponent_string(const Rational& e) {
  if (e.get_den() == 1) return e.get_str();
  return "(" + e.get_str() + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// NumericalMonoid

NumericalMonoid::NumericalMonoid(std::vector<std::int64_t> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("numerical monoid needs at least one generator");
  std::int64_t g = 0;
  for (auto x : generators_) {
    if (x <= 0) throw DomainError("numerical monoid generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw DomainError("numerical monoid generators must be coprime");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

  const std::int64_t lo = generators_.front(), hi = generators_.back();
  if (hi > kMaxMembershipTable / lo) throw DomainError("numerical monoid too large to tabulate");
  const std::int64_t bound = lo * hi;
  table_.assign(static_cast<std::size_t>(bound) + 1, false);
  table_[0] = true;
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (auto x : generators_) {
      if (x > n) break;
      if (table_[static_cast<std::size_t>(n - x)]) {
        table_[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
}

bool NumericalMonoid::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (static_cast<std::size_t>(n) >= table_.size()) return true;
  return table_[static_cast<std::size_t>(n)];
}

std::int64_t NumericalMonoid::frobenius_number() const {
  for (std::size_t n = table_.size(); n-- > 0;) {
    if (!table_[n]) return static_cast<std::int64_t>(n);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// ExponentMonoid

ExponentMonoid ExponentMonoid::naturals() { return ExponentMonoid{}; }

ExponentMonoid ExponentMonoid::puiseux(Presentation p) {
  if (p.dim != 1) throw DomainError("Puiseux monoid presentation must have dimension 1");
  if (p.generators.empty()) throw DomainError("Puiseux monoid needs at least one generator");
  Integer scale = 1;
  for (const auto& g : p.generators) {
    if (g.size() != 1 || sgn(g[0]) <= 0) throw DomainError("Puiseux monoid generators must be positive rationals");
    scale = lcm(scale, g[0].get_den());
  }
  Integer common = 0;
  std::vector<Integer> scaled;
  for (const auto& g : p.generators) {
    Rational q = g[0] * Rational(scale);
    scaled.push_back(q.get_num());
    common = gcd(common, scaled.back());
  }
  std::vector<std::int64_t> reduced;
  for (const auto& s : scaled) reduced.push_back(checked_int64(s / common, "scaled generator"));

  ExponentMonoid m;
  m.presentation_ = std::move(p);
  m.scale_ = scale;
  m.gcd_ = common;
  m.reduced_ = std::make_shared<const NumericalMonoid>(std::move(reduced));
  return m;
}

bool ExponentMonoid::contains(const Rational& q) const {
  if (sgn(q) < 0) return false;
  if (is_naturals()) return q.get_den() == 1;
  Rational scaled = q * Rational(scale_);
  if (scaled.get_den() != 1) return false;
  const Integer& n = scaled.get_num();
  if (n % gcd_ != 0) return false;
  Integer reduced = n / gcd_;
  if (!reduced.fits_slong_p()) return true;  // far past the Frobenius number
  return reduced_->contains(reduced.get_si());
}

// ---------------------------------------------------------------------------
// SemiringPolynomial

SemiringPolynomial::SemiringPolynomial(CoeffDomain domain, ExponentMonoid monoid, Terms terms)
    : domain_(domain), monoid_(std::move(monoid)) {
  for (auto& [e, c] : terms) {
    if (sgn(c) == 0) continue;
    if (!monoid_.contains(e)) throw DomainError("exponent " + e.get_str() + " is not in the exponent monoid");
    if (domain_ == CoeffDomain::Naturals && !is_natural_coefficient(c)) {
      throw DomainError("coefficient " + c.get_str() + " is not a natural number");
    }
    terms_.emplace(e, c);
  }
}

SemiringPolynomial SemiringPolynomial::monomial(CoeffDomain domain, ExponentMonoid monoid, const Rational& exponent,
                                                const Rational& coeff) {
  return SemiringPolynomial(domain, std::move(monoid), Terms{{exponent, coeff}});
}

SemiringPolynomial SemiringPolynomial::natural(const std::vector<long>& dense) {
  Terms terms;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) terms.emplace(Rational(static_cast<long>(i)), Rational(dense[i]));
  }
  return SemiringPolynomial(CoeffDomain::Naturals, ExponentMonoid::naturals(), std::move(terms));
}

bool SemiringPolynomial::is_one() const {
  return terms_.size() == 1 && sgn(terms_.begin()->first) == 0 && terms_.begin()->second == 1;
}

const Rational& SemiringPolynomial::degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Rational SemiringPolynomial::evaluate_at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string to_string(const SemiringPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    const bool constant = sgn(e) == 0;
    if (constant || mag != 1) out += mag.get_str();
    if (!constant) {
      out += "x";
      if (e != 1) out += "^" + exponent_string(e);
    }
  }
  return out;
}

SemiringPolynomial poly_add(const SemiringPolynomial& f, const SemiringPolynomial& g) {
  require_compatible(f, g, "poly_add");
  auto terms = f.terms();
  for (const auto& [e, c] : g.terms()) terms[e] += c;
  return SemiringPolynomial(f.domain(), f.monoid(), std::move(terms));
}

SemiringPolynomial poly_mul(const SemiringPolynomial& f, const SemiringPolynomial& g) {
  require_compatible(f, g, "poly_mul");
  SemiringPolynomial::Terms terms;
  for (const auto& [e1, c1] : f.terms()) {
    for (const auto& [e2, c2] : g.terms()) terms[e1 + e2] += c1 * c2;
  }
  return SemiringPolynomial(f.domain(), f.monoid(), std::move(terms));
}

SemiringPolynomial poly_pow(const SemiringPolynomial& f, std::uint64_t n) {
  SemiringPolynomial result = SemiringPolynomial::monomial(f.domain(), f.monoid(), 0);
  SemiringPolynomial base = f;
  while (n > 0) {
    if (n & 1U) result = poly_mul(result, base);
    n >>= 1U;
    if (n > 0) base = poly_mul(base, base);
  }
  return result;
}

std::optional<SemiringPolynomial> poly_divide_exact(const SemiringPolynomial& f, const SemiringPolynomial& g) {
  require_compatible(f, g, "poly_divide_exact");
  if (g.is_zero()) throw DomainError("poly_divide_exact: division by zero");

  // Leading-term division over Q. Each quotient term is final once emitted
  // (later terms have strictly smaller exponents), so a term outside the
  // semiring rejects immediately.
  SemiringPolynomial::Terms rem = f.terms();
  SemiringPolynomial::Terms quotient;
  const auto& [g_exp, g_coeff] = *g.terms().rbegin();
  while (!rem.empty()) {
    const auto [r_exp, r_coeff] = *rem.rbegin();
    if (r_exp < g_exp) return std::nullopt;
    Rational e = r_exp - g_exp;
    Rational c = r_coeff / g_coeff;
    if (!f.monoid().contains(e)) return std::nullopt;
    if (f.domain() == CoeffDomain::Naturals && !is_natural_coefficient(c)) return std::nullopt;
    quotient.emplace(e, c);
    for (const auto& [ge, gc] : g.terms()) {
      Rational& slot = rem[e + ge];
      slot -= c * gc;
      if (sgn(slot) == 0) rem.erase(e + ge);
    }
  }
  return SemiringPolynomial(f.domain(), f.monoid(), std::move(quotient));
}

SemiringPolynomial monic(const SemiringPolynomial& f) {
  if (f.domain() != CoeffDomain::Rationals) throw DomainError("monic: only defined over Q");
  if (f.is_zero()) return f;
  Rational lead = f.terms().rbegin()->second;
  SemiringPolynomial::Terms terms;
  for (const auto& [e, c] : f.terms()) terms.emplace(e, c / lead);
  return SemiringPolynomial(f.domain(), f.monoid(), std::move(terms));
}

// ---------------------------------------------------------------------------
// Irreducibility in N0[x;M]

AtomTestResult natural_atom_test(const SemiringPolynomial& f) {
  if (f.domain() != CoeffDomain::Naturals) throw DomainError("natural_atom_test: polynomial must be over N0");
  if (f.is_zero() || f.is_one()) throw DomainError("natural_atom_test: 0 and 1 are not atoms or non-atoms");

  const ExponentMonoid& monoid = f.monoid();
  std::vector<Rational> exps;  // candidate exponents, ascending
  {
    const Integer& den = monoid.denominator();
    Rational top = f.degree() * Rational(den);
    Integer limit = top.get_num() / top.get_den();
    for (Integer n = 0; n <= limit; ++n) {
      Rational e(n, den);
      e.canonicalize();
      if (monoid.contains(e)) exps.push_back(e);
    }
  }

  std::int64_t max_coeff = 0;
  for (const auto& [e, c] : f.terms()) max_coeff = std::max(max_coeff, checked_int64(c.get_num(), "coefficient"));
  const std::int64_t total = checked_int64(f.evaluate_at_one().get_num(), "f(1)");
  const auto& f_low = *f.terms().begin();
  const auto& f_high = *f.terms().rbegin();
  const std::int64_t f_low_coeff = f_low.second.get_num().get_si();
  const std::int64_t f_high_coeff = f_high.second.get_num().get_si();

  std::vector<std::int64_t> coeffs;
  std::optional<std::pair<SemiringPolynomial, SemiringPolynomial>> found;

  // Candidate g with top exponent exps[top]; coefficient vectors in lex
  // order with the lowest exponent most significant.
  auto try_candidate = [&](std::size_t top) {
    std::int64_t sum = std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0});
    if (total % sum != 0) return;
    std::size_t low = 0;
    while (coeffs[low] == 0) ++low;
    // No cancellation: lowest and highest terms multiply exactly.
    if (exps[low] > f_low.first || f_low_coeff % coeffs[low] != 0) return;
    if (f_high_coeff % coeffs[top] != 0) return;
    if (top == 0 && sgn(exps[0]) == 0 && coeffs[0] == 1) return;  // g = 1
    SemiringPolynomial::Terms terms;
    for (std::size_t i = 0; i <= top; ++i) {
      if (coeffs[i]) terms.emplace(exps[i], Rational(static_cast<long>(coeffs[i])));
    }
    SemiringPolynomial g(CoeffDomain::Naturals, monoid, std::move(terms));
    auto h = poly_divide_exact(f, g);
    if (h && !h->is_one()) found.emplace(std::move(g), std::move(*h));
  };
  std::function<void(std::size_t, std::size_t, std::int64_t)> fill = [&](std::size_t i, std::size_t top,
                                                                         std::int64_t partial) {
    if (found) return;
    if (i == top) {
      for (std::int64_t c = 1; c <= max_coeff && partial + c <= total && !found; ++c) {
        coeffs.push_back(c);
        try_candidate(top);
        coeffs.pop_back();
      }
      return;
    }
    for (std::int64_t c = 0; c <= max_coeff && partial + c <= total && !found; ++c) {
      coeffs.push_back(c);
      fill(i + 1, top, partial + c);
      coeffs.pop_back();
    }
  };
  for (std::size_t top = 0; top < exps.size() && !found; ++top) fill(0, top, 0);

  AtomTestResult result;
  result.is_atom = !found;
  result.factors = std::move(found);
  return result;
}

bool is_additive_atom(const SemiringPolynomial& f) {
  if (f.domain() != CoeffDomain::Naturals) return false;  // (Q[x;M], +) is a group
  return f.terms().size() == 1 && f.terms().begin()->second == 1;
}

std::vector<SemiringPolynomial> additive_atoms_up_to(const ExponentMonoid& m, const Rational& max_exponent) {
  std::vector<SemiringPolynomial> atoms;
  if (sgn(max_exponent) < 0) return atoms;
  Rational top = max_exponent * Rational(m.denominator());
  Integer limit = top.get_num() / top.get_den();
  for (Integer n = 0; n <= limit; ++n) {
    Rational e(n, m.denominator());
    e.canonicalize();
    if (m.contains(e)) atoms.push_back(SemiringPolynomial::monomial(CoeffDomain::Naturals, m, e));
  }
  return atoms;
}

// ---------------------------------------------------------------------------
// Monoid algebra witnesses

MonomialRelation case1_relation(const Presentation& puiseux, std::size_t i, std::size_t j) {
  ExponentMonoid::puiseux(puiseux);  // validates shape
  if (puiseux.size() < 2) throw DomainError("case1_relation needs at least two atoms");
  if (i >= puiseux.size() || j >= puiseux.size()) throw DomainError("case1_relation: atom index out of range");
  if (i == j) throw DomainError("case1_relation: atoms must be distinct");
  const Rational& ai = puiseux.generators[i][0];
  const Rational& aj = puiseux.generators[j][0];
  if (ai == aj) throw DomainError("case1_relation: atoms must be distinct");

  auto [ni, di] = rational_num_den(ai);
  auto [nj, dj] = rational_num_den(aj);
  MonomialRelation out{
      FactorizationRelation{FactorizationVector{std::vector<std::int64_t>(puiseux.size(), 0)},
                            FactorizationVector{std::vector<std::int64_t>(puiseux.size(), 0)}},
      Rational(ni * nj)};
  out.relation.left.multiplicities[i] = checked_int64(nj * di, "multiplicity");
  out.relation.right.multiplicities[j] = checked_int64(ni * dj, "multiplicity");
  return out;
}

std::set<std::size_t> purity_candidates(std::size_t num_atoms, const std::vector<FactorizationRelation>& relations) {
  std::set<std::size_t> candidates;
  for (std::size_t i = 0; i < num_atoms; ++i) candidates.insert(i);
  for (const auto& rel : relations) {
    std::set<std::size_t> involved;
    for (std::size_t i = 0; i < num_atoms; ++i) {
      if (rel.left.multiplicities.at(i) > 0 || rel.right.multiplicities.at(i) > 0) involved.insert(i);
    }
    if (rel.balanced()) {
      for (auto i : involved) candidates.erase(i);
    } else {
      std::set<std::size_t> kept;
      std::set_intersection(candidates.begin(), candidates.end(), involved.begin(), involved.end(),
                            std::inserter(kept, kept.begin()));
      candidates = std::move(kept);
    }
  }
  return candidates;
}

std::int64_t FormalFactorization::length() const {
  std::int64_t n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

SemiringPolynomial FormalFactorization::product() const {
  if (factors.empty()) throw DomainError("product of an empty formal factorization");
  const auto& first = factors.front().factor;
  SemiringPolynomial out = SemiringPolynomial::monomial(first.domain(), first.monoid(), 0);
  for (const auto& f : factors) out = poly_mul(out, poly_pow(f.factor, static_cast<std::uint64_t>(f.multiplicity)));
  return out;
}

AlgebraWitness algebra_witness(std::int64_t a, std::int64_t b) {
  if (a < 2) throw InvalidPair("algebra_witness requires a >= 2");
  if (a >= b) throw InvalidPair("algebra_witness requires a < b");
  if (std::gcd(a, b) != 1) {
    throw InvalidPair("algebra_witness requires gcd(a, b) = 1, got gcd(" + std::to_string(a) + ", " +
                      std::to_string(b) + ") = " + std::to_string(std::gcd(a, b)));
  }
  AlgebraWitness w;
  w.a = a;
  w.b = b;
  w.p = 1;
  while ((w.p * a - 1) % b != 0) ++w.p;
  w.Q = (w.p * a - 1) / b;
  w.r = 1;
  while ((w.r * b - 1) % a != 0) ++w.r;
  w.S = (w.r * b - 1) / a;

  const NumericalMonoid numerical({a, b});
  const struct {
    std::int64_t value;
    const char* name;
  } must_be_outside[] = {
      {w.Q * b - a, "Qb - a"}, {w.p * a - b, "pa - b"}, {w.S * a - b, "Sa - b"}, {w.r * b - a, "rb - a"}};
  for (const auto& cond : must_be_outside) {
    if (numerical.contains(cond.value)) {
      throw InternalContradiction(std::string(cond.name) + " = " + std::to_string(cond.value) + " lies in <" +
                                  std::to_string(a) + "," + std::to_string(b) + ">");
    }
  }

  const std::int64_t diff = w.S * a - w.Q * b;
  if (diff == 0) throw InternalContradiction("Sa = Qb: the binomials coincide and no witness is defined");
  w.c = diff > 0 ? diff : -diff;

  const ExponentMonoid monoid = ExponentMonoid::puiseux(numerical_presentation({a, b}));
  auto binomial = [&](std::int64_t high, std::int64_t low) {
    return SemiringPolynomial(CoeffDomain::Rationals, monoid,
                              {{Rational(static_cast<long>(high)), Rational(1)},
                               {Rational(static_cast<long>(low)), Rational(-1)}});
  };
  w.a1 = binomial(w.r * b, w.S * a);
  w.a2 = binomial(w.p * a, w.Q * b);
  auto x_to = [&](std::int64_t e) {
    return SemiringPolynomial::monomial(CoeffDomain::Rationals, monoid, Rational(static_cast<long>(e)));
  };

  // The binomial with the larger low exponent is x^c times the other one.
  const SemiringPolynomial& with_a = diff > 0 ? w.a1 : w.a2;
  const SemiringPolynomial& with_b = diff > 0 ? w.a2 : w.a1;
  w.z1.factors = {{x_to(a), w.c}, {with_a, b - a}};
  w.z2.factors = {{x_to(b), w.c}, {with_b, b - a}};
  w.f = w.z1.product();
  if (!(w.z2.product() == w.f)) throw InternalContradiction("the two factorizations have different products");
  return w;
}

bool binomial_irreducibility_check(const AlgebraWitness& w) {
  const ExponentMonoid& monoid = w.a1.monoid();
  for (const SemiringPolynomial* bin : {&w.a1, &w.a2}) {
    if (bin->domain() != CoeffDomain::Rationals || bin->terms().size() != 2) return false;
    const auto& [low, c_low] = *bin->terms().begin();
    const auto& [high, c_high] = *bin->terms().rbegin();
    if (c_low != -c_high || high - low != 1) return false;
    for (std::int64_t atom : {w.a, w.b}) {
      auto mono = SemiringPolynomial::monomial(CoeffDomain::Rationals, monoid, Rational(static_cast<long>(atom)));
      if (poly_divide_exact(*bin, mono)) return false;
    }
  }
  return true;
}

}  // namespace factolab
