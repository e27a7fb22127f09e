#pragma once

// Monoid semirings N0[x;M] and Q[x;M] over finitely generated Puiseux
// monoids M, together with the witness constructions for monoid algebras
// and the N0[x] irreducibility search.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "factolab/classify.hpp"
#include "factolab/linalg.hpp"
#include "factolab/monoid.hpp"

namespace factolab {

/// Cofinite submonoid of N0. Membership is tabulated up to
/// min(gens) * max(gens), past the Frobenius number.
class NumericalMonoid {
 public:
  explicit NumericalMonoid(std::vector<std::int64_t> generators);

  bool contains(std::int64_t n) const;
  std::int64_t frobenius_number() const;  // -1 when the monoid is N0
  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }

 private:
  std::vector<std::int64_t> generators_;
  std::vector<bool> table_;
};

/// Exponent monoid of a monoid semiring: either the symbol N0 or a
/// finitely generated Puiseux monoid given by a rank-1 presentation.
class ExponentMonoid {
 public:
  static ExponentMonoid naturals();
  /// Throws DomainError unless p has dimension 1 and positive generators.
  static ExponentMonoid puiseux(Presentation p);

  bool is_naturals() const noexcept { return !presentation_; }
  const std::optional<Presentation>& presentation() const noexcept { return presentation_; }
  bool contains(const Rational& q) const;
  /// Every element of the monoid lies in (1/D) Z.
  const Integer& denominator() const noexcept { return scale_; }

  friend bool operator==(const ExponentMonoid& x, const ExponentMonoid& y) {
    return x.presentation_ == y.presentation_;
  }

 private:
  std::optional<Presentation> presentation_;
  Integer scale_ = 1;
  Integer gcd_ = 1;
  std::shared_ptr<const NumericalMonoid> reduced_;
};

enum class CoeffDomain { Naturals, Rationals };

/// Sparse polynomial expression: exponent -> nonzero coefficient, exponents
/// ascending. Over Naturals every coefficient is a positive integer.
class SemiringPolynomial {
 public:
  using Terms = std::map<Rational, Rational>;

  /// The zero polynomial of N0[x].
  SemiringPolynomial() = default;

  /// Drops zero coefficients; throws DomainError on an exponent outside the
  /// monoid or a non-natural coefficient over Naturals.
  SemiringPolynomial(CoeffDomain domain, ExponentMonoid monoid, Terms terms);

  static SemiringPolynomial monomial(CoeffDomain domain, ExponentMonoid monoid, const Rational& exponent,
                                     const Rational& coeff = 1);
  /// Convenience for N0[x] from dense coefficients, lowest degree first.
  static SemiringPolynomial natural(const std::vector<long>& dense);

  CoeffDomain domain() const noexcept { return domain_; }
  const ExponentMonoid& monoid() const noexcept { return monoid_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  /// Highest exponent; throws on the zero polynomial.
  const Rational& degree() const;
  Rational evaluate_at_one() const;

  friend bool operator==(const SemiringPolynomial&, const SemiringPolynomial&) = default;

 private:
  CoeffDomain domain_ = CoeffDomain::Naturals;
  ExponentMonoid monoid_;
  Terms terms_;
};

std::string to_string(const SemiringPolynomial& f);

SemiringPolynomial poly_add(const SemiringPolynomial& f, const SemiringPolynomial& g);
SemiringPolynomial poly_mul(const SemiringPolynomial& f, const SemiringPolynomial& g);
SemiringPolynomial poly_pow(const SemiringPolynomial& f, std::uint64_t n);

/// h with g * h = f in the semiring (exponents of h in M, and natural
/// coefficients over Naturals), or nullopt.
std::optional<SemiringPolynomial> poly_divide_exact(const SemiringPolynomial& f, const SemiringPolynomial& g);

/// Scales a Q-polynomial so its highest-exponent coefficient is 1.
SemiringPolynomial monic(const SemiringPolynomial& f);

struct AtomTestResult {
  bool is_atom = false;
  std::optional<std::pair<SemiringPolynomial, SemiringPolynomial>> factors;  // set when reducible
};

/// Exhaustive irreducibility test in the multiplicative monoid of N0[x;M].
/// With nonnegative coefficients there is no cancellation, so any factor
/// has exponents in M at most deg f, coefficients at most max coeff of f,
/// and g(1) dividing f(1). Throws DomainError for 0, 1 or a Q-polynomial.
AtomTestResult natural_atom_test(const SemiringPolynomial& f);

/// Additive atoms of N0[x;M] are exactly the monomials x^m with coefficient 1.
bool is_additive_atom(const SemiringPolynomial& f);
std::vector<SemiringPolynomial> additive_atoms_up_to(const ExponentMonoid& m, const Rational& max_exponent);

/// Monomial relation between atoms a_i != a_j of a Puiseux monoid:
/// (x^{a_i})^{n(a_j) d(a_i)} = (x^{a_j})^{n(a_i) d(a_j)} = x^{n(a_i) n(a_j)}.
struct MonomialRelation {
  FactorizationRelation relation;  // over the presentation's atoms
  Rational product_exponent;
};

MonomialRelation case1_relation(const Presentation& puiseux, std::size_t i, std::size_t j);

/// Atoms that can still be pure after the given relations: pure atoms appear
/// in every irredundant unbalanced relation and in no balanced one.
std::set<std::size_t> purity_candidates(std::size_t num_atoms, const std::vector<FactorizationRelation>& relations);

struct FactorPower {
  SemiringPolynomial factor;
  std::int64_t multiplicity = 0;
};

/// Formal product of irreducibles.
struct FormalFactorization {
  std::vector<FactorPower> factors;

  std::int64_t length() const;
  SemiringPolynomial product() const;  // requires at least one factor
};

/// Equal-length factorizations of one element of Q[x;<a,b>], built from the
/// binomials a1 = x^{rb} - x^{Sa} and a2 = x^{pa} - x^{Qb}, where p and r are
/// minimal with pa - Qb = 1 and rb - Sa = 1.
struct AlgebraWitness {
  std::int64_t a = 0, b = 0;
  std::int64_t p = 0, Q = 0, r = 0, S = 0;
  std::int64_t c = 0;  // |Sa - Qb|
  SemiringPolynomial a1;
  SemiringPolynomial a2;
  SemiringPolynomial f;
  FormalFactorization z1;
  FormalFactorization z2;
};

/// Throws InvalidPair unless 2 <= a < b and gcd(a, b) = 1; throws
/// InternalContradiction if a membership condition or the product equality
/// fails.
AlgebraWitness algebra_witness(std::int64_t a, std::int64_t b);

/// True iff a1 and a2 are both binomials x^low (x - 1) up to sign with no
/// monomial atom x^a or x^b dividing them in Q[x;<a,b>].
bool binomial_irreducibility_check(const AlgebraWitness& w);

}  // namespace factolab
