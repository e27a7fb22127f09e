#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "factolab/errors.hpp"
#include "factolab/semiring.hpp"
#include "oracles.hpp"

namespace factolab {
namespace {

using testing::Vec64;

using Dense = std::vector<long>;

SemiringPolynomial nat(const Dense& d) { return SemiringPolynomial::natural(d); }

Presentation rational_presentation(const std::vector<Rational>& gens) {
  Presentation p;
  p.dim = 1;
  for (const auto& g : gens) p.generators.push_back({g});
  return p;
}

ExponentMonoid puiseux(const std::vector<Rational>& gens) {
  return ExponentMonoid::puiseux(rational_presentation(gens));
}

// Dense integer polynomial arithmetic, lowest degree first.
Dense dense_mul(const Dense& f, const Dense& g) {
  Dense out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Numerical and Puiseux monoids

bool naive_member(const Vec64& gens, std::size_t i, std::int64_t n) {
  if (n == 0) return true;
  if (i == gens.size()) return false;
  for (std::int64_t c = 0; c * gens[i] <= n; ++c) {
    if (naive_member(gens, i + 1, n - c * gens[i])) return true;
  }
  return false;
}

TEST(NumericalMonoid, FrobeniusOfPairs) {
  for (std::int64_t a = 2; a <= 9; ++a) {
    for (std::int64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      EXPECT_EQ(NumericalMonoid({a, b}).frobenius_number(), a * b - a - b) << a << "," << b;
    }
  }
  EXPECT_EQ(NumericalMonoid({1}).frobenius_number(), -1);
  EXPECT_EQ(NumericalMonoid({3, 4, 5}).frobenius_number(), 2);
}

TEST(NumericalMonoid, MembershipMatchesNaiveSearch) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Vec64 gens;
    std::int64_t g = 0;
    while (gens.size() < 3 || g != 1) {
      if (gens.size() == 3) gens.clear(), g = 0;
      gens.push_back(testing::uniform(rng, 2, 15));
      g = std::gcd(g, gens.back());
    }
    NumericalMonoid m(gens);
    for (std::int64_t n = -3; n <= 300; ++n) {
      ASSERT_EQ(m.contains(n), n >= 0 && naive_member(gens, 0, n)) << n;
    }
  }
}

TEST(NumericalMonoid, RejectsBadGenerators) {
  EXPECT_THROW(NumericalMonoid({4, 6}), DomainError);
  EXPECT_THROW(NumericalMonoid({}), DomainError);
  EXPECT_THROW(NumericalMonoid({0, 1}), DomainError);
  EXPECT_THROW(NumericalMonoid({-2, 3}), DomainError);
}

TEST(ExponentMonoid, PuiseuxMembership) {
  // Doubling gives <3,4,5>, which misses only 1 and 2.
  ExponentMonoid m = puiseux({Rational(3, 2), Rational(2), Rational(5, 2)});
  EXPECT_EQ(m.denominator(), 2);
  for (int twice = 0; twice <= 30; ++twice) {
    EXPECT_EQ(m.contains(Rational(twice, 2)), twice != 1 && twice != 2) << twice;
  }
  EXPECT_FALSE(m.contains(Rational(5, 4)));
  EXPECT_FALSE(m.contains(Rational(-3, 2)));
  // Non-coprime scaled numerators: <4/3, 2> scales to <4,6> = 2<2,3>.
  ExponentMonoid n = puiseux({Rational(4, 3), Rational(2)});
  EXPECT_TRUE(n.contains(Rational(10, 3)));
  EXPECT_FALSE(n.contains(Rational(2, 3)));
  EXPECT_FALSE(n.contains(Rational(5, 3)));
  EXPECT_TRUE(ExponentMonoid::naturals().contains(7));
  EXPECT_FALSE(ExponentMonoid::naturals().contains(Rational(1, 2)));
  EXPECT_THROW(puiseux({Rational(0)}), DomainError);
  EXPECT_THROW(ExponentMonoid::puiseux(testing::integer_presentation(2, {{1, 0}})), DomainError);
}

// ---------------------------------------------------------------------------
// Arithmetic

TEST(Polynomial, ConstructionValidates) {
  ExponentMonoid m = puiseux({2, 3});
  EXPECT_THROW(SemiringPolynomial(CoeffDomain::Naturals, m, {{Rational(1), Rational(1)}}), DomainError);
  EXPECT_THROW(SemiringPolynomial(CoeffDomain::Naturals, ExponentMonoid::naturals(), {{Rational(0), Rational(-1)}}),
               DomainError);
  EXPECT_THROW(SemiringPolynomial(CoeffDomain::Naturals, ExponentMonoid::naturals(), {{Rational(0), Rational(1, 2)}}),
               DomainError);
  SemiringPolynomial f(CoeffDomain::Rationals, m, {{Rational(2), Rational(0)}, {Rational(3), Rational(-1, 2)}});
  EXPECT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(to_string(f), "-1/2x^3");
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(to_string(nat({6, 7, 2, 2, 1})), "x^4 + 2x^3 + 2x^2 + 7x + 6");
  EXPECT_EQ(to_string(SemiringPolynomial()), "0");
  ExponentMonoid m = puiseux({Rational(3, 2), 2});
  EXPECT_EQ(to_string(SemiringPolynomial::monomial(CoeffDomain::Naturals, m, Rational(3, 2))), "x^(3/2)");
}

TEST(Polynomial, FixtureProductIdentity) {
  SemiringPolynomial left = poly_mul(nat({1, 1}), nat({6, 1, 1, 1}));
  SemiringPolynomial right = poly_mul(nat({2, 1}), nat({3, 2, 0, 1}));
  EXPECT_EQ(left, nat({6, 7, 2, 2, 1}));
  EXPECT_EQ(right, left);
}

TEST(Polynomial, DivideExact) {
  auto q = poly_divide_exact(nat({6, 7, 2, 2, 1}), nat({2, 1}));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, nat({3, 2, 0, 1}));
  EXPECT_FALSE(poly_divide_exact(nat({1, 0, 1}), nat({1, 1})));
  EXPECT_FALSE(poly_divide_exact(nat({1}), nat({2})));
  EXPECT_THROW(poly_divide_exact(nat({1}), SemiringPolynomial()), DomainError);
  // Over Q the quotient x - 1 is fine.
  ExponentMonoid n0 = ExponentMonoid::naturals();
  SemiringPolynomial f(CoeffDomain::Rationals, n0, {{0, 1}, {2, 1}});
  SemiringPolynomial g(CoeffDomain::Rationals, n0, {{0, -1}, {2, 1}});
  SemiringPolynomial h(CoeffDomain::Rationals, n0, {{0, 1}, {1, 1}});
  auto r = poly_divide_exact(g, h);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, SemiringPolynomial(CoeffDomain::Rationals, n0, {{0, -1}, {1, 1}}));
  EXPECT_FALSE(poly_divide_exact(f, h));
  EXPECT_THROW(poly_mul(f, nat({1})), DomainError);
}

TEST(Polynomial, DivideRespectsExponentMonoid) {
  // In N0[x;<2,3>], x^5 = x^2 x^3 but x^5 / x^4 would need x^1.
  ExponentMonoid m = puiseux({2, 3});
  auto mono = [&](long e) { return SemiringPolynomial::monomial(CoeffDomain::Naturals, m, e); };
  EXPECT_EQ(poly_divide_exact(mono(5), mono(2)), mono(3));
  EXPECT_FALSE(poly_divide_exact(mono(5), mono(4)));
  EXPECT_EQ(poly_pow(mono(2), 3), mono(6));
}

TEST(Polynomial, RingMapSoundness) {
  std::mt19937_64 rng(11);
  auto random_dense = [&] {
    Dense d(testing::uniform(rng, 1, 5));
    for (auto& c : d) c = testing::uniform(rng, 0, 4);
    d.back() = testing::uniform(rng, 1, 4);
    return d;
  };
  for (int trial = 0; trial < 300; ++trial) {
    Dense f = random_dense(), g = random_dense();
    SemiringPolynomial fg = poly_mul(nat(f), nat(g));
    ASSERT_EQ(fg, nat(dense_mul(f, g)));
    ASSERT_EQ(poly_divide_exact(fg, nat(g)), nat(f));
    ASSERT_EQ(fg.evaluate_at_one(), nat(f).evaluate_at_one() * nat(g).evaluate_at_one());
  }
}

TEST(Polynomial, Monic) {
  ExponentMonoid n0 = ExponentMonoid::naturals();
  SemiringPolynomial f(CoeffDomain::Rationals, n0, {{0, 3}, {2, -6}});
  EXPECT_EQ(monic(f), SemiringPolynomial(CoeffDomain::Rationals, n0, {{0, Rational(-1, 2)}, {2, 1}}));
  EXPECT_THROW(monic(nat({1, 1})), DomainError);
}

// ---------------------------------------------------------------------------
// Irreducibility in N0[x]

TEST(NaturalAtom, Fixtures) {
  for (const Dense& d : {Dense{1, 1}, Dense{2, 1}, Dense{3, 2, 0, 1}, Dense{6, 1, 1, 1}, Dense{2}}) {
    EXPECT_TRUE(natural_atom_test(nat(d)).is_atom) << to_string(nat(d));
  }
  AtomTestResult r = natural_atom_test(nat({6, 7, 2, 2, 1}));
  EXPECT_FALSE(r.is_atom);
  ASSERT_TRUE(r.factors);
  EXPECT_EQ(r.factors->first, nat({1, 1}));
  EXPECT_EQ(r.factors->second, nat({6, 1, 1, 1}));
  EXPECT_THROW(natural_atom_test(nat({1})), DomainError);
  EXPECT_THROW(natural_atom_test(SemiringPolynomial()), DomainError);
}

TEST(NaturalAtom, MatchesExhaustiveFactorPairs) {
  // Every f of degree <= 4 with coefficients <= 3; a factor of such f has
  // coefficients <= 3 as well, so products of those pairs cover all composites.
  std::vector<Dense> small;
  for (std::size_t len = 1; len <= 5; ++len) {
    testing::for_each_box_vector(len, 0, 3, [&](const Vec64& v) {
      if (v.back() == 0) return;
      small.emplace_back(v.begin(), v.end());
    });
  }
  std::set<Dense> composite;
  for (const auto& g : small) {
    if (g == Dense{1}) continue;
    for (const auto& h : small) {
      if (h == Dense{1} || g.size() + h.size() > 6) continue;
      Dense p = dense_mul(g, h);
      if (*std::max_element(p.begin(), p.end()) <= 3) composite.insert(p);
    }
  }
  std::size_t atoms = 0;
  for (const auto& f : small) {
    if (f == Dense{1}) continue;
    AtomTestResult r = natural_atom_test(nat(f));
    ASSERT_EQ(r.is_atom, !composite.count(f)) << to_string(nat(f));
    if (r.is_atom) {
      ++atoms;
      continue;
    }
    ASSERT_TRUE(r.factors);
    EXPECT_FALSE(r.factors->first.is_one());
    EXPECT_FALSE(r.factors->second.is_one());
    EXPECT_EQ(poly_mul(r.factors->first, r.factors->second), nat(f));
  }
  EXPECT_EQ(atoms + composite.size() + 1, small.size());
}

TEST(NaturalAtom, PuiseuxExponents) {
  // x^4 + x^2 = x^2 (x^2 + 1) in N0[x;<2,3>]; x^5 + x^3 = x^3 (x^2 + 1).
  ExponentMonoid m = puiseux({2, 3});
  SemiringPolynomial f(CoeffDomain::Naturals, m, {{2, 1}, {4, 1}});
  EXPECT_FALSE(natural_atom_test(f).is_atom);
  EXPECT_TRUE(natural_atom_test(SemiringPolynomial::monomial(CoeffDomain::Naturals, m, 3)).is_atom);
  EXPECT_FALSE(natural_atom_test(SemiringPolynomial::monomial(CoeffDomain::Naturals, m, 4)).is_atom);
  // 1 + x^3: the only candidates with exponents in M are 1 + x^2 etc., none divide.
  EXPECT_TRUE(natural_atom_test(SemiringPolynomial(CoeffDomain::Naturals, m, {{0, 1}, {3, 1}})).is_atom);
}

// ---------------------------------------------------------------------------
// Additive atoms

TEST(AdditiveAtoms, Characterization) {
  ExponentMonoid m = puiseux({Rational(3, 2), 2});
  EXPECT_TRUE(is_additive_atom(SemiringPolynomial::monomial(CoeffDomain::Naturals, m, Rational(3, 2))));
  EXPECT_FALSE(is_additive_atom(nat({0, 2})));
  EXPECT_FALSE(is_additive_atom(nat({1, 1})));
  EXPECT_FALSE(is_additive_atom(SemiringPolynomial()));
  EXPECT_FALSE(is_additive_atom(SemiringPolynomial(CoeffDomain::Rationals, m, {{2, 1}})));
  auto u = poly_divide_exact(nat({0, 0, 0, 0, 0, 1}), nat({0, 0, 1}));
  ASSERT_TRUE(u);
  EXPECT_TRUE(is_additive_atom(*u));

  std::vector<Rational> exps;
  for (const auto& f : additive_atoms_up_to(puiseux({2, 3}), 6)) exps.push_back(f.degree());
  EXPECT_EQ(exps, (std::vector<Rational>{0, 2, 3, 4, 5, 6}));
  EXPECT_EQ(additive_atoms_up_to(ExponentMonoid::naturals(), 3).size(), 4u);
}

TEST(AdditiveAtoms, DivisorClosure) {
  std::mt19937_64 rng(23);
  const std::vector<ExponentMonoid> monoids{ExponentMonoid::naturals(), puiseux({2, 3}),
                                            puiseux({Rational(3, 2), 2, Rational(5, 2)})};
  for (const auto& m : monoids) {
    auto atoms = additive_atoms_up_to(m, 10);
    std::size_t divisible = 0;
    for (int sample = 0; sample < 200; ++sample) {
      const auto& u = atoms[testing::uniform(rng, 0, atoms.size() - 1)];
      // g: one or two terms drawn from the monoid, coefficients 1..2.
      SemiringPolynomial::Terms terms;
      const auto terms_wanted = testing::uniform(rng, 1, 3) == 1 ? 2 : 1;
      for (int t = 0; t < terms_wanted; ++t) {
        const auto& e = atoms[testing::uniform(rng, 0, atoms.size() - 1)].degree();
        terms[e] = testing::uniform(rng, 1, 4) == 1 ? 2 : 1;
      }
      SemiringPolynomial g(CoeffDomain::Naturals, m, terms);
      auto h = poly_divide_exact(u, g);
      if (!h) continue;
      ++divisible;
      ASSERT_TRUE(is_additive_atom(g)) << to_string(u) << " / " << to_string(g);
      ASSERT_TRUE(is_additive_atom(*h));
    }
    EXPECT_GT(divisible, 20u);
  }
}

// ---------------------------------------------------------------------------
// Monomial relations and purity

TEST(Case1, Examples) {
  MonomialRelation r = case1_relation(numerical_presentation({2, 3}), 0, 1);
  EXPECT_EQ(r.relation.left, FactorizationVector{Vec64({3, 0})});
  EXPECT_EQ(r.relation.right, FactorizationVector{Vec64({0, 2})});
  EXPECT_EQ(r.product_exponent, 6);

  Presentation halves = rational_presentation({Rational(1, 2), Rational(1, 3)});
  MonomialRelation s = case1_relation(halves, 0, 1);
  EXPECT_EQ(s.relation.left, FactorizationVector{Vec64({2, 0})});
  EXPECT_EQ(s.relation.right, FactorizationVector{Vec64({0, 3})});
  EXPECT_EQ(s.product_exponent, 1);

  EXPECT_THROW(case1_relation(halves, 1, 1), DomainError);
  EXPECT_THROW(case1_relation(rational_presentation({2, 2}), 0, 1), DomainError);
}

TEST(Case1, RandomPresentationsHoldTheirRelations) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> gens;
    while (gens.size() < 3) {
      Rational q(testing::uniform(rng, 1, 12), testing::uniform(rng, 1, 6));
      q.canonicalize();
      if (std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
    }
    Presentation p = rational_presentation(gens);
    std::vector<FactorizationRelation> rels;
    bool all_balanced = true;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        MonomialRelation r = case1_relation(p, i, j);
        ASSERT_EQ(evaluate(p, r.relation.left), Element{r.product_exponent});
        ASSERT_EQ(evaluate(p, r.relation.right), Element{r.product_exponent});
        ASSERT_TRUE(r.relation.irredundant());
        all_balanced = all_balanced && r.relation.left.length() == r.relation.right.length();
        rels.push_back(r.relation);
      }
    }
    ASSERT_TRUE(purity_candidates(3, rels).empty() || all_balanced);
  }
}

TEST(Purity, CandidateFiltering) {
  // (x+1)(x^3+x^2+x+6) = (x+2)(x^3+2x+3) with atoms indexed 0..3.
  FactorizationRelation balanced{FactorizationVector{Vec64({1, 1, 0, 0})},
                                 FactorizationVector{Vec64({0, 0, 1, 1})}};
  EXPECT_TRUE(purity_candidates(4, {balanced}).empty());
  FactorizationRelation unbalanced{FactorizationVector{Vec64({3, 0, 0, 0})},
                                   FactorizationVector{Vec64({0, 2, 0, 0})}};
  EXPECT_EQ(purity_candidates(4, {unbalanced}), (std::set<std::size_t>{0, 1}));
  EXPECT_EQ(purity_candidates(4, {}), (std::set<std::size_t>{0, 1, 2, 3}));
}

// ---------------------------------------------------------------------------
// Monoid algebra witnesses

SemiringPolynomial q_binomial(const ExponentMonoid& m, long hi, long lo) {
  return SemiringPolynomial(CoeffDomain::Rationals, m, {{hi, 1}, {lo, -1}});
}

TEST(AlgebraWitness, TwoThree) {
  AlgebraWitness w = algebra_witness(2, 3);
  EXPECT_EQ(std::make_tuple(w.p, w.Q, w.r, w.S, w.c), std::make_tuple(2, 1, 1, 1, 1));
  ExponentMonoid m = puiseux({2, 3});
  EXPECT_EQ(w.a1, q_binomial(m, 3, 2));
  EXPECT_EQ(w.a2, q_binomial(m, 4, 3));
  EXPECT_EQ(w.f, q_binomial(m, 6, 5));
  ASSERT_EQ(w.z1.factors.size(), 2u);
  EXPECT_EQ(w.z1.factors[0].factor, SemiringPolynomial::monomial(CoeffDomain::Rationals, m, 2));
  EXPECT_EQ(w.z1.factors[1].factor, w.a2);
  EXPECT_EQ(w.z2.factors[0].factor, SemiringPolynomial::monomial(CoeffDomain::Rationals, m, 3));
  EXPECT_EQ(w.z2.factors[1].factor, w.a1);
  EXPECT_EQ(w.z1.length(), 2);
  EXPECT_EQ(w.z2.length(), 2);
  EXPECT_EQ(w.z1.product(), w.f);
  EXPECT_EQ(w.z2.product(), w.f);
  EXPECT_TRUE(binomial_irreducibility_check(w));
}

TEST(AlgebraWitness, ThreeFive) {
  AlgebraWitness w = algebra_witness(3, 5);
  EXPECT_EQ(std::make_tuple(w.p, w.Q, w.r, w.S, w.c), std::make_tuple(2, 1, 2, 3, 4));
  EXPECT_EQ(w.z1.length(), 6);
  EXPECT_EQ(w.z1.product(), w.z2.product());
  EXPECT_TRUE(binomial_irreducibility_check(algebra_witness(3, 4)));
}

TEST(AlgebraWitness, RejectsBadPairs) {
  EXPECT_THROW(algebra_witness(2, 4), InvalidPair);
  EXPECT_THROW(algebra_witness(1, 3), InvalidPair);
  EXPECT_THROW(algebra_witness(5, 3), InvalidPair);
  EXPECT_THROW(algebra_witness(3, 3), InvalidPair);
}

TEST(AlgebraWitness, MinimalityScanAllSmallPairs) {
  for (std::int64_t a = 2; a <= 9; ++a) {
    for (std::int64_t b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      std::int64_t p = 1, r = 1;
      while ((p * a - 1) % b != 0) ++p;
      while ((r * b - 1) % a != 0) ++r;
      AlgebraWitness w = algebra_witness(a, b);
      EXPECT_EQ(w.p, p);
      EXPECT_EQ(w.r, r);
      EXPECT_EQ(w.Q, (p * a - 1) / b);
      EXPECT_EQ(w.S, (r * b - 1) / a);
      EXPECT_EQ(w.c, std::abs(w.S * a - w.Q * b));
      EXPECT_EQ(w.z1.length(), w.c + b - a);
      EXPECT_EQ(w.z2.length(), w.c + b - a);
      EXPECT_EQ(w.z1.product(), w.f);
      EXPECT_EQ(w.z2.product(), w.f);
      EXPECT_TRUE(binomial_irreducibility_check(w)) << a << "," << b;
    }
  }
}

TEST(AlgebraWitness, ManufacturedReducibleBinomialFails) {
  AlgebraWitness w = algebra_witness(2, 3);
  w.a2 = q_binomial(w.a2.monoid(), 6, 4);  // x^2 (x^4 - x^2)
  EXPECT_FALSE(binomial_irreducibility_check(w));
  AlgebraWitness v = algebra_witness(2, 3);
  v.a1 = SemiringPolynomial(CoeffDomain::Rationals, v.a1.monoid(), {{3, 1}, {2, 1}});
  EXPECT_FALSE(binomial_irreducibility_check(v));
}

}  // namespace
}  // namespace factolab
