#pragma once

// Exact integer/rational linear algebra: integer kernels via column Hermite
// normal form and homogeneous LP feasibility via Fourier-Motzkin elimination.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace factolab {

using Integer = mpz_class;
// mpq_class kept canonical: every constructor path in this library calls
// canonicalize() or goes through parse_rational.
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
using LinearFunctional = RationalVector;

/// Parses "p/q", "-p/q" or "n". Throws ParseError on malformed input or a
/// zero denominator. The result is in lowest terms.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// (numerator, denominator) of a positive rational in lowest terms.
/// Throws DomainError if r <= 0.
std::pair<Integer, Integer> rational_num_den(const Rational& r);

Integer content(std::span<const Integer> v);  // gcd of entries, 0 for the zero vector
Integer lcm_of_denominators(std::span<const Rational> v);
Rational dot(std::span<const Rational> f, std::span<const Integer> z);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector multiply(std::span<const Integer> z) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Basis of a sublattice of Z^dim. When produced by integer_kernel it is
/// saturated and in canonical row Hermite form.
struct LatticeBasis {
  std::size_t dim = 0;
  std::vector<IntVector> vectors;

  std::size_t rank() const noexcept { return vectors.size(); }
  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

/// Saturated basis of {z in Z^k : A z = 0}, k = A.cols(). Empty iff A has
/// full column rank.
LatticeBasis integer_kernel(const IntMatrix& a);

/// Row Hermite form of the given vectors (positive pivots, entries above a
/// pivot reduced into (-p/2, p/2]). Spans the same lattice; zero rows dropped.
std::vector<IntVector> row_hermite_form(std::vector<IntVector> rows);

/// coeffs . t >= bound
struct Inequality {
  RationalVector coeffs;
  Rational bound;
};

/// Exact Fourier-Motzkin solver. Returns a point satisfying every
/// inequality, or nullopt when the system is infeasible.
std::optional<RationalVector> solve_inequalities(std::size_t num_vars,
                                                 std::vector<Inequality> system);

/// Looks for z in the rational span of `basis` with strict(z) >= 1 and
/// nonstrict_i(z) <= 0 for all i. When feasible, returns an integer lattice
/// vector satisfying the same constraints.
std::optional<IntVector> homogeneous_lp_witness(const LatticeBasis& basis,
                                                const LinearFunctional& strict,
                                                std::span<const LinearFunctional> nonstrict);

bool homogeneous_lp_feasible(const LatticeBasis& basis, const LinearFunctional& strict,
                             std::span<const LinearFunctional> nonstrict);

}  // namespace factolab
