#pragma once

// Finitely generated reduced monoids given by rational generator vectors,
// and factorization enumeration under a positive grading.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "factolab/linalg.hpp"

namespace factolab {

/// Generators g_1..g_k in Q^dim. Indices into `generators` are atom
/// indices everywhere in the library.
struct Presentation {
  std::size_t dim = 1;
  std::vector<RationalVector> generators;
  std::string label;

  std::size_t size() const noexcept { return generators.size(); }
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Shorthand for a presentation in Q^1 with integer generators.
Presentation numerical_presentation(const std::vector<long>& gens, std::string label = {});

using Element = RationalVector;

/// Exponent vector over the atoms of a presentation.
struct FactorizationVector {
  std::vector<std::int64_t> multiplicities;

  std::int64_t length() const noexcept;
  bool contains(std::size_t atom) const { return multiplicities.at(atom) > 0; }
  friend auto operator<=>(const FactorizationVector&, const FactorizationVector&) = default;
};

FactorizationVector operator+(const FactorizationVector& x, const FactorizationVector& y);

/// Linear weights h with h(g_i) > 0 for every generator, scaled so the
/// smallest generator grade is exactly 1.
struct Grading {
  RationalVector weights;

  Rational grade(const Element& x) const;
};

/// Generator matrix (dim x k) with all denominators cleared by one common
/// factor. Its integer kernel is the lattice of factorization relations.
IntMatrix generator_matrix(const Presentation& p);

Element evaluate(const Presentation& p, const FactorizationVector& z);

/// Checks generators are nonzero and of the right length, and that the
/// presentation is pointed. Throws InvalidGenerator or NotPointed.
Grading validate_presentation(const Presentation& p);

enum class NormalizeMode { Reject, AutoReduce };

/// Ensures every generator is an atom and no generator repeats. Reject mode
/// throws DuplicateGenerator / NotAnAtom; auto-reduce drops the offenders
/// (keeping the first copy of a duplicate).
Presentation normalize_atoms(const Presentation& p, NormalizeMode mode);

/// Z(x), sorted lexicographically. Empty iff x is not in the monoid.
std::vector<FactorizationVector> enumerate_factorizations(const Presentation& p, const Element& x,
                                                          const Grading& h);
std::vector<FactorizationVector> enumerate_factorizations(const Presentation& p, const Element& x);

std::set<std::int64_t> length_set(const Presentation& p, const Element& x, const Grading& h);
std::set<std::int64_t> length_set(const Presentation& p, const Element& x);

/// Atoms occurring in at least one factorization of x.
std::set<std::size_t> atomic_divisors(const Presentation& p, const Element& x, const Grading& h);
std::set<std::size_t> atomic_divisors(const Presentation& p, const Element& x);

}  // namespace factolab
