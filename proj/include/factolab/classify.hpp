#pragma once

// Exact factorization-theoretic classification of a normalized presentation.
// Every verdict is read off the kernel lattice of the generator matrix: a
// kernel vector z encodes the irredundant relation (z+, z-), and its
// coordinate sum is |z+| - |z-|.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "factolab/linalg.hpp"
#include "factolab/monoid.hpp"

namespace factolab {

struct FactorizationRelation {
  FactorizationVector left;
  FactorizationVector right;

  bool irredundant() const;
  bool balanced() const { return left.length() == right.length(); }
  friend auto operator<=>(const FactorizationRelation&, const FactorizationRelation&) = default;
};

/// (z+, z-) of a kernel vector.
FactorizationRelation relation_from_kernel_vector(const IntVector& z);

enum class AtomLabel { Prime, PurelyLong, PurelyShort, Neither };

std::string to_string(AtomLabel label);

/// Lattice vectors certifying each negative verdict. A witness z is a
/// kernel vector; the relation it certifies is relation_from_kernel_vector(z).
struct ClassificationWitnesses {
  std::optional<IntVector> not_ufm;  // any nonzero kernel vector
  std::optional<IntVector> not_lfm;  // nonzero, coordinate sum 0
  std::optional<IntVector> not_hfm;  // coordinate sum != 0
  // Per atom: z with z_i >= 1 and sum(z) <= 0 (atom is not purely long),
  // and z with z_i >= 1 and sum(z) >= 0 (not purely short). Empty for primes.
  std::vector<std::optional<IntVector>> not_purely_long;
  std::vector<std::optional<IntVector>> not_purely_short;
};

struct ClassificationReport {
  std::size_t num_atoms = 0;
  LatticeBasis kernel;
  std::size_t kernel_rank = 0;
  bool is_UFM = false;
  bool is_LFM = false;
  bool is_HFM = false;
  bool is_PLSM = false;
  // Finitely generated reduced monoids are always FFMs (hence BFMs); these
  // are constants, not computed.
  bool is_FFM = true;
  bool is_BFM = true;
  std::vector<AtomLabel> labels;
  std::set<std::size_t> prime;
  std::set<std::size_t> purely_long;
  std::set<std::size_t> purely_short;
  std::optional<FactorizationRelation> master;
  ClassificationWitnesses witnesses;

  bool is_proper_LFM() const { return is_LFM && !is_UFM; }
};

inline constexpr const char* kFiniteFactorizationNote =
    "is_FFM and is_BFM hold for every finitely generated reduced monoid; they are not computed";

/// Throws NotNormalized when some generator is a non-atom or a duplicate.
ClassificationReport classify(const Presentation& p);

std::set<std::size_t> prime_atoms(const Presentation& p);
std::vector<AtomLabel> pure_atom_labels(const Presentation& p);
std::optional<FactorizationRelation> master_relation(const Presentation& p);

/// Brute force: every irredundant relation (z1, z2) between two
/// factorizations of an element of grade <= bound. Independent of the
/// kernel computation; used as a cross-check. Unbalanced relations are
/// listed longer side first, balanced ones with the lexicographically larger
/// side first. Sorted by (grade, left, right).
std::vector<FactorizationRelation> relation_evidence(const Presentation& p, const Rational& bound);

}  // namespace factolab
