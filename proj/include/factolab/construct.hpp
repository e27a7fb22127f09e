#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "factolab/classify.hpp"
#include "factolab/monoid.hpp"

namespace factolab {

/// Coefficients of a prospective master relation
///   a_1 alpha_1 + ... + a_m alpha_m = b_1 beta_1 + ... + b_n beta_n.
struct MasterSpec {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  friend bool operator==(const MasterSpec&, const MasterSpec&) = default;
};

/// Throws InvalidMasterSpec naming the first violated clause.
void check_master_spec(const MasterSpec& spec);

/// Monoid in Q^(m+n-1) whose unique (up to multiples and swap) unbalanced
/// irredundant relation is the one described by `spec`. alpha_i is the
/// standard basis vector e_i, beta_j = e_(m+j) for j < n, and beta_n is
/// solved for from the relation. Atom order: alpha_1..alpha_m, beta_1..beta_n.
Presentation build_master_monoid(const MasterSpec& spec);

/// The relation (sum a_i alpha_i, sum b_j beta_j) as factorization vectors
/// over build_master_monoid(spec)'s atoms.
FactorizationRelation expected_master_relation(const MasterSpec& spec);

/// Deterministic valid spec with m long and n short atoms: b is all ones
/// (b = (2) when n = 1); a is all ones except its last entry, which is the
/// smallest value making the spec valid.
MasterSpec pls_spec(std::size_t m, std::size_t n);
Presentation pls_example(std::size_t m, std::size_t n);

/// Every valid spec with 1 <= m, n <= max_side and entries in [1, max_entry].
std::vector<MasterSpec> all_master_specs(std::size_t max_side, std::int64_t max_entry);

/// Expected verdicts of a fixture; unset fields are not checked.
struct ExpectedVerdicts {
  std::optional<bool> is_UFM;
  std::optional<bool> is_LFM;
  std::optional<bool> is_HFM;
  std::optional<bool> is_PLSM;
  std::optional<std::size_t> kernel_rank;
  std::optional<std::set<std::size_t>> prime;
  std::optional<std::set<std::size_t>> purely_long;
  std::optional<std::set<std::size_t>> purely_short;
};

struct Fixture {
  std::string name;
  Presentation presentation;
  ExpectedVerdicts expected;
};

/// Human-readable mismatches between `expected` and `report`; empty when
/// everything agrees.
std::vector<std::string> compare(const ExpectedVerdicts& expected, const ClassificationReport& report);

inline constexpr std::size_t kDefaultTruncation = 4;

/// M x N with M = <2,3> and N truncated to atoms (n,1), n in [lo, K]:
/// generators (2|0,0), (3|0,0), then (0|n,1) in increasing n.
Presentation product_with_truncated_n(std::int64_t lo, std::int64_t k, std::string label);

/// The factor N alone, truncated to (n,1) for n in [0, K].
Presentation truncated_n(std::int64_t k);

/// Fixtures:
///  two_three          <2,3>, proper LFM
///  three_four_five    <3,4,5>, not LFM, no pure atoms
///  ffm_plsm_not_lfm   <2,3> x N with N = {(0,0)} u (N0 x N), truncated
///  plsm_not_ffm       same with N = {(0,0)} u (Z x N), truncated to [-K, K]
///  n_factor_hfm       N = {(0,0)} u (N0 x N) truncated, half-factorial
///  scaled_345         <3x,4x,5x> with x = 1/2, not LFM
/// Truncation K must be at least 2. (The untruncated plsm_not_ffm monoid is
/// not an FFM; truncations necessarily are, so that claim is not checked.)
std::vector<Fixture> fixture_gallery(std::size_t truncation = kDefaultTruncation);

}  // namespace factolab
