#include "factolab/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>
#include <type_traits>

#include "factolab/errors.hpp"

namespace factolab {

namespace {

Integer coordinate_sum(const IntVector& z) {
  Integer s = 0;
  for (const auto& x : z) s += x;
  return s;
}

std::vector<std::int64_t> checked_int64(const IntVector& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw DomainError("relation multiplicity does not fit in 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

IntVector primitive(IntVector z) {
  Integer g = content(z);
  if (g > 1) {
    for (auto& x : z) x /= g;
  }
  return z;
}

void require_normalized(const Presentation& p) {
  try {
    normalize_atoms(p, NormalizeMode::Reject);
  } catch (const DuplicateGenerator& e) {
    throw NotNormalized(std::string("presentation is not normalized: ") + e.what());
  } catch (const NotAnAtom& e) {
    throw NotNormalized(std::string("presentation is not normalized: ") + e.what());
  }
}


using GradedRelations = std::vector<std::tuple<Rational, FactorizationRelation>>;

// Every irredundant relation between factorizations of grade <= bound,
// sorted by (grade, relation), or nullopt once more than `budget`
// factorization vectors have been visited. Coordinates are integerized so
// the search runs in 64-bit arithmetic.
template <typename Coord>
std::optional<GradedRelations> collect_relations_as(const Presentation& p, const Grading& h, const Rational& bound,
                                                    std::optional<std::size_t> budget) {
  const std::size_t k = p.size();
  const IntMatrix a = generator_matrix(p);
  const std::size_t d = a.rows();

  std::vector<Rational> grade;
  for (const auto& g : p.generators) grade.push_back(h.grade(g));
  Integer den = lcm_of_denominators(grade);
  std::vector<std::int64_t> weight;
  for (const auto& g : grade) weight.push_back(Rational(g * Rational(den)).get_num().get_si());
  Rational scaled_bound = bound * Rational(den);
  if (sgn(scaled_bound) < 0) return GradedRelations{};
  const std::int64_t limit = Integer(scaled_bound.get_num() / scaled_bound.get_den()).get_si();

  std::vector<std::vector<Coord>> column(k, std::vector<Coord>(d));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      if constexpr (std::is_same_v<Coord, Integer>) column[j][i] = a(i, j);
      else column[j][i] = a(i, j).get_si();
    }
  }

  std::map<std::vector<Coord>, std::pair<std::int64_t, std::vector<FactorizationVector>>> fibres;
  std::vector<std::int64_t> cur(k, 0);
  std::vector<Coord> point(d);
  std::size_t visited = 0;
  bool exhausted = false;
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t i, std::int64_t spent) {
    if (exhausted) return;
    if (i == k) {
      if (budget && ++visited > *budget) {
        exhausted = true;
        return;
      }
      auto& fibre = fibres[point];
      fibre.first = spent;
      fibre.second.push_back(FactorizationVector{cur});
      return;
    }
    std::int64_t c = 0;
    for (; spent + c * weight[i] <= limit && !exhausted; ++c) {
      cur[i] = c;
      dfs(i + 1, spent + c * weight[i]);
      for (std::size_t r = 0; r < d; ++r) point[r] += column[i][r];
    }
    for (std::size_t r = 0; r < d; ++r) point[r] -= column[i][r] * Coord(c);
    cur[i] = 0;
  };
  dfs(0, 0);
  if (exhausted) return std::nullopt;

  GradedRelations found;
  for (const auto& [x, fibre] : fibres) {
    const auto& zs = fibre.second;
    if (zs.size() < 2) continue;
    Rational g(fibre.first, den);
    g.canonicalize();
    for (std::size_t s = 0; s < zs.size(); ++s) {
      for (std::size_t t = s + 1; t < zs.size(); ++t) {
        FactorizationRelation rel{zs[s], zs[t]};
        if (!rel.irredundant()) continue;
        auto ls = rel.left.length(), lt = rel.right.length();
        if (ls < lt || (ls == lt && rel.left < rel.right)) std::swap(rel.left, rel.right);
        found.emplace_back(g, std::move(rel));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<GradedRelations> collect_relations(const Presentation& p, const Grading& h, const Rational& bound,
                                                 std::optional<std::size_t> budget) {
  const IntMatrix a = generator_matrix(p);
  Integer largest = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) largest = std::max(largest, Integer(abs(a(i, j))));
  }
  Rational least = h.grade(p.generators.front());
  for (const auto& g : p.generators) least = std::min(least, h.grade(g));
  // Coordinates stay below largest * (bound / least) * k.
  Rational reach = Rational(largest) * (bound / least + 1) * Rational(static_cast<long>(p.size()));
  if (reach < Rational(Integer(1) << 62)) return collect_relations_as<std::int64_t>(p, h, bound, budget);
  return collect_relations_as<Integer>(p, h, bound, budget);
}

// Smallest-grade balanced relation, capped by the grade of the kernel
// witness and a search budget; falls back to the kernel witness.
IntVector smallest_balanced_witness(const Presentation& p, IntVector kernel_witness) {
  constexpr std::size_t kBudget = 50'000;
  const Grading h = validate_presentation(p);
  FactorizationRelation w = relation_from_kernel_vector(kernel_witness);
  const Rational cap = h.grade(evaluate(p, w.left));
  for (Rational bound = 2;; bound *= 2) {
    if (bound > cap) bound = cap;
    auto found = collect_relations(p, h, bound, kBudget);
    if (!found) return kernel_witness;
    for (const auto& [g, rel] : *found) {
      if (!rel.balanced()) continue;
      IntVector z(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        z[i] = static_cast<long>(rel.left.multiplicities[i] - rel.right.multiplicities[i]);
      }
      return z;
    }
    if (bound == cap) return kernel_witness;
  }
}

}  // namespace

bool FactorizationRelation::irredundant() const {
  for (std::size_t i = 0; i < left.multiplicities.size(); ++i) {
    if (left.multiplicities[i] > 0 && right.multiplicities.at(i) > 0) return false;
  }
  return true;
}

FactorizationRelation relation_from_kernel_vector(const IntVector& z) {
  auto v = checked_int64(z);
  FactorizationRelation rel{FactorizationVector{std::vector<std::int64_t>(v.size(), 0)},
                            FactorizationVector{std::vector<std::int64_t>(v.size(), 0)}};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) rel.left.multiplicities[i] = v[i];
    else rel.right.multiplicities[i] = -v[i];
  }
  return rel;
}

std::string to_string(AtomLabel label) {
  switch (label) {
    case AtomLabel::Prime: return "prime";
    case AtomLabel::PurelyLong: return "purely_long";
    case AtomLabel::PurelyShort: return "purely_short";
    case AtomLabel::Neither: return "neither";
  }
  return "unknown";
}

ClassificationReport classify(const Presentation& p) {
  require_normalized(p);
  const std::size_t k = p.size();

  ClassificationReport rep;
  rep.num_atoms = k;
  rep.kernel = integer_kernel(generator_matrix(p));
  rep.kernel_rank = rep.kernel.rank();
  const auto& basis = rep.kernel.vectors;

  std::vector<Integer> sums;
  for (const auto& b : basis) sums.push_back(coordinate_sum(b));

  rep.is_UFM = basis.empty();
  if (!rep.is_UFM) rep.witnesses.not_ufm = basis.front();

  auto nonzero_sum = std::find_if(sums.begin(), sums.end(), [](const Integer& s) { return s != 0; });
  rep.is_HFM = nonzero_sum == sums.end();
  if (!rep.is_HFM) rep.witnesses.not_hfm = basis[static_cast<std::size_t>(nonzero_sum - sums.begin())];

  rep.is_LFM = basis.empty() || (basis.size() == 1 && sums.front() != 0);
  if (!rep.is_LFM) {
    auto zero_sum = std::find_if(sums.begin(), sums.end(), [](const Integer& s) { return s == 0; });
    if (zero_sum != sums.end()) {
      rep.witnesses.not_lfm = basis[static_cast<std::size_t>(zero_sum - sums.begin())];
    } else {
      // rank >= 2 with both sums nonzero: cancel the sums.
      IntVector z(k);
      for (std::size_t i = 0; i < k; ++i) z[i] = sums[1] * basis[0][i] - sums[0] * basis[1][i];
      rep.witnesses.not_lfm = primitive(std::move(z));
    }
    rep.witnesses.not_lfm = smallest_balanced_witness(p, *rep.witnesses.not_lfm);
  }

  const LinearFunctional sigma(k, Rational(1));
  LinearFunctional neg_sigma(k, Rational(-1));
  const std::vector<LinearFunctional> at_most_zero_length{sigma};
  const std::vector<LinearFunctional> at_least_zero_length{neg_sigma};

  rep.labels.assign(k, AtomLabel::Neither);
  rep.witnesses.not_purely_long.resize(k);
  rep.witnesses.not_purely_short.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    bool active = std::any_of(basis.begin(), basis.end(), [&](const IntVector& b) { return b[i] != 0; });
    if (!active) {
      rep.labels[i] = AtomLabel::Prime;
      rep.prime.insert(i);
      continue;
    }
    LinearFunctional e(k, Rational(0));
    e[i] = 1;
    auto long_counter = homogeneous_lp_witness(rep.kernel, e, at_most_zero_length);
    auto short_counter = homogeneous_lp_witness(rep.kernel, e, at_least_zero_length);
    rep.witnesses.not_purely_long[i] = long_counter;
    rep.witnesses.not_purely_short[i] = short_counter;
    if (!long_counter) {
      rep.labels[i] = AtomLabel::PurelyLong;
      rep.purely_long.insert(i);
    } else if (!short_counter) {
      rep.labels[i] = AtomLabel::PurelyShort;
      rep.purely_short.insert(i);
    }
  }
  rep.is_PLSM = !rep.purely_long.empty() && !rep.purely_short.empty();

  if (basis.size() == 1 && sums.front() != 0) {
    IntVector b = basis.front();
    if (sums.front() < 0) {
      for (auto& x : b) x = -x;
    }
    rep.master = relation_from_kernel_vector(b);
  }
  return rep;
}

std::set<std::size_t> prime_atoms(const Presentation& p) { return classify(p).prime; }

std::vector<AtomLabel> pure_atom_labels(const Presentation& p) { return classify(p).labels; }

std::optional<FactorizationRelation> master_relation(const Presentation& p) { return classify(p).master; }

std::vector<FactorizationRelation> relation_evidence(const Presentation& p, const Rational& bound) {
  require_normalized(p);
  auto graded = collect_relations(p, validate_presentation(p), bound, std::nullopt);
  std::vector<FactorizationRelation> out;
  out.reserve(graded->size());
  for (auto& [g, rel] : *graded) out.push_back(std::move(rel));
  return out;
}

}  // namespace factolab
