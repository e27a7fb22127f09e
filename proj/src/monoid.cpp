#include "factolab/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

#include "factolab/errors.hpp"

namespace factolab {

namespace {

std::string vector_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::vector<std::int64_t> to_int64(const IntVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw DomainError("multiplicity does not fit in 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational grade_of(const RationalVector& weights, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += weights[i] * x[i];
  return s;
}

std::optional<RationalVector> positive_on_all(const Presentation& p, const RationalVector& h) {
  for (const auto& g : p.generators) {
    if (sgn(grade_of(h, g)) <= 0) return std::nullopt;
  }
  return h;
}

// Integer form of an enumeration problem: generators, target and weights
// all scaled to integers.
struct IntegerProblem {
  std::vector<IntVector> gens;
  std::vector<Integer> weights;  // integer grade of each generator, > 0
  IntVector target;
  Integer target_weight;
};

IntegerProblem integer_problem(const Presentation& p, const Element& x, const Grading& h) {
  Integer den = lcm_of_denominators(x);
  for (const auto& g : p.generators) den = lcm(den, lcm_of_denominators(g));
  Integer hden = lcm_of_denominators(h.weights);

  auto scaled = [&](const RationalVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational q = v[i] * Rational(den);
      out[i] = q.get_num();  // exact: den clears every denominator
    }
    return out;
  };
  IntVector hint(h.weights.size());
  for (std::size_t i = 0; i < hint.size(); ++i) {
    Rational q = h.weights[i] * Rational(hden);
    hint[i] = q.get_num();
  }
  auto weight = [&](const IntVector& v) {
    Integer s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += hint[i] * v[i];
    return s;
  };

  IntegerProblem prob;
  for (const auto& g : p.generators) {
    prob.gens.push_back(scaled(g));
    prob.weights.push_back(weight(prob.gens.back()));
  }
  prob.target = scaled(x);
  prob.target_weight = weight(prob.target);
  return prob;
}

// Depth-first over multiplicities, largest first; the grade budget bounds
// each coordinate. Coord is std::int64_t when every partial sum provably
// fits, Integer otherwise.
template <class Coord>
class Enumerator {
 public:
  explicit Enumerator(const IntegerProblem& prob) : current_(prob.gens.size(), 0) {
    for (const auto& g : prob.gens) gens_.push_back(convert(g));
    for (const auto& w : prob.weights) weights_.push_back(convert(w));
    target_ = convert(prob.target);
    target_weight_ = convert(prob.target_weight);
  }

  std::vector<FactorizationVector> run() {
    if (target_weight_ < 0) return {};
    std::vector<Coord> rem = target_;
    dfs(0, rem, target_weight_);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  static Coord convert(const Integer& x) {
    if constexpr (std::is_same_v<Coord, Integer>) {
      return x;
    } else {
      return x.get_si();
    }
  }
  static std::vector<Coord> convert(const IntVector& v) {
    std::vector<Coord> out;
    for (const auto& x : v) out.push_back(convert(x));
    return out;
  }
  static std::int64_t to_count(const Coord& c) {
    if constexpr (std::is_same_v<Coord, Integer>) {
      return c.get_si();
    } else {
      return c;
    }
  }

  void dfs(std::size_t i, std::vector<Coord>& rem, const Coord& wrem) {
    const std::vector<Coord>& g = gens_[i];
    const Coord& w = weights_[i];
    const std::size_t k = gens_.size();
    if (i + 1 == k) {
      if (wrem % w != 0) return;
      Coord c = wrem / w;
      for (std::size_t j = 0; j < rem.size(); ++j) {
        if (rem[j] != c * g[j]) return;
      }
      current_[i] = to_count(c);
      out_.push_back(FactorizationVector{current_});
      current_[i] = 0;
      return;
    }
    Coord cmax = wrem / w;  // both nonnegative
    for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= cmax * g[j];
    Coord wnext = wrem - cmax * w;
    for (Coord c = cmax; c >= 0; --c) {
      current_[i] = to_count(c);
      dfs(i + 1, rem, wnext);
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] += g[j];
      wnext += w;
    }
    // rem now equals the original plus g; undo that last step.
    for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= g[j];
    current_[i] = 0;
  }

  std::vector<std::vector<Coord>> gens_;
  std::vector<Coord> weights_;
  std::vector<Coord> target_;
  Coord target_weight_;
  std::vector<std::int64_t> current_;
  std::vector<FactorizationVector> out_;
};

// Every intermediate is bounded by |target| + (W / w_min + 1) * max|g| + W.
bool fits_int64(const IntegerProblem& prob) {
  Integer gmax = 0, wmin = prob.weights.front(), tmax = abs(prob.target_weight);
  for (const auto& g : prob.gens) {
    for (const auto& x : g) gmax = std::max(gmax, Integer(abs(x)));
  }
  for (const auto& w : prob.weights) wmin = std::min(wmin, w);
  for (const auto& x : prob.target) tmax = std::max(tmax, Integer(abs(x)));
  for (const auto& w : prob.weights) gmax = std::max(gmax, w);
  Integer bound = tmax + (abs(prob.target_weight) / wmin + 1) * gmax + abs(prob.target_weight);
  return bound < (Integer(1) << 62);
}

}  // namespace

Presentation numerical_presentation(const std::vector<long>& gens, std::string label) {
  Presentation p;
  p.dim = 1;
  p.label = std::move(label);
  for (long g : gens) p.generators.push_back({Rational(g)});
  return p;
}

std::int64_t FactorizationVector::length() const noexcept {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0});
}

FactorizationVector operator+(const FactorizationVector& x, const FactorizationVector& y) {
  if (x.multiplicities.size() != y.multiplicities.size()) throw DomainError("factorization length mismatch");
  FactorizationVector out = x;
  for (std::size_t i = 0; i < out.multiplicities.size(); ++i) out.multiplicities[i] += y.multiplicities[i];
  return out;
}

Rational Grading::grade(const Element& x) const {
  if (x.size() != weights.size()) throw DomainError("grade: element has wrong dimension");
  return grade_of(weights, x);
}

IntMatrix generator_matrix(const Presentation& p) {
  Integer den = 1;
  for (const auto& g : p.generators) den = lcm(den, lcm_of_denominators(g));
  IntMatrix a(p.dim, p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p.dim; ++i) {
      Rational q = p.generators[j][i] * Rational(den);
      a(i, j) = q.get_num();
    }
  }
  return a;
}

Element evaluate(const Presentation& p, const FactorizationVector& z) {
  if (z.multiplicities.size() != p.size()) throw DomainError("evaluate: factorization has wrong length");
  Element x(p.dim);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (z.multiplicities[j] == 0) continue;
    Rational c(static_cast<long>(z.multiplicities[j]));
    for (std::size_t i = 0; i < p.dim; ++i) x[i] += c * p.generators[j][i];
  }
  return x;
}

Grading validate_presentation(const Presentation& p) {
  if (p.dim == 0) throw DomainError("presentation dimension must be at least 1");
  if (p.generators.empty()) throw DomainError("presentation has no generators");
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p.generators[j].size() != p.dim) {
      throw InvalidGenerator(j, "generator " + std::to_string(j) + " has length " +
                                    std::to_string(p.generators[j].size()) + ", expected " + std::to_string(p.dim));
    }
    if (is_zero(p.generators[j])) throw InvalidGenerator(j, "generator " + std::to_string(j) + " is zero");
  }

  const std::size_t k = p.size();
  LatticeBasis kernel = integer_kernel(generator_matrix(p));
  LinearFunctional sigma(k, Rational(1));
  std::vector<LinearFunctional> nonneg;
  for (std::size_t i = 0; i < k; ++i) {
    LinearFunctional f(k, Rational(0));
    f[i] = -1;
    nonneg.push_back(std::move(f));
  }
  if (auto w = homogeneous_lp_witness(kernel, sigma, nonneg)) {
    auto witness = to_int64(*w);
    std::string msg = "presentation is not pointed: nonnegative relation (";
    for (std::size_t i = 0; i < k; ++i) msg += (i ? "," : "") + std::to_string(witness[i]);
    throw NotPointed(std::move(witness), msg + ") sums to zero");
  }

  std::optional<RationalVector> h = positive_on_all(p, RationalVector(p.dim, Rational(1)));
  if (!h) {
    RationalVector sum(p.dim);
    for (const auto& g : p.generators) {
      for (std::size_t i = 0; i < p.dim; ++i) sum[i] += g[i];
    }
    h = positive_on_all(p, sum);
  }
  if (!h) {
    std::vector<Inequality> system;
    for (const auto& g : p.generators) system.push_back({g, Rational(1)});
    h = solve_inequalities(p.dim, std::move(system));
    if (!h) throw InternalContradiction("pointed presentation admits no positive grading");
  }

  Rational min_grade = grade_of(*h, p.generators.front());
  for (const auto& g : p.generators) min_grade = std::min(min_grade, grade_of(*h, g));
  for (auto& w : *h) w /= min_grade;
  return Grading{std::move(*h)};
}

Presentation normalize_atoms(const Presentation& p, NormalizeMode mode) {
  validate_presentation(p);

  Presentation distinct;
  distinct.dim = p.dim;
  distinct.label = p.label;
  std::vector<std::size_t> origin;
  for (std::size_t j = 0; j < p.size(); ++j) {
    auto it = std::find(distinct.generators.begin(), distinct.generators.end(), p.generators[j]);
    if (it != distinct.generators.end()) {
      if (mode == NormalizeMode::Reject) {
        std::size_t first = origin[static_cast<std::size_t>(it - distinct.generators.begin())];
        throw DuplicateGenerator(j, first,
                                 "generator " + std::to_string(j) + " duplicates generator " + std::to_string(first));
      }
      continue;
    }
    distinct.generators.push_back(p.generators[j]);
    origin.push_back(j);
  }

  Grading h = validate_presentation(distinct);
  Presentation out;
  out.dim = p.dim;
  out.label = p.label;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    auto zs = enumerate_factorizations(distinct, distinct.generators[i], h);
    auto other = std::find_if(zs.begin(), zs.end(), [&](const FactorizationVector& z) {
      return z.multiplicities[i] == 0 || z.length() != 1;
    });
    if (other == zs.end()) {
      out.generators.push_back(distinct.generators[i]);
      continue;
    }
    if (mode == NormalizeMode::Reject) {
      // Report the witness over the original generator indexing.
      std::vector<std::int64_t> witness(p.size(), 0);
      for (std::size_t t = 0; t < distinct.size(); ++t) witness[origin[t]] = other->multiplicities[t];
      std::string msg = "generator " + std::to_string(origin[i]) + " " + vector_string(distinct.generators[i]) +
                        " is not an atom: it is a sum of " + std::to_string(other->length()) + " generators";
      throw NotAnAtom(origin[i], std::move(witness), msg);
    }
  }
  return out;
}

std::vector<FactorizationVector> enumerate_factorizations(const Presentation& p, const Element& x,
                                                          const Grading& h) {
  if (x.size() != p.dim) throw DomainError("element has dimension " + std::to_string(x.size()) + ", expected " +
                                           std::to_string(p.dim));
  if (h.weights.size() != p.dim) throw DomainError("grading has wrong dimension");
  IntegerProblem prob = integer_problem(p, x, h);
  if (fits_int64(prob)) return Enumerator<std::int64_t>(prob).run();
  return Enumerator<Integer>(prob).run();
}

std::vector<FactorizationVector> enumerate_factorizations(const Presentation& p, const Element& x) {
  return enumerate_factorizations(p, x, validate_presentation(p));
}

std::set<std::int64_t> length_set(const Presentation& p, const Element& x, const Grading& h) {
  std::set<std::int64_t> lengths;
  for (const auto& z : enumerate_factorizations(p, x, h)) lengths.insert(z.length());
  return lengths;
}

std::set<std::int64_t> length_set(const Presentation& p, const Element& x) {
  return length_set(p, x, validate_presentation(p));
}

std::set<std::size_t> atomic_divisors(const Presentation& p, const Element& x, const Grading& h) {
  std::set<std::size_t> atoms;
  for (const auto& z : enumerate_factorizations(p, x, h)) {
    for (std::size_t i = 0; i < z.multiplicities.size(); ++i) {
      if (z.multiplicities[i] > 0) atoms.insert(i);
    }
  }
  return atoms;
}

std::set<std::size_t> atomic_divisors(const Presentation& p, const Element& x) {
  return atomic_divisors(p, x, validate_presentation(p));
}

}  // namespace factolab
