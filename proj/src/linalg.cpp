#include "factolab/linalg.hpp"

#include <algorithm>
#include <cctype>

#include "factolab/errors.hpp"

namespace factolab {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

struct Gcdext {
  Integer g, s, t;
};

// g = s*a + t*b with g = gcd(a, b) >= 0
Gcdext gcdext(const Integer& a, const Integer& b) {
  Gcdext r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Centered residue of x modulo p > 0, in (-p/2, p/2].
Integer centered_mod(const Integer& x, const Integer& p) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  if (2 * r > p) r -= p;
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational ceil_rational(const Rational& q) { return Rational(ceil_div(q.get_num(), q.get_den())); }
Rational floor_rational(const Rational& q) { return Rational(floor_div(q.get_num(), q.get_den())); }

// Scales by a positive rational so the first nonzero coefficient is +-1.
// Returns false for an all-zero row.
bool normalize(Inequality& ineq) {
  auto it = std::find_if(ineq.coeffs.begin(), ineq.coeffs.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (it == ineq.coeffs.end()) return false;
  Rational scale = abs(*it);
  for (auto& c : ineq.coeffs) c /= scale;
  ineq.bound /= scale;
  return true;
}

bool operator<(const Inequality& x, const Inequality& y) {
  if (x.coeffs != y.coeffs) return x.coeffs < y.coeffs;
  return x.bound < y.bound;
}

// Keeps, for each coefficient row, only the tightest bound.
void deduplicate(std::vector<Inequality>& system) {
  std::sort(system.begin(), system.end(), [](const Inequality& x, const Inequality& y) { return x < y; });
  std::vector<Inequality> out;
  for (auto& ineq : system) {
    if (!out.empty() && out.back().coeffs == ineq.coeffs) {
      out.back().bound = ineq.bound;  // sorted ascending, last is largest
    } else {
      out.push_back(std::move(ineq));
    }
  }
  system = std::move(out);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

std::pair<Integer, Integer> rational_num_den(const Rational& r) {
  if (sgn(r) <= 0) throw DomainError("rational_num_den requires a positive rational, got " + to_string(r));
  Rational c = r;
  c.canonicalize();
  return {c.get_num(), c.get_den()};
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

Rational dot(std::span<const Rational> f, std::span<const Integer> z) {
  if (f.size() != z.size()) throw DomainError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * Rational(z[i]);
  return s;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DomainError("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::multiply(std::span<const Integer> z) const {
  if (z.size() != cols_) throw DomainError("IntMatrix::multiply: dimension mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * z[j];
  }
  return out;
}

std::vector<IntVector> row_hermite_form(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t k = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < k && pivot_row < rows.size(); ++col) {
    auto nz = std::find_if(rows.begin() + pivot_row, rows.end(), [&](const IntVector& r) { return r[col] != 0; });
    if (nz == rows.end()) continue;
    std::swap(rows[pivot_row], *nz);
    IntVector& p = rows[pivot_row];
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      IntVector& q = rows[r];
      if (q[col] == 0) continue;
      auto [g, s, t] = gcdext(p[col], q[col]);
      Integer pc = p[col] / g, qc = q[col] / g;
      for (std::size_t j = 0; j < k; ++j) {
        Integer new_p = s * p[j] + t * q[j];
        Integer new_q = pc * q[j] - qc * p[j];
        p[j] = std::move(new_p);
        q[j] = std::move(new_q);
      }
    }
    if (p[col] < 0) {
      for (auto& x : p) x = -x;
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      IntVector& q = rows[r];
      Integer m = (q[col] - centered_mod(q[col], p[col])) / p[col];
      if (m == 0) continue;
      for (std::size_t j = 0; j < k; ++j) q[j] -= m * p[j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

LatticeBasis integer_kernel(const IntMatrix& a) {
  const std::size_t k = a.cols();
  // Column operations on [A; I]: A*U ends in column echelon form and the
  // columns of U past the pivots span the kernel. U is unimodular, so that
  // span is the full integer kernel.
  IntMatrix w = a;
  IntMatrix u = IntMatrix::identity(k);
  auto combine = [&](std::size_t p, std::size_t c, const Integer& s, const Integer& t, const Integer& pc,
                     const Integer& cc) {
    // col_p <- s col_p + t col_c ; col_c <- pc col_c - cc col_p
    auto apply = [&](IntMatrix& m) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer np = s * m(i, p) + t * m(i, c);
        Integer nc = pc * m(i, c) - cc * m(i, p);
        m(i, p) = std::move(np);
        m(i, c) = std::move(nc);
      }
    };
    apply(w);
    apply(u);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < w.rows(); ++i) std::swap(w(i, x), w(i, y));
    for (std::size_t i = 0; i < u.rows(); ++i) std::swap(u(i, x), u(i, y));
  };

  std::size_t pivot = 0;
  for (std::size_t row = 0; row < a.rows() && pivot < k; ++row) {
    std::size_t first = pivot;
    while (first < k && w(row, first) == 0) ++first;
    if (first == k) continue;
    if (first != pivot) swap_cols(first, pivot);
    for (std::size_t c = pivot + 1; c < k; ++c) {
      if (w(row, c) == 0) continue;
      auto [g, s, t] = gcdext(w(row, pivot), w(row, c));
      Integer pc = w(row, pivot) / g, cc = w(row, c) / g;
      combine(pivot, c, s, t, pc, cc);
    }
    ++pivot;
  }

  std::vector<IntVector> kernel;
  for (std::size_t c = pivot; c < k; ++c) {
    IntVector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = u(i, c);
    kernel.push_back(std::move(v));
  }
  return LatticeBasis{k, row_hermite_form(std::move(kernel))};
}

std::optional<RationalVector> solve_inequalities(std::size_t num_vars, std::vector<Inequality> system) {
  for (const auto& ineq : system) {
    if (ineq.coeffs.size() != num_vars) throw DomainError("solve_inequalities: coefficient length mismatch");
  }
  // stages[v] holds the system over variables v..num_vars-1.
  std::vector<std::vector<Inequality>> stages;
  auto tidy = [](std::vector<Inequality>& sys) -> bool {
    std::vector<Inequality> kept;
    for (auto& ineq : sys) {
      if (normalize(ineq)) {
        kept.push_back(std::move(ineq));
      } else if (sgn(ineq.bound) > 0) {
        return false;  // 0 >= positive
      }
    }
    deduplicate(kept);
    sys = std::move(kept);
    return true;
  };
  if (!tidy(system)) return std::nullopt;
  stages.push_back(std::move(system));

  for (std::size_t v = 0; v < num_vars; ++v) {
    const auto& cur = stages.back();
    std::vector<const Inequality*> pos, neg;
    std::vector<Inequality> next;
    for (const auto& ineq : cur) {
      int s = sgn(ineq.coeffs[v]);
      if (s > 0) pos.push_back(&ineq);
      else if (s < 0) neg.push_back(&ineq);
      else next.push_back(ineq);
    }
    for (const auto* p : pos) {
      for (const auto* n : neg) {
        Rational wp = -n->coeffs[v];
        Rational wn = p->coeffs[v];
        Inequality combined{RationalVector(num_vars), wp * p->bound + wn * n->bound};
        for (std::size_t j = 0; j < num_vars; ++j) combined.coeffs[j] = wp * p->coeffs[j] + wn * n->coeffs[j];
        combined.coeffs[v] = 0;
        next.push_back(std::move(combined));
      }
    }
    if (!tidy(next)) return std::nullopt;
    stages.push_back(std::move(next));
  }

  RationalVector t(num_vars);
  for (std::size_t v = num_vars; v-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& ineq : stages[v]) {
      const Rational& c = ineq.coeffs[v];
      if (sgn(c) == 0) continue;
      Rational rhs = ineq.bound;
      for (std::size_t j = v + 1; j < num_vars; ++j) rhs -= ineq.coeffs[j] * t[j];
      Rational limit = rhs / c;
      if (sgn(c) > 0) {
        if (!lo || limit > *lo) lo = limit;
      } else {
        if (!hi || limit < *hi) hi = limit;
      }
    }
    // Prefer an integer value in [lo, hi] to keep witnesses small.
    if (lo && hi) {
      Rational c = ceil_rational(*lo);
      t[v] = c <= *hi ? c : *lo;
    } else if (lo) {
      t[v] = ceil_rational(*lo);
    } else if (hi) {
      t[v] = floor_rational(*hi);
    } else {
      t[v] = 0;
    }
  }
  return t;
}

std::optional<IntVector> homogeneous_lp_witness(const LatticeBasis& basis, const LinearFunctional& strict,
                                                std::span<const LinearFunctional> nonstrict) {
  const std::size_t k = basis.dim;
  if (strict.size() != k) throw DomainError("homogeneous_lp: strict functional has wrong length");
  for (const auto& f : nonstrict) {
    if (f.size() != k) throw DomainError("homogeneous_lp: nonstrict functional has wrong length");
  }
  for (const auto& b : basis.vectors) {
    if (b.size() != k) throw DomainError("homogeneous_lp: basis vector has wrong length");
  }
  const std::size_t r = basis.rank();
  auto in_span = [&](const LinearFunctional& f) {
    RationalVector c(r);
    for (std::size_t j = 0; j < r; ++j) c[j] = dot(f, basis.vectors[j]);
    return c;
  };

  std::vector<Inequality> system;
  system.push_back({in_span(strict), Rational(1)});
  for (const auto& f : nonstrict) {
    auto c = in_span(f);
    for (auto& x : c) x = -x;
    system.push_back({std::move(c), Rational(0)});
  }
  auto t = solve_inequalities(r, std::move(system));
  if (!t) return std::nullopt;

  // Integer span coordinates keep the witness inside the lattice even when
  // the basis is not saturated.
  Integer den = lcm_of_denominators(*t);
  IntVector coords(r);
  for (std::size_t j = 0; j < r; ++j) coords[j] = (*t)[j].get_num() * (den / (*t)[j].get_den());
  Integer g = content(coords);
  for (auto& c : coords) c /= g;

  IntVector z(k);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < k; ++i) z[i] += coords[j] * basis.vectors[j][i];
  }
  // Smallest positive multiple along the ray with strict(z) >= 1.
  Rational s = dot(strict, z);
  Integer m = ceil_div(s.get_den(), s.get_num());
  if (m > 1) {
    for (auto& x : z) x *= m;
  }
  return z;
}

bool homogeneous_lp_feasible(const LatticeBasis& basis, const LinearFunctional& strict,
                             std::span<const LinearFunctional> nonstrict) {
  return homogeneous_lp_witness(basis, strict, nonstrict).has_value();
}

}  // namespace factolab
