#include "factolab/construct.hpp"

#include <functional>
#include <numeric>

#include "factolab/errors.hpp"

namespace factolab {

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::set<std::size_t>& v) {
  std::string s = "{";
  bool first = true;
  for (auto x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "}";
}

bool valid(const MasterSpec& spec) {
  try {
    check_master_spec(spec);
    return true;
  } catch (const InvalidMasterSpec&) {
    return false;
  }
}

void for_each_vector(std::size_t len, std::int64_t max_entry, std::vector<std::int64_t>& cur,
                     const std::function<void()>& visit) {
  if (cur.size() == len) {
    visit();
    return;
  }
  for (std::int64_t v = 1; v <= max_entry; ++v) {
    cur.push_back(v);
    for_each_vector(len, max_entry, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void check_master_spec(const MasterSpec& spec) {
  if (spec.a.empty() || spec.b.empty()) throw InvalidMasterSpec("m and n must be at least 1");
  std::int64_t g = 0;
  for (auto v : spec.a) {
    if (v <= 0) throw InvalidMasterSpec("entries of a must be positive");
    g = std::gcd(g, v);
  }
  for (auto v : spec.b) {
    if (v <= 0) throw InvalidMasterSpec("entries of b must be positive");
    g = std::gcd(g, v);
  }
  if (g != 1) throw InvalidMasterSpec("no integer greater than 1 may divide every a_i and b_j");
  if (spec.a.size() == 1 && spec.a[0] == 1) throw InvalidMasterSpec("if m = 1 then a_1 != 1");
  if (spec.b.size() == 1 && spec.b[0] == 1) throw InvalidMasterSpec("if n = 1 then b_1 != 1");
  auto sa = std::accumulate(spec.a.begin(), spec.a.end(), std::int64_t{0});
  auto sb = std::accumulate(spec.b.begin(), spec.b.end(), std::int64_t{0});
  if (sa <= sb) throw InvalidMasterSpec("sum of a must exceed sum of b");
}

Presentation build_master_monoid(const MasterSpec& spec) {
  check_master_spec(spec);
  const std::size_t m = spec.a.size(), n = spec.b.size();
  const std::size_t dim = m + n - 1;

  Presentation p;
  p.dim = dim;
  p.label = "master a=(" + join(spec.a) + ") b=(" + join(spec.b) + ")";
  auto unit = [dim](std::size_t i) {
    RationalVector e(dim);
    e[i] = 1;
    return e;
  };
  for (std::size_t i = 0; i < m; ++i) p.generators.push_back(unit(i));
  for (std::size_t j = 0; j + 1 < n; ++j) p.generators.push_back(unit(m + j));

  RationalVector last(dim);
  for (std::size_t i = 0; i < m; ++i) last[i] = spec.a[i];
  for (std::size_t j = 0; j + 1 < n; ++j) last[m + j] = -spec.b[j];
  const Rational bn(spec.b.back());
  for (auto& x : last) x /= bn;
  p.generators.push_back(std::move(last));
  return p;
}

FactorizationRelation expected_master_relation(const MasterSpec& spec) {
  const std::size_t m = spec.a.size(), n = spec.b.size();
  FactorizationRelation rel{FactorizationVector{std::vector<std::int64_t>(m + n, 0)},
                            FactorizationVector{std::vector<std::int64_t>(m + n, 0)}};
  for (std::size_t i = 0; i < m; ++i) rel.left.multiplicities[i] = spec.a[i];
  for (std::size_t j = 0; j < n; ++j) rel.right.multiplicities[m + j] = spec.b[j];
  return rel;
}

MasterSpec pls_spec(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DomainError("pls_example requires m, n >= 1");
  MasterSpec spec;
  spec.b = n == 1 ? std::vector<std::int64_t>{2} : std::vector<std::int64_t>(n, 1);
  spec.a.assign(m, 1);
  while (!valid(spec)) ++spec.a.back();
  return spec;
}

Presentation pls_example(std::size_t m, std::size_t n) { return build_master_monoid(pls_spec(m, n)); }

std::vector<MasterSpec> all_master_specs(std::size_t max_side, std::int64_t max_entry) {
  std::vector<MasterSpec> specs;
  for (std::size_t m = 1; m <= max_side; ++m) {
    for (std::size_t n = 1; n <= max_side; ++n) {
      std::vector<std::int64_t> a, b;
      for_each_vector(m, max_entry, a, [&] {
        for_each_vector(n, max_entry, b, [&] {
          MasterSpec spec{a, b};
          if (valid(spec)) specs.push_back(std::move(spec));
        });
      });
    }
  }
  return specs;
}

std::vector<std::string> compare(const ExpectedVerdicts& expected, const ClassificationReport& report) {
  std::vector<std::string> out;
  auto check_bool = [&](const char* name, const std::optional<bool>& want, bool got) {
    if (want && *want != got) {
      out.push_back(std::string(name) + ": expected " + (*want ? "true" : "false") + ", got " +
                    (got ? "true" : "false"));
    }
  };
  auto check_set = [&](const char* name, const std::optional<std::set<std::size_t>>& want,
                       const std::set<std::size_t>& got) {
    if (want && *want != got) out.push_back(std::string(name) + ": expected " + join(*want) + ", got " + join(got));
  };
  check_bool("is_UFM", expected.is_UFM, report.is_UFM);
  check_bool("is_LFM", expected.is_LFM, report.is_LFM);
  check_bool("is_HFM", expected.is_HFM, report.is_HFM);
  check_bool("is_PLSM", expected.is_PLSM, report.is_PLSM);
  if (expected.kernel_rank && *expected.kernel_rank != report.kernel_rank) {
    out.push_back("kernel_rank: expected " + std::to_string(*expected.kernel_rank) + ", got " +
                  std::to_string(report.kernel_rank));
  }
  check_set("prime", expected.prime, report.prime);
  check_set("purely_long", expected.purely_long, report.purely_long);
  check_set("purely_short", expected.purely_short, report.purely_short);
  return out;
}

Presentation product_with_truncated_n(std::int64_t lo, std::int64_t k, std::string label) {
  Presentation p;
  p.dim = 3;
  p.label = std::move(label);
  p.generators.push_back({Rational(2), Rational(0), Rational(0)});
  p.generators.push_back({Rational(3), Rational(0), Rational(0)});
  for (std::int64_t n = lo; n <= k; ++n) {
    p.generators.push_back({Rational(0), Rational(static_cast<long>(n)), Rational(1)});
  }
  return p;
}

Presentation truncated_n(std::int64_t k) {
  Presentation p;
  p.dim = 2;
  p.label = "N0xN truncated K=" + std::to_string(k);
  for (std::int64_t n = 0; n <= k; ++n) p.generators.push_back({Rational(static_cast<long>(n)), Rational(1)});
  return p;
}

std::vector<Fixture> fixture_gallery(std::size_t truncation) {
  if (truncation < 2) throw DomainError("truncation K must be at least 2");
  const auto k = static_cast<std::int64_t>(truncation);
  const std::set<std::size_t> none;
  std::vector<Fixture> gallery;

  gallery.push_back({"two_three",
                     numerical_presentation({2, 3}, "<2,3>"),
                     {false, true, false, true, 1, none, std::set<std::size_t>{0}, std::set<std::size_t>{1}}});

  gallery.push_back({"three_four_five",
                     numerical_presentation({3, 4, 5}, "<3,4,5>"),
                     {false, false, false, false, 2, none, none, none}});

  // Product fixtures: the <2,3> part contributes the only unbalanced
  // relation; the N part only balanced ones.
  gallery.push_back({"ffm_plsm_not_lfm",
                     product_with_truncated_n(0, k, "<2,3> x (N0xN) truncated K=" + std::to_string(k)),
                     {false, false, false, true, truncation, none, std::set<std::size_t>{0},
                      std::set<std::size_t>{1}}});

  gallery.push_back({"plsm_not_ffm",
                     product_with_truncated_n(-k, k, "<2,3> x (ZxN) truncated K=" + std::to_string(k)),
                     {false, false, false, true, 2 * truncation, none, std::set<std::size_t>{0},
                      std::set<std::size_t>{1}}});

  gallery.push_back({"n_factor_hfm",
                     truncated_n(k),
                     {false, false, true, false, truncation - 1, none, none, none}});

  Presentation scaled;
  scaled.dim = 1;
  scaled.label = "<3x,4x,5x> x=1/2";
  for (long g : {3L, 4L, 5L}) scaled.generators.push_back({Rational(g, 2L)});
  for (auto& g : scaled.generators) g[0].canonicalize();
  gallery.push_back({"scaled_345", scaled, {false, false, false, false, 2, none, none, none}});
  return gallery;
}

}  // namespace factolab
