// One line per acceptance criterion: "criterion N: PASS|FAIL — detail".
//
//   acceptance [--criterion N]... [--scale S] [--workers W]
//
// --scale multiplies Monte Carlo trial counts (default 1 = full size).
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "figures.hpp"
#include "oracles.hpp"
#include "tfp/bias.hpp"
#include "tfp/error.hpp"
#include "tfp/graphon.hpp"
#include "tfp/mc_engine.hpp"
#include "tfp/sparse_models.hpp"
#include "tfp/star_graph.hpp"

namespace {

using namespace tfp;

// Tolerances and sizes.
constexpr double kErrgRelTol = 1e-12;       // 5
constexpr double kCmRelTol = 1e-12;         // 8
constexpr double kStderrBand = 4.0;         // 6, 10, 12
constexpr double kQuadConstantTol = 1e-10;  // 11
constexpr double kQuadTwoBlockTol = 1e-8;   // 11
constexpr double kZetaRatioLo = 0.9, kZetaRatioHi = 1.1;  // 7

#ifdef NDEBUG
constexpr bool kEnforceRuntime = true;
#else
constexpr bool kEnforceRuntime = false;
#endif

struct Options {
  double scale = 1.0;
  int workers = 0;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::int64_t scaled(std::int64_t trials, const Options& opt, std::int64_t floor = 100) {
  return std::max<std::int64_t>(floor, std::llround(static_cast<double>(trials) * opt.scale));
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Appends the elapsed time and, in optimised builds, fails past `limit`.
void time_limit(Outcome& o, const Stopwatch& w, double limit) {
  const double s = w.seconds();
  o.detail += fmt("; %.2fs (limit %.0fs%s)", s, limit, kEnforceRuntime ? "" : ", not enforced in debug build");
  if (kEnforceRuntime && s > limit) o.pass = false;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  const unsigned w = workers > 0 ? static_cast<unsigned>(workers) : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < w; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
    });
}

McEstimate mc(Model model, Statistic stat, std::int64_t trials, std::uint64_t seed, const Options& opt) {
  return run_mc({std::move(model), stat, trials, seed, opt.workers});
}

double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

// --- 1: golden fractions -------------------------------------------------

Outcome criterion1(const Options&) {
  Stopwatch w;
  Outcome o;
  std::vector<std::string> bad;
  auto expect = [&](const std::string& name, const Rational& got, const Rational& want) {
    if (got != want) bad.push_back(name + "=" + got.str() + " (want " + want.str() + ")");
  };
  expect("negative", triangle_bias(figures::negative_bias_graph()).average, Rational(-1, 66));
  expect("k5+triangle", triangle_bias(figures::k5_triangle()).average, Rational(13, 21));
  expect("k5+2 triangles", triangle_bias(figures::k5_two_triangles()).average, Rational(7, 18));
  expect("k5+cap", triangle_bias(figures::k5_triangle_cap()).average, Rational(7, 24));

  const auto a = PcsSpec::make(1, 1, {5});
  const auto b = PcsSpec::make(0, 3, {2});
  expect("pcs a", pcs_closed_form(a).average, Rational(17, 10));
  expect("pcs b", pcs_closed_form(b).average, Rational(121, 90));
  expect("pcs a direct", triangle_bias(build_pcs(a)).average, Rational(17, 10));
  expect("pcs b direct", triangle_bias(build_pcs(b)).average, Rational(121, 90));
  const auto glued = glue_pcs(a, resolve_vertex(a, "mid:1"), b, resolve_vertex(b, "end:0"));
  expect("glued", triangle_bias(glued).average, Rational(2581, 1710));

  const auto star = PcsSpec::make(1, 1, {});
  expect("star", triangle_bias(build_pcs(star)).average, Rational(1, 6));
  expect("four glued stars", triangle_bias(figures::four_glued_stars()).average, Rational(-1, 39));

  std::multiset<Rational> totals;
  for (const auto& [spec, total] : small_bias_catalogue(12)) totals.insert(total);
  const std::multiset<Rational> want{Rational(2, 3), Rational(2, 3), Rational(0), Rational(1)};
  if (totals != want) bad.push_back("catalogue totals differ");

  o.pass = bad.empty();
  if (o.pass) {
    o.detail = "-1/66, 13/21, 7/18, 7/24, 17/10, 121/90, 2581/1710, 1/6, -1/39, {2/3, 2/3, 0, 1} all exact";
  } else {
    for (const auto& s : bad) o.detail += (o.detail.empty() ? "" : "; ") + s;
  }
  time_limit(o, w, 1);
  return o;
}

// --- 2: closed form vs direct, all specs up to 25 vertices ---------------

Outcome criterion2(const Options& opt) {
  Stopwatch w;
  const auto specs = enumerate_pcs(25);
  std::atomic<std::size_t> mismatch{0}, negative{0};
  std::mutex m;
  std::string first;
  parallel_for(specs.size(), opt.workers, [&](std::size_t i) {
    const auto cf = pcs_closed_form(specs[i]);
    const auto direct = triangle_bias(build_pcs(specs[i])).average;
    if (cf.average != direct) {
      ++mismatch;
      std::scoped_lock lock(m);
      if (first.empty()) first = specs[i].str();
    }
    if (cf.average.sign() < 0) ++negative;
  });
  Outcome o;
  o.pass = mismatch == 0 && negative == 0 && !specs.empty();
  o.detail = fmt("%zu specs, %zu closed-form mismatches, %zu negative", specs.size(), mismatch.load(), negative.load());
  if (!first.empty()) o.detail += " (first mismatch " + first + ")";
  time_limit(o, w, 30);
  return o;
}

// --- 3: gluing sweep -----------------------------------------------------

Outcome criterion3(const Options& opt) {
  Stopwatch w;
  std::vector<PcsInstance> pool;
  for (auto& s : enumerate_pcs(12)) pool.emplace_back(std::move(s));
  std::atomic<std::uint64_t> gluings{0}, identity_fail{0}, negative{0}, bound_fail{0};
  parallel_for(pool.size(), opt.workers, [&](std::size_t i) {
    const auto& g1 = pool[i];
    std::uint64_t local = 0, idf = 0, neg = 0, bf = 0;
    for (const auto& g2 : pool) {
      for (Vertex v1 = 1; v1 <= static_cast<Vertex>(g1.spec.ring_size()); ++v1) {
        for (Vertex v2 = 1; v2 <= static_cast<Vertex>(g2.spec.ring_size()); ++v2) {
          const auto d = nb_decomposition(g1, v1, g2, v2);
          const auto parts = d.old_total_1 + d.old_total_2 + d.center_gain + d.glue_vertex_loss + d.neighbor_correction;
          const auto direct = total_triangle_bias(glue(g1.graph, v1, g2.graph, v2));
          if (parts != d.new_total || direct != d.new_total) ++idf;
          if (direct.sign() < 0) ++neg;
          if (d.new_total < d.lower_bound()) ++bf;
          ++local;
        }
      }
    }
    gluings += local;
    identity_fail += idf;
    negative += neg;
    bound_fail += bf;
  });
  Outcome o;
  o.pass = identity_fail == 0 && negative == 0 && bound_fail == 0;
  o.detail = fmt("%zu specs, %llu gluings: %llu identity failures, %llu negative averages, %llu bound violations",
                 pool.size(), static_cast<unsigned long long>(gluings.load()),
                 static_cast<unsigned long long>(identity_fail.load()), static_cast<unsigned long long>(negative.load()),
                 static_cast<unsigned long long>(bound_fail.load()));
  time_limit(o, w, 120);
  return o;
}

// --- 4: small-bias catalogue --------------------------------------------

Outcome criterion4(const Options&) {
  Stopwatch w;
  const auto cat = small_bias_catalogue(12);
  std::map<PcsSpec, Rational> got(cat.begin(), cat.end());
  const std::map<PcsSpec, Rational> want{{PcsSpec::make(1, 1, {}), Rational(2, 3)},
                                         {PcsSpec::make(0, 0, {2}), Rational(2, 3)},
                                         {PcsSpec::make(0, 1, {}), Rational(0)},
                                         {PcsSpec::make(0, 2, {}), Rational(1)}};
  Outcome o;
  o.pass = got == want && cat.size() == 4;
  std::string list;
  for (const auto& [spec, total] : cat) list += (list.empty() ? "" : ", ") + spec.str() + "=" + total.str();
  o.detail = fmt("%zu graphs: ", cat.size()) + list;
  time_limit(o, w, 1);
  return o;
}

// --- 5: ERRG exact vs brute force --------------------------------------

Outcome criterion5(const Options&) {
  Stopwatch w;
  Outcome o;
  double worst = 0;
  int cases = 0;
  bool zeros_ok = true;
  for (std::int64_t n : {3, 4, 5}) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)}) {
      const Rational oracle = errg_brute_force_mean(n, p);
      const double formula = errg_exact_mean_tfb(ErrgParams::from_p(n, p.to_double()));
      const Rational exact = errg_exact_mean_tfb(n, p);
      worst = std::max(worst, rel_err(formula, oracle.to_double()));
      if (exact != oracle) worst = std::max(worst, 1.0);
      if ((n == 3 || p == Rational(1)) && (!oracle.is_zero() || formula != 0.0)) zeros_ok = false;
      ++cases;
    }
  }
  o.pass = worst < kErrgRelTol && zeros_ok;
  o.detail = fmt("%d cases, worst relative error %.3g (tol %.0e), n=3 / p=1 exactly zero: %s", cases, worst,
                 kErrgRelTol, zeros_ok ? "yes" : "no");
  time_limit(o, w, 5);
  return o;
}

// --- 6: ERRG Monte Carlo ------------------------------------------------

Outcome criterion6(const Options& opt) {
  Outcome o;
  const auto trials = scaled(100000, opt);
  double worst = 0;
  std::uint64_t seed = 600;
  for (std::int64_t n : {10, 30, 50}) {
    for (double lambda : {1.0, 2.0, 4.0}) {
      const auto params = ErrgParams::from_lambda(n, lambda);
      const auto est = mc(ErrgModel{params}, Statistic::average(), trials, ++seed, opt);
      const double z = std::abs(est.mean - errg_exact_mean_tfb(params)) / est.standard_error;
      worst = std::max(worst, z);
      if (z > kStderrBand) {
        o.pass = false;
        o.detail += fmt("n=%lld lambda=%g off by %.2f stderr; ", static_cast<long long>(n), lambda, z);
      }
    }
  }
  o.detail += fmt("9 configurations x %lld trials, worst |MC - exact| = %.2f stderr (band %.0f)",
                  static_cast<long long>(trials), worst, kStderrBand);
  return o;
}

// --- 7: zeta(lambda) ----------------------------------------------------

Outcome criterion7(const Options&) {
  Outcome o;
  int increases = 0;
  double prev = -1;
  bool monotone = true;
  for (int i = 0; i < 200; ++i) {
    const double lambda = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
    const double z = zeta_errg(lambda);
    if (i > 0 && !(z > prev)) monotone = false;
    if (i > 0 && z > prev) ++increases;
    prev = z;
  }
  const double ratio = zeta_errg(0.01) / (0.5 * std::pow(0.01, 4));

  bool converging = true;
  std::string gaps;
  for (double lambda : {1.0, 4.0}) {
    double last = INFINITY;
    for (std::int64_t n : {100, 1000, 10000}) {
      const double gap = std::abs(n * errg_exact_mean_tfb(ErrgParams::from_lambda(n, lambda)) - zeta_errg(lambda));
      if (!(gap < last)) converging = false;
      last = gap;
      gaps += fmt("%s%.3g", gaps.empty() || gaps.back() == ' ' ? "" : ",", gap);
    }
    gaps += " ";
  }
  const bool ratio_ok = ratio >= kZetaRatioLo && ratio <= kZetaRatioHi;
  o.pass = monotone && ratio_ok && converging;
  o.detail = fmt("strictly increasing on 200-point log grid: %s (%d/199 steps); ", monotone ? "yes" : "no", increases) +
             fmt("zeta(0.01)/(0.5*0.01^4) = %.4f, required [%.1f, %.1f]: %s; ", ratio, kZetaRatioLo, kZetaRatioHi,
                 ratio_ok ? "ok" : "FAIL (small-lambda asymptote is lambda^4/3)") +
             "|n E - zeta| for lambda=1,4: " + gaps + (converging ? "decreasing" : "NOT decreasing");
  return o;
}

// --- 8: CM exact vs matching enumeration --------------------------------

void partitions(int remaining, int max_part, std::vector<std::int64_t>& cur,
                std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

Outcome criterion8(const Options&) {
  Stopwatch w;
  Outcome o;
  std::vector<std::vector<std::int64_t>> seqs;
  for (int m1 : {8, 10, 12}) {
    std::vector<std::int64_t> cur;
    partitions(m1, m1, cur, seqs);
  }
  double worst = 0;
  int exact_mismatch = 0;
  bool have_named = false;
  for (const auto& s : seqs) {
    const DegreeSequence ds(s);
    const Rational oracle = cm_brute_force_mean(ds);
    if (cm_exact_mean_tfb_exact(ds) != oracle) ++exact_mismatch;
    worst = std::max(worst, rel_err(cm_exact_mean_tfb(ds), oracle.to_double()));
    if (s == std::vector<std::int64_t>{3, 3, 2, 1, 1} || s == std::vector<std::int64_t>{2, 2, 2, 2, 2}) {
      have_named = true;
    }
  }
  // d-regular: n E[bias] along a growing n, and zeta at (d, d^2, d^3).
  bool regular_ok = true;
  double worst_regular_zeta = 0;
  for (int d = 2; d <= 8; ++d) {
    for (std::int64_t n : {10, 100, 1000}) {
      if ((n * d) % 2 != 0) continue;
      const auto ds = DegreeSequence::from_named("regular:" + std::to_string(d), n);
      if (!cm_exact_mean_tfb_exact(ds).is_zero()) regular_ok = false;
    }
    worst_regular_zeta = std::max(worst_regular_zeta, std::abs(zeta_cm(d, d * d, d * d * d)));
  }
  if (worst_regular_zeta != 0) regular_ok = false;
  o.pass = worst < kCmRelTol && exact_mismatch == 0 && have_named && regular_ok;
  o.detail = fmt("%zu sequences with m1 in {8,10,12}, worst relative error %.3g (tol %.0e), %d exact mismatches; ",
                 seqs.size(), worst, kCmRelTol, exact_mismatch) +
             fmt("d-regular (d=2..8): n E[bias] = 0 exactly for n=10..1000: %s, max |zeta(d,d^2,d^3)| = %g",
                 regular_ok ? "yes" : "no", worst_regular_zeta);
  time_limit(o, w, 60);
  return o;
}

// --- 9: zeta(c1,c2,c3) >= 0 ---------------------------------------------

Outcome criterion9(const Options&) {
  Outcome o;
  // Integer weights, so the moments and the sign of zeta are exact.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> weight(1, 1000);
  std::bernoulli_distribution keep(0.6);
  auto zeta_exact = [](const Rational& c1, const Rational& c2, const Rational& c3) {
    const Rational d = c2 - c1;
    return d * d / (Rational(2) * c1 * c1 * c1 * c1) * ((c3 - c1 * c2) - Rational(3) * (c2 - c1 * c1));
  };
  int negative = 0, zero_nondegenerate = 0;
  double worst_float = 0, smallest = INFINITY;
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<std::int64_t> w(8);
    int support = 0;
    while (support < 2) {
      support = 0;
      for (auto& x : w) {
        x = keep(rng) ? weight(rng) : 0;
        support += x > 0;
      }
    }
    std::int64_t total = 0;
    for (auto x : w) total += x;
    Rational c1, c2, c3;
    for (std::int64_t k = 1; k <= 8; ++k) {
      const Rational q(w[k - 1], total);
      c1 += q * Rational(k);
      c2 += q * Rational(k * k);
      c3 += q * Rational(k * k * k);
    }
    const Rational z = zeta_exact(c1, c2, c3);
    if (z.sign() < 0) ++negative;
    if (z.is_zero()) ++zero_nondegenerate;
    smallest = std::min(smallest, z.to_double());
    const double zf = zeta_cm(c1.to_double(), c2.to_double(), c3.to_double());
    worst_float = std::max(worst_float, std::abs(zf - z.to_double()) / std::max(1.0, std::abs(z.to_double())));
  }
  int degenerate_nonzero = 0;
  for (int d = 1; d <= 8; ++d)
    if (zeta_cm(d, d * d, d * d * d) != 0) ++degenerate_nonzero;
  o.pass = negative == 0 && zero_nondegenerate == 0 && degenerate_nonzero == 0 && worst_float < 1e-12;
  o.detail = fmt("500 non-degenerate distributions on {1..8} (exact moments): %d negative, %d zero, min %.3g; "
                 "double evaluation max error %.2g; point masses d=1..8 give 0: %s",
                 negative, zero_nondegenerate, smallest, worst_float, degenerate_nonzero == 0 ? "yes" : "no");
  return o;
}

// --- 10: triangle-free probability --------------------------------------

Outcome criterion10(const Options& opt) {
  Outcome o;
  const auto trials = scaled(10000, opt);
  std::uint64_t seed = 1000;
  std::string parts;
  auto check = [&](const std::string& label, Model model, double limit) {
    const auto est = mc(std::move(model), Statistic::triangle_free(), trials, ++seed, opt);
    const double z = std::abs(est.mean - limit) / est.standard_error;
    if (z > kStderrBand) o.pass = false;
    parts += fmt("%s %.4f vs %.4f (%.2f se); ", label.c_str(), est.mean, limit, z);
  };
  for (double lambda : {0.5, 1.0, 2.0})
    check(fmt("ERRG lambda=%g:", lambda), ErrgModel{ErrgParams::from_lambda(2000, lambda)},
          triangle_free_limit_errg(lambda));
  for (const char* name : {"regular:3", "two-point:1,4,0.5"}) {
    auto ds = DegreeSequence::from_named(name, 2000);
    const double c1 = ds.normalized_moment(1), c2 = ds.normalized_moment(2);
    check(std::string("CM ") + name + ":", CmModel{std::move(ds)}, triangle_free_limit_cm(c1, c2));
  }
  o.detail = parts + fmt("n=2000, %lld trials each, band %.0f stderr", static_cast<long long>(trials), kStderrBand);
  return o;
}

// --- 11: graphon chi -----------------------------------------------------

Outcome criterion11(const Options&) {
  Outcome o;
  // Constant kernel through the generic quadrature path.
  double worst_const = 0;
  for (double p : {0.1, 0.3, 0.5, 0.9}) {
    const FunctionGraphon f{[p](double, double) { return p; }, {}, "constant"};
    worst_const = std::max({worst_const, std::abs(chi_t_quadrature(f, 256)),
                            std::abs(chi_t_quadrature(ConstantGraphon{p}, 256))});
  }
  // Closed form vs quadrature of the same kernel given as a plain function.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.05, 1.0), up(0.05, 0.95);
  double worst_tb = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const double a = u(rng), b = u(rng), g = u(rng), p = up(rng);
    const FunctionGraphon f{[=](double x, double y) {
                              const bool lx = x < p, ly = y < p;
                              return lx && ly ? a : (!lx && !ly ? b : g);
                            },
                            {p}, "two_block"};
    worst_tb = std::max(worst_tb, std::abs(two_block_chi(a, b, g, p).product - chi_t_quadrature(f, 512)));
  }
  // Sign regimes.
  int half_bad = 0, ordered_bad = 0, negative_bad = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const double a = u(rng), b = u(rng), g = u(rng);
    if (two_block_chi(a, b, g, 0.5).product < 0) ++half_bad;
    std::array<double, 3> s{u(rng), u(rng), u(rng)};
    std::sort(s.begin(), s.end());
    const double p = up(rng);
    if (!(two_block_chi(s[0], s[2], s[1], p).product > 0)) ++ordered_bad;  // beta > gamma > alpha
    if (!(two_block_chi(s[2], s[0], s[1], p).product > 0)) ++ordered_bad;  // beta < gamma < alpha
    const double bb = s[0], gg = s[2];
    if (bb < gg) {
      const double lo = (gg * gg - bb * bb) / (2 * gg * gg), hi = (gg - bb) / gg;
      if (lo < hi) {
        const double r = lo + (hi - lo) * std::uniform_real_distribution<double>(0.01, 0.99)(rng);
        if (!(two_block_chi(0, bb, gg, r / (1 + r)).product < 0)) ++negative_bad;
      }
    }
  }
  const double example = two_block_chi(0, 0.25, 0.5, 10.0 / 33).product;
  if (!(example < 0)) ++negative_bad;
  o.pass = worst_const < kQuadConstantTol && worst_tb < kQuadTwoBlockTol && half_bad == 0 && ordered_bad == 0 &&
           negative_bad == 0;
  o.detail = fmt("constant |chi| <= %.2g (tol %.0e); two-block closed form vs quadrature max diff %.2g over 50 tuples "
                 "(tol %.0e); p=1/2 negatives %d, ordered-regime non-positives %d, negative-regime failures %d; "
                 "chi(p=10/33, 0, 1/4, 1/2) = %.4g",
                 worst_const, kQuadConstantTol, worst_tb, kQuadTwoBlockTol, half_bad, ordered_bad, negative_bad,
                 example);
  return o;
}

// --- 12: dense convergence ----------------------------------------------

Outcome criterion12(const Options& opt) {
  Outcome o;
  const auto samples = scaled(200, opt, 20);
  const TwoBlockGraphon tb{0.1, 0.3, 0.8, 0.4};
  const double chi = chi_t(tb);
  std::vector<double> gaps;
  double mean400 = 0;
  std::string parts = fmt("TwoBlock(0.1,0.3,0.8,0.4) chi=%.4g: ", chi);
  std::uint64_t seed = 1200;
  for (std::int64_t n : {100, 200, 400}) {
    const auto est = mc(GraphonModel{n, tb}, Statistic::scaled(2), samples, ++seed, opt);
    gaps.push_back(std::abs(est.mean - chi));
    mean400 = est.mean;
    parts += fmt("n=%lld mean %.4g +- %.2g; ", static_cast<long long>(n), est.mean, est.standard_error);
  }
  const bool shrinking = gaps[0] > gaps[1] && gaps[1] > gaps[2];
  const bool negative = mean400 < 0;
  parts += fmt("gap shrinks: %s; n=400 mean negative: %s", shrinking ? "yes" : "no",
               negative ? "yes" : "no (finite-n correction ~0.081/n dominates |chi|)");

  bool constant_ok = true;
  const double p = 0.3;
  parts += fmt("; Constant(0.3), limit p^2(1-p)=%.4g:", errg_dense_limit(p));
  for (std::int64_t n : {200, 400}) {
    const auto est = mc(GraphonModel{n, ConstantGraphon{p}}, Statistic::scaled(1), samples, ++seed, opt);
    const double trend = errg_exact_mean_tfb(ErrgParams::from_p(n, p)) / static_cast<double>(n);
    const double z = std::abs(est.mean - trend) / est.standard_error;
    if (z > kStderrBand) constant_ok = false;
    parts += fmt(" n=%lld %.5g vs %.5g (%.2f se)", static_cast<long long>(n), est.mean, trend, z);
  }
  o.pass = shrinking && negative && constant_ok;
  o.detail = parts + fmt("; %lld samples per n", static_cast<long long>(samples));
  return o;
}

// --- 13: property suites --------------------------------------------------

Outcome criterion13(const Options&) {
  Stopwatch w;
  Outcome o;
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> size(2, 40);
  std::uniform_real_distribution<double> dens(0.02, 0.6);
  int fp_neg = 0, cov_bad = 0, wedge_neg = 0, mono_neg = 0, tri_bad = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const auto n = static_cast<std::size_t>(size(rng));
    const auto g = rep % 2 == 0 ? oracle::random_simple_graph(n, dens(rng), rng)
                                : oracle::random_multigraph(n, std::uniform_int_distribution<std::size_t>(1, 3 * n)(rng), rng);
    const auto deg = degree_bias(g);
    if (deg.average.sign() < 0) ++fp_neg;
    if (wedge_bias(g).average.sign() < 0) ++wedge_neg;

    // Monotone attribute: a random non-decreasing function of the degree.
    std::vector<Rational> table(2 * g.edge_count() + 2);
    std::int64_t acc = 0;
    for (auto& t : table) {
      acc += std::uniform_int_distribution<int>(0, 3)(rng);
      t = Rational(acc, 1);
    }
    std::vector<Rational> x(g.vertex_count());
    for (Vertex i = 0; i < g.vertex_count(); ++i) x[i] = table[g.degree(i)];
    if (attribute_bias(g, x).average.sign() < 0) ++mono_neg;

    // Covariance identity needs every vertex to have an edge.
    const auto h = oracle::without_isolated(g, rng);
    std::vector<Rational> y(h.vertex_count());
    for (auto& v : y) v = Rational(std::uniform_int_distribution<int>(-20, 20)(rng), 1);
    if (covariance_bias(h, y) != attribute_bias(h, y).average) ++cov_bad;
  }
  for (int rep = 0; rep < 500; ++rep) {
    const auto n = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 10)(rng));
    const auto g = rep % 2 == 0 ? oracle::random_simple_graph(n, dens(rng), rng)
                                : oracle::random_multigraph(n, std::uniform_int_distribution<std::size_t>(0, 4 * n)(rng), rng);
    const auto a = oracle::dense(g);
    const auto t = triangle_counts(g);
    std::int64_t sum = 0;
    for (auto v : t) sum += v;
    if (t != oracle::triangles(a) || sum != 3 * oracle::triangle_total(a)) ++tri_bad;
  }
  o.pass = fp_neg + cov_bad + wedge_neg + mono_neg + tri_bad == 0;
  o.detail = fmt("1000 random graphs (n<=40): degree-bias negatives %d, covariance mismatches %d, wedge negatives %d, "
                 "monotone-attribute negatives %d; 500 graphs (n<=10) triangle-sum mismatches %d",
                 fp_neg, cov_bad, wedge_neg, mono_neg, tri_bad);
  time_limit(o, w, 60);
  return o;
}

const std::map<int, Outcome (*)(const Options&)> kCriteria{
    {1, criterion1},  {2, criterion2},   {3, criterion3},   {4, criterion4},  {5, criterion5},
    {6, criterion6},  {7, criterion7},   {8, criterion8},   {9, criterion9},  {10, criterion10},
    {11, criterion11}, {12, criterion12}, {13, criterion13}};

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto value = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << arg << " needs a value\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--criterion") {
      selected.push_back(std::stoi(value()));
    } else if (arg == "--scale") {
      opt.scale = std::stod(value());
    } else if (arg == "--workers") {
      opt.workers = std::stoi(value());
    } else {
      std::cerr << "usage: acceptance [--criterion N]... [--scale S] [--workers W]\n";
      return 2;
    }
  }
  if (selected.empty())
    for (const auto& [id, fn] : kCriteria) selected.push_back(id);

  bool all = true;
  for (int id : selected) {
    const auto it = kCriteria.find(id);
    if (it == kCriteria.end()) {
      std::cerr << "no criterion " << id << "\n";
      return 2;
    }
    Outcome out;
    try {
      out = it->second(opt);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    all = all && out.pass;
    std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << " — " << out.detail << std::endl;
  }
  return all ? 0 : 1;
}
