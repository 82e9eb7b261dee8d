#include "tfp/sparse_models.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <string>

#include "tfp/bias.hpp"
#include "tfp/error.hpp"

namespace tfp {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InputError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

double parse_real(std::string_view s, std::string_view what) {
  std::string str(s);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != str.size()) throw InputError("bad " + std::string(what) + ": '" + str + "'");
  return v;
}

Rational rpow(const Rational& base, std::int64_t e) {
  Rational r(1);
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

// (1-p)^m without cancellation at small p.
double one_minus_p_pow(double p, double m) {
  if (p >= 1.0) return m == 0 ? 1.0 : 0.0;
  return std::exp(m * std::log1p(-p));
}

}  // namespace

ErrgParams ErrgParams::from_lambda(std::int64_t n, double lambda) {
  if (n < 1) throw DomainError("ERRG needs n >= 1");
  if (!(lambda > 0) || lambda > static_cast<double>(n)) {
    throw DomainError("ERRG needs 0 < lambda <= n, got lambda = " + std::to_string(lambda));
  }
  return {n, lambda / static_cast<double>(n)};
}

ErrgParams ErrgParams::from_p(std::int64_t n, double p) {
  if (n < 1) throw DomainError("ERRG needs n >= 1");
  if (!(p >= 0 && p <= 1)) throw DomainError("ERRG needs 0 <= p <= 1, got p = " + std::to_string(p));
  return {n, p};
}

DegreeSequence::DegreeSequence(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw InputError("empty degree sequence");
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 1) {
      throw InputError("degree of vertex " + std::to_string(i) + " is " + std::to_string(degrees_[i]) +
                       "; degrees must be positive");
    }
    half_edges_ += degrees_[i];
  }
  if (half_edges_ % 2 != 0) throw InputError("degree sum " + std::to_string(half_edges_) + " is odd");
}

DegreeSequence DegreeSequence::from_named(std::string_view name, std::int64_t n) {
  if (n < 1) throw InputError("named degree sequence needs n >= 1");
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) throw InputError("expected 'regular:d' or 'two-point:a,b,frac'");
  const auto kind = name.substr(0, colon);
  const auto args = name.substr(colon + 1);
  if (kind == "regular") {
    const auto d = parse_int(args, "degree");
    return DegreeSequence(std::vector<std::int64_t>(static_cast<std::size_t>(n), d));
  }
  if (kind == "two-point") {
    const auto c1 = args.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : args.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw InputError("two-point needs 'a,b,frac'");
    const auto a = parse_int(args.substr(0, c1), "degree a");
    const auto b = parse_int(args.substr(c1 + 1, c2 - c1 - 1), "degree b");
    const auto frac = parse_real(args.substr(c2 + 1), "fraction");
    if (!(frac >= 0 && frac <= 1)) throw InputError("two-point fraction must lie in [0, 1]");
    const auto na = static_cast<std::int64_t>(std::llround(frac * static_cast<double>(n)));
    std::vector<std::int64_t> d(static_cast<std::size_t>(n), b);
    std::fill_n(d.begin(), na, a);
    return DegreeSequence(std::move(d));
  }
  throw InputError("unknown degree distribution '" + std::string(kind) + "'");
}

DegreeSequence DegreeSequence::read(std::istream& in) {
  std::vector<std::int64_t> d;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      d.push_back(parse_int(std::string_view(line).substr(first, last - first + 1), "degree"));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return DegreeSequence(std::move(d));
}

DegreeSequence DegreeSequence::read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open degree file " + path.string());
  return read(in);
}

Rational DegreeSequence::moment(int k) const {
  Rational m;
  for (auto d : degrees_) m += rpow(Rational(d), k);
  return m;
}

double DegreeSequence::normalized_moment(int k) const {
  double m = 0;
  for (auto d : degrees_) m += std::pow(static_cast<double>(d), k);
  return m / static_cast<double>(degrees_.size());
}

Multigraph sample_errg(const ErrgParams& params, Rng& rng) {
  const auto n = static_cast<std::size_t>(params.n);
  MultigraphBuilder b(n);
  if (params.p <= 0 || n < 2) return b.build();
  if (params.p >= 1) return make_complete_graph(n);
  // Skip sampling over the lower triangle (v, w), w < v, in row-major order.
  std::geometric_distribution<std::int64_t> skip(params.p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    w += 1 + skip(rng);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(w));
  }
  return b.build();
}

Multigraph sample_errg(const ErrgParams& params, std::uint64_t seed) {
  auto rng = make_rng(seed);
  return sample_errg(params, rng);
}

double errg_exact_mean_tfb(const ErrgParams& params) {
  if (params.n < 3) throw DomainError("exact ERRG mean needs n >= 3");
  const double n = static_cast<double>(params.n);
  const double p = params.p;
  const double q = one_minus_p_pow(p, n - 1);
  const double p2 = p * p;
  const double p3 = p2 * p;
  return 0.5 * (n - 2) * (n - 3) * p3 * (1 - q) + (n - 1) * p2 - p + p * q - 0.5 * (n - 1) * (n - 2) * p3;
}

Rational errg_exact_mean_tfb(std::int64_t n, const Rational& p) {
  if (n < 3) throw DomainError("exact ERRG mean needs n >= 3");
  if (p < Rational(0) || p > Rational(1)) throw DomainError("p must lie in [0, 1]");
  const Rational q = rpow(Rational(1) - p, n - 1);
  const Rational p3 = p * p * p;
  const Rational half(1, 2);
  return half * Rational((n - 2) * (n - 3)) * p3 * (Rational(1) - q) + Rational(n - 1) * p * p - p + p * q -
         half * Rational((n - 1) * (n - 2)) * p3;
}

Rational errg_brute_force_mean(std::int64_t n, const Rational& p) {
  if (n < 1 || n > 5) throw DomainError("ERRG enumeration supports 1 <= n <= 5");
  if (p < Rational(0) || p > Rational(1)) throw DomainError("p must lie in [0, 1]");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const auto pair_count = static_cast<int>(pairs.size());
  const Rational q = Rational(1) - p;
  std::vector<Rational> p_pow(pair_count + 1, Rational(1));
  std::vector<Rational> q_pow(pair_count + 1, Rational(1));
  for (int e = 1; e <= pair_count; ++e) {
    p_pow[e] = p_pow[e - 1] * p;
    q_pow[e] = q_pow[e - 1] * q;
  }
  Rational mean;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint32_t mask = 0; mask < (1u << pair_count); ++mask) {
    edges.clear();
    for (int e = 0; e < pair_count; ++e)
      if (mask & (1u << e)) edges.push_back(pairs[e]);
    const auto e = static_cast<int>(edges.size());
    const Rational weight = p_pow[e] * q_pow[pair_count - e];
    if (weight.is_zero()) continue;
    mean += weight * triangle_bias(make_simple_graph(static_cast<std::size_t>(n), edges)).average;
  }
  return mean;
}

double zeta_errg(double lambda) {
  if (!(lambda > 0)) throw DomainError("zeta needs lambda > 0");
  if (lambda < 0.5) {
    // Taylor series: the lambda^2 and lambda^3 terms cancel, leaving lambda^4 / 3 + ...
    // coefficient of lambda^m (m >= 4): (-1)^(m-1) [1/(m-1)! - 1/(2 (m-3)!)].
    double sum = 0;
    double inv_fact_m1 = 1.0 / 6.0;  // 1/3!
    double inv_fact_m3 = 1.0;        // 1/1!
    double power = lambda * lambda * lambda * lambda;
    for (int m = 4; m < 40; ++m) {
      const double sign = (m % 2 == 0) ? -1.0 : 1.0;
      sum += sign * (inv_fact_m1 - 0.5 * inv_fact_m3) * power;
      power *= lambda;
      inv_fact_m1 /= m;
      inv_fact_m3 /= (m - 2);
    }
    return sum;
  }
  return lambda * lambda - lambda + (lambda - 0.5 * lambda * lambda * lambda) * std::exp(-lambda);
}

Multigraph sample_cm(const DegreeSequence& ds, Rng& rng) {
  std::vector<Vertex> half;
  half.reserve(static_cast<std::size_t>(ds.half_edges()));
  const auto& d = ds.degrees();
  for (std::size_t i = 0; i < d.size(); ++i) half.insert(half.end(), static_cast<std::size_t>(d[i]), static_cast<Vertex>(i));
  std::shuffle(half.begin(), half.end(), rng);
  MultigraphBuilder b(d.size());
  for (std::size_t h = 0; h + 1 < half.size(); h += 2) b.add_edge(half[h], half[h + 1]);
  return b.build();
}

Multigraph sample_cm(const DegreeSequence& ds, std::uint64_t seed) {
  auto rng = make_rng(seed);
  return sample_cm(ds, rng);
}

Rational cm_exact_mean_tfb_exact(const DegreeSequence& ds) {
  const std::int64_t m1i = ds.half_edges();
  if (m1i <= 7) throw DomainError("exact CM mean needs m1 > 7, got m1 = " + std::to_string(m1i));
  const Rational n(static_cast<std::int64_t>(ds.size()));
  const Rational m1 = ds.moment(1);
  const Rational m2 = ds.moment(2);
  const Rational m3 = ds.moment(3);
  const Rational m4 = ds.moment(4);
  const Rational m5 = ds.moment(5);
  const Rational m6 = ds.moment(6);
  const Rational m7 = ds.moment(7);
  const Rational a1 = 6 * m1 * m3 - 18 * m1 * m4 + 14 * m1 * m5 - 2 * m1 * m6 + 4 * m2 * m3 - 8 * m2 * m4 +
                      4 * m3 * m3;
  const Rational a2 = -14 * m1 * m2 * m3 + 3 * m1 * m2 * m4 - 9 * m1 * m1 * m2 + 18 * m1 * m1 * m3 -
                      5 * m1 * m1 * m4 + 3 * m1 * m2 * m2 + 4 * m2 * m2 * m2;
  const Rational a3 = -7 * m1 * m1 * m1 * m2 - m1 * m2 * m2 * m2 + 5 * m1 * m1 * m2 * m2 + 3 * m1 * m1 * m1 * m1;
  const Rational b1 = 2 * m7 - 10 * m6 + 14 * m5 - 6 * m4;
  const Rational b2 = 6 * m1 * m3 - 8 * m1 * m4 + 2 * m1 * m5 - 13 * m2 * m3 + 11 * m2 * m4 - 2 * m2 * m5 -
                      m3 * m4 + 3 * m2 * m2 + 2 * m3 * m3;
  const Rational b3 = -2 * m1 * m2 * m3 - 3 * m1 * m1 * m2 + m1 * m1 * m3 + 6 * m1 * m2 * m2 + m2 * m2 * m3 -
                      3 * m2 * m2 * m2;
  const Rational denom = 2 * (m1 - 1) * (m1 - 3) * (m1 - 5) * (m1 - 7);
  return ((a1 + a2 + a3) / n + b1 + b2 + b3) / denom;
}

double cm_exact_mean_tfb(const DegreeSequence& ds) { return cm_exact_mean_tfb_exact(ds).to_double(); }

Rational cm_brute_force_mean(const DegreeSequence& ds) {
  const auto m1 = ds.half_edges();
  if (m1 > 12) throw DomainError("matching enumeration supports m1 <= 12, got " + std::to_string(m1));
  const auto& d = ds.degrees();
  const auto n = static_cast<std::int64_t>(d.size());
  std::vector<Vertex> half;
  for (std::size_t i = 0; i < d.size(); ++i) half.insert(half.end(), static_cast<std::size_t>(d[i]), static_cast<Vertex>(i));
  std::vector<bool> used(half.size(), false);
  std::vector<std::pair<Vertex, Vertex>> pairing;
  Rational sum;
  std::int64_t count = 0;
  // Pair the lowest unused half-edge with every later unused one.
  auto recurse = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < half.size() && used[first]) ++first;
    if (first == half.size()) {
      MultigraphBuilder b(d.size());
      for (auto [u, v] : pairing) b.add_edge(u, v);
      sum += total_triangle_bias(b.build());
      ++count;
      return;
    }
    used[first] = true;
    for (std::size_t other = first + 1; other < half.size(); ++other) {
      if (used[other]) continue;
      used[other] = true;
      pairing.emplace_back(half[first], half[other]);
      self(self);
      pairing.pop_back();
      used[other] = false;
    }
    used[first] = false;
  };
  recurse(recurse);
  return sum / Rational(count * n);
}

double zeta_cm(double c1, double c2, double c3) {
  if (!(c1 > 0)) throw DomainError("zeta_cm needs c1 > 0");
  const double c1_4 = c1 * c1 * c1 * c1;
  return (c2 - c1) * (c2 - c1) / (2 * c1_4) * ((c3 - c1 * c2) - 3 * (c2 - c1 * c1));
}

double triangle_free_limit_errg(double lambda) {
  if (!(lambda > 0)) throw DomainError("triangle-free limit needs lambda > 0");
  return std::exp(-lambda * lambda * lambda / 6);
}

double cm_triangle_rate(double c1, double c2) {
  if (!(c1 > 0)) throw DomainError("nu needs c1 > 0");
  return (c2 - c1) / c1;
}

double triangle_free_limit_cm(double c1, double c2) {
  const double nu = cm_triangle_rate(c1, c2);
  return std::exp(-nu * nu * nu / 6);
}

double errg_dense_limit(double p) { return p * p * (1 - p); }

double cm_dense_limit(double c1, double c2, double c3) {
  if (!(c1 > 0)) throw DomainError("dense CM limit needs c1 > 0");
  return c2 * c2 * (c3 - c1 * c2) / (2 * c1 * c1 * c1 * c1);
}

}  // namespace tfp
