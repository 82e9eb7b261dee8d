#include "tfp/mc_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "tfp/bias.hpp"
#include "tfp/error.hpp"

namespace tfp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void rethrow_with_trial(const std::exception_ptr& error, std::int64_t index) {
  const std::string prefix = "trial " + std::to_string(index) + ": ";
  try {
    std::rethrow_exception(error);
  } catch (const InputError& e) {
    throw InputError(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(prefix + e.what());
  } catch (const std::exception& e) {
    throw InvariantError(prefix + e.what());
  }
}

}  // namespace

std::string describe(const Model& model) {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{[&](const ErrgModel& m) { os << "errg(n=" << m.params.n << ",p=" << m.params.p << ")"; },
                        [&](const CmModel& m) {
                          os << "cm(n=" << m.degrees.size() << ",m1=" << m.degrees.half_edges() << ")";
                        },
                        [&](const GraphonModel& m) { os << "graphon(" << kind_name(m.graphon) << ",n=" << m.n << ")"; }},
             model);
  return os.str();
}

std::int64_t vertex_count(const Model& model) {
  return std::visit(overloaded{[](const ErrgModel& m) { return m.params.n; },
                               [](const CmModel& m) { return static_cast<std::int64_t>(m.degrees.size()); },
                               [](const GraphonModel& m) { return m.n; }},
                    model);
}

Multigraph sample(const Model& model, Rng& rng) {
  return std::visit(overloaded{[&](const ErrgModel& m) { return sample_errg(m.params, rng); },
                               [&](const CmModel& m) { return sample_cm(m.degrees, rng); },
                               [&](const GraphonModel& m) { return sample_graphon_graph(m.n, m.graphon, rng); }},
                    model);
}

std::string Statistic::str() const {
  switch (kind) {
    case StatisticKind::average_tfb: return "average_tfb";
    case StatisticKind::scaled_tfb: return "scaled_tfb(" + std::to_string(power) + ")";
    case StatisticKind::triangle_free_indicator: return "triangle_free_indicator";
  }
  return "unknown";
}

double evaluate(const Statistic& statistic, const Multigraph& g) {
  switch (statistic.kind) {
    case StatisticKind::average_tfb: return average_triangle_bias_f64(g);
    case StatisticKind::scaled_tfb: {
      if (statistic.power < -1 || statistic.power > 2) throw DomainError("scaling power must be -1, 0, 1 or 2");
      const double n = static_cast<double>(g.vertex_count());
      return average_triangle_bias_f64(g) * std::pow(n, -statistic.power);
    }
    case StatisticKind::triangle_free_indicator: {
      const auto t = triangle_counts(g);
      return std::all_of(t.begin(), t.end(), [](std::int64_t v) { return v == 0; }) ? 1.0 : 0.0;
    }
  }
  throw InvariantError("unknown statistic");
}

double run_trial(const ExperimentConfig& config, std::int64_t index) {
  auto rng = make_rng(derive_trial_seed(config.master_seed, static_cast<std::uint64_t>(index)));
  return evaluate(config.statistic, sample(config.model, rng));
}

std::vector<double> run_trials(const ExperimentConfig& config) {
  if (config.trials < 1) throw InputError("trials must be positive");
  if (config.workers < 0) throw InputError("workers must be non-negative");
  if (config.statistic.kind == StatisticKind::scaled_tfb && (config.statistic.power < -1 || config.statistic.power > 2)) {
    throw InputError("scaling power must be -1, 0, 1 or 2");
  }
  const auto trials = config.trials;
  std::vector<double> values(static_cast<std::size_t>(trials));
  unsigned workers = config.workers > 0 ? static_cast<unsigned>(config.workers)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, trials));

  constexpr std::int64_t chunk = 16;
  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::int64_t error_index = std::numeric_limits<std::int64_t>::max();
  std::exception_ptr error;

  auto work = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const auto begin = next.fetch_add(chunk);
      if (begin >= trials) return;
      const auto end = std::min(trials, begin + chunk);
      for (auto i = begin; i < end; ++i) {
        try {
          values[static_cast<std::size_t>(i)] = run_trial(config, i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
          failed = true;
          return;
        }
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) rethrow_with_trial(error, error_index);
  return values;
}

McEstimate summarize(std::span<const double> values, std::uint64_t master_seed) {
  if (values.size() < 2) throw InputError("a standard error needs at least 2 trials");
  const auto n = static_cast<double>(values.size());
  double sum = 0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1) / n), static_cast<std::int64_t>(values.size()), master_seed};
}

McEstimate run_mc(const ExperimentConfig& config) {
  if (config.trials < 2) throw InputError("run_mc needs at least 2 trials");
  const auto values = run_trials(config);
  return summarize(values, config.master_seed);
}

}  // namespace tfp
