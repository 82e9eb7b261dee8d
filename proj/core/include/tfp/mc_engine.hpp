#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tfp/graphon.hpp"
#include "tfp/multigraph.hpp"
#include "tfp/sparse_models.hpp"

namespace tfp {

struct ErrgModel {
  ErrgParams params;
};

struct CmModel {
  DegreeSequence degrees;
};

struct GraphonModel {
  std::int64_t n = 0;
  Graphon graphon;
};

using Model = std::variant<ErrgModel, CmModel, GraphonModel>;

std::string describe(const Model& model);
std::int64_t vertex_count(const Model& model);
Multigraph sample(const Model& model, Rng& rng);

enum class StatisticKind { average_tfb, scaled_tfb, triangle_free_indicator };

/// What each trial records.
///   average_tfb              the average triangle bias
///   scaled_tfb               n^(-power) times it; power -1 gives n * bias,
///                            1 and 2 the dense scalings
///   triangle_free_indicator  1 if the sample has no triangle, else 0
struct Statistic {
  StatisticKind kind = StatisticKind::average_tfb;
  int power = 0;

  static Statistic average() { return {}; }
  static Statistic scaled(int power) { return {StatisticKind::scaled_tfb, power}; }
  static Statistic triangle_free() { return {StatisticKind::triangle_free_indicator, 0}; }
  [[nodiscard]] std::string str() const;
};

double evaluate(const Statistic& statistic, const Multigraph& g);

struct ExperimentConfig {
  Model model;
  Statistic statistic;
  std::int64_t trials = 0;
  std::uint64_t master_seed = 0;
  /// 0 picks the hardware concurrency.
  int workers = 0;
};

struct McEstimate {
  double mean = 0.0;
  /// sample standard deviation / sqrt(trials)
  double standard_error = 0.0;
  std::int64_t trials = 0;
  std::uint64_t master_seed = 0;
};

/// Value of trial `index`: sample with derive_trial_seed(master_seed, index),
/// then evaluate the statistic.
double run_trial(const ExperimentConfig& config, std::int64_t index);

/// Every trial value, in trial order. Identical for any worker count.
std::vector<double> run_trials(const ExperimentConfig& config);

/// Mean and standard error of run_trials. Needs trials >= 2. A failing trial
/// is rethrown with the same error category and its index in the message.
McEstimate run_mc(const ExperimentConfig& config);

/// Two-pass mean and standard error over values in the given order.
McEstimate summarize(std::span<const double> values, std::uint64_t master_seed = 0);

}  // namespace tfp
