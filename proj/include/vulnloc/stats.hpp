#pragma once

#include "vulnloc/corpus.hpp"
#include "vulnloc/error.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vulnloc::stats {

struct Observation {
  bool detected = false;
  double position = 0;   // characters preceding the vulnerable line
  double file_size = 0;  // characters
  corpus::CweId cwe;
  std::string model;
};

enum class Predictor { Position, FileSize };
std::string_view to_string(Predictor p) noexcept;

struct Coefficient {
  std::string name;        // "(intercept)", "position", "file_size"
  double coef_raw = 0;     // per character
  double coef_std = 0;     // per standard deviation
  double se_raw = 0;
  double se_std = 0;
  double z = 0;
  double p = 1;
  double odds_ratio = 1;   // exp(coef_raw)
  double ci_low = 1;       // exp(coef_raw - 1.96 se_raw)
  double ci_high = 1;
  double odds_ratio_per_sd = 1;
  double odds_ratio_per_1k = 1;
};

struct RegressionFit {
  std::vector<Coefficient> coefficients;  // intercept first
  std::size_t n = 0;
  bool converged = false;
  std::size_t iterations = 0;
  double log_likelihood = 0;
  std::vector<double> ll_trace;  // log-likelihood after every iteration, starting at beta = 0
  double gradient_norm = 0;      // at the final iterate, standardized scale

  const Coefficient& operator[](std::string_view name) const;
};

/// Design matrix without the intercept column: one vector per predictor.
struct Design {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  std::vector<int> y;  // 0 or 1
};

/// Logistic maximum-likelihood fit by IRLS on standardized predictors (sample
/// standard deviation, n-1 denominator).
/// Converged when no coefficient moves by 1e-8 or more; at most 100 iterations.
/// Throws ConstantOutcome, Singular (constant or collinear predictors),
/// PerfectSeparation, or ContractViolation when n < 10.
RegressionFit fit_logistic(const Design& design);
RegressionFit fit_logistic(std::span<const Observation> observations, std::span<const Predictor> predictors);

/// Log-likelihood of coefficients on the standardized scale (intercept first).
double standardized_log_likelihood(const Design& design, std::span<const double> beta_std);

struct CellFit {
  std::string model;
  corpus::CweId cwe;
  std::string fit;  // "position", "file_size", "multiple"
  std::size_t n = 0;
  double max_position = 0;
  std::optional<RegressionFit> result;
  std::optional<ErrorKind> error;
  std::string message;
};

/// Simple fits on position and on file size plus the multiple fit, for every
/// (model, cwe). A failing cell is reported with its error; others continue.
std::vector<CellFit> fit_all(std::span<const Observation> observations);

std::string regression_csv(std::span<const CellFit> fits);

/// Predicted detection probability of the simple position fits on a grid.
std::string curves_csv(std::span<const CellFit> fits, double step = 500);

}  // namespace vulnloc::stats
