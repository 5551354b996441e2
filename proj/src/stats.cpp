#include "vulnloc/stats.hpp"

#include <Eigen/Dense>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace vulnloc::stats {

std::string_view to_string(Predictor p) noexcept { return p == Predictor::Position ? "position" : "file_size"; }

const Coefficient& RegressionFit::operator[](std::string_view name) const {
  for (const auto& c : coefficients) {
    if (c.name == name) return c;
  }
  fail(ErrorKind::ContractViolation, "no coefficient named " + std::string(name));
}

namespace {

constexpr std::size_t kMaxIterations = 100;
constexpr double kTolerance = 1e-8;
constexpr double kZ95 = 1.96;

struct Standardized {
  Eigen::MatrixXd z;  // n x (p+1), intercept column first
  Eigen::VectorXd y;
  Eigen::VectorXd mean, sd;  // per predictor
};

Standardized standardize(const Design& d) {
  const std::size_t n = d.y.size();
  const std::size_t p = d.columns.size();
  if (d.names.size() != p) fail(ErrorKind::ContractViolation, "predictor names and columns differ in count");
  if (n < 10) fail(ErrorKind::ContractViolation, "logistic fit needs n >= 10, got " + std::to_string(n));
  Standardized s;
  s.z.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p + 1));
  s.y.resize(static_cast<Eigen::Index>(n));
  s.mean.resize(static_cast<Eigen::Index>(p));
  s.sd.resize(static_cast<Eigen::Index>(p));
  std::size_t ones = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.y[i] != 0 && d.y[i] != 1) fail(ErrorKind::ContractViolation, "outcome must be 0 or 1");
    s.y(static_cast<Eigen::Index>(i)) = d.y[i];
    ones += static_cast<std::size_t>(d.y[i]);
  }
  if (ones == 0 || ones == n) fail(ErrorKind::ConstantOutcome, "every outcome is " + std::to_string(d.y.front()));
  s.z.col(0).setOnes();
  for (std::size_t j = 0; j < p; ++j) {
    const auto& col = d.columns[j];
    if (col.size() != n) fail(ErrorKind::ContractViolation, d.names[j] + ": column length differs from outcome");
    const double mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(n);
    double ss = 0;
    for (double v : col) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0)) fail(ErrorKind::Singular, d.names[j] + " is constant");
    s.mean(static_cast<Eigen::Index>(j)) = mean;
    s.sd(static_cast<Eigen::Index>(j)) = sd;
    for (std::size_t i = 0; i < n; ++i) {
      s.z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1)) = (col[i] - mean) / sd;
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(s.z);
  qr.setThreshold(1e-10);
  if (qr.rank() < s.z.cols()) fail(ErrorKind::Singular, "predictors are collinear");
  return s;
}

// log(1 + exp(x)) without overflow.
double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double log_likelihood(const Eigen::VectorXd& eta, const Eigen::VectorXd& y) {
  double ll = 0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) ll += y(i) * eta(i) - softplus(eta(i));
  return ll;
}

Eigen::VectorXd sigmoid(const Eigen::VectorXd& eta) {
  return eta.unaryExpr([](double e) { return e >= 0 ? 1.0 / (1.0 + std::exp(-e)) : std::exp(e) / (1.0 + std::exp(e)); });
}

// Complete separation when strict, quasi-complete when the classes only touch.
bool separates(const Eigen::VectorXd& eta, const Eigen::VectorXd& y, bool strict = true) {
  double min_pos = INFINITY, max_neg = -INFINITY;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    if (y(i) > 0.5) min_pos = std::min(min_pos, eta(i));
    else max_neg = std::max(max_neg, eta(i));
  }
  return strict ? min_pos > max_neg : min_pos >= max_neg;
}

double two_sided_p(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

}  // namespace

double standardized_log_likelihood(const Design& design, std::span<const double> beta_std) {
  const Standardized s = standardize(design);
  if (beta_std.size() != static_cast<std::size_t>(s.z.cols())) {
    fail(ErrorKind::ContractViolation, "coefficient count does not match the design");
  }
  const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(beta_std.data(), s.z.cols());
  return log_likelihood(s.z * b, s.y);
}

RegressionFit fit_logistic(const Design& design) {
  const Standardized s = standardize(design);
  const Eigen::MatrixXd& z = s.z;
  const Eigen::Index k = z.cols();

  RegressionFit fit;
  fit.n = design.y.size();
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd eta = z * beta;
  double ll = log_likelihood(eta, s.y);
  fit.ll_trace.push_back(ll);

  for (std::size_t iter = 1; iter <= kMaxIterations; ++iter) {
    const Eigen::VectorXd mu = sigmoid(eta);
    const Eigen::VectorXd w = mu.cwiseProduct(Eigen::VectorXd::Ones(mu.size()) - mu);
    const Eigen::VectorXd grad = z.transpose() * (s.y - mu);
    const Eigen::MatrixXd info = z.transpose() * w.asDiagonal() * z;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
      if (separates(eta, s.y, false)) fail(ErrorKind::PerfectSeparation, "coefficients diverge (quasi-complete separation)");
      fail(ErrorKind::Singular, "information matrix is not positive definite");
    }
    const Eigen::VectorXd step = ldlt.solve(grad);

    // Halve the step until the likelihood does not drop.
    double t = 1.0;
    Eigen::VectorXd next = beta + step;
    Eigen::VectorXd next_eta = z * next;
    double next_ll = log_likelihood(next_eta, s.y);
    while (next_ll < ll && t > 1e-12) {
      t /= 2;
      next = beta + t * step;
      next_eta = z * next;
      next_ll = log_likelihood(next_eta, s.y);
    }
    if (next_ll < ll) {
      next = beta;
      next_eta = eta;
      next_ll = ll;
    }

    const double change = (next - beta).cwiseAbs().maxCoeff();
    beta = next;
    eta = next_eta;
    ll = next_ll;
    fit.ll_trace.push_back(ll);
    fit.iterations = iter;

    if (separates(eta, s.y)) {
      fail(ErrorKind::PerfectSeparation,
           "the linear predictor separates detected from undetected cases; the MLE does not exist");
    }
    if (change < kTolerance) {
      fit.converged = true;
      break;
    }
  }
  if (eta.cwiseAbs().maxCoeff() > 30 && (!fit.converged || separates(eta, s.y, false))) {
    fail(ErrorKind::PerfectSeparation, "coefficients diverge (quasi-complete separation)");
  }

  const Eigen::VectorXd mu = sigmoid(eta);
  const Eigen::VectorXd w = mu.cwiseProduct(Eigen::VectorXd::Ones(mu.size()) - mu);
  fit.gradient_norm = (z.transpose() * (s.y - mu)).norm();
  const Eigen::MatrixXd info = z.transpose() * w.asDiagonal() * z;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(info);
  if (!lu.isInvertible()) {
    if (separates(eta, s.y, false)) fail(ErrorKind::PerfectSeparation, "coefficients diverge (quasi-complete separation)");
    fail(ErrorKind::Singular, "information matrix is singular at the optimum");
  }
  const Eigen::MatrixXd cov_std = lu.inverse();

  // raw = T * std, with x_std = (x - mean) / sd.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  t(0, 0) = 1;
  for (Eigen::Index j = 1; j < k; ++j) {
    t(0, j) = -s.mean(j - 1) / s.sd(j - 1);
    t(j, j) = 1 / s.sd(j - 1);
  }
  const Eigen::VectorXd raw = t * beta;
  const Eigen::MatrixXd cov_raw = t * cov_std * t.transpose();

  fit.log_likelihood = ll;
  for (Eigen::Index j = 0; j < k; ++j) {
    Coefficient c;
    c.name = j == 0 ? "(intercept)" : design.names[static_cast<std::size_t>(j - 1)];
    c.coef_raw = raw(j);
    c.coef_std = beta(j);
    c.se_raw = std::sqrt(cov_raw(j, j));
    c.se_std = std::sqrt(cov_std(j, j));
    c.z = j == 0 ? c.coef_raw / c.se_raw : c.coef_std / c.se_std;
    c.p = two_sided_p(c.z);
    c.odds_ratio = std::exp(c.coef_raw);
    c.ci_low = std::exp(c.coef_raw - kZ95 * c.se_raw);
    c.ci_high = std::exp(c.coef_raw + kZ95 * c.se_raw);
    c.odds_ratio_per_sd = j == 0 ? c.odds_ratio : std::exp(c.coef_std);
    c.odds_ratio_per_1k = j == 0 ? c.odds_ratio : std::exp(1000 * c.coef_raw);
    fit.coefficients.push_back(c);
  }
  return fit;
}

RegressionFit fit_logistic(std::span<const Observation> observations, std::span<const Predictor> predictors) {
  Design d;
  for (Predictor p : predictors) {
    d.names.emplace_back(to_string(p));
    d.columns.emplace_back();
    for (const auto& o : observations) d.columns.back().push_back(p == Predictor::Position ? o.position : o.file_size);
  }
  for (const auto& o : observations) d.y.push_back(o.detected ? 1 : 0);
  return fit_logistic(d);
}

std::vector<CellFit> fit_all(std::span<const Observation> observations) {
  std::map<std::pair<std::string, corpus::CweId>, std::vector<Observation>> cells;
  for (const auto& o : observations) cells[{o.model, o.cwe}].push_back(o);

  static const std::vector<std::pair<std::string, std::vector<Predictor>>> kFits = {
      {"position", {Predictor::Position}},
      {"file_size", {Predictor::FileSize}},
      {"multiple", {Predictor::Position, Predictor::FileSize}},
  };
  std::vector<CellFit> out;
  for (const auto& [key, obs] : cells) {
    double max_position = 0;
    for (const auto& o : obs) max_position = std::max(max_position, o.position);
    for (const auto& [name, predictors] : kFits) {
      CellFit cell{key.first, key.second, name, obs.size(), max_position, std::nullopt, std::nullopt, {}};
      try {
        cell.result = fit_logistic(obs, predictors);
      } catch (const Error& e) {
        cell.error = e.kind();
        cell.message = e.detail();
      }
      out.push_back(std::move(cell));
    }
  }
  return out;
}

namespace {
std::string num(double v) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  return fmt::format("{:.10g}", v);
}
}  // namespace

std::string regression_csv(std::span<const CellFit> fits) {
  std::string out =
      "model,cwe,fit,predictor,coef_raw,coef_std,se,z,p,odds_ratio,ci_low,ci_high,odds_ratio_per_sd,"
      "odds_ratio_per_1k,n,converged,status\n";
  for (const auto& f : fits) {
    if (!f.result) {
      out += fmt::format("{},{},{},{},NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,{},false,{}\n", f.model, f.cwe.str(), f.fit,
                         f.fit == "multiple" ? "position+file_size" : f.fit, f.n, to_string(*f.error));
      continue;
    }
    for (const auto& c : f.result->coefficients) {
      out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},ok\n", f.model, f.cwe.str(), f.fit, c.name,
                         num(c.coef_raw), num(c.coef_std), num(c.se_raw), num(c.z), num(c.p), num(c.odds_ratio),
                         num(c.ci_low), num(c.ci_high), num(c.odds_ratio_per_sd), num(c.odds_ratio_per_1k), f.n,
                         f.result->converged ? "true" : "false");
    }
  }
  return out;
}

std::string curves_csv(std::span<const CellFit> fits, double step) {
  std::string out = "model,cwe,position,probability\n";
  for (const auto& f : fits) {
    if (f.fit != "position" || !f.result) continue;
    const double b0 = f.result->coefficients[0].coef_raw;
    const double b1 = f.result->coefficients[1].coef_raw;
    for (double x = 0; x <= f.max_position + step / 2; x += step) {
      const double eta = b0 + b1 * x;
      out += fmt::format("{},{},{},{}\n", f.model, f.cwe.str(), num(x), num(1 / (1 + std::exp(-eta))));
    }
  }
  return out;
}

}  // namespace vulnloc::stats
