// Copyright 2026 The qndsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qndsim/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qndsim/error.hpp"

namespace qnd {

const char* to_string(DistributionSource source) noexcept {
  switch (source) {
    case DistributionSource::spectral_fit: return "spectral_fit";
    case DistributionSource::state_diagonal: return "state_diagonal";
    case DistributionSource::analytic: return "analytic";
  }
  return "unknown";
}

double LorentzianComponent::area() const noexcept { return std::numbers::pi * amplitude * half_width; }

double PhononDistribution::mean() const noexcept {
  double m = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) m += static_cast<double>(k) * probabilities[k];
  return m;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct LineModel {
  const VectorXd& x;
  const std::vector<double>& centers;

  std::size_t lines() const { return centers.size(); }

  // θ = [amplitudes…, half-widths…]
  VectorXd evaluate(const VectorXd& theta) const {
    const auto k = static_cast<Index>(lines());
    VectorXd out = VectorXd::Zero(x.size());
    for (Index j = 0; j < k; ++j) {
      const double a = theta(j);
      const double w2 = theta(k + j) * theta(k + j);
      out.array() += a * w2 / ((x.array() - centers[j]).square() + w2);
    }
    return out;
  }

  MatrixXd jacobian(const VectorXd& theta) const {
    const auto k = static_cast<Index>(lines());
    MatrixXd jac(x.size(), 2 * k);
    for (Index j = 0; j < k; ++j) {
      const double a = theta(j);
      const double w = theta(k + j);
      const VectorXd d2 = (x.array() - centers[j]).square();
      const VectorXd denom = d2.array() + w * w;
      jac.col(j) = (w * w) / denom.array();
      jac.col(k + j) = a * 2.0 * w * d2.array() / denom.array().square();
    }
    return jac;
  }

  // Best amplitudes for fixed half-widths (linear least squares).
  VectorXd amplitudes_for(const VectorXd& widths, const VectorXd& y) const {
    const auto k = static_cast<Index>(lines());
    MatrixXd basis(x.size(), k);
    for (Index j = 0; j < k; ++j) {
      const double w2 = widths(j) * widths(j);
      basis.col(j) = w2 / ((x.array() - centers[j]).square() + w2);
    }
    return basis.colPivHouseholderQr().solve(y);
  }
};

double condition_number(const MatrixXd& jac) {
  MatrixXd scaled = jac;
  for (Index j = 0; j < scaled.cols(); ++j) {
    const double n = scaled.col(j).norm();
    if (n > 0.0) scaled.col(j) /= n;
  }
  Eigen::JacobiSVD<MatrixXd> svd(scaled);
  const VectorXd& s = svd.singularValues();
  return s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1) : INFINITY;
}

}  // namespace

PhononDistribution fit_peak_weights(const SpectrumResult& s) {
  if (s.peaks.empty()) throw Error(ErrorKind::validation, "fit_peak_weights: no peaks to fit");
  if (s.frequencies.size() < 3 || s.frequencies.size() != s.values.size()) {
    throw Error(ErrorKind::validation, "fit_peak_weights: malformed spectrum");
  }
  const double bin = s.frequencies[1] - s.frequencies[0];

  std::vector<Peak> peaks = s.peaks;
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) { return a.phonon_index < b.phonon_index; });
  std::vector<double> centers;
  double spacing = INFINITY;
  double widest = 0.0;
  for (const Peak& p : peaks) {
    centers.push_back(p.center);
    if (std::isfinite(p.width) && p.width > 0.0) widest = std::max(widest, p.width);
  }
  std::vector<double> sorted = centers;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) spacing = std::min(spacing, sorted[i] - sorted[i - 1]);
  double margin = std::max(5.0 * widest, 10.0 * bin);
  if (std::isfinite(spacing)) margin = std::max(margin, spacing);

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < s.frequencies.size(); ++i) {
    if (s.frequencies[i] >= sorted.front() - margin && s.frequencies[i] <= sorted.back() + margin) {
      xs.push_back(s.frequencies[i]);
      ys.push_back(s.values[i]);
    }
  }
  const auto k = static_cast<Index>(peaks.size());
  if (static_cast<Index>(xs.size()) < 2 * k + 1) {
    throw Error(ErrorKind::fit, "fit_peak_weights: fewer samples than free parameters");
  }
  const VectorXd x = Eigen::Map<const VectorXd>(xs.data(), static_cast<Index>(xs.size()));
  const VectorXd y = Eigen::Map<const VectorXd>(ys.data(), static_cast<Index>(ys.size()));
  const LineModel model{x, centers};

  // Start from the measured half-widths. Lines merged with a neighbour report
  // the width of the whole cluster, so cap the guess at a quarter spacing.
  VectorXd theta(2 * k);
  for (Index j = 0; j < k; ++j) {
    const double w = peaks[j].width;
    double guess = std::isfinite(w) && w > 0.0 ? 0.5 * w : 2.0 * bin;
    if (std::isfinite(spacing)) guess = std::min(guess, 0.25 * spacing);
    theta(k + j) = guess;
  }
  theta.head(k) = model.amplitudes_for(theta.tail(k), y);

  VectorXd r = model.evaluate(theta) - y;
  double cost = r.squaredNorm();
  double mu = 1e-3;
  for (int iter = 0; iter < 500; ++iter) {
    const MatrixXd jac = model.jacobian(theta);
    const MatrixXd jtj = jac.transpose() * jac;
    const VectorXd grad = jac.transpose() * r;
    bool accepted = false;
    for (int tries = 0; tries < 40 && !accepted; ++tries) {
      MatrixXd lhs = jtj;
      lhs.diagonal() += mu * jtj.diagonal();
      const VectorXd step = lhs.ldlt().solve(-grad);
      const VectorXd trial = theta + step;
      if ((trial.tail(k).array() <= 0.0).any()) {
        mu *= 4.0;
        continue;
      }
      const VectorXd r_trial = model.evaluate(trial) - y;
      const double c_trial = r_trial.squaredNorm();
      if (c_trial < cost) {
        const double gain = (cost - c_trial) / std::max(cost, 1e-300);
        theta = trial;
        r = r_trial;
        cost = c_trial;
        mu = std::max(mu / 3.0, 1e-12);
        accepted = true;
        if (gain < 1e-14) iter = 500;
      } else {
        mu *= 4.0;
      }
    }
    if (!accepted) break;
  }

  const double cond = condition_number(model.jacobian(theta));
  if (!(cond <= 1e12)) {
    std::ostringstream os;
    os << "fit_peak_weights: ill-conditioned fit (condition number " << cond << ")";
    throw Error(ErrorKind::fit, os.str());
  }

  PhononDistribution out;
  out.source = DistributionSource::spectral_fit;
  out.residual = y.norm() > 0.0 ? r.norm() / y.norm() : r.norm();
  double total = 0.0;
  for (Index j = 0; j < k; ++j) {
    LorentzianComponent c{centers[j], theta(j), theta(k + j)};
    out.components.push_back(c);
    const double area = std::max(c.area(), 0.0);
    out.probabilities.push_back(area);
    total += area;
  }
  if (!(total > 0.0)) throw Error(ErrorKind::fit, "fit_peak_weights: fitted lines carry no area");
  for (double& p : out.probabilities) p /= total;
  return out;
}

PhononDistribution bose_einstein(double n_bar, std::size_t n_max) {
  if (!(n_bar >= 0.0)) throw Error(ErrorKind::validation, "bose_einstein: n_bar must be >= 0");
  if (n_max == 0) throw Error(ErrorKind::validation, "bose_einstein: need at least one level");
  PhononDistribution out;
  out.source = DistributionSource::analytic;
  const double ratio = n_bar / (n_bar + 1.0);
  double p = 1.0 / (n_bar + 1.0);
  double total = 0.0;
  for (std::size_t k = 0; k < n_max; ++k) {
    out.probabilities.push_back(p);
    total += p;
    p *= ratio;
  }
  for (double& q : out.probabilities) q /= total;
  return out;
}

PhononDistribution fock_populations(const QuantumState& state) {
  const ComplexMatrix reduced = reduce_to_nems(state);
  PhononDistribution out;
  out.source = DistributionSource::state_diagonal;
  for (Index k = 0; k < reduced.rows(); ++k) out.probabilities.push_back(reduced(k, k).real());
  return out;
}

DistributionGap compare_distributions(const PhononDistribution& a, const PhononDistribution& b) {
  if (a.probabilities.size() != b.probabilities.size()) {
    throw Error(ErrorKind::validation, "compare_distributions: length mismatch");
  }
  DistributionGap gap;
  for (std::size_t k = 0; k < a.probabilities.size(); ++k) {
    const double d = std::abs(a.probabilities[k] - b.probabilities[k]);
    gap.total_variation += 0.5 * d;
    gap.max_abs = std::max(gap.max_abs, d);
  }
  return gap;
}

}  // namespace qnd
