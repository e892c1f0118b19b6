#pragma once

#include <cstdint>

#include "hybrid/wiener_filter.hpp"

namespace hybrid {

/// Joint samples of (X_M, P_M, X_S, P_S, i), one row per channel.
struct TimeRecord {
  double dt = 0;
  std::uint64_t seed = 0;
  Eigen::Matrix<double, n_outputs, Eigen::Dynamic> samples;

  Eigen::Index size() const { return samples.cols(); }
  std::vector<double> photocurrent() const;
};

/// Per-bin mixing matrices for spectral synthesis, built once per (p, length, dt).
class SynthesisPlan {
 public:
  SynthesisPlan(const SystemParams<double>& p, std::size_t samples, double dt, bool box_sampling = true);

  /// Records of `samples` points from a 2x periodic embedding; bit-identical for equal seeds.
  TimeRecord draw(std::uint64_t seed) const;

  std::size_t samples() const { return n_; }
  double dt() const { return dt_; }

 private:
  std::size_t n_;
  double dt_;
  std::size_t bins_;
  std::vector<Eigen::Matrix<std::complex<double>, n_outputs, n_inputs + 1>> G_;
};

TimeRecord synthesize_joint(const SystemParams<double>& p, std::size_t samples, double dt, std::uint64_t seed,
                            bool box_sampling = true);

struct OracleResult {
  CovarianceMatrix4 V_c;          // mean of (Q - Q^c)(Q - Q^c)^T
  CovarianceMatrix4 stderr_mean;  // realization-to-realization standard error
  int realizations = 0;
  long long samples_per_realization = 0;
};

/// Empirical conditional covariance over realizations with seeds seed0 + r.
OracleResult ensemble_conditional_oracle(const SystemParams<double>& p, const TimeKernelSet& K, std::size_t samples,
                                         int n_real, std::uint64_t seed0, int stride = 1);

}  // namespace hybrid
