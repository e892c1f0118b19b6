#pragma once

#include "hybrid/epr_analysis.hpp"
#include "hybrid/wiener_filter.hpp"

namespace hybrid {

struct PipelineSettings {
  WienerSettings wiener;
  CovarianceSettings covariance;
  int ladder_points = 10;
  bool adaptive_vu = true;  // false: V_u from the lattice sum
  bool epr = true;
};

struct LadderPoint {
  int taps = 0;
  double t = 0;
  CovarianceMatrix4 V_c;
  double epr = 0;  // minimized EPR variance of V_c
};

struct ConditionalResult {
  Lattice lattice;
  CorrelationSet correlations;
  TimeKernelSet kernel;
  CovarianceMatrix4 V_u, V_be, V_c;
  std::vector<LadderPoint> ladder;
  bool monotone = true;
  EprOptimum epr_u, epr_c;
};

/// Log-spaced tap counts in [1, N], ascending and unique, ending at N.
std::vector<int> tap_ladder(int N, int points);

/// True if every diagonal entry of V_c is nonincreasing along the ladder.
bool ladder_monotone(const std::vector<LadderPoint>& ladder, double rel_tol = 1e-9);

/// Spectra -> correlations -> Wiener kernel -> V_c, with the t-ladder from one Levinson pass.
ConditionalResult run_conditional(const SystemParams<double>& p, const PipelineSettings& s = {});

}  // namespace hybrid
