#pragma once

#include "hybrid/model_core.hpp"

namespace hybrid {

/// Normalized EPR weights. The spin pair is rotated by beta first, then weighted by a.
struct EprWeights {
  double a = 1;
  double beta = 0;
  Eigen::Vector4d u_X;
  Eigen::Vector4d u_P;
};

EprWeights make_weights(double a, double beta);
/// Weights of the conjugate pair X_M + a X'_S, P_M - a P'_S.
EprWeights make_conjugate_weights(double a, double beta);

/// u_X^T V u_X + u_P^T V u_P.
double epr_variance(const CovarianceMatrix4& V, const EprWeights& w);
double epr_variance(const CovarianceMatrix4& V, double a, double beta);
double conjugate_variance(const CovarianceMatrix4& V, double a, double beta);

/// Spin rotation R with (X'_S, P'_S) = R (X_S, P_S), applied to the full 4x4 covariance.
CovarianceMatrix4 rotate_spin(const CovarianceMatrix4& V, double beta);

struct EprOptimum {
  double a = 1;
  double beta = 0;
  double value = 0;
};

struct EprSearch {
  int a_points = 200;
  int beta_points = 180;
  double a_min = 0.05;
  double a_max = 10;
};

/// Grid search then local refinement with the optimal a solved exactly for each beta.
EprOptimum minimize_epr(const CovarianceMatrix4& V, const EprSearch& s = {});

/// Beta nulling the X_M - P'_S and P_M - X'_S covariances, least squares if exact nulling fails.
double null_antidiagonal_rotation(const CovarianceMatrix4& V);

/// Rotating-frame trajectory O_{w t_k} (X_k, P_k) with t_k = t0 + k dt.
Eigen::Matrix<double, 2, Eigen::Dynamic> demodulate_trajectory(const Eigen::Matrix<double, 2, Eigen::Dynamic>& q,
                                                               double dt, double omega, double t0 = 0);

}  // namespace hybrid
