#pragma once

#include <functional>

#include "hybrid/hybrid_chain.hpp"

namespace hybrid {

struct WienerSettings {
  int oversample = 8;             // samples per period of the fastest resonance
  int max_taps = 8192;
  double memory_linewidths = 4;   // filter memory in units of 1/narrowest coupled linewidth
  double lattice_linewidths = 40; // FFT period in units of 1/narrowest coupled linewidth
  int max_lattice_log2 = 22;
  bool box_sampling = true;       // integrate-and-dump photocurrent samples
};

/// Sampling step dt, taps N and FFT lattice size M.
struct Lattice {
  double dt = 0;
  int taps = 0;
  int size = 0;

  double bin(int j) const { return Units::two_pi * j / (size * dt); }
};

Lattice choose_lattice(const SystemParams<double>& p, const WienerSettings& s = {});

/// Box-average transfer (exp(i W dt) - 1) / (i W dt).
std::complex<double> box_transfer(double Omega, double dt);

/// Sampled photocurrent autocorrelation and signal-meter cross correlations at lags k dt.
struct CorrelationSet {
  double dt = 0;
  double floor = 0;                 // white part of S_ii
  std::vector<double> Cii;          // length N
  Eigen::Matrix<double, 4, Eigen::Dynamic> CQi;  // 4 x N
  CovarianceMatrix4 Vu_lattice = CovarianceMatrix4::Zero();
};

/// Spectra on the positive lattice bins j = 0..M/2 to correlations.
/// Sii excludes nothing; `floor` is removed before the FFT and added back as floor/dt at lag 0.
CorrelationSet correlations_from_spectra(const std::vector<double>& Sii,
                                         const std::vector<Eigen::Vector4cd>& SQi, double floor, double dt,
                                         int taps);

/// High-frequency limit of S_ii.
double white_floor(const SystemParams<double>& p);

/// Model spectra on the lattice, discrete sampling applied, then correlations.
CorrelationSet correlations_from_psd(const SystemParams<double>& p, const Lattice& lat, bool box_sampling = true);

/// Solve T x = b for symmetric Toeplitz T with first column r, for every column of B.
/// `on_order(n, X)` is called with the leading n x m solution for each n in `orders`.
Eigen::MatrixXd levinson_solve(const std::vector<double>& r, const Eigen::MatrixXd& B,
                               const std::vector<int>& orders = {},
                               const std::function<void(int, const Eigen::MatrixXd&)>& on_order = {});

/// Dense reference solve of the same Toeplitz system.
Eigen::MatrixXd toeplitz_dense_solve(const std::vector<double>& r, const Eigen::MatrixXd& B);

/// K(tau = -k dt, t) for k = 0..N-1, one row per quadrature; h = K dt are the discrete taps.
struct TimeKernelSet {
  double dt = 0;
  Eigen::Matrix<double, 4, Eigen::Dynamic> K;

  int taps() const { return static_cast<int>(K.cols()); }
  double duration() const { return taps() * dt; }
  Eigen::Matrix<double, 4, Eigen::Dynamic> h() const { return K * dt; }
};

TimeKernelSet solve_wiener(const CorrelationSet& C, int taps = -1);

/// Largest residual of the discretized Wiener-Hopf system, relative to max |C_Qi|.
double wiener_residual(const CorrelationSet& C, const TimeKernelSet& K);

/// Q^c at every sample n >= N-1, column n-(N-1); Q^c(n) = sum_k h_k i(n-k).
Eigen::Matrix<double, 4, Eigen::Dynamic> conditional_trajectory(const std::vector<double>& i, double dt,
                                                                const TimeKernelSet& K);

struct ConditionalCovariance {
  CovarianceMatrix4 V_be;
  CovarianceMatrix4 V_c;
};

ConditionalCovariance conditional_covariance(const CovarianceMatrix4& V_u, const TimeKernelSet& K,
                                             const CorrelationSet& C);

/// Model mean-square error of arbitrary taps against the same correlations.
CovarianceMatrix4 estimation_error(const CovarianceMatrix4& V_u, const Eigen::Matrix<double, 4, Eigen::Dynamic>& h,
                                   const CorrelationSet& C);

enum class LimitMode { single, epr };

/// Leading-order fast-readout limits. Gamma and gamma only enter through C_q and the regime check.
double closed_form_limits(double eta, double C_q, double Gamma, double gamma, double n, LimitMode mode);

/// Exact RWA steady-state Riccati solutions of the same two problems.
double riccati_single(double eta, double C_q, double n);
double riccati_epr(double eta, double C_q, double n);

/// Peak-normalized K(W) = sum_k h_k exp(i W k dt), row per quadrature.
Eigen::Matrix<std::complex<double>, 4, Eigen::Dynamic> filter_frequency_response(const TimeKernelSet& K,
                                                                                 const std::vector<double>& omegas);

}  // namespace hybrid
