#pragma once

#include "hybrid/optomech_cavity.hpp"
#include "hybrid/spin_oscillator.hpp"

namespace hybrid {

template <class T>
struct ChainParams {
  T nu = T(1);        // spin-to-cavity transmission
  T eta = T(1);       // detection efficiency
  T phi = T(0);       // LO1-LO2 phase
  T vartheta = T(0);  // homodyne phase
};

template <class T>
struct SystemParams {
  SpinParams<T> spin;
  OptoMechParams<T> mech;
  ChainParams<T> chain;

  void validate() const {
    using std::isfinite;
    spin.validate();
    mech.validate();
    if (!(chain.nu >= T(0) && chain.nu <= T(1))) throw InvalidParameter("nu outside [0,1]");
    if (!(chain.eta >= T(0) && chain.eta <= T(1))) throw InvalidParameter("eta outside [0,1]");
    if (!isfinite(chain.phi) || !isfinite(chain.vartheta)) throw InvalidParameter("phases must be finite");
  }
};

template <class T>
using TransferMatrix = Eigen::Matrix<cplx<T>, n_outputs, n_inputs>;
template <class T>
using InputPsd = Eigen::Matrix<T, n_inputs, 1>;
template <class T>
using OutputSpectrum = Eigen::Matrix<cplx<T>, n_outputs, n_outputs>;

/// 5x11 map from noise inputs to (X_M, P_M, X_S, P_S, P_L^meas).
template <class T>
TransferMatrix<T> build_transfer_matrix(T Omega, const SystemParams<T>& p) {
  using std::sqrt;
  using M2x11 = Eigen::Matrix<cplx<T>, 2, n_inputs>;
  const auto sb = spin_blocks(Omega, p.spin);
  const Mat2<T> Z = sb.Z.template cast<cplx<T>>();
  const T GS = p.spin.Gamma_S;

  TransferMatrix<T> U = TransferMatrix<T>::Zero();
  U.template block<2, 2>(idx(Out::XS), idx(In::FSX)) = sb.L;
  U.template block<2, 2>(idx(Out::XS), idx(In::XLS)) = T(2) * sqrt(GS) * sb.L * Z;

  M2x11 spin_out = M2x11::Zero();
  spin_out.template block<2, 2>(0, idx(In::FSX)) = sqrt(GS) * Z * sb.L;
  spin_out.template block<2, 2>(0, idx(In::XLS)) = Mat2<T>::Identity() + T(2) * GS * Z * sb.L * Z;

  const Mat2<T> Ophi = rotation_matrix<T>(p.chain.phi).template cast<cplx<T>>();
  M2x11 m_in = sqrt(p.chain.nu) * Ophi * spin_out;
  m_in.template block<2, 2>(0, idx(In::XLnu)) += sqrt(T(1) - p.chain.nu) * Ophi;

  const auto ct = cavity_transfer(Omega, p.mech);
  Eigen::Matrix<cplx<T>, 1, n_inputs> xm = ct.xm_in * m_in;
  xm.template segment<2>(idx(In::XLex)) += ct.xm_ex;
  xm(idx(In::FM)) += ct.xm_f;
  U.row(idx(Out::XM)) = xm;
  U.row(idx(Out::PM)) = cplx<T>(0, -Omega / p.mech.omega_M0) * xm;

  M2x11 out = ct.out_in * m_in;
  out.template block<2, 2>(0, idx(In::XLex)) += ct.out_ex;
  out.col(idx(In::FM)) += ct.out_f;

  const Eigen::Matrix<cplx<T>, 1, 2> det = rotation_matrix<T>(p.chain.vartheta).row(1).template cast<cplx<T>>();
  Eigen::Matrix<cplx<T>, 1, n_inputs> meas = sqrt(p.chain.eta) * det * out;
  meas(idx(In::PLeta)) += sqrt(T(1) - p.chain.eta);
  U.row(idx(Out::Pmeas)) = meas;
  return U;
}

/// Diagonal of the input spectral matrix; broadband spin noise rides on P_Lnu.
template <class T>
InputPsd<T> input_psd_matrix(const SystemParams<T>& p) {
  InputPsd<T> s = vacuum_input_psd(p.spin.gamma_S0, p.spin.n_S, p.mech.gamma_M0, p.mech.n_M0);
  const T sbb = p.spin.bb.Sbar_S_bb;
  if (sbb > T(0)) {
    if (p.chain.nu > T(1) - T(1e-6)) throw BroadbandInjectionSingular("broadband noise cannot be injected at nu -> 1");
    s(idx(In::PLnu)) += p.chain.nu / (T(1) - p.chain.nu) * sbb;
  }
  return s;
}

/// S_out = U S_in U^H.
template <class T>
OutputSpectrum<T> output_cross_spectrum(T Omega, const SystemParams<T>& p) {
  const auto U = build_transfer_matrix(Omega, p);
  const auto s = input_psd_matrix(p);
  return U * s.template cast<cplx<T>>().asDiagonal() * U.adjoint();
}

template <class T>
T measured_psd(T Omega, const SystemParams<T>& p) {
  const auto U = build_transfer_matrix(Omega, p);
  const auto s = input_psd_matrix(p);
  return (U.row(idx(Out::Pmeas)).cwiseAbs2().transpose().cwiseProduct(s)).sum();
}

/// Cross spectra S_Qi between the four oscillator quadratures and the photocurrent.
template <class T>
Eigen::Matrix<cplx<T>, 4, 1> signal_meter_cross(T Omega, const SystemParams<T>& p) {
  return output_cross_spectrum(Omega, p).template block<4, 1>(0, idx(Out::Pmeas));
}

/// Reduced QND-style parameters of the main-text readout model.
struct SimpleEprParams {
  double Gamma_M = 0, Gamma_S = 0;
  double zeta_M = 0, zeta_S = 0;
  double omega_M = 1, gamma_M0 = 1e-3, n_M = 0;
  double omega_S = -1, gamma_S0 = 1e-3, n_S = 0;
  double eta = 1, nu = 1;
};

struct SimpleEprReadout {
  std::complex<double> qba;          // joint backaction prefactor
  std::complex<double> chi_MS_inv;   // cross susceptibility inverse
  std::complex<double> single_mech;  // sqrt(eta) sqrt(Gamma_M) chi_M
  double S_PL;                       // phase-quadrature PSD, shot-noise units
};

inline SimpleEprReadout simplified_epr_readout(double Omega, const SimpleEprParams& q) {
  using C = std::complex<double>;
  auto chi = [&](double w, double g) { return w / C(w * w - Omega * Omega, -Omega * g); };
  const C chiM0 = chi(q.omega_M, q.gamma_M0);
  const C chiS0 = chi(q.omega_S, q.gamma_S0);
  const C chiM = chi(q.omega_M, q.gamma_M0 + 2 * q.zeta_M * q.Gamma_M);
  const C chiS = chi(q.omega_S, q.gamma_S0 + 2 * q.zeta_S * q.Gamma_S);
  SimpleEprReadout r;
  r.qba = chiS / chiS0 * q.Gamma_M * chiM + chiM / chiM0 * q.Gamma_S * chiS;
  r.chi_MS_inv = 1.0 / chiM0 - C(0, 2 * q.zeta_S * q.Gamma_M);
  r.single_mech = std::sqrt(q.eta * q.Gamma_M) * chiM;
  const double v = Units::light_vacuum;
  const double sFM = 2 * q.gamma_M0 * (q.n_M + 0.5);
  const double sFS = 2 * q.gamma_S0 * (q.n_S + 0.5);
  const C cross = chiM * r.chi_MS_inv;
  double s = v;
  s += q.eta * q.nu * std::norm(r.qba) * 4 * v;
  s += q.eta * q.Gamma_M * std::norm(chiM) * (sFM + (1 - q.nu) * q.Gamma_M * 4 * v);
  s += q.eta * std::norm(cross) * q.nu * q.Gamma_S * std::norm(chiS) * sFS;
  r.S_PL = s / v;
  return r;
}

/// Narrow features of the chain as (center, FWHM) pairs in rad/s.
std::vector<std::pair<double, double>> resonances(const SystemParams<double>& p);

/// Frequency grid used for the oscillator covariance integral.
FrequencyGrid covariance_grid(const SystemParams<double>& p, int density);

struct CovarianceSettings {
  int density = 8;
  int max_refinements = 6;
  double rel_tol = 1e-3;
};

/// V_u = integral dW/2pi of the oscillator block of S_out.
CovarianceMatrix4 unconditional_covariance(const SystemParams<double>& p, const CovarianceSettings& s = {});
/// Same integral on a given grid without refinement.
CovarianceMatrix4 covariance_on_grid(const SystemParams<double>& p, const FrequencyGrid& grid);

/// Per-group contributions to S_ii; groups sum to the total.
struct NoiseBudget {
  double total, shot, broadband, qba, thermal_M, thermal_S;
};
NoiseBudget noise_budget(double Omega, const SystemParams<double>& p);

}  // namespace hybrid
