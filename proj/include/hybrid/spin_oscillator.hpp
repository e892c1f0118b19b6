#pragma once

#include "hybrid/model_core.hpp"

namespace hybrid {

/// Broadband spin mode, used for CIFAR and as added phase noise.
template <class T>
struct BroadbandParams {
  T gamma_bb = T(0);
  T Gamma_S_bb = T(0);
  T Sbar_S_bb = T(0);  // shot-noise units at resonance
};

/// Collective spin oscillator. omega_S < 0 is the negative-mass configuration.
template <class T>
struct SpinParams {
  T omega_S = T(0);
  T gamma_S0 = T(1);
  T Gamma_S = T(0);
  T zeta_S = T(0);
  T n_S = T(0);
  BroadbandParams<T> bb;

  T delta_gamma_S() const { return T(2) * zeta_S * Gamma_S; }
  T gamma_S() const { return gamma_S0 + delta_gamma_S(); }

  void validate() const {
    using std::abs;
    if (!(gamma_S0 > T(0))) throw InvalidParameter("gamma_S0 must be positive");
    if (!(Gamma_S >= T(0))) throw InvalidParameter("Gamma_S must be non-negative");
    if (!(abs(zeta_S) < T(1))) throw InvalidParameter("|zeta_S| must be below 1");
    if (!(n_S >= T(0))) throw InvalidParameter("n_S must be non-negative");
    if (!(bb.gamma_bb >= T(0) && bb.Gamma_S_bb >= T(0) && bb.Sbar_S_bb >= T(0)))
      throw InvalidParameter("broadband parameters must be non-negative");
  }
};

template <class T>
struct SpinResponseBlocks {
  Mat2<T> L;
  RealMat2<T> Z;
};

namespace detail {
template <class T>
Mat2<T> spin_L(T Omega, T omega, T damping) {
  const cplx<T> d(damping, -Omega);
  const cplx<T> det = d * d + omega * omega;
  Mat2<T> L;
  L << d / det, omega / det, -omega / det, d / det;
  return L;
}
}  // namespace detail

template <class T>
RealMat2<T> spin_Z(T zeta) {
  RealMat2<T> z;
  z << T(0), -zeta, T(1), T(0);
  return z;
}

/// L = inv([[g/2 + zeta Gamma - i W, -w], [w, same]]) and Z = [[0, -zeta], [1, 0]].
template <class T>
SpinResponseBlocks<T> spin_blocks(T Omega, const SpinParams<T>& p) {
  if (!(p.gamma_S0 > T(0))) throw InvalidParameter("gamma_S0 must be positive");
  return {detail::spin_L(Omega, p.omega_S, p.gamma_S0 / T(2) + p.zeta_S * p.Gamma_S), spin_Z(p.zeta_S)};
}

/// Spin quadratures driven by input light X_in and force F.
template <class T>
Vec2<T> spin_state_response(T Omega, const SpinParams<T>& p, const Vec2<T>& x_in, const Vec2<T>& f) {
  using std::sqrt;
  const auto b = spin_blocks(Omega, p);
  return T(2) * sqrt(p.Gamma_S) * (b.L * (b.Z.template cast<cplx<T>>() * x_in)) + b.L * f;
}

/// Output light quadratures after the spin.
template <class T>
Vec2<T> spin_io(T Omega, const SpinParams<T>& p, const Vec2<T>& x_in, const Vec2<T>& f) {
  using std::sqrt;
  const auto b = spin_blocks(Omega, p);
  const Mat2<T> Z = b.Z.template cast<cplx<T>>();
  return (Mat2<T>::Identity() + T(2) * p.Gamma_S * Z * b.L * Z) * x_in + sqrt(p.Gamma_S) * Z * b.L * f;
}

/// Simplified susceptibility w_S / (w_S^2 - W^2 - i W gamma).
template <class T>
cplx<T> chi_S(T Omega, const SpinParams<T>& p, bool include_broadening) {
  const T g = include_broadening ? p.gamma_S() : p.gamma_S0;
  return p.omega_S / cplx<T>(p.omega_S * p.omega_S - Omega * Omega, -Omega * g);
}

/// Detected phase-quadrature response to a unit coherent drive O_{s theta_in} (1, 0).
/// Narrowband and broadband modes respond coherently; thermal terms are ignored.
template <class T>
cplx<T> cifar_response(T Omega_RF, T theta_in, const SpinParams<T>& p, int theta_sign = 1) {
  using std::sqrt;
  p.validate();
  const RealMat2<T> O = rotation_matrix<T>(T(theta_sign) * theta_in);
  const Vec2<T> x_in = O.col(0).template cast<cplx<T>>();
  const Mat2<T> Z = spin_Z(p.zeta_S).template cast<cplx<T>>();
  const Mat2<T> L = detail::spin_L(Omega_RF, p.omega_S, p.gamma_S0 / T(2) + p.zeta_S * p.Gamma_S);
  Vec2<T> out = x_in + T(2) * p.Gamma_S * Z * L * Z * x_in;
  if (p.bb.Gamma_S_bb > T(0)) {
    const Mat2<T> Lbb = detail::spin_L(Omega_RF, p.omega_S, p.bb.gamma_bb / T(2) + p.zeta_S * p.bb.Gamma_S_bb);
    out += T(2) * p.bb.Gamma_S_bb * Z * Lbb * Z * x_in;
  }
  return out(1);
}

}  // namespace hybrid
