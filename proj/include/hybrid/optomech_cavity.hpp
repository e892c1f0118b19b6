#pragma once

#include <Eigen/Eigenvalues>

#include "hybrid/model_core.hpp"

namespace hybrid {

/// Membrane-in-cavity parameters, all rates in rad/s.
template <class T>
struct OptoMechParams {
  T omega_M0 = T(1);
  T gamma_M0 = T(1e-3);
  T kappa = T(1);
  T kappa_in = T(1);
  T kappa_ex = T(0);
  T Delta = T(0);
  T g = T(0);
  T n_M0 = T(0);

  T psi_in() const {
    using std::atan;
    return atan(T(2) * Delta / kappa);
  }
  T psi_out() const {
    using std::atan;
    const T d = kappa_in - kappa_ex;
    if (d == T(0)) return Delta > T(0) ? T(std::numbers::pi / 2) : (Delta < T(0) ? T(-std::numbers::pi / 2) : T(0));
    return atan(T(2) * Delta / d);
  }
  T Q() const { return omega_M0 / gamma_M0; }

  void validate() const {
    using std::abs;
    if (!(kappa > T(0))) throw InvalidParameter("kappa must be positive");
    if (!(kappa_in > T(0) && kappa_ex >= T(0))) throw InvalidParameter("kappa_in > 0 and kappa_ex >= 0 required");
    if (abs(kappa_in + kappa_ex - kappa) > T(1e-9) * kappa) throw InvalidParameter("kappa != kappa_in + kappa_ex");
    if (!(omega_M0 > T(0) && gamma_M0 > T(0))) throw InvalidParameter("omega_M0 and gamma_M0 must be positive");
    if (!(n_M0 >= T(0))) throw InvalidParameter("n_M0 must be non-negative");
  }
};

/// Bath occupancy k_B T / (hbar w).
inline double thermal_occupancy(double temperature_K, double omega) {
  return Units::k_B * temperature_K / (Units::hbar * omega);
}

template <class T>
struct CavityBlocks {
  Mat2<T> A;
  Eigen::Matrix<T, 2, 1> B;
  Eigen::Matrix<T, 1, 2> C;
  Mat2<T> Y;
  cplx<T> chi_M00;
  cplx<T> chi_M;
};

template <class T>
cplx<T> chi_M00(T Omega, const OptoMechParams<T>& p) {
  return p.omega_M0 / cplx<T>(p.omega_M0 * p.omega_M0 - Omega * Omega, -Omega * p.gamma_M0);
}

template <class T>
CavityBlocks<T> cavity_blocks(T Omega, const OptoMechParams<T>& p) {
  if (!(p.kappa > T(0))) throw InvalidParameter("kappa must be positive");
  CavityBlocks<T> b;
  const cplx<T> a(p.kappa / T(2), -Omega);
  b.A << a, p.Delta, -p.Delta, a;
  b.B << T(0), T(-2) * p.g;
  b.C << T(-4) * p.g, T(0);
  b.chi_M00 = chi_M00(Omega, p);
  b.Y = b.A - b.chi_M00 * (b.B * b.C).template cast<cplx<T>>();
  // C A^-1 B = 8 g^2 (A^-1)_{01}
  const cplx<T> a_inv01 = -p.Delta / (a * a + p.Delta * p.Delta);
  b.chi_M = T(1) / (T(1) / b.chi_M00 - T(8) * p.g * p.g * a_inv01);
  return b;
}

template <class T>
struct Lorentzian {
  cplx<T> value;
  T magnitude;
  T Theta;
};

/// Sideband amplitude (k/2) / (k/2 - i(W + Delta)).
template <class T>
Lorentzian<T> lorentzian(T Omega, const OptoMechParams<T>& p) {
  const cplx<T> v = (p.kappa / T(2)) / cplx<T>(p.kappa / T(2), -(Omega + p.Delta));
  return {v, std::abs(v), std::arg(v)};
}

/// Roots s of the mechanical characteristic polynomial in s = -i W.
template <class T>
std::vector<cplx<T>> mechanical_poles(const OptoMechParams<T>& p) {
  // solved for z = s / omega_M0
  const T u = p.omega_M0;
  const T w = p.omega_M0 / u, gm = p.gamma_M0 / u, k = p.kappa / u, D = p.Delta / u, g = p.g / u;
  // (s^2 + gm s + w^2)(s^2 + k s + k^2/4 + D^2) + 8 g^2 D w
  const T c2 = k * k / T(4) + D * D;
  Eigen::Matrix<T, 5, 1> c;  // c0 + c1 s + ... + s^4
  c(4) = T(1);
  c(3) = k + gm;
  c(2) = c2 + gm * k + w * w;
  c(1) = gm * c2 + w * w * k;
  c(0) = w * w * c2 + T(8) * g * g * D * w;
  Eigen::Matrix<T, 4, 4> comp = Eigen::Matrix<T, 4, 4>::Zero();
  for (int i = 1; i < 4; ++i) comp(i, i - 1) = T(1);
  for (int i = 0; i < 4; ++i) comp(i, 3) = -c(i);
  Eigen::EigenSolver<Eigen::Matrix<T, 4, 4>> es(comp, false);
  std::vector<cplx<T>> r;
  for (int i = 0; i < 4; ++i) r.push_back(u * es.eigenvalues()(i));
  return r;
}

template <class T>
struct EffectiveMechanics {
  T omega_M;  // peak of |chi_M|
  T gamma_M;  // -2 Re of the mechanical pole
};

/// Optical-spring shifted resonance and damped linewidth from the exact blocks.
template <class T>
EffectiveMechanics<T> effective_mechanics(const OptoMechParams<T>& p) {
  using std::abs;
  const auto roots = mechanical_poles(p);
  for (const auto& s : roots)
    if (!(s.real() < T(0))) throw UnstableSystem("optomechanical system is unstable");
  const cplx<T> target(-p.gamma_M0 / T(2), p.omega_M0);
  cplx<T> best = roots[0];
  for (const auto& s : roots)
    if (abs(cplx<T>(s.real(), abs(s.imag())) - target) < abs(cplx<T>(best.real(), abs(best.imag())) - target))
      best = s;
  const T w0 = abs(best.imag());
  const T gm = T(-2) * best.real();
  T lo = w0 - T(4) * gm, hi = w0 + T(4) * gm;
  if (lo <= T(0)) lo = w0 * T(0.5);
  auto f = [&](T x) { return -abs(cavity_blocks(x, p).chi_M); };
  const T phi = (std::sqrt(T(5)) - T(1)) / T(2);
  T x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  T f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && (hi - lo) > T(1e-15) * w0; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return {(lo + hi) / T(2), gm};
}

template <class T>
struct ReadoutAsymmetry {
  T Gamma_M;
  T zeta_M;
  T omega_M;
};

/// Readout rate and sideband asymmetry at the shifted resonance.
template <class T>
ReadoutAsymmetry<T> readout_and_asymmetry(const OptoMechParams<T>& p) {
  const T wm = effective_mechanics(p).omega_M;
  const T lp = lorentzian(wm, p).magnitude;
  const T lm = lorentzian(-wm, p).magnitude;
  const T Gamma = T(4) * p.g * p.g / p.kappa * (lp + lm) * (lp + lm);
  return {Gamma, (lp - lm) / (lp + lm), wm};
}

/// Linear response of membrane and reflected field to (in, ex, F_M).
template <class T>
struct CavityTransfer {
  Eigen::Matrix<cplx<T>, 1, 2> xm_in, xm_ex;
  cplx<T> xm_f;
  Mat2<T> out_in, out_ex;
  Vec2<T> out_f;
};

template <class T>
CavityTransfer<T> cavity_transfer(T Omega, const OptoMechParams<T>& p) {
  using std::sqrt;
  const auto b = cavity_blocks(Omega, p);
  const Mat2<T> Yi = b.Y.inverse();
  const Mat2<T> Oin_t = rotation_matrix<T>(p.psi_in()).transpose().template cast<cplx<T>>();
  const Mat2<T> Oout_t = rotation_matrix<T>(p.psi_out()).transpose().template cast<cplx<T>>();
  const Eigen::Matrix<cplx<T>, 1, 2> CY = b.C.template cast<cplx<T>>() * Yi;
  CavityTransfer<T> t;
  t.xm_in = -b.chi_M00 * sqrt(p.kappa_in) * CY * Oin_t;
  t.xm_ex = -b.chi_M00 * sqrt(p.kappa_ex) * CY * Oin_t;
  t.xm_f = b.chi_M;
  t.out_in = Oout_t * (p.kappa_in * Yi - Mat2<T>::Identity()) * Oin_t;
  t.out_ex = sqrt(p.kappa_in * p.kappa_ex) * Oout_t * Yi * Oin_t;
  t.out_f = -sqrt(p.kappa_in) * b.chi_M00 * (Oout_t * Yi * b.B.template cast<cplx<T>>());
  return t;
}

template <class T>
struct MechState {
  cplx<T> X_M;
  cplx<T> P_M;
};

template <class T>
MechState<T> mech_response(T Omega, const OptoMechParams<T>& p, const Vec2<T>& x_in, const Vec2<T>& x_ex,
                           cplx<T> F_M) {
  const auto t = cavity_transfer(Omega, p);
  const cplx<T> x = (t.xm_in * x_in)(0) + (t.xm_ex * x_ex)(0) + t.xm_f * F_M;
  return {x, cplx<T>(0, -Omega) * x / p.omega_M0};
}

template <class T>
Vec2<T> cavity_io(T Omega, const OptoMechParams<T>& p, const Vec2<T>& x_in, const Vec2<T>& x_ex, cplx<T> F_M) {
  const auto t = cavity_transfer(Omega, p);
  return t.out_in * x_in + t.out_ex * x_ex + t.out_f * F_M;
}

/// Reflected quadrature PSD in shot-noise units; the detected row is the P component of O_angle X_out.
template <class T>
T squeezing_spectrum(T Omega, const OptoMechParams<T>& p, T angle) {
  const auto t = cavity_transfer(Omega, p);
  const Eigen::Matrix<cplx<T>, 1, 2> r = rotation_matrix<T>(angle).row(1).template cast<cplx<T>>();
  const auto a = r * t.out_in;
  const auto e = r * t.out_ex;
  const cplx<T> f = (r * t.out_f)(0);
  const T light = T(Units::light_vacuum);
  const T s = light * (a.squaredNorm() + e.squaredNorm()) + std::norm(f) * T(2) * p.gamma_M0 * (p.n_M0 + T(0.5));
  return s / light;
}

}  // namespace hybrid
