#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hybrid/errors.hpp"

namespace hybrid {

template <class T>
using cplx = std::complex<T>;
template <class T>
using Mat2 = Eigen::Matrix<std::complex<T>, 2, 2>;
template <class T>
using Vec2 = Eigen::Matrix<std::complex<T>, 2, 1>;
template <class T>
using RealMat2 = Eigen::Matrix<T, 2, 2>;

using ComplexMat2 = Mat2<double>;
using CovarianceMatrix4 = Eigen::Matrix4d;

/// Units and vacuum normalisation. Config frequencies are Hz, internal ones rad/s.
struct Units {
  static constexpr double two_pi = 2.0 * std::numbers::pi;
  static constexpr double light_vacuum = 0.25;
  static constexpr double oscillator_vacuum = 0.5;
  static constexpr double hbar = 1.054571817e-34;
  static constexpr double k_B = 1.380649e-23;

  static constexpr double hz_to_rad(double f) { return two_pi * f; }
  static constexpr double rad_to_hz(double w) { return w / two_pi; }
};

inline constexpr int n_inputs = 11;
inline constexpr int n_outputs = 5;

/// Noise inputs, column order of the transfer matrix.
enum class In : int { FSX, FSP, FM, XLS, PLS, XLnu, PLnu, XLex, PLex, XLeta, PLeta };
/// Outputs, row order of the transfer matrix.
enum class Out : int { XM, PM, XS, PS, Pmeas };

constexpr int idx(In c) { return static_cast<int>(c); }
constexpr int idx(Out r) { return static_cast<int>(r); }

inline constexpr std::array<std::string_view, n_inputs> input_labels = {
    "F_S^X", "F_S^P", "F_M", "X_LS^in", "P_LS^in", "X_Lnu", "P_Lnu", "X_Lex", "P_Lex", "X_Leta", "P_Leta"};
inline constexpr std::array<std::string_view, n_outputs> output_labels = {"X_M", "P_M", "X_S", "P_S",
                                                                          "P_L^meas"};

/// Serialize a basis as a comma separated label list.
template <std::size_t N>
std::string basis_to_string(const std::array<std::string_view, N>& labels) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ',';
    s += labels[i];
  }
  return s;
}

/// Parse a basis back; throws ConfigError unless the labels match exactly in order.
template <std::size_t N>
std::array<std::string_view, N> basis_from_string(const std::string& s,
                                                  const std::array<std::string_view, N>& reference) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(',', pos);
    items.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (items.size() != N) throw ConfigError("channel basis has wrong length");
  std::array<std::string_view, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (items[i] != reference[i]) throw ConfigError("channel basis mismatch at position " + std::to_string(i));
    out[i] = reference[i];
  }
  return out;
}

/// Quadrature rotation [[cos a, -sin a], [sin a, cos a]].
template <class T>
RealMat2<T> rotation_matrix(T alpha) {
  using std::cos;
  using std::sin;
  RealMat2<T> o;
  o << cos(alpha), -sin(alpha), sin(alpha), cos(alpha);
  return o;
}

/// Beam-splitter loss: sqrt(nu) signal + sqrt(1-nu) vacuum.
template <class T>
Vec2<T> mix_loss(const Vec2<T>& signal, const Vec2<T>& vacuum, T nu) {
  if (!(nu >= T(0) && nu <= T(1))) throw InvalidParameter("transmission outside [0,1]");
  using std::sqrt;
  return sqrt(nu) * signal + sqrt(T(1) - nu) * vacuum;
}

/// Symmetrised input PSDs before broadband injection.
template <class T>
Eigen::Matrix<T, n_inputs, 1> vacuum_input_psd(T gamma_S0, T n_S, T gamma_M0, T n_M) {
  Eigen::Matrix<T, n_inputs, 1> s;
  s.setConstant(T(Units::light_vacuum));
  s(idx(In::FSX)) = gamma_S0 * (n_S + T(0.5));
  s(idx(In::FSP)) = gamma_S0 * (n_S + T(0.5));
  s(idx(In::FM)) = T(2) * gamma_M0 * (n_M + T(0.5));
  return s;
}

/// Ordered angular frequencies with the refinement regions that produced them.
struct FrequencyGrid {
  std::vector<double> points;
  std::vector<std::pair<double, double>> regions;  // (center, width)

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!(points[i] > points[i - 1])) return false;
    return true;
  }
  bool symmetric(double tol = 1e-12) const {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
      double scale = std::abs(points[i]);
      if (std::abs(points[i] + points[n - 1 - i]) > tol * scale + 1e-300) return false;
    }
    return true;
  }
};

/// Grid on [0, w_max] dense around each (center, width), sinh-spaced so each line reaches both grid ends.
/// `density` points per unit of asinh distance; the grid is mirrored when `symmetric`.
inline FrequencyGrid make_resonance_grid(const std::vector<std::pair<double, double>>& regions, double w_max,
                                         int density, bool symmetric = true, double span = 50.0) {
  std::vector<double> pts;
  pts.push_back(0.0);
  const int tail = 40 * density / 8 + 40;
  double w_min_width = w_max;
  for (const auto& [c, w] : regions) w_min_width = std::min(w_min_width, w);
  double lo = std::max(w_min_width * 1e-3, w_max * 1e-9);
  for (int k = 0; k <= tail; ++k) pts.push_back(lo * std::pow(w_max / lo, double(k) / tail));
  for (const auto& [c, w] : regions) {
    const double umax = std::asinh(std::max(span, (w_max + std::abs(c)) / w));
    const int n = std::max(8, int(2 * umax * density));
    for (int k = 0; k <= n; ++k) {
      double u = -umax + 2 * umax * k / n;
      double x = c + w * std::sinh(u);
      if (x > 0 && x < w_max) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  std::vector<double> uniq;
  for (double x : pts)
    if (uniq.empty() || x - uniq.back() > 1e-13 * x) uniq.push_back(x);
  FrequencyGrid g;
  g.regions = regions;
  if (symmetric) {
    for (auto it = uniq.rbegin(); it != uniq.rend(); ++it)
      if (*it > 0) g.points.push_back(-*it);
  }
  g.points.insert(g.points.end(), uniq.begin(), uniq.end());
  return g;
}

/// Composite trapezoid of samples f on grid x.
template <class V>
V trapezoid(const std::vector<double>& x, const std::vector<V>& f) {
  V acc = f[0] * 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) acc += (f[i] + f[i - 1]) * (0.5 * (x[i] - x[i - 1]));
  return acc;
}

}  // namespace hybrid
