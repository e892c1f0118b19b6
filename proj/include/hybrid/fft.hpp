#pragma once

#include <complex>
#include <vector>

namespace hybrid {

/// X_j = sum_k x_k exp(-2 pi i j k / n), j = 0..n/2.
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

/// Inverse of rfft with the 1/n factor, numpy convention.
std::vector<double> irfft(const std::vector<std::complex<double>>& X, std::size_t n);

/// Linear convolution of a with b, length a.size() + b.size() - 1.
std::vector<double> fft_convolve(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace hybrid
