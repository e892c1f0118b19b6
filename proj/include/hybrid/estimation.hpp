#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "hybrid/hybrid_chain.hpp"

namespace hybrid {

/// Welch estimate on bins W_j = 2 pi j / (L dt), j = 0..L/2, same normalization as the model S_ii.
struct Periodogram {
  std::vector<double> omega;
  std::vector<double> psd;
  int segments = 0;
  int segment_length = 0;
};

/// Hann window, 50% overlap, `segments` segments of power-of-two length.
Periodogram welch_psd(const std::vector<double>& x, double dt, int segments);

struct LikelihoodSpec {
  double relative_error = 0.08;
  double floor = 0.1;  // shot-noise units
};

struct Prior {
  double mean = 0;
  double sd = 1;
};

/// Free parameter in config units; spectrum = -1 marks a shared parameter.
struct FreeParameter {
  std::string name;
  int spectrum = -1;
  Prior prior;
};

/// Measured S_ii in shot-noise units at angular frequencies `omega`, with the fixed parameters of its run.
struct ObservedSpectrum {
  std::vector<double> omega;
  std::vector<double> value;
  SystemParams<double> base;
};

/// Parameter names accepted by set_parameter / get_parameter.
const std::vector<std::string>& parameter_names();
void set_parameter(SystemParams<double>& p, const std::string& name, double value);
double get_parameter(const SystemParams<double>& p, const std::string& name);

struct FitProblem {
  std::vector<ObservedSpectrum> spectra;
  std::vector<FreeParameter> params;
  LikelihoodSpec likelihood;

  /// Throws ConfigError unless every free parameter appears exactly once.
  void validate() const;
  std::vector<SystemParams<double>> instantiate(const Eigen::VectorXd& theta) const;
  Eigen::VectorXd prior_means() const;
  Eigen::VectorXd prior_sds() const;
};

/// Model S_ii in shot-noise units.
std::vector<double> model_spectrum(const SystemParams<double>& p, const std::vector<double>& omega);

double log_prior(const Eigen::VectorXd& theta, const FitProblem& f);
/// Gaussian log-likelihood with sigma = rel * S_model + floor, plus log-priors.
double log_likelihood(const Eigen::VectorXd& theta, const FitProblem& f);
/// log_likelihood mapped to -inf outside the parameter domain, for samplers.
double log_posterior(const Eigen::VectorXd& theta, const FitProblem& f);

/// Model spectrum plus draws from the heteroscedastic error model.
std::vector<double> synthetic_observation(const std::vector<double>& model, const LikelihoodSpec& lik,
                                          std::uint64_t seed);

struct McmcSettings {
  int walkers = 32;
  int burn_in = 500;
  int steps = 1000;
  double stretch = 2.0;
  std::uint64_t seed = 1;
};

struct PosteriorSample {
  Eigen::MatrixXd draws;  // (steps * walkers) x dim, step-major
  std::vector<double> log_post;
  double acceptance = 0;
  int walkers = 0, burn_in = 0, steps = 0;

  Eigen::VectorXd mean() const;
  Eigen::VectorXd sd() const;
};

using LogDensity = std::function<double(const Eigen::VectorXd&)>;

/// Gaussian ball of walkers around `center`, all inside the support of `logp`.
Eigen::MatrixXd initial_ensemble(const LogDensity& logp, const Eigen::VectorXd& center, const Eigen::VectorXd& scale,
                                 int walkers, std::uint64_t seed);

/// Affine-invariant stretch-move ensemble sampler with half-ensemble updates.
PosteriorSample ensemble_mcmc(const LogDensity& logp, const Eigen::MatrixXd& init, const McmcSettings& s);

struct VcSummary {
  std::vector<double> values;
  double mean = 0;
  double sd = 0;
  int failures = 0;
  double fraction_below_one = 0;
};

/// Evaluates `vc` on n_draws randomly chosen posterior draws; failing draws are counted and skipped.
VcSummary posterior_vc(const PosteriorSample& s, int n_draws, std::uint64_t seed,
                       const std::function<double(const Eigen::VectorXd&)>& vc);

}  // namespace hybrid
