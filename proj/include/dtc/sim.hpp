#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "dtc/metric.hpp"

namespace dtc {

enum class ScenarioKind {
  known_si,           // encoder adapts to the current interference symbol
  unknown_si,         // interference treated as noise; codebook over raw inputs
  interference_free,  // no interference at the channel at all
};

// For unknown_si and interference_free the codebook must consist of constant
// symbols (each stands for one raw input value).
struct Scenario {
  ScenarioKind kind = ScenarioKind::known_si;
  Codebook codebook;
};

void validate(const Scenario& scenario, const ChannelSpec& spec);

// x_i = t_i(s_i): the input actually transmitted for each interference
// symbol of the sequence.
std::vector<double> encode(const ChannelSpec& spec, const Codeword& word,
                           std::span<const int> state_indices);

// One channel use: f(x, s) plus sigma times a standard normal draw.
double channel_sample(const ChannelSpec& spec, int input_idx, int state_idx, double sigma,
                      std::mt19937_64& rng);

// Maximum-likelihood message index for a received block. Per-symbol
// likelihoods are mixture densities over the symbol's output points
// (a single Gaussian for interference_free); exact score ties are broken
// uniformly at random from the supplied generator.
std::size_t ml_decode(std::span<const double> y, const Scenario& scenario,
                      const ChannelSpec& spec, double sigma, std::mt19937_64& rng);

// Direct-domain variant (products of linear-domain likelihoods) for
// cross-checking the log-domain decoder at moderate SNR.
std::size_t ml_decode_linear(std::span<const double> y, const Scenario& scenario,
                             const ChannelSpec& spec, double sigma, std::mt19937_64& rng);

// Gaussian tail integral, computed through the complementary error function.
double q_function(double x);

// SNR convention: SNR = 1/sigma^2, so sigma = 10^(-snr_db/20).
double sigma_from_snr_db(double snr_db);

// Q(sqrt(sum of squared per-symbol distances) / (2 sigma)): the high-SNR
// pairwise error benchmark for two codewords.
double pep_bound(const ChannelSpec& spec, const Codeword& a, const Codeword& b, double sigma);

// Bounds on the log-likelihood-ratio offset induced by mixture weights:
// K1 = 2 sum log p(a_i) <= K <= K2 = 2 sum log(1/p(b_i)).
struct PepOffsetBounds {
  double k1 = 0.0;
  double k2 = 0.0;
};

PepOffsetBounds pep_offset_bounds(std::span<const double> pa, std::span<const double> pb);

// Average over transmitted messages of the summed pairwise benchmarks,
// clamped to 1.
double union_bound(const ChannelSpec& spec, const Codebook& cb, double sigma);
double union_bound(const ChannelSpec& spec, const Scenario& scenario, double sigma);

struct SimPoint {
  double snr_db = 0.0;
  double sigma = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double error_rate = 0.0;
  double union_bound = 0.0;
};

struct SimCurve {
  std::vector<SimPoint> rows;
};

// Monte Carlo message-error simulation with equiprobable messages and
// i.i.d. interference. One master seed; every (SNR point, fixed-size trial
// batch) owns a derived generator stream and batches sum order-independent
// error counts, so results are bit-identical for any worker count.
SimCurve monte_carlo(const ChannelSpec& spec, const Scenario& scenario,
                     std::span<const double> snr_db_grid, std::uint64_t trials,
                     std::uint64_t seed, unsigned threads = 0);

}  // namespace dtc
