#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dtc/channel.hpp"

namespace dtc {

// Smallest absolute gap between two sorted point lists; one two-pointer
// sweep, O(|A| + |B|). Zero exactly when the sets share a point.
double min_gap(const OutputPointSet& a, const OutputPointSet& b);

// Distance between two symbols of the associated channel: the minimum gap
// between their noiseless output-point sets. Symmetric and nonnegative, but
// NOT a metric — the triangle inequality can fail.
double si_distance(const ChannelSpec& spec, const AssociatedSymbol& t, const AssociatedSymbol& r);

// Distance between raw inputs when the encoder does not see the
// interference; equals si_distance of the two constant symbols.
double no_si_distance(const ChannelSpec& spec, int x_idx, int z_idx);

using Codeword = std::vector<AssociatedSymbol>;

struct Codebook {
  std::vector<Codeword> codewords;

  std::size_t size() const noexcept { return codewords.size(); }
  std::size_t block_length() const noexcept {
    return codewords.empty() ? 0 : codewords.front().size();
  }
  friend bool operator==(const Codebook&, const Codebook&) = default;
};

// Codewords must all have length n and hold symbols valid for the spec.
void validate_codebook(const Codebook& cb, const ChannelSpec& spec);

// Sum over positions of the squared per-symbol distance.
double codeword_sq_distance(const ChannelSpec& spec, const Codeword& a, const Codeword& b);

int hamming_distance(const Codeword& a, const Codeword& b);
int hamming_distance(std::span<const int> a, std::span<const int> b);
double euclid_sq_distance(std::span<const double> xs, std::span<const double> zs);

struct DistanceMatrix {
  std::vector<AssociatedSymbol> symbols;
  std::vector<double> d;  // row-major, symmetric, zero diagonal

  double at(std::size_t i, std::size_t j) const { return d[i * symbols.size() + j]; }
};

DistanceMatrix distance_matrix(const ChannelSpec& spec, std::span<const AssociatedSymbol> symbols);

// Multiset of squared codeword distances over all unordered distinct pairs,
// stored as sorted (value, multiplicity) entries for stable comparison.
struct DistanceSpectrum {
  std::vector<std::pair<double, std::size_t>> entries;
  double min_sq = 0.0;
  std::size_t pair_count = 0;
};

DistanceSpectrum distance_spectrum(const ChannelSpec& spec, const Codebook& cb);

}  // namespace dtc
