#include "dtc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace dtc {

double min_gap(const OutputPointSet& a, const OutputPointSet& b) {
  std::size_t i = 0, j = 0;
  double best = std::numeric_limits<double>::infinity();
  while (i < a.points.size() && j < b.points.size()) {
    const double diff = a.points[i] - b.points[j];
    if (diff == 0.0) return 0.0;
    best = std::min(best, std::abs(diff));
    if (diff < 0.0) {
      ++i;
    } else {
      ++j;
    }
  }
  return best;
}

double si_distance(const ChannelSpec& spec, const AssociatedSymbol& t, const AssociatedSymbol& r) {
  return min_gap(output_points(spec, t), output_points(spec, r));
}

double no_si_distance(const ChannelSpec& spec, int x_idx, int z_idx) {
  const int q = spec.state_size();
  return si_distance(spec, constant_symbol(x_idx, q), constant_symbol(z_idx, q));
}

void validate_codebook(const Codebook& cb, const ChannelSpec& spec) {
  if (cb.codewords.empty()) {
    throw InvariantViolation("codewords", "codebook must be nonempty");
  }
  const std::size_t n = cb.block_length();
  for (std::size_t w = 0; w < cb.codewords.size(); ++w) {
    if (cb.codewords[w].size() != n) {
      throw InvariantViolation("codewords",
                               "codeword " + std::to_string(w + 1) + " has length " +
                                   std::to_string(cb.codewords[w].size()) + ", expected " +
                                   std::to_string(n));
    }
    for (const AssociatedSymbol& t : cb.codewords[w]) validate_symbol(t, spec);
  }
}

double codeword_sq_distance(const ChannelSpec& spec, const Codeword& a, const Codeword& b) {
  if (a.size() != b.size()) throw LengthMismatch("codewords differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = si_distance(spec, a[i], b[i]);
    acc += d * d;
  }
  return acc;
}

int hamming_distance(const Codeword& a, const Codeword& b) {
  if (a.size() != b.size()) throw LengthMismatch("codewords differ in length");
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += (a[i] != b[i]);
  return count;
}

int hamming_distance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw LengthMismatch("sequences differ in length");
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += (a[i] != b[i]);
  return count;
}

double euclid_sq_distance(std::span<const double> xs, std::span<const double> zs) {
  if (xs.size() != zs.size()) throw LengthMismatch("sequences differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - zs[i];
    acc += d * d;
  }
  return acc;
}

DistanceMatrix distance_matrix(const ChannelSpec& spec, std::span<const AssociatedSymbol> symbols) {
  DistanceMatrix m;
  m.symbols.assign(symbols.begin(), symbols.end());
  const std::size_t k = m.symbols.size();
  std::vector<OutputPointSet> pts;
  pts.reserve(k);
  for (const auto& t : m.symbols) pts.push_back(output_points(spec, t));

  m.d.assign(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double d = min_gap(pts[i], pts[j]);
      m.d[i * k + j] = d;
      m.d[j * k + i] = d;
    }
  }
  return m;
}

DistanceSpectrum distance_spectrum(const ChannelSpec& spec, const Codebook& cb) {
  validate_codebook(cb, spec);

  // Cache per-symbol point sets and pairwise symbol distances once; the
  // spectrum then only sums squared lookups.
  std::map<AssociatedSymbol, std::size_t> ids;
  for (const Codeword& w : cb.codewords) {
    for (const AssociatedSymbol& t : w) ids.emplace(t, ids.size());
  }
  std::vector<OutputPointSet> pts(ids.size());
  for (const auto& [sym, id] : ids) pts[id] = output_points(spec, sym);

  std::vector<std::vector<std::size_t>> words;
  words.reserve(cb.codewords.size());
  for (const Codeword& w : cb.codewords) {
    std::vector<std::size_t> ids_w;
    ids_w.reserve(w.size());
    for (const AssociatedSymbol& t : w) ids_w.push_back(ids.at(t));
    words.push_back(std::move(ids_w));
  }

  const std::size_t k = ids.size();
  std::vector<double> pair_d(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double d = min_gap(pts[i], pts[j]);
      pair_d[i * k + j] = d;
      pair_d[j * k + i] = d;
    }
  }

  std::vector<double> sq;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < words[a].size(); ++i) {
        const double d = pair_d[words[a][i] * k + words[b][i]];
        acc += d * d;
      }
      sq.push_back(acc);
    }
  }
  std::sort(sq.begin(), sq.end());

  DistanceSpectrum spectrum;
  spectrum.pair_count = sq.size();
  spectrum.min_sq = sq.empty() ? std::numeric_limits<double>::infinity() : sq.front();
  for (double v : sq) {
    if (!spectrum.entries.empty() && spectrum.entries.back().first == v) {
      ++spectrum.entries.back().second;
    } else {
      spectrum.entries.emplace_back(v, 1);
    }
  }
  return spectrum;
}

}  // namespace dtc
