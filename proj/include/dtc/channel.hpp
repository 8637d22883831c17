#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "dtc/errors.hpp"

namespace dtc {

// Channel input alphabet: strictly increasing real amplitudes x_1 < ... < x_M.
// M >= 2 is required for coding tasks; M = 1 is accepted for analysis.
struct InputAlphabet {
  std::vector<double> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
};

// Interference alphabet s_1 < ... < s_Q with its pmf (entries > 0, sum 1).
struct InterferenceAlphabet {
  std::vector<double> values;
  std::vector<double> pmf;

  int size() const noexcept { return static_cast<int>(values.size()); }
};

enum class CombinerKind { additive, multiplicative, tabulated };

// How input and interference combine into the noiseless channel output:
// x + s, s * x, or an explicit M x Q table indexed by (input, state).
struct StateCombiner {
  CombinerKind kind = CombinerKind::additive;
  std::vector<std::vector<double>> table;  // tabulated only
};

struct ChannelSpec {
  InputAlphabet input;
  InterferenceAlphabet interference;
  StateCombiner combiner;
  double sigma = 0.0;  // noise standard deviation; 0 means unset (analysis only)

  int input_size() const noexcept { return input.size(); }
  int state_size() const noexcept { return interference.size(); }
  bool additive() const noexcept { return combiner.kind == CombinerKind::additive; }

  // Noiseless channel output f(x, s) for input index i and state index j.
  double combine(int input_idx, int state_idx) const;
};

// Throws InvariantViolation naming the offending field path.
void validate(const ChannelSpec& spec);

// One input symbol of the state-free channel built over functions S -> X.
// choices[j] is the input index transmitted when the j-th smallest
// interference value occurs. Symbols index into X rather than storing
// values, so identity is exact and order-stable.
struct AssociatedSymbol {
  std::vector<int> choices;

  int width() const noexcept { return static_cast<int>(choices.size()); }
  friend auto operator<=>(const AssociatedSymbol&, const AssociatedSymbol&) = default;
};

AssociatedSymbol constant_symbol(int input_idx, int q);
bool is_constant(const AssociatedSymbol& t) noexcept;

// Throws InvariantViolation unless t has width Q with indices in [0, M).
void validate_symbol(const AssociatedSymbol& t, const ChannelSpec& spec);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

// M^Q, or nullopt on uint64 overflow.
std::optional<std::uint64_t> associated_count(const ChannelSpec& spec);

// Symbol at the given position of the lexicographic enumeration
// (choices[0] most significant, digits ascending).
AssociatedSymbol symbol_at(const ChannelSpec& spec, std::uint64_t lex_index);
std::uint64_t symbol_index(const ChannelSpec& spec, const AssociatedSymbol& t);

// Lazy lexicographic iteration over all M^Q symbols; nothing materialized.
// M^Q grows quickly, so prefer this over enumerate_associated for large Q.
class AssociatedRange {
 public:
  AssociatedRange(int m, int q) : m_(m), q_(q) {}
  explicit AssociatedRange(const ChannelSpec& spec)
      : AssociatedRange(spec.input_size(), spec.state_size()) {}

  class iterator {
   public:
    using value_type = AssociatedSymbol;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int m, int q, bool done) : m_(m), done_(done) {
      cur_.choices.assign(static_cast<std::size_t>(q), 0);
    }

    const AssociatedSymbol& operator*() const noexcept { return cur_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
      return it.done_;
    }

   private:
    AssociatedSymbol cur_;
    int m_ = 0;
    bool done_ = false;
  };

  iterator begin() const { return iterator(m_, q_, q_ == 0 || m_ == 0); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  int m_ = 0;
  int q_ = 0;
};

// All M^Q symbols in lexicographic order. Throws CapExceeded if M^Q > cap;
// callers that only stream symbols should use AssociatedRange instead.
std::vector<AssociatedSymbol> enumerate_associated(const ChannelSpec& spec,
                                                   std::uint64_t cap = kDefaultEnumerationCap);

// Distinct noiseless output values {f(t(s), s)} of one symbol with
// probabilities aggregated over coinciding states. Merging uses exact
// floating equality: alphabets are user-supplied exact reals, so collisions
// such as -1+1 == +1-1 are intentional.
struct OutputPointSet {
  std::vector<double> points;  // sorted ascending, distinct
  std::vector<double> probs;   // aggregated, same length

  std::size_t size() const noexcept { return points.size(); }
};

OutputPointSet output_points(const ChannelSpec& spec, const AssociatedSymbol& t);

// Mixture density sum_a p(a) phi((y-a)/sigma)/sigma and its log, the latter
// computed with a max-shifted log-sum so deep tails do not underflow.
double likelihood(double y, const OutputPointSet& pts, double sigma);
double log_likelihood(double y, const OutputPointSet& pts, double sigma);
double likelihood(double y, const AssociatedSymbol& t, const ChannelSpec& spec);
double log_likelihood(double y, const AssociatedSymbol& t, const ChannelSpec& spec);

// E[X^2] under a usage distribution over the given symbols: the power of the
// channel input itself, independent of the combiner.
double transmitted_power(const ChannelSpec& spec, std::span<const AssociatedSymbol> symbols,
                         std::span<const double> usage);

}  // namespace dtc
