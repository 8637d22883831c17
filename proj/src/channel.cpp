#include "dtc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace dtc {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;  // 1/sqrt(2*pi)

void check_strictly_increasing(const std::vector<double>& v, const char* field) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw InvariantViolation(field, "entry " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(v[i - 1] < v[i])) {
      throw InvariantViolation(field, "values must be strictly increasing");
    }
  }
}

}  // namespace

double ChannelSpec::combine(int input_idx, int state_idx) const {
  const double x = input.values[static_cast<std::size_t>(input_idx)];
  const double s = interference.values[static_cast<std::size_t>(state_idx)];
  switch (combiner.kind) {
    case CombinerKind::additive:
      return x + s;
    case CombinerKind::multiplicative:
      return s * x;
    case CombinerKind::tabulated:
      return combiner.table[static_cast<std::size_t>(input_idx)]
                           [static_cast<std::size_t>(state_idx)];
  }
  return 0.0;  // unreachable
}

void validate(const ChannelSpec& spec) {
  if (spec.input.values.empty()) {
    throw InvariantViolation("input", "alphabet must contain at least one value");
  }
  check_strictly_increasing(spec.input.values, "input");

  if (spec.interference.values.empty()) {
    throw InvariantViolation("interference.values", "alphabet must contain at least one value");
  }
  check_strictly_increasing(spec.interference.values, "interference.values");

  const std::size_t q = spec.interference.values.size();
  if (spec.interference.pmf.size() != q) {
    throw InvariantViolation("interference.pmf",
                             "expected " + std::to_string(q) + " entries, got " +
                                 std::to_string(spec.interference.pmf.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < q; ++i) {
    const double p = spec.interference.pmf[i];
    if (!std::isfinite(p) || !(p > 0.0)) {
      throw InvariantViolation("interference.pmf",
                               "entry " + std::to_string(i) + " must be > 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvariantViolation("interference.pmf",
                             "entries must sum to 1 (got " + std::to_string(sum) + ")");
  }

  if (spec.combiner.kind == CombinerKind::tabulated) {
    const std::size_t m = spec.input.values.size();
    if (spec.combiner.table.size() != m) {
      throw InvariantViolation("combiner.table", "expected " + std::to_string(m) + " rows");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (spec.combiner.table[i].size() != q) {
        throw InvariantViolation("combiner.table",
                                 "row " + std::to_string(i) + " must have " +
                                     std::to_string(q) + " entries");
      }
      for (double v : spec.combiner.table[i]) {
        if (!std::isfinite(v)) {
          throw InvariantViolation("combiner.table", "entries must be finite");
        }
      }
    }
  }

  if (spec.sigma != 0.0 && (!std::isfinite(spec.sigma) || spec.sigma <= 0.0)) {
    throw InvariantViolation("sigma", "must be > 0 when set");
  }
}

AssociatedSymbol constant_symbol(int input_idx, int q) {
  AssociatedSymbol t;
  t.choices.assign(static_cast<std::size_t>(q), input_idx);
  return t;
}

bool is_constant(const AssociatedSymbol& t) noexcept {
  for (int c : t.choices) {
    if (c != t.choices.front()) return false;
  }
  return !t.choices.empty();
}

void validate_symbol(const AssociatedSymbol& t, const ChannelSpec& spec) {
  if (t.width() != spec.state_size()) {
    throw InvariantViolation("symbol", "expected " + std::to_string(spec.state_size()) +
                                           " choices, got " + std::to_string(t.width()));
  }
  for (int c : t.choices) {
    if (c < 0 || c >= spec.input_size()) {
      throw InvariantViolation("symbol", "input index " + std::to_string(c + 1) +
                                             " outside [1, " +
                                             std::to_string(spec.input_size()) + "]");
    }
  }
}

std::optional<std::uint64_t> associated_count(const ChannelSpec& spec) {
  const auto m = static_cast<std::uint64_t>(spec.input_size());
  std::uint64_t count = 1;
  for (int j = 0; j < spec.state_size(); ++j) {
    if (m != 0 && count > std::numeric_limits<std::uint64_t>::max() / m) return std::nullopt;
    count *= m;
  }
  return count;
}

AssociatedSymbol symbol_at(const ChannelSpec& spec, std::uint64_t lex_index) {
  const auto m = static_cast<std::uint64_t>(spec.input_size());
  const int q = spec.state_size();
  AssociatedSymbol t;
  t.choices.assign(static_cast<std::size_t>(q), 0);
  for (int j = q - 1; j >= 0; --j) {
    t.choices[static_cast<std::size_t>(j)] = static_cast<int>(lex_index % m);
    lex_index /= m;
  }
  return t;
}

std::uint64_t symbol_index(const ChannelSpec& spec, const AssociatedSymbol& t) {
  const auto m = static_cast<std::uint64_t>(spec.input_size());
  std::uint64_t idx = 0;
  for (int c : t.choices) idx = idx * m + static_cast<std::uint64_t>(c);
  return idx;
}

AssociatedRange::iterator& AssociatedRange::iterator::operator++() {
  auto& ch = cur_.choices;
  for (std::size_t j = ch.size(); j-- > 0;) {
    if (++ch[j] < m_) return *this;
    ch[j] = 0;
  }
  done_ = true;
  return *this;
}

std::vector<AssociatedSymbol> enumerate_associated(const ChannelSpec& spec, std::uint64_t cap) {
  const auto count = associated_count(spec);
  if (!count || *count > cap) {
    throw CapExceeded("M^Q exceeds enumeration cap of " + std::to_string(cap) +
                      " symbols; use lazy iteration");
  }
  std::vector<AssociatedSymbol> out;
  out.reserve(static_cast<std::size_t>(*count));
  for (const AssociatedSymbol& t : AssociatedRange(spec)) out.push_back(t);
  return out;
}

OutputPointSet output_points(const ChannelSpec& spec, const AssociatedSymbol& t) {
  const int q = spec.state_size();
  std::vector<std::pair<double, double>> raw;
  raw.reserve(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) {
    raw.emplace_back(spec.combine(t.choices[static_cast<std::size_t>(j)], j),
                     spec.interference.pmf[static_cast<std::size_t>(j)]);
  }
  std::sort(raw.begin(), raw.end());

  OutputPointSet pts;
  for (const auto& [value, prob] : raw) {
    if (!pts.points.empty() && pts.points.back() == value) {
      pts.probs.back() += prob;
    } else {
      pts.points.push_back(value);
      pts.probs.push_back(prob);
    }
  }
  return pts;
}

double likelihood(double y, const OutputPointSet& pts, double sigma) {
  if (!(sigma > 0.0)) throw InvariantViolation("sigma", "must be > 0 for likelihood");
  const double inv = 1.0 / sigma;
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    const double z = (y - pts.points[i]) * inv;
    acc += pts.probs[i] * std::exp(-0.5 * z * z);
  }
  return acc * inv * kInvSqrt2Pi;
}

double log_likelihood(double y, const OutputPointSet& pts, double sigma) {
  if (!(sigma > 0.0)) throw InvariantViolation("sigma", "must be > 0 for likelihood");
  const double inv = 1.0 / sigma;
  double shift = -std::numeric_limits<double>::infinity();
  // terms log p(a) - (y-a)^2 / (2 sigma^2), aggregated around their max
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    const double z = (y - pts.points[i]) * inv;
    const double term = std::log(pts.probs[i]) - 0.5 * z * z;
    if (term > shift) {
      acc = acc * std::exp(shift - term) + 1.0;
      shift = term;
    } else {
      acc += std::exp(term - shift);
    }
  }
  return shift + std::log(acc) - std::log(sigma) -
         0.5 * std::log(2.0 * std::numbers::pi);
}

double likelihood(double y, const AssociatedSymbol& t, const ChannelSpec& spec) {
  return likelihood(y, output_points(spec, t), spec.sigma);
}

double log_likelihood(double y, const AssociatedSymbol& t, const ChannelSpec& spec) {
  return log_likelihood(y, output_points(spec, t), spec.sigma);
}

double transmitted_power(const ChannelSpec& spec, std::span<const AssociatedSymbol> symbols,
                         std::span<const double> usage) {
  if (symbols.size() != usage.size()) {
    throw LengthMismatch("usage distribution must match the symbol list");
  }
  double total = 0.0;
  for (double p : usage) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InvariantViolation("usage", "probabilities must be >= 0");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvariantViolation("usage", "probabilities must sum to 1");
  }

  double power = 0.0;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    validate_symbol(symbols[k], spec);
    double sym_power = 0.0;
    for (int j = 0; j < spec.state_size(); ++j) {
      const double x = spec.input.values[static_cast<std::size_t>(
          symbols[k].choices[static_cast<std::size_t>(j)])];
      sym_power += spec.interference.pmf[static_cast<std::size_t>(j)] * x * x;
    }
    power += usage[k] * sym_power;
  }
  return power;
}

}  // namespace dtc
