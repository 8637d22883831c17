#include "dtc/pairsearch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dtc {

namespace {

void require_binary(const ChannelSpec& spec, const char* what) {
  if (spec.input_size() != 2) {
    throw InvariantViolation("input", std::string(what) + " requires exactly 2 input values");
  }
}

double min_interference_gap(const ChannelSpec& spec) {
  const auto& s = spec.interference.values;
  double gap = std::numeric_limits<double>::infinity();  // empty min at Q = 1
  for (std::size_t i = 1; i < s.size(); ++i) gap = std::min(gap, s[i] - s[i - 1]);
  return gap;
}

// Iterative Tarjan SCC over an implication graph with `nodes` literals.
class TwoSat {
 public:
  explicit TwoSat(int vars) : vars_(vars), adj_(static_cast<std::size_t>(2 * vars)) {}

  static int lit(int var, bool value) { return 2 * var + (value ? 1 : 0); }

  // Forbid the assignment (var_a = a) AND (var_b = b).
  void forbid(int var_a, bool a, int var_b, bool b) {
    adj_[static_cast<std::size_t>(lit(var_a, a))].push_back(lit(var_b, !b));
    adj_[static_cast<std::size_t>(lit(var_b, b))].push_back(lit(var_a, !a));
  }

  std::optional<std::vector<bool>> solve() {
    const int n = 2 * vars_;
    comp_.assign(static_cast<std::size_t>(n), -1);
    index_.assign(static_cast<std::size_t>(n), -1);
    low_.assign(static_cast<std::size_t>(n), 0);
    on_stack_.assign(static_cast<std::size_t>(n), false);
    next_index_ = 0;
    comp_count_ = 0;

    for (int v = 0; v < n; ++v) {
      if (index_[static_cast<std::size_t>(v)] < 0) strongconnect(v);
    }

    std::vector<bool> assignment(static_cast<std::size_t>(vars_));
    for (int v = 0; v < vars_; ++v) {
      const int c_true = comp_[static_cast<std::size_t>(lit(v, true))];
      const int c_false = comp_[static_cast<std::size_t>(lit(v, false))];
      if (c_true == c_false) return std::nullopt;
      // Tarjan numbers components in reverse topological order, so the
      // smaller id is closer to the sinks and safe to set true.
      assignment[static_cast<std::size_t>(v)] = c_true < c_false;
    }
    return assignment;
  }

 private:
  void strongconnect(int root) {
    struct Frame {
      int node;
      std::size_t next_edge;
    };
    std::vector<Frame> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, edge] = stack.back();
      const auto vu = static_cast<std::size_t>(v);
      if (edge == 0) {
        index_[vu] = low_[vu] = next_index_++;
        scc_stack_.push_back(v);
        on_stack_[vu] = true;
      }
      bool descended = false;
      while (edge < adj_[vu].size()) {
        const int w = adj_[vu][edge++];
        const auto wu = static_cast<std::size_t>(w);
        if (index_[wu] < 0) {
          stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack_[wu]) low_[vu] = std::min(low_[vu], index_[wu]);
      }
      if (descended) continue;
      if (low_[vu] == index_[vu]) {
        int w;
        do {
          w = scc_stack_.back();
          scc_stack_.pop_back();
          on_stack_[static_cast<std::size_t>(w)] = false;
          comp_[static_cast<std::size_t>(w)] = comp_count_;
        } while (w != v);
        ++comp_count_;
      }
      stack.pop_back();
      if (!stack.empty()) {
        const auto pu = static_cast<std::size_t>(stack.back().node);
        low_[pu] = std::min(low_[pu], low_[vu]);
      }
    }
  }

  int vars_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> comp_, index_, low_;
  std::vector<bool> on_stack_;
  std::vector<int> scc_stack_;
  int next_index_ = 0;
  int comp_count_ = 0;
};

}  // namespace

PairResult construct_disjoint_pair(const ChannelSpec& spec) {
  require_binary(spec, "construct_disjoint_pair");
  if (!spec.additive()) {
    throw InvariantViolation("combiner",
                             "construct_disjoint_pair is defined for the additive model only");
  }
  const int q = spec.state_size();

  std::vector<double> first_pts, second_pts;
  AssociatedSymbol first, second;
  auto contains = [](const std::vector<double>& v, double x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  for (int k = 0; k < q; ++k) {
    const double lo = spec.combine(0, k);
    const double hi = spec.combine(1, k);
    // hi exceeds every element placed so far, so only lo can collide.
    if (contains(second_pts, lo)) {
      second_pts.push_back(lo);
      second.choices.push_back(0);
      first_pts.push_back(hi);
      first.choices.push_back(1);
    } else {
      // already in the first multiset, or unclaimed (tie-break: first).
      first_pts.push_back(lo);
      first.choices.push_back(0);
      second_pts.push_back(hi);
      second.choices.push_back(1);
    }
  }
  return {first, second, si_distance(spec, first, second)};
}

PairResult max_pair_bruteforce(const ChannelSpec& spec, std::uint64_t budget) {
  if (spec.input_size() < 2) {
    throw InvariantViolation("input", "pair search requires at least 2 input values");
  }
  const auto count = associated_count(spec);
  if (!count || *count > (std::uint64_t{1} << 32) ||
      *count * (*count - 1) / 2 > budget) {
    throw BudgetExceeded("pair search needs more than " + std::to_string(budget) +
                         " evaluations");
  }
  const auto symbols = enumerate_associated(spec, *count);
  std::vector<OutputPointSet> pts;
  pts.reserve(symbols.size());
  for (const auto& t : symbols) pts.push_back(output_points(spec, t));

  double best = -1.0;
  std::size_t bi = 0, bj = 1;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      const double d = min_gap(pts[i], pts[j]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  return {symbols[bi], symbols[bj], best};
}

std::vector<double> candidate_distances(const ChannelSpec& spec) {
  const int m = spec.input_size();
  const int q = spec.state_size();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(q));
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < q; ++k) values.push_back(spec.combine(i, k));
  }
  std::vector<double> out;
  out.reserve(values.size() * values.size());
  for (double a : values) {
    for (double b : values) out.push_back(std::abs(a - b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BipartiteDistanceGraph build_graph(const ChannelSpec& spec, double d0) {
  require_binary(spec, "build_graph");
  if (!(d0 >= 0.0)) throw InvariantViolation("d0", "threshold must be >= 0");

  BipartiteDistanceGraph g;
  g.d0 = d0;
  g.q = spec.state_size();
  g.labels.resize(static_cast<std::size_t>(g.q));
  for (int i = 0; i < g.q; ++i) {
    g.labels[static_cast<std::size_t>(i)] = {spec.combine(0, i), spec.combine(1, i)};
  }
  for (int i = 0; i < g.q; ++i) {
    for (int p = 0; p < 2; ++p) {
      for (int j = 0; j < g.q; ++j) {
        for (int r = 0; r < 2; ++r) {
          const double gap = std::abs(g.labels[static_cast<std::size_t>(i)][
                                          static_cast<std::size_t>(p)] -
                                      g.labels[static_cast<std::size_t>(j)][
                                          static_cast<std::size_t>(r)]);
          if (gap >= d0) g.edges.push_back({i, p, j, r});
        }
      }
    }
  }
  return g;
}

std::optional<PairResult> feasible_pair(const ChannelSpec& spec, double d0) {
  require_binary(spec, "feasible_pair");
  if (!(d0 > 0.0)) throw InvariantViolation("d0", "threshold must be > 0");
  const int q = spec.state_size();

  std::vector<std::array<double, 2>> labels(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) labels[static_cast<std::size_t>(i)] = {spec.combine(0, i),
                                                                     spec.combine(1, i)};

  // Variable i in [0,Q): slot chosen in group i of the first part;
  // variable Q+j: slot chosen in group j of the second part. A missing
  // edge forbids that combination of the two choices.
  TwoSat sat(2 * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      for (int p = 0; p < 2; ++p) {
        for (int r = 0; r < 2; ++r) {
          const double gap = std::abs(labels[static_cast<std::size_t>(i)][
                                          static_cast<std::size_t>(p)] -
                                      labels[static_cast<std::size_t>(j)][
                                          static_cast<std::size_t>(r)]);
          if (gap < d0) sat.forbid(i, p == 1, q + j, r == 1);
        }
      }
    }
  }
  const auto assignment = sat.solve();
  if (!assignment) return std::nullopt;

  PairResult result;
  result.t.choices.reserve(static_cast<std::size_t>(q));
  result.r.choices.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    result.t.choices.push_back((*assignment)[static_cast<std::size_t>(i)] ? 1 : 0);
    result.r.choices.push_back((*assignment)[static_cast<std::size_t>(q + i)] ? 1 : 0);
  }
  result.distance = si_distance(spec, result.t, result.r);
  return result;
}

bool qp_certificate(const BipartiteDistanceGraph& graph, std::span<const int> edge_labels) {
  if (edge_labels.size() != graph.edges.size()) {
    throw UnlabeledEdge("expected one label per edge (" + std::to_string(graph.edges.size()) +
                        " edges, " + std::to_string(edge_labels.size()) + " labels)");
  }
  const auto q = static_cast<std::size_t>(graph.q);
  std::vector<std::int64_t> u_deg(2 * q, 0), v_deg(2 * q, 0);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const int y = edge_labels[e];
    if (y != 0 && y != 1) throw DomainError("edge labels must be 0 or 1");
    if (y == 0) continue;
    const auto& edge = graph.edges[e];
    u_deg[static_cast<std::size_t>(edge.u_state) * 2 + static_cast<std::size_t>(edge.u_slot)]++;
    v_deg[static_cast<std::size_t>(edge.v_state) * 2 + static_cast<std::size_t>(edge.v_slot)]++;
  }

  const auto target = static_cast<std::int64_t>(graph.q);
  for (std::size_t i = 0; i < q; ++i) {
    if (u_deg[2 * i] + u_deg[2 * i + 1] != target) return false;
    if (v_deg[2 * i] + v_deg[2 * i + 1] != target) return false;
  }
  std::int64_t objective = 0;
  for (std::size_t k = 0; k < 2 * q; ++k) {
    objective += u_deg[k] * u_deg[k] + v_deg[k] * v_deg[k];
  }
  return objective == 2 * target * target * target;
}

PairResult max_pair_poly(const ChannelSpec& spec) {
  require_binary(spec, "max_pair_poly");
  const auto candidates = candidate_distances(spec);

  std::vector<double> positive;
  for (double c : candidates) {
    if (c > 0.0) positive.push_back(c);
  }
  std::optional<PairResult> best;
  // Feasibility at d0 implies feasibility at every smaller threshold, so
  // binary search locates the largest feasible candidate.
  std::size_t lo = 0, hi = positive.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto witness = feasible_pair(spec, positive[mid])) {
      best = std::move(witness);
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (best) return *best;
  return {symbol_at(spec, 0), symbol_at(spec, 1), 0.0};
}

bool full_distance_condition(const ChannelSpec& spec) {
  require_binary(spec, "full_distance_condition");
  const double input_gap = spec.input.values[1] - spec.input.values[0];
  return min_interference_gap(spec) >= input_gap;
}

bool constant_reduction_condition(const ChannelSpec& spec) {
  const double span = spec.input.values.back() - spec.input.values.front();
  return min_interference_gap(spec) >= 2.0 * span;
}

std::size_t SymbolPartition::classify(const AssociatedSymbol& t) const {
  if (t.choices.empty()) throw SymbolNotInPartition("empty symbol");
  if (mode == PartitionMode::binary) {
    if (t.width() != static_cast<int>(classes.front().front().width())) {
      throw SymbolNotInPartition("symbol width does not match the partitioned alphabet");
    }
    const int c = t.choices[static_cast<std::size_t>(pivot_state)];
    for (std::size_t k = 0; k < class_pivot_choices.size(); ++k) {
      if (c == class_pivot_choices[k]) return k;
    }
    throw SymbolNotInPartition("pivot-state choice matches no class anchor");
  }
  if (t.width() != static_cast<int>(classes.front().front().width())) {
    throw SymbolNotInPartition("symbol width does not match the partitioned alphabet");
  }
  const int c = t.choices.front();
  if (c < 0 || static_cast<std::size_t>(c) >= classes.size()) {
    throw SymbolNotInPartition("first-element choice outside the input alphabet");
  }
  return static_cast<std::size_t>(c);
}

SymbolPartition partition_binary(const ChannelSpec& spec, const AssociatedSymbol& u1,
                                 const AssociatedSymbol& u2, int pivot_state,
                                 std::uint64_t cap) {
  require_binary(spec, "partition_binary");
  validate_symbol(u1, spec);
  validate_symbol(u2, spec);
  if (pivot_state < 0 || pivot_state >= spec.state_size()) {
    throw InvariantViolation("pivot", "state index outside the interference alphabet");
  }
  if (si_distance(spec, u1, u2) == 0.0) {
    throw ZeroDistanceAnchors("anchor symbols have zero distance");
  }

  SymbolPartition part;
  part.mode = PartitionMode::binary;
  part.pivot_state = pivot_state;
  part.class_pivot_choices = {u1.choices[static_cast<std::size_t>(pivot_state)],
                              u2.choices[static_cast<std::size_t>(pivot_state)]};
  part.classes.resize(2);
  for (const AssociatedSymbol& t : enumerate_associated(spec, cap)) {
    const std::size_t k =
        t.choices[static_cast<std::size_t>(pivot_state)] == part.class_pivot_choices[0] ? 0 : 1;
    part.classes[k].push_back(t);
  }
  return part;
}

SymbolPartition partition_mary(const ChannelSpec& spec, std::uint64_t cap) {
  SymbolPartition part;
  part.mode = PartitionMode::mary;
  part.pivot_state = 0;
  part.classes.resize(static_cast<std::size_t>(spec.input_size()));
  for (const AssociatedSymbol& t : enumerate_associated(spec, cap)) {
    part.classes[static_cast<std::size_t>(t.choices.front())].push_back(t);
  }
  return part;
}

Codebook reduce_codebook(const ChannelSpec& spec, const Codebook& cb,
                         const SymbolPartition& partition,
                         std::span<const AssociatedSymbol> replacements) {
  validate_codebook(cb, spec);
  if (replacements.size() != partition.class_count()) {
    throw InvariantViolation("replacements", "expected one symbol per class");
  }
  for (const AssociatedSymbol& t : replacements) validate_symbol(t, spec);

  Codebook reduced;
  reduced.codewords.reserve(cb.codewords.size());
  for (const Codeword& word : cb.codewords) {
    Codeword out;
    out.reserve(word.size());
    for (const AssociatedSymbol& t : word) {
      out.push_back(replacements[partition.classify(t)]);
    }
    reduced.codewords.push_back(std::move(out));
  }
  return reduced;
}

}  // namespace dtc
