#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtc/metric.hpp"

namespace dtc {

struct PairResult {
  AssociatedSymbol t;
  AssociatedSymbol r;
  double distance = 0.0;
};

// Builds two symbols whose output multisets are disjoint by processing the
// states in ascending order: at each new state, place x1+s_k into whichever
// multiset already contains that value (first multiset on a tie) and
// x2+s_k into the other. Additive binary channels only; the returned pair
// always has positive distance there.
PairResult construct_disjoint_pair(const ChannelSpec& spec);

inline constexpr std::uint64_t kDefaultPairBudget = std::uint64_t{1} << 23;

// Exact argmax over all symbol pairs; ties resolved toward the
// lexicographically smallest pair. Throws BudgetExceeded when
// M^Q(M^Q-1)/2 pair evaluations would exceed the budget.
PairResult max_pair_bruteforce(const ChannelSpec& spec,
                               std::uint64_t budget = kDefaultPairBudget);

// Sorted distinct values |f(x_i,s_k) - f(x_j,s_l)|; every possible pair
// distance is one of these. At most M^2 Q^2 values.
std::vector<double> candidate_distances(const ChannelSpec& spec);

// Threshold graph for binary channels: vertex (state i, slot j) on each of
// two parts carries label f(x_j, s_i); an edge joins cross-part vertices
// whose labels differ by at least d0 in absolute value.
struct BipartiteDistanceGraph {
  double d0 = 0.0;
  int q = 0;
  std::vector<std::array<double, 2>> labels;  // labels[state][slot], shared by both parts

  struct Edge {
    int u_state, u_slot, v_state, v_slot;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;
};

// Requires M = 2 and d0 >= 0 (d0 = 0 gives the complete bipartite graph).
BipartiteDistanceGraph build_graph(const ChannelSpec& spec, double d0);

// A pair at distance >= d0 exists iff one vertex can be chosen in every
// group on both parts with all Q^2 cross choices connected. Each missing
// edge forbids one assignment combination of two binary choices, so the
// search is a 2-SAT instance solved by implication propagation in time
// linear in the edge count. Requires M = 2 and d0 > 0.
std::optional<PairResult> feasible_pair(const ChannelSpec& spec, double d0);

// True iff the labeling satisfies the per-group degree constraints (label
// mass Q leaving every group on both parts) AND the sum of squared vertex
// degrees equals 2Q^3 — which holds exactly when the 1-labeled edges form a
// one-vertex-per-group complete bipartite selection.
bool qp_certificate(const BipartiteDistanceGraph& graph, std::span<const int> edge_labels);

// Largest feasible candidate distance located by binary search (feasibility
// is monotone in d0), with a witness pair; agrees exactly with
// max_pair_bruteforce. Requires M = 2.
PairResult max_pair_poly(const ChannelSpec& spec);

// Binary channels: the maximum pair distance reaches |x2 - x1| iff the
// smallest interference gap is at least |x2 - x1| (vacuously true at Q = 1).
bool full_distance_condition(const ChannelSpec& spec);

// Constant symbols suffice for the distance spectrum iff the smallest
// interference gap is at least twice the input span (vacuously true at Q=1).
bool constant_reduction_condition(const ChannelSpec& spec);

enum class PartitionMode { binary, mary };

// Disjoint classes covering T. Binary: class by the value taken at a pivot
// state, anchored on a positive-distance pair. M-ary: class by the first
// tuple element. Within-class distances are all zero in both modes.
struct SymbolPartition {
  PartitionMode mode = PartitionMode::binary;
  int pivot_state = 0;                   // binary mode only
  std::vector<int> class_pivot_choices;  // binary: anchor choice at the pivot, per class
  std::vector<std::vector<AssociatedSymbol>> classes;

  std::size_t class_count() const noexcept { return classes.size(); }
  // Class of a symbol, or SymbolNotInPartition for malformed symbols.
  std::size_t classify(const AssociatedSymbol& t) const;
};

SymbolPartition partition_binary(const ChannelSpec& spec, const AssociatedSymbol& u1,
                                 const AssociatedSymbol& u2, int pivot_state = 0,
                                 std::uint64_t cap = kDefaultEnumerationCap);
SymbolPartition partition_mary(const ChannelSpec& spec,
                               std::uint64_t cap = kDefaultEnumerationCap);

// Replaces every codeword element by its class representative. With the
// max-distance pair (binary) or the constant symbols under the constant
// reduction condition (M-ary), no pairwise squared codeword distance
// decreases.
Codebook reduce_codebook(const ChannelSpec& spec, const Codebook& cb,
                         const SymbolPartition& partition,
                         std::span<const AssociatedSymbol> replacements);

}  // namespace dtc
