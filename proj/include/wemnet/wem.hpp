#pragma once

#include <span>
#include <vector>

#include "wemnet/graph.hpp"
#include "wemnet/ranking.hpp"

namespace wemnet {

/// Whether a larger edge weight means a stronger (Positive) or weaker
/// (Negative) tie between its endpoints. Flips the normalization.
enum class CorrelationMode { Positive, Negative };

/// Per-edge probabilities in the open interval (0,1), aligned with
/// WeightedGraph::edges(). Carries the weight statistics it was built from.
struct NormalizedWeightMap {
    CorrelationMode mode = CorrelationMode::Positive;
    double w_min = 0.0;
    double w_max = 0.0;
    double avg_weight = 0.0;
    std::vector<double> probability;
};

/// tail[c-1] = Pr(deg(i) >= c) for c = 1..deg(i); empty for isolated nodes.
struct DegreeTailDistribution {
    NodeId node = 0;
    std::vector<double> tail;
};

/// Maps weights into (0,1). Positive mode:
///   w' = (w - (w_min - l)) / ((w_max + l) - (w_min - l)),  l = mean weight;
/// Negative mode is 1 minus that. Uniform-weight graphs map every edge to
/// exactly 0.5. Throws EmptyGraphError if the graph has no edges.
NormalizedWeightMap normalize_weights(const WeightedGraph& g, CorrelationMode mode);

/// Distribution of the node's degree over edge subsets, where incident edge k
/// survives independently with probability incident_probs[k]. Two rolling DP
/// rows: O(d^2) time, O(d) memory. Throws std::domain_error if any probability
/// lies outside (0,1).
DegreeTailDistribution degree_tail_dp(NodeId node, std::span<const double> incident_probs);

/// Same distribution by enumerating all 2^d incident-edge subsets. Testing
/// oracle for degree_tail_dp; refuses d > 20.
DegreeTailDistribution brute_force_tail(NodeId node, std::span<const double> incident_probs);

/// C_i = sum over c of c * Pr(deg(i) >= c). Empty tail scores 0.
double wem_score(const DegreeTailDistribution& tail);

/// Normalizes once, scores every node, returns the tie-aware ranking.
/// Per-node scoring is pure, so `threads` only affects wall time; output is
/// identical for any worker count (0 = hardware concurrency).
ImportanceRanking wem_rank_all(const WeightedGraph& g, CorrelationMode mode,
                               unsigned threads = 1);

}  // namespace wemnet
