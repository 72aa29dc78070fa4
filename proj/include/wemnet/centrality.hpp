#pragma once

#include <vector>

#include "wemnet/graph.hpp"
#include "wemnet/ranking.hpp"

namespace wemnet {

/// s_i = sum of weights of edges incident to i.
std::vector<double> node_strengths(const WeightedGraph& g);

/// Shortest-path betweenness (Brandes) over traversal lengths 1/w, each
/// unordered endpoint pair counted once. Values are unnormalized.
ImportanceRanking betweenness(const WeightedGraph& g, unsigned threads = 1);

/// CL(i) = (n-1) / sum_j dist(i,j) over traversal lengths 1/w.
/// Throws std::runtime_error on disconnected input.
ImportanceRanking closeness(const WeightedGraph& g, unsigned threads = 1);

/// Leading eigenvector of the weighted adjacency matrix. Power iteration on
/// A + I (the shift keeps bipartite spectra from oscillating) starting from
/// the uniform vector, each iterate normalized to unit Euclidean length;
/// converged when successive iterates differ by less than `tol` in max norm.
/// Throws std::runtime_error with the residual if max_iter is exhausted.
ImportanceRanking eigenvector(const WeightedGraph& g, double tol = 1e-10,
                              std::size_t max_iter = 100000);

/// Core decomposition on the weighted degree k' = round(sqrt(k * s)):
/// each shell repeatedly removes every node whose current k' is at most the
/// shell index. Score is the shell; ties order by strength, then id.
ImportanceRanking w_core(const WeightedGraph& g);

/// HI(i) = largest h such that at least h neighbors of i have strength >= h.
/// Ties order by strength, then id.
ImportanceRanking weighted_h_index(const WeightedGraph& g);

}  // namespace wemnet
