#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wemnet {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// One undirected edge, stored once with u < v.
struct Edge {
    NodeId u;
    NodeId v;
    double weight;
};

/// Adjacency entry. `edge` indexes into WeightedGraph::edges(), so per-edge
/// side tables (e.g. normalized weights) can be looked up from a neighbor scan.
struct Neighbor {
    NodeId node;
    double weight;
    EdgeId edge;
};

/// Malformed input line (bad token count, unparseable or non-positive weight).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Duplicate unordered node pair under MergePolicy::Error.
class DuplicateEdgeError : public ParseError {
public:
    DuplicateEdgeError(const std::string& msg, std::size_t line) : ParseError(msg, line) {}
};

/// Input contained no usable edges.
class EmptyGraphError : public std::runtime_error {
public:
    explicit EmptyGraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// What to do when the same unordered node pair appears twice in the input.
enum class MergePolicy { Error, Sum, Max, First };

struct ParseOptions {
    MergePolicy merge_policy = MergePolicy::Error;
    char comment_char = '#';
};

struct ParseReport {
    std::size_t lines_total = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_merged = 0;
};

/// Immutable undirected graph with positive edge weights and dense node ids.
///
/// Adjacency lists are sorted by neighbor id, which fixes the incident-edge
/// order every downstream accumulation uses. Safe for concurrent reads.
class WeightedGraph {
public:
    /// Validates and canonicalizes: edges are flipped to u < v, adjacency is
    /// built sorted by neighbor id. Throws std::invalid_argument on self-loops,
    /// non-positive/non-finite weights, out-of-range ids, or duplicate pairs.
    WeightedGraph(std::vector<std::string> node_labels, std::vector<Edge> edge_list);

    NodeId node_count() const noexcept { return static_cast<NodeId>(labels_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(NodeId u) const { return adj_[u]; }
    std::size_t degree(NodeId u) const { return adj_[u].size(); }
    /// Sum of incident edge weights.
    double strength(NodeId u) const { return strengths_[u]; }
    const std::string& label(NodeId u) const { return labels_[u]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t max_degree() const noexcept { return max_degree_; }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
    std::vector<double> strengths_;
    std::size_t max_degree_ = 0;
};

/// Degree/weight summary of a graph (requires at least one edge).
struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    double avg_degree = 0.0;  // 2m/n
    double w_min = 0.0;
    double w_max = 0.0;
    double avg_weight = 0.0;  // mean edge weight
    double k_mean = 0.0;      // first moment of the degree sequence
    double k2_mean = 0.0;     // second moment of the degree sequence
};

struct ParseResult {
    WeightedGraph graph;
    ParseReport report;
};

/// Reads `u v w` lines. Tokens are separated by runs of whitespace or commas;
/// blank lines and lines starting with the comment character are skipped.
/// Self-loops are dropped (counted in the report) and do not introduce nodes.
/// Labels map to dense ids in first-appearance order.
ParseResult parse_edge_list(std::istream& in, const ParseOptions& options = {});

/// parse_edge_list on a file; throws std::runtime_error if it cannot be opened.
ParseResult load_edge_list(const std::string& path, const ParseOptions& options = {});

/// One `label_u label_v weight` line per edge, weights in shortest
/// round-trip decimal form.
void write_edge_list(const WeightedGraph& g, std::ostream& out);

/// Induced subgraph on the largest connected node set, re-indexed densely in
/// ascending original-id order. Size ties go to the component containing the
/// smallest original id.
WeightedGraph largest_connected_component(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

GraphStats graph_stats(const WeightedGraph& g);

}  // namespace wemnet
