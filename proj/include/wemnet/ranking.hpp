#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wemnet/graph.hpp"

namespace wemnet {

struct RankEntry {
    NodeId node;
    double score;
    std::uint32_t rank;  // competition ranking: ties share a rank, next skips
};

/// Scores sorted descending with competition ranks. The order inside a tie
/// group is deterministic: ascending node id unless the producing algorithm
/// installs its own secondary key (w-core and h-index order by strength).
struct ImportanceRanking {
    std::string algorithm;
    std::vector<RankEntry> entries;
};

/// Strict order applied between nodes whose scores compare equal.
using TieOrder = std::function<bool(NodeId, NodeId)>;

/// Builds the tie-aware descending ranking from a per-node score vector.
ImportanceRanking make_ranking(std::string algorithm, const std::vector<double>& scores,
                               const TieOrder& tie_less = {});

}  // namespace wemnet
