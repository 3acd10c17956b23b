#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

/// Does every coloring of `host` with targets.size() colors contain a
/// color-i copy of targets[i-1] for some i?
struct ArrowQuery {
    Host host;
    std::vector<TargetGraph> targets;
};

struct SearchBudget {
    int max_complete = 9;
    int max_bipartite_a = 4;
    int max_bipartite_b = 4;
};

struct SearchOptions {
    SearchBudget budget;
    /// Worker threads; results do not depend on this.
    int jobs = 1;
};

struct ArrowResult {
    bool arrows = false;
    /// The lexicographically least avoiding coloring (canonical edge order,
    /// colors compared numerically) when arrows is false.
    std::optional<EdgeColoring> certificate;
    std::uint64_t nodes = 0;
};

/// Rejects empty target lists, non-bipartite targets on bipartite hosts
/// (InvalidInput) and hosts over budget (BudgetExceeded).
void check_query(const ArrowQuery& q, const SearchBudget& budget);

ArrowResult arrows(const ArrowQuery& q, const SearchOptions& options = {});

/// "K5" or "K3,4" (also "K3x4").
Host parse_host(std::string_view token);

struct SearchOutcome {
    /// Exactly known: value. Otherwise lower/upper as far as the range told.
    bool exact = false;
    std::optional<long long> value;
    std::optional<long long> lower;
    std::optional<long long> upper;
    /// Avoiding coloring on the largest non-arrowing host tested.
    std::optional<EdgeColoring> certificate;
    /// (size, arrows) for every host tested, in order.
    std::vector<std::pair<int, bool>> trace;
    /// Whether arrowing was re-confirmed one size above the threshold.
    bool monotone_checked = false;
};

/// Smallest n in [lo, hi] with K_n arrowing the targets.
SearchOutcome ramsey_search(const std::vector<TargetGraph>& targets, int lo, int hi,
                            const SearchOptions& options = {});
/// Smallest b in [lo, hi] with K_{b,b} arrowing the targets.
SearchOutcome bipartite_search(const std::vector<TargetGraph>& targets, int lo, int hi,
                               const SearchOptions& options = {});

} // namespace ramsey
