#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/search.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// Variable e*k + c means "host edge e has color c" (e 0-based, c 1-based).
/// Satisfiable iff the query does not arrow.
struct CnfInstance {
    Host host = Host::complete(1);
    int k = 1;
    /// Optional; recorded as a comment so decoded models can be verified.
    std::vector<TargetGraph> targets;
    int variables = 0;
    std::vector<std::vector<int>> clauses;

    int var(std::size_t edge, Color c) const { return static_cast<int>(edge) * k + c; }
};

/// Exactly-one clauses per edge, then one clause per distinct edge set of a
/// target embedding. More than max_embeddings embeddings in total throws
/// BudgetExceeded.
CnfInstance to_cnf(const ArrowQuery& q, std::size_t max_embeddings = 2'000'000);

/// DIMACS text; comment lines record the host, k and the variable map.
std::string to_dimacs(const CnfInstance& inst);
/// Reads to_dimacs output back (the host/k comments are required).
CnfInstance parse_dimacs(std::string_view text);

/// Signed literals from solver output: "v" prefixes are stripped, "s" and
/// "c" lines are skipped, 0 terminates.
std::vector<int> parse_model(std::string_view text);

/// Variables listed positively are true, everything else false.
std::vector<bool> model_assignment(const CnfInstance& inst, const std::vector<int>& literals);

bool satisfies(const CnfInstance& inst, const std::vector<bool>& assignment);

/// Requires exactly one true color variable per edge (InvalidInput
/// otherwise).
EdgeColoring decode_model(const CnfInstance& inst, const std::vector<bool>& assignment);
EdgeColoring decode_model(const CnfInstance& inst, const std::vector<int>& literals);

/// First satisfying assignment by backtracking (variable order 1..V,
/// false before true). Instances over 24 variables throw BudgetExceeded.
std::optional<std::vector<bool>> solve_small(const CnfInstance& inst);

} // namespace ramsey
