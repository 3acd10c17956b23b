#pragma once

#include "ramsey/coloring_json.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// Two-color critical colorings of K_{R-1}.
///
///   CP   C_{n0} vs P_{n1}       params n0, n1
///   PP   P_n vs P_m             params n, m (clique goes to the longer path)
///   MP   tK_2 vs P_n            params t, n
///   MC   tK_2 vs C_n            params t, n
///   CM   C_n vs kK_2            params n, k
///   PM   P_n vs kK_2            params n, k
///   P3C  C_{2n} vs P_3          params n
///   generic                     caller-supplied coloring, verified
struct CriticalColoring {
    EdgeColoring coloring;
    std::vector<TargetGraph> targets;
};

CriticalColoring two_color_critical(std::string_view pair_id, const FormulaParams& params);
CriticalColoring two_color_critical_generic(const EdgeColoring& coloring, std::vector<TargetGraph> targets);

struct WitnessSpec {
    std::string theorem;
    FormulaParams params;
    /// Host order N = claimed value - 1.
    int order = 0;
    /// One target per color, in color order.
    std::vector<TargetGraph> targets;
    /// Exact value, or the lower end of a bracket.
    long long claimed_value = 0;
};

struct Witness {
    EdgeColoring coloring;
    WitnessSpec spec;
    /// The critical coloring placed on the first block, when nested.
    std::optional<EdgeColoring> nested;
};

/// Ids with a lower-bound construction.
const std::vector<std::string>& witness_ids();

/// Builds and verifies the construction for `id`. Precondition failures
/// throw PreconditionFailed; a construction that does not avoid its targets
/// throws VerificationFailed. cor_AA needs `inner` (a coloring of K_{2t-1}
/// avoiding params.targets).
Witness witness(std::string_view id, const FormulaParams& params, const std::optional<EdgeColoring>& inner = {});

ordered_json params_to_json(const FormulaParams& params);
/// Coloring document plus the theorem/params/targets/claimed_value header
/// and verification = "passed".
ordered_json witness_to_json(const Witness& w);

} // namespace ramsey
