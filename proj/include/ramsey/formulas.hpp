#pragma once

#include "ramsey/target.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

/// Named integer parameters (n, n0, n1, n2, s, m, t, k, r, b), the lists
/// m_1..m_s / k_1..k_t, and the optional graph arguments some entries take.
struct FormulaParams {
    std::map<std::string, long long> values;
    std::optional<std::vector<long long>> m_list;
    std::optional<std::vector<long long>> k_list;
    /// The first argument H of the combining bound.
    std::optional<TargetGraph> h;
    /// G_1..G_k for the cor_AA witness.
    std::vector<TargetGraph> targets;

    FormulaParams& set(const std::string& name, long long value)
    {
        values[name] = value;
        return *this;
    }
    std::optional<long long> get(const std::string& name) const
    {
        auto it = values.find(name);
        if (it == values.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    friend bool operator==(const FormulaParams&, const FormulaParams&) = default;
};

/// Exact: one value. Upper: the entry only bounds from above. Bracket:
/// lower <= R <= upper. Pair: ordered bipartite pair (b1, b2).
enum class ResultKind { Exact, Upper, Bracket, Pair };

struct Precondition {
    std::string text;
    bool passed = false;
};

struct FormulaResult {
    std::string id;
    std::string statement;
    ResultKind kind = ResultKind::Exact;
    /// Exact or Upper value.
    std::optional<long long> value;
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::optional<std::pair<long long, long long>> pair;
    std::vector<Precondition> preconditions;
    /// Valid only for sufficiently large n; the threshold is not known.
    bool large_n_caveat = false;
    /// Intermediate quantities (case number, Λ, Σ, derived s/m, ...).
    std::map<std::string, long long> derived;

    bool ok() const;
    /// First failing precondition text, empty when ok().
    std::string failure() const;
};

struct FormulaInfo {
    std::string id;
    std::string statement;
    ResultKind kind;
    std::vector<std::string> params;
    bool large_n_caveat;
};

const std::vector<FormulaInfo>& formula_catalog();

/// Unknown ids and missing or inconsistent parameters throw InvalidInput.
/// Failing preconditions yield a result with no value (ok() == false).
FormulaResult eval_formula(std::string_view id, const FormulaParams& params);

/// Like eval_formula but throws PreconditionFailed instead of returning a
/// failed result.
FormulaResult eval_formula_checked(std::string_view id, const FormulaParams& params);

/// Λ = Σ(m_i - 1) and Σ = Σ(k_i - 1).
long long lambda_of(const std::vector<long long>& m_list);
long long sigma_of(const std::vector<long long>& k_list);

/// Square host value for an ordered bipartite pair (b1 >= b2): b1.
long long square_b(std::pair<long long, long long> pair);

struct Bound {
    enum class Kind { Lower, Upper, Exact };
    Kind kind = Kind::Upper;
    long long value = 0;
    /// Formula id, witness id, or "search".
    std::string provenance;
    bool large_n_caveat = false;
    /// Exact bounds keep both sides' provenance.
    std::string lower_provenance;
    std::string upper_provenance;
};

/// Upper bound on R(H, G_1..G_k) from R(H, K_{b,b}) for H a cycle, path or
/// matching, b = b(G_1..G_k).
Bound combine_upper(const TargetGraph& h, long long b);

/// Exact bound when a lower and an upper bound meet; nullopt otherwise.
/// Caveated upper bounds never produce an exact bound.
std::optional<Bound> assemble_exact(const Bound& lower, const Bound& upper);

/// A few passing parameter sets per catalog id (used by the table command).
std::vector<std::pair<std::string, FormulaParams>> default_grid();

} // namespace ramsey
