#include "ramsey/constructions.hpp"

#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"

#include <algorithm>
#include <string>

namespace ramsey {

namespace {

std::string num(long long x) { return std::to_string(x); }

long long need(const FormulaParams& p, const std::string& name, std::string_view who)
{
    auto v = p.get(name);
    if (!v) {
        throw InvalidInput(std::string(who) + " needs parameter '" + name + "'");
    }
    return *v;
}

void require(bool ok, std::string_view who, const std::string& what)
{
    if (!ok) {
        throw PreconditionFailed(std::string(who) + ": " + what);
    }
}

int as_int(long long v)
{
    if (v < 0 || v > 100000) {
        throw InvalidInput("size " + num(v) + " out of range");
    }
    return static_cast<int>(v);
}

void verify(const EdgeColoring& coloring, const std::vector<TargetGraph>& targets, std::string_view who)
{
    if (auto v = violates(coloring, targets)) {
        std::string where;
        for (Vertex x : v->vertices) {
            where += (where.empty() ? "" : ",") + num(x);
        }
        throw VerificationFailed(std::string(who) + ": color " + num(v->color) + " contains " +
                                 v->target.to_string() + " on vertices [" + where + "]");
    }
}

/// Two blocks (clique, rest): the clique block gets `clique`, every other
/// pair gets `other`.
EdgeColoring clique_split(int clique_size, int rest_size, Color clique, Color other)
{
    SplitRecipe recipe({clique_size, rest_size});
    recipe.fill(other).set(0, 0, clique);
    return apply_split(recipe, 2);
}

CriticalColoring finish(EdgeColoring coloring, std::vector<TargetGraph> targets, std::string_view who)
{
    verify(coloring, targets, who);
    return {std::move(coloring), std::move(targets)};
}

// tK_2 vs C_n: whichever of the two constructions is larger.
CriticalColoring matching_cycle(int t, int n)
{
    require(t >= 1 && n >= 3, "MC", "needs t >= 1, n >= 3");
    std::vector<TargetGraph> targets{TargetGraph::matching(t), TargetGraph::cycle(n)};
    if (n + 2 * t - 1 - n / 2 > n + t - 1) {
        return finish(clique_split(2 * t - 1, (n + 1) / 2 - 1, 1, 2), targets, "MC");
    }
    return finish(clique_split(n - 1, t - 1, 2, 1), targets, "MC");
}

} // namespace

CriticalColoring two_color_critical_generic(const EdgeColoring& coloring, std::vector<TargetGraph> targets)
{
    if (coloring.host().kind() != HostKind::Complete) {
        throw InvalidInput("critical colorings live on complete hosts");
    }
    return finish(coloring, std::move(targets), "generic");
}

CriticalColoring two_color_critical(std::string_view pair_id, const FormulaParams& p)
{
    const std::string who(pair_id);
    if (pair_id == "CP") {
        const int n0 = as_int(need(p, "n0", who));
        const int n1 = as_int(need(p, "n1", who));
        require(n0 >= 3 && n1 >= 2 && n0 >= n1, who, "needs n0 >= n1 >= 2, n0 >= 3");
        return finish(clique_split(n0 - 1, n1 / 2 - 1, 1, 2), {TargetGraph::cycle(n0), TargetGraph::path(n1)}, who);
    }
    if (pair_id == "PP") {
        const int n = as_int(need(p, "n", who));
        const int m = as_int(need(p, "m", who));
        require(n >= 2 && m >= 2, who, "needs n, m >= 2");
        std::vector<TargetGraph> targets{TargetGraph::path(n), TargetGraph::path(m)};
        if (n >= m) {
            return finish(clique_split(n - 1, m / 2 - 1, 1, 2), targets, who);
        }
        return finish(clique_split(m - 1, n / 2 - 1, 2, 1), targets, who);
    }
    if (pair_id == "MP") {
        const int t = as_int(need(p, "t", who));
        const int n = as_int(need(p, "n", who));
        require(t >= 1 && n >= 2, who, "needs t >= 1, n >= 2");
        require(t > n / 2 || t == n - 1, who, "needs t > floor(n/2) or t = n-1");
        return finish(clique_split(2 * t - 1, n / 2 - 1, 1, 2), {TargetGraph::matching(t), TargetGraph::path(n)},
                      who);
    }
    if (pair_id == "MC") {
        return matching_cycle(as_int(need(p, "t", who)), as_int(need(p, "n", who)));
    }
    if (pair_id == "CM" || pair_id == "PM") {
        const int n = as_int(need(p, "n", who));
        const int k = as_int(need(p, "k", who));
        const bool cycle = pair_id == "CM";
        require(n >= (cycle ? 3 : 2) && k >= 1 && k <= n / 2, who, "needs 1 <= k <= floor(n/2)");
        TargetGraph first = cycle ? TargetGraph::cycle(n) : TargetGraph::path(n);
        return finish(clique_split(n - 1, k - 1, 1, 2), {first, TargetGraph::matching(k)}, who);
    }
    if (pair_id == "P3C") {
        const int n = as_int(need(p, "n", who));
        require(n >= 2, who, "needs n >= 2");
        SplitRecipe recipe({2 * n - 1});
        recipe.fill(1);
        return finish(apply_split(recipe, 2), {TargetGraph::cycle(2 * n), TargetGraph::path(3)}, who);
    }
    throw InvalidInput("unknown critical pair '" + who + "'");
}

const std::vector<std::string>& witness_ids()
{
    static const std::vector<std::string> ids = {
        "thm_q",        "cor_q_path",   "thm_p_i",      "thm_p_ii",        "thm_Far",   "cor_s",
        "thm_h1",       "thm_h1_path",  "thm_stripe_star", "thm_p3c2n",    "thm_c2m_c4", "thm_c2m_c4_1",
        "thm_c2m_c4_2", "cor_AA",       "ref_cp",       "ref_pp",          "ref_tk2_p", "thm_tk2_cn",
        "ref_cn_kk2",   "ref_p3_c2n",
    };
    return ids;
}

namespace {

struct Build {
    EdgeColoring coloring;
    std::vector<TargetGraph> targets;
    std::optional<EdgeColoring> nested;
};

/// Nested critical coloring on block 0 of (inner order, tail); the tail's
/// intra edges get `tail_color` and the join gets `join_color`.
Build nest(const CriticalColoring& inner, int tail, Color tail_color, Color join_color, int k,
           std::vector<TargetGraph> targets)
{
    const int inner_order = inner.coloring.host().order();
    SplitRecipe recipe({inner_order, tail});
    recipe.set(0, 1, join_color).set(1, 1, tail_color).override_block(0, inner.coloring);
    return {apply_split(recipe, k), std::move(targets), inner.coloring};
}

long long claimed(const FormulaResult& r)
{
    if (r.value) {
        return *r.value;
    }
    if (r.lower) {
        return *r.lower;
    }
    throw InvalidInput(r.id + " has no single value to certify");
}

FormulaParams ints(std::initializer_list<std::pair<const char*, long long>> kv)
{
    FormulaParams p;
    for (const auto& [k, v] : kv) {
        p.set(k, v);
    }
    return p;
}

Build far_coloring(const FormulaParams& p, bool path)
{
    const int n = as_int(need(p, "n", "thm_Far"));
    const auto& ml = *p.m_list;
    const auto& kl = *p.k_list;
    const int stars = static_cast<int>(kl.size());
    const int s = static_cast<int>(ml.size());
    std::vector<int> blocks{n - 1};
    for (long long m : ml) {
        blocks.push_back(as_int(m - 1));
    }
    const int k = 1 + stars + s;
    SplitRecipe recipe(blocks);
    recipe.set(0, 0, 1);
    // Matching j owns its block: inside it, towards block 0, and towards
    // every later matching block.
    for (int j = 1; j <= s; ++j) {
        const Color c = 1 + stars + j;
        recipe.set(j, j, c).set(0, j, c);
        for (int later = j + 1; later <= s; ++later) {
            recipe.set(j, later, c);
        }
    }
    std::vector<TargetGraph> targets{path ? TargetGraph::path(n) : TargetGraph::cycle(n)};
    for (long long kk : kl) {
        targets.push_back(TargetGraph::star(as_int(kk)));
    }
    for (long long m : ml) {
        targets.push_back(TargetGraph::matching(as_int(m)));
    }
    return {apply_split(recipe, k), std::move(targets), std::nullopt};
}

Build build(std::string_view id, const FormulaParams& p, const std::optional<EdgeColoring>& inner)
{
    const std::string who(id);
    if (id == "thm_q" || id == "cor_q_path") {
        const long long n0 = need(p, "n0", who), n1 = need(p, "n1", who), n2 = need(p, "n2", who);
        require(n0 >= n1, who, "nested critical coloring needs n0 >= n1");
        const bool cycle = id == "thm_q";
        CriticalColoring cc = cycle ? two_color_critical("CP", ints({{"n0", n0}, {"n1", n1}}))
                                    : two_color_critical("PP", ints({{"n", n0}, {"m", n1}}));
        TargetGraph first = cycle ? TargetGraph::cycle(as_int(n0)) : TargetGraph::path(as_int(n0));
        return nest(cc, as_int(n2 / 2 - 1), 2, 3, 3,
                    {first, TargetGraph::path(as_int(n1)), TargetGraph::path(as_int(n2))});
    }
    if (id == "thm_p_i") {
        const long long k = need(p, "k", who);
        CriticalColoring cc = two_color_critical("MP", ints({{"t", k - 1}, {"n", k}}));
        return nest(cc, as_int(k / 2 - 1), 2, 3, 3,
                    {TargetGraph::matching(as_int(k - 1)), TargetGraph::path(as_int(k)), TargetGraph::path(as_int(k))});
    }
    if (id == "thm_p_ii") {
        const long long s = p.get("s").value_or((p.get("n1").value_or(1) - 1) / 2);
        const long long m = p.get("m").value_or(p.get("n2").value_or(0) / 2);
        const long long t = need(p, "t", who);
        require(t > s, who, "nested R(tK_2,P_{2s+1}) needs t > s");
        CriticalColoring cc = two_color_critical("MP", ints({{"t", t}, {"n", 2 * s + 1}}));
        return nest(cc, as_int(m - 1), 2, 3, 3,
                    {TargetGraph::matching(as_int(t)), TargetGraph::path(as_int(2 * s + 1)),
                     TargetGraph::path(as_int(2 * m))});
    }
    if (id == "thm_Far" || id == "cor_s") {
        return far_coloring(p, id == "cor_s");
    }
    if (id == "thm_h1" || id == "thm_h1_path") {
        const long long n = need(p, "n", who), k = need(p, "k", who);
        const bool cycle = id == "thm_h1";
        CriticalColoring cc = two_color_critical(cycle ? "CM" : "PM", ints({{"n", n}, {"k", k}}));
        TargetGraph first = cycle ? TargetGraph::cycle(as_int(n)) : TargetGraph::path(as_int(n));
        return nest(cc, as_int(k - 1), 3, 3, 3,
                    {first, TargetGraph::matching(as_int(k)), TargetGraph::matching(as_int(k))});
    }
    if (id == "thm_stripe_star") {
        const int t = as_int(need(p, "t", who)), m = as_int(need(p, "m", who));
        const auto& kl = *p.k_list;
        SplitRecipe recipe({m - 1, t - 1});
        recipe.fill(1).set(0, 0, 2);
        std::vector<TargetGraph> targets{TargetGraph::matching(t), TargetGraph::path(m)};
        for (long long kk : kl) {
            targets.push_back(TargetGraph::star(as_int(kk)));
        }
        const int k = static_cast<int>(targets.size());
        return {apply_split(recipe, k), std::move(targets), std::nullopt};
    }
    if (id == "thm_p3c2n") {
        const long long t = need(p, "t", who), n = need(p, "n", who);
        CriticalColoring cc = two_color_critical("P3C", ints({{"n", n}}));
        return nest(cc, as_int(t - 1), 3, 3, 3,
                    {TargetGraph::cycle(as_int(2 * n)), TargetGraph::path(3), TargetGraph::matching(as_int(t))});
    }
    if (id == "thm_c2m_c4_1" || id == "thm_c2m_c4_2") {
        const long long m = need(p, "m", who), t = need(p, "t", who);
        CriticalColoring cc = two_color_critical("MC", ints({{"t", t}, {"n", 2 * m}}));
        return nest(cc, 1, 3, 3, 3,
                    {TargetGraph::matching(as_int(t)), TargetGraph::cycle(as_int(2 * m)), TargetGraph::cycle(4)});
    }
    if (id == "cor_AA") {
        const int t = as_int(need(p, "t", who));
        if (!inner) {
            throw InvalidInput("cor_AA needs an inner coloring of K_" + num(2 * t - 1));
        }
        if (p.targets.empty()) {
            throw InvalidInput("cor_AA needs the target list G_1..G_k");
        }
        const int k = static_cast<int>(p.targets.size());
        if (inner->host() != Host::complete(2 * t - 1)) {
            throw InvalidInput("cor_AA inner coloring must be on K_" + num(2 * t - 1) + ", got " +
                               inner->host().name());
        }
        if (inner->colors() != k) {
            throw InvalidInput("cor_AA inner coloring uses k=" + num(inner->colors()) + ", expected " + num(k));
        }
        CriticalColoring cc = two_color_critical_generic(*inner, p.targets);
        std::vector<TargetGraph> targets = p.targets;
        targets.push_back(TargetGraph::matching(t));
        return nest(cc, t - 1, k + 1, k + 1, k + 1, std::move(targets));
    }
    if (id == "ref_cp") {
        auto cc = two_color_critical("CP", p);
        return {cc.coloring, cc.targets, std::nullopt};
    }
    if (id == "ref_pp") {
        auto cc = two_color_critical("PP", p);
        return {cc.coloring, cc.targets, std::nullopt};
    }
    if (id == "ref_tk2_p") {
        FormulaParams q = p;
        if (auto k = p.get("k")) {
            q = ints({{"t", *k - 1}, {"n", *k}});
        }
        auto cc = two_color_critical("MP", q);
        return {cc.coloring, cc.targets, std::nullopt};
    }
    if (id == "thm_tk2_cn") {
        auto cc = two_color_critical("MC", p);
        return {cc.coloring, cc.targets, std::nullopt};
    }
    if (id == "ref_cn_kk2") {
        auto cc = two_color_critical("CM", p);
        return {cc.coloring, cc.targets, std::nullopt};
    }
    if (id == "ref_p3_c2n") {
        auto cc = two_color_critical("P3C", p);
        return {cc.coloring, cc.targets, std::nullopt};
    }
    throw InvalidInput("no construction for '" + who + "'");
}

} // namespace

Witness witness(std::string_view id, const FormulaParams& params, const std::optional<EdgeColoring>& inner)
{
    std::string formula_id(id);
    if (id == "thm_c2m_c4") {
        const long long m = need(params, "m", id);
        formula_id = need(params, "t", id) >= m + 1 ? "thm_c2m_c4_1" : "thm_c2m_c4_2";
    }
    if (std::find(witness_ids().begin(), witness_ids().end(), std::string(id)) == witness_ids().end()) {
        throw InvalidInput("no construction for '" + std::string(id) + "'");
    }

    long long value = 0;
    if (formula_id == "cor_AA" && (!params.get("r") || !params.get("b"))) {
        // R(G_1..G_k) = 2b = 2t is certified by the inner coloring's order
        // only on the lower side; the claimed value is the formula's 3t-1.
        const long long t = need(params, "t", id);
        require(t >= 1, id, "t >= 1");
        value = 3 * t - 1;
    } else {
        value = claimed(eval_formula_checked(formula_id, params));
    }

    Build b = build(formula_id, params, inner);
    const int order = b.coloring.host().order();
    if (order != value - 1) {
        throw VerificationFailed(std::string(id) + ": construction has " + num(order) + " vertices, claimed value " +
                                 num(value) + " needs " + num(value - 1));
    }
    verify(b.coloring, b.targets, id);
    WitnessSpec spec{formula_id, params, order, b.targets, value};
    return {std::move(b.coloring), std::move(spec), std::move(b.nested)};
}

ordered_json params_to_json(const FormulaParams& params)
{
    ordered_json out = ordered_json::object();
    for (const auto& [k, v] : params.values) {
        out[k] = v;
    }
    if (params.m_list) {
        out["m_list"] = *params.m_list;
    }
    if (params.k_list) {
        out["k_list"] = *params.k_list;
    }
    if (params.h) {
        out["h"] = params.h->to_string();
    }
    if (!params.targets.empty()) {
        out["targets"] = to_string(params.targets);
    }
    return out;
}

ordered_json witness_to_json(const Witness& w)
{
    ordered_json doc;
    doc["theorem"] = w.spec.theorem;
    doc["params"] = params_to_json(w.spec.params);
    ordered_json targets = ordered_json::array();
    for (const auto& t : w.spec.targets) {
        targets.push_back(t.to_string());
    }
    doc["targets"] = std::move(targets);
    doc["claimed_value"] = w.spec.claimed_value;
    doc["verification"] = "passed";
    const ordered_json body = coloring_to_json(w.coloring);
    for (const auto& [k, v] : body.items()) {
        doc[k] = v;
    }
    return doc;
}

} // namespace ramsey
