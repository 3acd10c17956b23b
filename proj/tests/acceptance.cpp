// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "golden.hpp"
#include "grids.hpp"
#include "oracle.hpp"
#include "sweep.hpp"

#include "commands.hpp"
#include "ramsey/cnf.hpp"
#include "ramsey/coloring_json.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/search.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace ramsey;
using T = TargetGraph;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_ms, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < limit_ms;
    const bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << " (" << ms << " ms, limit "
         << limit_ms << " ms" << (in_time ? "" : ", over limit") << ")";
    std::cout << line.str() << std::endl;
}

std::string join(const std::vector<long long>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out;
}

std::string join(const std::vector<T>& ts)
{
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out += (i ? "," : "") + ts[i].to_string();
    }
    return out;
}

std::vector<std::string> param_args(const FormulaParams& p)
{
    std::vector<std::string> out;
    for (const auto& [k, v] : p.values) {
        out.push_back("--" + k);
        out.push_back(std::to_string(v));
    }
    if (p.m_list) {
        out.push_back("--m-list");
        out.push_back(join(*p.m_list));
    }
    if (p.k_list) {
        out.push_back("--k-list");
        out.push_back(join(*p.k_list));
    }
    if (p.h) {
        out.push_back("--hgraph");
        out.push_back(p.h->to_string());
    }
    if (!p.targets.empty()) {
        out.push_back("--targets");
        out.push_back(join(p.targets));
    }
    return out;
}

std::filesystem::path scratch_dir()
{
    const auto dir = std::filesystem::temp_directory_path() / "ramsey_acceptance";
    std::filesystem::create_directories(dir);
    return dir;
}

struct SearchCase {
    std::vector<T> targets;
    long long expected;
    std::optional<std::pair<std::string, FormulaParams>> formula;
};

std::vector<SearchCase> small_ramsey()
{
    return {
        {{T::path(3), T::path(3)}, 3, std::pair{std::string("ref_pp"), grids::ints({{"n", 3}, {"m", 3}})}},
        {{T::path(4), T::path(4)}, 5, std::pair{std::string("ref_pp"), grids::ints({{"n", 4}, {"m", 4}})}},
        {{T::matching(2), T::matching(2)}, 5, std::nullopt},
        {{T::path(3), T::path(3), T::path(3)}, 5, std::nullopt},
    };
}

std::vector<SearchCase> small_bipartite()
{
    return {
        {{T::matching(2), T::matching(2)}, 3, std::pair{std::string("lem_h"), grids::ints({{"m", 2}, {"n", 2}})}},
        {{T::path(4), T::path(4)}, 3, std::pair{std::string("thm_t"), grids::ints({{"n1", 4}, {"n2", 4}})}},
        {{T::path(3), T::path(3)}, 3, std::pair{std::string("thm_t"), grids::ints({{"n1", 3}, {"n2", 3}})}},
    };
}

long long formula_value(const std::pair<std::string, FormulaParams>& f)
{
    const FormulaResult r = eval_formula_checked(f.first, f.second);
    return r.pair ? square_b(*r.pair) : r.value.value();
}

Outcome run_searches(const std::vector<SearchCase>& cases, bool bipartite)
{
    Outcome o;
    std::ostringstream d;
    for (const auto& c : cases) {
        const SearchOutcome s = bipartite ? bipartite_search(c.targets, 1, 4) : ramsey_search(c.targets, 2, 8);
        const bool exact = s.exact && s.value == c.expected;
        const bool cert = s.certificate && !violates(*s.certificate, c.targets);
        const bool formula = !c.formula || formula_value(*c.formula) == c.expected;
        o.ok = o.ok && exact && cert && formula;
        d << (bipartite ? "b(" : "R(") << join(c.targets) << ")=" << (s.value ? std::to_string(*s.value) : "?")
          << (exact && cert && formula ? "" : "!") << " ";
    }
    o.detail = d.str() + "expected " + std::string(bipartite ? "3,3,3" : "3,5,5,5");
    return o;
}

/// All colorings of the host, checked against the instance's clauses.
struct Enumerated {
    long long models = 0;
    bool consistent = true;
};

Enumerated enumerate_models(const CnfInstance& inst)
{
    Enumerated out;
    const std::size_t m = inst.host.edge_count();
    std::vector<Color> colors(m, 1);
    for (;;) {
        std::vector<bool> a(static_cast<std::size_t>(inst.variables) + 1, false);
        for (std::size_t e = 0; e < m; ++e) {
            a[inst.var(e, colors[e])] = true;
        }
        const EdgeColoring c(inst.host, inst.k, colors);
        const bool sat = satisfies(inst, a);
        if (sat) {
            ++out.models;
            const EdgeColoring decoded = decode_model(inst, a);
            out.consistent = out.consistent && decoded == c && !violates(decoded, inst.targets);
        } else {
            out.consistent = out.consistent && violates(c, inst.targets).has_value();
        }
        std::size_t i = 0;
        while (i < m && ++colors[i] > inst.k) {
            colors[i++] = 1;
        }
        if (i == m) {
            return out;
        }
    }
}

} // namespace

int main()
{
    criterion(1, "formula golden table", 1000, [] {
        const auto rows = golden::table();
        std::map<std::string, int> per_id;
        std::vector<std::string> bad;
        for (const auto& row : rows) {
            if (auto msg = golden::check(row); !msg.empty()) {
                bad.push_back(msg);
            }
            ++per_id[row.id];
        }
        for (const auto& info : formula_catalog()) {
            if (per_id[info.id] < 3) {
                bad.push_back(info.id + ": fewer than 3 rows");
            }
        }
        std::string detail = std::to_string(rows.size()) + " rows over " + std::to_string(formula_catalog().size()) +
                             " ids, " + std::to_string(bad.size()) + " mismatches";
        if (!bad.empty()) {
            detail += "; first: " + bad.front();
        }
        return Outcome{bad.empty(), detail};
    });

    criterion(2, "witness validity sweep", 60000, [] {
        const auto grid = grids::witness_grid();
        std::set<std::string> covered;
        std::vector<std::string> bad;
        for (const auto& pt : grid) {
            try {
                const Witness w = witness(pt.id, pt.params, pt.inner);
                const bool ok = w.coloring.host().order() == w.spec.claimed_value - 1 &&
                                !violates(w.coloring, w.spec.targets);
                if (!ok) {
                    bad.push_back(pt.id + " " + params_to_json(pt.params).dump());
                }
            } catch (const std::exception& e) {
                bad.push_back(pt.id + " " + params_to_json(pt.params).dump() + ": " + e.what());
            }
            covered.insert(pt.id);
        }
        for (const auto& id : witness_ids()) {
            const bool split = id == "thm_c2m_c4_1" || id == "thm_c2m_c4_2";
            if (!split && !covered.count(id)) {
                bad.push_back(id + ": no grid points");
            }
        }
        std::string detail = std::to_string(grid.size()) + " points over " + std::to_string(covered.size()) +
                             " ids, " + std::to_string(bad.size()) + " failures";
        if (!bad.empty()) {
            detail += "; first: " + bad.front();
        }
        return Outcome{bad.empty(), detail};
    });

    criterion(3, "small Ramsey numbers by search", 30000, [] { return run_searches(small_ramsey(), false); });

    criterion(4, "small bipartite numbers by search", 10000, [] { return run_searches(small_bipartite(), true); });

    criterion(5, "R(P4,P3,P3) against the combining bound", 120000, [] {
        const std::vector<T> targets{T::path(4), T::path(3), T::path(3)};
        const long long b = bipartite_search({T::path(3), T::path(3)}, 1, 4).value.value();
        FormulaParams i = grids::ints({{"m", 4}, {"b", b}});
        const long long bound_i = eval_formula_checked("thm_i", i).value.value();
        FormulaParams ss = grids::ints({{"b", b}});
        ss.h = T::path(4);
        const long long bound_ss = eval_formula_checked("thm_SS", ss).value.value();
        const SearchOutcome s = ramsey_search(targets, 2, static_cast<int>(bound_i));
        const bool cert = s.certificate && s.value &&
                          s.certificate->host().order() == *s.value - 1 && !violates(*s.certificate, targets);
        const bool ok = s.exact && s.value && *s.value <= bound_i && bound_i == 8 && bound_ss == 8 && cert;
        return Outcome{ok, "searched R=" + (s.value ? std::to_string(*s.value) : std::string("?")) + ", bound " +
                               std::to_string(bound_i) + " (b=" + std::to_string(b) + "), certificate on K" +
                               (s.certificate ? std::to_string(s.certificate->host().order()) : "?") +
                               (cert ? " verifies" : " fails")};
    });

    criterion(6, "detector oracle equivalence", 600000, [] {
        sweep::Tally tally;
        sweep::all_small(5, tally);
        sweep::random_graphs(200, 20241018u, tally);
        std::string detail = std::to_string(tally.checks) + " checks, " + std::to_string(tally.failures.size()) +
                             " disagreements";
        if (!tally.failures.empty()) {
            detail += "; first: " + tally.failures.front();
        }
        return Outcome{tally.failures.empty(), detail};
    });

    criterion(7, "CNF cross-validation", 60000, [] {
        const std::vector<ArrowQuery> queries = {
            {Host::complete(3), {T::path(3), T::path(3)}},
            {Host::complete(4), {T::path(3), T::path(3)}},
            {Host::complete(4), {T::matching(2), T::matching(2)}},
            {Host::complete(5), {T::matching(2), T::matching(2)}},
            {Host::complete(4), {T::path(4), T::path(4)}},
            {Host::complete(5), {T::path(4), T::path(3)}},
            {Host::complete(4), {T::path(3), T::path(3), T::path(3)}},
            {Host::complete_bipartite(3, 3), {T::path(3), T::path(3)}},
            {Host::complete_bipartite(2, 4), {T::matching(2), T::matching(2)}},
            {Host::complete_bipartite(2, 3), {T::path(4), T::cycle(4)}},
        };
        int agree = 0;
        int sat = 0;
        std::string first_bad;
        for (const auto& q : queries) {
            const CnfInstance inst = to_cnf(q);
            const bool arrow = arrows(q).arrows;
            const auto model = solve_small(inst);
            const Enumerated all = enumerate_models(inst);
            const bool ok = inst.variables <= 24 && q.host.order() <= 6 && model.has_value() == !arrow &&
                            (all.models > 0) == !arrow && all.consistent && arrow == oracle::arrows(q.host, q.targets) &&
                            (!model || !violates(decode_model(inst, *model), q.targets));
            agree += ok ? 1 : 0;
            sat += model ? 1 : 0;
            if (!ok && first_bad.empty()) {
                first_bad = q.host.name() + " " + join(q.targets);
            }
        }
        std::string detail = std::to_string(agree) + "/" + std::to_string(queries.size()) + " queries agree (" +
                             std::to_string(sat) + " satisfiable)";
        if (!first_bad.empty()) {
            detail += "; first: " + first_bad;
        }
        return Outcome{agree == static_cast<int>(queries.size()), detail};
    });

    criterion(8, "canonical output determinism", 300000, [] {
        const auto dir = scratch_dir();
        std::vector<std::vector<std::string>> commands;
        for (const auto& row : golden::table()) {
            std::vector<std::string> c{"--canonical", "eval", row.id};
            for (auto& a : param_args(row.params)) {
                c.push_back(std::move(a));
            }
            commands.push_back(std::move(c));
        }
        int n = 0;
        for (const auto& pt : grids::witness_grid()) {
            std::vector<std::string> c{"--canonical", "witness", pt.id};
            for (auto& a : param_args(pt.params)) {
                c.push_back(std::move(a));
            }
            if (pt.inner) {
                const auto file = dir / ("inner" + std::to_string(n++) + ".json");
                std::ofstream(file) << coloring_to_text(*pt.inner);
                c.push_back("--inner");
                c.push_back(file.string());
            }
            commands.push_back(std::move(c));
        }
        for (const auto& sc : small_ramsey()) {
            commands.push_back({"--canonical", "search", "--targets", join(sc.targets), "--range", "2:8"});
        }
        for (const auto& sc : small_bipartite()) {
            commands.push_back({"--canonical", "bsearch", "--targets", join(sc.targets), "--range", "1:4"});
        }
        commands.push_back({"--canonical", "search", "--targets", "P4,P3,P3", "--range", "2:8"});
        commands.push_back({"--canonical", "search", "--targets", "P4,P3,P3", "--range", "2:8", "--jobs", "2"});
        int identical = 0;
        int succeeded = 0;
        std::string first_bad;
        for (const auto& c : commands) {
            std::ostringstream a, b, ea, eb;
            const int ca = cli::run(c, a, ea);
            const int cb = cli::run(c, b, eb);
            identical += a.str() == b.str() && ca == cb ? 1 : 0;
            succeeded += ca == 0 ? 1 : 0;
            if ((a.str() != b.str() || ca != 0) && first_bad.empty()) {
                first_bad = c[1] + " " + c[2] + " exit " + std::to_string(ca);
            }
        }
        const int total = static_cast<int>(commands.size());
        std::string detail = std::to_string(identical) + "/" + std::to_string(total) + " byte-identical, " +
                             std::to_string(succeeded) + " exit 0";
        if (!first_bad.empty()) {
            detail += "; first: " + first_bad;
        }
        return Outcome{identical == total && succeeded == total, detail};
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
