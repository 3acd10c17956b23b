#include "oracle.hpp"

#include "ramsey/cnf.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"

#include <doctest.h>

using namespace ramsey;

namespace {

using T = TargetGraph;

/// Every k-coloring maps to a unique exactly-one assignment; checks that
/// satisfaction coincides with avoidance for all of them.
int count_models(const CnfInstance& inst)
{
    const std::size_t m = inst.host.edge_count();
    std::vector<Color> colors(m, 1);
    int models = 0;
    for (;;) {
        std::vector<bool> assignment(inst.variables + 1, false);
        for (std::size_t e = 0; e < m; ++e) {
            assignment[inst.var(e, colors[e])] = true;
        }
        const bool sat = satisfies(inst, assignment);
        const EdgeColoring coloring(inst.host, inst.k, colors);
        CHECK(sat == !violates(coloring, inst.targets).has_value());
        if (sat) {
            ++models;
            CHECK(decode_model(inst, assignment) == coloring);
        }
        std::size_t i = 0;
        while (i < m && ++colors[i] > inst.k) {
            colors[i++] = 1;
        }
        if (i == m) {
            return models;
        }
    }
}

} // namespace

TEST_SUITE("cnf")
{
    TEST_CASE("satisfiable iff not arrowing")
    {
        const std::vector<ArrowQuery> queries = {
            {Host::complete(4), {T::matching(2), T::matching(2)}},
            {Host::complete(5), {T::matching(2), T::matching(2)}},
            {Host::complete(3), {T::path(3), T::path(3)}},
            {Host::complete_bipartite(2, 2), {T::path(3), T::path(3)}},
            {Host::complete(4), {T::path(3), T::path(3), T::path(3)}},
        };
        for (const auto& q : queries) {
            const CnfInstance inst = to_cnf(q);
            CAPTURE(q.host.name());
            CHECK(inst.variables == static_cast<int>(q.host.edge_count() * q.targets.size()));
            const auto model = solve_small(inst);
            CHECK(model.has_value() == !oracle::arrows(q.host, q.targets));
            CHECK((count_models(inst) > 0) == model.has_value());
            if (model) {
                CHECK(satisfies(inst, *model));
                CHECK_FALSE(violates(decode_model(inst, *model), q.targets));
            }
        }
    }

    TEST_CASE("dimacs round trip")
    {
        const CnfInstance inst = to_cnf({Host::complete(4), {T::matching(2), T::path(3)}});
        const std::string text = to_dimacs(inst);
        CHECK(text.find("p cnf 12 ") != std::string::npos);
        const CnfInstance back = parse_dimacs(text);
        CHECK(back.host == inst.host);
        CHECK(back.k == inst.k);
        CHECK(back.variables == inst.variables);
        CHECK(back.clauses == inst.clauses);
        CHECK(to_dimacs(back) == text);
    }

    TEST_CASE("malformed dimacs")
    {
        CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);
        CHECK_THROWS_AS(parse_dimacs("c host K2\nc k 2\np cnf 2 2\n1 2 0\n"), ParseError);
        CHECK_THROWS_AS(parse_dimacs("c host K2\nc k 2\np cnf 2 1\n1 3 0\n"), ParseError);
        CHECK_THROWS_AS(parse_dimacs("c host K2\nc k 2\np cnf 2 1\n1 x 0\n"), ParseError);
        CHECK_NOTHROW(parse_dimacs("c host K2\nc k 2\np cnf 2 1\n1 2 0\n"));
    }

    TEST_CASE("models")
    {
        const CnfInstance inst = to_cnf({Host::complete(3), {T::path(3), T::matching(2)}});
        const auto lits = parse_model("s SATISFIABLE\nv 1 -2 3\nv -4 -5 6 0\n7\n");
        CHECK(lits == std::vector<int>{1, -2, 3, -4, -5, 6});
        const EdgeColoring c = decode_model(inst, lits);
        CHECK(c.color_at(0) == 1);
        CHECK(c.color_at(2) == 2);
        CHECK_THROWS_AS(decode_model(inst, std::vector<int>{1, 2, 3, 5}), InvalidInput);
        CHECK_THROWS_AS(decode_model(inst, std::vector<int>{1, 3}), InvalidInput);
        CHECK_THROWS_AS(decode_model(inst, std::vector<int>{1, 3, 5, 9}), InvalidInput);
        CHECK_THROWS_AS(parse_model("v 1 q 0"), ParseError);
    }

    TEST_CASE("budgets")
    {
        CHECK_THROWS_AS(solve_small(to_cnf({Host::complete(6), {T::path(3), T::path(3)}})), BudgetExceeded);
        CHECK_THROWS_AS(to_cnf({Host::complete(6), {T::path(6)}}, 10), BudgetExceeded);
    }
}
