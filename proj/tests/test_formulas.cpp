#include "golden.hpp"

#include "ramsey/error.hpp"
#include "ramsey/formulas.hpp"

#include <doctest.h>

#include <set>

using namespace ramsey;

TEST_SUITE("formulas")
{
    TEST_CASE("golden table")
    {
        std::map<std::string, int> per_id;
        for (const auto& row : golden::table()) {
            CAPTURE(row.id);
            CHECK(golden::check(row) == "");
            ++per_id[row.id];
        }
        for (const auto& info : formula_catalog()) {
            CAPTURE(info.id);
            CHECK(per_id[info.id] >= 3);
        }
    }

    TEST_CASE("default grid passes preconditions")
    {
        for (const auto& [id, params] : default_grid()) {
            CAPTURE(id);
            CHECK(eval_formula(id, params).ok());
        }
    }

    TEST_CASE("precondition failures")
    {
        CHECK_FALSE(eval_formula("thm_p_i", golden::p({{"k", 5}})).ok());
        CHECK_FALSE(eval_formula("thm_p_ii", golden::p({{"s", 2}, {"m", 3}, {"t", 9}})).ok());
        CHECK_FALSE(eval_formula("thm_Far", golden::lists(golden::p({{"n", 9}}), {2}, {3})).ok());
        CHECK_FALSE(eval_formula("lem_RE", golden::lists(golden::p({{"m", 4}}), {}, {2})).ok());
        CHECK_FALSE(eval_formula("thm_t", golden::p({{"n1", 4}, {"n2", 5}})).ok());
        CHECK_FALSE(eval_formula("thm_p3c2n", golden::p({{"t", 2}, {"n", 2}})).ok());
        CHECK_FALSE(eval_formula("ref_b_p3_c2n", golden::p({{"n", 2}})).ok());
        CHECK_FALSE(eval_formula("cor_AA", golden::p({{"t", 2}, {"r", 5}, {"b", 2}})).ok());
        CHECK_THROWS_AS(eval_formula_checked("thm_p_i", golden::p({{"k", 5}})), PreconditionFailed);
        const auto r = eval_formula("thm_p_i", golden::p({{"k", 5}}));
        CHECK_FALSE(r.value.has_value());
        CHECK(r.failure() == "k is even");
    }

    TEST_CASE("invalid input")
    {
        CHECK_THROWS_AS(eval_formula("no_such_id", {}), InvalidInput);
        CHECK_THROWS_AS(eval_formula("thm_Z", golden::p({{"t", 1}})), InvalidInput);
        CHECK_THROWS_AS(eval_formula("thm_p_ii", golden::p({{"n1", 4}, {"m", 3}, {"t", 3}})), InvalidInput);
        CHECK_THROWS_AS(eval_formula("thm_p_ii", golden::p({{"n1", 3}, {"s", 2}, {"m", 3}, {"t", 3}})),
                        InvalidInput);
    }

    TEST_CASE("derived quantities")
    {
        const auto f = eval_formula("lem_f", golden::lists({}, {2, 2}, {2}));
        CHECK(f.derived.at("Lambda") == 2);
        CHECK(f.derived.at("Sigma") == 1);
        const auto t = eval_formula("thm_t", golden::p({{"n1", 5}, {"n2", 4}}));
        CHECK(t.derived.at("case") == 2);
        CHECK(eval_formula("thm_p_ii", golden::p({{"n1", 5}, {"n2", 8}, {"t", 5}})).value == 14);
        CHECK(eval_formula("ref_tk2_p", golden::p({{"k", 6}})).derived.at("t") == 5);
        CHECK(lambda_of({3, 1, 2}) == 3);
        CHECK(sigma_of({}) == 0);
    }

    TEST_CASE("caveats")
    {
        CHECK(eval_formula("thm_q", golden::p({{"n0", 20}, {"n1", 5}, {"n2", 8}})).large_n_caveat);
        CHECK_FALSE(eval_formula("thm_Z", golden::p({{"t", 4}, {"n", 3}})).large_n_caveat);
        CHECK(eval_formula("ref_cp", golden::p({{"n0", 7}, {"n1", 4}})).large_n_caveat);
        CHECK_FALSE(eval_formula("ref_cp", golden::p({{"n0", 8}, {"n1", 4}})).large_n_caveat);
    }

    TEST_CASE("combine_upper")
    {
        const Bound c = combine_upper(TargetGraph::cycle(10), 3);
        CHECK(c.value == 12);
        CHECK(c.large_n_caveat);
        const Bound p = combine_upper(TargetGraph::path(4), 3);
        CHECK(p.value == 8);
        CHECK_FALSE(p.large_n_caveat);
        CHECK(combine_upper(TargetGraph::matching(4), 3).value == 10);
        CHECK(combine_upper(TargetGraph::matching(2), 3).value == 7);
        CHECK_THROWS_AS(combine_upper(TargetGraph::star(3), 2), InvalidInput);
    }

    TEST_CASE("square_b")
    {
        CHECK(square_b({3, 3}) == 3);
        CHECK(square_b({4, 3}) == 4);
        CHECK_THROWS_AS(square_b({2, 3}), InvalidInput);
    }

    TEST_CASE("assemble_exact")
    {
        Bound lo{Bound::Kind::Lower, 5, "thm_q", false, {}, {}};
        Bound hi{Bound::Kind::Upper, 5, "search", false, {}, {}};
        auto exact = assemble_exact(lo, hi);
        REQUIRE(exact);
        CHECK(exact->kind == Bound::Kind::Exact);
        CHECK(exact->value == 5);
        CHECK(exact->lower_provenance == "thm_q");
        CHECK(exact->upper_provenance == "search");
        hi.value = 6;
        CHECK_FALSE(assemble_exact(lo, hi));
        hi.value = 5;
        hi.large_n_caveat = true;
        CHECK_FALSE(assemble_exact(lo, hi));
    }
}
