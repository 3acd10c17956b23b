#include "doctest.h"

#include "ramsey/coloring_json.hpp"
#include "ramsey/error.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <algorithm>

using namespace ramsey;

TEST_SUITE("graph")
{
    TEST_CASE("simple graph edges are a set")
    {
        SimpleGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        g.add_edge(2, 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(1, 0));
        CHECK_FALSE(g.has_edge(0, 2));
        CHECK(g.degree(1) == 1);
        g.remove_edge(0, 1);
        CHECK(g.edge_count() == 1);
        CHECK_THROWS_AS(g.add_edge(2, 2), InvalidInput);
        CHECK_THROWS_AS(g.add_edge(0, 4), InvalidInput);
    }

    TEST_CASE("builders")
    {
        CHECK(complete_graph(5).edge_count() == 10);
        CHECK(path_graph(5).edge_count() == 4);
        CHECK(cycle_graph(5).edge_count() == 5);
        CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
        CHECK(complement(complete_graph(4)).edge_count() == 0);
        CHECK(join(empty_graph(2), empty_graph(3)) == complete_bipartite_graph(2, 3));
        CHECK(disjoint_union(complete_graph(2), complete_graph(2)).edge_count() == 2);
        SimpleGraph big(70);
        big.add_edge(3, 69);
        CHECK(big.neighbors(69) == std::vector<Vertex>{3});
    }

    TEST_CASE("hosts use lexicographic edge order")
    {
        const Host k4 = Host::complete(4);
        REQUIRE(k4.edge_count() == 6);
        CHECK(k4.edges().front() == Edge{0, 1});
        CHECK(k4.edges()[3] == Edge{1, 2});
        CHECK(k4.edge_index(3, 2) == 5);
        CHECK(k4.name() == "K4");

        const Host b = Host::complete_bipartite(2, 3);
        CHECK(b.edge_count() == 6);
        CHECK(b.edges().front() == Edge{0, 2});
        CHECK_FALSE(b.edge_index(0, 1).has_value());
        CHECK(b.name() == "K2,3");
        CHECK_THROWS_AS(Host::complete(0), InvalidInput);
    }

    TEST_CASE("colorings validate totality and range")
    {
        const Host k3 = Host::complete(3);
        CHECK_THROWS_AS(EdgeColoring(k3, 2, {1, 2}), InvalidInput);
        CHECK_THROWS_AS(EdgeColoring(k3, 2, {1, 2, 3}), InvalidInput);
        CHECK_THROWS_AS(EdgeColoring(k3, 2, {0, 1, 1}), InvalidInput);
        EdgeColoring c(k3, 2, {1, 2, 1});
        CHECK(c.color_of(2, 0) == 2);
        CHECK(mono_class(c, 1).edge_count() == 2);
        const std::vector<Color> swap{2, 1};
        CHECK(recolor(c, swap, 2).color_of(0, 1) == 2);
    }

    TEST_CASE("split recipe with nested block")
    {
        EdgeColoring inner(Host::complete(3), 2, {1, 2, 1});
        SplitRecipe r({3, 2, 0});
        r.fill(3).set(1, 1, 2).override_block(0, inner);
        EdgeColoring c = apply_split(r, 3);
        CHECK(c.host() == Host::complete(5));
        const EdgeColoring head = restrict_to(c, 0, 3);
        CHECK(std::ranges::equal(head.assignment(), inner.assignment()));
        CHECK(c.color_of(3, 4) == 2);
        CHECK(c.color_of(0, 4) == 3);

        SplitRecipe missing({2, 2});
        missing.set(0, 0, 1);
        CHECK_THROWS_AS(apply_split(missing, 2), InvalidInput);
        SplitRecipe over({2});
        over.fill(3);
        CHECK_THROWS_AS(apply_split(over, 2), InvalidInput);
    }
}

TEST_SUITE("targets")
{
    TEST_CASE("tokens round trip")
    {
        for (const char* tok : {"P5", "C6", "3K2", "K2", "S4", "B2x3", "M3x2"}) {
            CHECK(parse_target(tok).to_string() == tok);
        }
        CHECK(parse_target(" p4 ") == TargetGraph::path(4));
        CHECK(parse_target("1K2") == TargetGraph::matching(1));
        CHECK(parse_target_list("P3,C4,2K2").size() == 3);
        CHECK_THROWS_AS(parse_target("C2"), ParseError);
        CHECK_THROWS_AS(parse_target("Q5"), ParseError);
        CHECK_THROWS_AS(parse_target(""), ParseError);
    }

    TEST_CASE("shape sizes")
    {
        CHECK(TargetGraph::cycle(5).edge_count() == 5);
        CHECK(TargetGraph::matching(3).vertex_count() == 6);
        CHECK(TargetGraph::star(4).vertex_count() == 5);
        CHECK(TargetGraph::biclique(2, 3).edge_count() == 6);
        CHECK(TargetGraph::multipartite(3, 2).edge_count() == 12);
        CHECK_FALSE(TargetGraph::cycle(5).is_bipartite());
        CHECK(TargetGraph::cycle(6).is_bipartite());
        CHECK_FALSE(TargetGraph::multipartite(3, 1).is_bipartite());
    }
}

TEST_SUITE("json")
{
    TEST_CASE("coloring text round trips byte for byte")
    {
        EdgeColoring c(Host::complete_bipartite(2, 2), 2, {1, 2, 2, 1});
        const std::string text = coloring_to_text(c);
        CHECK(text == R"({"host":{"kind":"bipartite","a":2,"b":2},"k":2,"edges":[[0,2,1],[0,3,2],[1,2,2],[1,3,1]]})");
        EdgeColoring back = coloring_from_text(text);
        CHECK(back == c);
        CHECK(coloring_to_text(back) == text);
    }

    TEST_CASE("strict parsing names the field")
    {
        auto message = [](const char* text) {
            try {
                coloring_from_text(text);
            } catch (const ParseError& e) {
                return std::string(e.what());
            }
            return std::string("no error");
        };
        CHECK(message(R"({"host":{"kind":"complete","n":2},"k":1,"edges":[[0,1,1]],"x":1})").find("'x'") !=
              std::string::npos);
        CHECK(message(R"({"host":{"kind":"complete","n":3},"k":2,"edges":[[0,1,1],[1,2,1],[0,2,1]]})")
                  .find("edges[1]") != std::string::npos);
        CHECK(message(R"({"host":{"kind":"complete","n":2},"k":2,"edges":[[0,1,3]]})").find("edges[0]") !=
              std::string::npos);
        CHECK(message(R"({"host":{"kind":"torus","n":2},"k":1,"edges":[]})").find("host.kind") != std::string::npos);
        CHECK(message("{\n  \"host\": ,\n}").find("line 2") != std::string::npos);
    }

    TEST_CASE("witness header fields are accepted")
    {
        const char* text =
            R"({"theorem":"x","params":{},"targets":["P3"],"claimed_value":3,"verification":"passed",)"
            R"("host":{"kind":"complete","n":2},"k":1,"edges":[[0,1,1]]})";
        CHECK(coloring_from_text(text).host() == Host::complete(2));
    }
}
