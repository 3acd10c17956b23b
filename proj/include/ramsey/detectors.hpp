#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ramsey {

// Exact containment tests. "Contains H" always means H is a (not necessarily
// induced) subgraph; paths and cycles are counted in vertices.
//
// The find_* variants return an embedding in the target's pattern labelling
// (see TargetGraph), i.e. vertices[i] is the image of pattern vertex i.

bool has_path(const SimpleGraph& g, int order);
std::optional<std::vector<Vertex>> find_path(const SimpleGraph& g, int order);

/// Cycle on exactly `order` vertices.
bool has_cycle(const SimpleGraph& g, int order);
std::optional<std::vector<Vertex>> find_cycle(const SimpleGraph& g, int order);

int max_matching(const SimpleGraph& g);
/// A maximum matching, edges in lexicographic order.
std::vector<Edge> maximum_matching(const SimpleGraph& g);

/// K_{1,k} is contained iff max_degree >= k.
int max_degree(const SimpleGraph& g);

bool has_biclique(const SimpleGraph& g, int a, int b);
std::optional<std::vector<Vertex>> find_biclique(const SimpleGraph& g, int a, int b);

bool has_multipartite(const SimpleGraph& g, int parts, int part_size);
std::optional<std::vector<Vertex>> find_multipartite(const SimpleGraph& g, int parts, int part_size);

bool contains(const SimpleGraph& g, const TargetGraph& target);
std::optional<std::vector<Vertex>> find_embedding(const SimpleGraph& g, const TargetGraph& target);

/// Whether g contains a copy of target that uses the edge {u,v}. Requires
/// g.order() <= 64 and {u,v} in g. Used by search to re-check only what the
/// newest edge can complete.
bool contains_through_edge(const SimpleGraph& g, const TargetGraph& target, Vertex u, Vertex v);

struct Violation {
    Color color = 0;
    TargetGraph target;
    std::vector<Vertex> vertices;
};

/// First color i (in order) whose class contains targets[i-1], with an
/// explicit embedding; nullopt if the coloring avoids every target.
std::optional<Violation> violates(const EdgeColoring& coloring, std::span<const TargetGraph> targets);

/// Every pattern edge of the violation's embedding carries its color.
bool violation_is_genuine(const EdgeColoring& coloring, const Violation& violation);

} // namespace ramsey
