#pragma once

#include "ramsey/graph.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ramsey {

struct PathShape {
    int order;
    friend bool operator==(const PathShape&, const PathShape&) = default;
};
struct CycleShape {
    int order;
    friend bool operator==(const CycleShape&, const CycleShape&) = default;
};
struct MatchingShape {
    int size;
    friend bool operator==(const MatchingShape&, const MatchingShape&) = default;
};
struct StarShape {
    int leaves;
    friend bool operator==(const StarShape&, const StarShape&) = default;
};
struct BicliqueShape {
    int a;
    int b;
    friend bool operator==(const BicliqueShape&, const BicliqueShape&) = default;
};
struct MultipartiteShape {
    int parts;
    int part_size;
    friend bool operator==(const MultipartiteShape&, const MultipartiteShape&) = default;
};

/// A forbidden monochromatic pattern: P_n, C_n, tK_2, K_{1,k}, K_{a,b} or
/// the complete multipartite K^{parts}_{r}.
///
/// Every target has a fixed pattern labelling used by embeddings:
///   path/cycle  vertices 0..n-1 in order;
///   matching    edges {2i, 2i+1};
///   star        center 0, leaves 1..k;
///   biclique    side A = 0..a-1, side B = a..a+b-1;
///   multipart.  part j = j*r .. j*r+r-1.
class TargetGraph {
public:
    using Shape = std::variant<PathShape, CycleShape, MatchingShape, StarShape, BicliqueShape, MultipartiteShape>;

    static TargetGraph path(int order);
    static TargetGraph cycle(int order);
    static TargetGraph matching(int size);
    static TargetGraph star(int leaves);
    static TargetGraph biclique(int a, int b);
    static TargetGraph multipartite(int parts, int part_size);

    const Shape& shape() const { return shape_; }

    int vertex_count() const;
    std::size_t edge_count() const;
    bool is_bipartite() const;
    /// The target itself, in its pattern labelling.
    SimpleGraph pattern() const;

    /// Command-line token: P5, C6, 3K2 (K2 for t=1), S4, B2x3, M3x2.
    std::string to_string() const;

    friend bool operator==(const TargetGraph&, const TargetGraph&) = default;

private:
    explicit TargetGraph(Shape s) : shape_(s) {}
    Shape shape_;
};

TargetGraph parse_target(std::string_view token);
/// Comma-separated tokens.
std::vector<TargetGraph> parse_target_list(std::string_view text);
std::string to_string(const std::vector<TargetGraph>& targets);

/// Host edges of the pattern under the map pattern vertex i -> vertices[i].
std::vector<Edge> pattern_edges(const TargetGraph& target, std::span<const Vertex> vertices);

} // namespace ramsey
