#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramsey {

using Vertex = int;
/// Colors are 1-based throughout; 0 never denotes a color.
using Color = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool has_edge(Vertex u, Vertex v) const;
    /// Adding an existing edge is a no-op (set semantics). Loops and
    /// out-of-range endpoints throw InvalidInput.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const;
    int max_degree() const;
    std::vector<Vertex> neighbors(Vertex v) const;
    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    /// Raw adjacency row of v: words() 64-bit words, bit j set iff v~j.
    std::span<const std::uint64_t> row(Vertex v) const
    {
        return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    int words() const { return words_; }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_pair(Vertex u, Vertex v) const;

    int n_ = 0;
    int words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> adj_;
};

SimpleGraph complete_graph(int n);
SimpleGraph empty_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_bipartite_graph(int a, int b);

/// Complement within K_n.
SimpleGraph complement(const SimpleGraph& g);
/// Disjoint union; h's vertices are relabelled to follow g's.
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);
/// Disjoint union plus every edge between the two vertex sets.
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

enum class HostKind { Complete, CompleteBipartite };

/// The graph whose edges get colored: K_n, or K_{a,b} with left side
/// 0..a-1 and right side a..a+b-1. Edges are kept in lexicographic order;
/// that order is the index space of every coloring on the host.
class Host {
public:
    static Host complete(int n);
    static Host complete_bipartite(int a, int b);

    HostKind kind() const { return kind_; }
    int order() const { return kind_ == HostKind::Complete ? a_ : a_ + b_; }
    /// n for K_n, a for K_{a,b}.
    int left() const { return a_; }
    /// 0 for K_n, b for K_{a,b}.
    int right() const { return b_; }

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Index of {u,v} in edges(), if it is a host edge.
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

    /// "K5" or "K3,4".
    std::string name() const;
    SimpleGraph graph() const;

    friend bool operator==(const Host& x, const Host& y) { return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_; }

private:
    Host(HostKind kind, int a, int b);

    HostKind kind_ = HostKind::Complete;
    int a_ = 0;
    int b_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int32_t> index_;
};

/// `a` is n for complete hosts.
Host build_host(HostKind kind, int a, int b = 0);

/// Total map from host edges to colors 1..k.
class EdgeColoring {
public:
    EdgeColoring(Host host, int k, std::vector<Color> colors);

    const Host& host() const { return host_; }
    int colors() const { return k_; }
    std::span<const Color> assignment() const { return colors_; }
    Color color_at(std::size_t edge_index) const { return colors_.at(edge_index); }
    Color color_of(Vertex u, Vertex v) const;

    friend bool operator==(const EdgeColoring& x, const EdgeColoring& y)
    {
        return x.host_ == y.host_ && x.k_ == y.k_ && x.colors_ == y.colors_;
    }

private:
    Host host_;
    int k_;
    std::vector<Color> colors_;
};

/// Graph on the host's vertices holding exactly the edges of color c.
SimpleGraph mono_class(const EdgeColoring& coloring, Color c);

/// Coloring of K_count induced by vertices first..first+count-1 of a
/// complete host.
EdgeColoring restrict_to(const EdgeColoring& coloring, Vertex first, int count);

/// Same coloring with color c replaced by permutation[c-1].
EdgeColoring recolor(const EdgeColoring& coloring, std::span<const Color> permutation, int k);

struct BlockOverride {
    std::size_t block = 0;
    EdgeColoring coloring;
};

/// Block partition of K_{sum(blocks)} with one color per unordered block
/// pair. Blocks occupy consecutive vertex ranges, left to right. An override
/// replaces the intra-block color of its block by an explicit coloring.
class SplitRecipe {
public:
    explicit SplitRecipe(std::vector<int> blocks);

    const std::vector<int>& blocks() const { return blocks_; }
    int order() const;
    Vertex block_start(std::size_t block) const;

    /// Color of edges between blocks i and j (i == j: inside block i).
    SplitRecipe& set(std::size_t i, std::size_t j, Color c);
    /// Assign c to every block pair.
    SplitRecipe& fill(Color c);
    SplitRecipe& override_block(std::size_t block, EdgeColoring coloring);

    std::optional<Color> entry(std::size_t i, std::size_t j) const;
    const std::vector<BlockOverride>& overrides() const { return overrides_; }

private:
    std::vector<int> blocks_;
    std::vector<Color> matrix_;  // row-major, symmetric, 0 = unset
    std::vector<BlockOverride> overrides_;
};

EdgeColoring apply_split(const SplitRecipe& recipe, int k);

} // namespace ramsey
