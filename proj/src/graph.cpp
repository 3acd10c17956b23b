#include "ramsey/graph.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ramsey {

namespace {

constexpr int word_count(int n) { return (n + 63) / 64; }

std::string pair_text(Vertex u, Vertex v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

SimpleGraph::SimpleGraph(int n) : n_(n), words_(word_count(n))
{
    if (n < 0) {
        throw InvalidInput("graph order must be non-negative");
    }
    adj_.assign(static_cast<std::size_t>(n) * words_, 0);
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges)
{
    SimpleGraph g(n);
    for (const Edge& e : edges) {
        g.add_edge(e.u, e.v);
    }
    return g;
}

void SimpleGraph::check_pair(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InvalidInput("edge " + pair_text(u, v) + " out of range for order " + std::to_string(n_));
    }
    if (u == v) {
        throw InvalidInput("loop at vertex " + std::to_string(u));
    }
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        return false;
    }
    return (row(u)[v >> 6] >> (v & 63)) & 1U;
}

void SimpleGraph::add_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    if (has_edge(u, v)) {
        return;
    }
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
}

void SimpleGraph::remove_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    if (!has_edge(u, v)) {
        return;
    }
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
}

int SimpleGraph::degree(Vertex v) const
{
    int d = 0;
    for (std::uint64_t w : row(v)) {
        d += std::popcount(w);
    }
    return d;
}

int SimpleGraph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits != 0) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

SimpleGraph complete_graph(int n)
{
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph path_graph(int n)
{
    SimpleGraph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

SimpleGraph cycle_graph(int n)
{
    if (n < 3) {
        throw InvalidInput("cycle needs at least 3 vertices");
    }
    SimpleGraph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

SimpleGraph complete_bipartite_graph(int a, int b)
{
    return join(empty_graph(a), empty_graph(b));
}

SimpleGraph complement(const SimpleGraph& g)
{
    SimpleGraph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h)
{
    SimpleGraph out(g.order() + h.order());
    for (const Edge& e : g.edges()) {
        out.add_edge(e.u, e.v);
    }
    for (const Edge& e : h.edges()) {
        out.add_edge(e.u + g.order(), e.v + g.order());
    }
    return out;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h)
{
    SimpleGraph out = disjoint_union(g, h);
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < h.order(); ++v) {
            out.add_edge(u, g.order() + v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

Host::Host(HostKind kind, int a, int b) : kind_(kind), a_(a), b_(b)
{
    const int n = order();
    index_.assign(static_cast<std::size_t>(n) * n, -1);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const bool crossing = u < a_ && v >= a_;
            if (kind_ == HostKind::Complete || crossing) {
                const auto idx = static_cast<std::int32_t>(edges_.size());
                index_[static_cast<std::size_t>(u) * n + v] = idx;
                index_[static_cast<std::size_t>(v) * n + u] = idx;
                edges_.push_back({u, v});
            }
        }
    }
}

Host Host::complete(int n)
{
    if (n < 1) {
        throw InvalidInput("complete host needs n >= 1, got " + std::to_string(n));
    }
    return Host(HostKind::Complete, n, 0);
}

Host Host::complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1) {
        throw InvalidInput("bipartite host needs a,b >= 1, got " + std::to_string(a) + "," + std::to_string(b));
    }
    return Host(HostKind::CompleteBipartite, a, b);
}

Host build_host(HostKind kind, int a, int b)
{
    return kind == HostKind::Complete ? Host::complete(a) : Host::complete_bipartite(a, b);
}

std::optional<std::size_t> Host::edge_index(Vertex u, Vertex v) const
{
    const int n = order();
    if (u < 0 || v < 0 || u >= n || v >= n) {
        return std::nullopt;
    }
    const std::int32_t idx = index_[static_cast<std::size_t>(u) * n + v];
    if (idx < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(idx);
}

std::string Host::name() const
{
    if (kind_ == HostKind::Complete) {
        return "K" + std::to_string(a_);
    }
    return "K" + std::to_string(a_) + "," + std::to_string(b_);
}

SimpleGraph Host::graph() const
{
    return SimpleGraph::from_edges(order(), edges_);
}

// ---------------------------------------------------------------------------

EdgeColoring::EdgeColoring(Host host, int k, std::vector<Color> colors)
    : host_(std::move(host)), k_(k), colors_(std::move(colors))
{
    if (k_ < 1) {
        throw InvalidInput("coloring needs at least one color");
    }
    if (colors_.size() != host_.edge_count()) {
        throw InvalidInput("coloring assigns " + std::to_string(colors_.size()) + " colors to a host with " +
                           std::to_string(host_.edge_count()) + " edges");
    }
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1 || colors_[i] > k_) {
            const Edge& e = host_.edges()[i];
            throw InvalidInput("edge " + pair_text(e.u, e.v) + " has color " + std::to_string(colors_[i]) +
                               " outside 1.." + std::to_string(k_));
        }
    }
}

Color EdgeColoring::color_of(Vertex u, Vertex v) const
{
    auto idx = host_.edge_index(u, v);
    if (!idx) {
        throw InvalidInput("pair " + pair_text(u, v) + " is not an edge of " + host_.name());
    }
    return colors_[*idx];
}

SimpleGraph mono_class(const EdgeColoring& coloring, Color c)
{
    if (c < 1 || c > coloring.colors()) {
        throw InvalidInput("color " + std::to_string(c) + " outside 1.." + std::to_string(coloring.colors()));
    }
    const Host& host = coloring.host();
    SimpleGraph g(host.order());
    for (std::size_t i = 0; i < host.edge_count(); ++i) {
        if (coloring.color_at(i) == c) {
            g.add_edge(host.edges()[i].u, host.edges()[i].v);
        }
    }
    return g;
}

EdgeColoring restrict_to(const EdgeColoring& coloring, Vertex first, int count)
{
    if (coloring.host().kind() != HostKind::Complete) {
        throw InvalidInput("restriction is defined for complete hosts only");
    }
    if (first < 0 || count < 1 || first + count > coloring.host().order()) {
        throw InvalidInput("restriction range out of bounds");
    }
    Host sub = Host::complete(count);
    std::vector<Color> colors;
    colors.reserve(sub.edge_count());
    for (const Edge& e : sub.edges()) {
        colors.push_back(coloring.color_of(first + e.u, first + e.v));
    }
    return EdgeColoring(std::move(sub), coloring.colors(), std::move(colors));
}

EdgeColoring recolor(const EdgeColoring& coloring, std::span<const Color> permutation, int k)
{
    if (permutation.size() != static_cast<std::size_t>(coloring.colors())) {
        throw InvalidInput("color map must have one entry per color");
    }
    std::vector<Color> colors;
    colors.reserve(coloring.assignment().size());
    for (Color c : coloring.assignment()) {
        colors.push_back(permutation[c - 1]);
    }
    return EdgeColoring(coloring.host(), k, std::move(colors));
}

// ---------------------------------------------------------------------------

SplitRecipe::SplitRecipe(std::vector<int> blocks) : blocks_(std::move(blocks))
{
    if (blocks_.empty()) {
        throw InvalidInput("split recipe needs at least one block");
    }
    for (int size : blocks_) {
        if (size < 0) {
            throw InvalidInput("block sizes must be non-negative");
        }
    }
    matrix_.assign(blocks_.size() * blocks_.size(), 0);
}

int SplitRecipe::order() const
{
    int total = 0;
    for (int size : blocks_) {
        total += size;
    }
    return total;
}

Vertex SplitRecipe::block_start(std::size_t block) const
{
    Vertex start = 0;
    for (std::size_t i = 0; i < block; ++i) {
        start += blocks_.at(i);
    }
    return start;
}

SplitRecipe& SplitRecipe::set(std::size_t i, std::size_t j, Color c)
{
    const std::size_t b = blocks_.size();
    if (i >= b || j >= b) {
        throw InvalidInput("block index out of range");
    }
    if (c < 1) {
        throw InvalidInput("split colors are 1-based");
    }
    matrix_[i * b + j] = c;
    matrix_[j * b + i] = c;
    return *this;
}

SplitRecipe& SplitRecipe::fill(Color c)
{
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (std::size_t j = i; j < blocks_.size(); ++j) {
            set(i, j, c);
        }
    }
    return *this;
}

SplitRecipe& SplitRecipe::override_block(std::size_t block, EdgeColoring coloring)
{
    if (block >= blocks_.size()) {
        throw InvalidInput("override block index out of range");
    }
    const Host& h = coloring.host();
    if (h.kind() != HostKind::Complete || h.order() != blocks_[block]) {
        throw InvalidInput("override on block " + std::to_string(block) + " must color K" +
                           std::to_string(blocks_[block]) + ", got " + h.name());
    }
    for (const auto& existing : overrides_) {
        if (existing.block == block) {
            throw InvalidInput("block " + std::to_string(block) + " overridden twice");
        }
    }
    overrides_.push_back({block, std::move(coloring)});
    return *this;
}

std::optional<Color> SplitRecipe::entry(std::size_t i, std::size_t j) const
{
    const Color c = matrix_.at(i * blocks_.size() + j);
    if (c == 0) {
        return std::nullopt;
    }
    return c;
}

EdgeColoring apply_split(const SplitRecipe& recipe, int k)
{
    const int n = recipe.order();
    if (n < 1) {
        throw InvalidInput("split recipe has no vertices");
    }
    const auto& blocks = recipe.blocks();
    const std::size_t nb = blocks.size();

    std::vector<const EdgeColoring*> nested(nb, nullptr);
    for (const auto& o : recipe.overrides()) {
        if (o.coloring.colors() > k) {
            throw InvalidInput("override on block " + std::to_string(o.block) + " uses " +
                               std::to_string(o.coloring.colors()) + " colors, recipe has " + std::to_string(k));
        }
        nested[o.block] = &o.coloring;
    }
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = i; j < nb; ++j) {
            if (i == j && nested[i] != nullptr) {
                continue;
            }
            auto c = recipe.entry(i, j);
            if (!c) {
                throw InvalidInput("split matrix has no entry for block pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
            }
            if (*c > k) {
                throw InvalidInput("split color " + std::to_string(*c) + " exceeds k=" + std::to_string(k));
            }
        }
    }

    std::vector<std::size_t> block_of(n);
    std::vector<Vertex> start(nb);
    Vertex at = 0;
    for (std::size_t i = 0; i < nb; ++i) {
        start[i] = at;
        for (int t = 0; t < blocks[i]; ++t) {
            block_of[at++] = i;
        }
    }

    Host host = Host::complete(n);
    std::vector<Color> colors;
    colors.reserve(host.edge_count());
    for (const Edge& e : host.edges()) {
        const std::size_t bu = block_of[e.u];
        const std::size_t bv = block_of[e.v];
        if (bu == bv && nested[bu] != nullptr) {
            colors.push_back(nested[bu]->color_of(e.u - start[bu], e.v - start[bu]));
        } else {
            colors.push_back(*recipe.entry(bu, bv));
        }
    }
    return EdgeColoring(std::move(host), k, std::move(colors));
}

} // namespace ramsey
