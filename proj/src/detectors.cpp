#include "ramsey/detectors.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace ramsey {

namespace {

using Row = std::vector<std::uint64_t>;

Row row_of(const SimpleGraph& g, Vertex v)
{
    auto r = g.row(v);
    return Row(r.begin(), r.end());
}

int popcount(const Row& r)
{
    int c = 0;
    for (auto w : r) {
        c += std::popcount(w);
    }
    return c;
}

void intersect(Row& r, std::span<const std::uint64_t> other)
{
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] &= other[i];
    }
}


std::vector<Vertex> members(const Row& r)
{
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < r.size(); ++w) {
        std::uint64_t bits = r[w];
        while (bits != 0) {
            out.push_back(static_cast<Vertex>(w * 64) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Twin classes. Vertices with equal closed neighbourhoods form cliques,
// vertices with equal open neighbourhoods form independent sets; within a
// class all vertices are interchangeable, so a path or cycle only needs to
// know how many vertices of each class it has used. Adjacency between two
// distinct classes is all-or-nothing.

struct TwinClasses {
    std::vector<std::vector<Vertex>> members;
    std::vector<char> is_clique;
    std::vector<char> adjacent;  // K x K, off-diagonal only
    int count() const { return static_cast<int>(members.size()); }
    bool adj(int a, int b) const { return adjacent[static_cast<std::size_t>(a) * members.size() + b] != 0; }
};

TwinClasses twin_classes(const SimpleGraph& g)
{
    const int n = g.order();
    std::map<Row, std::vector<Vertex>> closed;
    for (Vertex v = 0; v < n; ++v) {
        Row r = row_of(g, v);
        r[v >> 6] |= std::uint64_t{1} << (v & 63);
        closed[std::move(r)].push_back(v);
    }
    TwinClasses tc;
    std::map<Row, std::vector<Vertex>> open;
    for (auto& [key, group] : closed) {
        if (group.size() > 1) {
            tc.members.push_back(group);
            tc.is_clique.push_back(1);
        } else {
            open[row_of(g, group.front())].push_back(group.front());
        }
    }
    for (auto& [key, group] : open) {
        tc.members.push_back(group);
        tc.is_clique.push_back(0);
    }
    // Deterministic class order: by smallest member.
    std::vector<std::size_t> order(tc.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return tc.members[x].front() < tc.members[y].front(); });
    TwinClasses sorted;
    for (std::size_t i : order) {
        sorted.members.push_back(tc.members[i]);
        sorted.is_clique.push_back(tc.is_clique[i]);
    }
    const std::size_t k = sorted.members.size();
    sorted.adjacent.assign(k * k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (a != b) {
                sorted.adjacent[a * k + b] = g.has_edge(sorted.members[a].front(), sorted.members[b].front()) ? 1 : 0;
            }
        }
    }
    return sorted;
}

/// Depth-first search for a sequence of `length` distinct vertices, consecutive
/// ones adjacent, optionally closing into a cycle. States are (per-class usage
/// counts, last class); dead states are memoised.
class ClassWalk {
public:
    ClassWalk(const TwinClasses& tc, int length, bool closed) : tc_(tc), length_(length), closed_(closed) {}

    std::optional<std::vector<Vertex>> run()
    {
        const int k = tc_.count();
        for (int start = 0; start < k; ++start) {
            counts_.assign(k, 0);
            sequence_.clear();
            start_ = start;
            counts_[start] = 1;
            sequence_.push_back(start);
            if (extend(start)) {
                return realise();
            }
        }
        return std::nullopt;
    }

private:
    bool can_step(int from, int to) const
    {
        if (static_cast<std::size_t>(counts_[to]) >= tc_.members[to].size()) {
            return false;
        }
        return from == to ? tc_.is_clique[to] != 0 : tc_.adj(from, to);
    }

    bool closes(int last) const
    {
        return last == start_ ? tc_.is_clique[last] != 0 : tc_.adj(last, start_);
    }

    std::string key(int last) const
    {
        std::string s;
        s.reserve(counts_.size() * 2 + 8);
        for (int c : counts_) {
            s.push_back(static_cast<char>(c & 0xff));
            s.push_back(static_cast<char>((c >> 8) & 0xff));
        }
        s.append(reinterpret_cast<const char*>(&last), sizeof last);
        if (closed_) {
            s.append(reinterpret_cast<const char*>(&start_), sizeof start_);
        }
        return s;
    }

    bool extend(int last)
    {
        if (static_cast<int>(sequence_.size()) == length_) {
            return !closed_ || closes(last);
        }
        std::string k = key(last);
        if (dead_.contains(k)) {
            return false;
        }
        // Cycles are rotated to start in their smallest class.
        const int first = closed_ ? start_ : 0;
        for (int next = first; next < tc_.count(); ++next) {
            if (!can_step(last, next)) {
                continue;
            }
            ++counts_[next];
            sequence_.push_back(next);
            if (extend(next)) {
                return true;
            }
            sequence_.pop_back();
            --counts_[next];
        }
        dead_.insert(std::move(k));
        return false;
    }

    std::vector<Vertex> realise() const
    {
        std::vector<std::size_t> used(tc_.count(), 0);
        std::vector<Vertex> out;
        out.reserve(sequence_.size());
        for (int cls : sequence_) {
            out.push_back(tc_.members[cls][used[cls]++]);
        }
        return out;
    }

    const TwinClasses& tc_;
    int length_;
    bool closed_;
    int start_ = 0;
    std::vector<int> counts_;
    std::vector<int> sequence_;
    std::unordered_set<std::string> dead_;
};

int largest_component(const SimpleGraph& g)
{
    const int n = g.order();
    std::vector<char> seen(n, 0);
    int best = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        int size = 0;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        best = std::max(best, size);
    }
    return best;
}

std::optional<std::vector<Vertex>> class_walk(const SimpleGraph& g, int length, bool closed)
{
    if (length > g.order() || largest_component(g) < length) {
        return std::nullopt;
    }
    const TwinClasses tc = twin_classes(g);
    return ClassWalk(tc, length, closed).run();
}

// ---------------------------------------------------------------------------
// Biclique and multipartite: subset enumeration with running common
// neighbourhoods.

bool choose_side(const SimpleGraph& g, const std::vector<Vertex>& pool, std::size_t from, int need, int other,
                 Row& common, std::vector<Vertex>& chosen)
{
    if (need == 0) {
        return popcount(common) >= other;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        const Vertex v = pool[i];
        Row next = common;
        intersect(next, g.row(v));
        if (popcount(next) < other) {
            continue;
        }
        chosen.push_back(v);
        if (choose_side(g, pool, i + 1, need - 1, other, next, chosen)) {
            common = std::move(next);
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

class MultipartiteSearch {
public:
    MultipartiteSearch(const SimpleGraph& g, int parts, int r) : g_(g), parts_(parts), r_(r) {}

    std::optional<std::vector<Vertex>> run()
    {
        Row all(g_.words(), 0);
        for (Vertex v = 0; v < g_.order(); ++v) {
            all[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
        if (place_part(0, all, -1)) {
            return chosen_;
        }
        return std::nullopt;
    }

private:
    // Parts are ordered by their smallest vertex.
    bool place_part(int part, const Row& candidates, Vertex previous_min)
    {
        if (part == parts_) {
            return true;
        }
        std::vector<Vertex> pool;
        for (Vertex v : members(candidates)) {
            if (v > previous_min) {
                pool.push_back(v);
            }
        }
        const int remaining_after = (parts_ - part - 1) * r_;
        return fill_part(part, candidates, pool, 0, r_, candidates, -1, remaining_after);
    }

    bool fill_part(int part, const Row& candidates, const std::vector<Vertex>& pool, std::size_t from, int need,
                   const Row& common, Vertex first, int remaining_after)
    {
        if (need == 0) {
            return place_part(part + 1, common, first);
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            const Vertex v = pool[i];
            Row next = common;
            intersect(next, g_.row(v));
            if (popcount(next) < remaining_after) {
                continue;
            }
            chosen_.push_back(v);
            if (fill_part(part, candidates, pool, i + 1, need - 1, next, first < 0 ? v : first, remaining_after)) {
                return true;
            }
            chosen_.pop_back();
        }
        return false;
    }

    const SimpleGraph& g_;
    int parts_;
    int r_;
    std::vector<Vertex> chosen_;
};

// ---------------------------------------------------------------------------
// Edge-anchored checks on graphs with at most 64 vertices.

using Mask = std::uint64_t;

struct SmallGraph {
    std::vector<Mask> adj;
};

SmallGraph small_graph(const SimpleGraph& g)
{
    if (g.order() > 64) {
        throw InvalidInput("edge-anchored detection supports at most 64 vertices");
    }
    SmallGraph s;
    s.adj.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        s.adj[v] = g.order() == 0 ? 0 : g.row(v)[0];
    }
    return s;
}

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

/// A path starting at v, v already in `used`, with `more` further vertices.
bool extend_path(const SmallGraph& g, Vertex v, Mask used, int more)
{
    if (more == 0) {
        return true;
    }
    Mask next = g.adj[v] & ~used;
    while (next != 0) {
        const Vertex w = std::countr_zero(next);
        next &= next - 1;
        if (extend_path(g, w, used | bit(w), more - 1)) {
            return true;
        }
    }
    return false;
}

/// Grow the u-side of a path through {u,v}; the v-side takes what is left.
bool path_through(const SmallGraph& g, Vertex cur, Vertex v, Mask used, int u_side, int order)
{
    if (extend_path(g, v, used, order - u_side - 1)) {
        return true;
    }
    if (u_side + 1 >= order) {
        return false;
    }
    Mask next = g.adj[cur] & ~used;
    while (next != 0) {
        const Vertex w = std::countr_zero(next);
        next &= next - 1;
        if (path_through(g, w, v, used | bit(w), u_side + 1, order)) {
            return true;
        }
    }
    return false;
}

/// A v..u path on `order` vertices that does not use the edge {u,v} itself.
bool cycle_through(const SmallGraph& g, Vertex cur, Vertex u, Mask used, int have, int order)
{
    if (have == order - 1) {
        return (g.adj[cur] & bit(u)) != 0 && have >= 2;
    }
    Mask next = g.adj[cur] & ~used;
    while (next != 0) {
        const Vertex w = std::countr_zero(next);
        next &= next - 1;
        if (cycle_through(g, w, u, used | bit(w), have + 1, order)) {
            return true;
        }
    }
    return false;
}

/// K_{a,b} with u on the a-side and v on the b-side.
bool biclique_through(const SmallGraph& g, Vertex u, Vertex v, int a, int b)
{
    // Remaining a-side vertices come from N(v) \ {u}; the common neighbourhood
    // of the a-side must hold v plus b-1 more.
    std::vector<Vertex> pool;
    Mask cand = g.adj[v] & ~bit(u);
    while (cand != 0) {
        pool.push_back(std::countr_zero(cand));
        cand &= cand - 1;
    }
    auto rec = [&](auto&& self, std::size_t from, int need, Mask common) -> bool {
        if (std::popcount(common) < b) {
            return false;
        }
        if (need == 0) {
            return true;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (self(self, i + 1, need - 1, common & g.adj[pool[i]])) {
                return true;
            }
        }
        return false;
    };
    return rec(rec, 0, a - 1, g.adj[u]);
}

/// Complete multipartite K^{parts}_r with u and v in different parts.
bool multipartite_through(const SmallGraph& g, Vertex u, Vertex v, int parts, int r)
{
    const int n = static_cast<int>(g.adj.size());
    const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    // Parts are filled one at a time; u opens part 0 and v opens part 1.
    // Members of a part only need to see every vertex of the other parts,
    // tracked as `common` (completed parts) and `pending` (current part).
    auto rec = [&](auto&& self, int p, int filled, Mask common, Mask pending, Mask used, Vertex last) -> bool {
        if (filled == r) {
            common &= pending;
            if (p + 1 == parts) {
                return true;
            }
            if (p == 0) {
                if ((common & bit(v)) == 0) {
                    return false;
                }
                return self(self, 1, 1, common, g.adj[v], used, -1);
            }
            return self(self, p + 1, 0, common, all, used, -1);
        }
        // Members are taken in increasing order after the anchor.
        const Mask above = last < 0 ? all : (last >= 63 ? 0 : ~((Mask{1} << (last + 1)) - 1));
        Mask cand = common & ~used & above;
        while (cand != 0) {
            const Vertex w = std::countr_zero(cand);
            cand &= cand - 1;
            if (self(self, p, filled + 1, common, pending & g.adj[w], used | bit(w), w)) {
                return true;
            }
        }
        return false;
    };
    return rec(rec, 0, 1, all, g.adj[u], bit(u) | bit(v), -1);
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

bool has_path(const SimpleGraph& g, int order) { return find_path(g, order).has_value(); }

std::optional<std::vector<Vertex>> find_path(const SimpleGraph& g, int order)
{
    if (order < 2) {
        throw InvalidInput("path order must be at least 2");
    }
    return class_walk(g, order, false);
}

bool has_cycle(const SimpleGraph& g, int order) { return find_cycle(g, order).has_value(); }

std::optional<std::vector<Vertex>> find_cycle(const SimpleGraph& g, int order)
{
    if (order < 3) {
        throw InvalidInput("cycle order must be at least 3");
    }
    return class_walk(g, order, true);
}

std::vector<Edge> maximum_matching(const SimpleGraph& g)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const int n = g.order();
    BoostGraph bg(n);
    for (const Edge& e : g.edges()) {
        boost::add_edge(e.u, e.v, bg);
    }
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(n);
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    std::vector<Edge> out;
    const auto none = boost::graph_traits<BoostGraph>::null_vertex();
    for (int v = 0; v < n; ++v) {
        if (mate[v] != none && static_cast<int>(mate[v]) > v) {
            out.push_back({v, static_cast<Vertex>(mate[v])});
        }
    }
    return out;
}

int max_matching(const SimpleGraph& g) { return static_cast<int>(maximum_matching(g).size()); }

int max_degree(const SimpleGraph& g) { return g.max_degree(); }

std::optional<std::vector<Vertex>> find_biclique(const SimpleGraph& g, int a, int b)
{
    if (a < 1 || b < 1) {
        throw InvalidInput("biclique sides must be at least 1");
    }
    // Enumerate the smaller side; the larger comes from the common neighbourhood.
    const bool swapped = a > b;
    const int small = swapped ? b : a;
    const int large = swapped ? a : b;
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= large) {
            pool.push_back(v);
        }
    }
    Row common(g.words(), ~std::uint64_t{0});
    std::vector<Vertex> side;
    if (!choose_side(g, pool, 0, small, large, common, side)) {
        return std::nullopt;
    }
    std::vector<Vertex> other = members(common);
    other.resize(large);
    std::vector<Vertex> out;
    if (swapped) {
        out = other;
        out.insert(out.end(), side.begin(), side.end());
    } else {
        out = side;
        out.insert(out.end(), other.begin(), other.end());
    }
    return out;
}

bool has_biclique(const SimpleGraph& g, int a, int b) { return find_biclique(g, a, b).has_value(); }

std::optional<std::vector<Vertex>> find_multipartite(const SimpleGraph& g, int parts, int part_size)
{
    if (parts < 2 || part_size < 1) {
        throw InvalidInput("multipartite target needs parts >= 2 and part size >= 1");
    }
    if (parts * part_size > g.order()) {
        return std::nullopt;
    }
    return MultipartiteSearch(g, parts, part_size).run();
}

bool has_multipartite(const SimpleGraph& g, int parts, int part_size)
{
    return find_multipartite(g, parts, part_size).has_value();
}

std::optional<std::vector<Vertex>> find_embedding(const SimpleGraph& g, const TargetGraph& target)
{
    return std::visit(
        overloaded{
            [&](const PathShape& s) { return find_path(g, s.order); },
            [&](const CycleShape& s) { return find_cycle(g, s.order); },
            [&](const MatchingShape& s) -> std::optional<std::vector<Vertex>> {
                const auto m = maximum_matching(g);
                if (static_cast<int>(m.size()) < s.size) {
                    return std::nullopt;
                }
                std::vector<Vertex> out;
                for (int i = 0; i < s.size; ++i) {
                    out.push_back(m[i].u);
                    out.push_back(m[i].v);
                }
                return out;
            },
            [&](const StarShape& s) -> std::optional<std::vector<Vertex>> {
                for (Vertex v = 0; v < g.order(); ++v) {
                    if (g.degree(v) >= s.leaves) {
                        std::vector<Vertex> out{v};
                        auto nb = g.neighbors(v);
                        out.insert(out.end(), nb.begin(), nb.begin() + s.leaves);
                        return out;
                    }
                }
                return std::nullopt;
            },
            [&](const BicliqueShape& s) { return find_biclique(g, s.a, s.b); },
            [&](const MultipartiteShape& s) { return find_multipartite(g, s.parts, s.part_size); },
        },
        target.shape());
}

bool contains(const SimpleGraph& g, const TargetGraph& target)
{
    if (const auto* m = std::get_if<MatchingShape>(&target.shape())) {
        return max_matching(g) >= m->size;
    }
    if (const auto* s = std::get_if<StarShape>(&target.shape())) {
        return g.max_degree() >= s->leaves;
    }
    return find_embedding(g, target).has_value();
}

bool contains_through_edge(const SimpleGraph& g, const TargetGraph& target, Vertex u, Vertex v)
{
    if (!g.has_edge(u, v)) {
        throw InvalidInput("anchor edge is not in the graph");
    }
    return std::visit(overloaded{
                          [&](const PathShape& s) {
                              const SmallGraph sg = small_graph(g);
                              return path_through(sg, u, v, bit(u) | bit(v), 1, s.order);
                          },
                          [&](const CycleShape& s) {
                              const SmallGraph sg = small_graph(g);
                              return cycle_through(sg, v, u, bit(u) | bit(v), 1, s.order);
                          },
                          [&](const MatchingShape& s) {
                              SimpleGraph rest = g;
                              for (Vertex w : g.neighbors(u)) {
                                  rest.remove_edge(u, w);
                              }
                              for (Vertex w : g.neighbors(v)) {
                                  if (w != u) {
                                      rest.remove_edge(v, w);
                                  }
                              }
                              return max_matching(rest) >= s.size - 1;
                          },
                          [&](const StarShape& s) { return g.degree(u) >= s.leaves || g.degree(v) >= s.leaves; },
                          [&](const BicliqueShape& s) {
                              const SmallGraph sg = small_graph(g);
                              return biclique_through(sg, u, v, s.a, s.b) || biclique_through(sg, v, u, s.a, s.b);
                          },
                          [&](const MultipartiteShape& s) {
                              if (s.parts * s.part_size > g.order()) {
                                  return false;
                              }
                              return multipartite_through(small_graph(g), u, v, s.parts, s.part_size);
                          },
                      },
                      target.shape());
}

std::optional<Violation> violates(const EdgeColoring& coloring, std::span<const TargetGraph> targets)
{
    if (targets.size() != static_cast<std::size_t>(coloring.colors())) {
        throw InvalidInput("coloring has " + std::to_string(coloring.colors()) + " colors but " +
                           std::to_string(targets.size()) + " targets were given");
    }
    for (Color c = 1; c <= coloring.colors(); ++c) {
        const TargetGraph& target = targets[c - 1];
        const SimpleGraph g = mono_class(coloring, c);
        if (auto embedding = find_embedding(g, target)) {
            return Violation{c, target, std::move(*embedding)};
        }
    }
    return std::nullopt;
}

bool violation_is_genuine(const EdgeColoring& coloring, const Violation& violation)
{
    std::vector<Vertex> sorted = violation.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (const Edge& e : pattern_edges(violation.target, violation.vertices)) {
        auto idx = coloring.host().edge_index(e.u, e.v);
        if (!idx || coloring.color_at(*idx) != violation.color) {
            return false;
        }
    }
    return true;
}

} // namespace ramsey
