#include "ramsey/target.hpp"

#include "ramsey/error.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace ramsey {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw InvalidInput(what);
    }
}

int parse_positive(std::string_view digits, std::string_view token)
{
    int value = 0;
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("target '" + std::string(token) + "': expected a number, found '" + std::string(digits) + "'");
    }
    return value;
}

std::pair<int, int> parse_pair(std::string_view body, std::string_view token)
{
    const auto x = body.find_first_of("xX");
    if (x == std::string_view::npos) {
        throw ParseError("target '" + std::string(token) + "': expected <a>x<b>");
    }
    return {parse_positive(body.substr(0, x), token), parse_positive(body.substr(x + 1), token)};
}

} // namespace

TargetGraph TargetGraph::path(int order)
{
    require(order >= 2, "path order must be at least 2");
    return TargetGraph(PathShape{order});
}

TargetGraph TargetGraph::cycle(int order)
{
    require(order >= 3, "cycle order must be at least 3");
    return TargetGraph(CycleShape{order});
}

TargetGraph TargetGraph::matching(int size)
{
    require(size >= 1, "matching size must be at least 1");
    return TargetGraph(MatchingShape{size});
}

TargetGraph TargetGraph::star(int leaves)
{
    require(leaves >= 1, "star needs at least one leaf");
    return TargetGraph(StarShape{leaves});
}

TargetGraph TargetGraph::biclique(int a, int b)
{
    require(a >= 1 && b >= 1, "biclique sides must be at least 1");
    return TargetGraph(BicliqueShape{a, b});
}

TargetGraph TargetGraph::multipartite(int parts, int part_size)
{
    require(parts >= 2, "multipartite target needs at least 2 parts");
    require(part_size >= 1, "multipartite part size must be at least 1");
    return TargetGraph(MultipartiteShape{parts, part_size});
}

int TargetGraph::vertex_count() const
{
    return std::visit(overloaded{
                          [](const PathShape& s) { return s.order; },
                          [](const CycleShape& s) { return s.order; },
                          [](const MatchingShape& s) { return 2 * s.size; },
                          [](const StarShape& s) { return s.leaves + 1; },
                          [](const BicliqueShape& s) { return s.a + s.b; },
                          [](const MultipartiteShape& s) { return s.parts * s.part_size; },
                      },
                      shape_);
}

std::size_t TargetGraph::edge_count() const
{
    return std::visit(overloaded{
                          [](const PathShape& s) -> std::size_t { return s.order - 1; },
                          [](const CycleShape& s) -> std::size_t { return s.order; },
                          [](const MatchingShape& s) -> std::size_t { return s.size; },
                          [](const StarShape& s) -> std::size_t { return s.leaves; },
                          [](const BicliqueShape& s) -> std::size_t { return std::size_t(s.a) * s.b; },
                          [](const MultipartiteShape& s) -> std::size_t {
                              const std::size_t p = s.parts;
                              const std::size_t r = s.part_size;
                              return p * (p - 1) / 2 * r * r;
                          },
                      },
                      shape_);
}

bool TargetGraph::is_bipartite() const
{
    if (const auto* c = std::get_if<CycleShape>(&shape_)) {
        return c->order % 2 == 0;
    }
    if (const auto* m = std::get_if<MultipartiteShape>(&shape_)) {
        return m->parts == 2;
    }
    return true;
}

SimpleGraph TargetGraph::pattern() const
{
    std::vector<Vertex> identity(vertex_count());
    for (int i = 0; i < vertex_count(); ++i) {
        identity[i] = i;
    }
    const auto edges = pattern_edges(*this, identity);
    return SimpleGraph::from_edges(vertex_count(), edges);
}

std::string TargetGraph::to_string() const
{
    return std::visit(overloaded{
                          [](const PathShape& s) { return "P" + std::to_string(s.order); },
                          [](const CycleShape& s) { return "C" + std::to_string(s.order); },
                          [](const MatchingShape& s) {
                              return s.size == 1 ? std::string("K2") : std::to_string(s.size) + "K2";
                          },
                          [](const StarShape& s) { return "S" + std::to_string(s.leaves); },
                          [](const BicliqueShape& s) { return "B" + std::to_string(s.a) + "x" + std::to_string(s.b); },
                          [](const MultipartiteShape& s) {
                              return "M" + std::to_string(s.parts) + "x" + std::to_string(s.part_size);
                          },
                      },
                      shape_);
}

TargetGraph parse_target(std::string_view token)
{
    std::string t;
    for (char ch : token) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
        }
    }
    if (t.empty()) {
        throw ParseError("empty target token");
    }
    try {
        if (t.size() >= 2 && t.ends_with("K2")) {
            const std::string_view count = std::string_view(t).substr(0, t.size() - 2);
            return TargetGraph::matching(count.empty() ? 1 : parse_positive(count, token));
        }
        const std::string_view body = std::string_view(t).substr(1);
        switch (t[0]) {
        case 'P':
            return TargetGraph::path(parse_positive(body, token));
        case 'C':
            return TargetGraph::cycle(parse_positive(body, token));
        case 'S':
            return TargetGraph::star(parse_positive(body, token));
        case 'B': {
            auto [a, b] = parse_pair(body, token);
            return TargetGraph::biclique(a, b);
        }
        case 'M': {
            auto [p, r] = parse_pair(body, token);
            return TargetGraph::multipartite(p, r);
        }
        default:
            break;
        }
    } catch (const InvalidInput& e) {
        throw ParseError("target '" + std::string(token) + "': " + e.what());
    }
    throw ParseError("target '" + std::string(token) + "': expected P<n>, C<n>, <t>K2, S<k>, B<a>x<b> or M<p>x<r>");
}

std::vector<TargetGraph> parse_target_list(std::string_view text)
{
    std::vector<TargetGraph> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto stop = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_target(text.substr(start, stop - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string to_string(const std::vector<TargetGraph>& targets)
{
    std::string out;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += targets[i].to_string();
    }
    return out;
}

std::vector<Edge> pattern_edges(const TargetGraph& target, std::span<const Vertex> vertices)
{
    if (vertices.size() != static_cast<std::size_t>(target.vertex_count())) {
        throw InvalidInput("embedding of " + target.to_string() + " needs " + std::to_string(target.vertex_count()) +
                           " vertices, got " + std::to_string(vertices.size()));
    }
    std::vector<Edge> out;
    auto add = [&](int i, int j) {
        const Vertex u = vertices[i];
        const Vertex v = vertices[j];
        out.push_back(u < v ? Edge{u, v} : Edge{v, u});
    };
    std::visit(overloaded{
                   [&](const PathShape& s) {
                       for (int i = 0; i + 1 < s.order; ++i) {
                           add(i, i + 1);
                       }
                   },
                   [&](const CycleShape& s) {
                       for (int i = 0; i < s.order; ++i) {
                           add(i, (i + 1) % s.order);
                       }
                   },
                   [&](const MatchingShape& s) {
                       for (int i = 0; i < s.size; ++i) {
                           add(2 * i, 2 * i + 1);
                       }
                   },
                   [&](const StarShape& s) {
                       for (int i = 1; i <= s.leaves; ++i) {
                           add(0, i);
                       }
                   },
                   [&](const BicliqueShape& s) {
                       for (int i = 0; i < s.a; ++i) {
                           for (int j = 0; j < s.b; ++j) {
                               add(i, s.a + j);
                           }
                       }
                   },
                   [&](const MultipartiteShape& s) {
                       const int n = s.parts * s.part_size;
                       for (int i = 0; i < n; ++i) {
                           for (int j = i + 1; j < n; ++j) {
                               if (i / s.part_size != j / s.part_size) {
                                   add(i, j);
                               }
                           }
                       }
                   },
               },
               target.shape());
    return out;
}

} // namespace ramsey
