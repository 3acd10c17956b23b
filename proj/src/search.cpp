#include "ramsey/search.hpp"

#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <mutex>
#include <string>
#include <thread>

namespace ramsey {

namespace {

std::string num(long long x) { return std::to_string(x); }

/// Depth-first assignment of colors to host edges in canonical order.
class Dfs {
public:
    explicit Dfs(const ArrowQuery& q) : q_(q), k_(static_cast<int>(q.targets.size()))
    {
        const int n = q.host.order();
        graphs_.assign(k_, SimpleGraph(n));
        used_.assign(k_ + 1, 0);
        assignment_.assign(q.host.edge_count(), 0);
        // lower_twin_[c]: the nearest lower color with an identical target.
        lower_twin_.assign(k_ + 1, 0);
        for (int c = 1; c <= k_; ++c) {
            for (int d = c - 1; d >= 1; --d) {
                if (q.targets[d - 1] == q.targets[c - 1]) {
                    lower_twin_[c] = d;
                    break;
                }
            }
        }
    }

    /// Colors allowed at the current point: a color is skipped while an
    /// identical lower twin is still unused (those branches are images of
    /// earlier ones under swapping the two colors).
    bool allowed(Color c) const { return lower_twin_[c] == 0 || used_[lower_twin_[c]] > 0; }

    /// Tries to color edge i with c; false if that completes a target.
    bool push(std::size_t i, Color c)
    {
        const Edge& e = q_.host.edges()[i];
        SimpleGraph& g = graphs_[c - 1];
        g.add_edge(e.u, e.v);
        ++nodes_;
        if (contains_through_edge(g, q_.targets[c - 1], e.u, e.v)) {
            g.remove_edge(e.u, e.v);
            return false;
        }
        assignment_[i] = c;
        ++used_[c];
        return true;
    }

    void pop(std::size_t i)
    {
        const Edge& e = q_.host.edges()[i];
        const Color c = assignment_[i];
        graphs_[c - 1].remove_edge(e.u, e.v);
        --used_[c];
        assignment_[i] = 0;
    }

    bool run(std::size_t i, const std::atomic<bool>* stop = nullptr)
    {
        if (i == assignment_.size()) {
            return true;
        }
        if (stop != nullptr && stop->load(std::memory_order_relaxed)) {
            return false;
        }
        for (Color c = 1; c <= k_; ++c) {
            if (!allowed(c) || !push(i, c)) {
                continue;
            }
            if (run(i + 1, stop)) {
                return true;
            }
            pop(i);
        }
        return false;
    }

    /// Collects every viable assignment of the first `depth` edges, in
    /// lexicographic order.
    void prefixes(std::size_t i, std::size_t depth, std::vector<std::vector<Color>>& out)
    {
        if (i == depth) {
            out.emplace_back(assignment_.begin(), assignment_.begin() + static_cast<std::ptrdiff_t>(depth));
            return;
        }
        for (Color c = 1; c <= k_; ++c) {
            if (!allowed(c) || !push(i, c)) {
                continue;
            }
            prefixes(i + 1, depth, out);
            pop(i);
        }
    }

    EdgeColoring certificate() const { return EdgeColoring(q_.host, k_, assignment_); }
    std::uint64_t nodes() const { return nodes_; }

private:
    const ArrowQuery& q_;
    int k_;
    std::vector<SimpleGraph> graphs_;
    std::vector<int> used_;
    std::vector<Color> assignment_;
    std::vector<Color> lower_twin_;
    std::uint64_t nodes_ = 0;
};

ArrowResult run_parallel(const ArrowQuery& q, int jobs)
{
    ArrowResult result;
    Dfs root(q);
    const std::size_t depth = std::min<std::size_t>(q.host.edge_count(), 6);
    std::vector<std::vector<Color>> work;
    root.prefixes(0, depth, work);
    result.nodes = root.nodes();

    // Workers take prefixes in order; the smallest successful index wins,
    // which is the certificate a sequential run would return.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{work.size()};
    std::mutex mu;
    std::optional<EdgeColoring> found;
    std::atomic<std::uint64_t> nodes{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= work.size() || idx > best.load()) {
                return;
            }
            Dfs dfs(q);
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                ok = dfs.push(i, work[idx][i]);
            }
            if (ok && dfs.run(depth)) {
                std::lock_guard lock(mu);
                if (idx < best.load()) {
                    best = idx;
                    found = dfs.certificate();
                }
            }
            nodes += dfs.nodes();
        }
    };
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
        threads.emplace_back(worker);
    }
    for (auto& t : threads) {
        t.join();
    }
    result.arrows = !found.has_value();
    result.certificate = std::move(found);
    result.nodes += nodes.load();
    return result;
}

} // namespace

void check_query(const ArrowQuery& q, const SearchBudget& budget)
{
    if (q.targets.empty()) {
        throw InvalidInput("arrowing query needs at least one target");
    }
    if (q.host.kind() == HostKind::Complete) {
        if (q.host.order() > budget.max_complete) {
            throw BudgetExceeded("host " + q.host.name() + " exceeds the complete-host budget of " +
                                 num(budget.max_complete) + " vertices");
        }
    } else {
        for (const auto& t : q.targets) {
            if (!t.is_bipartite()) {
                throw InvalidInput("target " + t.to_string() + " cannot occur in a bipartite host");
            }
        }
        const int a = std::min(q.host.left(), q.host.right());
        const int b = std::max(q.host.left(), q.host.right());
        const int ba = std::min(budget.max_bipartite_a, budget.max_bipartite_b);
        const int bb = std::max(budget.max_bipartite_a, budget.max_bipartite_b);
        if (a > ba || b > bb) {
            throw BudgetExceeded("host " + q.host.name() + " exceeds the bipartite budget of K" + num(ba) + "," +
                                 num(bb));
        }
    }
}

ArrowResult arrows(const ArrowQuery& q, const SearchOptions& options)
{
    check_query(q, options.budget);
    if (options.jobs > 1 && q.host.edge_count() > 6) {
        return run_parallel(q, options.jobs);
    }
    Dfs dfs(q);
    ArrowResult result;
    result.arrows = !dfs.run(0);
    if (!result.arrows) {
        result.certificate = dfs.certificate();
    }
    result.nodes = dfs.nodes();
    return result;
}

Host parse_host(std::string_view token)
{
    std::string s;
    for (char ch : token) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        }
    }
    auto bad = [&]() -> ParseError { return ParseError("host '" + std::string(token) + "': expected Kn or Ka,b"); };
    if (s.size() < 2 || s[0] != 'K') {
        throw bad();
    }
    auto read = [&](std::size_t from, std::size_t to) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + from, s.data() + to, v);
        if (ec != std::errc() || ptr != s.data() + to || from == to) {
            throw bad();
        }
        return v;
    };
    const std::size_t sep = s.find_first_of(",X");
    try {
        if (sep == std::string::npos) {
            return Host::complete(read(1, s.size()));
        }
        return Host::complete_bipartite(read(1, sep), read(sep + 1, s.size()));
    } catch (const InvalidInput& e) {
        throw ParseError("host '" + std::string(token) + "': " + e.what());
    }
}

namespace {

template <class MakeHost>
SearchOutcome scan(const std::vector<TargetGraph>& targets, int lo, int hi, const SearchOptions& options,
                   MakeHost make_host)
{
    if (lo > hi) {
        throw InvalidInput("empty search range " + num(lo) + ":" + num(hi));
    }
    if (lo < 1) {
        throw InvalidInput("search range must start at 1 or above");
    }
    SearchOutcome out;
    for (int n = lo; n <= hi; ++n) {
        ArrowResult r = arrows({make_host(n), targets}, options);
        out.trace.emplace_back(n, r.arrows);
        if (!r.arrows) {
            out.certificate = std::move(r.certificate);
            continue;
        }
        out.upper = n;
        if (n > lo) {
            out.exact = true;
            out.value = n;
            out.lower = n;
        } else {
            out.lower = 1;
        }
        bool in_budget = n + 1 <= hi;
        if (in_budget) {
            try {
                check_query({make_host(n + 1), targets}, options.budget);
            } catch (const BudgetExceeded&) {
                in_budget = false;
            }
        }
        if (in_budget) {
            ArrowResult above = arrows({make_host(n + 1), targets}, options);
            out.trace.emplace_back(n + 1, above.arrows);
            if (!above.arrows) {
                throw VerificationFailed("arrowing is not monotone at " + num(n) + ": size " + num(n + 1) +
                                         " has an avoiding coloring");
            }
            out.monotone_checked = true;
        }
        return out;
    }
    out.lower = hi + 1;
    return out;
}

} // namespace

SearchOutcome ramsey_search(const std::vector<TargetGraph>& targets, int lo, int hi, const SearchOptions& options)
{
    return scan(targets, lo, hi, options, [](int n) { return Host::complete(n); });
}

SearchOutcome bipartite_search(const std::vector<TargetGraph>& targets, int lo, int hi, const SearchOptions& options)
{
    return scan(targets, lo, hi, options, [](int b) { return Host::complete_bipartite(b, b); });
}

} // namespace ramsey
