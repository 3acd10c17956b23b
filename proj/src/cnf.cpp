#include "ramsey/cnf.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

namespace ramsey {

namespace {

std::string num(long long x) { return std::to_string(x); }

/// Every injective map of the pattern into the host graph, reported as the
/// sorted list of host edge indices it uses.
class EmbeddingEnumerator {
public:
    EmbeddingEnumerator(const Host& host, const SimpleGraph& pattern, std::size_t& budget,
                        std::set<std::vector<int>>& out)
        : host_(host), g_(host.graph()), pattern_(pattern), budget_(budget), out_(out),
          image_(pattern.order(), -1), taken_(host.order(), false)
    {
        pattern_edges_ = pattern.edges();
    }

    void run() { extend(0); }

private:
    void extend(int p)
    {
        if (p == pattern_.order()) {
            if (budget_ == 0) {
                throw BudgetExceeded("CNF embedding budget exhausted");
            }
            --budget_;
            std::vector<int> edges;
            for (const Edge& e : pattern_edges_) {
                edges.push_back(static_cast<int>(*host_.edge_index(image_[e.u], image_[e.v])));
            }
            std::sort(edges.begin(), edges.end());
            out_.insert(std::move(edges));
            return;
        }
        for (Vertex x = 0; x < g_.order(); ++x) {
            if (taken_[x]) {
                continue;
            }
            bool fits = true;
            for (Vertex q = 0; q < p && fits; ++q) {
                if (pattern_.has_edge(p, q) && !g_.has_edge(x, image_[q])) {
                    fits = false;
                }
            }
            if (!fits) {
                continue;
            }
            image_[p] = x;
            taken_[x] = true;
            extend(p + 1);
            taken_[x] = false;
        }
        image_[p] = -1;
    }

    const Host& host_;
    SimpleGraph g_;
    const SimpleGraph& pattern_;
    std::vector<Edge> pattern_edges_;
    std::size_t& budget_;
    std::set<std::vector<int>>& out_;
    std::vector<Vertex> image_;
    std::vector<bool> taken_;
};

} // namespace

CnfInstance to_cnf(const ArrowQuery& q, std::size_t max_embeddings)
{
    if (q.targets.empty()) {
        throw InvalidInput("CNF query needs at least one target");
    }
    CnfInstance inst;
    inst.host = q.host;
    inst.k = static_cast<int>(q.targets.size());
    inst.targets = q.targets;
    const std::size_t m = q.host.edge_count();
    inst.variables = static_cast<int>(m) * inst.k;
    for (std::size_t e = 0; e < m; ++e) {
        std::vector<int> alo;
        for (Color c = 1; c <= inst.k; ++c) {
            alo.push_back(inst.var(e, c));
        }
        inst.clauses.push_back(alo);
        for (Color c = 1; c <= inst.k; ++c) {
            for (Color d = c + 1; d <= inst.k; ++d) {
                inst.clauses.push_back({-inst.var(e, c), -inst.var(e, d)});
            }
        }
    }
    std::size_t budget = max_embeddings;
    for (Color c = 1; c <= inst.k; ++c) {
        const TargetGraph& t = q.targets[c - 1];
        if (t.vertex_count() > q.host.order()) {
            continue;
        }
        std::set<std::vector<int>> sets;
        const SimpleGraph pattern = t.pattern();
        EmbeddingEnumerator(q.host, pattern, budget, sets).run();
        for (const auto& edges : sets) {
            std::vector<int> clause;
            for (int e : edges) {
                clause.push_back(-inst.var(static_cast<std::size_t>(e), c));
            }
            inst.clauses.push_back(std::move(clause));
        }
    }
    return inst;
}

std::string to_dimacs(const CnfInstance& inst)
{
    std::ostringstream out;
    out << "c host " << inst.host.name() << "\n";
    out << "c k " << inst.k << "\n";
    if (!inst.targets.empty()) {
        out << "c targets " << to_string(inst.targets) << "\n";
    }
    for (std::size_t e = 0; e < inst.host.edge_count(); ++e) {
        const Edge& edge = inst.host.edges()[e];
        for (Color c = 1; c <= inst.k; ++c) {
            out << "c var " << inst.var(e, c) << " edge " << edge.u << " " << edge.v << " color " << c << "\n";
        }
    }
    out << "p cnf " << inst.variables << " " << inst.clauses.size() << "\n";
    for (const auto& clause : inst.clauses) {
        for (int lit : clause) {
            out << lit << " ";
        }
        out << "0\n";
    }
    return out.str();
}

CnfInstance parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Host> host;
    std::optional<int> k;
    std::vector<TargetGraph> targets;
    std::optional<std::pair<long long, long long>> header;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    int line_no = 0;
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("line " + num(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) {
            continue;
        }
        if (word == "c") {
            std::string key;
            ls >> key;
            if (key == "host") {
                std::string token;
                ls >> token;
                host = parse_host(token);
            } else if (key == "k") {
                int v = 0;
                if (!(ls >> v) || v < 1) {
                    throw fail("bad color count");
                }
                k = v;
            } else if (key == "targets") {
                std::string token;
                ls >> token;
                targets = parse_target_list(token);
            }
            continue;
        }
        if (word == "p") {
            std::string fmt;
            long long v = 0;
            long long c = 0;
            if (!(ls >> fmt >> v >> c) || fmt != "cnf") {
                throw fail("expected 'p cnf V C'");
            }
            header = {v, c};
            continue;
        }
        if (!header) {
            throw fail("clause before the 'p cnf' header");
        }
        std::istringstream cs(line);
        long long lit = 0;
        while (cs >> lit) {
            if (lit == 0) {
                clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (std::llabs(lit) > header->first) {
                    throw fail("literal " + num(lit) + " exceeds variable count " + num(header->first));
                }
                current.push_back(static_cast<int>(lit));
            }
        }
        if (!cs.eof()) {
            throw fail("expected integers");
        }
    }
    if (!current.empty()) {
        throw fail("last clause is not terminated by 0");
    }
    if (!header) {
        throw ParseError("missing 'p cnf' header");
    }
    if (!host || !k) {
        throw ParseError("missing 'c host' or 'c k' comment; cannot map variables to edges");
    }
    if (static_cast<long long>(clauses.size()) != header->second) {
        throw ParseError("header declares " + num(header->second) + " clauses, found " + num(clauses.size()));
    }
    CnfInstance inst;
    inst.host = *host;
    inst.k = *k;
    if (!targets.empty() && static_cast<int>(targets.size()) != *k) {
        throw ParseError("'c targets' lists " + num(targets.size()) + " targets for k=" + num(*k));
    }
    inst.targets = std::move(targets);
    inst.variables = static_cast<int>(header->first);
    if (inst.variables != static_cast<int>(host->edge_count()) * *k) {
        throw ParseError("variable count " + num(inst.variables) + " does not match " + host->name() + " with k=" +
                         num(*k));
    }
    inst.clauses = std::move(clauses);
    return inst;
}

std::vector<int> parse_model(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<int> lits;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word == "c" || word == "s") {
            continue;
        }
        if (word != "v") {
            ls.clear();
            ls.str(line);
        }
        std::string tok;
        while (ls >> tok) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ParseError("line " + num(line_no) + ": bad literal '" + tok + "'");
            }
            if (v == 0) {
                return lits;
            }
            lits.push_back(v);
        }
    }
    return lits;
}

std::vector<bool> model_assignment(const CnfInstance& inst, const std::vector<int>& literals)
{
    std::vector<bool> a(static_cast<std::size_t>(inst.variables) + 1, false);
    for (int lit : literals) {
        if (std::abs(lit) > inst.variables) {
            throw InvalidInput("model literal " + num(lit) + " exceeds variable count " + num(inst.variables));
        }
        if (lit > 0) {
            a[lit] = true;
        }
    }
    return a;
}

bool satisfies(const CnfInstance& inst, const std::vector<bool>& assignment)
{
    for (const auto& clause : inst.clauses) {
        bool sat = false;
        for (int lit : clause) {
            if (assignment[std::abs(lit)] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) {
            return false;
        }
    }
    return true;
}

EdgeColoring decode_model(const CnfInstance& inst, const std::vector<bool>& assignment)
{
    if (assignment.size() != static_cast<std::size_t>(inst.variables) + 1) {
        throw InvalidInput("assignment size does not match the instance");
    }
    std::vector<Color> colors;
    for (std::size_t e = 0; e < inst.host.edge_count(); ++e) {
        Color chosen = 0;
        for (Color c = 1; c <= inst.k; ++c) {
            if (assignment[inst.var(e, c)]) {
                if (chosen != 0) {
                    throw InvalidInput("edge " + num(e) + " has colors " + num(chosen) + " and " + num(c));
                }
                chosen = c;
            }
        }
        if (chosen == 0) {
            throw InvalidInput("edge " + num(e) + " has no color");
        }
        colors.push_back(chosen);
    }
    return EdgeColoring(inst.host, inst.k, std::move(colors));
}

EdgeColoring decode_model(const CnfInstance& inst, const std::vector<int>& literals)
{
    return decode_model(inst, model_assignment(inst, literals));
}

std::optional<std::vector<bool>> solve_small(const CnfInstance& inst)
{
    if (inst.variables > 24) {
        throw BudgetExceeded("model enumeration is limited to 24 variables, instance has " + num(inst.variables));
    }
    const int n = inst.variables;
    // Each clause is checked once its highest variable is assigned.
    std::vector<std::vector<const std::vector<int>*>> by_last(n + 1);
    for (const auto& clause : inst.clauses) {
        if (clause.empty()) {
            return std::nullopt;
        }
        int last = 0;
        for (int lit : clause) {
            last = std::max(last, std::abs(lit));
        }
        by_last[last].push_back(&clause);
    }
    std::vector<bool> a(n + 1, false);
    auto consistent = [&](int v) {
        for (const auto* clause : by_last[v]) {
            bool sat = false;
            for (int lit : *clause) {
                if (a[std::abs(lit)] == (lit > 0)) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                return false;
            }
        }
        return true;
    };
    auto go = [&](auto&& self, int v) -> bool {
        if (v > n) {
            return true;
        }
        for (bool val : {false, true}) {
            a[v] = val;
            if (consistent(v) && self(self, v + 1)) {
                return true;
            }
        }
        a[v] = false;
        return false;
    };
    if (go(go, 1)) {
        return a;
    }
    return std::nullopt;
}

} // namespace ramsey
