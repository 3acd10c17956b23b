#pragma once

// Parameter grids for the witness sweep. Points whose formula
// preconditions fail are dropped by the generator.

#include "ramsey/constructions.hpp"
#include "ramsey/formulas.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grids {

using namespace ramsey;

struct Point {
    std::string id;
    FormulaParams params;
    std::optional<EdgeColoring> inner;
};

inline FormulaParams ints(std::initializer_list<std::pair<const char*, long long>> kv)
{
    FormulaParams out;
    for (const auto& [k, v] : kv) {
        out.set(k, v);
    }
    return out;
}

inline bool passes(const std::string& id, const FormulaParams& p)
{
    const std::string formula = id == "thm_c2m_c4" ? (p.get("t") >= p.get("m").value() + 1 ? "thm_c2m_c4_1" : "thm_c2m_c4_2")
                                                   : id;
    return eval_formula(formula, p).ok();
}

/// Sorted (non-increasing) lists with entries in [lo, hi] and length <= len.
inline std::vector<std::vector<long long>> lists(long long lo, long long hi, int len)
{
    std::vector<std::vector<long long>> out{{}};
    std::vector<std::vector<long long>> frontier{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<std::vector<long long>> next;
        for (const auto& base : frontier) {
            const long long top = base.empty() ? hi : base.back();
            for (long long x = lo; x <= top; ++x) {
                auto grown = base;
                grown.push_back(x);
                next.push_back(grown);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

inline EdgeColoring monochrome(int n)
{
    const Host h = Host::complete(n);
    return EdgeColoring(h, 1, std::vector<Color>(h.edge_count(), 1));
}

inline std::vector<Point> witness_grid()
{
    std::vector<Point> out;
    auto add = [&](const std::string& id, FormulaParams p, std::optional<EdgeColoring> inner = {}) {
        if (passes(id, p)) {
            out.push_back({id, std::move(p), std::move(inner)});
        }
    };
    for (const char* id : {"thm_q", "cor_q_path"}) {
        for (long long n0 = 8; n0 <= 16; n0 += 2) {
            for (long long n1 = 2; n1 <= 8; ++n1) {
                for (long long n2 = 2; n2 <= 8; ++n2) {
                    add(id, ints({{"n0", n0}, {"n1", n1}, {"n2", n2}}));
                }
            }
        }
    }
    for (const char* id : {"thm_h1", "thm_h1_path"}) {
        for (long long n = 6; n <= 12; ++n) {
            for (long long k = 2; k <= 3; ++k) {
                add(id, ints({{"n", n}, {"k", k}}));
            }
        }
    }
    for (const char* id : {"thm_Far", "cor_s"}) {
        for (long long n = 8; n <= 12; ++n) {
            for (const auto& ml : lists(1, 5, 2)) {
                if (ml.empty() || lambda_of(ml) > 4) {
                    continue;
                }
                for (const auto& kl : lists(2, 3, 2)) {
                    FormulaParams p = ints({{"n", n}});
                    p.m_list = ml;
                    p.k_list = kl;
                    add(id, std::move(p));
                }
            }
        }
    }
    for (long long k : {4, 6, 8}) {
        add("thm_p_i", ints({{"k", k}}));
    }
    for (long long s = 1; s <= 3; ++s) {
        for (long long m = 2; m <= 7; ++m) {
            for (long long t = m + s - 1; t <= m + s; ++t) {
                add("thm_p_ii", ints({{"s", s}, {"m", m}, {"t", t}}));
            }
        }
    }
    for (long long m = 4; m <= 10; m += 2) {
        for (long long t = 2; t <= m / 2; ++t) {
            for (const auto& kl : lists(2, 3, 2)) {
                FormulaParams p = ints({{"t", t}, {"m", m}});
                p.k_list = kl;
                add("thm_stripe_star", std::move(p));
            }
        }
    }
    for (long long n = 2; n <= 6; ++n) {
        for (long long t = 1; t <= n; ++t) {
            add("thm_p3c2n", ints({{"t", t}, {"n", n}}));
        }
    }
    for (long long m = 4; m <= 5; ++m) {
        for (long long t = 1; t <= m + 3; ++t) {
            add("thm_c2m_c4", ints({{"m", m}, {"t", t}}));
        }
    }
    for (long long t = 2; t <= 5; ++t) {
        for (const auto& g : {TargetGraph::path(static_cast<int>(2 * t)), TargetGraph::cycle(static_cast<int>(2 * t)),
                              TargetGraph::matching(static_cast<int>(t))}) {
            FormulaParams p = ints({{"t", t}, {"r", 2 * t}, {"b", t}});
            p.targets = {g};
            add("cor_AA", std::move(p), monochrome(static_cast<int>(2 * t - 1)));
        }
        if (t >= 3) {
            // R(C_{2t},P_3) = 2t and b(C_{2t},P_3) = t.
            FormulaParams p = ints({{"t", t}, {"r", 2 * t}, {"b", t}});
            p.targets = {TargetGraph::cycle(static_cast<int>(2 * t)), TargetGraph::path(3)};
            add("cor_AA", std::move(p), two_color_critical("P3C", ints({{"n", t}})).coloring);
        }
    }
    for (long long n0 = 4; n0 <= 10; ++n0) {
        for (long long n1 = 2; n1 <= n0; ++n1) {
            add("ref_cp", ints({{"n0", n0}, {"n1", n1}}));
        }
    }
    for (long long n = 2; n <= 8; ++n) {
        for (long long m = n; m <= 8; ++m) {
            add("ref_pp", ints({{"n", n}, {"m", m}}));
        }
    }
    for (long long n = 2; n <= 8; ++n) {
        for (long long t = 1; t <= 8; ++t) {
            add("ref_tk2_p", ints({{"t", t}, {"n", n}}));
        }
    }
    for (long long n = 3; n <= 9; ++n) {
        for (long long t = 1; t <= 5; ++t) {
            add("thm_tk2_cn", ints({{"t", t}, {"n", n}}));
        }
        for (long long k = 1; k <= n / 2; ++k) {
            add("ref_cn_kk2", ints({{"n", n}, {"k", k}}));
        }
    }
    for (long long n = 2; n <= 6; ++n) {
        add("ref_p3_c2n", ints({{"n", n}}));
    }
    return out;
}

} // namespace grids
