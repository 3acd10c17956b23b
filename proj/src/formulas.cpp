#include "ramsey/formulas.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ramsey {

namespace {

long long floor_half(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

std::string num(long long x) { return std::to_string(x); }

/// Evaluation context for one catalog entry.
class Entry {
public:
    Entry(const FormulaInfo& info, const FormulaParams& params) : params_(params)
    {
        result_.id = info.id;
        result_.statement = info.statement;
        result_.kind = info.kind;
        result_.large_n_caveat = info.large_n_caveat;
    }

    long long need(const std::string& name) const
    {
        auto v = params_.get(name);
        if (!v) {
            throw InvalidInput("formula " + result_.id + " needs parameter '" + name + "'");
        }
        return *v;
    }

    std::optional<long long> maybe(const std::string& name) const { return params_.get(name); }

    const std::vector<long long>& need_list(const char* which) const
    {
        const auto& list = std::string(which) == "m_list" ? params_.m_list : params_.k_list;
        if (!list) {
            throw InvalidInput("formula " + result_.id + " needs parameter '" + which + "'");
        }
        return *list;
    }

    /// A symbol that may be given directly or derived from a path order.
    /// Supplying both inconsistently is rejected.
    long long derive(const std::string& name, std::optional<long long> from_order) const
    {
        auto direct = params_.get(name);
        if (direct && from_order && *direct != *from_order) {
            throw InvalidInput("formula " + result_.id + ": parameter '" + name + "'=" + num(*direct) +
                               " is inconsistent with the path order (implies " + num(*from_order) + ")");
        }
        if (from_order) {
            return *from_order;
        }
        return need(name);
    }

    bool pre(bool ok, std::string text)
    {
        result_.preconditions.push_back({std::move(text), ok});
        return ok;
    }

    void note(const std::string& key, long long v) { result_.derived[key] = v; }
    void caveat(bool on) { result_.large_n_caveat = on; }

    FormulaResult value(long long v)
    {
        if (result_.ok()) {
            result_.value = v;
        }
        return result_;
    }
    FormulaResult bracket(long long lo, long long hi)
    {
        if (result_.ok()) {
            result_.lower = lo;
            result_.upper = hi;
        }
        return result_;
    }
    FormulaResult pair(long long b1, long long b2)
    {
        if (result_.ok()) {
            result_.pair = {b1, b2};
        }
        return result_;
    }
    FormulaResult failed() { return result_; }

    const FormulaParams& params() const { return params_; }

private:
    const FormulaParams& params_;
    FormulaResult result_;
};

using Evaluator = std::function<FormulaResult(Entry&)>;

struct CatalogEntry {
    FormulaInfo info;
    Evaluator eval;
};

// b for stars and matchings from Λ and Σ.
long long lemma_f_value(long long lambda, long long sigma)
{
    return sigma < floor_half(lambda + 1) ? lambda + 1 : sigma + floor_half(lambda) + 1;
}

void check_list(Entry& e, const std::vector<long long>& list, const std::string& name, long long min_entry)
{
    bool ok = std::all_of(list.begin(), list.end(), [&](long long x) { return x >= min_entry; });
    e.pre(ok, "every " + name + " entry >= " + num(min_entry));
}

/// Case split shared by the cycle/path/path and path/path/path entries.
FormulaResult cycle_path_path(Entry& e, long long min_n0)
{
    const long long n0 = e.need("n0");
    const long long n1 = e.need("n1");
    const long long n2 = e.need("n2");
    const long long s = e.derive("s", floor_half(n1));
    const long long m = e.derive("m", floor_half(n2));
    e.note("s", s);
    e.note("m", m);
    e.pre(n0 >= min_n0, "n_0 >= " + num(min_n0));
    e.pre(n1 >= 2, "n_1 >= 2");
    e.pre(n2 >= 2 && n2 % 2 == 0, "n_2 = 2m is even and >= 2");
    const bool case1 = n1 % 2 == 0 && m - 1 < 2 * s;
    const bool case2 = n1 % 2 == 0 && n1 == n2;
    const bool case3 = n1 % 2 == 1 && s < m - 1 && m - 1 < 2 * s + 1;
    e.pre(case1 || case2 || case3,
          "case 1 (n_1=2s, m-1<2s), case 2 (n_1=n_2=2s) or case 3 (n_1=2s+1, s<m-1<2s+1) applies");
    if (case1 || case2 || case3) {
        e.note("case", case2 ? 2 : case1 ? 1 : 3);
    }
    return e.value(n0 + floor_half(n1) + floor_half(n2) - 2);
}

FormulaResult bipartite_path_case(Entry& e, int which)
{
    const long long s = e.need("s");
    const long long m = which == 5 ? s : e.need("m");
    auto order = [&](const char* name) { return e.maybe(name); };
    // Optional path orders must agree with s and m.
    auto check_order = [&](const char* name, long long expected) {
        if (auto given = order(name); given && *given != expected) {
            throw InvalidInput("formula " + std::string("thm_t_case") + num(which) + ": " + name + "=" +
                               num(*given) + " is inconsistent with s=" + num(s) + ", m=" + num(m));
        }
    };
    switch (which) {
    case 1:
        check_order("n1", 2 * s);
        check_order("n2", 2 * m);
        break;
    case 2:
    case 3:
        check_order("n1", 2 * s + 1);
        check_order("n2", 2 * m);
        break;
    case 4:
        check_order("n1", 2 * s + 1);
        check_order("n2", 2 * m + 1);
        break;
    default:
        check_order("n1", 2 * s + 1);
        check_order("n2", 2 * s + 1);
        break;
    }
    e.pre(s >= 1, "s >= 1");
    if (which != 5) {
        e.pre(m >= 1, "m >= 1");
    }
    switch (which) {
    case 1:
        return e.pair(s + m - 1, s + m - 1);
    case 2:
        e.pre(s >= m - 1, "s >= m-1");
        return e.pair(s + m, s + m - 1);
    case 3:
        e.pre(s < m - 1, "s < m-1");
        return e.pair(s + m - 1, s + m - 1);
    case 4:
        e.pre(s != m, "s != m");
        return e.pair(s + m, s + m - 1);
    default:
        return e.pair(2 * s + 1, 2 * s - 1);
    }
}

const std::vector<CatalogEntry>& catalog()
{
    using K = ResultKind;
    static const std::vector<CatalogEntry> entries = {
        {{"thm_SS", "R(H,G_1..G_k) <= R(H,K_{b,b}), b = b(G_1..G_k)", K::Upper, {"h", "b"}, false},
         [](Entry& e) {
             const long long b = e.need("b");
             if (!e.params().h) {
                 throw InvalidInput("formula thm_SS needs parameter 'h'");
             }
             const TargetGraph& h = *e.params().h;
             const bool supported = std::holds_alternative<CycleShape>(h.shape()) ||
                                    std::holds_alternative<PathShape>(h.shape()) ||
                                    std::holds_alternative<MatchingShape>(h.shape());
             e.pre(supported, "H is a cycle, path or matching");
             e.pre(b >= 1, "b >= 1");
             if (!supported || b < 1) {
                 return e.failed();
             }
             const Bound bound = combine_upper(h, b);
             e.caveat(bound.large_n_caveat);
             return e.value(bound.value);
         }},
        {{"thm_o", "R(P_m,K_{n,k}) <= k+n+m-2", K::Upper, {"m", "n", "k"}, false},
         [](Entry& e) {
             const long long m = e.need("m"), n = e.need("n"), k = e.need("k");
             e.pre(m >= 1 && n >= 1 && k >= 1, "m, n, k >= 1");
             return e.value(k + n + m - 2);
         }},
        {{"thm_Z", "R(tK_2,K_{n,n}) = max{n+2t-1, 2n+t-1}", K::Exact, {"t", "n"}, false},
         [](Entry& e) {
             const long long t = e.need("t"), n = e.need("n");
             e.pre(t >= 1 && n >= 1, "t, n >= 1");
             return e.value(std::max(n + 2 * t - 1, 2 * n + t - 1));
         }},
        {{"thm_i", "R(P_m,G_1..G_k) <= 2b+m-2", K::Upper, {"m", "b"}, false},
         [](Entry& e) {
             const long long m = e.need("m"), b = e.need("b");
             e.pre(m >= 1 && b >= 1, "m, b >= 1");
             return e.value(2 * b + m - 2);
         }},
        {{"thm_c", "R(tK_2,G_1..G_k) <= 2b+t-1 (t<=b), b+2t-1 (t>=b)", K::Upper, {"t", "b"}, false},
         [](Entry& e) {
             const long long t = e.need("t"), b = e.need("b");
             e.pre(t >= 1 && b >= 1, "t, b >= 1");
             e.note("branch", t <= b ? 1 : 2);
             return e.value(t <= b ? 2 * b + t - 1 : b + 2 * t - 1);
         }},
        {{"cor_AA", "R(tK_2,G_1..G_k) = 3t-1 when R(G_1..G_k) = 2b(G_1..G_k) = 2t", K::Exact, {"t", "r", "b"}, false},
         [](Entry& e) {
             const long long t = e.need("t"), r = e.need("r"), b = e.need("b");
             e.pre(t >= 1, "t >= 1");
             e.pre(r == 2 * b, "R(G_1..G_k) = 2b(G_1..G_k)");
             e.pre(b == t, "b(G_1..G_k) = t");
             return e.value(3 * t - 1);
         }},
        {{"thm_M", "R(C_n,K^{t+1}_r) = t(n-1)+r", K::Exact, {"n", "t", "r"}, true},
         [](Entry& e) {
             const long long n = e.need("n"), t = e.need("t"), r = e.need("r");
             e.pre(n >= 3, "n >= 3");
             e.pre(t >= 1 && r >= 1, "t, r >= 1");
             return e.value(t * (n - 1) + r);
         }},
        {{"thm_q", "R(C_{n0},P_{n1},P_{n2}) = n0+floor(n1/2)+floor(n2/2)-2", K::Exact, {"n0", "n1", "n2"}, true},
         [](Entry& e) { return cycle_path_path(e, 3); }},
        {{"cor_q_path", "R(P_{n0},P_{n1},P_{n2}) = n0+floor(n1/2)+floor(n2/2)-2", K::Exact, {"n0", "n1", "n2"}, true},
         [](Entry& e) { return cycle_path_path(e, 2); }},
        {{"thm_t", "b(P_{n1},P_{n2}): case selected from the parities of n1, n2", K::Pair, {"n1", "n2"}, false},
         [](Entry& e) {
             const long long n1 = e.need("n1"), n2 = e.need("n2");
             e.pre(n1 >= 2 && n2 >= 2, "n_1, n_2 >= 2");
             const bool covered = !(n1 % 2 == 0 && n2 % 2 == 1);
             e.pre(covered, "a case covers the parities (n_1 even with n_2 odd has none)");
             if (n1 < 2 || n2 < 2 || !covered) {
                 return e.failed();
             }
             const long long s = floor_half(n1);
             const long long m = floor_half(n2);
             int which = 0;
             if (n1 % 2 == 0) {
                 which = 1;
             } else if (n2 % 2 == 0) {
                 which = s >= m - 1 ? 2 : 3;
             } else {
                 which = s != m ? 4 : 5;
             }
             e.note("case", which);
             e.note("s", s);
             e.note("m", m);
             switch (which) {
             case 1:
             case 3:
                 return e.pair(s + m - 1, s + m - 1);
             case 2:
             case 4:
                 return e.pair(s + m, s + m - 1);
             default:
                 return e.pair(2 * s + 1, 2 * s - 1);
             }
         }},
        {{"thm_t_case1", "b(P_{2s},P_{2m}) = (s+m-1, s+m-1)", K::Pair, {"s", "m"}, false},
         [](Entry& e) { return bipartite_path_case(e, 1); }},
        {{"thm_t_case2", "b(P_{2s+1},P_{2m}) = (s+m, s+m-1) for s >= m-1", K::Pair, {"s", "m"}, false},
         [](Entry& e) { return bipartite_path_case(e, 2); }},
        {{"thm_t_case3", "b(P_{2s+1},P_{2m}) = (s+m-1, s+m-1) for s < m-1", K::Pair, {"s", "m"}, false},
         [](Entry& e) { return bipartite_path_case(e, 3); }},
        {{"thm_t_case4", "b(P_{2s+1},P_{2m+1}) = (s+m, s+m-1) for s != m", K::Pair, {"s", "m"}, false},
         [](Entry& e) { return bipartite_path_case(e, 4); }},
        {{"thm_t_case5", "b(P_{2s+1},P_{2s+1}) = (2s+1, 2s-1)", K::Pair, {"s"}, false},
         [](Entry& e) { return bipartite_path_case(e, 5); }},
        {{"thm_p_i", "R((k-1)K_2,P_k,P_k) = 3k-4 for even k", K::Exact, {"k"}, false},
         [](Entry& e) {
             const long long k = e.need("k");
             e.pre(k >= 2, "k >= 2");
             e.pre(k % 2 == 0, "k is even");
             return e.value(3 * k - 4);
         }},
        {{"thm_p_ii", "R(tK_2,P_{2s+1},P_{2m}) = s+m+2t-2", K::Exact, {"s", "m", "t"}, false},
         [](Entry& e) {
             auto n1 = e.maybe("n1");
             auto n2 = e.maybe("n2");
             if (n1 && *n1 % 2 == 0) {
                 throw InvalidInput("formula thm_p_ii: n1 must be odd (n1 = 2s+1)");
             }
             if (n2 && *n2 % 2 == 1) {
                 throw InvalidInput("formula thm_p_ii: n2 must be even (n2 = 2m)");
             }
             const long long s = e.derive("s", n1 ? std::optional<long long>((*n1 - 1) / 2) : std::nullopt);
             const long long m = e.derive("m", n2 ? std::optional<long long>(*n2 / 2) : std::nullopt);
             const long long t = e.need("t");
             e.pre(s >= 1, "s >= 1");
             e.pre(s < m - 1, "s < m-1");
             e.pre(m - 1 < 2 * s + 1, "m-1 < 2s+1");
             e.pre(t >= m + s - 1, "t >= m+s-1");
             return e.value(s + m + 2 * t - 2);
         }},
        {{"thm_d", "R(C_n,K_{1,k_1}..K_{1,k_t},m_1K_2..m_sK_2) <= n+b-1", K::Upper, {"n", "b|m_list,k_list"}, true},
         [](Entry& e) {
             const long long n = e.need("n");
             std::optional<long long> from_lists;
             if (e.params().m_list || e.params().k_list) {
                 const auto empty = std::vector<long long>{};
                 const auto& ml = e.params().m_list ? *e.params().m_list : empty;
                 const auto& kl = e.params().k_list ? *e.params().k_list : empty;
                 from_lists = lemma_f_value(lambda_of(ml), sigma_of(kl));
             }
             const long long b = e.derive("b", from_lists);
             e.note("b", b);
             e.pre(n >= 3, "n >= 3");
             e.pre(b >= 1, "b >= 1");
             return e.value(n + b - 1);
         }},
        {{"lem_f", "b(K_{1,k_1}..K_{1,k_t},m_1K_2..m_sK_2) = Λ+1 or Σ+floor(Λ/2)+1", K::Exact, {"m_list", "k_list"},
          false},
         [](Entry& e) {
             const auto& ml = e.need_list("m_list");
             const auto& kl = e.need_list("k_list");
             check_list(e, ml, "m_i", 1);
             check_list(e, kl, "k_i", 1);
             e.pre(!ml.empty() || !kl.empty(), "at least one star or matching");
             const long long lambda = lambda_of(ml);
             const long long sigma = sigma_of(kl);
             e.note("Lambda", lambda);
             e.note("Sigma", sigma);
             e.note("branch", sigma < floor_half(lambda + 1) ? 1 : 2);
             return e.value(lemma_f_value(lambda, sigma));
         }},
        {{"thm_Far", "R(C_n,K_{1,k_1}..K_{1,k_t},m_1K_2..m_sK_2) = n+Λ", K::Exact, {"n", "m_list", "k_list"}, true},
         [](Entry& e) {
             const long long n = e.need("n");
             const auto& ml = e.need_list("m_list");
             const auto& kl = e.need_list("k_list");
             e.pre(n >= 3, "n >= 3");
             e.pre(!ml.empty(), "at least one matching");
             check_list(e, ml, "m_i", 1);
             check_list(e, kl, "k_i", 1);
             const long long lambda = lambda_of(ml);
             const long long sigma = sigma_of(kl);
             e.note("Lambda", lambda);
             e.note("Sigma", sigma);
             e.pre(sigma <= floor_half(lambda + 1), "Σ <= floor((Λ+1)/2)");
             return e.value(n + lambda);
         }},
        {{"cor_s", "R(P_n,K_{1,k_1}..K_{1,k_t},m_1K_2..m_sK_2) = n+Λ", K::Exact, {"n", "m_list", "k_list"}, true},
         [](Entry& e) {
             const long long n = e.need("n");
             const auto& ml = e.need_list("m_list");
             const auto& kl = e.need_list("k_list");
             e.pre(n >= 2, "n >= 2");
             e.pre(!ml.empty(), "at least one matching");
             check_list(e, ml, "m_i", 1);
             check_list(e, kl, "k_i", 1);
             const long long lambda = lambda_of(ml);
             const long long sigma = sigma_of(kl);
             e.note("Lambda", lambda);
             e.note("Sigma", sigma);
             e.pre(sigma <= floor_half(lambda + 1), "Σ <= floor((Λ+1)/2)");
             return e.value(n + lambda);
         }},
        {{"lem_h", "b(mK_2,nK_2) = m+n-1", K::Exact, {"m", "n"}, false},
         [](Entry& e) {
             const long long m = e.need("m"), n = e.need("n");
             e.pre(m >= 1 && n >= 1, "m, n >= 1");
             return e.value(m + n - 1);
         }},
        {{"thm_h1", "R(C_n,kK_2,kK_2) = n+2k-2", K::Exact, {"n", "k"}, true},
         [](Entry& e) {
             const long long n = e.need("n"), k = e.need("k");
             e.pre(n >= 3, "n >= 3");
             e.pre(k >= 1, "k >= 1");
             return e.value(n + 2 * k - 2);
         }},
        {{"thm_h1_path", "R(P_n,kK_2,kK_2) = n+2k-2", K::Exact, {"n", "k"}, true},
         [](Entry& e) {
             const long long n = e.need("n"), k = e.need("k");
             e.pre(n >= 2, "n >= 2");
             e.pre(k >= 1, "k >= 1");
             return e.value(n + 2 * k - 2);
         }},
        {{"lem_RE", "b(P_m,K_{1,k_1}..K_{1,k_r}), first of five cases in order", K::Exact, {"m", "k_list"}, false},
         [](Entry& e) {
             const long long m = e.need("m");
             const auto& kl = e.need_list("k_list");
             e.pre(m >= 2, "m >= 2");
             e.pre(!kl.empty(), "at least one star");
             check_list(e, kl, "k_i", 2);
             const long long sigma = sigma_of(kl);
             e.note("Sigma", sigma);
             const long long half_floor = floor_half(m);  // floor(m/2)
             // Guards compare 2Σ against integers to stay exact.
             int which = 0;
             long long v = 0;
             if (m % 2 == 0 && 2 * sigma >= m) {
                 which = 1;
                 v = sigma + m / 2;
             } else if (m % 2 == 1 && 2 * sigma >= m - 1 && sigma % ((m - 1) / 2) == 0) {
                 which = 2;
                 v = sigma + (m + 1) / 2;
             } else if (m % 2 == 1 && 2 * sigma >= m - 1) {
                 which = 3;
                 v = sigma + (m - 1) / 2;
             } else if (2 * sigma >= half_floor + 2 && sigma < half_floor + 1) {
                 which = 4;
                 v = 2 * sigma + 1;
             } else if (2 * sigma < half_floor) {
                 which = 5;
                 v = floor_half(m + 1);
             }
             e.pre(which != 0, "one of the five cases applies");
             if (which != 0) {
                 e.note("case", which);
             }
             return e.value(v);
         }},
        {{"thm_stripe_star", "R(tK_2,P_m,K_{1,k_1}..K_{1,k_r}) = m+t-1", K::Exact, {"t", "m", "k_list"}, false},
         [](Entry& e) {
             const long long t = e.need("t"), m = e.need("m");
             const auto& kl = e.need_list("k_list");
             e.pre(m >= 2 && m % 2 == 0, "m = 2s is even");
             const long long s = m / 2;
             e.note("s", s);
             e.pre(2 <= t && t <= s, "2 <= t <= s");
             e.pre(!kl.empty(), "at least one star");
             check_list(e, kl, "k_i", 2);
             const long long sigma = sigma_of(kl);
             e.note("Sigma", sigma);
             e.pre(2 * sigma < floor_half(m), "Σ < floor(m/2)/2");
             return e.value(m + t - 1);
         }},
        {{"thm_p3c2n", "R(tK_2,P_3,C_{2n}) = 2n+t-1", K::Exact, {"t", "n"}, false},
         [](Entry& e) {
             const long long t = e.need("t"), n = e.need("n");
             e.pre(n >= 2, "n >= 2");
             e.pre(1 <= t && t <= n, "1 <= t <= n");
             // The upper bound goes through b(P_3,C_{2n}) = n, which fails
             // at n = 2; exhaustive search gives R(2K_2,P_3,C_4) = 6.
             e.pre(n >= 3 || t == 1, "n >= 3 or t = 1");
             return e.value(2 * n + t - 1);
         }},
        {{"ref_p3_c2n", "R(P_3,C_{2n}) = 2n", K::Exact, {"n"}, false},
         [](Entry& e) {
             const long long n = e.need("n");
             e.pre(n >= 2, "n >= 2");
             return e.value(2 * n);
         }},
        {{"ref_b_p3_c2n", "b(P_3,C_{2n}) = n", K::Exact, {"n"}, false},
         [](Entry& e) {
             const long long n = e.need("n");
             // At n = 2, K_{3,3} minus a perfect matching is C_6, so a
             // perfect matching in the P_3 color avoids both targets.
             e.pre(n >= 3, "n >= 3");
             return e.value(n);
         }},
        {{"thm_z", "b(C_{2m},K_{2,2}) = m+1", K::Exact, {"m"}, false},
         [](Entry& e) {
             const long long m = e.need("m");
             e.pre(m >= 4, "m >= 4");
             return e.value(m + 1);
         }},
        {{"thm_tk2_cn", "R(tK_2,C_n) = max{n+2t-1-floor(n/2), n+t-1}", K::Exact, {"t", "n"}, false},
         [](Entry& e) {
             const long long t = e.need("t"), n = e.need("n");
             e.pre(n >= 3, "n >= 3");
             e.pre(t >= 1, "t >= 1");
             return e.value(std::max(n + 2 * t - 1 - floor_half(n), n + t - 1));
         }},
        {{"thm_c2m_c4_1", "R(tK_2,C_{2m},C_4) = m+2t for t >= m+1", K::Exact, {"m", "t"}, false},
         [](Entry& e) {
             const long long m = e.need("m"), t = e.need("t");
             e.pre(m >= 4, "m >= 4");
             e.pre(t >= m + 1, "t >= m+1");
             return e.value(m + 2 * t);
         }},
        {{"thm_c2m_c4_2", "2m+t <= R(tK_2,C_{2m},C_4) <= 2m+t+1 for t <= m", K::Bracket, {"m", "t"}, false},
         [](Entry& e) {
             const long long m = e.need("m"), t = e.need("t");
             e.pre(m >= 4, "m >= 4");
             e.pre(1 <= t && t <= m, "1 <= t <= m");
             return e.bracket(2 * m + t, 2 * m + t + 1);
         }},
        {{"ref_pp", "R(P_n,P_m) = m+floor(n/2)-1", K::Exact, {"n", "m"}, false},
         [](Entry& e) {
             const long long n = e.need("n"), m = e.need("m");
             e.pre(m >= n && n >= 2, "m >= n >= 2");
             return e.value(m + floor_half(n) - 1);
         }},
        {{"ref_cp", "R(C_{n0},P_{n1}) = n0+floor(n1/2)-1", K::Exact, {"n0", "n1"}, false},
         [](Entry& e) {
             const long long n0 = e.need("n0"), n1 = e.need("n1");
             e.pre(n0 >= 3, "n_0 >= 3");
             e.pre(n0 >= n1 && n1 >= 2, "n_0 >= n_1 >= 2");
             // Odd cycles also admit a coloring on 2n1-2 vertices (two
             // cliques joined in the path color), so the value needs n0
             // large relative to n1 when n0 is odd.
             e.caveat(n0 % 2 == 1);
             return e.value(n0 + floor_half(n1) - 1);
         }},
        {{"ref_cn_kk2", "R(C_n,kK_2) = n+k-1", K::Exact, {"n", "k"}, false},
         [](Entry& e) {
             const long long n = e.need("n"), k = e.need("k");
             e.pre(n >= 3, "n >= 3");
             e.pre(1 <= k && k <= floor_half(n), "1 <= k <= floor(n/2)");
             return e.value(n + k - 1);
         }},
        {{"ref_tk2_p", "R(tK_2,P_n) = 2t+floor(n/2)-1; R((k-1)K_2,P_k) = 2k+floor(k/2)-3", K::Exact, {"t", "n|k"},
          false},
         [](Entry& e) {
             long long t = 0;
             long long n = 0;
             if (auto k = e.maybe("k")) {
                 t = e.derive("t", *k - 1);
                 n = e.derive("n", *k);
             } else {
                 t = e.need("t");
                 n = e.need("n");
             }
             e.note("t", t);
             e.note("n", n);
             e.pre(n >= 2 && t >= 1, "n >= 2, t >= 1");
             e.pre(t > floor_half(n) || t == n - 1, "t > floor(n/2) or t = n-1");
             return e.value(2 * t + floor_half(n) - 1);
         }},
    };
    return entries;
}

const CatalogEntry* find_entry(std::string_view id)
{
    for (const auto& entry : catalog()) {
        if (entry.info.id == id) {
            return &entry;
        }
    }
    return nullptr;
}

} // namespace

bool FormulaResult::ok() const
{
    return std::all_of(preconditions.begin(), preconditions.end(), [](const Precondition& p) { return p.passed; });
}

std::string FormulaResult::failure() const
{
    for (const auto& p : preconditions) {
        if (!p.passed) {
            return p.text;
        }
    }
    return {};
}

const std::vector<FormulaInfo>& formula_catalog()
{
    static const std::vector<FormulaInfo> infos = [] {
        std::vector<FormulaInfo> out;
        for (const auto& entry : catalog()) {
            out.push_back(entry.info);
        }
        return out;
    }();
    return infos;
}

FormulaResult eval_formula(std::string_view id, const FormulaParams& params)
{
    const CatalogEntry* entry = find_entry(id);
    if (entry == nullptr) {
        throw InvalidInput("unknown formula id '" + std::string(id) + "'");
    }
    Entry e(entry->info, params);
    FormulaResult result = entry->eval(e);
    if (!result.ok()) {
        result.value.reset();
        result.lower.reset();
        result.upper.reset();
        result.pair.reset();
    }
    return result;
}

FormulaResult eval_formula_checked(std::string_view id, const FormulaParams& params)
{
    FormulaResult result = eval_formula(id, params);
    if (!result.ok()) {
        throw PreconditionFailed(std::string(id) + ": precondition failed: " + result.failure());
    }
    return result;
}

long long lambda_of(const std::vector<long long>& m_list)
{
    long long total = 0;
    for (long long m : m_list) {
        total += m - 1;
    }
    return total;
}

long long sigma_of(const std::vector<long long>& k_list)
{
    long long total = 0;
    for (long long k : k_list) {
        total += k - 1;
    }
    return total;
}

long long square_b(std::pair<long long, long long> pair)
{
    if (pair.first < pair.second) {
        throw InvalidInput("bipartite pair must be ordered b1 >= b2, got (" + num(pair.first) + "," +
                           num(pair.second) + ")");
    }
    return pair.first;
}

Bound combine_upper(const TargetGraph& h, long long b)
{
    if (b < 1) {
        throw InvalidInput("b must be at least 1");
    }
    Bound out;
    out.kind = Bound::Kind::Upper;
    if (const auto* c = std::get_if<CycleShape>(&h.shape())) {
        out.value = c->order - 1 + b;  // t = 1, r = b
        out.provenance = "thm_M";
        out.large_n_caveat = true;
    } else if (const auto* p = std::get_if<PathShape>(&h.shape())) {
        out.value = 2 * b + p->order - 2;
        out.provenance = "thm_o";
    } else if (const auto* m = std::get_if<MatchingShape>(&h.shape())) {
        out.value = std::max(b + 2LL * m->size - 1, 2 * b + m->size - 1);
        out.provenance = "thm_Z";
    } else {
        throw InvalidInput("combining bound supports cycle, path or matching H, got " + h.to_string());
    }
    out.upper_provenance = out.provenance;
    return out;
}

std::optional<Bound> assemble_exact(const Bound& lower, const Bound& upper)
{
    if (lower.kind == Bound::Kind::Upper || upper.kind == Bound::Kind::Lower) {
        throw InvalidInput("assemble_exact needs a lower and an upper bound");
    }
    if (upper.large_n_caveat || lower.value != upper.value) {
        return std::nullopt;
    }
    Bound out;
    out.kind = Bound::Kind::Exact;
    out.value = lower.value;
    out.lower_provenance = lower.provenance;
    out.upper_provenance = upper.provenance;
    out.provenance = lower.provenance + "+" + upper.provenance;
    return out;
}

std::vector<std::pair<std::string, FormulaParams>> default_grid()
{
    std::vector<std::pair<std::string, FormulaParams>> grid;
    auto add = [&](std::string id, FormulaParams p) { grid.emplace_back(std::move(id), std::move(p)); };
    auto ints = [](std::initializer_list<std::pair<const char*, long long>> kv) {
        FormulaParams p;
        for (const auto& [k, v] : kv) {
            p.set(k, v);
        }
        return p;
    };
    auto lists = [](FormulaParams p, std::vector<long long> ml, std::vector<long long> kl) {
        p.m_list = std::move(ml);
        p.k_list = std::move(kl);
        return p;
    };
    {
        FormulaParams p = ints({{"b", 3}});
        p.h = TargetGraph::cycle(10);
        add("thm_SS", p);
        p.h = TargetGraph::path(5);
        add("thm_SS", p);
        p.h = TargetGraph::matching(3);
        add("thm_SS", p);
    }
    add("thm_o", ints({{"m", 5}, {"n", 2}, {"k", 3}}));
    add("thm_Z", ints({{"t", 4}, {"n", 3}}));
    add("thm_Z", ints({{"t", 2}, {"n", 5}}));
    add("thm_i", ints({{"m", 5}, {"b", 3}}));
    add("thm_c", ints({{"t", 2}, {"b", 3}}));
    add("thm_c", ints({{"t", 5}, {"b", 3}}));
    add("cor_AA", ints({{"t", 2}, {"r", 4}, {"b", 2}}));
    add("thm_M", ints({{"n", 10}, {"t", 1}, {"r", 3}}));
    add("thm_q", ints({{"n0", 100}, {"n1", 4}, {"n2", 6}}));
    add("thm_q", ints({{"n0", 20}, {"n1", 5}, {"n2", 8}}));
    add("cor_q_path", ints({{"n0", 100}, {"n1", 4}, {"n2", 6}}));
    add("thm_t_case1", ints({{"s", 2}, {"m", 2}}));
    add("thm_t_case2", ints({{"s", 3}, {"m", 2}}));
    add("thm_t_case3", ints({{"s", 1}, {"m", 3}}));
    add("thm_t_case4", ints({{"s", 2}, {"m", 1}}));
    add("thm_t_case5", ints({{"s", 1}}));
    add("thm_p_i", ints({{"k", 6}}));
    add("thm_p_ii", ints({{"s", 2}, {"m", 4}, {"t", 5}}));
    add("thm_d", lists(ints({{"n", 10}}), {2, 2}, {2}));
    add("lem_f", lists({}, {2, 2}, {2}));
    add("thm_Far", lists(ints({{"n", 10}}), {2, 2}, {2}));
    add("cor_s", lists(ints({{"n", 10}}), {2, 2}, {2}));
    add("lem_h", ints({{"m", 2}, {"n", 3}}));
    add("thm_h1", ints({{"n", 8}, {"k", 2}}));
    add("thm_h1_path", ints({{"n", 8}, {"k", 2}}));
    add("lem_RE", lists(ints({{"m", 6}}), {}, {2, 3}));
    add("lem_RE", lists(ints({{"m", 12}}), {}, {2}));
    add("thm_stripe_star", lists(ints({{"t", 2}, {"m", 6}}), {}, {2}));
    add("thm_p3c2n", ints({{"t", 2}, {"n", 3}}));
    add("ref_p3_c2n", ints({{"n", 3}}));
    add("ref_b_p3_c2n", ints({{"n", 3}}));
    add("thm_z", ints({{"m", 4}}));
    add("thm_tk2_cn", ints({{"t", 5}, {"n", 8}}));
    add("thm_c2m_c4_1", ints({{"m", 4}, {"t", 5}}));
    add("thm_c2m_c4_2", ints({{"m", 4}, {"t", 3}}));
    add("ref_pp", ints({{"n", 4}, {"m", 6}}));
    add("ref_cp", ints({{"n0", 8}, {"n1", 4}}));
    add("ref_cn_kk2", ints({{"n", 8}, {"k", 2}}));
    add("ref_tk2_p", ints({{"k", 6}}));
    return grid;
}

} // namespace ramsey
