// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "compoq/asymptotics.hpp"
#include "compoq/compositions.hpp"
#include "compoq/dirichlet.hpp"
#include "compoq/identity_verifier.hpp"
#include "compoq/partsets.hpp"
#include "compoq/power_series.hpp"
#include "compoq/qgen.hpp"

using namespace compoq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }
};

bool path_present(const IdentityReport& r, std::int64_t n, const std::string& path)
{
    for (const auto& c : r.cells) {
        if (c.n == n) {
            for (const auto& v : c.values) {
                if (v.path == path) {
                    return true;
                }
            }
        }
    }
    return false;
}

std::string describe(const IdentityReport& r)
{
    std::string s = to_string(r.id);
    for (const auto& [k, v] : r.parameters) {
        s += " " + k + "=" + std::to_string(v);
    }
    const auto bad = r.failing_n();
    s += " fails at n=";
    for (std::size_t i = 0; i < bad.size() && i < 6; ++i) {
        s += (i ? "," : "") + std::to_string(bad[i]);
    }
    if (bad.size() > 6) {
        s += ",...";
    }
    return s;
}

void require_report(Outcome& o, const IdentityReport& r) { o.require(r.passed(), describe(r)); }

TruncatedSeries rr_denominator(std::size_t order)
{
    ProductSpec spec = named_gf_spec(NamedSeries::rr);
    spec.power = -1;
    return product_expand(spec, order);
}

Outcome reciprocals()
{
    Outcome o;
    const std::size_t N = 200;
    const std::vector<std::pair<std::string, TruncatedSeries>> cases = {
        {"psi", theta_sum({1, 3, 1, 1}, N)},
        {"phi", theta_sum({1, 1, 1, 1}, N)},
        {"f(-q,-q^2)", theta_sum({1, 2, -1, -1}, N)},
        {"(q;q)^3", jacobi_cube(N)},
        {"(q,q^4;q^5)", rr_denominator(N)},
    };
    for (const auto& [name, g] : cases) {
        o.require(series_mul(g, series_recip(g)).is_one(), name);
    }
    return o;
}

Outcome reciprocal_oracle()
{
    Outcome o;
    const std::size_t N = 25;
    const std::vector<std::pair<TruncatedSeries, PartSet>> cases = {
        {theta_sum({1, 3, 1, 1}, N), polygonal_set(3, N)},
        {theta_sum({1, 1, 1, 1}, N), polygonal_set(4, N)},
        {theta_sum({1, 2, -1, -1}, N), polygonal_set(5, N)},
    };
    for (const auto& [g, parts] : cases) {
        const auto recip = series_recip(g);
        const auto rule = WeightRule::from_series(g);
        for (std::int64_t n = 0; n <= 25; ++n) {
            if (recip[static_cast<std::size_t>(n)] != weighted_sum_bruteforce(parts, rule, n)) {
                o.require(false, parts.name() + " n=" + std::to_string(n));
            }
        }
    }
    return o;
}

Outcome polygonal_identities()
{
    Outcome o;
    VerifyOptions opts;
    opts.max_n = 60;
    for (int k : {6, 8, 10, 12}) {
        const auto r = verify_even_k(k, opts);
        require_report(o, r);
        o.require(path_present(r, 25, "compositions_brute") && path_present(r, 60, "compositions_dp"),
                  "paths missing k=" + std::to_string(k));
    }
    for (int k : {5, 7, 9}) {
        const auto r = verify_odd_k(k, opts);
        require_report(o, r);
        o.require(path_present(r, 25, "compositions_brute") && path_present(r, 60, "compositions_dp"),
                  "paths missing k=" + std::to_string(k));
    }
    return o;
}

Outcome partition_counts()
{
    Outcome o;
    VerifyOptions opts;
    for (const auto id : {IdentityId::pod, IdentityId::overpartition, IdentityId::pofn, IdentityId::pofn2}) {
        require_report(o, verify(id, opts));
    }
    const auto pod = verify(IdentityId::pod, opts);
    o.require(path_present(pod, 30, "pod_enumerated"), "pod enumeration path missing at n=30");
    return o;
}

Outcome three_colored()
{
    Outcome o;
    o.require(named_gf(NamedSeries::p3, 5)[5] == 108, "series coefficient");
    // Group the compositions of 5 into triangular parts by their multiset.
    const WeightRule rule = stat_weight(StatKind::p3);
    std::map<std::vector<std::int64_t>, Integer> classes;
    for (const auto& c : enumerate_compositions(polygonal_set(3, 5), 5)) {
        auto key = c.parts;
        std::sort(key.begin(), key.end());
        classes[key] += rule.weight(c);
    }
    o.require(classes.size() == 2, "expected two composition classes");
    o.require(classes[{1, 1, 1, 1, 1}] == 243 && classes[{1, 1, 3}] == Integer(3 * 9 * -5), "class sums");
    o.require(243 + 3 * 9 * -5 == 108, "class total");
    VerifyOptions opts;
    opts.max_n = 40;
    require_report(o, verify(IdentityId::p3, opts));
    return o;
}

Outcome r_s_general()
{
    Outcome o;
    VerifyOptions opts;
    opts.max_n = 40;
    require_report(o, verify(IdentityId::r, opts));
    require_report(o, verify(IdentityId::s, opts));
    opts.max_n = 30;
    for (const auto& [a, b] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 4}, std::pair{3, 5}}) {
        require_report(o, verify_general_ab(a, b, opts));
    }
    return o;
}

Outcome rogers_ramanujan()
{
    Outcome o;
    const std::vector<long> printed{1,  -1, 0,  0, -1, 1, -1, 1,  0,  -1, 2, -2, 1, 1,  -2, 3,
                                    -3, 2,  0, -3, 5,  -5, 3, 1, -5, 7,  -7, 4, 1, -7, 11};
    const auto den = rr_denominator(30);
    for (std::size_t i = 0; i < printed.size(); ++i) {
        if (den[i] != printed[i]) {
            o.require(false, "expansion differs at q^" + std::to_string(i));
        }
    }
    VerifyOptions opts;
    const auto r = verify(IdentityId::rr, opts);
    require_report(o, r);
    o.require(path_present(r, 60, "reciprocal_product") && path_present(r, 60, "cauchy_formula"),
              "triple path missing at n=60");
    o.require(path_present(r, 30, "gap_enumerated"), "gap enumeration missing at n=30");
    return o;
}

Outcome theta_identities()
{
    Outcome o;
    VerifyOptions opts;
    opts.max_n = 200;
    require_report(o, verify(IdentityId::jacobi, opts));
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (int sa : {1, -1}) {
                for (int sb : {1, -1}) {
                    opts.alpha = a;
                    opts.beta = b;
                    opts.sign_a = sa;
                    opts.sign_b = sb;
                    require_report(o, verify(IdentityId::triple_product, opts));
                }
            }
        }
    }
    return o;
}

Outcome mobius_identity()
{
    Outcome o;
    VerifyOptions opts;
    opts.max_n = 5000;
    opts.factorization_brute_max = 500;
    const auto r = verify(IdentityId::mobius, opts);
    require_report(o, r);
    o.require(path_present(r, 5000, "memoized_factorizations"), "memoized path missing at 5000");
    o.require(path_present(r, 500, "enumerated_factorizations"), "enumeration path missing at 500");
    return o;
}

Outcome zeta_bound()
{
    Outcome o;
    for (const double s : {3.0, 4.0}) {
        const auto e = comp_zeta_value(naturals_from_two_set(10000), 1, s, 10000);
        char buf[160];
        std::snprintf(buf, sizeof buf, "s=%g diff=%.3e bound=%.3e", s, e.difference, e.tail_bound);
        o.require(e.within_bound(), buf);
    }
    return o;
}

Outcome asymptotic_ratios()
{
    Outcome o;
    const std::array<std::int64_t, 3> ns{500, 1000, 2000};
    struct Case {
        AsymptoticId id;
        int k;
        bool banded;
    };
    const std::vector<Case> cases = {{AsymptoticId::p_sk, 5, true}, {AsymptoticId::p_sk, 6, true},
                                     {AsymptoticId::p_sk, 7, true}, {AsymptoticId::p_sk, 8, true},
                                     {AsymptoticId::p3, 0, true},   {AsymptoticId::r, 0, false},
                                     {AsymptoticId::s, 0, false},   {AsymptoticId::rr, 0, false}};
    for (const auto& c : cases) {
        const auto rows = ratio_report(c.id, ns, c.k);
        const std::string name = to_string(c.id) + (c.k ? std::to_string(c.k) : "");
        if (c.banded) {
            o.require(rows[1].ratio >= Real("0.8") && rows[1].ratio <= Real("1.25"),
                      name + " ratio " + format_significant(rows[1].ratio));
        }
        o.require(abs(rows[2].ratio - 1) < abs(rows[0].ratio - 1), name + " trend");
    }
    return o;
}

Outcome transfer()
{
    Outcome o;
    const std::vector<std::map<std::int64_t, Integer>> configs = {
        {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}},
        {{1, 3}, {3, -5}, {6, 7}},
        {{1, -1}, {2, 2}, {4, -3}, {5, 1}, {7, 4}},
    };
    for (std::size_t i = 0; i < configs.size(); ++i) {
        o.require(symm_transfer_check(configs[i], 8).equal, "config " + std::to_string(i));
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int number;
        std::string title;
        std::function<Outcome()> check;
        double limit_seconds;  // 0 = no time limit
    };
    const std::vector<Criterion> criteria = {
        {1, "reciprocal round trip at order 200", reciprocals, 5.0},
        {2, "reciprocal coefficients equal brute-force composition sums (P3, P4, P5, n <= 25)", reciprocal_oracle, 60.0},
        {3, "polygonal identities, even k 6..12 and odd k 5..9 (DP n <= 60, brute n <= 25)", polygonal_identities, 0},
        {4, "pod, overpartitions, p(n) two ways (n <= 60; pod enumeration n <= 30)", partition_counts, 0},
        {5, "three-colored partitions: p3(5) = 108 two ways; identity n <= 40", three_colored, 0},
        {6, "r(n), s(n) n <= 40; general (alpha,beta) for (1,3),(1,5),(2,4),(3,5) n <= 30", r_s_general, 0},
        {7, "Rogers-Ramanujan expansion, triple path n <= 60, gap count n <= 30", rogers_ramanujan, 0},
        {8, "Jacobi cube and triple product through order 200", theta_identities, 0},
        {9, "Moebius via ordered factorizations n <= 5000, enumeration n <= 500", mobius_identity, 30.0},
        {10, "composition zeta 1/(2 - zeta(s)) within tail bound, s = 3, 4, B = 10^4", zeta_bound, 0},
        {11, "asymptotic ratio band at n = 1000 and trend 500 -> 2000", asymptotic_ratios, 0},
        {12, "symmetric-function transfer at B = 8, three weight configurations", transfer, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "took %.2fs, limit %.0fs", seconds, c.limit_seconds);
            outcome.require(false, buf);
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("%s [%2d] %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                    outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
