#include "compoq/identity_verifier.hpp"

#include <algorithm>
#include <functional>

#include "compoq/compositions.hpp"
#include "compoq/dirichlet.hpp"
#include "compoq/errors.hpp"
#include "compoq/partitions.hpp"
#include "compoq/partsets.hpp"
#include "compoq/power_series.hpp"
#include "compoq/qgen.hpp"

namespace compoq {

namespace {

using Values = std::vector<Integer>;

Values from_series(const TruncatedSeries& s) { return Values(s.coeffs().begin(), s.coeffs().end()); }

Values alternate(Values v)
{
    for (std::size_t n = 1; n < v.size(); n += 2) {
        v[n] = -v[n];
    }
    return v;
}

// Collects per-n values from independent paths and decides each cell.
class CellTable {
public:
    CellTable(IdentityId id, const VerifyOptions& options, std::int64_t first_n, std::int64_t brute_cap)
        : options_(options), first_n_(first_n)
    {
        if (options.max_n < first_n) {
            throw InvalidArgument("max_n must be >= " + std::to_string(first_n));
        }
        last_n_ = options.max_n;
        if (options.oracle == OracleMode::brute) {
            last_n_ = std::min(last_n_, brute_cap);
        }
        report_.id = id;
        report_.oracle = to_string(options.oracle);
        for (std::int64_t n = first_n_; n <= last_n_; ++n) {
            report_.cells.push_back(VerifyCell{n, {}, false});
        }
    }

    std::int64_t last_n() const { return last_n_; }
    bool wants_dp() const { return options_.oracle != OracleMode::brute; }
    bool wants_brute() const { return options_.oracle != OracleMode::dp; }

    void parameter(std::string name, std::int64_t value) { report_.parameters.emplace_back(std::move(name), value); }

    // A path that is always computed, from a vector indexed by n.
    void reference(const std::string& path, const Values& values) { add(path, values, last_n_); }

    void dp(const std::string& path, const std::function<Values()>& compute)
    {
        if (wants_dp()) {
            add(path, compute(), last_n_);
        }
    }

    // A brute-force path evaluated per n up to `limit`.
    void brute(const std::string& path, std::int64_t limit, const std::function<Integer(std::int64_t)>& compute)
    {
        if (!wants_brute()) {
            return;
        }
        for (auto& cell : report_.cells) {
            if (cell.n <= limit) {
                cell.values.push_back({path, compute(cell.n)});
            }
        }
    }

    IdentityReport finish()
    {
        for (auto& cell : report_.cells) {
            cell.pass = cell.values.size() >= 2 &&
                        std::all_of(cell.values.begin(), cell.values.end(),
                                    [&](const PathValue& v) { return v.value == cell.values.front().value; });
        }
        return std::move(report_);
    }

private:
    void add(const std::string& path, const Values& values, std::int64_t limit)
    {
        for (auto& cell : report_.cells) {
            if (cell.n <= limit && cell.n < static_cast<std::int64_t>(values.size())) {
                cell.values.push_back({path, values[static_cast<std::size_t>(cell.n)]});
            }
        }
    }

    const VerifyOptions& options_;
    std::int64_t first_n_;
    std::int64_t last_n_ = 0;
    IdentityReport report_;
};

std::int64_t set_bound(std::int64_t n) { return std::max<std::int64_t>(n, 1); }

// Adds the (-1)^n-signed (or unsigned) composition-side paths.
void composition_paths(CellTable& table, const PartSet& parts, const WeightRule& rule, bool signed_by_n,
                       std::int64_t brute_max)
{
    table.dp("compositions_dp", [&] {
        Values v = weighted_sums(parts, rule, table.last_n());
        return signed_by_n ? alternate(std::move(v)) : v;
    });
    table.brute("compositions_brute", brute_max, [&](std::int64_t n) {
        Integer v = weighted_sum_bruteforce(parts, rule, n);
        return (signed_by_n && n % 2 != 0) ? Integer(-v) : v;
    });
}

IdentityReport verify_pod(const VerifyOptions& o)
{
    CellTable table(IdentityId::pod, o, 0, std::max(o.composition_brute_max, o.enumeration_max));
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("pod_dp", counts_pod(N));
    table.dp("product_gf", [&] { return from_series(named_gf(NamedSeries::pod, order)); });
    table.dp("classical_gf", [&] { return from_series(named_gf(NamedSeries::pod_classical, order)); });
    table.dp("sk6_dp", [&] { return counts_ps(residue_set_sk(6, set_bound(N)), N); });
    table.brute("pod_enumerated", o.enumeration_max, [](std::int64_t n) { return count_pod_enumerated(n); });
    composition_paths(table, polygonal_set(3, set_bound(N)), stat_weight(StatKind::length), true,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify_overpartition(const VerifyOptions& o)
{
    CellTable table(IdentityId::overpartition, o, 0, std::max(o.composition_brute_max, o.enumeration_max));
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("product_gf", from_series(named_gf(NamedSeries::overpartition, order)));
    table.dp("reciprocal_theta", [&] { return alternate(from_series(series_recip(theta_sum({1, 1, 1, 1}, order)))); });
    table.brute("enumerated", o.enumeration_max,
                [](std::int64_t n) { return count_decorated(n, overpartition_palette()); });
    composition_paths(table, polygonal_set(4, set_bound(N)), stat_weight(StatKind::length_z, 0, -2), true,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify_pofn(const VerifyOptions& o)
{
    CellTable table(IdentityId::pofn, o, 0, o.composition_brute_max);
    const auto N = table.last_n();
    table.reference("partitions_dp", counts_ps(naturals_set(set_bound(N)), N));
    table.dp("sk5_dp", [&] { return counts_ps(residue_set_sk(5, set_bound(N)), N); });
    table.dp("product_gf", [&] { return from_series(named_gf(NamedSeries::partition, static_cast<std::size_t>(N))); });
    composition_paths(table, polygonal_set(5, set_bound(N)), stat_weight(StatKind::star_length, 5), true,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify_pofn2(const VerifyOptions& o)
{
    CellTable table(IdentityId::pofn2, o, 0, o.composition_brute_max);
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("partitions_dp", counts_ps(naturals_set(set_bound(N)), N));
    table.dp("product_gf", [&] { return from_series(named_gf(NamedSeries::partition, order)); });
    table.dp("reciprocal_theta", [&] { return from_series(series_recip(theta_sum({1, 2, -1, -1}, order))); });
    composition_paths(table, polygonal_set(5, set_bound(N)), stat_weight(StatKind::hat_length), false,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify_p3(const VerifyOptions& o)
{
    CellTable table(IdentityId::p3, o, 0, std::max(o.composition_brute_max, o.colored_enumeration_max));
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("colored_dp", counts_colored(N, 3));
    table.dp("product_gf", [&] { return from_series(named_gf(NamedSeries::p3, order)); });
    table.dp("reciprocal_sum", [&] { return from_series(series_recip(jacobi_cube(order))); });
    table.brute("enumerated", o.colored_enumeration_max,
                [](std::int64_t n) { return count_decorated(n, colored_palette(3)); });
    composition_paths(table, polygonal_set(3, set_bound(N)), stat_weight(StatKind::p3), false,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify_r(const VerifyOptions& o)
{
    CellTable table(IdentityId::r, o, 0, std::max(o.composition_brute_max, o.colored_enumeration_max));
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("product_gf", from_series(named_gf(NamedSeries::r, order)));
    table.dp("reciprocal_sum", [&] { return from_series(series_recip(r_sum_side(order))); });
    table.brute("enumerated", o.colored_enumeration_max, [](std::int64_t n) { return count_decorated(n, r_palette()); });
    composition_paths(table, polygonal_set(5, set_bound(N)), stat_weight(StatKind::r), false,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify_s(const VerifyOptions& o)
{
    CellTable table(IdentityId::s, o, 0, std::max(o.composition_brute_max, o.colored_enumeration_max));
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("product_gf", from_series(named_gf(NamedSeries::s, order)));
    table.dp("reciprocal_sum", [&] { return from_series(series_recip(s_sum_side(order))); });
    table.brute("enumerated", o.colored_enumeration_max, [](std::int64_t n) { return count_decorated(n, s_palette()); });
    composition_paths(table, u_set(set_bound(N)), stat_weight(StatKind::s), false, o.composition_brute_max);
    return table.finish();
}

Values cauchy(const TruncatedSeries& a, const Values& b, std::int64_t last)
{
    Values out(static_cast<std::size_t>(last) + 1);
    for (std::int64_t n = 0; n <= last; ++n) {
        for (std::int64_t i = 0; i <= n; ++i) {
            const Integer& ai = a[static_cast<std::size_t>(i)];
            if (ai != 0) {
                out[static_cast<std::size_t>(n)] += ai * b[static_cast<std::size_t>(n - i)];
            }
        }
    }
    return out;
}

IdentityReport verify_rr(const VerifyOptions& o)
{
    CellTable table(IdentityId::rr, o, 0, std::max(o.composition_brute_max, o.enumeration_max));
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("residue_dp", counts_rr(N));
    table.dp("reciprocal_product", [&] {
        ProductSpec denominator = named_gf_spec(NamedSeries::rr);
        denominator.power = -1;
        return from_series(series_recip(product_expand(denominator, order)));
    });
    const PartSet pentagonal = polygonal_set(5, set_bound(N));
    const WeightRule hat = stat_weight(StatKind::hat_length);
    const TruncatedSeries a = rr_theta_factor(order);
    table.dp("cauchy_formula", [&] { return cauchy(a, weighted_sums(pentagonal, hat, N), N); });
    table.brute("cauchy_brute", o.composition_brute_max, [&](std::int64_t n) {
        Values hats;
        for (std::int64_t m = 0; m <= n; ++m) {
            hats.push_back(weighted_sum_bruteforce(pentagonal, hat, m));
        }
        return cauchy(a, hats, n)[static_cast<std::size_t>(n)];
    });
    table.brute("gap_enumerated", o.enumeration_max, [](std::int64_t n) { return count_rr_gap(n); });
    return table.finish();
}

IdentityReport verify_jacobi(const VerifyOptions& o)
{
    CellTable table(IdentityId::jacobi, o, 0, o.max_n);
    const auto order = static_cast<std::size_t>(table.last_n());
    table.reference("sum_side", from_series(jacobi_cube(order)));
    ProductSpec cube;
    cube.times(1, 1, 1, 3);
    table.reference("product_side", from_series(product_expand(cube, order)));
    return table.finish();
}

IdentityReport verify_triple_product(const VerifyOptions& o)
{
    const ThetaSpec spec{o.alpha, o.beta, o.sign_a, o.sign_b};
    spec.validate();
    CellTable table(IdentityId::triple_product, o, 0, o.max_n);
    table.parameter("alpha", o.alpha);
    table.parameter("beta", o.beta);
    table.parameter("sign_a", o.sign_a);
    table.parameter("sign_b", o.sign_b);
    const auto order = static_cast<std::size_t>(table.last_n());
    table.reference("theta_sum", from_series(theta_sum(spec, order)));
    table.reference("theta_product", from_series(theta_product(spec, order)));
    return table.finish();
}

IdentityReport verify_mobius(const VerifyOptions& o)
{
    CellTable table(IdentityId::mobius, o, 1, o.factorization_brute_max);
    const auto N = table.last_n();
    Values trial(static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 1; n <= N; ++n) {
        trial[static_cast<std::size_t>(n)] = mobius(n);
    }
    table.reference("trial_factorization", trial);
    table.dp("dirichlet_recurrence", [&] {
        const DirichletCoeffs d = comp_zeta_coeffs(naturals_from_two_set(set_bound(N)), -1, N);
        Values v(static_cast<std::size_t>(N) + 1);
        for (std::int64_t n = 1; n <= N; ++n) {
            v[static_cast<std::size_t>(n)] = d[n];
        }
        return v;
    });
    table.dp("memoized_factorizations", [&] {
        SignedFactorizationCounter counter;
        Values v(static_cast<std::size_t>(N) + 1);
        for (std::int64_t n = 1; n <= N; ++n) {
            v[static_cast<std::size_t>(n)] = counter(n);
        }
        return v;
    });
    table.brute("enumerated_factorizations", o.factorization_brute_max,
                [](std::int64_t n) { return mobius_via_compositions(n); });
    return table.finish();
}

} // namespace

bool IdentityReport::passed() const
{
    return std::all_of(cells.begin(), cells.end(), [](const VerifyCell& c) { return c.pass; });
}

std::vector<std::int64_t> IdentityReport::failing_n() const
{
    std::vector<std::int64_t> out;
    for (const auto& c : cells) {
        if (!c.pass) {
            out.push_back(c.n);
        }
    }
    return out;
}

std::vector<IdentityId> all_identity_ids()
{
    return {IdentityId::even_k, IdentityId::odd_k,  IdentityId::pod, IdentityId::overpartition,
            IdentityId::pofn,   IdentityId::pofn2,  IdentityId::general_ab, IdentityId::p3,
            IdentityId::r,      IdentityId::s,      IdentityId::rr,  IdentityId::jacobi,
            IdentityId::triple_product, IdentityId::mobius};
}

std::string to_string(IdentityId id)
{
    switch (id) {
    case IdentityId::even_k:
        return "even-k";
    case IdentityId::odd_k:
        return "odd-k";
    case IdentityId::pod:
        return "pod";
    case IdentityId::overpartition:
        return "overpartition";
    case IdentityId::pofn:
        return "pofn";
    case IdentityId::pofn2:
        return "pofn2";
    case IdentityId::general_ab:
        return "general-ab";
    case IdentityId::p3:
        return "p3";
    case IdentityId::r:
        return "r";
    case IdentityId::s:
        return "s";
    case IdentityId::rr:
        return "rr";
    case IdentityId::jacobi:
        return "jacobi";
    case IdentityId::triple_product:
        return "triple-product";
    case IdentityId::mobius:
        return "mobius";
    }
    return "unknown";
}

IdentityId parse_identity_id(const std::string& name)
{
    for (const auto id : all_identity_ids()) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw InvalidArgument("unknown identity '" + name + "'");
}

std::string to_string(OracleMode mode)
{
    switch (mode) {
    case OracleMode::brute:
        return "brute";
    case OracleMode::dp:
        return "dp";
    case OracleMode::both:
        return "both";
    }
    return "unknown";
}

OracleMode parse_oracle_mode(const std::string& name)
{
    for (const auto mode : {OracleMode::brute, OracleMode::dp, OracleMode::both}) {
        if (to_string(mode) == name) {
            return mode;
        }
    }
    throw InvalidArgument("unknown oracle mode '" + name + "'");
}

IdentityReport verify_even_k(int k, const VerifyOptions& o)
{
    if (k < 6 || k % 2 != 0) {
        throw InvalidArgument("even-k identity requires even k >= 6, got " + std::to_string(k));
    }
    CellTable table(IdentityId::even_k, o, 0, o.composition_brute_max);
    table.parameter("k", k);
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("partitions_dp", counts_ps(residue_set_sk(k, set_bound(N)), N));
    table.dp("product_gf", [&] { return from_series(named_gf(NamedSeries::p_sk, order, k)); });
    table.dp("reciprocal_theta", [&] { return alternate(from_series(series_recip(theta_sum({1, k - 3, 1, 1}, order)))); });
    composition_paths(table, polygonal_set(k, set_bound(N)), stat_weight(StatKind::length), true,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify_odd_k(int k, const VerifyOptions& o)
{
    if (k < 5 || k % 2 == 0) {
        throw InvalidArgument("odd-k identity requires odd k >= 5, got " + std::to_string(k));
    }
    CellTable table(IdentityId::odd_k, o, 0, o.composition_brute_max);
    table.parameter("k", k);
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("partitions_dp", counts_ps(residue_set_sk(k, set_bound(N)), N));
    if (k == 5) {
        table.dp("unrestricted_partitions_dp", [&] { return counts_ps(naturals_set(set_bound(N)), N); });
    }
    table.dp("product_gf", [&] { return from_series(named_gf(NamedSeries::p_sk, order, k)); });
    table.dp("reciprocal_theta", [&] { return alternate(from_series(series_recip(theta_sum({1, k - 3, 1, -1}, order)))); });
    composition_paths(table, polygonal_set(k, set_bound(N)), stat_weight(StatKind::star_length, k), true,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify_general_ab(int alpha, int beta, const VerifyOptions& o)
{
    const PartSet t = general_t_set(alpha, beta, set_bound(o.max_n));  // validates alpha, beta
    CellTable table(IdentityId::general_ab, o, 0, o.composition_brute_max);
    table.parameter("alpha", alpha);
    table.parameter("beta", beta);
    const auto N = table.last_n();
    const auto order = static_cast<std::size_t>(N);
    table.reference("partitions_dp", counts_ps(t, N));
    table.dp("reciprocal_product", [&] { return from_series(series_recip(theta_sum({alpha, beta, -1, -1}, order))); });
    table.dp("reciprocal_theta",
             [&] { return alternate(from_series(series_recip(theta_sum({alpha, beta, 1, 1}, order)))); });
    composition_paths(table, general_r_set(alpha, beta, set_bound(N)), stat_weight(StatKind::length), true,
                      o.composition_brute_max);
    return table.finish();
}

IdentityReport verify(IdentityId id, const VerifyOptions& options)
{
    if (options.max_n < 0) {
        throw InvalidArgument("max_n must be >= 0");
    }
    switch (id) {
    case IdentityId::even_k:
        return verify_even_k(options.k, options);
    case IdentityId::odd_k:
        return verify_odd_k(options.k, options);
    case IdentityId::pod:
        return verify_pod(options);
    case IdentityId::overpartition:
        return verify_overpartition(options);
    case IdentityId::pofn:
        return verify_pofn(options);
    case IdentityId::pofn2:
        return verify_pofn2(options);
    case IdentityId::general_ab:
        return verify_general_ab(options.alpha, options.beta, options);
    case IdentityId::p3:
        return verify_p3(options);
    case IdentityId::r:
        return verify_r(options);
    case IdentityId::s:
        return verify_s(options);
    case IdentityId::rr:
        return verify_rr(options);
    case IdentityId::jacobi:
        return verify_jacobi(options);
    case IdentityId::triple_product:
        return verify_triple_product(options);
    case IdentityId::mobius:
        return verify_mobius(options);
    }
    throw InvalidArgument("unknown identity");
}

std::vector<IdentityReport> verify_all(const VerifyOptions& options)
{
    std::vector<IdentityReport> reports;
    for (const IdentityId id : all_identity_ids()) {
        VerifyOptions o = options;
        switch (id) {
        case IdentityId::even_k:
            for (const int k : {6, 8, 10, 12}) {
                reports.push_back(verify_even_k(k, o));
            }
            break;
        case IdentityId::odd_k:
            for (const int k : {5, 7, 9}) {
                reports.push_back(verify_odd_k(k, o));
            }
            break;
        case IdentityId::general_ab:
            for (const auto& [alpha, beta] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 4}, std::pair{3, 5}}) {
                reports.push_back(verify_general_ab(alpha, beta, o));
            }
            break;
        case IdentityId::triple_product:
            for (int alpha = 1; alpha <= 4; ++alpha) {
                for (int beta = 1; beta <= 4; ++beta) {
                    for (const int sa : {1, -1}) {
                        for (const int sb : {1, -1}) {
                            o.alpha = alpha;
                            o.beta = beta;
                            o.sign_a = sa;
                            o.sign_b = sb;
                            reports.push_back(verify(id, o));
                        }
                    }
                }
            }
            break;
        default:
            reports.push_back(verify(id, o));
        }
    }
    return reports;
}

} // namespace compoq
