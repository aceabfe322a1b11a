#include "compoq/asymptotics.hpp"

#include <algorithm>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "compoq/errors.hpp"
#include "compoq/partitions.hpp"
#include "compoq/partsets.hpp"
#include "compoq/qgen.hpp"

namespace compoq {

namespace {

Real to_real(const Integer& value) { return Real(value.get_str()); }

void require_k(AsymptoticId id, int k)
{
    if (id == AsymptoticId::p_sk && k < 5) {
        throw InvalidArgument("p_sk asymptotic requires k >= 5, got " + std::to_string(k));
    }
}

} // namespace

AsymptoticId parse_asymptotic_id(const std::string& name)
{
    for (const auto id : {AsymptoticId::p_sk, AsymptoticId::p3, AsymptoticId::r, AsymptoticId::s, AsymptoticId::rr}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw InvalidArgument("unknown asymptotic formula '" + name + "'");
}

std::string to_string(AsymptoticId id)
{
    switch (id) {
    case AsymptoticId::p_sk:
        return "p-sk";
    case AsymptoticId::p3:
        return "p3";
    case AsymptoticId::r:
        return "r";
    case AsymptoticId::s:
        return "s";
    case AsymptoticId::rr:
        return "rr";
    }
    return "unknown";
}

Real asymptotic_value(AsymptoticId id, std::int64_t n, int k)
{
    using boost::multiprecision::exp;
    using boost::multiprecision::pow;
    using boost::multiprecision::sin;
    using boost::multiprecision::sqrt;

    if (n < 1) {
        throw InvalidArgument("asymptotic formulas need n >= 1");
    }
    require_k(id, k);
    const Real pi = boost::math::constants::pi<Real>();
    const Real x(n);
    switch (id) {
    case AsymptoticId::p_sk: {
        const Real m(k - 2);
        return exp(pi * sqrt(2 * x / m)) / (8 * x * sin(pi / m));
    }
    case AsymptoticId::p3:
        return exp(pi * sqrt(2 * x)) / (8 * sqrt(Real(2)) * pow(x, Real(1.5)));
    case AsymptoticId::r:
        return exp(2 * pi * sqrt(2 * x / 3)) / (12 * sqrt(Real(2)) * pow(x, Real(1.5)));
    case AsymptoticId::s:
        return exp(2 * pi * sqrt(x / 3)) / (6 * pow(x, Real(1.5)));
    case AsymptoticId::rr: {
        const Real constant = 4 * pow(Real(15), Real(0.25)) * sqrt((5 - sqrt(Real(5))) / 8);
        return exp(2 * pi * sqrt(x / 15)) / (constant * pow(x, Real(0.75)));
    }
    }
    throw InvalidArgument("unknown asymptotic formula");
}

std::vector<Integer> exact_values(AsymptoticId id, std::int64_t max_n, int k)
{
    require_k(id, k);
    if (max_n < 0) {
        throw InvalidArgument("max_n must be >= 0");
    }
    if (max_n > kMaxExactN) {
        throw Infeasible("exact values limited to n <= " + std::to_string(kMaxExactN));
    }
    const auto order = static_cast<std::size_t>(max_n);
    auto from_series = [](const TruncatedSeries& s) { return std::vector<Integer>(s.coeffs().begin(), s.coeffs().end()); };
    switch (id) {
    case AsymptoticId::p_sk:
        return counts_ps(residue_set_sk(k, std::max<std::int64_t>(max_n, 1)), max_n);
    case AsymptoticId::p3:
        return counts_colored(max_n, 3);
    case AsymptoticId::r:
        return from_series(named_gf(NamedSeries::r, order));
    case AsymptoticId::s:
        return from_series(named_gf(NamedSeries::s, order));
    case AsymptoticId::rr:
        return counts_rr(max_n);
    }
    throw InvalidArgument("unknown asymptotic formula");
}

std::vector<RatioRow> ratio_report(AsymptoticId id, std::span<const std::int64_t> ns, int k)
{
    if (ns.empty()) {
        return {};
    }
    const std::int64_t max_n = *std::max_element(ns.begin(), ns.end());
    if (*std::min_element(ns.begin(), ns.end()) < 1) {
        throw InvalidArgument("ratio report needs n >= 1");
    }
    const auto exact = exact_values(id, max_n, k);
    std::vector<RatioRow> rows;
    rows.reserve(ns.size());
    for (const auto n : ns) {
        RatioRow row;
        row.n = n;
        row.exact = exact[static_cast<std::size_t>(n)];
        row.asymptotic = asymptotic_value(id, n, k);
        row.ratio = to_real(row.exact) / row.asymptotic;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_significant(const Real& value, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << value;
    return os.str();
}

} // namespace compoq
