#ifndef COMPOQ_QGEN_HPP
#define COMPOQ_QGEN_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "compoq/power_series.hpp"

namespace compoq {

/// Ramanujan's f(a, b) with a = sign_a * q^alpha and b = sign_b * q^beta.
struct ThetaSpec {
    int alpha = 1;
    int beta = 1;
    int sign_a = 1;
    int sign_b = 1;

    void validate() const;
};

/// Bilateral sum over j of a^{j(j+1)/2} b^{j(j-1)/2}.
TruncatedSeries theta_sum(const ThetaSpec& spec, std::size_t order);

/// (-a, -b, ab; ab)_inf, the triple product side of the same function.
TruncatedSeries theta_product(const ThetaSpec& spec, std::size_t order);

/// ProductSpec of (-a, -b, ab; ab)_inf.
ProductSpec theta_product_spec(const ThetaSpec& spec);

enum class NamedSeries {
    partition,      // 1/(q;q)
    p_sk,           // 1/(q, q^{k-3}, q^{k-2}; q^{k-2})
    pod,            // 1/(q, q^3, q^4; q^4)
    pod_classical,  // (-q;q^2)/(q^2;q^2)
    overpartition,  // (-q;q)/(q;q)
    p3,             // 1/(q;q)^3
    r,              // (-q;q)^2/(q;q)^3
    s,              // (-q;q)/((q;q)(q^4;q^4)^2)
    rr              // 1/(q, q^4; q^5)
};

/// Product-side generating function. `k` is read only for p_sk (k >= 5).
TruncatedSeries named_gf(NamedSeries name, std::size_t order, int k = 0);

/// The ProductSpec behind named_gf.
ProductSpec named_gf_spec(NamedSeries name, int k = 0);

NamedSeries parse_named_series(const std::string& name);
std::string to_string(NamedSeries name);
std::vector<NamedSeries> all_named_series();

/// Sum side of the Jacobi identity: sum (-1)^n (2n+1) q^{n(n+1)/2}.
TruncatedSeries jacobi_cube(std::size_t order);

/// Sum side of (q;q)^5/(q^2;q^2)^2: sum over j of (1 - 6j) q^{j(3j-1)/2}.
TruncatedSeries r_sum_side(std::size_t order);

/// Sum side of (q;q)^2 (q^4;q^4)^2/(q^2;q^2): sum over j of (3j+1) q^{j(3j+2)}.
TruncatedSeries s_sum_side(std::size_t order);

/// f(-q^2, -q^3) = sum over j of (-1)^j q^{j(5j-1)/2}.
TruncatedSeries rr_theta_factor(std::size_t order);

/// The piecewise coefficient a_i of f(-q^2,-q^3): +1 when i = 10j^2 +- j,
/// -1 when i = 10j^2 +- 9j + 2 (j >= 0), else 0. Evaluated by scanning j.
int rr_piecewise_coefficient(std::int64_t i);

} // namespace compoq

#endif
