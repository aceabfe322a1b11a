#ifndef COMPOQ_IDENTITY_VERIFIER_HPP
#define COMPOQ_IDENTITY_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "compoq/integer.hpp"

namespace compoq {

enum class IdentityId {
    even_k,          // p_{S_k}(n) = (-1)^n sum_{C_{P_k}} (-1)^l, k even
    odd_k,           // p_{S_k}(n) = (-1)^n sum_{C_{P_k}} (-1)^{l*_k}, k odd
    pod,             // pod(n) = (-1)^n sum_{C_{P_3}} (-1)^l
    overpartition,   // pbar(n) = (-1)^n sum_{C_{P_4}} (-2)^l
    pofn,            // p(n) = (-1)^n sum_{C_{P_5}} (-1)^{l*_5}
    pofn2,           // p(n) = sum_{C_{P_5}} (-1)^{l-hat}
    general_ab,      // p_{T_ab}(n) = (-1)^n sum_{C_{R*_ab}} (-1)^l
    p3,              // three-colored partitions over C_{P_3}
    r,               // r(n) over C_{P_5}
    s,               // s(n) over C_U
    rr,              // rr(n): residue count, reciprocal, Cauchy product
    jacobi,          // (q;q)^3 = sum (-1)^n (2n+1) q^{n(n+1)/2}
    triple_product,  // theta sum = theta product
    mobius           // mu(n) = sum over ordered factorizations of (-1)^l
};

std::string to_string(IdentityId id);
IdentityId parse_identity_id(const std::string& name);
std::vector<IdentityId> all_identity_ids();

enum class OracleMode { brute, dp, both };

std::string to_string(OracleMode mode);
OracleMode parse_oracle_mode(const std::string& name);

struct VerifyOptions {
    std::int64_t max_n = 60;
    OracleMode oracle = OracleMode::both;
    int k = 0;
    int alpha = 0;
    int beta = 0;
    int sign_a = 1;  // triple_product only
    int sign_b = 1;
    std::int64_t composition_brute_max = 25;
    std::int64_t enumeration_max = 30;          // pod, overpartition, gap-condition
    std::int64_t colored_enumeration_max = 15;  // p3, r, s decorated objects
    std::int64_t factorization_brute_max = 500;
};

struct PathValue {
    std::string path;
    Integer value;
};

/// One n: the value from every computation path that ran at that n.
struct VerifyCell {
    std::int64_t n = 0;
    std::vector<PathValue> values;
    bool pass = false;
};

struct IdentityReport {
    IdentityId id = IdentityId::even_k;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    std::string oracle;
    std::vector<VerifyCell> cells;

    bool passed() const;
    std::vector<std::int64_t> failing_n() const;
};

/// Checks one identity on every n in range. Throws InvalidArgument on bad
/// parameters (k parity, alpha/beta order or parity, negative max_n).
IdentityReport verify(IdentityId id, const VerifyOptions& options);

IdentityReport verify_even_k(int k, const VerifyOptions& options);
IdentityReport verify_odd_k(int k, const VerifyOptions& options);
IdentityReport verify_general_ab(int alpha, int beta, const VerifyOptions& options);

/// Every identity over its standard parameter sets: even k in {6,8,10,12},
/// odd k in {5,7,9}, (alpha,beta) in {(1,3),(1,5),(2,4),(3,5)}, triple
/// products for alpha, beta <= 4 with all sign choices.
std::vector<IdentityReport> verify_all(const VerifyOptions& options);

} // namespace compoq

#endif
