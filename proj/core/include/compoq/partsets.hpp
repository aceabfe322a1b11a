#ifndef COMPOQ_PARTSETS_HPP
#define COMPOQ_PARTSETS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace compoq {

// Values (a*j^2 + b*j) / d over the signed index j, filtered by an index rule.
// Every polygonal-type set in the library is one of these.
struct QuadraticFamily {
    enum class Index {
        nonzero,       // j in Z \ {0}
        all,           // j in Z (j = 0 gives 0 and is dropped anyway)
        positive,      // j >= 1
        even_nonzero,  // j even, j != 0
        mod4_zero_one  // j != 0 with j = 0 or 1 (mod 4)
    };

    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t d = 1;
    Index index = Index::nonzero;

    std::int64_t value(std::int64_t j) const { return (a * j * j + b * j) / d; }
    bool admits(std::int64_t j) const;
};

// n >= min_value with n mod modulus in residues.
struct ResidueFamily {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> residues;
    std::int64_t min_value = 1;
};

// A finite, explicitly listed set.
struct ExplicitFamily {
    std::vector<std::int64_t> values;
};

struct PrimeFamily {};

using PartSetRule = std::variant<QuadraticFamily, ResidueFamily, ExplicitFamily, PrimeFamily>;

/// A set of allowed parts, materialized as a sorted list up to a bound.
///
/// The list is generated from the rule; `contains` evaluates the rule
/// arithmetically and works for any value, including values above the bound.
class PartSet {
public:
    PartSet(std::string name, PartSetRule rule, std::int64_t bound);

    const std::string& name() const noexcept { return name_; }
    std::int64_t bound() const noexcept { return bound_; }
    const PartSetRule& rule() const noexcept { return rule_; }
    std::span<const std::int64_t> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(std::int64_t value) const;

    // True when the rule describes finitely many values (all listed).
    bool is_finite() const noexcept { return std::holds_alternative<ExplicitFamily>(rule_); }

    std::int64_t min_member() const;

    /// Same rule materialized to a different bound.
    PartSet with_bound(std::int64_t bound) const;

    friend bool operator==(const PartSet& lhs, const PartSet& rhs) {
        return lhs.members_ == rhs.members_ && lhs.bound_ == rhs.bound_;
    }

private:
    std::string name_;
    PartSetRule rule_;
    std::int64_t bound_;
    std::vector<std::int64_t> members_;
};

/// P_k: n((k-2)n +- (k-4))/2 for n >= 1.
PartSet polygonal_set(int k, std::int64_t bound);

/// P*_k for odd k >= 5: n((k-2)n - (k-4))/2 over nonzero n with n = 0, 1 (mod 4).
///
/// These are exactly the exponents carrying a + sign in f(q, -q^{k-3}).
PartSet polygonal_star_set(int k, std::int64_t bound);

/// S_k: n = 0, +-1 (mod k-2).
PartSet residue_set_sk(int k, std::int64_t bound);

/// Generalized pentagonal numbers with even index.
PartSet pentagonal_hat_set(std::int64_t bound);

/// R*_{alpha,beta}: j((alpha+beta)j + (alpha-beta))/2 over j in Z, zero dropped.
PartSet general_r_set(int alpha, int beta, std::int64_t bound);

/// T_{alpha,beta}: n = 0, +-alpha (mod alpha+beta).
PartSet general_t_set(int alpha, int beta, std::int64_t bound);

/// n(2n+1), n >= 1.
PartSet second_hexagonal_set(std::int64_t bound);

/// U: j(3j+2) over nonzero j.
PartSet u_set(std::int64_t bound);

PartSet naturals_set(std::int64_t bound);

/// N*: integers >= 2.
PartSet naturals_from_two_set(std::int64_t bound);

/// Parts = +-1 (mod 5).
PartSet rogers_ramanujan_set(std::int64_t bound);

PartSet prime_set(std::int64_t bound);

PartSet residue_set(std::string name, std::int64_t modulus, std::vector<std::int64_t> residues,
                    std::int64_t bound);

PartSet explicit_set(std::string name, std::vector<std::int64_t> values);

/// Parameters for constructing a set by name (CLI and report plumbing).
struct PartSetParams {
    int k = 0;
    int alpha = 0;
    int beta = 0;
};

/// Accepted names: polygonal, polygonal-star, sk, pentagonal-hat, r, t,
/// second-hexagonal, u, naturals, naturals-from-two, rr-residues, primes.
PartSet make_named_set(const std::string& name, const PartSetParams& params, std::int64_t bound);

std::vector<std::string> named_set_names();

} // namespace compoq

#endif
