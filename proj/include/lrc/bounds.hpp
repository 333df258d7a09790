#pragma once

#include <optional>
#include <string>

#include "lrc/json.hpp"
#include "lrc/rational.hpp"

namespace lrc {

/// Rate bound for a single recovering set of size r: r/(r+1).
Rational rate_bound_t1(long long r);

/// Distance bound for a single recovering set: n - k - ceil(k/r) + 2.
long long distance_bound_t1(long long n, long long k, long long r);

/// Rate bound for t disjoint recovering sets of size r:
/// 1 / prod_{j=1..t} (1 + 1/(jr)), exact.
Rational rate_bound(long long r, long long t);

/// Distance bound for t disjoint recovering sets of size r:
/// n - sum_{i=0..t} floor((k-1)/r^i).
long long distance_bound(long long n, long long k, long long r, long long t);

/// Probability that a vertex gets colored under a uniform random permutation:
/// sum_{j=1..t} (-1)^(j-1) C(t,j)/(jr+1), cross-checked exactly against
/// 1 - 1/prod(1+1/(jr)). Throws InternalError if the two forms disagree.
Rational coloring_probability(long long r, long long t);

struct SandwichCheck {
    bool lower_ok;
    bool upper_ok;
    Rational p_to_r;  // P^r where P = prod(1+1/(jr))
};

/// Verifies (t+1) <= P^r <= (t+1)(1+1/r)^r by exact exponentiation.
SandwichCheck rroot_sandwich(long long r, long long t);

/// Expansion constant e_t = (r^(t+1)-1)/(r^(t+1)-r^t), checked against
/// sum_{i=0..t} r^(-i). Throws DomainError for r = 1 (zero denominator).
Rational expansion_constant(long long r, long long t);

/// Checks floor(m/r^t) r^t e_t + sum_{i<t} alpha_i r^i e_i == sum_{i=0..t} floor(m/r^i)
/// where alpha_i are the base-r digits of m.
bool base_r_identity_check(long long m, long long r, long long t);

/// Bound values for one parameter set, optionally compared against a code's
/// achieved rate and distance.
struct BoundReport {
    std::optional<long long> n;
    std::optional<long long> k;
    long long r = 0;
    long long t = 0;
    Rational rate_bound_value;
    Rational rate_bound_t1_value;
    std::optional<long long> distance_bound_value;
    std::optional<long long> distance_bound_t1_value;
    std::optional<Rational> achieved_rate;
    std::optional<long long> achieved_distance;
    std::optional<bool> meets_rate_bound_with_equality;
    std::optional<bool> meets_distance_bound_with_equality;

    Json to_json() const;
    std::string to_text() const;
};

BoundReport make_bound_report(std::optional<long long> n, std::optional<long long> k,
                              long long r, long long t,
                              std::optional<long long> achieved_distance = std::nullopt);

}  // namespace lrc
