#include "lrc/bounds.hpp"

#include <cstdio>
#include <sstream>

#include "lrc/errors.hpp"

namespace lrc {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw PreconditionError(what);
}

// prod_{j=1..t} (1 + 1/(jr)) = prod (jr+1)/(jr)
Rational availability_product(long long r, long long t) {
    Rational p = 1;
    for (long long j = 1; j <= t; ++j)
        p *= make_rational(j * r + 1, j * r);
    return p;
}

std::string approx(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", to_double(r));
    return buf;
}

}  // namespace

Rational rate_bound_t1(long long r) {
    require(r >= 1, "rate_bound_t1 requires r >= 1");
    return make_rational(r, r + 1);
}

long long distance_bound_t1(long long n, long long k, long long r) {
    require(r >= 1, "distance_bound_t1 requires r >= 1");
    require(1 <= k && k <= n, "distance_bound_t1 requires 1 <= k <= n");
    long long ceil_k_r = (k + r - 1) / r;
    return n - k - ceil_k_r + 2;
}

Rational rate_bound(long long r, long long t) {
    require(r >= 1 && t >= 1, "rate_bound requires r, t >= 1");
    return 1 / availability_product(r, t);
}

long long distance_bound(long long n, long long k, long long r, long long t) {
    require(r >= 1 && t >= 1, "distance_bound requires r, t >= 1");
    require(1 <= k && k <= n, "distance_bound requires 1 <= k <= n");
    BigInt sum = 0;
    BigInt power = 1;
    for (long long i = 0; i <= t; ++i) {
        sum += to_big(k - 1) / power;
        power *= static_cast<long>(r);
    }
    return n - sum.get_si();
}

Rational coloring_probability(long long r, long long t) {
    require(r >= 1 && t >= 1, "coloring_probability requires r, t >= 1");
    Rational alternating = 0;
    for (long long j = 1; j <= t; ++j) {
        Rational term = make_rational(binomial(static_cast<unsigned long>(t),
                                               static_cast<unsigned long>(j)),
                                      to_big(j * r + 1));
        alternating += (j % 2 == 1) ? term : -term;
    }
    Rational product_form = 1 - 1 / availability_product(r, t);
    if (alternating != product_form)
        throw InternalError("coloring_probability: inclusion-exclusion and product forms disagree");
    return alternating;
}

SandwichCheck rroot_sandwich(long long r, long long t) {
    require(r >= 1 && t >= 1, "rroot_sandwich requires r, t >= 1");
    Rational p = availability_product(r, t);
    Rational p_to_r = rational_pow(p, static_cast<unsigned long>(r));
    Rational lower = make_rational(t + 1);
    Rational upper = lower * rational_pow(make_rational(r + 1, r), static_cast<unsigned long>(r));
    return SandwichCheck{lower <= p_to_r, p_to_r <= upper, p_to_r};
}

Rational expansion_constant(long long r, long long t) {
    require(t >= 0, "expansion_constant requires t >= 0");
    if (r == 1)
        throw DomainError("expansion_constant undefined at r = 1: r^(t+1) - r^t = 0");
    require(r >= 2, "expansion_constant requires r >= 2");
    BigInt rt = big_pow(to_big(r), static_cast<unsigned long>(t));
    Rational closed = make_rational(rt * static_cast<long>(r) - 1, rt * static_cast<long>(r) - rt);
    Rational series = 0;
    for (long long i = 0; i <= t; ++i)
        series += make_rational(BigInt(1), big_pow(to_big(r), static_cast<unsigned long>(i)));
    if (closed != series)
        throw InternalError("expansion_constant: closed form and geometric series disagree");
    return closed;
}

bool base_r_identity_check(long long m, long long r, long long t) {
    require(m >= 0 && r >= 2 && t >= 0, "base_r_identity_check requires m >= 0, r >= 2, t >= 0");
    BigInt rt = big_pow(to_big(r), static_cast<unsigned long>(t));
    Rational lhs = make_rational(to_big(m) / rt * rt, BigInt(1)) * expansion_constant(r, t);
    long long rest = m;
    for (long long i = 0; i < t; ++i) {
        long long digit = rest % r;
        rest /= r;
        if (digit != 0)
            lhs += make_rational(digit) *
                   Rational(big_pow(to_big(r), static_cast<unsigned long>(i))) *
                   expansion_constant(r, i);
    }
    BigInt rhs = 0;
    BigInt power = 1;
    for (long long i = 0; i <= t; ++i) {
        rhs += to_big(m) / power;
        power *= static_cast<long>(r);
    }
    return lhs == Rational(rhs);
}

BoundReport make_bound_report(std::optional<long long> n, std::optional<long long> k,
                              long long r, long long t,
                              std::optional<long long> achieved_distance) {
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.t = t;
    rep.rate_bound_value = rate_bound(r, t);
    rep.rate_bound_t1_value = rate_bound_t1(r);
    if (n && k) {
        rep.distance_bound_value = distance_bound(*n, *k, r, t);
        rep.distance_bound_t1_value = distance_bound_t1(*n, *k, r);
    }
    // achieved values are filled in only when an actual code was supplied
    if (achieved_distance && n && k) {
        rep.achieved_rate = make_rational(*k, *n);
        rep.meets_rate_bound_with_equality = (*rep.achieved_rate == rep.rate_bound_value);
        rep.achieved_distance = achieved_distance;
        rep.meets_distance_bound_with_equality =
            (*achieved_distance == *rep.distance_bound_value);
    }
    // Reports are only built for codes whose availability was verified, so a
    // violated bound means a bug somewhere upstream.
    if (rep.achieved_rate && *rep.achieved_rate > rep.rate_bound_value)
        throw InternalError("achieved rate exceeds the rate bound");
    if (rep.achieved_distance && rep.distance_bound_value &&
        *rep.achieved_distance > *rep.distance_bound_value)
        throw InternalError("achieved distance exceeds the distance bound");
    return rep;
}

Json BoundReport::to_json() const {
    Json j;
    if (n) j["n"] = *n;
    if (k) j["k"] = *k;
    j["r"] = r;
    j["t"] = t;
    j["rate_bound"] = to_string(rate_bound_value);
    j["rate_bound_approx"] = to_double(rate_bound_value);
    j["rate_bound_t1"] = to_string(rate_bound_t1_value);
    if (distance_bound_value) j["distance_bound"] = *distance_bound_value;
    if (distance_bound_t1_value) j["distance_bound_t1"] = *distance_bound_t1_value;
    if (achieved_rate) j["achieved_rate"] = to_string(*achieved_rate);
    if (achieved_distance) j["achieved_distance"] = *achieved_distance;
    if (meets_rate_bound_with_equality)
        j["meets_rate_bound_with_equality"] = *meets_rate_bound_with_equality;
    if (meets_distance_bound_with_equality)
        j["meets_distance_bound_with_equality"] = *meets_distance_bound_with_equality;
    return j;
}

std::string BoundReport::to_text() const {
    std::ostringstream out;
    auto line = [&out](const std::string& label, const std::string& value) {
        out << label;
        for (std::size_t i = label.size(); i < 28; ++i) out << ' ';
        out << value << '\n';
    };
    if (n) line("n", std::to_string(*n));
    if (k) line("k", std::to_string(*k));
    line("r", std::to_string(r));
    line("t", std::to_string(t));
    line("rate bound", to_string(rate_bound_value) + " (~" + approx(rate_bound_value) + ")");
    line("rate bound (t=1)", to_string(rate_bound_t1_value));
    if (distance_bound_value) line("distance bound", std::to_string(*distance_bound_value));
    if (distance_bound_t1_value)
        line("distance bound (t=1)", std::to_string(*distance_bound_t1_value));
    if (achieved_rate) line("achieved rate", to_string(*achieved_rate));
    if (achieved_distance) line("achieved distance", std::to_string(*achieved_distance));
    if (meets_rate_bound_with_equality)
        line("rate bound met exactly", *meets_rate_bound_with_equality ? "yes" : "no");
    if (meets_distance_bound_with_equality)
        line("distance bound met exactly", *meets_distance_bound_with_equality ? "yes" : "no");
    return out.str();
}

}  // namespace lrc
