#include <doctest.h>

#include "lrc/bounds.hpp"
#include "lrc/errors.hpp"

using namespace lrc;

TEST_CASE("single recovering set rate bound") {
    CHECK(rate_bound_t1(3) == make_rational(3, 4));
    CHECK(rate_bound_t1(1) == make_rational(1, 2));
    CHECK(rate_bound_t1(2) == make_rational(2, 3));
    CHECK_THROWS_AS(rate_bound_t1(0), PreconditionError);
}

TEST_CASE("single recovering set distance bound") {
    CHECK(distance_bound_t1(6, 3, 2) == 3);
    CHECK(distance_bound_t1(10, 4, 2) == 6);
    // r >= k collapses to the Singleton bound
    CHECK(distance_bound_t1(10, 4, 5) == 10 - 4 + 1);
    CHECK(distance_bound_t1(10, 4, 4) == 10 - 4 + 1);
    CHECK_THROWS_AS(distance_bound_t1(4, 5, 2), PreconditionError);
    CHECK_THROWS_AS(distance_bound_t1(4, 0, 2), PreconditionError);
}

TEST_CASE("availability rate bound") {
    CHECK(rate_bound(2, 2) == make_rational(8, 15));
    // 2r^2 / ((r+1)(2r+1)) at r=2
    CHECK(rate_bound(2, 2) == make_rational(2 * 2 * 2, (2 + 1) * (2 * 2 + 1)));
    CHECK(rate_bound(1, 1) == make_rational(1, 2));
    for (long long r = 1; r <= 100; ++r) CHECK(rate_bound(r, 1) == rate_bound_t1(r));
}

TEST_CASE("availability distance bound") {
    CHECK(distance_bound(6, 3, 2, 2) == 3);
    CHECK(distance_bound(9, 4, 2, 2) == 5);
    CHECK(distance_bound(12, 1, 2, 2) == 12);  // k = 1: every floor term vanishes
    // t = 1 agrees with the ceiling form on a small sweep
    for (long long n = 2; n <= 20; ++n)
        for (long long k = 2; k <= n; ++k)
            for (long long r = 1; r < k; ++r)
                CHECK(distance_bound(n, k, r, 1) == distance_bound_t1(n, k, r));
    // nonincreasing in t and in k
    for (long long t = 1; t <= 6; ++t)
        CHECK(distance_bound(20, 7, 2, t + 1) <= distance_bound(20, 7, 2, t));
    for (long long k = 1; k < 20; ++k)
        CHECK(distance_bound(20, k + 1, 2, 2) <= distance_bound(20, k, 2, 2));
}

TEST_CASE("coloring probability forms agree and complement the rate bound") {
    CHECK(coloring_probability(2, 1) == make_rational(1, 3));
    CHECK(coloring_probability(2, 2) == make_rational(7, 15));
    CHECK(coloring_probability(1, 1) == make_rational(1, 2));
    for (long long r = 1; r <= 12; ++r)
        for (long long t = 1; t <= 12; ++t)
            CHECK(1 - coloring_probability(r, t) == rate_bound(r, t));
}

TEST_CASE("product sandwich by exact exponentiation") {
    SandwichCheck c23 = rroot_sandwich(2, 3);
    CHECK(c23.lower_ok);
    CHECK(c23.upper_ok);
    CHECK(c23.p_to_r == make_rational(1225, 256));

    // at r = 1 the product telescopes to exactly t + 1
    for (long long t = 1; t <= 10; ++t) {
        SandwichCheck c = rroot_sandwich(1, t);
        CHECK(c.lower_ok);
        CHECK(c.upper_ok);
        CHECK(c.p_to_r == make_rational(t + 1));
    }

    SandwichCheck c51 = rroot_sandwich(5, 1);
    CHECK(c51.p_to_r == make_rational(7776, 3125));
    CHECK(c51.lower_ok);
    CHECK(c51.upper_ok);
}

TEST_CASE("expansion constants") {
    for (long long r = 2; r <= 6; ++r) CHECK(expansion_constant(r, 0) == 1);
    CHECK(expansion_constant(2, 2) == make_rational(7, 4));
    CHECK(expansion_constant(2, 1) == make_rational(3, 2));
    CHECK_THROWS_AS(expansion_constant(1, 2), DomainError);
    for (long long r = 2; r <= 5; ++r)
        for (long long t = 1; t <= 8; ++t)
            CHECK(expansion_constant(r, t) ==
                  expansion_constant(r, t - 1) +
                      make_rational(BigInt(1), big_pow(to_big(r), static_cast<unsigned long>(t))));
}

TEST_CASE("base-r digit identity") {
    CHECK(base_r_identity_check(5, 2, 2));
    CHECK(base_r_identity_check(0, 3, 4));
    for (long long r = 2; r <= 5; ++r)
        for (long long t = 0; t <= 5; ++t) {
            long long rt = 1;
            for (long long i = 0; i < t; ++i) rt *= r;
            CHECK(base_r_identity_check(rt, r, t));  // single-digit case
        }
    for (long long m = 0; m <= 200; ++m)
        for (long long r = 2; r <= 4; ++r)
            for (long long t = 0; t <= 5; ++t) CHECK(base_r_identity_check(m, r, t));
}

TEST_CASE("bound report fields and rendering") {
    BoundReport rep = make_bound_report(6, 3, 2, 2, 3);
    CHECK(rep.distance_bound_value == 3);
    CHECK(rep.rate_bound_value == make_rational(8, 15));
    CHECK(rep.meets_distance_bound_with_equality == true);
    CHECK(rep.meets_rate_bound_with_equality == false);  // 1/2 < 8/15
    CHECK(*rep.achieved_rate == make_rational(1, 2));

    Json j = rep.to_json();
    CHECK(j["rate_bound"] == "8/15");
    CHECK(j["distance_bound"] == 3);
    CHECK(j["meets_distance_bound_with_equality"] == true);

    std::string text = rep.to_text();
    CHECK(text.find("distance bound") != std::string::npos);
    CHECK(text.find("8/15") != std::string::npos);

    BoundReport rate_only = make_bound_report(std::nullopt, std::nullopt, 3, 2);
    CHECK(!rate_only.distance_bound_value);
    CHECK(rate_only.rate_bound_t1_value == make_rational(3, 4));
}
