#include <doctest.h>

#include <random>

#include "lrc/errors.hpp"
#include "lrc/field.hpp"

using namespace lrc;

TEST_CASE("field construction covers the supported orders") {
    Field f2 = Field::of_order(2);
    CHECK(f2.characteristic() == 2);
    CHECK(f2.degree() == 1);

    Field f4 = Field::of_order(4);
    CHECK(f4.characteristic() == 2);
    CHECK(f4.degree() == 2);
    CHECK(f4.reduction_polynomial() == 0b111);  // x^2 + x + 1

    CHECK(Field::of_order(257).order() == 257);
    CHECK(Field::of_order(256).reduction_polynomial() == 0b100011011);
    CHECK(Field::of_order(3).degree() == 1);

    CHECK_THROWS_AS(Field::of_order(6), UnsupportedOrderError);
    CHECK_THROWS_AS(Field::of_order(9), UnsupportedOrderError);    // only binary extensions
    CHECK_THROWS_AS(Field::of_order(263), UnsupportedOrderError);  // prime too large
    CHECK_THROWS_AS(Field::of_order(512), UnsupportedOrderError);
    CHECK_THROWS_AS(Field::of_order(0), UnsupportedOrderError);
    CHECK_THROWS_AS(Field::of_order(1), UnsupportedOrderError);
    try {
        Field::of_order(6);
    } catch (const UnsupportedOrderError& e) {
        CHECK(std::string(e.what()).find("6") != std::string::npos);
    }
}

namespace {

void check_axioms_all_pairs(const Field& f) {
    unsigned q = f.order();
    for (Elem a = 0; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (Elem c : {Elem(0), Elem(1), Elem(static_cast<Elem>(q - 1))})
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

void check_axioms_sampled(const Field& f, int samples) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<unsigned> dist(0, f.order() - 1);
    for (int i = 0; i < samples; ++i) {
        Elem a = static_cast<Elem>(dist(rng));
        Elem b = static_cast<Elem>(dist(rng));
        Elem c = static_cast<Elem>(dist(rng));
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

}  // namespace

TEST_CASE("field axioms hold on every pair for small orders, sampled for large") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 11u, 13u, 16u})
        check_axioms_all_pairs(Field::of_order(q));
    for (unsigned q : {32u, 64u, 128u, 251u, 256u, 257u})
        check_axioms_sampled(Field::of_order(q), 400);
}

TEST_CASE("division by zero is rejected") {
    Field f = Field::of_order(8);
    CHECK_THROWS_AS(f.inv(0), DomainError);
}

TEST_CASE("rank examples") {
    Field f2 = Field::of_order(2);
    CHECK(Matrix::identity(f2, 3).rank() == 3);

    Matrix zero(f2, 2, 4);
    CHECK(zero.rank() == 0);
    CHECK(zero.nullspace_basis().rows() == 4);

    // hand row-reduction gives three pivots for this parity-check matrix
    Matrix parity = Matrix::from_rows(f2, {
                                              {0, 0, 0, 1, 1, 1},
                                              {0, 1, 1, 0, 0, 1},
                                              {1, 0, 1, 0, 1, 0},
                                          });
    CHECK(parity.rank() == 3);
}

TEST_CASE("rref is idempotent and preserves rank; nullspace has the right shape") {
    std::mt19937 rng(777);
    for (unsigned q : {2u, 4u, 5u}) {
        Field f = Field::of_order(q);
        std::uniform_int_distribution<unsigned> dist(0, q - 1);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t rows = 1 + rng() % 5;
            std::size_t cols = 1 + rng() % 6;
            Matrix m(f, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.at(i, j) = static_cast<Elem>(dist(rng));

            Matrix r = m.rref();
            CHECK(r.rref() == r);
            CHECK(m.rank() == r.rank());
            CHECK(m.rank() <= std::min(rows, cols));

            Matrix ns = m.nullspace_basis();
            CHECK(ns.rows() == cols - m.rank());
            if (ns.rows() > 0) {
                CHECK(m.multiply(ns.transpose()).is_zero());
                CHECK(ns.rank() == ns.rows());
            }
        }
    }
}

TEST_CASE("matrix shape errors") {
    Field f2 = Field::of_order(2);
    CHECK_THROWS_AS(Matrix::from_rows(f2, {{0, 1}, {1}}), PreconditionError);
    CHECK_THROWS_AS(Matrix::from_rows(f2, {{0, 2}}), PreconditionError);
    Matrix a(f2, 2, 3), b(f2, 2, 3);
    CHECK_THROWS_AS(a.multiply(b), PreconditionError);
}
