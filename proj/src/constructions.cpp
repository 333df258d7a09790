#include "lrc/constructions.hpp"

#include "lrc/bounds.hpp"
#include "lrc/errors.hpp"

namespace lrc {

namespace {

// Kronecker product; the generator of a product code is the product of the
// factor generators.
Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            Elem factor = a.at(ia, ja);
            if (factor == 0) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out.at(ia * b.rows() + ib, ja * b.cols() + jb) =
                        f.mul(factor, b.at(ib, jb));
        }
    return out;
}

}  // namespace

Construction parity_product_code(int r, int t, std::uint64_t guard) {
    if (r < 1 || t < 1) throw PreconditionError("parity_product_code requires r >= 1, t >= 1");
    Field gf2 = Field::of_order(2);

    // Single-parity-check generator [I_r | 1]: r message symbols plus their sum.
    Matrix spc(gf2, static_cast<std::size_t>(r), static_cast<std::size_t>(r) + 1);
    for (int i = 0; i < r; ++i) {
        spc.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
        spc.at(static_cast<std::size_t>(i), static_cast<std::size_t>(r)) = 1;
    }

    std::uint64_t length = 1;
    for (int axis = 0; axis < t; ++axis) {
        length *= static_cast<std::uint64_t>(r) + 1;
        if (length > guard)
            throw GuardError("parity_product_code: length (r+1)^t exceeds guard " +
                             std::to_string(guard));
    }

    Matrix generator = spc;
    for (int axis = 1; axis < t; ++axis) generator = kronecker(gf2, generator, spc);
    LinearCode code = LinearCode::from_generator(gf2, generator);

    // Coordinate (c_1, ..., c_t), each in [1, r+1], maps to
    // 1 + sum (c_j - 1) (r+1)^(t-j): lexicographic, row-major for t = 2.
    int side = r + 1;
    int n = code.length();
    RecoveringFamily family;
    family.r = r;
    family.t = t;
    family.sets.resize(static_cast<std::size_t>(n));
    std::vector<int> digits(static_cast<std::size_t>(t), 0);  // c_j - 1
    for (int v = 1; v <= n; ++v) {
        std::vector<CoordSet> per_coord;
        per_coord.reserve(static_cast<std::size_t>(t));
        // stride of axis j (1-based) is (r+1)^(t-j)
        for (int axis = 0; axis < t; ++axis) {
            int stride = 1;
            for (int below = axis + 1; below < t; ++below) stride *= side;
            std::vector<int> line;
            line.reserve(static_cast<std::size_t>(r));
            int own = digits[static_cast<std::size_t>(axis)];
            for (int c = 0; c < side; ++c)
                if (c != own) line.push_back(v + (c - own) * stride);
            per_coord.emplace_back(std::move(line));
        }
        family.sets[static_cast<std::size_t>(v - 1)] = std::move(per_coord);
        // advance mixed-radix counter, last digit fastest
        for (int pos = t - 1; pos >= 0; --pos) {
            if (++digits[static_cast<std::size_t>(pos)] < side) break;
            digits[static_cast<std::size_t>(pos)] = 0;
        }
    }
    family.validate(n);
    return Construction{std::move(code), std::move(family)};
}

Construction shortened_hamming_6_3() {
    Field gf2 = Field::of_order(2);
    Matrix parity = Matrix::from_rows(gf2, {
                                               {0, 0, 0, 1, 1, 1},
                                               {0, 1, 1, 0, 0, 1},
                                               {1, 0, 1, 0, 1, 0},
                                           });
    LinearCode code = LinearCode::from_parity(gf2, 6, 3, parity);
    RecoveringFamily family;
    family.r = 2;
    family.t = 2;
    family.sets.resize(6);
    for (int i = 1; i <= 6; ++i) {
        auto sets = find_disjoint_recovering_sets(code, i, 2, 2);
        if (!sets)
            throw InternalError("shortened Hamming code lost its recovering sets");
        family.sets[static_cast<std::size_t>(i - 1)] = *sets;
    }
    family.validate(6);
    return Construction{std::move(code), std::move(family)};
}

RateGapReport rate_gap_report(int r, int t) {
    if (r < 1 || t < 1) throw PreconditionError("rate_gap_report requires r >= 1, t >= 1");
    Rational construction =
        rational_pow(make_rational(r, r + 1), static_cast<unsigned long>(t));
    Rational bound = rate_bound(r, t);
    return RateGapReport{construction, bound, bound - construction};
}

}  // namespace lrc
