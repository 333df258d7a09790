#pragma once

#include "lrc/code.hpp"
#include "lrc/rational.hpp"
#include "lrc/recovery.hpp"

namespace lrc {

struct Construction {
    LinearCode code;
    RecoveringFamily family;
};

/// t-fold product of the binary (r+1, r) single-parity-check code: length
/// (r+1)^t, dimension r^t, rate (r/(r+1))^t. Coordinates are t-tuples over
/// [1, r+1] in lexicographic (row-major) order; each coordinate's t recovering
/// sets are the axis-aligned lines through it, one per axis.
Construction parity_product_code(int r, int t, std::uint64_t guard = kEnumerationGuard);

/// The [6, 3] binary code with parity-check rows (0,0,0,1,1,1), (0,1,1,0,0,1),
/// (1,0,1,0,1,0), together with its two disjoint size-2 recovering sets per
/// coordinate (lexicographic-first choice).
Construction shortened_hamming_6_3();

struct RateGapReport {
    Rational construction_rate;  // (r/(r+1))^t
    Rational bound;              // rate_bound(r, t)
    Rational gap;                // bound - construction_rate
};

RateGapReport rate_gap_report(int r, int t);

}  // namespace lrc
