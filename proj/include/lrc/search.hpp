#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/json.hpp"
#include "lrc/rational.hpp"

namespace lrc {

/// Subspaces of GF(q)^n of dimension k, i.e. the number of distinct [n, k]
/// codes. Enumerations refuse to start past this guard.
BigInt gaussian_binomial(int n, int k, unsigned q);

inline constexpr long long kSubspaceGuard = 10'000'000;

/// Streams every [n, k] code over GF(q) exactly once as its unique reduced
/// row-echelon generator matrix: pivot-column sets in lexicographic order,
/// free entries counting row-major with the first free position most
/// significant. State machine so searches can partition by pivot pattern.
class CodeEnumerator {
public:
    CodeEnumerator(int n, int k, unsigned q, long long guard = kSubspaceGuard);

    std::optional<Matrix> next();

    int pattern_count() const { return static_cast<int>(patterns_.size()); }
    /// Codes under one pivot pattern: q^(free entries).
    std::uint64_t pattern_size(int pattern) const;
    Matrix pattern_matrix(int pattern, std::uint64_t filling) const;

private:
    Field field_;
    int n_, k_;
    std::vector<std::vector<int>> patterns_;  // 0-based pivot columns, lex order
    int current_pattern_ = 0;
    std::uint64_t current_filling_ = 0;
};

struct OracleResult {
    std::optional<int> best_distance;       // absent when no code qualifies
    std::optional<Matrix> witness;          // first best code in enumeration order
    BigInt codes_searched;
    std::uint64_t codes_with_locality = 0;
};

/// Maximum minimum-distance over all [n, k] codes over GF(q) in which every
/// coordinate admits t disjoint recovering sets of size <= r. Deterministic
/// and independent of the worker count.
OracleResult max_distance_with_locality(int n, int k, unsigned q, int r, int t, int jobs = 1,
                                        long long guard = kSubspaceGuard);

struct SweepCell {
    int n, k, r, t;
    unsigned q;
    long long bound;
    std::optional<int> oracle;
    std::string flag;  // TIGHT | GAP | INFEASIBLE | GUARD
};

struct SweepRange {
    int n_min = 2, n_max = 2;
    int k_min = 1, k_max = 1;  // clamped to k <= n per cell
    int r_min = 1, r_max = 1;
    int t_min = 1, t_max = 1;
    unsigned q = 2;
};

/// Oracle max distance vs the distance bound over a parameter grid; guard
/// failures are reported inline as GUARD cells.
std::vector<SweepCell> bound_sweep(const SweepRange& range, int jobs = 1,
                                   long long guard = kSubspaceGuard);

std::string sweep_to_csv(const std::vector<SweepCell>& cells);
Json sweep_to_json(const std::vector<SweepCell>& cells);

}  // namespace lrc
