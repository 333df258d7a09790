#include "lrc/search.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "lrc/bounds.hpp"
#include "lrc/errors.hpp"
#include "lrc/recovery.hpp"

namespace lrc {

BigInt gaussian_binomial(int n, int k, unsigned q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= big_pow(BigInt(q), static_cast<unsigned long>(n - i)) - 1;
        den *= big_pow(BigInt(q), static_cast<unsigned long>(k - i)) - 1;
    }
    return num / den;
}

namespace {

std::vector<std::vector<int>> pivot_patterns(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto descend = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        int needed = k - static_cast<int>(pick.size());
        for (int col = from; col <= n - needed; ++col) {
            pick.push_back(col);
            self(self, col + 1);
            pick.pop_back();
        }
    };
    descend(descend, 0);
    return out;
}

// Free positions of an RREF pattern in row-major order: row i may hold
// arbitrary entries in non-pivot columns right of its own pivot.
std::vector<std::pair<int, int>> free_positions(const std::vector<int>& pivots, int n) {
    std::vector<std::pair<int, int>> out;
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
        for (int col = pivots[row] + 1; col < n; ++col)
            if (!is_pivot[static_cast<std::size_t>(col)])
                out.emplace_back(static_cast<int>(row), col);
    return out;
}

}  // namespace

CodeEnumerator::CodeEnumerator(int n, int k, unsigned q, long long guard)
    : field_(Field::of_order(q)), n_(n), k_(k) {
    if (k < 1 || k > n) throw PreconditionError("enumeration requires 1 <= k <= n");
    BigInt total = gaussian_binomial(n, k, q);
    if (total > to_big(guard))
        throw GuardError("code enumeration: " + total.get_str() + " subspaces exceed guard " +
                         std::to_string(guard));
    patterns_ = pivot_patterns(n, k);
}

std::uint64_t CodeEnumerator::pattern_size(int pattern) const {
    std::size_t free_count =
        free_positions(patterns_[static_cast<std::size_t>(pattern)], n_).size();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < free_count; ++i) size *= field_.order();
    return size;
}

Matrix CodeEnumerator::pattern_matrix(int pattern, std::uint64_t filling) const {
    const std::vector<int>& pivots = patterns_[static_cast<std::size_t>(pattern)];
    std::vector<std::pair<int, int>> frees = free_positions(pivots, n_);
    Matrix m(field_, static_cast<std::size_t>(k_), static_cast<std::size_t>(n_));
    for (std::size_t row = 0; row < pivots.size(); ++row)
        m.at(row, static_cast<std::size_t>(pivots[row])) = 1;
    // first free position most significant
    for (std::size_t idx = frees.size(); idx-- > 0;) {
        auto [row, col] = frees[idx];
        m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
            static_cast<Elem>(filling % field_.order());
        filling /= field_.order();
    }
    return m;
}

std::optional<Matrix> CodeEnumerator::next() {
    while (current_pattern_ < pattern_count()) {
        if (current_filling_ < pattern_size(current_pattern_))
            return pattern_matrix(current_pattern_, current_filling_++);
        ++current_pattern_;
        current_filling_ = 0;
    }
    return std::nullopt;
}

OracleResult max_distance_with_locality(int n, int k, unsigned q, int r, int t, int jobs,
                                        long long guard) {
    if (r < 1 || t < 1) throw PreconditionError("oracle requires r >= 1 and t >= 1");
    if (jobs < 1) jobs = 1;
    CodeEnumerator enumerator(n, k, q, guard);
    Field field = Field::of_order(q);

    struct PatternBest {
        int distance = -1;
        std::uint64_t filling = 0;
        std::uint64_t qualifying = 0;
    };
    int patterns = enumerator.pattern_count();
    std::vector<PatternBest> per_pattern(static_cast<std::size_t>(patterns));

    auto scan_pattern = [&](int pattern) {
        PatternBest best;
        std::uint64_t size = enumerator.pattern_size(pattern);
        for (std::uint64_t filling = 0; filling < size; ++filling) {
            Matrix g = enumerator.pattern_matrix(pattern, filling);
            LinearCode code = LinearCode::from_generator(field, g);
            LocalityChecker checker(code);
            if (!checker.has_availability(r, t)) continue;
            ++best.qualifying;
            int distance = code.minimum_distance();
            if (distance > best.distance) {
                best.distance = distance;
                best.filling = filling;
            }
        }
        per_pattern[static_cast<std::size_t>(pattern)] = best;
    };

    if (jobs == 1) {
        for (int p = 0; p < patterns; ++p) scan_pattern(p);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back([&, w] {
                for (int p = w; p < patterns; p += jobs) scan_pattern(p);
            });
        for (auto& th : threads) th.join();
    }

    OracleResult result;
    result.codes_searched = gaussian_binomial(n, k, q);
    int best_pattern = -1;
    PatternBest best;
    for (int p = 0; p < patterns; ++p) {
        const PatternBest& cand = per_pattern[static_cast<std::size_t>(p)];
        result.codes_with_locality += cand.qualifying;
        if (cand.distance > best.distance) {  // earliest pattern wins ties
            best = cand;
            best_pattern = p;
        }
    }
    if (best_pattern >= 0 && best.distance >= 0) {
        result.best_distance = best.distance;
        result.witness = enumerator.pattern_matrix(best_pattern, best.filling);
    }
    return result;
}

std::vector<SweepCell> bound_sweep(const SweepRange& range, int jobs, long long guard) {
    std::vector<SweepCell> cells;
    for (int n = range.n_min; n <= range.n_max; ++n)
        for (int k = range.k_min; k <= std::min(range.k_max, n); ++k)
            for (int r = range.r_min; r <= range.r_max; ++r)
                for (int t = range.t_min; t <= range.t_max; ++t) {
                    SweepCell cell{n, k, r, t, range.q, distance_bound(n, k, r, t),
                                   std::nullopt, ""};
                    try {
                        OracleResult oracle =
                            max_distance_with_locality(n, k, range.q, r, t, jobs, guard);
                        if (!oracle.best_distance) {
                            cell.flag = "INFEASIBLE";
                        } else {
                            cell.oracle = oracle.best_distance;
                            cell.flag =
                                *oracle.best_distance == cell.bound ? "TIGHT" : "GAP";
                        }
                    } catch (const GuardError&) {
                        cell.flag = "GUARD";
                    }
                    cells.push_back(std::move(cell));
                }
    return cells;
}

std::string sweep_to_csv(const std::vector<SweepCell>& cells) {
    std::ostringstream out;
    out << "n,k,r,t,q,bound,oracle,flag\n";
    for (const SweepCell& c : cells) {
        out << c.n << ',' << c.k << ',' << c.r << ',' << c.t << ',' << c.q << ',' << c.bound
            << ',';
        if (c.oracle) out << *c.oracle;
        else out << '-';
        out << ',' << c.flag << '\n';
    }
    return out.str();
}

Json sweep_to_json(const std::vector<SweepCell>& cells) {
    Json rows = Json::array();
    for (const SweepCell& c : cells) {
        Json row;
        row["n"] = c.n;
        row["k"] = c.k;
        row["r"] = c.r;
        row["t"] = c.t;
        row["q"] = c.q;
        row["bound"] = c.bound;
        if (c.oracle) row["oracle"] = *c.oracle;
        else row["oracle"] = nullptr;
        row["flag"] = c.flag;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace lrc
