// Acceptance suite: one criterion per case, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/constructions.hpp"
#include "lrc/errors.hpp"
#include "lrc/graph.hpp"
#include "lrc/search.hpp"

using namespace lrc;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<void()> body;
};

void expect(bool condition, const std::string& message) {
    if (!condition) throw Error(message);
}

RecoveringGraph product22_graph() {
    return RecoveringGraph::from_family(parity_product_code(2, 2).family, 9);
}

RecoveringGraph random_uniform_graph(int n, int r, int t, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::vector<CoordSet>> sets;
    for (int v = 1; v <= n; ++v) {
        std::vector<int> others;
        for (int c = 1; c <= n; ++c)
            if (c != v) others.push_back(c);
        for (std::size_t i = others.size(); i > 1; --i)
            std::swap(others[i - 1], others[rng() % i]);
        std::vector<CoordSet> per_vertex;
        std::size_t cursor = 0;
        for (int l = 0; l < t; ++l) {
            std::vector<int> members(others.begin() + static_cast<long>(cursor),
                                     others.begin() + static_cast<long>(cursor + r));
            cursor += static_cast<std::size_t>(r);
            per_vertex.emplace_back(std::move(members));
        }
        sets.push_back(std::move(per_vertex));
    }
    return RecoveringGraph::from_sets(n, std::move(sets));
}

// --- criterion 11 helpers: drive the CLI binary and capture bytes ----------

std::string run_cli_capture(const std::string& args, int expected_exit) {
    static int counter = 0;
    std::string out_file = "lrc_acceptance_" + std::to_string(++counter) + ".tmp";
    std::string command = std::string(LRC_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(command.c_str());
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::remove(out_file.c_str());
    expect(exit_code == expected_exit, "command '" + args + "' exited with " +
                                           std::to_string(exit_code) + ", expected " +
                                           std::to_string(expected_exit));
    return buffer.str();
}

// ---------------------------------------------------------------------------

void criterion_hamming_tightness() {
    Construction c = shortened_hamming_6_3();
    expect(c.family.t == 2 && c.family.r == 2, "family is not (r=2, t=2)");
    c.family.validate(6);
    validate_family_against(c.code, c.family);
    for (const auto& per_coord : c.family.sets)
        for (const CoordSet& s : per_coord)
            expect(s.size() == 2, "recovering set is not of size 2");
    expect(c.code.minimum_distance() == 3, "minimum distance != 3");
    expect(distance_bound(6, 3, 2, 2) == 3, "distance_bound(6,3,2,2) != 3");
    BoundReport report = make_bound_report(6, 3, 2, 2, 3);
    expect(report.meets_distance_bound_with_equality == true, "equality flag not raised");
}

void criterion_oracle_tightness() {
    OracleResult result = max_distance_with_locality(6, 3, 2, 2, 2);
    expect(result.codes_searched == 1395, "searched " + result.codes_searched.get_str() +
                                              " codes, expected 1395");
    expect(result.best_distance.has_value(), "no qualifying [6,3] code found");
    expect(*result.best_distance == 3, "oracle distance " +
                                           std::to_string(*result.best_distance) +
                                           ", expected 3");
}

void criterion_reduction_identities() {
    for (long long r = 1; r <= 100; ++r)
        expect(rate_bound(r, 1) == make_rational(r, r + 1),
               "rate_bound(r,1) != r/(r+1) at r=" + std::to_string(r));
    for (long long n = 1; n <= 50; ++n)
        for (long long k = 2; k <= n; ++k)
            for (long long r = 1; r < k; ++r)
                expect(distance_bound(n, k, r, 1) == distance_bound_t1(n, k, r),
                       "t=1 distance bounds disagree at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + ", r=" + std::to_string(r));
    expect(rate_bound(2, 2) == make_rational(8, 15), "rate_bound(2,2) != 8/15");
}

void criterion_inclusion_exclusion() {
    // coloring_probability itself verifies the alternating sum against the
    // product form and throws on any mismatch
    for (long long r = 1; r <= 30; ++r)
        for (long long t = 1; t <= 30; ++t)
            expect(1 - coloring_probability(r, t) == rate_bound(r, t),
                   "complement identity fails at r=" + std::to_string(r) +
                       ", t=" + std::to_string(t));
}

void criterion_digit_identity() {
    for (long long m = 0; m <= 1000; ++m)
        for (long long r = 2; r <= 5; ++r)
            for (long long t = 0; t <= 6; ++t)
                expect(base_r_identity_check(m, r, t),
                       "identity fails at m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                           ", t=" + std::to_string(t));
}

void criterion_sandwich() {
    for (long long r = 1; r <= 6; ++r)
        for (long long t = 1; t <= 30; ++t) {
            SandwichCheck c = rroot_sandwich(r, t);
            expect(c.lower_ok, "lower bound fails at r=" + std::to_string(r) +
                                   ", t=" + std::to_string(t));
            expect(c.upper_ok, "upper bound fails at r=" + std::to_string(r) +
                                   ", t=" + std::to_string(t));
        }
}

void criterion_exact_expectation() {
    RecoveringGraph g = product22_graph();
    std::vector<int> tau(9);
    std::iota(tau.begin(), tau.end(), 1);
    long long total = 0, count = 0, max_u = 0;
    do {
        PermutationColoring coloring = color_by_permutation(g, tau);
        long long size = static_cast<long long>(coloring.colored.size());
        total += size;
        max_u = std::max(max_u, size);
        expect(4 <= 9 - size, "k <= n - |U| violated (|U| = " + std::to_string(size) + ")");
        expect(recovery_elimination_order(g, coloring.colored).has_value(),
               "elimination stalled on a colored set");
        ++count;
    } while (std::next_permutation(tau.begin(), tau.end()));
    expect(count == 362880, "expected 9! permutations");
    expect(make_rational(total, count) == make_rational(21, 5),
           "mean |U| = " + to_string(make_rational(total, count)) + ", expected 21/5");
    expect(max_u >= 5, "max |U| < 5");
}

void criterion_expander_postconditions() {
    RecoveringGraph g = product22_graph();
    expect(expansion_constant(2, 2) == make_rational(7, 4), "e_2 != 7/4");
    for (int v = 1; v <= 9; ++v)
        for (int t_prime = 0; t_prime <= 2; ++t_prime) {
            CoordSet s = build_expander_set(g, v, t_prime);
            expect(static_cast<int>(s.size()) <= (1 << t_prime),
                   "|S| > 2^t' at v=" + std::to_string(v));
            expect(closure(g, s).contains(v), "anchor not in closure at v=" + std::to_string(v));
            expect(expansion_ratio(g, s) >= expansion_constant(2, t_prime),
                   "ratio below e_t' at v=" + std::to_string(v) +
                       ", t'=" + std::to_string(t_prime));
        }
}

void criterion_distance_coloring() {
    RecoveringGraph product = product22_graph();
    CoordSet s = distance_bound_coloring(product, 4);
    expect(static_cast<int>(s.size()) <= 3, "|S| > k-1 on the product graph");
    expect(static_cast<int>(closure(product, s).size()) >= 4,
           "closure below 4 on the product graph");

    RecoveringGraph hamming = RecoveringGraph::from_family(shortened_hamming_6_3().family, 6);
    CoordSet sh = distance_bound_coloring(hamming, 3);
    expect(static_cast<int>(sh.size()) <= 2, "|S| > k-1 on the Hamming graph");
    expect(static_cast<int>(closure(hamming, sh).size()) >= 3,
           "closure below 3 on the Hamming graph");
}

void criterion_closure_algebra_and_sweep() {
    std::mt19937 rng(20240);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);  // n <= 12
        int t = 1 + static_cast<int>(rng() % 2);
        int max_r = (n - 1) / t;
        int r = 1 + static_cast<int>(rng() % std::max(1, std::min(3, max_r)));
        RecoveringGraph g = random_uniform_graph(n, r, t, 1000 + static_cast<unsigned>(trial));

        std::vector<int> small, large;
        for (int v = 1; v <= n; ++v)
            if (rng() % 3 == 0) {
                large.push_back(v);
                if (rng() % 2 == 0) small.push_back(v);
            }
        CoordSet s(small), l(large);
        CoordSet cs = closure(g, s);
        expect(s.subset_of(cs), "closure is not extensive");
        expect(closure(g, cs) == cs, "closure is not idempotent");
        expect(cs.subset_of(closure(g, l)), "closure is not monotone");
    }

    SweepRange range;
    range.n_min = 2;
    range.n_max = 7;
    range.k_min = 1;
    range.k_max = 7;
    range.r_min = 1;
    range.r_max = 2;
    range.t_min = 1;
    range.t_max = 2;
    range.q = 2;
    std::vector<SweepCell> cells = bound_sweep(range, 4);
    expect(!cells.empty(), "sweep produced no cells");
    int checked = 0;
    for (const SweepCell& cell : cells) {
        expect(cell.flag != "GUARD", "unexpected guard trip in the small sweep");
        if (!cell.oracle) continue;
        ++checked;
        expect(*cell.oracle <= cell.bound,
               "oracle exceeds the bound at n=" + std::to_string(cell.n) +
                   ", k=" + std::to_string(cell.k) + ", r=" + std::to_string(cell.r) +
                   ", t=" + std::to_string(cell.t));
    }
    expect(checked > 0, "no feasible sweep cells were checked");
}

void criterion_determinism() {
    std::string verify1 = run_cli_capture("verify-paper --json", 0);
    std::string verify2 = run_cli_capture("verify-paper --json", 0);
    expect(verify1 == verify2, "verify-paper --json is not byte-stable across runs");
    expect(!verify1.empty(), "verify-paper --json produced no output");

    std::string search_args = "search --n 6 --k 3 --q 2 --r 2 --t 2 --json";
    std::string serial = run_cli_capture(search_args + " --jobs 1", 0);
    std::string serial_again = run_cli_capture(search_args + " --jobs 1", 0);
    std::string two_jobs = run_cli_capture(search_args + " --jobs 2", 0);
    std::string four_jobs = run_cli_capture(search_args + " --jobs 4", 0);
    expect(serial == serial_again, "search --json is not byte-stable across runs");
    expect(serial == two_jobs, "search output differs between --jobs 1 and --jobs 2");
    expect(serial == four_jobs, "search output differs between --jobs 1 and --jobs 4");

    std::string permute_args = std::string("permute ") + LRC_FIXTURE_DIR +
                               "/pp22.code --r 2 --t 2 --trials 512 --seed 7 --json";
    std::string permute1 = run_cli_capture(permute_args + " --jobs 1", 0);
    std::string permute2 = run_cli_capture(permute_args + " --jobs 3", 0);
    expect(permute1 == permute2, "permute output depends on --jobs");
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "shortened Hamming code: (r=2,t=2) availability, d=3, bound met with equality",
         criterion_hamming_tightness},
        {2, "exhaustive oracle over all 1395 binary [6,3] codes returns max distance 3",
         criterion_oracle_tightness},
        {3, "t=1 reductions of the rate and distance bounds; rate_bound(2,2) = 8/15",
         criterion_reduction_identities},
        {4, "inclusion-exclusion and product forms agree; complement equals the rate bound",
         criterion_inclusion_exclusion},
        {5, "base-r digit identity for m <= 1000, r in [2,5], t in [0,6]",
         criterion_digit_identity},
        {6, "(t+1) <= P^r <= (t+1)(1+1/r)^r in exact rationals for r <= 6, t <= 30",
         criterion_sandwich},
        {7, "exact mean |U| = 21/5 over all 9! permutations; elimination and rate check",
         criterion_exact_expectation},
        {8, "expander-set postconditions on the 3x3 product graph (e_2 = 7/4)",
         criterion_expander_postconditions},
        {9, "distance-proof coloring: closure >= 4 (grid, k=4) and >= 3 (Hamming, k=3)",
         criterion_distance_coloring},
        {10, "closure algebra on 200 random uniform graphs; oracle <= bound on the n <= 7 sweep",
         criterion_closure_algebra_and_sweep},
        {11, "byte-identical reruns of verify-paper and search, independent of --jobs",
         criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (error.empty()) {
            std::printf("PASS %2d (%5lld ms)  %s\n", c.id, static_cast<long long>(elapsed),
                        c.title.c_str());
        } else {
            ++failures;
            std::printf("FAIL %2d (%5lld ms)  %s\n        %s\n", c.id,
                        static_cast<long long>(elapsed), c.title.c_str(), error.c_str());
        }
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
