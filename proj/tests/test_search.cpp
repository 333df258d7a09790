#include <doctest.h>

#include <set>

#include "lrc/bounds.hpp"
#include "lrc/errors.hpp"
#include "lrc/graph.hpp"
#include "lrc/recovery.hpp"
#include "lrc/search.hpp"

using namespace lrc;

TEST_CASE("subspace counts") {
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(5, 5, 2) == 1);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
}

TEST_CASE("enumeration yields each code exactly once") {
    CodeEnumerator small(4, 2, 2);
    std::set<std::vector<Codeword>> row_spaces;
    Field f2 = Field::of_order(2);
    int count = 0;
    while (auto g = small.next()) {
        ++count;
        CHECK(g->rank() == 2);
        CHECK(g->rref() == *g);  // already canonical
        row_spaces.insert(LinearCode::from_generator(f2, *g).enumerate_codewords());
    }
    CHECK(count == 35);
    CHECK(row_spaces.size() == 35);  // no duplicate subspaces

    CodeEnumerator full(3, 3, 2);
    int full_count = 0;
    while (full.next()) ++full_count;
    CHECK(full_count == 1);

    CodeEnumerator lines(3, 1, 2);
    int line_count = 0;
    while (lines.next()) ++line_count;
    CHECK(line_count == 7);

    CodeEnumerator big(6, 3, 2);
    int big_count = 0;
    while (big.next()) ++big_count;
    CHECK(big_count == 1395);

    CHECK_THROWS_AS(CodeEnumerator(30, 15, 2), GuardError);
    CHECK_THROWS_AS(CodeEnumerator(3, 4, 2), PreconditionError);
}

TEST_CASE("oracle confirms the shortened Hamming parameters are extremal") {
    OracleResult result = max_distance_with_locality(6, 3, 2, 2, 2);
    REQUIRE(result.best_distance.has_value());
    CHECK(*result.best_distance == 3);
    CHECK(result.codes_searched == 1395);
    CHECK(result.codes_with_locality > 0);
    REQUIRE(result.witness.has_value());
    LinearCode witness = LinearCode::from_generator(Field::of_order(2), *result.witness);
    CHECK(witness.minimum_distance() == 3);
    CHECK(LocalityChecker(witness).has_availability(2, 2));
}

TEST_CASE("oracle is independent of the worker count") {
    OracleResult serial = max_distance_with_locality(6, 3, 2, 2, 2, 1);
    OracleResult parallel = max_distance_with_locality(6, 3, 2, 2, 2, 3);
    CHECK(serial.best_distance == parallel.best_distance);
    CHECK(serial.codes_with_locality == parallel.codes_with_locality);
    REQUIRE(parallel.witness.has_value());
    CHECK(*serial.witness == *parallel.witness);
}

TEST_CASE("two disjoint singleton recovering sets per coordinate are infeasible at [4,2]") {
    // disjoint singletons force equality classes of size >= 3 on the nonzero
    // coordinates, which no [4,2] code can provide
    OracleResult result = max_distance_with_locality(4, 2, 2, 1, 2);
    CHECK(!result.best_distance.has_value());
    CHECK(!result.witness.has_value());
    CHECK(result.codes_with_locality == 0);
}

TEST_CASE("vacuous locality reduces the oracle to the classical max distance") {
    // r = n-1, t = 1 admits every code with d >= 2; the best [5,2] binary
    // distance is 3
    OracleResult result = max_distance_with_locality(5, 2, 2, 4, 1);
    REQUIRE(result.best_distance.has_value());
    CHECK(*result.best_distance == 3);
}

TEST_CASE("bound sweep flags") {
    SweepRange range;
    range.n_min = range.n_max = 6;
    range.k_min = range.k_max = 3;
    range.r_min = range.r_max = 2;
    range.t_min = range.t_max = 2;
    std::vector<SweepCell> cells = bound_sweep(range);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].bound == 3);
    CHECK(cells[0].oracle == 3);
    CHECK(cells[0].flag == "TIGHT");

    SweepRange gap;
    gap.n_min = gap.n_max = 4;
    gap.k_min = gap.k_max = 2;
    gap.r_min = gap.r_max = 2;
    gap.t_min = gap.t_max = 1;
    std::vector<SweepCell> gap_cells = bound_sweep(gap);
    REQUIRE(gap_cells.size() == 1);
    CHECK(gap_cells[0].bound == 3);
    CHECK(gap_cells[0].oracle == 2);  // no binary [4,2,3] code exists
    CHECK(gap_cells[0].flag == "GAP");

    SweepRange empty;
    empty.n_min = 5;
    empty.n_max = 4;
    CHECK(bound_sweep(empty).empty());

    SweepRange guarded;
    guarded.n_min = guarded.n_max = 30;
    guarded.k_min = guarded.k_max = 15;
    guarded.r_min = guarded.r_max = 2;
    guarded.t_min = guarded.t_max = 1;
    std::vector<SweepCell> guard_cells = bound_sweep(guarded);
    REQUIRE(guard_cells.size() == 1);
    CHECK(guard_cells[0].flag == "GUARD");
    CHECK(!guard_cells[0].oracle.has_value());
}

TEST_CASE("sweep serialization") {
    SweepRange range;
    range.n_min = 4;
    range.n_max = 5;
    range.k_min = 2;
    range.k_max = 2;
    range.r_min = range.r_max = 2;
    range.t_min = range.t_max = 1;
    std::vector<SweepCell> cells = bound_sweep(range);
    std::string csv = sweep_to_csv(cells);
    CHECK(csv.substr(0, 24) == "n,k,r,t,q,bound,oracle,f");
    CHECK(csv.find("4,2,2,1,2,3,2,GAP") != std::string::npos);

    Json j = sweep_to_json(cells);
    CHECK(j.is_array());
    CHECK(j.size() == cells.size());
    CHECK(j[0]["flag"] == "GAP");
}

TEST_CASE("witness codes satisfy the rate argument k <= n - |U|") {
    // for any witness, the family found by the recovery search builds a graph
    // whose colored-set sizes can never push past n - k
    SweepRange range;
    range.n_min = 4;
    range.n_max = 6;
    range.k_min = 1;
    range.k_max = 4;
    range.r_min = 1;
    range.r_max = 2;
    range.t_min = 1;
    range.t_max = 2;
    Field f2 = Field::of_order(2);
    for (const SweepCell& cell : bound_sweep(range)) {
        if (!cell.oracle) continue;
        OracleResult oracle = max_distance_with_locality(cell.n, cell.k, 2, cell.r, cell.t);
        REQUIRE(oracle.witness.has_value());
        LinearCode code = LinearCode::from_generator(f2, *oracle.witness);
        LocalityChecker checker(code);
        RecoveringFamily family;
        family.r = cell.r;
        family.t = cell.t;
        for (int i = 1; i <= cell.n; ++i)
            family.sets.push_back(*checker.find_disjoint(i, cell.r, cell.t));
        RecoveringGraph graph = RecoveringGraph::from_family(family, cell.n);
        ColoredSetSearch search = find_large_colored_set(graph, 40, 11);
        CHECK(cell.k <= cell.n - search.best_size);
        CHECK(recovery_elimination_order(graph, search.best_u).has_value());
    }
}

TEST_CASE("oracle never beats the distance bound on small binary cells") {
    SweepRange range;
    range.n_min = 3;
    range.n_max = 6;
    range.k_min = 1;
    range.k_max = 5;
    range.r_min = 1;
    range.r_max = 2;
    range.t_min = 1;
    range.t_max = 2;
    for (const SweepCell& cell : bound_sweep(range, 2)) {
        if (!cell.oracle) continue;
        CHECK(*cell.oracle <= cell.bound);
    }
}
