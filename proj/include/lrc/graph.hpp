#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/json.hpp"
#include "lrc/rational.hpp"
#include "lrc/recovery.hpp"

namespace lrc {

/// Edge-colored digraph on the code coordinates: vertex v has a color-l edge
/// to every member of its l-th recovering set. Immutable after construction.
class RecoveringGraph {
public:
    static RecoveringGraph from_family(const RecoveringFamily& family, int n);
    /// Direct construction for hand-built graphs; every vertex needs the same
    /// number of sets, pairwise disjoint, no self-loops.
    static RecoveringGraph from_sets(int n, std::vector<std::vector<CoordSet>> sets);

    int vertex_count() const { return n_; }
    int colors() const { return t_; }
    /// Maximal recovering-set size.
    int locality() const { return r_; }
    /// l is 1-based.
    const CoordSet& recovering_set(int v, int l) const {
        return sets_[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(l - 1)];
    }
    int out_degree(int v) const;
    bool uniform() const;  // every set has size exactly locality()

    Json to_json() const;
    static RecoveringGraph from_json(const Json& j);
    std::string to_dot() const;

private:
    RecoveringGraph(int n, int r, int t, std::vector<std::vector<CoordSet>> sets)
        : n_(n), r_(r), t_(t), sets_(std::move(sets)) {}

    int n_, r_, t_;
    std::vector<std::vector<CoordSet>> sets_;
};

/// A recovering graph with some vertices removed; removed coordinates count
/// as already recovered, so surviving vertices keep their colors with sets
/// restricted to the survivors. Construction requires the removed set to be
/// closure-closed, which rules out surviving vertices with an emptied set.
class ResidualGraph {
public:
    static ResidualGraph of(const RecoveringGraph& g, const CoordSet& removed);

    const RecoveringGraph& base() const { return *base_; }
    const CoordSet& removed() const { return removed_; }
    bool alive(int v) const { return alive_[static_cast<std::size_t>(v - 1)]; }
    const CoordSet& restricted_set(int v, int l) const {
        return sets_[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(l - 1)];
    }

private:
    ResidualGraph(const RecoveringGraph& g, CoordSet removed);

    const RecoveringGraph* base_;
    CoordSet removed_;
    std::vector<bool> alive_;
    std::vector<std::vector<CoordSet>> sets_;
};

/// Least fixpoint containing the seed under "some recovering set fully inside
/// implies the vertex joins".
CoordSet closure(const RecoveringGraph& g, const CoordSet& seed);
/// Same on a residual graph; removed members of a set count as inside.
CoordSet closure(const ResidualGraph& g, const CoordSet& seed);

/// |closure(S)| / |S| exactly. The seed must be nonempty.
Rational expansion_ratio(const RecoveringGraph& g, const CoordSet& seed);
Rational expansion_ratio(const ResidualGraph& g, const CoordSet& seed);

/// Vertex coloring induced by a permutation: v receives the smallest color l
/// whose entire set ranks below v under tau; 0 when no color qualifies.
struct PermutationColoring {
    std::vector<int> color_of;  // index v-1; 0 = uncolored
    CoordSet colored;           // U

    int color(int v) const { return color_of[static_cast<std::size_t>(v - 1)]; }
};

/// tau maps vertex -> rank and must be a bijection on [1, n].
PermutationColoring color_by_permutation(const RecoveringGraph& g, const std::vector<int>& tau);

struct ColoredSetSearch {
    std::vector<int> best_tau;
    CoordSet best_u;
    int best_size = 0;
    int best_trial = 0;      // 0-based trial index that produced best_u
    Rational expected_size;  // n * (1 - 1/prod(1+1/(jr)))
    std::uint64_t seed = 0;
    int trials = 0;
};

/// Draws `trials` permutations from a seeded deterministic generator and keeps
/// the largest colored set (ties: lowest trial index). Result is independent
/// of the worker count.
ColoredSetSearch find_large_colored_set(const RecoveringGraph& g, int trials,
                                        std::uint64_t seed, int jobs = 1);

/// Orders U so that every vertex, at its turn, has some color whose entire
/// recovering set lies outside the not-yet-recovered residual of U.
/// nullopt when the elimination stalls. A full ordering certifies that every
/// subset of U contains a vertex missing a color.
std::optional<std::vector<int>> recovery_elimination_order(const RecoveringGraph& g,
                                                           const CoordSet& u);

/// Diagnostic for the impossibility argument: on a stalled set whose vertices
/// all carry colors, walks same-colored edges inside the set until a vertex
/// repeats and returns that closed walk (first = last). Ranks would have to
/// strictly decrease along it, so a genuine permutation coloring can never
/// satisfy the preconditions.
std::vector<int> cycle_witness(const RecoveringGraph& g, const CoordSet& stalled,
                               const PermutationColoring& coloring);
std::vector<int> cycle_witness(const RecoveringGraph& g, const CoordSet& stalled,
                               const std::vector<int>& tau);

/// A seed set S with |S| <= r^t_prime, anchor in closure(S), and expansion
/// ratio at least e_{t_prime}, built by the recursive construction over the
/// t_prime smallest colors. Requires locality >= 2 when t_prime >= 1.
CoordSet build_expander_set(const RecoveringGraph& g, int anchor, int t_prime);
CoordSet build_expander_set(const ResidualGraph& g, int anchor, int t_prime);

/// Greedy distance-proof coloring: spends a budget of k-1 seed vertices in
/// rounds, each round running build_expander_set at the largest feasible
/// order m with r^m <= remaining budget. The returned S satisfies |S| <= k-1
/// and |closure(S)| >= sum_{i=0..t} floor((k-1)/r^i).
CoordSet distance_bound_coloring(const RecoveringGraph& g, int k);

}  // namespace lrc
