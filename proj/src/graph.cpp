#include "lrc/graph.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "lrc/bounds.hpp"
#include "lrc/errors.hpp"

namespace lrc {

namespace {

// Mutable working view shared by the closure and expander recursions:
// dead vertices drop out of every set, so a set lists only alive members and
// an emptied set means "recoverable from the removed vertices alone".
struct Work {
    int n = 0;
    std::vector<char> alive;                       // index v-1
    std::vector<std::vector<std::vector<int>>> sets;  // active sets, sorted members

    bool vertex_alive(int v) const { return alive[static_cast<std::size_t>(v - 1)] != 0; }
};

Work work_from_graph(const RecoveringGraph& g, int color_limit = -1) {
    Work w;
    w.n = g.vertex_count();
    w.alive.assign(static_cast<std::size_t>(w.n), 1);
    w.sets.resize(static_cast<std::size_t>(w.n));
    int t = color_limit < 0 ? g.colors() : color_limit;
    for (int v = 1; v <= w.n; ++v) {
        auto& per_vertex = w.sets[static_cast<std::size_t>(v - 1)];
        per_vertex.reserve(static_cast<std::size_t>(t));
        for (int l = 1; l <= t; ++l)
            per_vertex.push_back(g.recovering_set(v, l).values());
    }
    return w;
}

Work work_from_residual(const ResidualGraph& g, int color_limit = -1) {
    const RecoveringGraph& base = g.base();
    Work w;
    w.n = base.vertex_count();
    w.alive.assign(static_cast<std::size_t>(w.n), 0);
    w.sets.resize(static_cast<std::size_t>(w.n));
    int t = color_limit < 0 ? base.colors() : color_limit;
    for (int v = 1; v <= w.n; ++v) {
        if (!g.alive(v)) continue;
        w.alive[static_cast<std::size_t>(v - 1)] = 1;
        auto& per_vertex = w.sets[static_cast<std::size_t>(v - 1)];
        per_vertex.reserve(static_cast<std::size_t>(t));
        for (int l = 1; l <= t; ++l)
            per_vertex.push_back(g.restricted_set(v, l).values());
    }
    return w;
}

// Least fixpoint over alive vertices, ascending scan until stable.
std::vector<char> work_closure(const Work& w, std::vector<char> inside) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= w.n; ++v) {
            std::size_t vi = static_cast<std::size_t>(v - 1);
            if (!w.alive[vi] || inside[vi]) continue;
            for (const auto& set : w.sets[vi]) {
                bool covered = true;
                for (int m : set)
                    if (!inside[static_cast<std::size_t>(m - 1)]) {
                        covered = false;
                        break;
                    }
                if (covered) {
                    inside[vi] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    return inside;
}

std::vector<char> seed_mask(int n, const CoordSet& seed) {
    std::vector<char> mask(static_cast<std::size_t>(n), 0);
    for (int v : seed) mask[static_cast<std::size_t>(v - 1)] = 1;
    return mask;
}

CoordSet mask_to_set(const std::vector<char>& mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(static_cast<int>(i + 1));
    return CoordSet(std::move(out));
}

// Drops the closed vertices out of w: they die and disappear from every set.
Work work_without(const Work& w, const std::vector<char>& closed) {
    Work out;
    out.n = w.n;
    out.alive = w.alive;
    out.sets.resize(static_cast<std::size_t>(w.n));
    for (int v = 1; v <= w.n; ++v) {
        std::size_t vi = static_cast<std::size_t>(v - 1);
        if (closed[vi]) out.alive[vi] = 0;
        if (!out.alive[vi]) continue;
        auto& per_vertex = out.sets[vi];
        per_vertex.reserve(w.sets[vi].size());
        for (const auto& set : w.sets[vi]) {
            std::vector<int> kept;
            kept.reserve(set.size());
            for (int m : set)
                if (!closed[static_cast<std::size_t>(m - 1)]) kept.push_back(m);
            per_vertex.push_back(std::move(kept));
        }
    }
    return out;
}

// The recursive construction behind the expansion lemma. Level invariant:
// every alive vertex carries exactly t_prime active sets.
void expander_recurse(const Work& w, int anchor, int t_prime, std::vector<char>& out_seed) {
    std::size_t ai = static_cast<std::size_t>(anchor - 1);
    if (t_prime == 0) {
        out_seed[ai] = 1;
        return;
    }
    const std::vector<int> anchor_set = w.sets[ai][0];  // smallest-indexed active set
    if (anchor_set.empty())
        throw InternalError("expander invariant breach: surviving vertex with an empty set");

    // Remove the anchor; every other vertex loses the set holding the anchor,
    // or its smallest-indexed set when none does.
    Work pruned;
    pruned.n = w.n;
    pruned.alive = w.alive;
    pruned.alive[ai] = 0;
    pruned.sets.resize(static_cast<std::size_t>(w.n));
    for (int u = 1; u <= w.n; ++u) {
        std::size_t ui = static_cast<std::size_t>(u - 1);
        if (!pruned.alive[ui]) continue;
        const auto& active = w.sets[ui];
        std::size_t drop = 0;
        for (std::size_t idx = 0; idx < active.size(); ++idx)
            if (std::binary_search(active[idx].begin(), active[idx].end(), anchor)) {
                drop = idx;
                break;
            }
        auto& kept = pruned.sets[ui];
        kept.reserve(active.size() - 1);
        for (std::size_t idx = 0; idx < active.size(); ++idx)
            if (idx != drop) kept.push_back(active[idx]);
    }

    std::vector<char> closed(static_cast<std::size_t>(w.n), 0);
    std::vector<char> accumulated(static_cast<std::size_t>(w.n), 0);
    for (int step : anchor_set) {
        if (closed[static_cast<std::size_t>(step - 1)]) continue;
        Work level = work_without(pruned, closed);
        expander_recurse(level, step, t_prime - 1, accumulated);
        closed = work_closure(pruned, accumulated);
    }
    for (std::size_t i = 0; i < accumulated.size(); ++i)
        if (accumulated[i]) out_seed[i] = 1;
}

void check_expander_preconditions(int n, int t, int r, int anchor, int t_prime) {
    if (anchor < 1 || anchor > n)
        throw PreconditionError("anchor vertex " + std::to_string(anchor) + " outside [1, n]");
    if (t_prime < 0 || t_prime > t)
        throw PreconditionError("expander order must lie in [0, t]");
    if (t_prime >= 1 && r < 2)
        throw DomainError("expander construction needs locality >= 2 (expansion ratio undefined at r = 1)");
}

std::uint64_t splitmix_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Unbiased bounded draw by rejection; fully specified, no library distributions.
std::uint64_t bounded_draw(std::uint64_t& state, std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t raw = splitmix_next(state);
        if (raw >= threshold) return raw % bound;
    }
}

std::vector<int> random_permutation(int n, std::uint64_t state) {
    std::vector<int> tau(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tau[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i >= 1; --i) {
        std::uint64_t j = bounded_draw(state, static_cast<std::uint64_t>(i) + 1);
        std::swap(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)]);
    }
    return tau;
}

}  // namespace

RecoveringGraph RecoveringGraph::from_family(const RecoveringFamily& family, int n) {
    family.validate(n);
    return RecoveringGraph(n, family.r, family.t, family.sets);
}

RecoveringGraph RecoveringGraph::from_sets(int n, std::vector<std::vector<CoordSet>> sets) {
    if (sets.size() != static_cast<std::size_t>(n))
        throw PreconditionError("need one set list per vertex");
    std::size_t t = sets.empty() ? 0 : sets[0].size();
    int r = 1;
    for (int v = 1; v <= n; ++v) {
        const auto& per_vertex = sets[static_cast<std::size_t>(v - 1)];
        if (per_vertex.size() != t)
            throw PreconditionError("all vertices need the same number of recovering sets");
        for (std::size_t a = 0; a < per_vertex.size(); ++a) {
            const CoordSet& s = per_vertex[a];
            if (s.empty()) throw PreconditionError("empty recovering set");
            if (!s.within_range(n) || s.contains(v))
                throw PreconditionError("recovering set member invalid for vertex " +
                                        std::to_string(v));
            r = std::max(r, static_cast<int>(s.size()));
            for (std::size_t b = a + 1; b < per_vertex.size(); ++b)
                if (!s.disjoint_with(per_vertex[b]))
                    throw PreconditionError("recovering sets overlap at vertex " +
                                            std::to_string(v));
        }
    }
    return RecoveringGraph(n, r, static_cast<int>(t), std::move(sets));
}

int RecoveringGraph::out_degree(int v) const {
    int deg = 0;
    for (int l = 1; l <= t_; ++l) deg += static_cast<int>(recovering_set(v, l).size());
    return deg;
}

bool RecoveringGraph::uniform() const {
    for (int v = 1; v <= n_; ++v)
        for (int l = 1; l <= t_; ++l)
            if (recovering_set(v, l).size() != static_cast<std::size_t>(r_)) return false;
    return true;
}

Json RecoveringGraph::to_json() const {
    Json j;
    j["n"] = n_;
    j["r"] = r_;
    j["t"] = t_;
    Json vertices = Json::array();
    for (int v = 1; v <= n_; ++v) {
        Json item;
        item["v"] = v;
        Json per_color = Json::array();
        for (int l = 1; l <= t_; ++l) per_color.push_back(recovering_set(v, l).values());
        item["sets"] = std::move(per_color);
        vertices.push_back(std::move(item));
    }
    j["vertices"] = std::move(vertices);
    return j;
}

RecoveringGraph RecoveringGraph::from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::vector<CoordSet>> sets(static_cast<std::size_t>(n));
    for (const Json& item : j.at("vertices")) {
        int v = item.at("v").get<int>();
        if (v < 1 || v > n) throw PreconditionError("graph json: vertex id out of range");
        std::vector<CoordSet> per_vertex;
        for (const Json& s : item.at("sets")) per_vertex.emplace_back(s.get<std::vector<int>>());
        sets[static_cast<std::size_t>(v - 1)] = std::move(per_vertex);
    }
    return from_sets(n, std::move(sets));
}

std::string RecoveringGraph::to_dot() const {
    static const char* palette[] = {"red",    "blue",  "forestgreen", "orange",
                                    "purple", "brown", "cyan",        "magenta"};
    std::ostringstream out;
    out << "digraph recovering {\n  rankdir=LR;\n";
    for (int v = 1; v <= n_; ++v)
        for (int l = 1; l <= t_; ++l)
            for (int u : recovering_set(v, l))
                out << "  " << v << " -> " << u << " [color=" << palette[(l - 1) % 8]
                    << " label=" << l << "];\n";
    out << "}\n";
    return out.str();
}

ResidualGraph::ResidualGraph(const RecoveringGraph& g, CoordSet removed)
    : base_(&g), removed_(std::move(removed)) {
    int n = g.vertex_count();
    alive_.assign(static_cast<std::size_t>(n), true);
    for (int v : removed_) alive_[static_cast<std::size_t>(v - 1)] = false;
    sets_.resize(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        if (!alive_[static_cast<std::size_t>(v - 1)]) continue;
        auto& per_vertex = sets_[static_cast<std::size_t>(v - 1)];
        for (int l = 1; l <= g.colors(); ++l) {
            std::vector<int> kept;
            for (int m : g.recovering_set(v, l))
                if (alive_[static_cast<std::size_t>(m - 1)]) kept.push_back(m);
            per_vertex.emplace_back(std::move(kept));
        }
    }
}

ResidualGraph ResidualGraph::of(const RecoveringGraph& g, const CoordSet& removed) {
    if (!removed.within_range(g.vertex_count()))
        throw PreconditionError("removed vertex outside [1, n]");
    if (!(closure(g, removed) == removed))
        throw PreconditionError(
            "removed set is not closure-closed; some survivor would be recoverable from nothing");
    return ResidualGraph(g, removed);
}

CoordSet closure(const RecoveringGraph& g, const CoordSet& seed) {
    if (!seed.within_range(g.vertex_count()))
        throw PreconditionError("closure seed outside [1, n]");
    Work w = work_from_graph(g);
    return mask_to_set(work_closure(w, seed_mask(g.vertex_count(), seed)));
}

CoordSet closure(const ResidualGraph& g, const CoordSet& seed) {
    for (int v : seed)
        if (v < 1 || v > g.base().vertex_count() || !g.alive(v))
            throw PreconditionError("closure seed must consist of surviving vertices");
    Work w = work_from_residual(g);
    return mask_to_set(work_closure(w, seed_mask(g.base().vertex_count(), seed)));
}

namespace {

Rational ratio_of(std::size_t closure_size, std::size_t seed_size) {
    if (seed_size == 0) throw PreconditionError("expansion ratio needs a nonempty seed");
    return make_rational(static_cast<long long>(closure_size),
                         static_cast<long long>(seed_size));
}

}  // namespace

Rational expansion_ratio(const RecoveringGraph& g, const CoordSet& seed) {
    return ratio_of(closure(g, seed).size(), seed.size());
}

Rational expansion_ratio(const ResidualGraph& g, const CoordSet& seed) {
    return ratio_of(closure(g, seed).size(), seed.size());
}

PermutationColoring color_by_permutation(const RecoveringGraph& g, const std::vector<int>& tau) {
    int n = g.vertex_count();
    if (tau.size() != static_cast<std::size_t>(n))
        throw PreconditionError("permutation length differs from vertex count");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int rank : tau) {
        if (rank < 1 || rank > n || seen[static_cast<std::size_t>(rank - 1)])
            throw PreconditionError("tau is not a bijection on [1, n]");
        seen[static_cast<std::size_t>(rank - 1)] = 1;
    }

    PermutationColoring result;
    result.color_of.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> colored;
    for (int v = 1; v <= n; ++v) {
        int rank_v = tau[static_cast<std::size_t>(v - 1)];
        for (int l = 1; l <= g.colors(); ++l) {
            bool dominates = true;
            for (int m : g.recovering_set(v, l))
                if (rank_v <= tau[static_cast<std::size_t>(m - 1)]) {
                    dominates = false;
                    break;
                }
            if (dominates) {
                result.color_of[static_cast<std::size_t>(v - 1)] = l;  // smallest color wins
                colored.push_back(v);
                break;
            }
        }
    }
    result.colored = CoordSet(std::move(colored));
    return result;
}

ColoredSetSearch find_large_colored_set(const RecoveringGraph& g, int trials,
                                        std::uint64_t seed, int jobs) {
    if (trials < 1) throw PreconditionError("find_large_colored_set needs trials >= 1");
    if (jobs < 1) jobs = 1;
    int n = g.vertex_count();

    struct Best {
        int size = -1;
        int trial = 0;
    };
    std::vector<Best> per_worker(static_cast<std::size_t>(jobs));
    auto run_range = [&](int worker) {
        Best local;
        for (int trial = worker; trial < trials; trial += jobs) {
            std::uint64_t state = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(trial);
            std::vector<int> tau = random_permutation(n, state);
            PermutationColoring coloring = color_by_permutation(g, tau);
            int size = static_cast<int>(coloring.colored.size());
            if (size > local.size || (size == local.size && trial < local.trial)) {
                local.size = size;
                local.trial = trial;
            }
        }
        per_worker[static_cast<std::size_t>(worker)] = local;
    };

    if (jobs == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) threads.emplace_back(run_range, w);
        for (auto& th : threads) th.join();
    }

    Best best;
    for (const Best& b : per_worker) {
        if (b.size < 0) continue;
        if (b.size > best.size || (b.size == best.size && b.trial < best.trial)) best = b;
    }

    ColoredSetSearch out;
    out.seed = seed;
    out.trials = trials;
    out.best_trial = best.trial;
    std::uint64_t state = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(best.trial);
    out.best_tau = random_permutation(n, state);
    PermutationColoring coloring = color_by_permutation(g, out.best_tau);
    out.best_u = coloring.colored;
    out.best_size = static_cast<int>(out.best_u.size());
    out.expected_size = Rational(n) * coloring_probability(g.locality(), g.colors());
    return out;
}

std::optional<std::vector<int>> recovery_elimination_order(const RecoveringGraph& g,
                                                           const CoordSet& u) {
    if (!u.within_range(g.vertex_count()))
        throw PreconditionError("elimination set outside [1, n]");
    std::vector<char> residual = seed_mask(g.vertex_count(), u);
    std::size_t remaining = u.size();
    std::vector<int> order;
    order.reserve(remaining);
    while (remaining > 0) {
        int found = 0;
        for (int v : u) {
            if (!residual[static_cast<std::size_t>(v - 1)]) continue;
            for (int l = 1; l <= g.colors() && !found; ++l) {
                bool outside = true;
                for (int m : g.recovering_set(v, l))
                    if (residual[static_cast<std::size_t>(m - 1)]) {
                        outside = false;
                        break;
                    }
                if (outside) found = v;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;  // stalled
        residual[static_cast<std::size_t>(found - 1)] = 0;
        --remaining;
        order.push_back(found);
    }
    return order;
}

std::vector<int> cycle_witness(const RecoveringGraph& g, const CoordSet& stalled,
                               const PermutationColoring& coloring) {
    if (stalled.empty()) throw PreconditionError("cycle witness needs a nonempty stalled set");
    if (!stalled.within_range(g.vertex_count()))
        throw PreconditionError("stalled set outside [1, n]");
    for (int v : stalled)
        if (coloring.color(v) == 0)
            throw PreconditionError("vertex " + std::to_string(v) + " is uncolored");
    // Stall means every vertex keeps every color inside the set.
    for (int v : stalled)
        for (int l = 1; l <= g.colors(); ++l) {
            bool inside = false;
            for (int m : g.recovering_set(v, l))
                if (stalled.contains(m)) {
                    inside = true;
                    break;
                }
            if (!inside)
                throw PreconditionError("elimination does not stall: vertex " +
                                        std::to_string(v) + " misses color " +
                                        std::to_string(l));
        }

    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> walk;
    int v = stalled[0];
    while (true) {
        if (position[static_cast<std::size_t>(v - 1)] >= 0) {
            std::vector<int> cycle(walk.begin() + position[static_cast<std::size_t>(v - 1)],
                                   walk.end());
            cycle.push_back(v);
            return cycle;
        }
        position[static_cast<std::size_t>(v - 1)] = static_cast<int>(walk.size());
        walk.push_back(v);
        int color = coloring.color(v);
        int next = 0;
        for (int m : g.recovering_set(v, color))
            if (stalled.contains(m)) {
                next = m;
                break;
            }
        v = next;
    }
}

std::vector<int> cycle_witness(const RecoveringGraph& g, const CoordSet& stalled,
                               const std::vector<int>& tau) {
    return cycle_witness(g, stalled, color_by_permutation(g, tau));
}

CoordSet build_expander_set(const RecoveringGraph& g, int anchor, int t_prime) {
    check_expander_preconditions(g.vertex_count(), g.colors(), g.locality(), anchor, t_prime);
    Work w = work_from_graph(g, t_prime);
    std::vector<char> seed(static_cast<std::size_t>(g.vertex_count()), 0);
    expander_recurse(w, anchor, t_prime, seed);
    return mask_to_set(seed);
}

CoordSet build_expander_set(const ResidualGraph& g, int anchor, int t_prime) {
    const RecoveringGraph& base = g.base();
    check_expander_preconditions(base.vertex_count(), base.colors(), base.locality(), anchor,
                                 t_prime);
    if (!g.alive(anchor))
        throw PreconditionError("anchor vertex was removed from the residual graph");
    Work w = work_from_residual(g, t_prime);
    std::vector<char> seed(static_cast<std::size_t>(base.vertex_count()), 0);
    expander_recurse(w, anchor, t_prime, seed);
    return mask_to_set(seed);
}

CoordSet distance_bound_coloring(const RecoveringGraph& g, int k) {
    if (k < 2) throw PreconditionError("distance_bound_coloring requires k >= 2");
    if (g.locality() < 2)
        throw DomainError("distance_bound_coloring needs locality >= 2");
    long long r = g.locality();
    int t = g.colors();

    long long budget = k - 1;
    CoordSet chosen;
    CoordSet closed;
    while (budget > 0 && static_cast<int>(closed.size()) < g.vertex_count()) {
        int m = 0;
        long long power = 1;
        while (m < t && power * r <= budget) {
            power *= r;
            ++m;
        }
        ResidualGraph residual = ResidualGraph::of(g, closed);
        int anchor = 0;
        for (int v = 1; v <= g.vertex_count() && !anchor; ++v)
            if (residual.alive(v)) anchor = v;
        CoordSet round_seed = build_expander_set(residual, anchor, m);
        budget -= static_cast<long long>(round_seed.size());
        chosen = chosen.united(round_seed);
        closed = closure(g, chosen);
    }
    return chosen;
}

}  // namespace lrc
