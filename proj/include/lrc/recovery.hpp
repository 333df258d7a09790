#pragma once

#include <optional>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/json.hpp"

namespace lrc {

/// Per-coordinate recovering sets: t pairwise disjoint sets of size at most r
/// for each of the n coordinates, none containing its own coordinate.
struct RecoveringFamily {
    int r = 0;  // locality: maximal set size
    int t = 0;  // availability: sets per coordinate
    std::vector<std::vector<CoordSet>> sets;  // sets[i-1] holds coordinate i's t sets

    /// Structural invariants only (sizes, disjointness, ranges).
    void validate(int n) const;  // throws PreconditionError
    /// True when some set has fewer than r members; bound formulas assume
    /// uniform size r, so reports flag such families.
    bool has_undersized_sets() const;

    Json to_json() const;
    static RecoveringFamily from_json(const Json& j);
};

/// Caches the codeword and dual-word enumerations of one code so that many
/// recoverability queries stay cheap. Every query runs both the
/// codeword-agreement check and the dual-support check and throws
/// InternalError if they ever disagree. Keeps a reference to the code; the
/// code must outlive the checker.
class LocalityChecker {
public:
    LocalityChecker(const LinearCode& code, std::uint64_t guard = kEnumerationGuard);

    const LinearCode& code() const { return *code_; }

    bool is_recovering_set(int i, const CoordSet& r_set) const;

    /// Candidates of size <= r in (size, lexicographic) order.
    std::vector<CoordSet> recovering_candidates(int i, int r) const;

    std::optional<std::vector<CoordSet>> find_disjoint(int i, int r, int t) const;

    /// True when every coordinate admits t disjoint recovering sets of size
    /// <= r; coordinates are checked in ascending order with early reject.
    bool has_availability(int r, int t) const;

private:
    const LinearCode* code_;
    std::vector<Codeword> codewords_;
    std::vector<Codeword> dual_words_;

    bool recoverable_by_enumeration(int i, const CoordSet& r_set) const;
    bool recoverable_by_dual_support(int i, const CoordSet& r_set) const;
};

/// True iff no two codewords agree on R while differing at coordinate i.
/// Runs both the codeword-enumeration check and the dual-support check and
/// throws InternalError if they ever disagree.
bool is_recovering_set(const LinearCode& code, int i, const CoordSet& r_set,
                       std::uint64_t guard = kEnumerationGuard);

/// t pairwise disjoint recovering sets for coordinate i, each of size <= r,
/// or nullopt. Exhaustive backtracking over candidate sets ordered smallest
/// first then lexicographic, so the result is deterministic.
std::optional<std::vector<CoordSet>> find_disjoint_recovering_sets(
    const LinearCode& code, int i, int r, int t, std::uint64_t guard = kEnumerationGuard);

/// For each coordinate, the largest t for which disjoint recovering sets of
/// size <= r exist; 0 when the coordinate has none.
std::vector<int> locality_profile(const LinearCode& code, int r,
                                  std::uint64_t guard = kEnumerationGuard);

/// Checks the recoverability predicate of every set in the family.
void validate_family_against(const LinearCode& code, const RecoveringFamily& family,
                             std::uint64_t guard = kEnumerationGuard);

}  // namespace lrc
