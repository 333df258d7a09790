#include "lrc/recovery.hpp"

#include <algorithm>
#include <map>

#include "lrc/errors.hpp"

namespace lrc {

void RecoveringFamily::validate(int n) const {
    if (r < 1 || t < 1) throw PreconditionError("recovering family needs r >= 1 and t >= 1");
    if (sets.size() != static_cast<std::size_t>(n))
        throw PreconditionError("family covers " + std::to_string(sets.size()) +
                                " coordinates, expected " + std::to_string(n));
    for (int i = 1; i <= n; ++i) {
        const auto& per_coord = sets[static_cast<std::size_t>(i - 1)];
        if (per_coord.size() != static_cast<std::size_t>(t))
            throw PreconditionError("coordinate " + std::to_string(i) + " has " +
                                    std::to_string(per_coord.size()) + " sets, expected " +
                                    std::to_string(t));
        for (std::size_t a = 0; a < per_coord.size(); ++a) {
            const CoordSet& s = per_coord[a];
            if (s.empty() || s.size() > static_cast<std::size_t>(r))
                throw PreconditionError("coordinate " + std::to_string(i) +
                                        ": set size outside [1, r]");
            if (!s.within_range(n))
                throw PreconditionError("coordinate " + std::to_string(i) +
                                        ": set member outside [1, n]");
            if (s.contains(i))
                throw PreconditionError("coordinate " + std::to_string(i) +
                                        " appears in its own recovering set");
            for (std::size_t b = a + 1; b < per_coord.size(); ++b)
                if (!s.disjoint_with(per_coord[b]))
                    throw PreconditionError("coordinate " + std::to_string(i) +
                                            ": recovering sets overlap");
        }
    }
}

bool RecoveringFamily::has_undersized_sets() const {
    for (const auto& per_coord : sets)
        for (const CoordSet& s : per_coord)
            if (s.size() < static_cast<std::size_t>(r)) return true;
    return false;
}

Json RecoveringFamily::to_json() const {
    Json j;
    j["r"] = r;
    j["t"] = t;
    Json all = Json::array();
    for (const auto& per_coord : sets) {
        Json coord = Json::array();
        for (const CoordSet& s : per_coord) coord.push_back(s.values());
        all.push_back(std::move(coord));
    }
    j["sets"] = std::move(all);
    return j;
}

RecoveringFamily RecoveringFamily::from_json(const Json& j) {
    RecoveringFamily family;
    family.r = j.at("r").get<int>();
    family.t = j.at("t").get<int>();
    for (const Json& coord : j.at("sets")) {
        std::vector<CoordSet> per_coord;
        for (const Json& s : coord) per_coord.emplace_back(s.get<std::vector<int>>());
        family.sets.push_back(std::move(per_coord));
    }
    return family;
}

namespace {

void check_coordinate(const LinearCode& code, int i) {
    if (i < 1 || i > code.length())
        throw PreconditionError("coordinate " + std::to_string(i) + " outside [1, " +
                                std::to_string(code.length()) + "]");
}

bool pick_disjoint(const std::vector<CoordSet>& candidates, std::size_t from, int still_needed,
                   std::vector<CoordSet>& chosen) {
    if (still_needed == 0) return true;
    for (std::size_t idx = from; idx < candidates.size(); ++idx) {
        const CoordSet& c = candidates[idx];
        bool ok = true;
        for (const CoordSet& prev : chosen)
            if (!prev.disjoint_with(c)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(c);
        if (pick_disjoint(candidates, idx + 1, still_needed - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

LocalityChecker::LocalityChecker(const LinearCode& code, std::uint64_t guard)
    : code_(&code),
      codewords_(code.enumerate_codewords(guard)),
      dual_words_(code.dual_codewords(guard)) {}

bool LocalityChecker::recoverable_by_enumeration(int i, const CoordSet& r_set) const {
    std::map<Codeword, Elem> seen;
    for (const Codeword& w : codewords_) {
        Codeword key;
        key.reserve(r_set.size());
        for (int c : r_set) key.push_back(w[static_cast<std::size_t>(c - 1)]);
        Elem value = w[static_cast<std::size_t>(i - 1)];
        auto [it, inserted] = seen.emplace(std::move(key), value);
        if (!inserted && it->second != value) return false;
    }
    return true;
}

bool LocalityChecker::recoverable_by_dual_support(int i, const CoordSet& r_set) const {
    for (const Codeword& h : dual_words_) {
        if (h[static_cast<std::size_t>(i - 1)] == 0) continue;
        bool inside = true;
        for (int c = 1; c <= static_cast<int>(h.size()); ++c)
            if (h[static_cast<std::size_t>(c - 1)] != 0 && c != i && !r_set.contains(c)) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

bool LocalityChecker::is_recovering_set(int i, const CoordSet& r_set) const {
    check_coordinate(*code_, i);
    if (r_set.contains(i))
        throw PreconditionError("recovering set for " + std::to_string(i) + " contains it");
    if (!r_set.within_range(code_->length()))
        throw PreconditionError("recovering set member outside [1, n]");
    bool by_enum = recoverable_by_enumeration(i, r_set);
    bool by_dual = recoverable_by_dual_support(i, r_set);
    if (by_enum != by_dual)
        throw InternalError("recoverability routes disagree at coordinate " + std::to_string(i) +
                            ", set " + r_set.to_string());
    return by_enum;
}

std::vector<CoordSet> LocalityChecker::recovering_candidates(int i, int r) const {
    check_coordinate(*code_, i);
    int n = code_->length();
    std::vector<CoordSet> found;
    std::vector<int> others;
    others.reserve(static_cast<std::size_t>(n - 1));
    for (int c = 1; c <= n; ++c)
        if (c != i) others.push_back(c);

    std::vector<int> pick;
    for (int size = 1; size <= r; ++size) {
        pick.clear();
        auto by_size = [&](auto&& self, std::size_t from, int remaining) -> void {
            if (remaining == 0) {
                CoordSet candidate(pick);
                if (is_recovering_set(i, candidate)) found.push_back(std::move(candidate));
                return;
            }
            for (std::size_t idx = from;
                 idx < others.size() &&
                 others.size() - idx >= static_cast<std::size_t>(remaining);
                 ++idx) {
                pick.push_back(others[idx]);
                self(self, idx + 1, remaining - 1);
                pick.pop_back();
            }
        };
        by_size(by_size, 0, size);
    }
    return found;
}

std::optional<std::vector<CoordSet>> LocalityChecker::find_disjoint(int i, int r, int t) const {
    if (r < 1 || t < 1) throw PreconditionError("search requires r >= 1 and t >= 1");
    std::vector<CoordSet> candidates = recovering_candidates(i, r);
    std::vector<CoordSet> chosen;
    if (pick_disjoint(candidates, 0, t, chosen)) return chosen;
    return std::nullopt;
}

bool LocalityChecker::has_availability(int r, int t) const {
    for (int i = 1; i <= code_->length(); ++i)
        if (!find_disjoint(i, r, t)) return false;
    return true;
}

bool is_recovering_set(const LinearCode& code, int i, const CoordSet& r_set,
                       std::uint64_t guard) {
    return LocalityChecker(code, guard).is_recovering_set(i, r_set);
}

std::optional<std::vector<CoordSet>> find_disjoint_recovering_sets(const LinearCode& code,
                                                                   int i, int r, int t,
                                                                   std::uint64_t guard) {
    return LocalityChecker(code, guard).find_disjoint(i, r, t);
}

std::vector<int> locality_profile(const LinearCode& code, int r, std::uint64_t guard) {
    if (r < 1) throw PreconditionError("locality_profile requires r >= 1");
    LocalityChecker checker(code, guard);
    int n = code.length();
    std::vector<int> profile(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        std::vector<CoordSet> candidates = checker.recovering_candidates(i, r);
        int best = 0;
        for (int t = 1; t <= n - 1; ++t) {
            std::vector<CoordSet> chosen;
            if (!pick_disjoint(candidates, 0, t, chosen)) break;
            best = t;
        }
        profile[static_cast<std::size_t>(i - 1)] = best;
    }
    return profile;
}

void validate_family_against(const LinearCode& code, const RecoveringFamily& family,
                             std::uint64_t guard) {
    family.validate(code.length());
    LocalityChecker checker(code, guard);
    for (int i = 1; i <= code.length(); ++i)
        for (const CoordSet& s : family.sets[static_cast<std::size_t>(i - 1)])
            if (!checker.is_recovering_set(i, s))
                throw PreconditionError("set " + s.to_string() +
                                        " does not recover coordinate " + std::to_string(i));
}

}  // namespace lrc
