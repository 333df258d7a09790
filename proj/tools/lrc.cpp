// Command-line front end: bound evaluation, code analysis, constructions,
// exhaustive searches and the verification suite.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "lrc/bounds.hpp"
#include "lrc/constructions.hpp"
#include "lrc/errors.hpp"
#include "lrc/graph.hpp"
#include "lrc/search.hpp"

namespace {

using namespace lrc;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitGuard = 4;

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

std::string approx(const Rational& value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", to_double(value));
    return buf;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsOptions {
    long long r = 0, t = 1;
    std::optional<long long> n, k, n2, k2;
    bool json = false;
};

int run_bounds(const BoundsOptions& opt) {
    if (opt.n.has_value() != opt.k.has_value())
        throw PreconditionError("--n and --k must be given together");
    std::vector<BoundReport> reports;
    if (opt.n) {
        long long n_hi = opt.n2.value_or(*opt.n);
        long long k_hi = opt.k2.value_or(*opt.k);
        for (long long n = *opt.n; n <= n_hi; ++n)
            for (long long k = *opt.k; k <= std::min(k_hi, n); ++k)
                reports.push_back(make_bound_report(n, k, opt.r, opt.t));
    } else {
        reports.push_back(make_bound_report(std::nullopt, std::nullopt, opt.r, opt.t));
    }

    if (opt.json) {
        if (reports.size() == 1) {
            std::cout << reports[0].to_json().dump(2) << '\n';
        } else {
            Json all = Json::array();
            for (const BoundReport& rep : reports) all.push_back(rep.to_json());
            std::cout << all.dump(2) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << '\n';
            std::cout << reports[i].to_text();
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
    std::string file;
    int r = 0, t = 1;
    bool json = false;
    std::string family_out, graph_out, dot_out;
};

int run_analyze(const AnalyzeOptions& opt) {
    LinearCode code = load_code_file(opt.file);
    int n = code.length();
    int k = code.dimension();
    std::vector<int> profile = locality_profile(code, opt.r);
    int availability = *std::min_element(profile.begin(), profile.end());
    int distance = code.minimum_distance();

    Json out;
    out["file"] = opt.file;
    out["q"] = code.field().order();
    out["n"] = n;
    out["k"] = k;
    out["r"] = opt.r;
    out["t_requested"] = opt.t;
    out["locality_profile"] = profile;
    out["availability"] = availability;
    out["distance"] = distance;

    std::ostringstream text;
    text << "code [" << n << "," << k << "] over GF(" << code.field().order() << ") from "
         << opt.file << '\n';
    text << "distance " << distance << '\n';
    text << "locality profile (r=" << opt.r << "):";
    for (int p : profile) text << ' ' << p;
    text << '\n';

    std::string message;
    if (availability == 0) {
        message = "no locality (t=0)";
    } else if (availability < opt.t) {
        message = "availability only t=" + std::to_string(availability) +
                  " at r=" + std::to_string(opt.r) + "; requested t=" + std::to_string(opt.t);
    } else {
        RecoveringFamily family;
        family.r = opt.r;
        family.t = opt.t;
        family.sets.reserve(static_cast<std::size_t>(n));
        LocalityChecker checker(code);
        for (int i = 1; i <= n; ++i)
            family.sets.push_back(*checker.find_disjoint(i, opt.r, opt.t));
        family.validate(n);
        RecoveringGraph graph = RecoveringGraph::from_family(family, n);

        BoundReport report = make_bound_report(n, k, opt.r, opt.t, distance);
        out["bounds"] = report.to_json();
        out["family"] = family.to_json();
        out["family_has_undersized_sets"] = family.has_undersized_sets();
        text << report.to_text();
        if (family.has_undersized_sets())
            text << "note: some recovering sets are smaller than r; bound formulas assume "
                    "uniform size r\n";

        message = *report.meets_distance_bound_with_equality
                      ? "meets distance bound with equality"
                      : "distance below the bound by " +
                            std::to_string(*report.distance_bound_value - distance);
        if (!opt.family_out.empty())
            write_text_file(opt.family_out, family.to_json().dump(2) + "\n");
        if (!opt.graph_out.empty())
            write_text_file(opt.graph_out, graph.to_json().dump(2) + "\n");
        if (!opt.dot_out.empty()) write_text_file(opt.dot_out, graph.to_dot());
    }
    out["message"] = message;
    text << message << '\n';

    if (opt.json)
        std::cout << out.dump(2) << '\n';
    else
        std::cout << text.str();
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify-paper

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using CheckBody = std::function<std::string()>;  // returns detail, throws on failure

void run_check(std::vector<CheckResult>& results, const std::string& name,
               const CheckBody& body) {
    CheckResult result;
    result.name = name;
    try {
        result.detail = body();
        result.pass = true;
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = e.what();
    }
    results.push_back(std::move(result));
}

void expect(bool condition, const std::string& message) {
    if (!condition) throw Error(message);
}

std::vector<CheckResult> run_paper_checks(const std::string& fixture_dir) {
    std::vector<CheckResult> results;

    run_check(results, "hamming_construction", [] {
        Construction c = shortened_hamming_6_3();
        Matrix printed = Matrix::from_rows(Field::of_order(2), {{0, 0, 0, 1, 1, 1},
                                                                {0, 1, 1, 0, 0, 1},
                                                                {1, 0, 1, 0, 1, 0}});
        expect(c.code.parity_check() == printed, "parity-check matrix drifted");
        expect(c.code.minimum_distance() == 3, "distance != 3");
        expect(c.code.distance_via_restriction() == 3, "restriction-scan distance != 3");
        return std::string("[6,3] code, d=3 via both routes");
    });

    run_check(results, "hamming_availability", [] {
        Construction c = shortened_hamming_6_3();
        std::vector<int> profile = locality_profile(c.code, 2);
        expect(profile == std::vector<int>(6, 2), "profile != (2,2,2,2,2,2)");
        validate_family_against(c.code, c.family);
        expect(!c.family.has_undersized_sets(), "sets smaller than 2");
        return std::string("two disjoint size-2 recovering sets at every coordinate");
    });

    run_check(results, "hamming_distance_bound_equality", [] {
        expect(distance_bound(6, 3, 2, 2) == 3, "bound != 3");
        expect(shortened_hamming_6_3().code.minimum_distance() == 3, "distance != 3");
        return std::string("d = 3 = bound(6,3,2,2)");
    });

    run_check(results, "rate_bound_t1_reduction", [] {
        for (long long r = 1; r <= 100; ++r)
            expect(rate_bound(r, 1) == rate_bound_t1(r), "mismatch at r=" + std::to_string(r));
        return std::string("t=1 bound equals r/(r+1) for r in [1,100]");
    });

    run_check(results, "rate_bound_two_sets_form", [] {
        expect(rate_bound(2, 2) == make_rational(8, 15), "rate_bound(2,2) != 8/15");
        for (long long r = 1; r <= 40; ++r)
            expect(rate_bound(r, 2) == make_rational(2 * r * r, (r + 1) * (2 * r + 1)),
                   "2r^2/((r+1)(2r+1)) form fails at r=" + std::to_string(r));
        return std::string("two-set bound matches 2r^2/((r+1)(2r+1)); 8/15 at r=2");
    });

    run_check(results, "product_code_construction", [] {
        Construction c = parity_product_code(2, 2);
        expect(c.code.length() == 9 && c.code.dimension() == 4, "not a [9,4] code");
        validate_family_against(c.code, c.family);
        expect(c.code.minimum_distance() == 4, "distance != 4");
        RateGapReport gap = rate_gap_report(2, 2);
        expect(gap.construction_rate == make_rational(4, 9), "rate != 4/9");
        expect(gap.gap == make_rational(4, 45), "gap != 4/45");
        return std::string("[9,4] square of the single-parity-check code, rate 4/9, d=4");
    });

    run_check(results, "coloring_probability_forms", [] {
        for (long long r = 1; r <= 30; ++r)
            for (long long t = 1; t <= 30; ++t)
                expect(1 - coloring_probability(r, t) == rate_bound(r, t),
                       "complement identity fails at r=" + std::to_string(r) +
                           ", t=" + std::to_string(t));
        return std::string("alternating sum = product form and complement = rate bound, r,t <= 30");
    });

    run_check(results, "rate_root_sandwich", [] {
        for (long long r = 1; r <= 6; ++r)
            for (long long t = 1; t <= 30; ++t) {
                SandwichCheck c = rroot_sandwich(r, t);
                expect(c.lower_ok && c.upper_ok,
                       "sandwich fails at r=" + std::to_string(r) + ", t=" + std::to_string(t));
            }
        return std::string("(t+1) <= P^r <= (t+1)(1+1/r)^r for r <= 6, t <= 30");
    });

    run_check(results, "expansion_constants", [] {
        for (long long r = 2; r <= 6; ++r) expect(expansion_constant(r, 0) == 1, "e_0 != 1");
        expect(expansion_constant(2, 2) == make_rational(7, 4), "e_2 != 7/4 at r=2");
        for (long long r = 2; r <= 5; ++r)
            for (long long t = 1; t <= 8; ++t)
                expect(expansion_constant(r, t) ==
                           expansion_constant(r, t - 1) +
                               make_rational(BigInt(1),
                                             big_pow(to_big(r), static_cast<unsigned long>(t))),
                       "recurrence fails");
        return std::string("e_0 = 1, e_2 = 7/4 at r=2, recurrence e_t = e_{t-1} + r^-t");
    });

    run_check(results, "base_r_identity", [] {
        for (long long m = 0; m <= 1000; ++m)
            for (long long r = 2; r <= 5; ++r)
                for (long long t = 0; t <= 6; ++t)
                    expect(base_r_identity_check(m, r, t), "fails at m=" + std::to_string(m) +
                                                               ", r=" + std::to_string(r) +
                                                               ", t=" + std::to_string(t));
        return std::string("digit identity for m <= 1000, r in [2,5], t in [0,6]");
    });

    run_check(results, "expander_sets", [] {
        RecoveringGraph g = RecoveringGraph::from_family(parity_product_code(2, 2).family, 9);
        for (int v = 1; v <= 9; ++v)
            for (int t_prime = 0; t_prime <= 2; ++t_prime) {
                CoordSet s = build_expander_set(g, v, t_prime);
                expect(static_cast<int>(s.size()) <= (1 << t_prime), "seed too large");
                expect(closure(g, s).contains(v), "anchor not recovered");
                expect(expansion_ratio(g, s) >= expansion_constant(2, t_prime),
                       "ratio below e_t'");
            }
        return std::string("|S| <= 2^t', anchor recovered, ratio >= e_t' on the 3x3 grid");
    });

    run_check(results, "distance_coloring_procedure", [] {
        RecoveringGraph product =
            RecoveringGraph::from_family(parity_product_code(2, 2).family, 9);
        CoordSet s = distance_bound_coloring(product, 4);
        expect(static_cast<int>(s.size()) <= 3, "budget exceeded");
        expect(static_cast<int>(closure(product, s).size()) >= 4, "closure below 4");

        RecoveringGraph hamming =
            RecoveringGraph::from_family(shortened_hamming_6_3().family, 6);
        CoordSet sh = distance_bound_coloring(hamming, 3);
        expect(static_cast<int>(closure(hamming, sh).size()) >= 3, "closure below 3");
        return std::string("closure >= 4 on the grid (k=4), >= 3 on the Hamming graph (k=3)");
    });

    run_check(results, "permutation_coloring_target", [] {
        RecoveringGraph g = RecoveringGraph::from_family(parity_product_code(2, 2).family, 9);
        ColoredSetSearch search = find_large_colored_set(g, 200, 7);
        expect(search.expected_size == make_rational(21, 5), "expectation != 21/5");
        expect(search.best_size >= 5, "no permutation reached the ceiling of 21/5");
        auto order = recovery_elimination_order(g, search.best_u);
        expect(order.has_value(), "elimination stalled on the best colored set");
        return std::string("best |U| >= 5 against expectation 21/5; elimination succeeds");
    });

    if (!fixture_dir.empty()) {
        run_check(results, "hamming_fixture", [&fixture_dir] {
            LinearCode fixture = load_code_file(fixture_dir + "/hamming63.code");
            Construction c = shortened_hamming_6_3();
            expect(fixture.enumerate_codewords() == c.code.enumerate_codewords(),
                   "fixture codewords differ from the construction");
            expect(fixture.minimum_distance() == 3, "fixture distance != 3");
            return std::string("hamming63.code matches the built-in construction");
        });
        run_check(results, "product_fixture", [&fixture_dir] {
            LinearCode fixture = load_code_file(fixture_dir + "/pp22.code");
            Construction c = parity_product_code(2, 2);
            expect(fixture.enumerate_codewords() == c.code.enumerate_codewords(),
                   "fixture codewords differ from the construction");
            return std::string("pp22.code matches the built-in construction");
        });
    }

    return results;
}

struct VerifyOptions {
    bool json = false;
    std::string fixture_dir;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<CheckResult> results = run_paper_checks(opt.fixture_dir);
    bool all_pass = std::all_of(results.begin(), results.end(),
                                [](const CheckResult& r) { return r.pass; });
    if (opt.json) {
        Json out;
        out["all_pass"] = all_pass;
        Json checks = Json::array();
        for (const CheckResult& r : results) {
            Json c;
            c["name"] = r.name;
            c["pass"] = r.pass;
            c["detail"] = r.detail;
            checks.push_back(std::move(c));
        }
        out["checks"] = std::move(checks);
        std::cout << out.dump(2) << '\n';
    } else {
        std::size_t passed = 0;
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " - " << r.detail << '\n';
            if (r.pass) ++passed;
        }
        std::cout << passed << "/" << results.size() << " checks passed\n";
    }
    return all_pass ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
    std::string kind;
    int r = 2, t = 2;
    std::string out;
    std::string family_out;
};

int run_construct(const ConstructOptions& opt) {
    Construction c = [&] {
        if (opt.kind == "parity-product") return parity_product_code(opt.r, opt.t);
        if (opt.kind == "hamming63") {
            if (opt.r != 2 || opt.t != 2)
                throw PreconditionError("hamming63 is a fixed (r=2, t=2) construction");
            return shortened_hamming_6_3();
        }
        throw PreconditionError("unknown construction '" + opt.kind +
                                "' (expected parity-product or hamming63)");
    }();

    bool as_parity = opt.kind == "hamming63";
    std::ostringstream comment;
    comment << opt.kind << " r=" << opt.r << " t=" << opt.t << " [" << c.code.length() << ","
            << c.code.dimension() << "] over GF(" << c.code.field().order() << ")";
    save_code_file(c.code, opt.out, as_parity, comment.str());

    std::string family_path = opt.family_out.empty() ? opt.out + ".family.json" : opt.family_out;
    write_text_file(family_path, c.family.to_json().dump(2) + "\n");

    std::cout << "wrote " << opt.out << " ([" << c.code.length() << "," << c.code.dimension()
              << "] over GF(" << c.code.field().order() << ")) and " << family_path << '\n';
    if (opt.kind == "parity-product") {
        RateGapReport gap = rate_gap_report(opt.r, opt.t);
        std::cout << "construction rate " << to_string(gap.construction_rate) << ", rate bound "
                  << to_string(gap.bound) << ", gap " << to_string(gap.gap)
                  << " (conjectured largest possible rate for moderate t; not asserted)\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchOptions {
    int n = 0, k = 0, r = 0, t = 0;
    unsigned q = 2;
    int jobs = 1;
    bool json = false;
};

int run_search(const SearchOptions& opt) {
    OracleResult result =
        max_distance_with_locality(opt.n, opt.k, opt.q, opt.r, opt.t, opt.jobs);
    long long bound = distance_bound(opt.n, opt.k, opt.r, opt.t);
    std::string flag = !result.best_distance
                           ? "INFEASIBLE"
                           : (*result.best_distance == bound ? "TIGHT" : "GAP");

    if (opt.json) {
        Json out;
        out["n"] = opt.n;
        out["k"] = opt.k;
        out["q"] = opt.q;
        out["r"] = opt.r;
        out["t"] = opt.t;
        out["codes_searched"] = result.codes_searched.get_si();
        out["codes_with_locality"] = result.codes_with_locality;
        out["bound"] = bound;
        if (result.best_distance) out["oracle"] = *result.best_distance;
        else out["oracle"] = nullptr;
        out["flag"] = flag;
        if (result.witness) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < result.witness->rows(); ++i)
                rows.push_back(result.witness->row(i));
            out["witness_generator"] = std::move(rows);
        } else {
            out["witness_generator"] = nullptr;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "searched " << result.codes_searched.get_str() << " [" << opt.n << ","
                  << opt.k << "] codes over GF(" << opt.q << "); " << result.codes_with_locality
                  << " admit (r=" << opt.r << ", t=" << opt.t << ") availability\n";
        if (result.best_distance)
            std::cout << "oracle " << *result.best_distance << ", bound " << bound << ", "
                      << flag << '\n';
        else
            std::cout << "oracle -, bound " << bound << ", " << flag << '\n';
        if (result.witness) {
            std::cout << "witness generator:\n";
            for (std::size_t i = 0; i < result.witness->rows(); ++i) {
                for (std::size_t j = 0; j < result.witness->cols(); ++j) {
                    if (j) std::cout << ' ';
                    std::cout << result.witness->at(i, j);
                }
                std::cout << '\n';
            }
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
    SweepRange range;
    int jobs = 1;
    bool json = false;
    std::string csv_out;
};

int run_sweep(const SweepOptions& opt) {
    std::vector<SweepCell> cells = bound_sweep(opt.range, opt.jobs);
    if (!opt.csv_out.empty()) write_text_file(opt.csv_out, sweep_to_csv(cells));
    if (opt.json)
        std::cout << sweep_to_json(cells).dump(2) << '\n';
    else if (opt.csv_out.empty())
        std::cout << sweep_to_csv(cells);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// permute

struct PermuteOptions {
    std::string file;
    int r = 0, t = 0;
    int trials = 1;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool json = false;
};

RecoveringFamily family_for(const LinearCode& code, int r, int t) {
    LocalityChecker checker(code);
    RecoveringFamily family;
    family.r = r;
    family.t = t;
    for (int i = 1; i <= code.length(); ++i) {
        auto sets = checker.find_disjoint(i, r, t);
        if (!sets)
            throw PreconditionError("coordinate " + std::to_string(i) + " lacks " +
                                    std::to_string(t) + " disjoint recovering sets of size <= " +
                                    std::to_string(r));
        family.sets.push_back(*sets);
    }
    family.validate(code.length());
    return family;
}

int run_permute(const PermuteOptions& opt) {
    LinearCode code = load_code_file(opt.file);
    int n = code.length();
    RecoveringGraph graph = RecoveringGraph::from_family(family_for(code, opt.r, opt.t), n);
    ColoredSetSearch search = find_large_colored_set(graph, opt.trials, opt.seed, opt.jobs);
    auto order = recovery_elimination_order(graph, search.best_u);
    bool rate_consistent = code.dimension() <= n - search.best_size;

    if (opt.json) {
        Json out;
        out["file"] = opt.file;
        out["n"] = n;
        out["k"] = code.dimension();
        out["r"] = opt.r;
        out["t"] = opt.t;
        out["trials"] = search.trials;
        out["seed"] = search.seed;
        out["best_size"] = search.best_size;
        out["best_trial"] = search.best_trial;
        out["best_u"] = search.best_u.values();
        out["best_tau"] = search.best_tau;
        out["expected_size"] = to_string(search.expected_size);
        out["expected_size_approx"] = to_double(search.expected_size);
        if (order) out["elimination_order"] = *order;
        else out["elimination_order"] = nullptr;
        out["k_le_n_minus_u"] = rate_consistent;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "n=" << n << " r=" << opt.r << " t=" << opt.t << " trials=" << search.trials
                  << " seed=" << search.seed << '\n';
        std::cout << "best |U| = " << search.best_size << " (trial " << search.best_trial
                  << "), target " << to_string(search.expected_size) << " (~"
                  << approx(search.expected_size) << ")\n";
        std::cout << "U = " << search.best_u.to_string() << '\n';
        if (order) {
            std::cout << "elimination order:";
            for (int v : *order) std::cout << ' ' << v;
            std::cout << '\n';
        } else {
            std::cout << "elimination stalled\n";
        }
        std::cout << "k <= n - |U|: " << code.dimension() << " <= " << n - search.best_size
                  << (rate_consistent ? " ok" : " VIOLATED") << '\n';
    }
    return order.has_value() && rate_consistent ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// expander

struct ExpanderOptions {
    std::string file;
    int r = 0, t = 0;
    int vertex = 1;
    std::optional<int> order;
    bool json = false;
};

int run_expander(const ExpanderOptions& opt) {
    LinearCode code = load_code_file(opt.file);
    RecoveringGraph graph =
        RecoveringGraph::from_family(family_for(code, opt.r, opt.t), code.length());
    int t_prime = opt.order.value_or(opt.t);
    CoordSet seed = build_expander_set(graph, opt.vertex, t_prime);
    CoordSet closed = closure(graph, seed);
    Rational ratio = expansion_ratio(graph, seed);
    Rational target = expansion_constant(graph.locality(), t_prime);

    if (opt.json) {
        Json out;
        out["file"] = opt.file;
        out["vertex"] = opt.vertex;
        out["order"] = t_prime;
        out["seed"] = seed.values();
        out["closure"] = closed.values();
        out["ratio"] = to_string(ratio);
        out["ratio_target"] = to_string(target);
        out["ratio_ok"] = (ratio >= target);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "vertex " << opt.vertex << ", order " << t_prime << '\n';
        std::cout << "S = " << seed.to_string() << " (size " << seed.size() << ")\n";
        std::cout << "closure = " << closed.to_string() << " (size " << closed.size() << ")\n";
        std::cout << "ratio " << to_string(ratio) << " (~" << approx(ratio)
                  << "), guarantee e_" << t_prime << " = " << to_string(target) << '\n';
    }
    return ratio >= target ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "bounds and constructions for erasure codes with several disjoint recovering sets"};
    app.require_subcommand(1);

    BoundsOptions bounds_opt;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate rate and distance bounds");
    bounds_cmd->add_option("--r", bounds_opt.r, "recovering-set size")
        ->required()
        ->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--t", bounds_opt.t, "number of disjoint recovering sets")
        ->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--n", bounds_opt.n, "code length");
    bounds_cmd->add_option("--k", bounds_opt.k, "code dimension");
    bounds_cmd->add_option("--n2", bounds_opt.n2, "table upper end for n");
    bounds_cmd->add_option("--k2", bounds_opt.k2, "table upper end for k");
    bounds_cmd->add_flag("--json", bounds_opt.json, "machine-readable output");

    AnalyzeOptions analyze_opt;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "analyze a code file against the bounds");
    analyze_cmd->add_option("file", analyze_opt.file, "code file")->required();
    analyze_cmd->add_option("--r", analyze_opt.r, "recovering-set size")
        ->required()
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--t", analyze_opt.t, "requested availability")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_flag("--json", analyze_opt.json, "machine-readable output");
    analyze_cmd->add_option("--family-json", analyze_opt.family_out,
                            "write the recovering family here");
    analyze_cmd->add_option("--graph-json", analyze_opt.graph_out,
                            "write the recovering graph here");
    analyze_cmd->add_option("--dot", analyze_opt.dot_out,
                            "write a DOT rendering of the graph here");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the verification suite");
    verify_cmd->add_flag("--json", verify_opt.json, "machine-readable output");
    verify_cmd->add_option("--fixture-dir", verify_opt.fixture_dir,
                           "also check the shipped fixture files in this directory");

    ConstructOptions construct_opt;
    CLI::App* construct_cmd = app.add_subcommand("construct", "emit a named construction");
    construct_cmd->add_option("kind", construct_opt.kind, "parity-product or hamming63")
        ->required();
    construct_cmd->add_option("--r", construct_opt.r, "message symbols per parity group")
        ->check(CLI::PositiveNumber);
    construct_cmd->add_option("--t", construct_opt.t, "number of recovering sets")
        ->check(CLI::PositiveNumber);
    construct_cmd->add_option("-o,--out", construct_opt.out, "output code file")->required();
    construct_cmd->add_option("--family-json", construct_opt.family_out,
                              "recovering-family sidecar path (default: <out>.family.json)");

    SearchOptions search_opt;
    CLI::App* search_cmd =
        app.add_subcommand("search", "exhaustive max-distance search with locality");
    search_cmd->add_option("--n", search_opt.n, "code length")
        ->required()
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--k", search_opt.k, "code dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--q", search_opt.q, "field order")->check(CLI::PositiveNumber);
    search_cmd->add_option("--r", search_opt.r, "recovering-set size")
        ->required()
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--t", search_opt.t, "availability")
        ->required()
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--jobs", search_opt.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    search_cmd->add_flag("--json", search_opt.json, "machine-readable output");

    SweepOptions sweep_opt;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "bound-vs-oracle table over parameter ranges");
    sweep_cmd->add_option("--n-min", sweep_opt.range.n_min)->required();
    sweep_cmd->add_option("--n-max", sweep_opt.range.n_max)->required();
    sweep_cmd->add_option("--k-min", sweep_opt.range.k_min)->required();
    sweep_cmd->add_option("--k-max", sweep_opt.range.k_max)->required();
    sweep_cmd->add_option("--r-min", sweep_opt.range.r_min);
    sweep_cmd->add_option("--r-max", sweep_opt.range.r_max);
    sweep_cmd->add_option("--t-min", sweep_opt.range.t_min);
    sweep_cmd->add_option("--t-max", sweep_opt.range.t_max);
    sweep_cmd->add_option("--q", sweep_opt.range.q)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--jobs", sweep_opt.jobs)->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--json", sweep_opt.json, "machine-readable output");
    sweep_cmd->add_option("--csv", sweep_opt.csv_out, "write CSV here instead of stdout");

    PermuteOptions permute_opt;
    CLI::App* permute_cmd =
        app.add_subcommand("permute", "search permutations for a large colored vertex set");
    permute_cmd->add_option("file", permute_opt.file, "code file")->required();
    permute_cmd->add_option("--r", permute_opt.r, "recovering-set size")
        ->required()
        ->check(CLI::PositiveNumber);
    permute_cmd->add_option("--t", permute_opt.t, "availability")
        ->required()
        ->check(CLI::PositiveNumber);
    permute_cmd->add_option("--trials", permute_opt.trials, "number of sampled permutations")
        ->required()
        ->check(CLI::PositiveNumber);
    permute_cmd->add_option("--seed", permute_opt.seed, "PRNG seed")->required();
    permute_cmd->add_option("--jobs", permute_opt.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    permute_cmd->add_flag("--json", permute_opt.json, "machine-readable output");

    ExpanderOptions expander_opt;
    CLI::App* expander_cmd =
        app.add_subcommand("expander", "build a high-expansion seed set for one coordinate");
    expander_cmd->add_option("file", expander_opt.file, "code file")->required();
    expander_cmd->add_option("--r", expander_opt.r, "recovering-set size")
        ->required()
        ->check(CLI::PositiveNumber);
    expander_cmd->add_option("--t", expander_opt.t, "availability")
        ->required()
        ->check(CLI::PositiveNumber);
    expander_cmd->add_option("--vertex", expander_opt.vertex, "anchor coordinate")->required();
    expander_cmd->add_option("--order", expander_opt.order, "recursion order t' (default t)");
    expander_cmd->add_flag("--json", expander_opt.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bounds_cmd) return run_bounds(bounds_opt);
        if (*analyze_cmd) return run_analyze(analyze_opt);
        if (*verify_cmd) return run_verify(verify_opt);
        if (*construct_cmd) return run_construct(construct_opt);
        if (*search_cmd) return run_search(search_opt);
        if (*sweep_cmd) return run_sweep(sweep_opt);
        if (*permute_cmd) return run_permute(permute_opt);
        if (*expander_cmd) return run_expander(expander_opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const GuardError& e) {
        std::cerr << "guard error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const UnsupportedOrderError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitUsage;
}
