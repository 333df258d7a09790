#include "lrc/code.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lrc/errors.hpp"

namespace lrc {

CoordSet::CoordSet(std::vector<int> coords) : v_(std::move(coords)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

CoordSet CoordSet::full(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return CoordSet(std::move(v));
}

bool CoordSet::contains(int c) const {
    return std::binary_search(v_.begin(), v_.end(), c);
}

bool CoordSet::within_range(int n) const {
    return v_.empty() || (v_.front() >= 1 && v_.back() <= n);
}

bool CoordSet::disjoint_with(const CoordSet& other) const {
    for (int c : other.v_)
        if (contains(c)) return false;
    return true;
}

bool CoordSet::subset_of(const CoordSet& other) const {
    for (int c : v_)
        if (!other.contains(c)) return false;
    return true;
}

CoordSet CoordSet::united(const CoordSet& other) const {
    std::vector<int> merged;
    merged.reserve(v_.size() + other.v_.size());
    std::merge(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
               std::back_inserter(merged));
    return CoordSet(std::move(merged));
}

CoordSet CoordSet::minus(const CoordSet& other) const {
    std::vector<int> rest;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(rest));
    return CoordSet(std::move(rest));
}

bool CoordSet::operator<(const CoordSet& other) const {
    if (v_.size() != other.v_.size()) return v_.size() < other.v_.size();
    return v_ < other.v_;
}

std::string CoordSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v_[i]);
    }
    return s + "}";
}

LinearCode::LinearCode(Field f, Matrix g, Matrix h)
    : field_(f), generator_(std::move(g)), parity_(std::move(h)) {}

LinearCode LinearCode::from_generator(Field f, const Matrix& g) {
    if (g.rows() < 1 || g.rows() > g.cols())
        throw PreconditionError("generator must satisfy 1 <= k <= n");
    if (g.rank() != g.rows()) throw PreconditionError("generator matrix is not full rank");
    return LinearCode(f, g, g.nullspace_basis());
}

LinearCode LinearCode::from_parity(Field f, std::size_t n, std::size_t k, const Matrix& h) {
    if (k < 1 || k > n) throw PreconditionError("parity input must satisfy 1 <= k <= n");
    if (h.cols() != n) throw PreconditionError("parity matrix width differs from n");
    if (h.rank() != n - k)
        throw PreconditionError("parity matrix rank " + std::to_string(h.rank()) +
                                " != n - k = " + std::to_string(n - k));
    Matrix generator = h.nullspace_basis();
    if (h.rows() == n - k) return LinearCode(f, generator, h);
    // Redundant rows: keep an rref basis instead.
    Matrix reduced = h.rref();
    Matrix basis(f, n - k, n);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = reduced.at(i, j);
    return LinearCode(f, generator, basis);
}

BigInt LinearCode::codeword_count() const {
    return big_pow(BigInt(field_.order()), static_cast<unsigned long>(dimension()));
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t guard,
                            const char* what) {
    std::uint64_t count = 1;
    for (int i = 0; i < exp; ++i) {
        if (count > guard / base) {
            BigInt exact = big_pow(BigInt(base), static_cast<unsigned long>(exp));
            throw GuardError(std::string(what) + ": " + std::to_string(base) + "^" +
                             std::to_string(exp) + " = " + exact.get_str() +
                             " exceeds enumeration guard " + std::to_string(guard));
        }
        count *= base;
    }
    return count;
}

// All coefficient combinations against the rows of m, lexicographic in the
// coefficient vector (first coefficient most significant).
std::vector<Codeword> span_rows(const Field& f, const Matrix& m, std::uint64_t guard,
                                const char* what) {
    int rows = static_cast<int>(m.rows());
    int cols = static_cast<int>(m.cols());
    std::uint64_t total = checked_power(f.order(), rows, guard, what);
    std::vector<Codeword> out;
    out.reserve(total);
    std::vector<Elem> coeff(static_cast<std::size_t>(rows), 0);
    Codeword current(static_cast<std::size_t>(cols), 0);
    for (std::uint64_t idx = 0;; ++idx) {
        out.push_back(current);
        if (idx + 1 == total) break;
        // increment coefficient vector, least significant digit last
        int pos = rows - 1;
        while (true) {
            Elem old = coeff[static_cast<std::size_t>(pos)];
            Elem next = static_cast<Elem>(old + 1 == f.order() ? 0 : old + 1);
            coeff[static_cast<std::size_t>(pos)] = next;
            // update current by (next - old) * row(pos)
            Elem delta = f.sub(next, old);
            for (int j = 0; j < cols; ++j)
                current[static_cast<std::size_t>(j)] =
                    f.add(current[static_cast<std::size_t>(j)],
                          f.mul(delta, m.at(static_cast<std::size_t>(pos),
                                            static_cast<std::size_t>(j))));
            if (next != 0) break;
            --pos;
        }
    }
    return out;
}

}  // namespace

std::vector<Codeword> LinearCode::enumerate_codewords(std::uint64_t guard) const {
    return span_rows(field_, generator_, guard, "codeword enumeration");
}

int LinearCode::minimum_distance(std::uint64_t guard) const {
    int best = length() + 1;
    for (const Codeword& w : enumerate_codewords(guard)) {
        int weight = hamming_weight(w);
        if (weight != 0 && weight < best) best = weight;
    }
    return best;
}

std::vector<Codeword> LinearCode::restrict(const CoordSet& I, std::uint64_t guard) const {
    if (!I.within_range(length()))
        throw PreconditionError("restriction index out of range for length " +
                                std::to_string(length()));
    std::set<Codeword> projected;
    for (const Codeword& w : enumerate_codewords(guard)) {
        Codeword p;
        p.reserve(I.size());
        for (int c : I) p.push_back(w[static_cast<std::size_t>(c - 1)]);
        projected.insert(std::move(p));
    }
    return std::vector<Codeword>(projected.begin(), projected.end());
}

int LinearCode::distance_via_restriction(std::uint64_t guard) const {
    int n = length();
    if (n > 12) throw PreconditionError("distance_via_restriction limited to n <= 12");
    std::uint64_t full = checked_power(field_.order(), dimension(), guard, "restriction scan");
    int best = 0;  // max |I| with |C_I| < q^k
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best || size == n) continue;
        std::vector<int> coords;
        for (int c = 1; c <= n; ++c)
            if (mask & (std::uint32_t(1) << (c - 1))) coords.push_back(c);
        if (restrict(CoordSet(std::move(coords)), guard).size() < full) best = size;
    }
    return n - best;
}

std::vector<Codeword> LinearCode::dual_codewords(std::uint64_t guard) const {
    return span_rows(field_, parity_, guard, "dual enumeration");
}

int hamming_weight(const Codeword& w) {
    int weight = 0;
    for (Elem e : w)
        if (e != 0) ++weight;
    return weight;
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

long parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line);
    }
}

}  // namespace

LinearCode read_code_file(std::istream& in) {
    std::vector<Line> lines = tokenize(in);
    if (lines.size() < 4) throw ParseError("truncated code file", lines.empty() ? 1 : lines.back().number);

    const Line& lq = lines[0];
    if (lq.tokens.size() != 2 || lq.tokens[0] != "q")
        throw ParseError("expected 'q <order>'", lq.number);
    long q = parse_int(lq.tokens[1], lq.number);
    if (q < 2 || q > 257) throw ParseError("unsupported field order " + std::to_string(q), lq.number);
    Field field = [&] {
        try {
            return Field::of_order(static_cast<unsigned>(q));
        } catch (const UnsupportedOrderError& e) {
            throw ParseError(e.what(), lq.number);
        }
    }();

    const Line& lnk = lines[1];
    if (lnk.tokens.size() != 4 || lnk.tokens[0] != "n" || lnk.tokens[2] != "k")
        throw ParseError("expected 'n <length> k <dimension>'", lnk.number);
    long n = parse_int(lnk.tokens[1], lnk.number);
    long k = parse_int(lnk.tokens[3], lnk.number);
    if (n < 1 || k < 1 || k > n) throw ParseError("need 1 <= k <= n", lnk.number);

    const Line& lkind = lines[2];
    if (lkind.tokens.size() != 2 || lkind.tokens[0] != "matrix" ||
        (lkind.tokens[1] != "generator" && lkind.tokens[1] != "parity"))
        throw ParseError("expected 'matrix generator' or 'matrix parity'", lkind.number);
    bool generator_form = lkind.tokens[1] == "generator";

    std::vector<std::vector<Elem>> rows;
    for (std::size_t li = 3; li < lines.size(); ++li) {
        const Line& l = lines[li];
        if (l.tokens.size() != static_cast<std::size_t>(n))
            throw ParseError("matrix row has " + std::to_string(l.tokens.size()) +
                                 " entries, expected " + std::to_string(n),
                             l.number);
        std::vector<Elem> row;
        row.reserve(static_cast<std::size_t>(n));
        for (const std::string& tok : l.tokens) {
            long v = parse_int(tok, l.number);
            if (v < 0 || v >= q)
                throw ParseError("entry " + tok + " outside [0, " + std::to_string(q) + ")",
                                 l.number);
            row.push_back(static_cast<Elem>(v));
        }
        rows.push_back(std::move(row));
    }

    int last_line = lines.back().number;
    Matrix m = Matrix::from_rows(field, rows);
    try {
        if (generator_form) {
            if (rows.size() != static_cast<std::size_t>(k))
                throw ParseError("generator needs exactly k rows", last_line);
            return LinearCode::from_generator(field, m);
        }
        return LinearCode::from_parity(field, static_cast<std::size_t>(n),
                                       static_cast<std::size_t>(k), m);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), last_line);
    }
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_code_file(in);
}

std::string write_code_file(const LinearCode& code, bool as_parity, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "q " << code.field().order() << '\n';
    out << "n " << code.length() << " k " << code.dimension() << '\n';
    out << "matrix " << (as_parity ? "parity" : "generator") << '\n';
    const Matrix& m = as_parity ? code.parity_check() : code.generator();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

void save_code_file(const LinearCode& code, const std::string& path, bool as_parity,
                    const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << write_code_file(code, as_parity, comment);
}

}  // namespace lrc
