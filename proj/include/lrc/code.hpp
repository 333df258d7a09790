#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/rational.hpp"

namespace lrc {

/// Codewords are enumerated only while q^k stays below this many vectors.
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 24;

using Codeword = std::vector<Elem>;

/// Sorted set of 1-based coordinate indices.
class CoordSet {
public:
    CoordSet() = default;
    explicit CoordSet(std::vector<int> coords);
    static CoordSet of(std::initializer_list<int> coords) {
        return CoordSet(std::vector<int>(coords));
    }
    /// {1, ..., n}
    static CoordSet full(int n);

    bool contains(int c) const;
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    int operator[](std::size_t i) const { return v_[i]; }
    const std::vector<int>& values() const { return v_; }

    bool within_range(int n) const;
    bool disjoint_with(const CoordSet& other) const;
    bool subset_of(const CoordSet& other) const;
    CoordSet united(const CoordSet& other) const;
    CoordSet minus(const CoordSet& other) const;

    bool operator==(const CoordSet&) const = default;
    /// Size first, then lexicographic membership.
    bool operator<(const CoordSet& other) const;

    std::string to_string() const;  // "{2,4}"

private:
    std::vector<int> v_;
};

/// A linear [n, k] block code over GF(q), stored via its generator matrix with
/// the parity-check matrix cached. Immutable after construction.
class LinearCode {
public:
    /// G must be k x n of rank k.
    static LinearCode from_generator(Field f, const Matrix& g);
    /// Any row set of rank n - k is accepted. Rows are kept verbatim when
    /// exactly n - k are given; redundant inputs are compressed to an rref basis.
    static LinearCode from_parity(Field f, std::size_t n, std::size_t k, const Matrix& h);

    const Field& field() const { return field_; }
    int length() const { return static_cast<int>(generator_.cols()); }
    int dimension() const { return static_cast<int>(generator_.rows()); }
    const Matrix& generator() const { return generator_; }
    const Matrix& parity_check() const { return parity_; }

    BigInt codeword_count() const;  // q^k, exact

    /// All q^k codewords in lexicographic order of message vectors.
    std::vector<Codeword> enumerate_codewords(std::uint64_t guard = kEnumerationGuard) const;

    /// Minimal Hamming weight over nonzero codewords.
    int minimum_distance(std::uint64_t guard = kEnumerationGuard) const;

    /// The set {x_I : x in C}, sorted, duplicates collapsed.
    std::vector<Codeword> restrict(const CoordSet& I,
                                   std::uint64_t guard = kEnumerationGuard) const;

    /// Definitional distance n - max{|I| : |C_I| < q^k} via full subset scan.
    /// Oracle use only; requires n <= 12.
    int distance_via_restriction(std::uint64_t guard = kEnumerationGuard) const;

    /// All q^(n-k) vectors of the row space of the parity-check matrix.
    std::vector<Codeword> dual_codewords(std::uint64_t guard = kEnumerationGuard) const;

private:
    LinearCode(Field f, Matrix g, Matrix h);

    Field field_;
    Matrix generator_;
    Matrix parity_;
};

int hamming_weight(const Codeword& w);

/// Plain-text code file format ('#' starts a comment):
///   q <order>
///   n <length> k <dimension>
///   matrix generator | matrix parity
///   <one row per line, entries separated by single spaces>
LinearCode read_code_file(std::istream& in);
LinearCode load_code_file(const std::string& path);
/// Writes the generator form unless as_parity is set.
std::string write_code_file(const LinearCode& code, bool as_parity = false,
                            const std::string& comment = "");
void save_code_file(const LinearCode& code, const std::string& path, bool as_parity = false,
                    const std::string& comment = "");

}  // namespace lrc
