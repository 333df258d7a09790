#pragma once

#include <cstdint>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

/// A field element in canonical integer encoding, always in [0, q).
/// For prime fields this is the residue; for GF(2^m) the bits are the
/// coefficients of the polynomial representative.
using Elem = std::uint16_t;

/// Exact arithmetic over GF(q) for q a prime <= 257 or a power of two <= 256.
///
/// Binary extension fields use a fixed reduction polynomial per order (see
/// reduction_polynomial), so element encodings are identical across runs and
/// machines. Immutable after construction; safe for concurrent reads.
class Field {
public:
    static Field of_order(unsigned q);  // throws UnsupportedOrderError

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    /// Reduction polynomial as a bitmask including the x^m term; 0 for prime fields.
    unsigned reduction_polynomial() const { return poly_; }

    bool valid(Elem a) const { return a < q_; }

    Elem add(Elem a, Elem b) const {
        return m_ == 1 ? static_cast<Elem>((a + b) % p_) : static_cast<Elem>(a ^ b);
    }
    Elem neg(Elem a) const {
        return m_ == 1 ? static_cast<Elem>(a == 0 ? 0 : p_ - a) : a;
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws DomainError on 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, unsigned long e) const;

    bool operator==(const Field& other) const { return q_ == other.q_; }

private:
    Field(unsigned q, unsigned p, unsigned m, unsigned poly)
        : q_(q), p_(p), m_(m), poly_(poly) {}

    unsigned q_, p_, m_, poly_;
};

/// Dense matrix over a finite field, row-major. Zero-row matrices are legal
/// (they arise as parity-check matrices of full-space codes).
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix from_rows(Field f, const std::vector<std::vector<Elem>>& rows);
    static Matrix identity(Field f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<Elem> row(std::size_t i) const;

    Matrix transpose() const;
    Matrix multiply(const Matrix& rhs) const;

    /// Unique reduced row-echelon form (pivots 1, pivot columns cleared,
    /// zero rows last).
    Matrix rref() const;
    std::size_t rank() const;
    /// Rows form a basis of {x : M x^T = 0}; (cols - rank) rows, ordered by
    /// ascending free column. Zero rows means trivial nullspace.
    Matrix nullspace_basis() const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_ &&
               field_ == other.field_;
    }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

}  // namespace lrc
