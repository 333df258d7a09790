#include "lrc/field.hpp"

namespace lrc {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Fixed reduction polynomials for GF(2^m), bitmask includes the x^m term.
// 4: x^2+x+1, 8: x^3+x+1, 16: x^4+x+1, 32: x^5+x^2+1, 64: x^6+x+1,
// 128: x^7+x+1, 256: x^8+x^4+x^3+x+1.
unsigned binary_poly(unsigned q) {
    switch (q) {
        case 4: return 0b111;
        case 8: return 0b1011;
        case 16: return 0b10011;
        case 32: return 0b100101;
        case 64: return 0b1000011;
        case 128: return 0b10000011;
        case 256: return 0b100011011;
        default: return 0;
    }
}

}  // namespace

Field Field::of_order(unsigned q) {
    if (unsigned poly = binary_poly(q)) {
        unsigned m = 0;
        while ((1u << m) < q) ++m;
        return Field(q, 2, m, poly);
    }
    if (q <= 257 && is_prime(q)) return Field(q, q, 1, 0);
    throw UnsupportedOrderError(q);
}

Elem Field::mul(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>((static_cast<unsigned>(a) * b) % p_);
    unsigned acc = 0, x = a;
    for (unsigned y = b; y != 0; y >>= 1) {
        if (y & 1) acc ^= x;
        x <<= 1;
        if (x & q_) x ^= poly_;  // q_ == 1 << m_
    }
    return static_cast<Elem>(acc);
}

Elem Field::pow(Elem a, unsigned long e) const {
    Elem result = 1, base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(q_) + ")");
    return pow(a, q_ - 2);
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Elem>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (!f.valid(rows[i][j])) throw PreconditionError("matrix entry out of field range");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
    return std::vector<Elem>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw PreconditionError("matrix dimension mismatch in multiply");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = field_.add(out.at(i, j), field_.mul(aik, rhs.at(k, j)));
        }
    return out;
}

Matrix Matrix::rref() const {
    Matrix m(*this);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_ && m.at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        Elem scale = field_.inv(m.at(pivot_row, col));
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(pivot_row, j) = field_.mul(m.at(pivot_row, j), scale);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || m.at(i, col) == 0) continue;
            Elem factor = m.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(i, j) = field_.sub(m.at(i, j), field_.mul(factor, m.at(pivot_row, j)));
        }
        ++pivot_row;
    }
    return m;
}

std::size_t Matrix::rank() const {
    Matrix r = rref();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_; ++j)
            if (r.at(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) ++rank;
    }
    return rank;
}

Matrix Matrix::nullspace_basis() const {
    Matrix r = rref();
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t j = 0;
        while (j < cols_ && r.at(i, j) == 0) ++j;
        if (j == cols_) break;
        pivot_col_of_row.push_back(j);
        is_pivot[j] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix basis(field_, free_cols.size(), cols_);
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        std::size_t f = free_cols[b];
        basis.at(b, f) = 1;
        // pivot variable x_p = -r(row, f) when x_f = 1
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            basis.at(b, pivot_col_of_row[i]) = field_.neg(r.at(i, f));
    }
    return basis;
}

bool Matrix::is_zero() const {
    for (Elem e : a_)
        if (e != 0) return false;
    return true;
}

}  // namespace lrc
