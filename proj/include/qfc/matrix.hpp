#pragma once

#include "qfc/fp.hpp"

#include <optional>
#include <vector>

namespace qfc {

/// Dense matrix over GF(p), row-major, one shared modulus for all entries.
class FpMatrix {
  public:
    FpMatrix() : rows_(0), cols_(0), p_(2) {}
    FpMatrix(size_t rows, size_t cols, uint32_t p)
        : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
        if (p < 2)
            throw error("modulus must be >= 2");
    }

    static FpMatrix identity(size_t n, uint32_t p) {
        FpMatrix m(n, n, p);
        for (size_t i = 0; i < n; ++i)
            m.e_[i * n + i] = 1;
        return m;
    }

    static FpMatrix from_rows(const std::vector<std::vector<int64_t>> &rows, uint32_t p) {
        size_t r = rows.size();
        size_t c = r ? rows[0].size() : 0;
        FpMatrix m(r, c, p);
        for (size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw shape_error("ragged row list");
            for (size_t j = 0; j < c; ++j)
                m.set(i, j, rows[i][j]);
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t modulus() const { return p_; }

    uint32_t get(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    FpScalar at(size_t i, size_t j) const { return FpScalar(get(i, j), p_); }
    void set(size_t i, size_t j, int64_t v) {
        int64_t r = v % int64_t(p_);
        if (r < 0)
            r += p_;
        e_[i * cols_ + j] = uint32_t(r);
    }

    std::vector<uint32_t> row(size_t i) const {
        return std::vector<uint32_t>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }
    void set_row(size_t i, const std::vector<uint32_t> &v) {
        if (v.size() != cols_)
            throw shape_error("row length mismatch");
        std::copy(v.begin(), v.end(), e_.begin() + i * cols_);
    }

    bool is_zero() const {
        for (uint32_t x : e_)
            if (x)
                return false;
        return true;
    }

    bool operator==(const FpMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
    }
    bool operator!=(const FpMatrix &o) const { return !(*this == o); }

    FpMatrix operator+(const FpMatrix &o) const {
        check_shape(o);
        FpMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] = detail::addm(e_[i], o.e_[i], p_);
        return r;
    }
    FpMatrix operator-(const FpMatrix &o) const {
        check_shape(o);
        FpMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] = detail::subm(e_[i], o.e_[i], p_);
        return r;
    }
    FpMatrix operator*(const FpMatrix &o) const {
        detail::check_same_modulus(p_, o.p_);
        if (cols_ != o.rows_)
            throw shape_error("matrix product shape mismatch");
        FpMatrix r(rows_, o.cols_, p_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                uint64_t a = e_[i * cols_ + k];
                if (!a)
                    continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    uint64_t acc = r.e_[i * o.cols_ + j] + a * o.e_[k * o.cols_ + j] % p_;
                    r.e_[i * o.cols_ + j] = uint32_t(acc >= p_ ? acc - p_ : acc);
                }
            }
        return r;
    }

    FpMatrix scale(uint32_t c) const {
        FpMatrix r = *this;
        for (auto &x : r.e_)
            x = detail::mulm(x, c % p_, p_);
        return r;
    }

    FpMatrix transpose() const {
        FpMatrix r(cols_, rows_, p_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                r.e_[j * rows_ + i] = e_[i * cols_ + j];
        return r;
    }

    FpMatrix pow(uint64_t k) const {
        if (rows_ != cols_)
            throw shape_error("power of non-square matrix");
        FpMatrix acc = identity(rows_, p_), base = *this;
        while (k) {
            if (k & 1)
                acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // Column vector application: returns m * v.
    std::vector<uint32_t> apply(const std::vector<uint32_t> &v) const {
        if (v.size() != cols_)
            throw shape_error("apply: vector length mismatch");
        std::vector<uint32_t> out(rows_, 0);
        for (size_t i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            for (size_t j = 0; j < cols_; ++j)
                acc += uint64_t(e_[i * cols_ + j]) * v[j] % p_;
            out[i] = uint32_t(acc % p_);
        }
        return out;
    }

    FpMatrix hstack(const FpMatrix &o) const {
        detail::check_same_modulus(p_, o.p_);
        if (rows_ != o.rows_)
            throw shape_error("hstack row mismatch");
        FpMatrix r(rows_, cols_ + o.cols_, p_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j)
                r.e_[i * r.cols_ + j] = e_[i * cols_ + j];
            for (size_t j = 0; j < o.cols_; ++j)
                r.e_[i * r.cols_ + cols_ + j] = o.e_[i * o.cols_ + j];
        }
        return r;
    }

    FpMatrix vstack(const FpMatrix &o) const {
        detail::check_same_modulus(p_, o.p_);
        if (cols_ != o.cols_)
            throw shape_error("vstack column mismatch");
        FpMatrix r(rows_ + o.rows_, cols_, p_);
        std::copy(e_.begin(), e_.end(), r.e_.begin());
        std::copy(o.e_.begin(), o.e_.end(), r.e_.begin() + e_.size());
        return r;
    }

    const std::vector<uint32_t> &raw() const { return e_; }

  private:
    void check_shape(const FpMatrix &o) const {
        detail::check_same_modulus(p_, o.p_);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw shape_error("matrix shape mismatch");
    }

    size_t rows_, cols_;
    uint32_t p_;
    std::vector<uint32_t> e_;
};

namespace detail {

// In-place Gauss-Jordan; returns pivot columns.
inline std::vector<size_t> rref_in_place(FpMatrix &m) {
    const uint32_t p = m.modulus();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = r;
        while (sel < m.rows() && m.get(sel, c) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols(); ++j) {
                uint32_t t = m.get(r, j);
                m.set(r, j, m.get(sel, j));
                m.set(sel, j, t);
            }
        uint32_t inv = invm(m.get(r, c), p);
        for (size_t j = c; j < m.cols(); ++j)
            m.set(r, j, mulm(m.get(r, j), inv, p));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r)
                continue;
            uint32_t f = m.get(i, c);
            if (!f)
                continue;
            for (size_t j = c; j < m.cols(); ++j)
                m.set(i, j, subm(m.get(i, j), mulm(f, m.get(r, j), p), p));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

/// Reduced row echelon form; row space preserved, idempotent.
inline FpMatrix rref(const FpMatrix &m) {
    FpMatrix r = m;
    detail::rref_in_place(r);
    return r;
}

inline size_t rank(const FpMatrix &m) {
    FpMatrix r = m;
    return detail::rref_in_place(r).size();
}

/// Solves a*x = b for x; free variables are set to 0. Returns nullopt when
/// the system is inconsistent.
inline std::optional<FpMatrix> solve(const FpMatrix &a, const FpMatrix &b) {
    detail::check_same_modulus(a.modulus(), b.modulus());
    if (a.rows() != b.rows())
        throw shape_error("solve: row count mismatch");
    FpMatrix aug = a.hstack(b);
    std::vector<size_t> pivots = detail::rref_in_place(aug);
    // A pivot inside the b-block means inconsistency.
    for (size_t c : pivots)
        if (c >= a.cols())
            return std::nullopt;
    FpMatrix x(a.cols(), b.cols(), a.modulus());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t j = 0; j < b.cols(); ++j)
            x.set(pivots[r], j, aug.get(r, a.cols() + j));
    return x;
}

/// Basis of the right kernel {x : m*x = 0}, one solution per row.
inline FpMatrix right_kernel(const FpMatrix &m) {
    FpMatrix r = m;
    std::vector<size_t> pivots = detail::rref_in_place(r);
    const uint32_t p = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    FpMatrix k(free_cols.size(), m.cols(), p);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        size_t fc = free_cols[fi];
        k.set(fi, fc, 1);
        for (size_t r2 = 0; r2 < pivots.size(); ++r2)
            k.set(fi, pivots[r2], detail::negm(r.get(r2, fc), p));
    }
    return k;
}

inline std::optional<FpMatrix> inverse(const FpMatrix &m) {
    if (m.rows() != m.cols())
        throw shape_error("inverse of non-square matrix");
    FpMatrix aug = m.hstack(FpMatrix::identity(m.rows(), m.modulus()));
    std::vector<size_t> pivots = detail::rref_in_place(aug);
    if (pivots.size() != m.rows())
        return std::nullopt;
    FpMatrix inv(m.rows(), m.rows(), m.modulus());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.rows(); ++j)
            inv.set(i, j, aug.get(i, m.rows() + j));
    return inv;
}

inline bool is_invertible(const FpMatrix &m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

} // namespace qfc
