#pragma once

#include "qfc/matrix.hpp"

#include <cmath>
#include <functional>

namespace qfc {

/// A linear subspace of GF(p)^n held as an RREF basis with zero rows
/// dropped. The stored basis is canonical: equal subspaces compare
/// bit-exactly equal.
class Subspace {
  public:
    Subspace(size_t ambient_dim, uint32_t p)
        : ambient_(ambient_dim), basis_(0, ambient_dim, p) {}

    /// Canonicalizes arbitrary spanning rows into the RREF basis.
    static Subspace span(const FpMatrix &rows) {
        FpMatrix r = rref(rows);
        size_t nz = 0;
        for (size_t i = 0; i < r.rows(); ++i) {
            bool zero = true;
            for (size_t j = 0; j < r.cols(); ++j)
                if (r.get(i, j)) {
                    zero = false;
                    break;
                }
            if (!zero)
                ++nz;
        }
        FpMatrix b(nz, r.cols(), r.modulus());
        for (size_t i = 0; i < nz; ++i)
            b.set_row(i, r.row(i));
        return Subspace(rows.cols(), b);
    }

    static Subspace whole(size_t n, uint32_t p) {
        return Subspace(n, FpMatrix::identity(n, p));
    }

    size_t ambient_dim() const { return ambient_; }
    uint32_t modulus() const { return basis_.modulus(); }
    size_t dim() const { return basis_.rows(); }
    const FpMatrix &basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool is_whole() const { return dim() == ambient_; }

    bool operator==(const Subspace &o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace &o) const { return !(*this == o); }

    bool contains(const std::vector<uint32_t> &vec) const {
        if (vec.size() != ambient_)
            throw shape_error("contains: ambient mismatch");
        // Reduce vec against the RREF basis.
        std::vector<uint32_t> v = vec;
        const uint32_t p = modulus();
        for (size_t i = 0; i < basis_.rows(); ++i) {
            size_t pc = pivot_col(i);
            uint32_t f = v[pc];
            if (!f)
                continue;
            for (size_t j = 0; j < ambient_; ++j)
                v[j] = detail::subm(v[j], detail::mulm(f, basis_.get(i, j), p), p);
        }
        for (uint32_t x : v)
            if (x)
                return false;
        return true;
    }

    bool contains(const Subspace &o) const {
        if (o.ambient_ != ambient_)
            throw shape_error("contains: ambient mismatch");
        for (size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_.row(i)))
                return false;
        return true;
    }

    /// Coordinates of vec in the stored basis; nullopt when not a member.
    std::optional<std::vector<uint32_t>> coordinates(const std::vector<uint32_t> &vec) const {
        if (vec.size() != ambient_)
            throw shape_error("coordinates: ambient mismatch");
        std::vector<uint32_t> v = vec, c(dim(), 0);
        const uint32_t p = modulus();
        for (size_t i = 0; i < basis_.rows(); ++i) {
            size_t pc = pivot_col(i);
            uint32_t f = v[pc];
            c[i] = f;
            if (!f)
                continue;
            for (size_t j = 0; j < ambient_; ++j)
                v[j] = detail::subm(v[j], detail::mulm(f, basis_.get(i, j), p), p);
        }
        for (uint32_t x : v)
            if (x)
                return std::nullopt;
        return c;
    }

    size_t pivot_col(size_t row) const {
        for (size_t j = 0; j < ambient_; ++j)
            if (basis_.get(row, j))
                return j;
        throw error("zero row in canonical basis");
    }

  private:
    Subspace(size_t ambient, FpMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    size_t ambient_;
    FpMatrix basis_;
};

inline Subspace subspace_sum(const Subspace &u, const Subspace &v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw shape_error("subspace_sum: ambient mismatch");
    detail::check_same_modulus(u.modulus(), v.modulus());
    return Subspace::span(u.basis().vstack(v.basis()));
}

/// Intersection via the kernel of the stacked bases: a row vector (c, d)
/// with c*U = d*V identifies a common element c*U.
inline Subspace subspace_intersect(const Subspace &u, const Subspace &v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw shape_error("subspace_intersect: ambient mismatch");
    detail::check_same_modulus(u.modulus(), v.modulus());
    const uint32_t p = u.modulus();
    if (u.dim() == 0 || v.dim() == 0)
        return Subspace(u.ambient_dim(), p);
    // Left kernel of [U; V] = right kernel of [U; V]^T.
    FpMatrix stacked = u.basis().vstack(v.basis());
    FpMatrix ker = right_kernel(stacked.transpose());
    FpMatrix rows(ker.rows(), u.ambient_dim(), p);
    for (size_t i = 0; i < ker.rows(); ++i) {
        std::vector<uint32_t> acc(u.ambient_dim(), 0);
        for (size_t s = 0; s < u.dim(); ++s) {
            uint32_t c = ker.get(i, s);
            if (!c)
                continue;
            for (size_t j = 0; j < u.ambient_dim(); ++j)
                acc[j] = detail::addm(acc[j], detail::mulm(c, u.basis().get(s, j), p), p);
        }
        rows.set_row(i, acc);
    }
    return Subspace::span(rows);
}

// --- enumeration -----------------------------------------------------------

/// Number of k-dimensional subspaces of GF(p)^n, capped at `cap`.
inline uint64_t gaussian_binomial_capped(size_t n, size_t k, uint32_t p, uint64_t cap) {
    if (k > n)
        return 0;
    // [n choose k]_p = prod (p^(n-i) - 1) / (p^(k-i) - 1), exact division.
    long double approx = 1.0L;
    for (size_t i = 0; i < k; ++i)
        approx *= (powl((long double)p, (long double)(n - i)) - 1) /
                  (powl((long double)p, (long double)(k - i)) - 1);
    if (approx > (long double)cap * 2)
        return cap + 1;
    // Small enough: compute exactly via the q-Pascal recurrence.
    std::vector<std::vector<uint64_t>> g(n + 1, std::vector<uint64_t>(k + 1, 0));
    for (size_t i = 0; i <= n; ++i)
        g[i][0] = 1;
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= std::min(i, k); ++j) {
            // [i,j] = [i-1,j-1] + p^j * [i-1,j]
            unsigned __int128 t = g[i - 1][j - 1];
            unsigned __int128 pj = 1;
            for (size_t s = 0; s < j; ++s)
                pj *= p;
            t += pj * g[i - 1][j];
            g[i][j] = t > cap ? cap + 1 : uint64_t(t);
        }
    return g[n][k];
}

/// Total number of subspaces of GF(p)^n, capped at `cap`.
inline uint64_t subspace_count_capped(size_t n, uint32_t p, uint64_t cap) {
    uint64_t total = 0;
    for (size_t k = 0; k <= n; ++k) {
        total += gaussian_binomial_capped(n, k, p, cap);
        if (total > cap)
            return cap + 1;
    }
    return total;
}

/// Visits every subspace of GF(p)^n exactly once, in a fixed order:
/// dimension ascending, pivot columns lexicographic, free entries counting
/// up. Stops early when the visitor returns false.
inline void enumerate_subspaces(size_t n, uint32_t p,
                                const std::function<bool(const Subspace &)> &visit) {
    for (size_t k = 0; k <= n; ++k) {
        // Iterate pivot column sets as ascending combinations.
        std::vector<size_t> piv(k);
        for (size_t i = 0; i < k; ++i)
            piv[i] = i;
        bool more_pivots = true;
        while (more_pivots) {
            // Free positions: (row i, col j) with j > piv[i] and j not a pivot.
            std::vector<std::pair<size_t, size_t>> free_pos;
            std::vector<bool> is_piv(n, false);
            for (size_t c : piv)
                is_piv[c] = true;
            for (size_t i = 0; i < k; ++i)
                for (size_t j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j])
                        free_pos.emplace_back(i, j);
            std::vector<uint32_t> vals(free_pos.size(), 0);
            bool more_vals = true;
            while (more_vals) {
                FpMatrix b(k, n, p);
                for (size_t i = 0; i < k; ++i)
                    b.set(i, piv[i], 1);
                for (size_t t = 0; t < free_pos.size(); ++t)
                    b.set(free_pos[t].first, free_pos[t].second, vals[t]);
                if (!visit(Subspace::span(b)))
                    return;
                // Odometer.
                more_vals = false;
                for (size_t t = 0; t < vals.size(); ++t) {
                    if (++vals[t] < p) {
                        more_vals = true;
                        break;
                    }
                    vals[t] = 0;
                }
            }
            // Next combination of pivot columns.
            if (k == 0)
                break;
            size_t i = k;
            while (i > 0) {
                --i;
                if (piv[i] < n - (k - i)) {
                    ++piv[i];
                    for (size_t j = i + 1; j < k; ++j)
                        piv[j] = piv[j - 1] + 1;
                    break;
                }
                if (i == 0)
                    more_pivots = false;
            }
            if (k == 0)
                more_pivots = false;
        }
        if (k == 0)
            continue;
    }
}

/// Visits one representative per line of GF(p)^n: vectors whose first
/// nonzero coordinate is 1.
inline void enumerate_normalized_vectors(size_t n, uint32_t p,
                                         const std::function<bool(const std::vector<uint32_t> &)> &visit) {
    // First nonzero coordinate at position i, earlier coords 0, later free.
    for (size_t i = 0; i < n; ++i) {
        std::vector<uint32_t> v(n, 0);
        v[i] = 1;
        size_t nfree = n - i - 1;
        std::vector<uint32_t> vals(nfree, 0);
        bool more = true;
        while (more) {
            for (size_t t = 0; t < nfree; ++t)
                v[i + 1 + t] = vals[t];
            if (!visit(v))
                return;
            more = false;
            for (size_t t = 0; t < nfree; ++t) {
                if (++vals[t] < p) {
                    more = true;
                    break;
                }
                vals[t] = 0;
            }
        }
    }
}

} // namespace qfc
