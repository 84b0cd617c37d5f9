#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "farrell/common.hpp"

namespace farrell::fplinalg {

using Vec = std::vector<long>;

// Dense matrix over F_p, row-major, entries kept reduced to [0, p-1].
struct FpMatrix {
    long p = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<long> a;

    FpMatrix() = default;
    FpMatrix(long prime, std::size_t r, std::size_t c)
        : p(prime), rows(r), cols(c), a(r * c, 0) {
        if (!is_prime(p)) throw std::invalid_argument("FpMatrix: p must be prime");
    }

    static FpMatrix identity(long prime, std::size_t n) {
        FpMatrix m(prime, n, n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
        return m;
    }

    static FpMatrix from_rows(long prime, const std::vector<std::vector<long>>& rows_in) {
        const std::size_t r = rows_in.size();
        const std::size_t c = r ? rows_in[0].size() : 0;
        FpMatrix m(prime, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows_in[i].size() != c) throw std::invalid_argument("FpMatrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = mod_reduce(rows_in[i][j], prime);
        }
        return m;
    }

    long& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    long at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool square() const { return rows == cols; }

    FpMatrix mul(const FpMatrix& o) const {
        if (cols != o.rows || p != o.p) throw std::invalid_argument("FpMatrix::mul: shape mismatch");
        FpMatrix m(p, rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const long aik = at(i, k);
                if (!aik) continue;
                for (std::size_t j = 0; j < o.cols; ++j)
                    m.at(i, j) = mod_reduce(m.at(i, j) + aik * o.at(k, j), p);
            }
        return m;
    }

    FpMatrix add(const FpMatrix& o) const {
        if (rows != o.rows || cols != o.cols || p != o.p)
            throw std::invalid_argument("FpMatrix::add: shape mismatch");
        FpMatrix m(p, rows, cols);
        for (std::size_t k = 0; k < a.size(); ++k) m.a[k] = mod_reduce(a[k] + o.a[k], p);
        return m;
    }

    FpMatrix sub_identity() const {
        if (!square()) throw std::invalid_argument("FpMatrix::sub_identity: must be square");
        FpMatrix m = *this;
        for (std::size_t k = 0; k < rows; ++k) m.at(k, k) = mod_reduce(m.at(k, k) - 1, p);
        return m;
    }

    FpMatrix pow(long e) const {
        if (!square()) throw std::invalid_argument("FpMatrix::pow: must be square");
        if (e < 0) throw std::invalid_argument("FpMatrix::pow: negative exponent");
        FpMatrix result = identity(p, rows);
        FpMatrix base = *this;
        while (e) {
            if (e & 1) result = result.mul(base);
            base = base.mul(base);
            e >>= 1;
        }
        return result;
    }

    FpMatrix transpose() const {
        FpMatrix m(p, cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols) throw std::invalid_argument("FpMatrix::apply: dimension mismatch");
        Vec out(rows, 0);
        for (std::size_t i = 0; i < rows; ++i) {
            long s = 0;
            for (std::size_t j = 0; j < cols; ++j) s += at(i, j) * mod_reduce(v[j], p);
            out[i] = mod_reduce(s, p);
        }
        return out;
    }

    bool is_identity() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const FpMatrix& x, const FpMatrix& y) {
        return x.p == y.p && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Canonical basis (reduced row echelon form) of the span of the given
// vectors. Deterministic: depends only on the span.
inline std::vector<Vec> rref_basis(std::vector<Vec> vs, long p) {
    std::vector<Vec> rows;
    for (Vec& v : vs) {
        for (long& x : v) x = mod_reduce(x, p);
        rows.push_back(std::move(v));
    }
    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;
    for (Vec v : rows) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const long c = v[pivots[k]];
            if (!c) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = mod_reduce(v[j] - c * basis[k][j], p);
        }
        std::size_t lead = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j]) { lead = j; break; }
        if (lead == v.size()) continue;
        const long inv = mod_inverse(v[lead], p);
        for (long& x : v) x = mod_reduce(x * inv, p);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const long c = basis[k][lead];
            if (!c) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                basis[k][j] = mod_reduce(basis[k][j] - c * v[j], p);
        }
        basis.push_back(std::move(v));
        pivots.push_back(lead);
    }
    std::vector<std::size_t> order(basis.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return pivots[x] < pivots[y]; });
    std::vector<Vec> sorted;
    for (std::size_t k : order) sorted.push_back(std::move(basis[k]));
    return sorted;
}

inline bool in_span(const std::vector<Vec>& basis, Vec v, long p) {
    for (long& x : v) x = mod_reduce(x, p);
    std::vector<Vec> all = basis;
    all.push_back(v);
    return rref_basis(all, p).size() == basis.size();
}

inline std::size_t rank(const FpMatrix& m) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows; ++i) {
        Vec r(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    return rref_basis(rows, m.p).size();
}

// Canonical basis of {v : Mv = 0}.
inline std::vector<Vec> kernel_basis(const FpMatrix& m) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows; ++i) {
        Vec r(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    const std::vector<Vec> rr = rref_basis(rows, m.p);
    std::vector<std::size_t> pivot_of_col(m.cols, rr.size());
    for (std::size_t k = 0; k < rr.size(); ++k) {
        std::size_t lead = 0;
        while (rr[k][lead] == 0) ++lead;
        pivot_of_col[lead] = k;
    }
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (pivot_of_col[f] != rr.size()) continue;
        Vec v(m.cols, 0);
        v[f] = 1;
        for (std::size_t c = 0; c < m.cols; ++c)
            if (pivot_of_col[c] != rr.size())
                v[c] = mod_reduce(-rr[pivot_of_col[c]][f], m.p);
        basis.push_back(std::move(v));
    }
    return rref_basis(basis, m.p);
}

// Canonical basis of the column space.
inline std::vector<Vec> column_space(const FpMatrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols; ++j) {
        Vec c(m.rows);
        for (std::size_t i = 0; i < m.rows; ++i) c[i] = m.at(i, j);
        cols.push_back(std::move(c));
    }
    return rref_basis(cols, m.p);
}

namespace detail {

inline void require_action(const std::vector<FpMatrix>& gens) {
    if (gens.empty()) throw std::invalid_argument("group action needs at least one generator");
    for (const FpMatrix& g : gens) {
        if (!g.square() || g.rows != gens[0].rows || g.p != gens[0].p)
            throw std::invalid_argument("generators must be square of equal size over one prime");
        if (rank(g) != g.rows) throw std::invalid_argument("generators must be invertible");
    }
}

} // namespace detail

// Fixed vectors of the generated group: canonical basis of the joint kernel
// of the maps g - 1.
inline std::vector<Vec> invariants(const std::vector<FpMatrix>& gens) {
    detail::require_action(gens);
    const std::size_t n = gens[0].rows;
    FpMatrix stacked(gens[0].p, n * gens.size(), n);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const FpMatrix d = gens[k].sub_identity();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked.at(k * n + i, j) = d.at(i, j);
    }
    return kernel_basis(stacked);
}

// Coinvariant representatives: the earliest standard basis vectors that stay
// independent modulo the augmentation subspace sum (g - 1)M.
inline std::vector<Vec> coinvariant_reps(const std::vector<FpMatrix>& gens) {
    detail::require_action(gens);
    const std::size_t n = gens[0].rows;
    const long p = gens[0].p;
    std::vector<Vec> aug;
    for (const FpMatrix& g : gens)
        for (const Vec& c : column_space(g.sub_identity())) aug.push_back(c);
    std::vector<Vec> span = rref_basis(aug, p);
    const std::size_t aug_dim = span.size();
    std::vector<Vec> reps;
    for (std::size_t j = 0; j < n && reps.size() + aug_dim < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        if (in_span(span, e, p)) continue;
        span.push_back(e);
        span = rref_basis(span, p);
        reps.push_back(std::move(e));
    }
    return reps;
}

// Norm of the cyclic group generated by sigma of order dividing q.
inline FpMatrix norm_map(const FpMatrix& sigma, long q) {
    detail::require_action({sigma});
    if (q < 1 || !sigma.pow(q).is_identity())
        throw std::invalid_argument("norm_map: sigma^q must be the identity");
    FpMatrix n = FpMatrix(sigma.p, sigma.rows, sigma.cols);
    FpMatrix power = FpMatrix::identity(sigma.p, sigma.rows);
    for (long k = 0; k < q; ++k) {
        n = n.add(power);
        power = power.mul(sigma);
    }
    return n;
}

// Tate cohomology of Z/q on an F_p module, all degrees. Degree 0 is the full
// invariant space; positive even degrees are coker(N), odd degrees ker(N)
// taken on coinvariants. Both positive dimensions agree (Herbrand) and vanish
// when gcd(p, q) = 1.
struct CyclicTate {
    long q = 0;
    int dim_fixed = 0;
    int dim_even_pos = 0;
    int dim_odd = 0;
    std::vector<Vec> cokernel_reps; // invariant vectors spanning coker(N)
    std::vector<Vec> kernel_reps;   // ker(N) vectors spanning ker on coinvariants

    int dim_at(int degree) const {
        if (degree == 0) return dim_fixed;
        return degree % 2 == 0 ? dim_even_pos : dim_odd;
    }
};

inline CyclicTate tate_cyclic(const FpMatrix& sigma, long q) {
    const FpMatrix n = norm_map(sigma, q);
    const long p = sigma.p;
    const std::vector<Vec> inv = invariants({sigma});
    const std::vector<Vec> image_n = column_space(n);
    const std::vector<Vec> image_d = column_space(sigma.sub_identity());

    CyclicTate tate;
    tate.q = q;
    tate.dim_fixed = static_cast<int>(inv.size());
    tate.dim_even_pos = static_cast<int>(inv.size() - image_n.size());
    tate.dim_odd = static_cast<int>(sigma.rows - image_d.size() - image_n.size());

    std::vector<Vec> span = image_n;
    for (const Vec& v : inv) {
        if (in_span(span, v, p)) continue;
        span.push_back(v);
        span = rref_basis(span, p);
        tate.cokernel_reps.push_back(v);
    }
    span = image_d;
    for (const Vec& v : kernel_basis(n)) {
        if (in_span(span, v, p)) continue;
        span.push_back(v);
        span = rref_basis(span, p);
        tate.kernel_reps.push_back(v);
    }
    return tate;
}

} // namespace farrell::fplinalg
