#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ozeta/gf.hpp"

namespace ozeta::oracle {

using Vec = std::vector<uint8_t>;
using Mat = std::vector<Vec>;  // row-major; a linear map stored as rows of images? see note

// Matrices act on column vectors: (M v)_i = sum_j M[i][j] v[j].

inline Vec zero_vec(std::size_t n) { return Vec(n, 0); }

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

inline Vec vec_add(const GF& F, const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.add(a[i], b[i]);
    return c;
}

inline Vec vec_scale(const GF& F, uint8_t s, const Vec& a) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.mul(s, a[i]);
    return c;
}

inline Vec mat_apply(const GF& F, const Mat& m, const Vec& v) {
    Vec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        uint8_t acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] && m[i][j]) acc = F.add(acc, F.mul(m[i][j], v[j]));
        out[i] = acc;
    }
    return out;
}

inline Mat mat_mul(const GF& F, const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat c(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (!a[i][l]) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[l][j]) c[i][j] = F.add(c[i][j], F.mul(a[i][l], b[l][j]));
        }
    return c;
}

/// Subspace of F_q^n kept in reduced row echelon form; the RREF basis is the
/// canonical representative used for dedup keys and equality.
class Subspace {
public:
    Subspace(const GF& F, std::size_t ambient) : F_(&F), n_(ambient) {}

    static Subspace full(const GF& F, std::size_t n) {
        Subspace s(F, n);
        for (std::size_t i = 0; i < n; ++i) {
            Vec v(n, 0);
            v[i] = 1;
            s.insert(v);
        }
        return s;
    }
    static Subspace span(const GF& F, std::size_t n, const std::vector<Vec>& gens) {
        Subspace s(F, n);
        for (const auto& g : gens) s.insert(g);
        return s;
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }

    /// Row-reduce v against the basis; returns the residue.
    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            uint8_t c = v[pivots_[r]];
            if (c) {
                uint8_t s = F_->neg(c);
                for (std::size_t j = 0; j < n_; ++j)
                    v[j] = F_->add(v[j], F_->mul(s, rows_[r][j]));
            }
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const Subspace& o) const {
        for (const auto& b : o.rows_)
            if (!contains(b)) return false;
        return true;
    }

    /// Insert a vector, returns true if the dimension grew.
    bool insert(const Vec& v) {
        Vec r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p] == 0) ++p;
        if (p == n_) return false;
        uint8_t inv = F_->inv(r[p]);
        for (auto& x : r) x = F_->mul(inv, x);
        // clear column p in existing rows, then insert keeping pivot order
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            uint8_t c = rows_[i][p];
            if (c) {
                uint8_t s = F_->neg(c);
                for (std::size_t j = 0; j < n_; ++j)
                    rows_[i][j] = F_->add(rows_[i][j], F_->mul(s, r[j]));
            }
        }
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
        pivots_.insert(it, p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), r);
        return true;
    }

    void insert_all(const Subspace& o) {
        for (const auto& b : o.rows_) insert(b);
    }

    /// Canonical key: pivot positions + RREF rows.
    std::string key() const {
        std::string k;
        k.reserve(rows_.size() * (n_ + 1));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t j = 0; j < n_; ++j) k.push_back(static_cast<char>(rows_[r][j]));
            k.push_back('|');
        }
        return k;
    }

    bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    /// Enumerate all vectors of the subspace (q^dim of them).
    void for_each_vector(const std::function<void(const Vec&)>& fn) const {
        for_each_vector_until([&](const Vec& v) {
            fn(v);
            return false;
        });
    }

    /// Same, but stops as soon as the callback returns true.
    bool for_each_vector_until(const std::function<bool(const Vec&)>& fn) const {
        std::function<bool(std::size_t, Vec)> rec = [&](std::size_t i, Vec acc) -> bool {
            if (i == rows_.size()) return fn(acc);
            for (uint8_t c = 0; c < F_->q(); ++c)
                if (rec(i + 1, c ? vec_add(*F_, acc, vec_scale(*F_, c, rows_[i])) : acc))
                    return true;
            return false;
        };
        return rec(0, zero_vec(n_));
    }

    const GF& field() const { return *F_; }

private:
    const GF* F_;
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

inline Subspace image(const GF& F, const Mat& m, const Subspace& s) {
    Subspace out(F, m.size());
    for (const auto& b : s.basis()) out.insert(mat_apply(F, m, b));
    return out;
}

inline Subspace kernel(const GF& F, const Mat& m) {
    // solve M x = 0 by eliminating on columns of M
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    Mat a = m;
    std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        uint8_t inv = F.inv(a[rank][c]);
        for (auto& x : a[rank]) x = F.mul(inv, x);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            uint8_t s = F.neg(a[i][c]);
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = F.add(a[i][j], F.mul(s, a[rank][j]));
        }
        pivot_of_col[c] = static_cast<std::ptrdiff_t>(rank);
        ++rank;
    }
    Subspace ker(F, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != -1) continue;
        Vec v(cols, 0);
        v[c] = 1;
        for (std::size_t c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] != -1)
                v[c2] = F.neg(a[static_cast<std::size_t>(pivot_of_col[c2])][c]);
        ker.insert(v);
    }
    return ker;
}

/// Full preimage M^{-1}(S) = { v : M v in S }.
inline Subspace preimage(const GF& F, const Mat& m, const Subspace& s) {
    // rows of the quotient test: v in preimage iff M v reduces to 0 mod S.
    // Build the composite map v -> reduce_S(M v) as a matrix and take its kernel.
    std::size_t cols = m.empty() ? 0 : m[0].size();
    Mat comp(m.size(), Vec(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
        Vec e(cols, 0);
        e[j] = 1;
        Vec w = s.reduce(mat_apply(F, m, e));
        for (std::size_t i = 0; i < m.size(); ++i) comp[i][j] = w[i];
    }
    return kernel(F, comp);
}

inline Subspace intersect(const GF& F, const Subspace& a, const Subspace& b) {
    // kernel of the map a_coords -> residue of the vector mod b
    std::size_t n = a.ambient_dim();
    Mat comp(n, Vec(a.dim(), 0));
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec w = b.reduce(a.basis()[j]);
        for (std::size_t i = 0; i < n; ++i) comp[i][j] = w[i];
    }
    Subspace coeff_ker = kernel(F, comp);
    Subspace out(F, n);
    for (const auto& cv : coeff_ker.basis()) {
        Vec v = zero_vec(n);
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (cv[j]) v = vec_add(F, v, vec_scale(F, cv[j], a.basis()[j]));
        out.insert(v);
    }
    return out;
}

/// Solve the simultaneous linear system given by `equations` (each row is a
/// functional on the unknown vector; right-hand sides zero) — thin wrapper.
inline Subspace solution_space(const GF& F, const Mat& equations) { return kernel(F, equations); }

/// Enumerate all subspaces of F_q^n of a given dimension by reduced row
/// echelon forms. Intended for small n only (raw-scan validation paths).
inline void for_each_subspace_of_dim(const GF& F, std::size_t n, std::size_t d,
                                     const std::function<void(const Subspace&)>& fn) {
    if (d > n) return;
    std::vector<std::size_t> pivots(d);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t from) {
        if (idx == d) {
            // fill free entries: row r has free entries at columns > pivots[r]
            // that are not pivot columns themselves
            std::vector<std::pair<std::size_t, std::size_t>> free_cells;
            std::vector<bool> is_pivot(n, false);
            for (auto p : pivots) is_pivot[p] = true;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = pivots[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_cells.emplace_back(r, c);
            std::vector<uint8_t> vals(free_cells.size(), 0);
            while (true) {
                Mat rows(d, Vec(n, 0));
                for (std::size_t r = 0; r < d; ++r) rows[r][pivots[r]] = 1;
                for (std::size_t i = 0; i < free_cells.size(); ++i)
                    rows[free_cells[i].first][free_cells[i].second] = vals[i];
                Subspace s(F, n);
                for (auto& row : rows) s.insert(row);
                fn(s);
                // odometer
                std::size_t i = 0;
                while (i < vals.size() && vals[i] == F.q() - 1) vals[i++] = 0;
                if (i == vals.size()) break;
                ++vals[i];
            }
            return;
        }
        for (std::size_t p = from; p + (d - idx - 1) < n; ++p) {
            pivots[idx] = p;
            choose(idx + 1, p + 1);
        }
    };
    choose(0, 0);
}

}  // namespace ozeta::oracle
