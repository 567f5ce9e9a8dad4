#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ozeta/gflinalg.hpp"

namespace ozeta::oracle {

class FiniteAlgebra;

/// Finite-dimensional module over a FiniteAlgebra, given by one action matrix
/// per algebra basis element.
struct FiniteModule {
    const FiniteAlgebra* alg = nullptr;
    std::size_t dim = 0;
    std::vector<Mat> action;  // action[i] = matrix of the i-th basis element

    Vec act(const Vec& algebra_elt, const Vec& v) const;
};

/// Simple module together with its endomorphism-field dimension over F_q.
struct SimpleModule {
    FiniteModule mod;
    std::size_t end_dim = 1;
};

/// Structure-constant algebra over a small finite field. Construction checks
/// the unit and associativity laws on basis triples and verifies the declared
/// radical (two-sided, nilpotent, semisimple quotient — the latter by
/// computing the composition factors of the quotient's regular module and
/// checking their joint annihilator vanishes).
///
/// `faithful_colength` is the window exponent w of the construction: the
/// algebra is A_full / rad^w for a complete ring A_full, so ideals of
/// colength n <= w of A_full biject with ideals of the truncation (any
/// colength-n ideal contains rad^n, which contains rad^w).
class FiniteAlgebra {
public:
    FiniteAlgebra(GF field, std::vector<std::vector<Vec>> products, Vec unit,
                  std::vector<Vec> radical_basis, unsigned faithful_colength,
                  std::map<std::string, Vec> named = {})
        : F_(std::move(field)), dim_(products.size()), prod_(std::move(products)),
          unit_(std::move(unit)), rad_(F_, dim_), faithful_(faithful_colength),
          named_(std::move(named)) {
        for (const auto& row : prod_)
            if (row.size() != dim_)
                throw std::invalid_argument("FiniteAlgebra: ragged product table");
        verify_unit();
        verify_associativity();
        for (const auto& r : radical_basis) rad_.insert(r);
        verify_radical();
        compute_simples();
    }

    const GF& field() const { return F_; }
    std::size_t dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    unsigned faithful_colength() const { return faithful_; }
    const Subspace& radical() const { return rad_; }
    const std::vector<SimpleModule>& simples() const { return simples_; }

    const Vec& named(const std::string& name) const {
        auto it = named_.find(name);
        if (it == named_.end())
            throw std::invalid_argument("FiniteAlgebra: no element named '" + name + "'");
        return it->second;
    }
    bool has_named(const std::string& name) const { return named_.count(name) > 0; }

    Vec basis_vec(std::size_t i) const {
        Vec v(dim_, 0);
        v[i] = 1;
        return v;
    }

    Vec multiply(const Vec& a, const Vec& b) const {
        Vec out(dim_, 0);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!b[j]) continue;
                uint8_t c = F_.mul(a[i], b[j]);
                for (std::size_t k = 0; k < dim_; ++k)
                    if (prod_[i][j][k]) out[k] = F_.add(out[k], F_.mul(c, prod_[i][j][k]));
            }
        }
        return out;
    }

    Mat left_mult_matrix(const Vec& a) const {
        Mat m(dim_, Vec(dim_, 0));
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec col = multiply(a, basis_vec(j));
            for (std::size_t i = 0; i < dim_; ++i) m[i][j] = col[i];
        }
        return m;
    }
    Mat right_mult_matrix(const Vec& a) const {
        Mat m(dim_, Vec(dim_, 0));
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec col = multiply(basis_vec(j), a);
            for (std::size_t i = 0; i < dim_; ++i) m[i][j] = col[i];
        }
        return m;
    }

    FiniteModule regular_module() const {
        FiniteModule m;
        m.alg = this;
        m.dim = dim_;
        m.action.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) m.action.push_back(left_mult_matrix(basis_vec(i)));
        return m;
    }

    /// Declare the slice element z together with the automorphism sigma
    /// (z a = sigma(a) z, conjugation by z). Verifies that z lies in the
    /// radical, is normal (zA = Az), regular within the window (the kernels
    /// of both multiplication maps lie in the top radical slice killed by the
    /// truncation), and that sigma is an algebra map satisfying the relation.
    void declare_slice(const std::string& z_name, Mat sigma) {
        const Vec& z = named(z_name);
        if (!rad_.contains(z))
            throw std::invalid_argument("declare_slice: z must lie in the radical");
        Mat lz = left_mult_matrix(z), rz = right_mult_matrix(z);
        Subspace za = image(F_, lz, Subspace::full(F_, dim_));
        Subspace az = image(F_, rz, Subspace::full(F_, dim_));
        if (!(za.contains(az) && az.contains(za)))
            throw std::invalid_argument("declare_slice: z is not normal (zA != Az)");
        // regularity within the window: ker(L_z), ker(R_z) inside rad^{w-1}
        Subspace top = radical_power(faithful_ > 0 ? faithful_ - 1 : 0);
        if (!top.contains(kernel(F_, lz)) || !top.contains(kernel(F_, rz)))
            throw std::invalid_argument("declare_slice: z is not regular in the window");
        for (std::size_t i = 0; i < dim_; ++i) {
            Vec a = basis_vec(i);
            Vec lhs = multiply(z, a);
            Vec rhs = multiply(mat_apply(F_, sigma, a), z);
            if (lhs != rhs)
                throw std::invalid_argument("declare_slice: sigma does not satisfy z a = sigma(a) z");
        }
        slice_name_ = z_name;
        sigma_ = std::move(sigma);
    }

    bool has_slice() const { return !slice_name_.empty(); }
    const Vec& slice() const { return named(slice_name_); }
    const Mat& sigma() const {
        if (!sigma_) throw std::logic_error("FiniteAlgebra: no slice declared");
        return *sigma_;
    }

    Subspace radical_power(unsigned k) const {
        Subspace cur = Subspace::full(F_, dim_);
        for (unsigned i = 0; i < k; ++i) {
            Subspace next(F_, dim_);
            for (const auto& a : cur.basis())
                for (const auto& r : rad_.basis()) next.insert(multiply(a, r));
            cur = next;
            if (cur.dim() == 0) break;
        }
        return cur;
    }

    /// Quotient by a two-sided ideal; the caller supplies names that survive
    /// and the faithful window of the quotient (which depends on how the
    /// ideal meets the radical filtration and is a property of the
    /// construction, not derivable from the truncation alone).
    FiniteAlgebra quotient(const Subspace& ideal, unsigned quotient_faithful,
                           const std::vector<std::string>& keep_names = {}) const {
        // coset basis: non-pivot coordinates of the ideal's RREF
        std::vector<std::size_t> free_coords;
        {
            std::vector<bool> is_pivot(dim_, false);
            for (const auto& row : ideal.basis()) {
                std::size_t p = 0;
                while (p < dim_ && row[p] == 0) ++p;
                is_pivot[p] = true;
            }
            for (std::size_t c = 0; c < dim_; ++c)
                if (!is_pivot[c]) free_coords.push_back(c);
        }
        auto project = [&](const Vec& v) {
            Vec r = ideal.reduce(v);
            Vec out(free_coords.size(), 0);
            for (std::size_t i = 0; i < free_coords.size(); ++i) out[i] = r[free_coords[i]];
            return out;
        };
        std::size_t qd = free_coords.size();
        std::vector<std::vector<Vec>> qprod(qd, std::vector<Vec>(qd));
        for (std::size_t i = 0; i < qd; ++i)
            for (std::size_t j = 0; j < qd; ++j)
                qprod[i][j] =
                    project(multiply(basis_vec(free_coords[i]), basis_vec(free_coords[j])));
        std::vector<Vec> qrad;
        for (const auto& r : rad_.basis()) {
            Vec pr = project(r);
            if (!is_zero_vec(pr)) qrad.push_back(pr);
        }
        std::map<std::string, Vec> qnames;
        for (const auto& n : keep_names) qnames[n] = project(named(n));
        return FiniteAlgebra(F_, std::move(qprod), project(unit_), std::move(qrad),
                             quotient_faithful, std::move(qnames));
    }

    /// Two-sided ideal generated by a normal element.
    Subspace principal_ideal(const Vec& z) const {
        Subspace s(F_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            s.insert(multiply(z, basis_vec(i)));
            s.insert(multiply(basis_vec(i), z));
        }
        return s;
    }

private:
    void verify_unit() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            Vec e = basis_vec(i);
            if (multiply(unit_, e) != e || multiply(e, unit_) != e)
                throw std::invalid_argument("FiniteAlgebra: unit law fails on basis element " +
                                            std::to_string(i));
        }
    }

    void verify_associativity() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                const Vec& pij = prod_[i][j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    Vec lhs = multiply(pij, basis_vec(k));
                    Vec rhs = multiply(basis_vec(i), prod_[j][k]);
                    if (lhs != rhs)
                        throw std::invalid_argument("FiniteAlgebra: associativity fails at (" +
                                                    std::to_string(i) + "," + std::to_string(j) +
                                                    "," + std::to_string(k) + ")");
                }
            }
    }

    void verify_radical() {
        // two-sided ideal
        for (const auto& r : rad_.basis())
            for (std::size_t i = 0; i < dim_; ++i) {
                if (!rad_.contains(multiply(basis_vec(i), r)) ||
                    !rad_.contains(multiply(r, basis_vec(i))))
                    throw std::invalid_argument("FiniteAlgebra: declared radical is not an ideal");
            }
        // nilpotent
        Subspace cur = rad_;
        unsigned k = 1;
        while (cur.dim() > 0) {
            if (k > dim_ + 1)
                throw std::invalid_argument("FiniteAlgebra: declared radical is not nilpotent");
            Subspace next(F_, dim_);
            for (const auto& a : cur.basis())
                for (const auto& r : rad_.basis()) next.insert(multiply(a, r));
            cur = next;
            ++k;
        }
    }

    // Composition factors of the regular module of the semisimple quotient
    // B = A/rad, found by peeling minimal cyclic submodules; then check that
    // nothing in B annihilates all of them (i.e. rad(B) = 0), which verifies
    // that the declared radical was the whole radical.
    void compute_simples();

    GF F_;
    std::size_t dim_;
    std::vector<std::vector<Vec>> prod_;
    Vec unit_;
    Subspace rad_;
    unsigned faithful_;
    std::map<std::string, Vec> named_;
    std::string slice_name_;
    std::optional<Mat> sigma_;
    std::vector<SimpleModule> simples_;
};

inline Vec FiniteModule::act(const Vec& algebra_elt, const Vec& v) const {
    Vec out(dim, 0);
    const GF& F = alg->field();
    for (std::size_t i = 0; i < algebra_elt.size(); ++i) {
        if (!algebra_elt[i]) continue;
        Vec w = mat_apply(F, action[i], v);
        for (std::size_t k = 0; k < dim; ++k)
            if (w[k]) out[k] = F.add(out[k], F.mul(algebra_elt[i], w[k]));
    }
    return out;
}

// --- module-level linear algebra ---------------------------------------------

/// Hom_A(X, Y) as a subspace of matrices flattened row-major (dim Y x dim X).
inline std::vector<Mat> module_homs_basis(const FiniteModule& x, const FiniteModule& y) {
    const GF& F = x.alg->field();
    std::size_t nx = x.dim, ny = y.dim, na = x.action.size();
    // unknowns: phi[r][c], r < ny, c < nx; equations: phi * X_a = Y_a * phi
    Mat eqs;
    for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t r = 0; r < ny; ++r)
            for (std::size_t c = 0; c < nx; ++c) {
                Vec eq(ny * nx, 0);
                // (phi X_a)[r][c] = sum_k phi[r][k] X_a[k][c]
                for (std::size_t k = 0; k < nx; ++k) {
                    uint8_t coef = x.action[a][k][c];
                    if (coef) eq[r * nx + k] = F.add(eq[r * nx + k], coef);
                }
                // -(Y_a phi)[r][c] = -sum_k Y_a[r][k] phi[k][c]
                for (std::size_t k = 0; k < ny; ++k) {
                    uint8_t coef = y.action[a][r][k];
                    if (coef) eq[k * nx + c] = F.add(eq[k * nx + c], F.neg(coef));
                }
                eqs.push_back(std::move(eq));
            }
    }
    Subspace sol = eqs.empty() ? Subspace::full(F, ny * nx) : kernel(F, eqs);
    std::vector<Mat> out;
    for (const auto& flat : sol.basis()) {
        Mat m(ny, Vec(nx, 0));
        for (std::size_t r = 0; r < ny; ++r)
            for (std::size_t c = 0; c < nx; ++c) m[r][c] = flat[r * nx + c];
        out.push_back(std::move(m));
    }
    return out;
}

inline std::size_t mat_rank(const GF& F, const Mat& m) {
    Subspace s(F, m.empty() ? 0 : m[0].size());
    for (const auto& row : m) s.insert(row);
    return s.dim();
}

/// Module isomorphism test by searching the hom space for an invertible map.
inline bool modules_isomorphic(const FiniteModule& x, const FiniteModule& y) {
    if (x.dim != y.dim) return false;
    if (x.dim == 0) return true;
    const GF& F = x.alg->field();
    auto homs = module_homs_basis(x, y);
    if (homs.empty()) return false;
    // enumerate the hom space
    std::vector<uint8_t> coeff(homs.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < coeff.size() && coeff[i] == F.q() - 1) coeff[i++] = 0;
        if (i == coeff.size()) break;
        ++coeff[i];
        Mat phi(y.dim, Vec(x.dim, 0));
        for (std::size_t h = 0; h < homs.size(); ++h) {
            if (!coeff[h]) continue;
            for (std::size_t r = 0; r < y.dim; ++r)
                for (std::size_t c = 0; c < x.dim; ++c)
                    phi[r][c] = F.add(phi[r][c], F.mul(coeff[h], homs[h][r][c]));
        }
        if (mat_rank(F, phi) == x.dim) return true;
    }
    return false;
}

/// The submodule spanned by a subspace need not be the subspace itself; close
/// under the action.
inline Subspace module_closure(const FiniteModule& m, const Subspace& seed) {
    Subspace s = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& b : std::vector<Vec>(s.basis())) {
            for (const auto& act : m.action) {
                Vec w = mat_apply(m.alg->field(), act, b);
                if (!s.contains(w)) {
                    s.insert(w);
                    grew = true;
                }
            }
        }
    }
    return s;
}

/// Module structure on a stable subspace (basis change onto the subspace).
inline FiniteModule submodule_as_module(const FiniteModule& m, const Subspace& sub) {
    const GF& F = m.alg->field();
    FiniteModule out;
    out.alg = m.alg;
    out.dim = sub.dim();
    out.action.assign(m.action.size(), Mat(sub.dim(), Vec(sub.dim(), 0)));
    // coordinates in the RREF basis: coefficient of basis row r is the entry
    // at its pivot column
    std::vector<std::size_t> pivots;
    for (const auto& row : sub.basis()) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        pivots.push_back(p);
    }
    for (std::size_t a = 0; a < m.action.size(); ++a)
        for (std::size_t j = 0; j < sub.dim(); ++j) {
            Vec w = mat_apply(F, m.action[a], sub.basis()[j]);
            if (!sub.contains(w))
                throw std::invalid_argument("submodule_as_module: subspace is not stable");
            for (std::size_t i = 0; i < sub.dim(); ++i) out.action[a][i][j] = w[pivots[i]];
        }
    return out;
}

/// Quotient module M / S with the projection map returned alongside.
struct QuotientModule {
    FiniteModule mod;
    std::vector<std::size_t> free_coords;
    const Subspace* sub = nullptr;

    Vec project(const Subspace& s, const Vec& v) const {
        Vec r = s.reduce(v);
        Vec out(free_coords.size(), 0);
        for (std::size_t i = 0; i < free_coords.size(); ++i) out[i] = r[free_coords[i]];
        return out;
    }
};

inline QuotientModule quotient_module(const FiniteModule& m, const Subspace& sub) {
    const GF& F = m.alg->field();
    QuotientModule q;
    std::vector<bool> is_pivot(m.dim, false);
    for (const auto& row : sub.basis()) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        is_pivot[p] = true;
    }
    for (std::size_t c = 0; c < m.dim; ++c)
        if (!is_pivot[c]) q.free_coords.push_back(c);
    q.mod.alg = m.alg;
    q.mod.dim = q.free_coords.size();
    q.mod.action.assign(m.action.size(), Mat(q.mod.dim, Vec(q.mod.dim, 0)));
    for (std::size_t a = 0; a < m.action.size(); ++a)
        for (std::size_t j = 0; j < q.mod.dim; ++j) {
            Vec e(m.dim, 0);
            e[q.free_coords[j]] = 1;
            Vec w = q.project(sub, mat_apply(F, m.action[a], e));
            for (std::size_t i = 0; i < q.mod.dim; ++i) q.mod.action[a][i][j] = w[i];
        }
    return q;
}

inline void FiniteAlgebra::compute_simples() {
    // quotient by the declared radical, then peel composition factors off the
    // regular module of the quotient
    FiniteAlgebra b = rad_.dim() == 0 ? *this : quotient(rad_, 1, {});
    if (rad_.dim() == 0 && dim_ == 0) return;
    FiniteModule breg = b.regular_module();

    std::vector<FiniteModule> factors;  // as modules over b
    FiniteModule cur = breg;
    while (cur.dim > 0) {
        // minimal nonzero cyclic submodule is simple
        std::size_t best_dim = cur.dim + 1;
        Subspace best(b.field(), cur.dim);
        // enumerate cyclic submodules over all nonzero vectors
        std::vector<uint8_t> v(cur.dim, 0);
        while (true) {
            std::size_t i = 0;
            while (i < v.size() && v[i] == b.field().q() - 1) v[i++] = 0;
            if (i == v.size()) break;
            ++v[i];
            Subspace seed(b.field(), cur.dim);
            seed.insert(v);
            Subspace cyc = module_closure(cur, seed);
            if (cyc.dim() > 0 && cyc.dim() < best_dim) {
                best_dim = cyc.dim();
                best = cyc;
                if (best_dim == 1) break;
            }
        }
        factors.push_back(submodule_as_module(cur, best));
        cur = quotient_module(cur, best).mod;
    }

    // annihilator of all factors must vanish: rad(B) = 0
    Mat eqs;
    for (const auto& f : factors) {
        // unknown beta in B with beta . f = 0: rows indexed by (vector of f)
        for (std::size_t c = 0; c < f.dim; ++c) {
            for (std::size_t r = 0; r < f.dim; ++r) {
                Vec eq(b.dim(), 0);
                for (std::size_t a = 0; a < b.dim(); ++a) eq[a] = f.action[a][r][c];
                eqs.push_back(std::move(eq));
            }
        }
    }
    if (!factors.empty()) {
        Subspace ann = kernel(F_, eqs);
        if (ann.dim() != 0)
            throw std::invalid_argument(
                "FiniteAlgebra: quotient by declared radical is not semisimple");
    }

    // dedupe iso classes and lift the action through A -> B
    std::vector<FiniteModule> distinct;
    for (const auto& f : factors) {
        bool fresh = true;
        for (const auto& g : distinct) fresh = fresh && !modules_isomorphic(f, g);
        if (fresh) distinct.push_back(f);
    }
    // lift: action of e_i on the simple = action of its image in B
    std::vector<Vec> proj_basis;  // image of e_i in B coordinates
    {
        std::vector<bool> is_pivot(dim_, false);
        for (const auto& row : rad_.basis()) {
            std::size_t p = 0;
            while (p < row.size() && row[p] == 0) ++p;
            is_pivot[p] = true;
        }
        std::vector<std::size_t> free_coords;
        for (std::size_t c = 0; c < dim_; ++c)
            if (!is_pivot[c]) free_coords.push_back(c);
        for (std::size_t i = 0; i < dim_; ++i) {
            Vec r = rad_.reduce(basis_vec(i));
            Vec out(free_coords.size(), 0);
            for (std::size_t k = 0; k < free_coords.size(); ++k) out[k] = r[free_coords[k]];
            proj_basis.push_back(std::move(out));
        }
    }
    for (const auto& f : distinct) {
        SimpleModule s;
        s.mod.alg = this;
        s.mod.dim = f.dim;
        s.mod.action.reserve(dim_);
        if (rad_.dim() == 0) {
            s.mod.action = f.action;
        } else {
            for (std::size_t i = 0; i < dim_; ++i) {
                Mat m(f.dim, Vec(f.dim, 0));
                const Vec& bi = proj_basis[i];
                for (std::size_t a = 0; a < bi.size(); ++a) {
                    if (!bi[a]) continue;
                    for (std::size_t r = 0; r < f.dim; ++r)
                        for (std::size_t c = 0; c < f.dim; ++c)
                            if (f.action[a][r][c])
                                m[r][c] = F_.add(m[r][c], F_.mul(bi[a], f.action[a][r][c]));
                }
                s.mod.action.push_back(std::move(m));
            }
        }
        s.end_dim = module_homs_basis(s.mod, s.mod).size();
        simples_.push_back(std::move(s));
    }
}

}  // namespace ozeta::oracle
