#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ozeta/oracle/census.hpp"
#include "ozeta/oracle/finite_algebra.hpp"

namespace ozeta::oracle {

/// Working data for the concrete z-adic Hecke operators on submodules of the
/// regular module M of a truncated algebra with a declared slice z.
/// Window discipline: the operators shift the z-adic filtration one step per
/// application, so results are trusted only for colengths c and step counts
/// n with c + n comfortably below the faithful window (callers enforce it).
struct HeckeContext {
    const FiniteAlgebra* alg;
    FiniteModule M;
    Mat zmat;
    Subspace zM;
    QuotientModule Mbar;  // M / zM

    explicit HeckeContext(const FiniteAlgebra& a)
        : alg(&a), M(a.regular_module()), zmat(a.left_mult_matrix(a.slice())),
          zM(image(a.field(), zmat, Subspace::full(a.field(), a.dim()))),
          Mbar(quotient_module(M, zM)) {}

    const GF& field() const { return alg->field(); }

    Subspace z_power_image(unsigned i) const {
        Subspace s = Subspace::full(field(), M.dim);
        for (unsigned k = 0; k < i; ++k) s = image(field(), zmat, s);
        return s;
    }

    /// Project a subspace of M to Mbar coordinates.
    Subspace to_mbar(const Subspace& s) const {
        Subspace out(field(), Mbar.mod.dim);
        for (const auto& b : s.basis()) out.insert(Mbar.project(zM, b));
        return out;
    }

    /// Graded piece Xbar_i <= Mbar of gr X = Xbar_0 + z Xbar_1 + ... :
    /// z^{-i}(X cap z^i M) projected to Mbar.
    Subspace gr_piece(const Subspace& x, unsigned i) const {
        Subspace s = intersect(field(), x, z_power_image(i));
        for (unsigned k = 0; k < i; ++k) s = preimage(field(), zmat, s);
        return to_mbar(s);
    }

    /// dim gr(M/X)_i = dim z^iM - dim(X cap z^iM + z^{i+1}M)
    std::size_t gr_quotient_piece_dim(const Subspace& x, unsigned i) const {
        Subspace zi = z_power_image(i);
        Subspace bottom = intersect(field(), x, zi);
        bottom.insert_all(z_power_image(i + 1));
        return zi.dim() - bottom.dim();
    }
};

/// T^-: Y -> z^{-1}(Y cap z M).
inline Subspace hecke_T_minus(const HeckeContext& ctx, const Subspace& y) {
    return preimage(ctx.field(), ctx.zmat, intersect(ctx.field(), y, ctx.zM));
}

struct HeckeSummand {
    Subspace y;
    FiniteModule gr0;  // gr(X/Y)_0 as a module (killed by z)
};

/// All summands of T X = sum over submodules Y <= X with Y cap zM = z X,
/// together with the degree-zero graded piece gr(X/Y)_0 = X / (Y + X cap zM).
inline std::vector<HeckeSummand> hecke_T_summands(const HeckeContext& ctx, const Subspace& x) {
    const GF& F = ctx.field();
    Subspace zx = image(F, ctx.zmat, x);
    FiniteModule xmod = submodule_as_module(ctx.M, x);
    // zX in X-coordinates
    std::vector<std::size_t> pivots;
    for (const auto& row : x.basis()) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        pivots.push_back(p);
    }
    auto to_x_coords = [&](const Vec& v) {
        Vec out(x.dim(), 0);
        for (std::size_t i = 0; i < x.dim(); ++i) out[i] = v[pivots[i]];
        return out;
    };
    Subspace zx_in_x(F, x.dim());
    for (const auto& b : zx.basis()) zx_in_x.insert(to_x_coords(b));

    QuotientModule q = quotient_module(xmod, zx_in_x);
    Subspace x_cap_zm = intersect(F, x, ctx.zM);

    std::vector<HeckeSummand> out;
    for_each_submodule(q.mod, static_cast<unsigned>(q.mod.dim), [&](const Subspace& k,
                                                                    unsigned) {
        // lift K through X-coordinates to the ambient module
        Subspace y(F, ctx.M.dim);
        y.insert_all(zx);
        for (const auto& kb : k.basis()) {
            Vec xc(x.dim(), 0);
            for (std::size_t c = 0; c < q.free_coords.size(); ++c) xc[q.free_coords[c]] = kb[c];
            Vec amb = zero_vec(ctx.M.dim);
            for (std::size_t c = 0; c < x.dim(); ++c)
                if (xc[c]) amb = vec_add(F, amb, vec_scale(F, xc[c], x.basis()[c]));
            y.insert(amb);
        }
        // condition: Y cap zM = zX
        Subspace cap = intersect(F, y, ctx.zM);
        if (!(cap.dim() == zx.dim() && cap.contains(zx))) return;
        // gr(X/Y)_0 = X / (Y + X cap zM)
        Subspace denom = y;
        denom.insert_all(x_cap_zm);
        Subspace denom_in_x(F, x.dim());
        for (const auto& b : denom.basis()) denom_in_x.insert(to_x_coords(b));
        FiniteModule gr0 = quotient_module(xmod, denom_in_x).mod;
        out.push_back(HeckeSummand{y, std::move(gr0)});
    });
    return out;
}

/// Summands of T_{Nbar} X for a fixed isomorphism class.
inline std::vector<Subspace> hecke_apply(const HeckeContext& ctx, const Subspace& x,
                                         const FiniteModule& nbar) {
    std::vector<Subspace> out;
    for (auto& s : hecke_T_summands(ctx, x))
        if (modules_isomorphic(s.gr0, nbar)) out.push_back(s.y);
    return out;
}

/// chi_Mbar(z^i (x) V) = |Hom(Mbar, V twisted by sigma^i)| as a power of q.
inline Int chi_twisted(const HeckeContext& ctx, const FiniteModule& v, unsigned i) {
    const FiniteAlgebra& A = *ctx.alg;
    const GF& F = A.field();
    // twisted action: a . w = sigma^i(a) . w
    Mat sig(A.dim(), Vec(A.dim(), 0));
    for (std::size_t r = 0; r < A.dim(); ++r) sig[r][r] = 1;
    for (unsigned k = 0; k < i; ++k) sig = mat_mul(F, A.sigma(), sig);
    FiniteModule tw;
    tw.alg = &A;
    tw.dim = v.dim;
    tw.action.assign(A.dim(), Mat(v.dim, Vec(v.dim, 0)));
    for (std::size_t e = 0; e < A.dim(); ++e) {
        Vec se(A.dim(), 0);
        for (std::size_t r = 0; r < A.dim(); ++r) se[r] = sig[r][e];
        for (std::size_t r2 = 0; r2 < A.dim(); ++r2) {
            if (!se[r2]) continue;
            for (std::size_t a2 = 0; a2 < v.dim; ++a2)
                for (std::size_t b2 = 0; b2 < v.dim; ++b2)
                    if (v.action[r2][a2][b2])
                        tw.action[e][a2][b2] =
                            F.add(tw.action[e][a2][b2], F.mul(se[r2], v.action[r2][a2][b2]));
        }
    }
    std::size_t h = module_homs_basis(ctx.Mbar.mod, tw).size();
    return pow_int(Int(F.q()), static_cast<long>(h));
}

struct TowerReport {
    bool pass = true;
    std::vector<std::string> failures;
    unsigned universe_size = 0;
    unsigned tn_summands = 0;

    void fail(const std::string& msg) {
        pass = false;
        failures.push_back(msg);
    }
};

/// Exercises the z-adic Hecke tower on the regular module:
///  * T^n M equals, with multiplicity one, the set of X with T^{-n} X = M
///    (restricted to colengths within the bound);
///  * T^{-n0} X = M once gr(M/X)_{n0} = 0;
///  * the graded-shift identity for X = T^- Y on every enumerated Y;
///  * no Y is a summand of two different T_{Nbar'} X';
///  * the lift-count formula a_Nbar * prod_i chi(z^i (x) Xbar_i/Xbar_{i-1}).
inline TowerReport verify_tower(const FiniteAlgebra& alg, unsigned n, unsigned colength_bound) {
    if (colength_bound + n + 2 > alg.faithful_colength())
        throw std::invalid_argument("verify_tower: window too small for bound + steps");
    HeckeContext ctx(alg);
    const GF& F = ctx.field();
    TowerReport report;

    // universe of submodules with colength <= bound
    std::vector<std::pair<Subspace, unsigned>> universe;
    for_each_submodule(ctx.M, colength_bound, [&](const Subspace& s, unsigned c) {
        universe.emplace_back(s, c);
    });
    report.universe_size = static_cast<unsigned>(universe.size());
    auto colength_of = [&](const Subspace& s) {
        return static_cast<unsigned>(ctx.M.dim - s.dim());
    };

    // ---- T^n M expansion with multiplicities, pruned to the bound ----
    std::map<std::string, std::pair<Subspace, Int>> current;
    Subspace full = Subspace::full(F, ctx.M.dim);
    current.emplace(full.key(), std::make_pair(full, Int(1)));
    for (unsigned step = 0; step < n; ++step) {
        std::map<std::string, std::pair<Subspace, Int>> next;
        for (const auto& [key, entry] : current) {
            for (auto& s : hecke_T_summands(ctx, entry.first)) {
                if (colength_of(s.y) > colength_bound) continue;
                auto [it, fresh] = next.emplace(s.y.key(), std::make_pair(s.y, entry.second));
                if (!fresh) it->second.second += entry.second;
            }
        }
        current = std::move(next);
    }
    report.tn_summands = static_cast<unsigned>(current.size());

    // ---- Prop (3): T^n M = sum over {X : T^{-n} X = M}, multiplicity one ----
    std::set<std::string> rhs;
    for (const auto& [x, c] : universe) {
        Subspace t = x;
        for (unsigned k = 0; k < n; ++k) t = hecke_T_minus(ctx, t);
        if (t.dim() == ctx.M.dim) rhs.insert(x.key());
    }
    for (const auto& [key, entry] : current) {
        if (entry.second != 1)
            report.fail("T^n M has a summand with multiplicity " + entry.second.str());
        if (!rhs.count(key)) report.fail("T^n M contains X with T^{-n} X != M");
    }
    for (const auto& key : rhs)
        if (!current.count(key)) report.fail("X with T^{-n} X = M missing from T^n M");

    // ---- Prop (1): gr(M/X)_{n0} = 0 forces T^{-n0} X = M ----
    for (const auto& [x, c] : universe) {
        unsigned n0 = 0;
        while (n0 <= colength_bound && ctx.gr_quotient_piece_dim(x, n0) != 0) ++n0;
        Subspace t = x;
        for (unsigned k = 0; k < n0; ++k) t = hecke_T_minus(ctx, t);
        if (t.dim() != ctx.M.dim)
            report.fail("T^{-n0} X != M for a colength-" + std::to_string(c) +
                        " submodule with gr(M/X)_{n0} = 0, n0 = " + std::to_string(n0));
    }

    // ---- graded shift: for X = T^- Y, Xbar_i = Ybar_{i+1} ----
    for (const auto& [y, c] : universe) {
        Subspace x = hecke_T_minus(ctx, y);
        if (!x.contains(y)) report.fail("T^- Y does not contain Y");
        for (unsigned i = 0; i + 1 <= colength_bound && i < 3; ++i) {
            Subspace xi = ctx.gr_piece(x, i);
            Subspace yi1 = ctx.gr_piece(y, i + 1);
            if (!(xi.dim() == yi1.dim() && xi.contains(yi1)))
                report.fail("gr shift fails at piece " + std::to_string(i));
        }
    }

    // ---- Prop (2) + Lemma (lift counts) over the universe ----
    std::map<std::string, std::vector<std::string>> sources;  // Y key -> X' keys
    for (const auto& [x, cx] : universe) {
        auto summands = hecke_T_summands(ctx, x);
        // group by iso class of gr0
        std::vector<FiniteModule> reps;
        std::vector<std::vector<std::size_t>> groups;
        for (std::size_t si = 0; si < summands.size(); ++si) {
            if (colength_of(summands[si].y) <= colength_bound)
                sources[summands[si].y.key()].push_back(x.key());
            bool placed = false;
            for (std::size_t g = 0; g < reps.size() && !placed; ++g) {
                if (modules_isomorphic(summands[si].gr0, reps[g])) {
                    groups[g].push_back(si);
                    placed = true;
                }
            }
            if (!placed) {
                reps.push_back(summands[si].gr0);
                groups.push_back({si});
            }
        }
        // lift-count formula per class, restricted to the faithful zone
        Subspace x0 = ctx.gr_piece(x, 0);
        FiniteModule x0mod = submodule_as_module(ctx.Mbar.mod, x0);
        for (std::size_t g = 0; g < reps.size(); ++g) {
            if (colength_of(summands[groups[g][0]].y) > colength_bound) continue;
            // a_Nbar: submodules of Xbar_0 with quotient isomorphic to Nbar
            unsigned len = static_cast<unsigned>(reps[g].dim);
            Int a_n = 0;
            for_each_submodule(x0mod, len, [&](const Subspace& sub, unsigned cc) {
                if (cc != len) return;
                QuotientModule qq = quotient_module(x0mod, sub);
                if (modules_isomorphic(qq.mod, reps[g])) a_n += 1;
            });
            Int expect = a_n;
            Subspace prev = x0;
            for (unsigned i = 1; i + 1 <= alg.faithful_colength() && i <= colength_bound + 1;
                 ++i) {
                Subspace xi = ctx.gr_piece(x, i);
                // V = Xbar_i / Xbar_{i-1}
                FiniteModule ximod = submodule_as_module(ctx.Mbar.mod, xi);
                std::vector<std::size_t> pivots;
                for (const auto& row : xi.basis()) {
                    std::size_t p = 0;
                    while (p < row.size() && row[p] == 0) ++p;
                    pivots.push_back(p);
                }
                Subspace prev_in_xi(F, xi.dim());
                for (const auto& b : prev.basis()) {
                    Vec coords(xi.dim(), 0);
                    for (std::size_t k = 0; k < xi.dim(); ++k) coords[k] = b[pivots[k]];
                    prev_in_xi.insert(coords);
                }
                FiniteModule v = quotient_module(ximod, prev_in_xi).mod;
                expect *= chi_twisted(ctx, v, i);
                prev = xi;
            }
            if (Int(groups[g].size()) != expect)
                report.fail("lift count mismatch: got " + std::to_string(groups[g].size()) +
                            " expected " + expect.str());
        }
    }
    for (const auto& [ykey, xs] : sources) {
        std::set<std::string> uniq(xs.begin(), xs.end());
        if (uniq.size() > 1) report.fail("a summand arises from two different T_{Nbar'} X'");
    }

    return report;
}

}  // namespace ozeta::oracle
