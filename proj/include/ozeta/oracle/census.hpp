#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ozeta/numeric.hpp"
#include "ozeta/oracle/finite_algebra.hpp"

namespace ozeta::oracle {

/// Multiset of composition factors, as multiplicities indexed like
/// FiniteAlgebra::simples().
using FactorClass = std::vector<unsigned>;

struct SubmoduleCensus {
    std::map<unsigned, Int> by_colength;
    std::map<std::pair<unsigned, FactorClass>, Int> by_class;

    Int count(unsigned colength) const {
        auto it = by_colength.find(colength);
        return it == by_colength.end() ? Int(0) : it->second;
    }
};

/// Composition-factor multiset of a finite module via its radical filtration;
/// each layer is semisimple and the multiplicity of a simple S in a layer V
/// is dim Hom(V, S) / dim End(S).
inline FactorClass composition_class(const FiniteModule& m) {
    const FiniteAlgebra& A = *m.alg;
    const GF& F = A.field();
    FactorClass cls(A.simples().size(), 0);
    FiniteModule cur = m;
    while (cur.dim > 0) {
        // rad * cur
        Subspace radcur(F, cur.dim);
        for (const auto& r : A.radical().basis())
            for (std::size_t j = 0; j < cur.dim; ++j) {
                Vec e(cur.dim, 0);
                e[j] = 1;
                radcur.insert(cur.act(r, e));
            }
        QuotientModule layer = quotient_module(cur, radcur);
        for (std::size_t s = 0; s < A.simples().size(); ++s) {
            const auto& simple = A.simples()[s];
            std::size_t h = module_homs_basis(layer.mod, simple.mod).size();
            if (h % simple.end_dim != 0)
                throw std::logic_error("composition_class: hom count not divisible by End dim");
            cls[s] += static_cast<unsigned>(h / simple.end_dim);
        }
        if (radcur.dim() == cur.dim)
            throw std::logic_error("composition_class: radical filtration does not terminate");
        cur = submodule_as_module(cur, radcur);
    }
    return cls;
}

/// All submodules W' < W with W/W' simple. Every such W' contains rad*W, so
/// they are exactly the kernels of surjections W/radW -> S over the simples S.
inline std::vector<Subspace> maximal_submodules(const FiniteModule& ambient, const Subspace& w,
                                                std::vector<unsigned>* step_sizes = nullptr) {
    const FiniteAlgebra& A = *ambient.alg;
    const GF& F = A.field();
    Subspace radw(F, ambient.dim);
    for (const auto& r : A.radical().basis())
        for (const auto& b : w.basis()) radw.insert(ambient.act(r, b));

    FiniteModule wmod = submodule_as_module(ambient, w);
    // rad*W in W-coordinates
    std::vector<std::size_t> pivots;
    for (const auto& row : w.basis()) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        pivots.push_back(p);
    }
    Subspace radw_in_w(F, w.dim());
    for (const auto& b : radw.basis()) {
        Vec coords(w.dim(), 0);
        for (std::size_t i = 0; i < w.dim(); ++i) coords[i] = b[pivots[i]];
        radw_in_w.insert(coords);
    }
    QuotientModule top = quotient_module(wmod, radw_in_w);

    std::vector<Subspace> out;
    std::set<std::string> seen;
    if (step_sizes) step_sizes->clear();
    for (const auto& simple : A.simples()) {
        auto homs = module_homs_basis(top.mod, simple.mod);
        if (homs.empty()) continue;
        std::vector<uint8_t> coeff(homs.size(), 0);
        while (true) {
            std::size_t i = 0;
            while (i < coeff.size() && coeff[i] == F.q() - 1) coeff[i++] = 0;
            if (i == coeff.size()) break;
            ++coeff[i];
            Mat phi(simple.mod.dim, Vec(top.mod.dim, 0));
            for (std::size_t h = 0; h < homs.size(); ++h) {
                if (!coeff[h]) continue;
                for (std::size_t r = 0; r < simple.mod.dim; ++r)
                    for (std::size_t c = 0; c < top.mod.dim; ++c)
                        phi[r][c] = F.add(phi[r][c], F.mul(coeff[h], homs[h][r][c]));
            }
            if (mat_rank(F, phi) != simple.mod.dim) continue;  // not surjective
            // kernel in top coordinates -> subspace of ambient
            Subspace ker_top = kernel(F, phi);
            Subspace sub(F, ambient.dim);
            sub.insert_all(radw);
            for (const auto& kt : ker_top.basis()) {
                // lift top coordinates through W coordinates to ambient
                Vec wc(w.dim(), 0);
                for (std::size_t c = 0; c < top.free_coords.size(); ++c)
                    wc[top.free_coords[c]] = kt[c];
                Vec amb = zero_vec(ambient.dim);
                for (std::size_t c = 0; c < w.dim(); ++c)
                    if (wc[c]) amb = vec_add(F, amb, vec_scale(F, wc[c], w.basis()[c]));
                sub.insert(amb);
            }
            if (seen.insert(sub.key()).second) {
                out.push_back(sub);
                if (step_sizes) step_sizes->push_back(static_cast<unsigned>(simple.mod.dim));
            }
        }
    }
    return out;
}

/// Breadth-first enumeration of all submodules of `ambient` of colength up to
/// `max_colength`, extending by simple socle steps. Calls `visit(subspace,
/// colength)` exactly once per submodule, in increasing colength order.
inline void for_each_submodule(const FiniteModule& ambient, unsigned max_colength,
                               const std::function<void(const Subspace&, unsigned)>& visit) {
    const GF& F = ambient.alg->field();
    std::map<unsigned, std::vector<Subspace>> levels;
    std::set<std::string> seen;
    Subspace full = Subspace::full(F, ambient.dim);
    levels[0].push_back(full);
    seen.insert(full.key());
    for (unsigned c = 0; c <= max_colength; ++c) {
        auto it = levels.find(c);
        if (it == levels.end()) continue;
        for (std::size_t idx = 0; idx < it->second.size(); ++idx) {
            const Subspace w = it->second[idx];
            visit(w, c);
            if (c == max_colength) continue;
            std::vector<unsigned> steps;
            auto maxima = maximal_submodules(ambient, w, &steps);
            for (std::size_t k = 0; k < maxima.size(); ++k) {
                unsigned c2 = c + steps[k];
                if (c2 > max_colength) continue;
                if (seen.insert(maxima[k].key()).second) levels[c2].push_back(maxima[k]);
            }
        }
    }
}

/// Exhaustive census of left ideals of the (truncated) algebra by colength
/// and composition class. Valid for colengths up to the construction's
/// faithful window.
inline SubmoduleCensus count_ideals_algebra(const FiniteAlgebra& alg, unsigned n_max) {
    if (n_max > alg.faithful_colength())
        throw std::invalid_argument(
            "count_ideals_algebra: window too small for requested colength (faithful up to " +
            std::to_string(alg.faithful_colength()) + ")");
    FiniteModule reg = alg.regular_module();
    SubmoduleCensus census;
    for_each_submodule(reg, n_max, [&](const Subspace& w, unsigned c) {
        census.by_colength[c] += 1;
        QuotientModule q = quotient_module(reg, w);
        census.by_class[{c, composition_class(q.mod)}] += 1;
    });
    return census;
}

/// Raw-scan fallback: enumerate every subspace of the truncation of the
/// requested codimension and keep the action-stable ones. Exponential in the
/// ambient dimension; used to validate the BFS path on small windows.
inline Int raw_scan_stable_count(const FiniteAlgebra& alg, unsigned colength) {
    const GF& F = alg.field();
    FiniteModule reg = alg.regular_module();
    if (colength > reg.dim) return 0;
    Int count = 0;
    for_each_subspace_of_dim(F, reg.dim, reg.dim - colength, [&](const Subspace& s) {
        for (std::size_t a = 0; a < reg.action.size(); ++a)
            for (const auto& b : s.basis())
                if (!s.contains(mat_apply(F, reg.action[a], b))) return;
        count += 1;
    });
    return count;
}

}  // namespace ozeta::oracle
