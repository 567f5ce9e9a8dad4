#pragma once

#include <map>
#include <set>
#include <vector>

#include "ozeta/numeric.hpp"
#include "ozeta/gflinalg.hpp"
#include "ozeta/threads.hpp"

namespace ozeta::oracle {

/// Exhaustive enumeration of full sublattices L <= O^r, O = F_q[[t]], of
/// F_q-codimension n <= n_max, working in the window O^r / t^{n_max} O^r
/// (a codimension-n sublattice contains t^n O^r, so the window is faithful).
///
/// Candidates come from Hermite normal forms: upper triangular bases with
/// diagonal t^{a_i}, sum a_i = n, and the entry in row i of column j > i
/// reduced mod t^{a_i}. Each candidate is realized as an explicit subspace,
/// checked for t-stability and codimension, and deduplicated by canonical
/// echelon form, so the count does not presuppose HNF uniqueness.
///
/// Keys are reported in *algebra* colength r*n (left ideals of M_r(O) of
/// colength rn correspond to sublattices of codimension n).
inline std::map<unsigned, Int> count_sublattices(unsigned q, unsigned r, unsigned n_max) {
    if (r < 1 || r > 3) throw std::invalid_argument("count_sublattices: r must be 1..3");
    if (n_max > 6) throw std::invalid_argument("count_sublattices: n_max must be <= 6");
    GF F = GF::make(q);
    const unsigned W = n_max == 0 ? 1 : n_max;   // t-adic window
    const std::size_t dim = static_cast<std::size_t>(r) * W;
    auto coord = [&](unsigned comp, unsigned tpow) { return comp * W + tpow; };

    // multiplication by t on the window
    Mat tmat(dim, Vec(dim, 0));
    for (unsigned c = 0; c < r; ++c)
        for (unsigned k = 0; k + 1 < W; ++k) tmat[coord(c, k + 1)][coord(c, k)] = 1;

    // diagonal exponent tuples with sum <= n_max
    std::vector<std::vector<unsigned>> diags;
    std::vector<unsigned> cur(r, 0);
    std::function<void(unsigned, unsigned)> gen = [&](unsigned pos, unsigned remaining) {
        if (pos == r) {
            diags.push_back(cur);
            return;
        }
        for (unsigned a = 0; a <= remaining; ++a) {
            cur[pos] = a;
            gen(pos + 1, remaining - a);
        }
    };
    gen(0, n_max);

    auto process = [&](const std::vector<unsigned>& a) {
        std::map<unsigned, std::set<std::string>> local;
        // free entries: row i, column j > i, coefficients c_0..c_{a_i - 1}
        std::vector<std::pair<unsigned, unsigned>> cells;  // (row, col)
        unsigned total_free = 0;
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = i + 1; j < r; ++j) {
                cells.emplace_back(i, j);
                total_free += a[i];
            }
        std::vector<uint8_t> vals(total_free, 0);
        while (true) {
            // build the columns: col_j = t^{a_j} e_j + sum_{i<j} f_{ij} e_i
            std::vector<Vec> cols(r, Vec(dim, 0));
            for (unsigned j = 0; j < r; ++j)
                if (a[j] < W) cols[j][coord(j, a[j])] = 1;
            unsigned off = 0;
            for (auto [i, j] : cells) {
                for (unsigned k = 0; k < a[i]; ++k)
                    if (k < W) cols[j][coord(i, k)] = vals[off + k];
                off += a[i];
            }
            // span of {t^s col_j}
            Subspace L(F, dim);
            for (unsigned j = 0; j < r; ++j) {
                Vec v = cols[j];
                for (unsigned s = 0; s < W; ++s) {
                    L.insert(v);
                    v = mat_apply(F, tmat, v);
                }
            }
            // t-stability holds by construction; verify anyway
            for (const auto& b : L.basis())
                if (!L.contains(mat_apply(F, tmat, b)))
                    throw std::logic_error("count_sublattices: lattice not t-stable");
            unsigned codim = static_cast<unsigned>(dim - L.dim());
            if (codim <= n_max) local[codim].insert(L.key());
            // odometer over free coefficients
            std::size_t i2 = 0;
            while (i2 < vals.size() && vals[i2] == F.q() - 1) vals[i2++] = 0;
            if (i2 == vals.size()) break;
            ++vals[i2];
        }
        return local;
    };

    auto partials = parallel_map<std::vector<unsigned>, std::map<unsigned, std::set<std::string>>>(
        diags, process);
    std::map<unsigned, std::set<std::string>> seen;
    for (auto& part : partials)
        for (auto& [codim, keys] : part) seen[codim].insert(keys.begin(), keys.end());

    std::map<unsigned, Int> out;
    for (unsigned n = 0; n <= n_max; ++n)
        out[n * r] = Int(seen.count(n) ? seen[n].size() : 0);
    return out;
}

/// Raw-scan oracle for small codimension: enumerate every subspace of
/// (F_q[t]/t^window)^r of the given codimension and count the t-stable ones.
inline Int raw_count_sublattices(unsigned q, unsigned r, unsigned codim, unsigned window) {
    GF F = GF::make(q);
    const std::size_t dim = static_cast<std::size_t>(r) * window;
    if (codim > window)
        throw std::invalid_argument("raw_count_sublattices: codim must be <= window");
    auto coord = [&](unsigned comp, unsigned tpow) { return comp * window + tpow; };
    Mat tmat(dim, Vec(dim, 0));
    for (unsigned c = 0; c < r; ++c)
        for (unsigned k = 0; k + 1 < window; ++k) tmat[coord(c, k + 1)][coord(c, k)] = 1;
    Int count = 0;
    for_each_subspace_of_dim(F, dim, dim - codim, [&](const Subspace& s) {
        for (const auto& b : s.basis())
            if (!s.contains(mat_apply(F, tmat, b))) return;
        count += 1;
    });
    return count;
}

}  // namespace ozeta::oracle
