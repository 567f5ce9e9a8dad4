#pragma once

#include <string>
#include <vector>

#include "ozeta/oracle/census.hpp"
#include "ozeta/oracle/finite_algebra.hpp"

namespace ozeta::oracle {

struct SliceReportEntry {
    unsigned colength = 0;
    bool cyclic = false;
    bool regular_generator = false;
    bool pass() const { return cyclic && regular_generator; }
};

struct SliceReport {
    std::vector<SliceReportEntry> entries;
    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass()) return false;
        return true;
    }
};

/// Checks the homogeneous-slice condition (*) on the module Abar itself:
/// every finite-colength submodule W is isomorphic to Abar. Sufficient
/// in-window test per submodule: some w in W generates (Abar w = W) and the
/// annihilator of w has dimension exactly colength(W). For a genuine
/// truncation Abar_full/F^w this pins W ~ Abar: the map a -> a w is onto W
/// with the smallest kernel a colength-colength(W) image allows; a zero
/// divisor would inflate the annihilator beyond the top filtration slice,
/// which the dimension count rules out while colengths stay well below the
/// window.
inline SliceReport check_slice_bar(const FiniteAlgebra& abar, unsigned colength_bound) {
    if (2 * colength_bound + 2 > abar.faithful_colength())
        throw std::invalid_argument(
            "check_slice_bar: window too small; need faithful window >= 2*bound + 2");
    const GF& F = abar.field();
    FiniteModule reg = abar.regular_module();
    SliceReport report;
    for_each_submodule(reg, colength_bound, [&](const Subspace& w, unsigned c) {
        if (c == 0) return;  // the module itself
        SliceReportEntry entry;
        entry.colength = c;
        // whether a lift of a top-class generates W depends only on the class
        // (Nakayama; the radical is nilpotent in the truncation), so it is
        // enough to test one lift per element of W / rad W
        Subspace radw(F, abar.dim());
        for (const auto& r : abar.radical().basis())
            for (const auto& b : w.basis()) radw.insert(abar.multiply(r, b));
        std::vector<Vec> lifts;
        {
            // complete radw to w: basis vectors of w not in the span
            Subspace span = radw;
            for (const auto& b : w.basis())
                if (span.insert(b)) lifts.push_back(b);
        }
        Subspace tops = Subspace::span(F, abar.dim(), lifts);
        tops.for_each_vector_until([&](const Vec& cand) {
            if (is_zero_vec(cand)) return false;
            // right multiplication a -> a * cand
            Mat m(abar.dim(), Vec(abar.dim(), 0));
            for (std::size_t j = 0; j < abar.dim(); ++j) {
                Vec col = abar.multiply(abar.basis_vec(j), cand);
                for (std::size_t i = 0; i < abar.dim(); ++i) m[i][j] = col[i];
            }
            std::size_t ker = kernel(F, m).dim();
            if (abar.dim() - ker != w.dim()) return false;  // image smaller than W
            // image is contained in W (left submodule, cand in W); dimension
            // equality makes it all of W
            entry.cyclic = true;
            if (ker == c) {
                entry.regular_generator = true;
                return true;
            }
            return false;
        });
        report.entries.push_back(entry);
    });
    return report;
}

/// Forms Abar = A/(z) for the declared slice element and runs the (*) check.
inline SliceReport check_slice(const FiniteAlgebra& alg, unsigned colength_bound) {
    if (!alg.has_slice()) throw std::invalid_argument("check_slice: no slice declared");
    Subspace ideal = alg.principal_ideal(alg.slice());
    // the image of the weight filtration window in Abar is again the
    // radical-power window with the same exponent for all builders here
    FiniteAlgebra abar = alg.quotient(ideal, alg.faithful_colength(), {});
    return check_slice_bar(abar, colength_bound);
}

}  // namespace ozeta::oracle
