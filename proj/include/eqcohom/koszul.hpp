#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "eqcohom/errors.hpp"
#include "eqcohom/graded_rep.hpp"
#include "eqcohom/linalg.hpp"
#include "eqcohom/matrix.hpp"

namespace eqcohom {

// All p-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
              std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    if (p > n) return out;
    std::vector<std::size_t> current(p);
    std::iota(current.begin(), current.end(), std::size_t{0});
    while (true) {
        out.push_back(current);
        std::size_t i = p;
        while (i > 0 && current[i - 1] == n - p + (i - 1)) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < p; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

// Cochain complex on n commuting operators: C^p is one copy of V per
// p-subset of operator indices, and the differential inserts each missing
// index i with the block (A_i - I) and the parity of how many chosen indices
// precede i.  Its cohomology is the group cohomology of a rank-n free
// abelian group with coefficients in V.
struct KoszulComplex {
    std::size_t n = 0;
    std::size_t dim_v = 0;
    std::vector<std::vector<std::vector<std::size_t>>> subsets;
    std::vector<Matrix> differentials;  // differentials[p] : C^p -> C^{p+1}

    std::size_t cochain_dim(std::size_t p) const {
        return p <= n ? dim_v * subsets[p].size() : 0;
    }
};

inline int insertion_sign(std::size_t i, const std::vector<std::size_t>& s) {
    std::size_t before = 0;
    for (std::size_t x : s) {
        if (x < i) ++before;
    }
    return before % 2 == 0 ? +1 : -1;
}

inline KoszulComplex build_koszul(std::size_t dim_v,
                                  const std::vector<Matrix>& ops) {
    for (const Matrix& op : ops) {
        if (op.rows() != dim_v || op.cols() != dim_v) {
            throw DimensionMismatch("build_koszul: operator of wrong size");
        }
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (!commute_check(ops[i], ops[j])) {
                throw NonCommuting("build_koszul: operators " +
                                   std::to_string(i) + " and " +
                                   std::to_string(j) + " do not commute");
            }
        }
    }

    KoszulComplex kc;
    kc.n = ops.size();
    kc.dim_v = dim_v;
    for (std::size_t p = 0; p <= kc.n; ++p) {
        kc.subsets.push_back(subsets_of_size(kc.n, p));
    }

    std::vector<Matrix> displacements;
    displacements.reserve(ops.size());
    for (const Matrix& op : ops) {
        displacements.push_back(op - Matrix::identity(dim_v));
    }

    for (std::size_t p = 0; p + 1 <= kc.n; ++p) {
        const auto& from = kc.subsets[p];
        const auto& to = kc.subsets[p + 1];
        Matrix d(dim_v * to.size(), dim_v * from.size());
        for (std::size_t s = 0; s < from.size(); ++s) {
            for (std::size_t i = 0; i < kc.n; ++i) {
                if (std::find(from[s].begin(), from[s].end(), i) !=
                    from[s].end()) {
                    continue;
                }
                std::vector<std::size_t> target = from[s];
                target.insert(std::upper_bound(target.begin(), target.end(), i),
                              i);
                const std::size_t t = static_cast<std::size_t>(
                    std::lower_bound(to.begin(), to.end(), target) -
                    to.begin());
                const int sign = insertion_sign(i, from[s]);
                for (std::size_t r = 0; r < dim_v; ++r) {
                    for (std::size_t c = 0; c < dim_v; ++c) {
                        const Rational& v = displacements[i](r, c);
                        d(t * dim_v + r, s * dim_v + c) =
                            sign > 0 ? v : -v;
                    }
                }
            }
        }
        kc.differentials.push_back(std::move(d));
    }

    for (std::size_t p = 0; p + 1 < kc.differentials.size(); ++p) {
        if (!(kc.differentials[p + 1] * kc.differentials[p]).is_zero()) {
            throw InternalError("build_koszul: differential does not square "
                                "to zero");
        }
    }
    return kc;
}

struct CohomologyPiece {
    std::size_t dim;
    Subspace basis;  // representatives in C^p completing the boundaries
};

// Cocycles modulo coboundaries in cochain degree p.  The returned basis is
// the canonical complement of im d^{p-1} inside ker d^p, picked greedily
// from the kernel's echelon basis.
inline CohomologyPiece group_cohomology(const KoszulComplex& kc,
                                        std::size_t p) {
    if (p > kc.n) {
        throw DegreeOutOfRange("group_cohomology: degree " +
                               std::to_string(p) + " exceeds rank " +
                               std::to_string(kc.n));
    }
    const Subspace cocycles = p < kc.n
                                  ? kernel_basis(kc.differentials[p])
                                  : Subspace::full(kc.cochain_dim(p));
    const Subspace boundaries =
        p > 0 ? image_basis(kc.differentials[p - 1])
              : Subspace::zero(kc.cochain_dim(0));

    std::vector<std::size_t> chosen;
    Matrix accumulated = boundaries.basis();
    Subspace current = boundaries;
    for (std::size_t j = 0; j < cocycles.rank(); ++j) {
        const Matrix candidate = cocycles.basis().column(j);
        if (current.contains(candidate)) continue;
        chosen.push_back(j);
        accumulated = hconcat(accumulated, candidate);
        current = Subspace::span_of(accumulated);
    }

    Matrix reps(kc.cochain_dim(p), chosen.size());
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        reps.set_column(k, cocycles.basis().column(chosen[k]));
    }
    return CohomologyPiece{chosen.size(), Subspace::span_of(reps)};
}

// The total-degree assembly: H^k gets one summand per split k = p + q, where
// p is the group-cohomology degree on the coefficient piece of degree q.
inline BettiBreakdown borel_total(const GradedRep& rep) {
    std::map<std::size_t, KoszulComplex> complexes;
    for (const auto& [q, piece] : rep.pieces) {
        complexes.emplace(q, build_koszul(piece.dim, piece.operators));
    }

    BettiBreakdown out;
    const std::size_t top = rep.n_ops + rep.max_degree();
    for (std::size_t k = 0; k <= top; ++k) {
        std::vector<BettiSummand> summands;
        std::size_t total = 0;
        for (std::size_t p = 0; p <= std::min(rep.n_ops, k); ++p) {
            const std::size_t q = k - p;
            if (q > rep.max_degree()) continue;
            std::size_t dim = 0;
            auto it = complexes.find(q);
            if (it != complexes.end()) {
                dim = group_cohomology(it->second, p).dim;
            }
            summands.push_back(BettiSummand{p, q, dim});
            total += dim;
        }
        out.summands.emplace(k, std::move(summands));
        out.totals.emplace(k, total);
    }
    return out;
}

}  // namespace eqcohom
