#pragma once

// Shared test machinery.  The checks in here deliberately avoid the library's
// own elimination code: ranks and determinants come from an independent
// fraction-free (Bareiss) elimination over big integers, so the two
// implementations can vouch for each other.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "eqcohom/graded_rep.hpp"
#include "eqcohom/linalg.hpp"
#include "eqcohom/matrix.hpp"
#include "eqcohom/moebius.hpp"
#include "eqcohom/rational.hpp"

namespace testsupport {

using eqcohom::Integer;
using eqcohom::Matrix;
using eqcohom::Rational;

using IntGrid = std::vector<std::vector<Integer>>;

// ---------------------------------------------------------------------------
// Independent elimination oracle: one-step Bareiss, exact integer division.

inline std::size_t bareiss_rank(IntGrid m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[row], m[sel]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return row;
}

inline Integer bareiss_det(IntGrid m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t sel = k;
        while (sel < n && m[sel][k] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != k) {
            std::swap(m[k], m[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Conversions.  Rational matrices are row-scaled by the lcm of the row's
// denominators (rank is unchanged by nonzero row scaling).

inline IntGrid to_int_grid_by_row_scaling(const Matrix& m) {
    IntGrid g(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            scale = boost::multiprecision::lcm(scale, denominator(m(i, j)));
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            g[i][j] = numerator(x) * (scale / denominator(x));
        }
    }
    return g;
}

// Requires every entry to already be an integer.
inline IntGrid to_int_grid(const Matrix& m) {
    IntGrid g(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            g[i][j] = numerator(m(i, j));
            if (denominator(m(i, j)) != 1) {
                throw std::logic_error("to_int_grid: entry not an integer");
            }
        }
    }
    return g;
}

inline std::size_t oracle_rank(const Matrix& m) {
    return bareiss_rank(to_int_grid_by_row_scaling(m));
}

// ---------------------------------------------------------------------------
// Row-origin-tracking variant of Gauss-Jordan, for the property that reduced
// entries have denominators dividing the pivot minor of the input.  The
// library's rref intentionally does not expose this bookkeeping.

struct TrackedRref {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> origin_rows;  // origin_rows[i] = input row whose
                                           // pivot landed in reduced row i
};

inline TrackedRref rref_tracked(Matrix m) {
    std::vector<std::size_t> origin(m.rows());
    std::iota(origin.begin(), origin.end(), std::size_t{0});
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(row, sel);
        std::swap(origin[row], origin[sel]);
        const Rational pivot = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const Rational factor = m(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    origin.resize(row);
    return TrackedRref{std::move(m), std::move(pivots), std::move(origin)};
}

// ---------------------------------------------------------------------------
// Random inputs.  Every caller passes its own fixed-seed engine so failures
// reproduce.

inline long long rand_in(std::mt19937_64& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Matrix random_int_matrix(std::mt19937_64& rng, std::size_t rows,
                                std::size_t cols, long long lo, long long hi) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Rational(rand_in(rng, lo, hi));
    return m;
}

inline Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows,
                                     std::size_t cols, long long lo,
                                     long long hi, long long max_den) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = eqcohom::make_rational(rand_in(rng, lo, hi),
                                             rand_in(rng, 1, max_den));
    return m;
}

// Matrix sending basis vector j to basis vector images[j] (0-based).
inline Matrix permutation_matrix(const std::vector<std::size_t>& images) {
    Matrix m(images.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j) m(images[j], j) = 1;
    return m;
}

// A family of n_ops pairwise-commuting permutation matrices: the coordinate
// set is split into random cycles, and every operator rotates each cycle by
// its own random amount.  Rotations of the same cycle commute, and supports
// of different cycles are disjoint.  Cycle length is capped at 4 so operator
// orders stay at most lcm(2,3,4) = 12.
inline std::vector<Matrix> random_commuting_perm_ops(std::mt19937_64& rng,
                                                     std::size_t dim,
                                                     std::size_t n_ops) {
    std::vector<std::size_t> pts(dim);
    std::iota(pts.begin(), pts.end(), std::size_t{0});
    std::shuffle(pts.begin(), pts.end(), rng);

    std::vector<std::vector<std::size_t>> images(
        n_ops, std::vector<std::size_t>(dim));
    for (auto& img : images) std::iota(img.begin(), img.end(), std::size_t{0});

    std::size_t at = 0;
    while (at < dim) {
        const std::size_t len = static_cast<std::size_t>(
            rand_in(rng, 1, static_cast<long long>(std::min<std::size_t>(dim - at, 4))));
        for (std::size_t k = 0; k < n_ops; ++k) {
            const std::size_t power =
                static_cast<std::size_t>(rand_in(rng, 0, static_cast<long long>(len) - 1));
            for (std::size_t i = 0; i < len; ++i)
                images[k][pts[at + i]] = pts[at + (i + power) % len];
        }
        at += len;
    }

    std::vector<Matrix> ops;
    ops.reserve(n_ops);
    for (const auto& img : images) ops.push_back(permutation_matrix(img));
    return ops;
}

// A random graded family of commuting permutation operators: up to
// max_degrees nonzero degrees drawn from 0..3, each piece of dimension
// 1..max_dim.  With `connected`, degree 0 is pinned to the one-dimensional
// trivial piece.
inline eqcohom::GradedRep random_perm_rep(std::mt19937_64& rng,
                                          std::size_t n_ops,
                                          std::size_t max_degrees = 3,
                                          std::size_t max_dim = 6,
                                          bool connected = false) {
    eqcohom::GradedRep rep;
    rep.n_ops = n_ops;
    rep.connected = connected;

    std::vector<std::size_t> candidates = connected
                                              ? std::vector<std::size_t>{1, 2, 3}
                                              : std::vector<std::size_t>{0, 1, 2, 3};
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const std::size_t count = static_cast<std::size_t>(
        rand_in(rng, 1, static_cast<long long>(
                            std::min(max_degrees, candidates.size()))));

    if (connected) {
        eqcohom::DegreePiece base;
        base.dim = 1;
        base.operators.assign(n_ops, Matrix::identity(1));
        rep.pieces.emplace(0, std::move(base));
    }
    for (std::size_t k = 0; k < count; ++k) {
        eqcohom::DegreePiece piece;
        piece.dim = static_cast<std::size_t>(
            rand_in(rng, 1, static_cast<long long>(max_dim)));
        piece.operators = random_commuting_perm_ops(rng, piece.dim, n_ops);
        rep.pieces.emplace(candidates[k], std::move(piece));
    }
    return rep;
}

inline eqcohom::GradedRep permute_operators(
    const eqcohom::GradedRep& rep, const std::vector<std::size_t>& order) {
    eqcohom::GradedRep out = rep;
    for (auto& [q, piece] : out.pieces) {
        std::vector<Matrix> reordered;
        reordered.reserve(order.size());
        for (std::size_t i : order) reordered.push_back(piece.operators.at(i));
        piece.operators = std::move(reordered);
    }
    return out;
}

inline std::map<std::size_t, std::size_t> dims_of(
    const eqcohom::GradedRep& rep) {
    std::map<std::size_t, std::size_t> dims;
    for (const auto& [q, piece] : rep.pieces) dims.emplace(q, piece.dim);
    return dims;
}

inline long long euler_char(const std::map<std::size_t, std::size_t>& dims) {
    long long chi = 0;
    for (const auto& [q, d] : dims) {
        chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
    }
    return chi;
}

// Random determinant-1 rational matrix with |trace| > 2.  The affine branch
// pins c = 0 and d = 1/a, which is hyperbolic exactly when a != +-1.
inline eqcohom::MoebiusMatrix random_hyperbolic(std::mt19937_64& rng,
                                                bool affine = false) {
    while (true) {
        if (affine) {
            const Rational a = eqcohom::make_rational(rand_in(rng, -6, 6),
                                                      rand_in(rng, 1, 4));
            if (a == 0 || a == 1 || a == -1) continue;
            const Rational b = eqcohom::make_rational(rand_in(rng, -6, 6),
                                                      rand_in(rng, 1, 4));
            return eqcohom::MoebiusMatrix(a, b, Rational(0), 1 / a);
        }
        const Rational a = eqcohom::make_rational(rand_in(rng, -5, 5),
                                                  rand_in(rng, 1, 3));
        const Rational b = eqcohom::make_rational(rand_in(rng, -5, 5),
                                                  rand_in(rng, 1, 3));
        const Rational c = eqcohom::make_rational(rand_in(rng, -5, 5),
                                                  rand_in(rng, 1, 3));
        if (a == 0 || c == 0) continue;
        const eqcohom::MoebiusMatrix m(a, b, c, (1 + b * c) / a);
        if (eqcohom::is_hyperbolic(m)) return m;
    }
}

// Column vector literal.
inline Matrix col(std::initializer_list<Rational> entries) {
    Matrix m(entries.size(), 1);
    std::size_t i = 0;
    for (const auto& x : entries) m(i++, 0) = x;
    return m;
}

// Subspace spanned by the given column vectors.
inline eqcohom::Subspace span(std::initializer_list<Matrix> columns) {
    if (columns.size() == 0) return eqcohom::Subspace::zero(0);
    Matrix gens(columns.begin()->rows(), columns.size());
    std::size_t j = 0;
    for (const auto& c : columns) gens.set_column(j++, c);
    return eqcohom::Subspace::span_of(gens);
}

}  // namespace testsupport
