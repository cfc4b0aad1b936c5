#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eqcohom/errors.hpp"
#include "eqcohom/matrix.hpp"
#include "eqcohom/rational.hpp"

namespace eqcohom {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

// Gauss-Jordan with first-nonzero pivoting.  Deterministic; the reduced
// row-echelon form is unique, so this doubles as a canonicalizer.
inline RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(row, sel);
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
    const std::size_t rank = pivots.size();
    return RrefResult{std::move(m), std::move(pivots), rank};
}

// A subspace of a fixed coordinate space, held as the unique reduced
// column-echelon basis (transpose of the RREF of the transposed generator
// set).  Identical subspaces therefore have entry-identical bases, which
// makes operator== a plain comparison.
class Subspace {
  public:
    // Span of the columns of `generators`; ambient dimension is the row
    // count.  Dependent or zero generators are fine.
    static Subspace span_of(const Matrix& generators) {
        RrefResult r = rref(generators.transpose());
        Matrix basis(generators.rows(), r.rank);
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t j = 0; j < generators.rows(); ++j)
                basis(j, i) = r.reduced(i, j);
        return Subspace(generators.rows(), std::move(basis),
                        std::move(r.pivot_cols));
    }

    static Subspace zero(std::size_t ambient_dim) {
        return Subspace(ambient_dim, Matrix(ambient_dim, 0), {});
    }

    static Subspace full(std::size_t ambient_dim) {
        std::vector<std::size_t> pivots(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
        return Subspace(ambient_dim, Matrix::identity(ambient_dim),
                        std::move(pivots));
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

    // v minus its span-component, computed against the echelon basis.  The
    // result has zeros in every pivot row; it is zero iff v lies in the span.
    Matrix reduce(Matrix v) const {
        check_vector(v);
        for (std::size_t j = 0; j < basis_.cols(); ++j) {
            const Rational coeff = v(pivot_rows_[j], 0);
            if (coeff == 0) continue;
            for (std::size_t i = 0; i < ambient_dim_; ++i)
                v(i, 0) -= coeff * basis_(i, j);
        }
        return v;
    }

    bool contains(const Matrix& v) const { return reduce(v).is_zero(); }

    // Coefficients of v in the echelon basis, or nullopt if v is outside.
    std::optional<Matrix> coords_of(const Matrix& v) const {
        check_vector(v);
        Matrix coords(basis_.cols(), 1);
        Matrix residue = v;
        for (std::size_t j = 0; j < basis_.cols(); ++j) {
            const Rational coeff = residue(pivot_rows_[j], 0);
            coords(j, 0) = coeff;
            if (coeff == 0) continue;
            for (std::size_t i = 0; i < ambient_dim_; ++i)
                residue(i, 0) -= coeff * basis_(i, j);
        }
        if (!residue.is_zero()) return std::nullopt;
        return coords;
    }

    bool operator==(const Subspace& other) const {
        return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
    }
    bool operator!=(const Subspace& other) const { return !(*this == other); }

  private:
    Subspace(std::size_t ambient_dim, Matrix basis,
             std::vector<std::size_t> pivot_rows)
        : ambient_dim_(ambient_dim),
          basis_(std::move(basis)),
          pivot_rows_(std::move(pivot_rows)) {}

    void check_vector(const Matrix& v) const {
        if (v.rows() != ambient_dim_ || v.cols() != 1) {
            throw DimensionMismatch("subspace: vector has wrong shape");
        }
    }

    std::size_t ambient_dim_;
    Matrix basis_;
    std::vector<std::size_t> pivot_rows_;
};

inline Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t next_pivot = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (next_pivot < r.pivot_cols.size() &&
                r.pivot_cols[next_pivot] == j) {
                ++next_pivot;
            } else {
                free_cols.push_back(j);
            }
        }
    }
    // One generator per free column: 1 there, back-substituted values at the
    // pivot columns.  span_of re-canonicalizes.
    Matrix gens(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        gens(free_cols[k], k) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            gens(r.pivot_cols[i], k) = -r.reduced(i, free_cols[k]);
    }
    return Subspace::span_of(gens);
}

inline Subspace image_basis(const Matrix& m) { return Subspace::span_of(m); }

// The carrier of V / killed.  Representatives live on the coordinates that
// are not pivot rows of the killed subspace, so projection is: reduce, then
// read those coordinates off.
class QuotientSpace {
  public:
    explicit QuotientSpace(Subspace killed) : killed_(std::move(killed)) {
        std::size_t next_pivot = 0;
        for (std::size_t i = 0; i < killed_.ambient_dim(); ++i) {
            if (next_pivot < killed_.pivot_rows().size() &&
                killed_.pivot_rows()[next_pivot] == i) {
                ++next_pivot;
            } else {
                rep_coords_.push_back(i);
            }
        }
    }

    std::size_t ambient_dim() const { return killed_.ambient_dim(); }
    std::size_t dim() const { return rep_coords_.size(); }
    const Subspace& killed() const { return killed_; }
    const std::vector<std::size_t>& rep_coords() const { return rep_coords_; }

    // Class of an ambient vector, in representative coordinates.
    Matrix project(const Matrix& v) const {
        Matrix reduced = killed_.reduce(v);
        Matrix out(rep_coords_.size(), 1);
        for (std::size_t i = 0; i < rep_coords_.size(); ++i)
            out(i, 0) = reduced(rep_coords_[i], 0);
        return out;
    }

    // Canonical ambient representative of a quotient vector.
    Matrix lift(const Matrix& coords) const {
        if (coords.rows() != rep_coords_.size() || coords.cols() != 1) {
            throw DimensionMismatch("quotient lift: wrong coordinate count");
        }
        Matrix out(killed_.ambient_dim(), 1);
        for (std::size_t i = 0; i < rep_coords_.size(); ++i)
            out(rep_coords_[i], 0) = coords(i, 0);
        return out;
    }

    bool operator==(const QuotientSpace& other) const {
        return killed_ == other.killed_;
    }
    bool operator!=(const QuotientSpace& other) const {
        return !(*this == other);
    }

  private:
    Subspace killed_;
    std::vector<std::size_t> rep_coords_;
};

// Matrix of a in the basis of s, defined when a maps s into itself.
inline Matrix restrict_to_subspace(const Matrix& a, const Subspace& s) {
    if (!a.is_square()) {
        throw DimensionMismatch("restrict_to_subspace: matrix not square");
    }
    if (a.cols() != s.ambient_dim()) {
        throw DimensionMismatch(
            "restrict_to_subspace: ambient dimensions differ");
    }
    Matrix out(s.rank(), s.rank());
    for (std::size_t j = 0; j < s.rank(); ++j) {
        auto coords = s.coords_of(a * s.basis().column(j));
        if (!coords) {
            throw NotInvariant(
                "restrict_to_subspace: subspace is not preserved");
        }
        out.set_column(j, *coords);
    }
    return out;
}

// Matrix of the map a induces on V / killed, defined when a preserves the
// killed subspace.
inline Matrix induced_on_quotient(const Matrix& a, const QuotientSpace& qs) {
    if (!a.is_square()) {
        throw DimensionMismatch("induced_on_quotient: matrix not square");
    }
    if (a.cols() != qs.ambient_dim()) {
        throw DimensionMismatch(
            "induced_on_quotient: ambient dimensions differ");
    }
    const Subspace& killed = qs.killed();
    for (std::size_t j = 0; j < killed.rank(); ++j) {
        if (!killed.contains(a * killed.basis().column(j))) {
            throw NotInvariant(
                "induced_on_quotient: killed subspace is not preserved");
        }
    }
    Matrix out(qs.dim(), qs.dim());
    for (std::size_t j = 0; j < qs.dim(); ++j) {
        Matrix e(qs.dim(), 1);
        e(j, 0) = 1;
        out.set_column(j, qs.project(a * qs.lift(e)));
    }
    return out;
}

inline bool commute_check(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DimensionMismatch("commute_check: need equal square matrices");
    }
    return a * b == b * a;
}

}  // namespace eqcohom
