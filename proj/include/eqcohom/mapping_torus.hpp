#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "eqcohom/errors.hpp"
#include "eqcohom/graded_rep.hpp"
#include "eqcohom/linalg.hpp"
#include "eqcohom/matrix.hpp"

namespace eqcohom {

// Fixed vectors of a: ker(a - I).
inline Subspace invariants(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("invariants: matrix not square");
    return kernel_basis(a - Matrix::identity(a.rows()));
}

// The cokernel of (a - I), i.e. V modulo the displacements of a.
inline QuotientSpace coinvariants(const Matrix& a) {
    if (!a.is_square()) {
        throw DimensionMismatch("coinvariants: matrix not square");
    }
    return QuotientSpace(image_basis(a - Matrix::identity(a.rows())));
}

// Where the coordinates of a new degree-q piece came from: the fixed part of
// the old degree q, followed by the coinvariants of the old degree q-1.
struct DegreeSplit {
    Subspace inv_part;          // inside the old degree-q piece
    QuotientSpace coinv_below;  // quotient of the old degree-(q-1) piece
};

struct TorusStepResult {
    GradedRep new_rep;                       // one operator fewer
    std::map<std::size_t, DegreeSplit> splits;
};

// One suspension step over the first operator A: the new degree-q piece is
// ker(A_q - I) ++ coker(A_{q-1} - I), and every remaining operator acts
// block-diagonally (restriction on the first block, induced map on the
// second).  Both blocks are well-defined because the remaining operators
// commute with A; if the input was not actually commuting, the block
// construction throws NotInvariant.
inline TorusStepResult torus_step(const GradedRep& rep) {
    auto [first, rest] = drop_first_operator(rep);

    std::set<std::size_t> degrees;
    for (const auto& [q, piece] : rep.pieces) {
        degrees.insert(q);
        degrees.insert(q + 1);
    }

    TorusStepResult out;
    out.new_rep.n_ops = rest.n_ops;
    out.new_rep.connected = rep.connected;

    for (std::size_t q : degrees) {
        const Matrix a_here =
            first.count(q) ? first.at(q) : Matrix(0, 0);
        const Matrix a_below =
            (q > 0 && first.count(q - 1)) ? first.at(q - 1) : Matrix(0, 0);
        DegreeSplit split{invariants(a_here), coinvariants(a_below)};

        const std::size_t new_dim =
            split.inv_part.rank() + split.coinv_below.dim();
        if (new_dim > 0) {
            DegreePiece piece;
            piece.dim = new_dim;
            for (std::size_t i = 0; i < rest.n_ops; ++i) {
                const Matrix b_here = rest.op(q, i);
                const Matrix b_below = q > 0 ? rest.op(q - 1, i) : Matrix(0, 0);
                piece.operators.push_back(block_diagonal(
                    restrict_to_subspace(b_here, split.inv_part),
                    induced_on_quotient(b_below, split.coinv_below)));
            }
            out.new_rep.pieces.emplace(q, std::move(piece));
        }
        out.splits.emplace(q, std::move(split));
    }
    return out;
}

struct RecursionResult {
    std::vector<TorusStepResult> steps;       // one per operator consumed
    GradedRep final_rep;                      // n_ops = 0
    std::map<std::size_t, std::size_t> betti; // absent degrees are zero
};

// Apply torus_step once per operator; the dimensions of the final stage are
// the Betti numbers of the total construction.
inline RecursionResult recurse(const GradedRep& rep) {
    RecursionResult out;
    out.final_rep = rep;
    for (std::size_t step = 0; step < rep.n_ops; ++step) {
        TorusStepResult result = torus_step(out.final_rep);
        out.final_rep = result.new_rep;
        out.steps.push_back(std::move(result));
    }
    for (const auto& [q, piece] : out.final_rep.pieces) {
        out.betti.emplace(q, piece.dim);
    }
    return out;
}

}  // namespace eqcohom
