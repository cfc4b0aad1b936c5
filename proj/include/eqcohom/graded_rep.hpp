#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqcohom/errors.hpp"
#include "eqcohom/linalg.hpp"
#include "eqcohom/matrix.hpp"

namespace eqcohom {

// One graded piece: a vector space of the stated dimension carrying one
// square matrix per group generator.
struct DegreePiece {
    std::size_t dim = 0;
    std::vector<Matrix> operators;

    bool operator==(const DegreePiece&) const = default;
};

// A graded vector space with n_ops commuting invertible operators per piece.
// Degrees are stored sparsely: an absent degree is a zero-dimensional piece.
// `connected` is the caller's claim that degree 0 is one-dimensional with
// trivial action; validate() checks the claim only when it is made.
struct GradedRep {
    std::size_t n_ops = 0;
    std::map<std::size_t, DegreePiece> pieces;
    bool connected = false;

    std::size_t dim(std::size_t degree) const {
        auto it = pieces.find(degree);
        return it == pieces.end() ? 0 : it->second.dim;
    }

    std::size_t max_degree() const {
        return pieces.empty() ? 0 : pieces.rbegin()->first;
    }

    // Operator i on the given degree; absent degrees get the 0x0 identity.
    Matrix op(std::size_t degree, std::size_t i) const {
        auto it = pieces.find(degree);
        if (it == pieces.end()) return Matrix(0, 0);
        return it->second.operators.at(i);
    }

    bool operator==(const GradedRep&) const = default;
};

// Smallest k in [1, bound] with a^k = I, if any.
inline std::optional<std::size_t> matrix_order_at_most(const Matrix& a,
                                                       std::size_t bound) {
    if (!a.is_square()) return std::nullopt;
    const Matrix id = Matrix::identity(a.rows());
    Matrix power = a;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (power == id) return k;
        power = power * a;
    }
    return std::nullopt;
}

// One (p, q) summand of a total degree k = p + q: p counts group directions,
// q is the coefficient degree, dim the summand's contribution.
struct BettiSummand {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t dim = 0;

    bool operator==(const BettiSummand&) const = default;
};

struct BettiBreakdown {
    std::map<std::size_t, std::vector<BettiSummand>> summands;
    std::map<std::size_t, std::size_t> totals;
};

enum class ViolationKind {
    wrong_operator_count,
    wrong_operator_shape,
    not_invertible,
    non_commuting,
    connected_claim,
};

struct Violation {
    ViolationKind kind;
    std::size_t degree = 0;
    std::size_t op_a = 0;
    std::size_t op_b = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

// Structural checks: operator count and shape per piece, invertibility
// (full rank), pairwise commutation, and the connected claim if made.
// Operators of infinite or large order only produce warnings: the engines
// stay runnable on such input, but the block-splitting they rely on is
// guaranteed only for finite-order (semisimple) actions, and order is
// checked up to max_order.
inline ValidationReport validate(const GradedRep& rep,
                                 std::size_t max_order = 24) {
    ValidationReport report;
    auto violation = [&report](ViolationKind kind, std::size_t degree,
                               std::size_t a, std::size_t b,
                               std::string message) {
        report.violations.push_back(
            Violation{kind, degree, a, b, std::move(message)});
    };

    for (const auto& [q, piece] : rep.pieces) {
        const std::string at = "degree " + std::to_string(q);
        if (piece.operators.size() != rep.n_ops) {
            violation(ViolationKind::wrong_operator_count, q, 0, 0,
                      at + ": expected " + std::to_string(rep.n_ops) +
                          " operators, found " +
                          std::to_string(piece.operators.size()));
            continue;
        }
        bool shapes_ok = true;
        for (std::size_t i = 0; i < piece.operators.size(); ++i) {
            const Matrix& op = piece.operators[i];
            if (op.rows() != piece.dim || op.cols() != piece.dim) {
                violation(ViolationKind::wrong_operator_shape, q, i, i,
                          at + ": operator " + std::to_string(i) + " is " +
                              std::to_string(op.rows()) + "x" +
                              std::to_string(op.cols()) + ", piece dim is " +
                              std::to_string(piece.dim));
                shapes_ok = false;
            }
        }
        if (!shapes_ok) continue;

        for (std::size_t i = 0; i < piece.operators.size(); ++i) {
            if (rref(piece.operators[i]).rank != piece.dim) {
                violation(ViolationKind::not_invertible, q, i, i,
                          at + ": operator " + std::to_string(i) +
                              " is singular");
            }
        }
        for (std::size_t i = 0; i < piece.operators.size(); ++i) {
            for (std::size_t j = i + 1; j < piece.operators.size(); ++j) {
                if (!commute_check(piece.operators[i], piece.operators[j])) {
                    violation(ViolationKind::non_commuting, q, i, j,
                              at + ": operators " + std::to_string(i) +
                                  " and " + std::to_string(j) +
                                  " do not commute");
                }
            }
        }
        for (std::size_t i = 0; i < piece.operators.size(); ++i) {
            if (piece.dim == 0) continue;
            if (!matrix_order_at_most(piece.operators[i], max_order)) {
                report.warnings.push_back(
                    at + ": operator " + std::to_string(i) +
                    " has no order up to " + std::to_string(max_order) +
                    "; splitting guarantees assume finite order");
            }
        }
    }

    if (rep.connected) {
        auto it = rep.pieces.find(0);
        const bool dim_one = it != rep.pieces.end() && it->second.dim == 1;
        bool trivial_action = dim_one;
        if (dim_one) {
            for (const Matrix& op : it->second.operators) {
                if (op != Matrix::identity(1)) trivial_action = false;
            }
        }
        if (!dim_one || !trivial_action) {
            violation(ViolationKind::connected_claim, 0, 0, 0,
                      "connected flag set, but degree 0 is not "
                      "one-dimensional with trivial action");
        }
    }

    return report;
}

inline GradedRep trivial_rep(std::size_t n_ops,
                             const std::map<std::size_t, std::size_t>& dims,
                             bool connected = false) {
    GradedRep rep;
    rep.n_ops = n_ops;
    rep.connected = connected;
    for (const auto& [q, d] : dims) {
        if (d == 0) continue;
        DegreePiece piece;
        piece.dim = d;
        piece.operators.assign(n_ops, Matrix::identity(d));
        rep.pieces.emplace(q, std::move(piece));
    }
    return rep;
}

// Split off the first operator of every piece; `rest` keeps the remaining
// n_ops - 1 in order.  This is the bookkeeping step of the recursion.
inline std::pair<std::map<std::size_t, Matrix>, GradedRep> drop_first_operator(
    const GradedRep& rep) {
    if (rep.n_ops == 0) {
        throw EmptyOperatorList("drop_first_operator: no operators left");
    }
    std::map<std::size_t, Matrix> first;
    GradedRep rest;
    rest.n_ops = rep.n_ops - 1;
    rest.connected = rep.connected;
    for (const auto& [q, piece] : rep.pieces) {
        first.emplace(q, piece.operators.at(0));
        DegreePiece remaining;
        remaining.dim = piece.dim;
        remaining.operators.assign(piece.operators.begin() + 1,
                                   piece.operators.end());
        rest.pieces.emplace(q, std::move(remaining));
    }
    return {std::move(first), std::move(rest)};
}

}  // namespace eqcohom
