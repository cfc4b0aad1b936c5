#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eqcohom/errors.hpp"
#include "eqcohom/graded_rep.hpp"
#include "eqcohom/koszul.hpp"
#include "eqcohom/mapping_torus.hpp"
#include "eqcohom/moebius.hpp"
#include "eqcohom/rational.hpp"

namespace eqcohom {

// Text reports.  Every renderer is a pure function of its inputs and
// iterates ordered containers only, so identical inputs give byte-identical
// output.

namespace detail {

inline std::size_t value_or_zero(const std::map<std::size_t, std::size_t>& m,
                                 std::size_t key) {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

inline std::size_t max_key(const std::map<std::size_t, std::size_t>& m,
                           std::size_t fallback = 0) {
    return m.empty() ? fallback : m.rbegin()->first;
}

// "0:1 1:3 2:5", or "(empty)" for a rep with no pieces.
inline std::string dims_line(const std::map<std::size_t, std::size_t>& dims) {
    if (dims.empty()) return "(empty)";
    std::ostringstream out;
    bool first = true;
    for (const auto& [degree, dim] : dims) {
        if (!first) out << ' ';
        first = false;
        out << degree << ':' << dim;
    }
    return out.str();
}

inline std::map<std::size_t, std::size_t> piece_dims(const GradedRep& rep) {
    std::map<std::size_t, std::size_t> dims;
    for (const auto& [degree, piece] : rep.pieces) dims[degree] = piece.dim;
    return dims;
}

// "[2+0+3]" — summand dimensions in ascending p.
inline std::string breakdown_brackets(const std::vector<BettiSummand>& parts) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out << '+';
        out << parts[i].dim;
    }
    out << ']';
    return out.str();
}

inline std::string breakdown_at(const BettiBreakdown& breakdown,
                                std::size_t k) {
    auto it = breakdown.summands.find(k);
    if (it == breakdown.summands.end()) return "[]";
    return breakdown_brackets(it->second);
}

}  // namespace detail

inline bool betti_totals_agree(const std::map<std::size_t, std::size_t>& a,
                               const std::map<std::size_t, std::size_t>& b) {
    std::set<std::size_t> keys;
    for (const auto& [k, v] : a) keys.insert(k);
    for (const auto& [k, v] : b) keys.insert(k);
    for (std::size_t k : keys) {
        if (detail::value_or_zero(a, k) != detail::value_or_zero(b, k)) {
            return false;
        }
    }
    return true;
}

// source: how the input was named on the command line (builtin or path).
inline std::string render_validation_report(const std::string& source,
                                            const GradedRep& rep,
                                            const ValidationReport& report) {
    std::ostringstream out;
    out << "document: " << source << '\n';
    out << "operators: " << rep.n_ops << '\n';
    out << "degrees: " << detail::dims_line(detail::piece_dims(rep)) << '\n';
    out << "connected: " << (rep.connected ? "yes" : "no") << '\n';
    if (report.violations.empty()) {
        out << "violations: none\n";
    } else {
        out << "violations: " << report.violations.size() << '\n';
        for (const Violation& v : report.violations) {
            out << "- " << v.message << '\n';
        }
    }
    if (report.warnings.empty()) {
        out << "warnings: none\n";
    } else {
        out << "warnings: " << report.warnings.size() << '\n';
        for (const std::string& w : report.warnings) out << "- " << w << '\n';
    }
    return out.str();
}

inline std::string render_recurse_report(
    const GradedRep& input, const RecursionResult& result, bool show_stages,
    std::optional<std::size_t> only_degree = std::nullopt) {
    std::ostringstream out;
    out << "engine: recurse\n";
    out << "operators: " << result.steps.size() << '\n';
    if (show_stages) {
        out << "stage 0 dims: " << detail::dims_line(detail::piece_dims(input))
            << '\n';
        for (std::size_t s = 0; s < result.steps.size(); ++s) {
            out << "stage " << (s + 1) << " dims: "
                << detail::dims_line(
                       detail::piece_dims(result.steps[s].new_rep))
                << '\n';
        }
    }
    if (only_degree) {
        out << "betti " << *only_degree << ": "
            << detail::value_or_zero(result.betti, *only_degree) << '\n';
        return out.str();
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k <= detail::max_key(result.betti); ++k) {
        const std::size_t v = detail::value_or_zero(result.betti, k);
        total += v;
        out << "betti " << k << ": " << v << '\n';
    }
    out << "total rank: " << total << '\n';
    return out.str();
}

inline std::string render_koszul_report(
    const BettiBreakdown& breakdown,
    std::optional<std::size_t> only_degree = std::nullopt) {
    std::ostringstream out;
    out << "engine: koszul\n";
    if (only_degree) {
        out << "k=" << *only_degree << ": total "
            << detail::value_or_zero(breakdown.totals, *only_degree) << ' '
            << detail::breakdown_at(breakdown, *only_degree) << '\n';
        return out.str();
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k <= detail::max_key(breakdown.totals); ++k) {
        const std::size_t v = detail::value_or_zero(breakdown.totals, k);
        total += v;
        out << "k=" << k << ": total " << v << ' '
            << detail::breakdown_at(breakdown, k) << '\n';
    }
    out << "total rank: " << total << '\n';
    return out.str();
}

// One line per degree comparing both engines, then a verdict.  The verdict
// covers every degree even when the printed lines are restricted.
inline std::string render_crosscheck_report(
    const RecursionResult& recursion, const BettiBreakdown& breakdown,
    std::optional<std::size_t> only_degree = std::nullopt) {
    std::ostringstream out;
    out << "engine: crosscheck\n";
    const std::size_t top =
        std::max(detail::max_key(recursion.betti),
                 detail::max_key(breakdown.totals));
    for (std::size_t k = 0; k <= top; ++k) {
        if (only_degree && k != *only_degree) continue;
        const std::size_t lhs = detail::value_or_zero(recursion.betti, k);
        const std::size_t rhs = detail::value_or_zero(breakdown.totals, k);
        out << "k=" << k << ": recurse=" << lhs << " koszul=" << rhs << ' '
            << detail::breakdown_at(breakdown, k) << ' '
            << (lhs == rhs ? "agree" : "MISMATCH") << '\n';
    }
    const bool agree = betti_totals_agree(recursion.betti, breakdown.totals);
    out << "verdict: " << (agree ? "agree" : "mismatch") << '\n';
    return out.str();
}

// Fixed points and derivatives of one hyperbolic transformation, with the
// defining identities re-verified on the exact values.  A failed identity is
// a broken internal invariant, not bad input, hence InternalError.
inline std::string render_fuchsian_report(const MoebiusMatrix& m) {
    const FixedPoints fps = fixed_points(m);
    const Derivatives ds = derivative_at_fixed_points(m);

    if (apply_moebius(m, fps.plus) != fps.plus) {
        throw InternalError("fixed point + moved under the map");
    }
    if (!fps.second_at_infinity && apply_moebius(m, fps.minus) != fps.minus) {
        throw InternalError("fixed point - moved under the map");
    }
    const QuadraticSurd product = ds.at_plus * ds.at_minus;
    if (!product.equals_rational(Rational(1))) {
        throw InternalError("derivative product is not 1");
    }
    const bool touches_one =
        ds.at_plus.equals_rational(Rational(1)) ||
        ds.at_plus.equals_rational(Rational(-1)) ||
        ds.at_minus.equals_rational(Rational(1)) ||
        ds.at_minus.equals_rational(Rational(-1));
    if (touches_one) {
        throw InternalError("derivative hit +-1 on a hyperbolic input");
    }

    std::ostringstream out;
    out << "matrix: a=" << to_string(m.a) << " b=" << to_string(m.b)
        << " c=" << to_string(m.c) << " d=" << to_string(m.d) << '\n';
    out << "trace: " << to_string(m.trace()) << '\n';
    out << "discriminant: " << to_string(fps.plus.disc) << '\n';
    out << "fixed point +: " << to_string(fps.plus) << '\n';
    out << "fixed point -: "
        << (fps.second_at_infinity ? std::string("infinity")
                                   : to_string(fps.minus))
        << '\n';
    out << "fixed points verified by substitution: yes\n";
    out << "derivative at +: " << to_string(ds.at_plus) << '\n';
    out << "derivative at -: " << to_string(ds.at_minus) << '\n';
    out << "derivative product: " << to_string(product) << '\n';
    out << "derivative equal to 1 or -1: no\n";
    return out.str();
}

}  // namespace eqcohom
