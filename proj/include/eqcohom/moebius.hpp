#pragma once

#include <string>

#include "eqcohom/errors.hpp"
#include "eqcohom/rational.hpp"

namespace eqcohom {

// A number r + s*sqrt(disc), disc >= 0 rational.  No normalization is
// attempted when disc happens to be a perfect square, so equality and
// zero-tests compare VALUES, not component triples.  Arithmetic is closed
// within one fixed radicand.
struct QuadraticSurd {
    Rational r{};
    Rational s{};
    Rational disc{};

    // Value-exact: the number equals x iff either the root coefficient
    // vanishes, or the root itself is forced rational by the equation.
    bool equals_rational(const Rational& x) const {
        if (s == 0) return r == x;
        const Rational ratio = (x - r) / s;
        return ratio >= 0 && ratio * ratio == disc;
    }

    bool is_zero() const { return equals_rational(Rational(0)); }

    QuadraticSurd operator+(const QuadraticSurd& o) const {
        require_same_disc(o);
        return {r + o.r, s + o.s, disc};
    }

    QuadraticSurd operator-(const QuadraticSurd& o) const {
        require_same_disc(o);
        return {r - o.r, s - o.s, disc};
    }

    QuadraticSurd operator*(const QuadraticSurd& o) const {
        require_same_disc(o);
        return {r * o.r + s * o.s * disc, r * o.s + s * o.r, disc};
    }

    QuadraticSurd inverse() const {
        if (is_zero()) throw Error("inverse of a zero surd");
        const Rational denom = r * r - s * s * disc;
        if (denom != 0) return {r / denom, -s / denom, disc};
        // The conjugate vanishes, which forces disc = (r/s)^2; the value is
        // the rational r + s*|r/s| and is inverted directly.
        const Rational root = boost::multiprecision::abs(r / s);
        return {1 / (r + s * root), Rational(0), disc};
    }

    // Value equality within the same radicand.
    bool operator==(const QuadraticSurd& o) const {
        require_same_disc(o);
        if (s == o.s) return r == o.r;
        const Rational ratio = (r - o.r) / (o.s - s);
        return ratio >= 0 && ratio * ratio == disc;
    }
    bool operator!=(const QuadraticSurd& o) const { return !(*this == o); }

  private:
    void require_same_disc(const QuadraticSurd& o) const {
        if (disc != o.disc) {
            throw Error("surd arithmetic across different radicands");
        }
    }
};

inline std::string to_string(const QuadraticSurd& x) {
    if (x.s == 0) return to_string(x.r);
    const std::string root = "sqrt(" + to_string(x.disc) + ")";
    if (x.s > 0) return to_string(x.r) + " + " + to_string(x.s) + "*" + root;
    return to_string(x.r) + " - " + to_string(-x.s) + "*" + root;
}

// Coefficients of z -> (az + b)/(cz + d) with determinant exactly 1.
struct MoebiusMatrix {
    Rational a, b, c, d;

    MoebiusMatrix(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
          d(std::move(d_)) {
        if (a * d - b * c != 1) {
            throw NotUnimodular("moebius matrix must have determinant 1");
        }
    }

    Rational trace() const { return a + d; }
};

inline bool is_hyperbolic(const MoebiusMatrix& m) {
    const Rational t = m.trace();
    return t * t > 4;
}

// Both fixed points on the real line.  When c = 0 the map is affine, one
// fixed point escapes to infinity and the finite one is rational.
struct FixedPoints {
    bool second_at_infinity = false;
    QuadraticSurd plus;   // (a - d + sqrt(disc)) / 2c, or the finite point
    QuadraticSurd minus;  // the conjugate; unused when second_at_infinity
};

inline FixedPoints fixed_points(const MoebiusMatrix& m) {
    if (!is_hyperbolic(m)) {
        throw NotHyperbolic("fixed points require |trace| > 2");
    }
    const Rational t = m.trace();
    const Rational delta = t * t - 4;
    FixedPoints out;
    if (m.c == 0) {
        // Determinant 1 with trace off +-2 rules out a = d.
        out.second_at_infinity = true;
        out.plus = {-m.b / (m.a - m.d), Rational(0), delta};
        out.minus = {Rational(0), Rational(0), delta};
        return out;
    }
    const Rational center = (m.a - m.d) / (2 * m.c);
    const Rational half = 1 / (2 * m.c);
    out.plus = {center, half, delta};
    out.minus = {center, -half, delta};
    return out;
}

// Exact evaluation of the transformation at a surd point.
inline QuadraticSurd apply_moebius(const MoebiusMatrix& m,
                                   const QuadraticSurd& z) {
    const QuadraticSurd num{m.a * z.r + m.b, m.a * z.s, z.disc};
    const QuadraticSurd den{m.c * z.r + m.d, m.c * z.s, z.disc};
    return num * den.inverse();
}

struct Derivatives {
    QuadraticSurd at_plus;
    QuadraticSurd at_minus;
};

// (c*z + d)^-2 at each fixed point.  In the affine case the finite point
// contributes d^-2 and the point at infinity the reciprocal d^2, keeping the
// product-one invariant.
inline Derivatives derivative_at_fixed_points(const MoebiusMatrix& m) {
    const FixedPoints fps = fixed_points(m);
    if (fps.second_at_infinity) {
        const Rational dd = m.d * m.d;
        return {QuadraticSurd{1 / dd, Rational(0), fps.plus.disc},
                QuadraticSurd{dd, Rational(0), fps.plus.disc}};
    }
    auto slope = [&m](const QuadraticSurd& z) {
        const QuadraticSurd lin{m.c * z.r + m.d, m.c * z.s, z.disc};
        const QuadraticSurd inv = lin.inverse();
        return inv * inv;
    };
    return {slope(fps.plus), slope(fps.minus)};
}

}  // namespace eqcohom
