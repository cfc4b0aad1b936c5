#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "eqcohom/errors.hpp"
#include "eqcohom/graded_rep.hpp"
#include "eqcohom/matrix.hpp"

namespace eqcohom {

class Permutation {
  public:
    // images[i] is the 0-based image of point i; must be a bijection.
    explicit Permutation(std::vector<std::size_t> images)
        : images_(std::move(images)) {
        std::vector<bool> hit(images_.size(), false);
        for (std::size_t v : images_) {
            if (v >= images_.size() || hit[v]) {
                throw Error("permutation images are not a bijection");
            }
            hit[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> images(n);
        std::iota(images.begin(), images.end(), std::size_t{0});
        return Permutation(std::move(images));
    }

    // Cycles in the conventional 1-based notation, e.g. {{1,2},{3,4}}.
    // Labels must be distinct across all cycles and lie in 1..n.
    static Permutation from_cycles(
        std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
        std::vector<std::size_t> images(n);
        std::iota(images.begin(), images.end(), std::size_t{0});
        std::vector<bool> used(n, false);
        for (const auto& cycle : cycles) {
            for (std::size_t label : cycle) {
                if (label < 1 || label > n) {
                    throw Error("cycle label out of range 1..n");
                }
                if (used[label - 1]) {
                    throw Error("cycle label appears twice");
                }
                used[label - 1] = true;
            }
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
            }
        }
        return Permutation(std::move(images));
    }

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }

    // (this . other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const {
        if (size() != other.size()) {
            throw DimensionMismatch("composing permutations of unequal size");
        }
        std::vector<std::size_t> images(size());
        for (std::size_t i = 0; i < size(); ++i) images[i] = images_[other(i)];
        return Permutation(std::move(images));
    }

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<std::size_t> images_;
};

// Parity via cycle count: (-1)^(n - number of cycles, fixed points included).
inline int sign(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = p(j)) seen[j] = true;
    }
    return (p.size() - cycles) % 2 == 0 ? +1 : -1;
}

inline bool orientation_preserving(const Permutation& p) {
    return sign(p) == +1;
}

// The permutation action on n coordinates x_0..x_{n-1}, reduced modulo the
// hyperplane relation x_0 + ... + x_{n-1} = 0, written in the representative
// basis {x_0, ..., x_{n-2}} (so x_{n-1} = -(x_0 + ... + x_{n-2})).  This is
// the degree-2 action for the n-line flag space.
inline Matrix h2_action_matrix(std::size_t n, const Permutation& p) {
    if (n < 2) throw DimensionMismatch("h2_action_matrix needs n >= 2");
    if (p.size() != n) {
        throw DimensionMismatch("h2_action_matrix: permutation size != n");
    }
    Matrix m(n - 1, n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const std::size_t image = p(j);
        if (image + 1 < n) {
            m(image, j) = 1;
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i) m(i, j) = -1;
        }
    }
    return m;
}

struct FlagRepSpec {
    std::size_t n = 0;                     // number of lines
    std::vector<Permutation> generators;   // must pairwise commute
    bool require_orientation = true;       // insist on even permutations
};

// Graded pieces of the n-line flag space in degrees 0..2: degree 0 is the
// trivial line, degree 1 is absent (zero), degree 2 is the (n-1)-dimensional
// hyperplane quotient with the permutation action.
inline GradedRep build_flag_rep(const FlagRepSpec& spec) {
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (spec.generators[i].size() != spec.n) {
            throw DimensionMismatch("generator size differs from n");
        }
        for (std::size_t j = i + 1; j < spec.generators.size(); ++j) {
            const Permutation& a = spec.generators[i];
            const Permutation& b = spec.generators[j];
            if (!(a.compose(b) == b.compose(a))) {
                throw NonCommutingGenerators(
                    "generators " + std::to_string(i) + " and " +
                    std::to_string(j) + " do not commute");
            }
        }
    }
    if (spec.require_orientation) {
        for (std::size_t i = 0; i < spec.generators.size(); ++i) {
            if (!orientation_preserving(spec.generators[i])) {
                throw OddPermutation("generator " + std::to_string(i) +
                                     " is odd, so it reverses orientation");
            }
        }
    }

    GradedRep rep;
    rep.n_ops = spec.generators.size();
    rep.connected = true;

    DegreePiece top;
    top.dim = 1;
    top.operators.assign(rep.n_ops, Matrix::identity(1));
    rep.pieces.emplace(0, std::move(top));

    DegreePiece h2;
    h2.dim = spec.n - 1;
    for (const Permutation& g : spec.generators) {
        h2.operators.push_back(h2_action_matrix(spec.n, g));
    }
    rep.pieces.emplace(2, std::move(h2));
    return rep;
}

// The canonical built-in: three commuting even permutations of 8 lines.
inline GradedRep f8_z3() {
    FlagRepSpec spec;
    spec.n = 8;
    spec.generators = {
        Permutation::from_cycles(8, {{1, 2}, {3, 4}}),
        Permutation::from_cycles(8, {{1, 3}, {2, 4}}),
        Permutation::from_cycles(8, {{5, 8, 6}}),
    };
    return build_flag_rep(spec);
}

}  // namespace eqcohom
