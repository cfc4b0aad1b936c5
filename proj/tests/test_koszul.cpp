#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "eqcohom/flag.hpp"
#include "eqcohom/koszul.hpp"
#include "eqcohom/mapping_torus.hpp"
#include "test_support.hpp"

using eqcohom::BettiSummand;
using eqcohom::DegreeOutOfRange;
using eqcohom::GradedRep;
using eqcohom::KoszulComplex;
using eqcohom::Matrix;
using eqcohom::NonCommuting;
using eqcohom::Subspace;
using eqcohom::borel_total;
using eqcohom::build_koszul;
using eqcohom::group_cohomology;
using eqcohom::subsets_of_size;
using testsupport::col;
using testsupport::span;

namespace {

// Independent of the cochain machinery: simultaneous fixed vectors are the
// kernel of the stacked displacements.
Subspace stacked_invariants(std::size_t dim, const std::vector<Matrix>& ops) {
    Matrix stacked(0, dim);
    for (const Matrix& op : ops) {
        stacked = eqcohom::hconcat(stacked.transpose(),
                                   (op - Matrix::identity(dim)).transpose())
                      .transpose();
    }
    return eqcohom::kernel_basis(stacked);
}

std::size_t joint_coinvariant_dim(std::size_t dim,
                                  const std::vector<Matrix>& ops) {
    Matrix side_by_side(dim, 0);
    for (const Matrix& op : ops) {
        side_by_side =
            eqcohom::hconcat(side_by_side, op - Matrix::identity(dim));
    }
    return dim - eqcohom::image_basis(side_by_side).rank();
}

std::size_t betti_at(const std::map<std::size_t, std::size_t>& betti,
                     std::size_t k) {
    auto it = betti.find(k);
    return it == betti.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("subset enumeration is lexicographic and complete") {
    CHECK(subsets_of_size(3, 0) ==
          std::vector<std::vector<std::size_t>>{{}});
    CHECK(subsets_of_size(3, 2) ==
          std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(subsets_of_size(4, 2).size() == 6);
    CHECK(subsets_of_size(2, 3).empty());
}

TEST_CASE("one operator gives the displacement as the only differential") {
    const Matrix swap{{0, 1}, {1, 0}};
    const KoszulComplex kc = build_koszul(2, {swap});
    REQUIRE(kc.differentials.size() == 1);
    CHECK(kc.differentials[0] == swap - Matrix::identity(2));

    const auto h0 = group_cohomology(kc, 0);
    const auto h1 = group_cohomology(kc, 1);
    CHECK(h0.dim == 1);
    CHECK(h0.basis == eqcohom::invariants(swap));
    CHECK(h1.dim == eqcohom::coinvariants(swap).dim());
    CHECK_THROWS_AS(group_cohomology(kc, 2), DegreeOutOfRange);
}

TEST_CASE("trivial coefficients count subsets in every degree") {
    const KoszulComplex kc = build_koszul(1, {Matrix::identity(1),
                                              Matrix::identity(1),
                                              Matrix::identity(1)});
    for (const Matrix& d : kc.differentials) CHECK(d.is_zero());
    CHECK(group_cohomology(kc, 0).dim == 1);
    CHECK(group_cohomology(kc, 1).dim == 3);
    CHECK(group_cohomology(kc, 2).dim == 3);
    CHECK(group_cohomology(kc, 3).dim == 1);
}

TEST_CASE("two-operator complex has the expected differentials") {
    const Matrix swap{{0, 1}, {1, 0}};
    const KoszulComplex kc = build_koszul(2, {swap, Matrix::identity(2)});

    CHECK(kc.differentials[0] == Matrix{{-1, 1}, {1, -1}, {0, 0}, {0, 0}});
    // Inserting index 0 past index 1 keeps the sign; inserting index 1 after
    // index 0 flips it, but the second displacement is zero here anyway.
    CHECK(kc.differentials[1] == Matrix{{0, 0, -1, 1}, {0, 0, 1, -1}});

    CHECK(group_cohomology(kc, 0).dim == 1);
    CHECK(group_cohomology(kc, 1).dim == 2);
    CHECK(group_cohomology(kc, 2).dim == 1);
}

TEST_CASE("non-commuting operators are rejected before assembly") {
    CHECK_THROWS_AS(
        build_koszul(2, {Matrix{{0, 1}, {1, 0}}, Matrix{{1, 1}, {0, 1}}}),
        NonCommuting);
}

TEST_CASE("simultaneous fixed vectors of the 8-line degree-2 piece") {
    const GradedRep rep = eqcohom::f8_z3();
    const auto& piece = rep.pieces.at(2);
    const KoszulComplex kc = build_koszul(piece.dim, piece.operators);

    const auto h0 = group_cohomology(kc, 0);
    CHECK(h0.dim == 2);
    // The fixed space is spanned by the sum of the two swapped pairs and by
    // the orbit sum of the 3-cycle (written through the hyperplane relation).
    CHECK(h0.basis == span({col({1, 1, 1, 1, 0, 0, 0}),
                            col({-1, -1, -1, -1, 0, 0, -1})}));
    CHECK(h0.basis == stacked_invariants(piece.dim, piece.operators));

    // Higher degrees of the same piece, and the trivial piece's top degree.
    CHECK(group_cohomology(kc, 1).dim == 6);
    CHECK(group_cohomology(kc, 2).dim == 6);
    CHECK(group_cohomology(kc, 3).dim == 2);

    const auto& unit = rep.pieces.at(0);
    CHECK(group_cohomology(build_koszul(unit.dim, unit.operators), 2).dim == 3);
}

TEST_CASE("total assembly for the 8-line example") {
    const eqcohom::BettiBreakdown breakdown = borel_total(eqcohom::f8_z3());
    CHECK(breakdown.totals ==
          std::map<std::size_t, std::size_t>{
              {0, 1}, {1, 3}, {2, 5}, {3, 7}, {4, 6}, {5, 2}});

    CHECK(breakdown.summands.at(2) ==
          std::vector<BettiSummand>{{0, 2, 2}, {1, 1, 0}, {2, 0, 3}});
    CHECK(breakdown.summands.at(5) == std::vector<BettiSummand>{{3, 2, 2}});
    CHECK(breakdown.summands.at(0) == std::vector<BettiSummand>{{0, 0, 1}});
}

TEST_CASE("edge degrees match direct invariant and coinvariant computations") {
    std::mt19937_64 rng(11223);
    for (int trial = 0; trial < 25; ++trial) {
        const auto dim =
            static_cast<std::size_t>(testsupport::rand_in(rng, 1, 7));
        const auto n =
            static_cast<std::size_t>(testsupport::rand_in(rng, 1, 3));
        const auto ops = testsupport::random_commuting_perm_ops(rng, dim, n);
        const KoszulComplex kc = build_koszul(dim, ops);

        CHECK(group_cohomology(kc, 0).basis == stacked_invariants(dim, ops));
        CHECK(group_cohomology(kc, n).dim == joint_coinvariant_dim(dim, ops));

        long long alternating = 0;
        for (std::size_t p = 0; p <= n; ++p) {
            alternating += (p % 2 == 0 ? 1 : -1) *
                           static_cast<long long>(group_cohomology(kc, p).dim);
        }
        CHECK(alternating == 0);
    }
}

TEST_CASE("no operators and no dimensions are both fine") {
    const KoszulComplex none = build_koszul(3, {});
    CHECK(none.differentials.empty());
    CHECK(group_cohomology(none, 0).dim == 3);

    const KoszulComplex empty = build_koszul(0, {Matrix(0, 0), Matrix(0, 0)});
    CHECK(group_cohomology(empty, 0).dim == 0);
    CHECK(group_cohomology(empty, 1).dim == 0);
    CHECK(group_cohomology(empty, 2).dim == 0);

    const eqcohom::BettiBreakdown still = borel_total(
        eqcohom::trivial_rep(0, {{0, 2}, {2, 1}}));
    CHECK(still.totals ==
          std::map<std::size_t, std::size_t>{{0, 2}, {1, 0}, {2, 1}});
}

TEST_CASE("both engines produce the same totals on random inputs") {
    std::mt19937_64 rng(456789);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n =
            static_cast<std::size_t>(testsupport::rand_in(rng, 1, 3));
        const GradedRep rep = testsupport::random_perm_rep(rng, n);
        REQUIRE(eqcohom::validate(rep).ok());

        const auto koszul_totals = borel_total(rep).totals;
        const auto recursion_betti = eqcohom::recurse(rep).betti;

        for (const auto& [k, total] : koszul_totals) {
            CHECK(total == betti_at(recursion_betti, k));
        }
        for (const auto& [k, b] : recursion_betti) {
            CHECK(b == (koszul_totals.count(k) ? koszul_totals.at(k) : 0));
        }
    }
}
