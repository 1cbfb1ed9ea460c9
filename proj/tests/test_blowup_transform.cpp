#include "folia/blowup.hpp"
#include "folia/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace folia;
using folia::testing::field;
using folia::testing::P;

namespace {

// D sigma applied to V, computed from the chart images directly.
std::vector<MultiPoly> push_forward(const std::vector<MultiPoly>& images, const std::vector<MultiPoly>& v,
                                    std::size_t n) {
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly s(images[i].num_vars());
        for (std::size_t k = 0; k < n; ++k) s += images[i].derivative(k) * v[k];
        out.push_back(s);
    }
    return out;
}

bool pullback_identity_holds(const VectorField& f, const CenterLocal& c, std::size_t chart) {
    const BlowupResult bt = strict_transform(f, c, chart);
    const std::size_t m = f.num_vars();
    const auto images = chart_substitution(m, c.d, chart);
    const MultiPoly factor = MultiPoly::variable(m, chart).pow(bt.ell);
    std::vector<MultiPoly> v;
    for (const auto& p : bt.strict.components()) v.push_back(factor * p);
    const auto lhs = push_forward(images, v, f.n());
    for (std::size_t i = 0; i < f.n(); ++i)
        if (!(lhs[i] == f[i].substitute(images))) return false;
    return true;
}

}  // namespace

TEST_CASE("chart substitution shape") {
    const auto s = chart_substitution(4, 3, 1);
    CHECK(s[0] == P("z1*z2", 4));
    CHECK(s[1] == P("z2", 4));
    CHECK(s[2] == P("z2*z3", 4));
    CHECK(s[3] == P("z4", 4));
    CHECK_THROWS_AS(chart_substitution(4, 3, 3), ChartOutOfRange);
}

TEST_CASE("strict transform of a type I field by hand") {
    // X = (z1^2, z2^2 + z1 z2, z1); chart 1: z1 = u1, z2 = u1 u2.
    //   u1' = u1^2, u2' = (u1^2 u2^2 + u1^2 u2 - u2 u1^2)/u1 = u1 u2^2, u3' = u1.
    const BlowupResult bt = strict_transform(field({"z1^2", "z2^2 + z1*z2", "z1"}), {3, 2}, 0);
    CHECK(bt.ell == 1);
    CHECK(bt.case_tag == CaseTag::TypeI);
    CHECK(bt.strict[0] == P("z1", 3));
    CHECK(bt.strict[1] == P("z2^2", 3));
    CHECK(bt.strict[2] == P("1", 3));
    CHECK(bt.divisor_invariant);
}

TEST_CASE("dicritical field loses invariance of the divisor") {
    const VectorField f = field({"z1^2 + z1^3", "z1*z2 + z2^3", "z1^2 + z2^2"});
    const BlowupResult bt = strict_transform(f, {3, 2}, 0);
    CHECK(bt.case_tag == CaseTag::Dicritical);
    CHECK(bt.ell == 2);
    CHECK_FALSE(bt.divisor_invariant);
}

TEST_CASE("strict ell agrees with the classification in every chart") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = 3 + it % 2;
        const std::size_t d = 2 + (it / 2) % (n - 1 == 2 ? 1 : 2);
        const CenterLocal c{n, d};
        const VectorField f = normalize_linear(folia::testing::random_singular_field(rng, n, d, 3), c, it).field;
        const auto cls = classify_center(f, c);
        for (std::size_t j = 0; j < d; ++j) {
            const auto bt = strict_transform(f, c, j);
            CHECK(bt.ell == cls.ell);
            CHECK(pullback_identity_holds(f, c, j));
        }
    }
}

TEST_CASE("parameters ride along untouched") {
    std::vector<MultiPoly> comps{P("z1^2 + z4*z2^2", 4), P("z1*z2", 4), P("z1 + z4*z2", 4)};
    const VectorField f(comps, 2, 1);
    const BlowupResult bt = strict_transform(f, {3, 2}, 0);
    CHECK(bt.strict.num_params() == 1);
    CHECK(bt.strict[0] == P("z1 + z1*z2^2*z4", 4));
    CHECK(pullback_identity_holds(f, {3, 2}, 0));
}

TEST_CASE("recentering on a branch") {
    // Singular set contains the curve {u1 = 0, u2 = u3}.
    const VectorField g = field({"z1", "z1*z3 + z2^2 - 2*z2*z3 + z3^2", "z1 + z2 - z3"});
    const BranchData br{{0}, {{1, P("z3", 3)}}};
    const VectorField h = recenter_on_branch(g, br);
    // v2 = u2 - u3: v2' = u2' - u3'.
    CHECK(h[0] == P("z1", 3));
    CHECK(h[1] == P("z1*z3 + z2^2 - z1 - z2", 3));
    CHECK(h[2] == P("z1 + z2", 3));
    CHECK_THROWS_AS(recenter_on_branch(g, {{0}, {{1, P("z3 + 1", 3)}}}), BranchNotSingular);
    CHECK_THROWS_AS(recenter_on_branch(g, {{0}, {{1, P("z1", 3)}}}), UnsupportedBranch);
}

TEST_CASE("coordinate permutation") {
    const VectorField f = field({"z2", "z3", "z1"});
    const std::vector<std::size_t> perm{0, 2, 1};
    const VectorField g = permute_coordinates(f, perm);
    // new (w1, w2, w3) = (z1, z3, z2)
    CHECK(g[0] == P("z3", 3));
    CHECK(g[1] == P("z1", 3));
    CHECK(g[2] == P("z2", 3));
}

TEST_CASE("rejects fields not singular along the center") {
    CHECK_THROWS_AS(strict_transform(field({"1", "z1", "z2"}), {3, 2}, 0), NotSingularAlongCenter);
    CHECK_THROWS_AS(strict_transform(field({"z1", "z2", "z2"}), {3, 2}, 2), ChartOutOfRange);
}
