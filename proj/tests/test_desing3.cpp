#include "folia/blowup.hpp"
#include "folia/desing3.hpp"
#include "folia/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace folia;
using folia::testing::field;
using folia::testing::P;

namespace {

UniPoly U(std::vector<Rational> c) { return UniPoly(std::move(c)); }

const UniPoly kZ3 = UniPoly::x();

}  // namespace

TEST_CASE("linear data extraction") {
    const VectorField f = field({"z3*z1 + 2*z2 + z1^2", "z1 - z2*z3^2", "z1*z2 + 3*z2"});
    const CurveData3 cd = extract_curve_data(f);
    CHECK(cd.p[0][0] == kZ3);
    CHECK(cd.p[0][1] == U({2}));
    CHECK(cd.p[1][0] == U({1}));
    CHECK(cd.p[1][1] == U({0, 0, -1}));
    CHECK(cd.p[2][1] == U({3}));
    CHECK(cd.higher[0] == P("z1^2", 3));
    const EigenData e = eigen_data(cd);
    CHECK(e.trace == U({0, 1, -1}));
    CHECK(e.det == U({-2, 0, 0, -1}));
    CHECK(e.delta == e.trace * e.trace - Rational(4) * e.det);
    CHECK_THROWS_AS(extract_curve_data(field({"z1", "z2", "1"})), NotSingularAlongCenter);
}

TEST_CASE("case classification and ratios") {
    // diag(-z3, 2 z3): ratio -1/2
    CurveData3 cd = extract_curve_data(field({"-z1*z3", "2*z2*z3", "z1*z2"}));
    CaseReport r = case_classify3(eigen_data(cd));
    CHECK(r.tag == Case3::DistinctNonzero);
    REQUIRE(r.q_ratio);
    CHECK((*r.q_ratio == Rational(-1, 2) || *r.q_ratio == Rational(-2)));
    CHECK_FALSE(r.resonant);
    CHECK(elementary_ratio_test(eigen_data(cd)).elementary);
    // diag(z3, 3 z3): ratio 3 is resonant and not elementary
    cd = extract_curve_data(field({"z1*z3", "3*z2*z3", "z1*z2"}));
    r = case_classify3(eigen_data(cd));
    CHECK(r.resonant);
    CHECK_FALSE(elementary_ratio_test(eigen_data(cd)).elementary);
    // diag(1, z3): ratio varies
    cd = extract_curve_data(field({"z1", "z2*z3", "z1*z2"}));
    r = case_classify3(eigen_data(cd));
    CHECK_FALSE(r.c_ratio.has_value());
    CHECK(elementary_ratio_test(eigen_data(cd)).elementary);
    // one zero eigenvalue
    cd = extract_curve_data(field({"z1", "z1", "z1*z2"}));
    CHECK(case_classify3(eigen_data(cd)).tag == Case3::OneZero);
    // nilpotent
    cd = extract_curve_data(field({"0", "z1*z3", "z1"}));
    CHECK(case_classify3(eigen_data(cd)).tag == Case3::Nilpotent);
    CHECK_FALSE(elementary_ratio_test(eigen_data(cd)).elementary);
    CHECK(std::string(to_string(Case3::OneZero)) == "CaseII");
}

TEST_CASE("eigenvalue ratio of a Jordan block with equal eigenvalues") {
    // [[1,1],[0,1]]: trace^2/det = 4, ratio 1, in Q+.
    const CurveData3 cd = extract_curve_data(field({"z1 + z2", "z2", "z1*z2"}));
    const CaseReport r = case_classify3(eigen_data(cd));
    REQUIRE(r.q_ratio);
    CHECK(*r.q_ratio == 1);
    CHECK(r.resonant);
}

TEST_CASE("branches from linear data agree with branches of the strict transform") {
    // One zero eigenvalue: matrix [[1,1],[z3,z3]].
    const VectorField f = field({"z1 + z2", "z3*z1 + z3*z2 + z1*z2", "z2^2"});
    const CurveData3 cd = extract_curve_data(f);
    const auto lin = branch_curves3(cd, eigen_data(cd));
    const BlowupResult bt = strict_transform(f, {3, 2}, 0);
    const auto strict = branches_of_strict(bt);
    std::vector<UniPoly> a, b;
    for (const auto& br : lin)
        if (br.chart == 1) a.push_back(br.psi);
    for (const auto& br : strict) b.push_back(br.psi);
    CHECK(a.size() == b.size());
    for (const auto& psi : a) CHECK(std::find(b.begin(), b.end(), psi) != b.end());
}

TEST_CASE("post blow-up eigenvalues match the recentred strict transform") {
    const VectorField f = field({"z1 + z2", "z3*z1 + z3*z2 + z1*z2", "z2^2"});
    const CurveData3 cd = extract_curve_data(f);
    const BlowupResult bt = strict_transform(f, {3, 2}, 0);
    for (const Branch3& br : branches_of_strict(bt)) {
        const auto [l1, l2] = post_blowup_eigen(cd, br);
        const EigenData e = eigen_data(extract_curve_data(follow_branch(bt, br)));
        CHECK(e.trace == l1 + l2);
        CHECK(e.det == l1 * l2);
    }
}

TEST_CASE("fibre obstruction detection") {
    // (w1^2, w1 (w3 - 1), w2 + w1 w3)
    const CurveData3 cd = extract_curve_data(field({"z1^2", "z1*z3 - z1", "z2 + z1*z3"}));
    CHECK(detect_ss_obstruction(cd));
    // p20 of degree 2 is outside the recognised pattern
    CHECK_FALSE(detect_ss_obstruction(extract_curve_data(field({"z1^2", "z1*z3^2 - z1", "z2 + z1*z3"}))));
    // p31 sharing the root of p20
    CHECK_FALSE(detect_ss_obstruction(extract_curve_data(field({"z1^2", "z1*z3 - z1", "z2*z3 - z2"}))));
}

TEST_CASE("resolution of elementary and one-zero inputs stops at once") {
    ResolveOptions opt;
    const auto tr = resolve_curve(field({"-z1*z3", "2*z2*z3", "z1*z2"}), opt);
    CHECK(tr.outcome == ResolutionOutcome::ElementaryReached);
    CHECK(tr.steps.size() == 1);
    const auto tr2 = resolve_curve(field({"z1 + z2", "z3*z1 + z3*z2 + z1*z2", "z2^2"}), opt);
    CHECK(tr2.outcome == ResolutionOutcome::ElementaryReached);
    CHECK(tr2.steps.size() == 1);
}

TEST_CASE("nilpotent ladder resolves within the budget") {
    ResolveOptions opt;
    opt.budget = 8;
    const auto tr = resolve_curve(field({"z2^8", "z1*z3 + 2*z1", "z1"}), opt);
    CHECK(tr.outcome == ResolutionOutcome::ElementaryReached);
    CHECK(tr.steps.size() >= 2);
    CHECK(tr.order_bound_held);
    CHECK(tr.steps.back().elementary);
}

TEST_CASE("budget is honoured") {
    ResolveOptions opt;
    opt.budget = 0;
    const auto tr = resolve_curve(field({"z2^8", "z1*z3 + 2*z1", "z1"}), opt);
    CHECK(tr.outcome == ResolutionOutcome::BudgetExceeded);
    CHECK(tr.steps.size() == 1);
}
