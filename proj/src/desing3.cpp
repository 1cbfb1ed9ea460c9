#include "folia/desing3.hpp"

#include "folia/errors.hpp"
#include "folia/poly_io.hpp"
#include "folia/tower.hpp"

#include <algorithm>

namespace folia {

const char* to_string(Case3 c) {
    switch (c) {
        case Case3::DistinctNonzero: return "CaseI";
        case Case3::OneZero: return "CaseII";
        case Case3::Nilpotent: return "CaseIII";
    }
    return "?";
}

const char* to_string(ResolutionOutcome o) {
    switch (o) {
        case ResolutionOutcome::ElementaryReached: return "ElementaryReached";
        case ResolutionOutcome::ObstructionSS: return "ObstructionSS";
        case ResolutionOutcome::BudgetExceeded: return "BudgetExceeded";
        case ResolutionOutcome::NoHomeomorphicBranch: return "NoHomeomorphicBranch";
    }
    return "?";
}

namespace {

constexpr std::size_t kBase = 2;  // the curve coordinate z3
constexpr unsigned kResonanceLimit = 64;

void require_curve_field(const VectorField& f) {
    if (f.n() != 3 || f.num_params() != 0)
        throw DimensionMismatch("curve desingularisation works on parameter-free fields in C^3");
}

// Polynomials in (fibre, base): entry i is the coefficient of fibre^i, a polynomial in the base.
using BiPoly = std::vector<UniPoly>;

void trim(BiPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int bdeg(const BiPoly& a) { return static_cast<int>(a.size()) - 1; }

BiPoly to_bi(const MultiPoly& p, std::size_t fibre) {
    BiPoly out;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t v = 0; v < e.size(); ++v)
            if (v != fibre && v != kBase && e[v] != 0)
                throw PreconditionError("restricted component still depends on the divisor variable");
        if (out.size() <= e[fibre]) out.resize(e[fibre] + 1);
        out[e[fibre]] += UniPoly::monomial(e[kBase], c);
    }
    trim(out);
    return out;
}

BiPoly bderiv(const BiPoly& a) {
    BiPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rational(static_cast<unsigned long>(i)));
    trim(out);
    return out;
}

BiPoly primitive(BiPoly a) {
    trim(a);
    if (a.empty()) return a;
    UniPoly content;
    for (const auto& c : a) content = gcd(content, c);
    for (auto& c : a) c = c.exact_div(content);
    const Rational lc = a.back().leading();
    for (auto& c : a) c *= 1 / lc;
    return a;
}

BiPoly prem(BiPoly r, const BiPoly& b) {
    const int db = bdeg(b);
    const UniPoly lcb = b.back();
    while (!r.empty() && bdeg(r) >= db) {
        const UniPoly lr = r.back();
        const auto s = static_cast<std::size_t>(bdeg(r) - db);
        for (auto& c : r) c = lcb * c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + s] -= lr * b[i];
        trim(r);
    }
    return r;
}

BiPoly bgcd(BiPoly a, BiPoly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        BiPoly r = prem(a, b);
        a = std::move(b);
        b = primitive(std::move(r));
    }
    return primitive(std::move(a));
}

std::optional<BiPoly> bdiv_exact(BiPoly r, const BiPoly& b) {
    const int db = bdeg(b);
    BiPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0);
    while (!r.empty() && bdeg(r) >= db) {
        const auto s = static_cast<std::size_t>(bdeg(r) - db);
        UniPoly f;
        try {
            f = r.back().exact_div(b.back());
        } catch (const NotDivisible&) {
            return std::nullopt;
        }
        q[s] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + s] -= f * b[i];
        trim(r);
    }
    if (!r.empty()) return std::nullopt;
    trim(q);
    return q;
}

std::vector<UniPoly> polynomial_roots(const BiPoly& g) {
    // g is square-free and primitive in the fibre variable.
    std::vector<UniPoly> roots;
    if (bdeg(g) == 1) {
        if (g[1].is_constant()) roots.push_back(-g[0] * (1 / g[1].leading()));
        return roots;
    }
    if (bdeg(g) == 2) {
        const UniPoly disc = g[1] * g[1] - Rational(4) * g[2] * g[0];
        const auto s = exact_sqrt(disc);
        if (!s) return roots;
        for (const UniPoly& num : {-g[1] - *s, -g[1] + *s}) {
            try {
                roots.push_back(num.exact_div(Rational(2) * g[2]));
            } catch (const NotDivisible&) {
            }
        }
        return roots;
    }
    if (bdeg(g) > 2)
        throw UnsupportedBranch("singular locus on the divisor has a fibre-degree " + std::to_string(bdeg(g)) +
                                " factor");
    return roots;
}

unsigned root_multiplicity(BiPoly g, const UniPoly& psi) {
    const BiPoly linear{-psi, UniPoly::constant(1)};
    unsigned m = 0;
    while (auto q = bdiv_exact(g, linear)) {
        g = std::move(*q);
        ++m;
    }
    return m;
}

std::string describe(const Branch3& b) {
    const char* var = b.chart == 1 ? "u2" : "v1";
    return "chart " + std::to_string(b.chart) + " branch " + var + " = " + to_string(b.psi, "z3");
}

bool quick_elementary(const VectorField& f) {
    return elementary_ratio_test(eigen_data(extract_curve_data(f))).elementary;
}

}  // namespace

CurveData3 extract_curve_data(const VectorField& f) {
    require_curve_field(f);
    CurveData3 cd;
    const std::size_t both[] = {0, 1};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!f[i].set_zero(both).is_zero())
            throw NotSingularAlongCenter("component " + std::to_string(i + 1) + " does not vanish on the curve");
        for (std::size_t j = 0; j < 2; ++j) cd.p[i][j] = UniPoly::from_multi(f[i].derivative(j).set_zero(both), kBase);
        cd.higher[i] = f[i] - MultiPoly::variable(3, 0) * cd.p[i][0].to_multi(3, kBase) -
                       MultiPoly::variable(3, 1) * cd.p[i][1].to_multi(3, kBase);
    }
    return cd;
}

EigenData eigen_data(const CurveData3& cd) {
    EigenData e;
    e.trace = cd.p[0][0] + cd.p[1][1];
    e.det = cd.p[0][0] * cd.p[1][1] - cd.p[0][1] * cd.p[1][0];
    e.delta = e.trace * e.trace - Rational(4) * e.det;
    e.delta_sqrt = exact_sqrt(e.delta);
    return e;
}

CaseReport case_classify3(const EigenData& e) {
    CaseReport r{Case3::Nilpotent, std::nullopt, std::nullopt, false};
    if (e.det.is_zero()) {
        r.tag = e.trace.is_zero() ? Case3::Nilpotent : Case3::OneZero;
        return r;
    }
    r.tag = Case3::DistinctNonzero;
    const UniPoly t2 = e.trace * e.trace;
    const Rational c = t2.is_zero() ? Rational(0) : t2.leading() / e.det.leading();
    if (!(t2 == c * e.det)) return r;
    r.c_ratio = c;
    // q^2 + (2 - c) q + 1 = 0
    const auto s = rational_sqrt(c * c - 4 * c);
    if (!s) return r;
    const Rational q = (c - 2 + *s) / 2;
    r.q_ratio = q;
    for (const Rational& v : {q, Rational(1 / q)})
        if (is_integer(v) && v >= 1 && v <= kResonanceLimit) r.resonant = true;
    return r;
}

ElementaryVerdict elementary_ratio_test(const EigenData& e) {
    const CaseReport r = case_classify3(e);
    switch (r.tag) {
        case Case3::Nilpotent: return {false, "both eigenvalues vanish identically"};
        case Case3::OneZero: return {true, "one eigenvalue vanishes, the other does not"};
        case Case3::DistinctNonzero: break;
    }
    if (!r.c_ratio) return {true, "eigenvalue ratio is not constant"};
    if (!r.q_ratio) return {true, "constant eigenvalue ratio is irrational or non-real"};
    if (*r.q_ratio > 0) return {false, "eigenvalue ratio " + to_string(*r.q_ratio) + " lies in Q+"};
    return {true, "eigenvalue ratio " + to_string(*r.q_ratio) + " is negative"};
}

std::vector<Branch3> branch_curves3(const CurveData3& cd, const EigenData& e) {
    const UniPoly& p10 = cd.p[0][0];
    const UniPoly& p11 = cd.p[0][1];
    const UniPoly& p20 = cd.p[1][0];
    const UniPoly& p21 = cd.p[1][1];
    std::vector<Branch3> out;
    if (!p11.is_zero()) {
        if (!e.delta_sqrt) throw UnsupportedBranch("discriminant is not a square in Q[z3]");
        const UniPoly base = p21 - p10;
        const UniPoly den = Rational(2) * p11;
        try {
            if (e.delta_sqrt->is_zero()) {
                out.push_back({1, base.exact_div(den), 2});
            } else {
                out.push_back({1, (base - *e.delta_sqrt).exact_div(den), 1});
                out.push_back({1, (base + *e.delta_sqrt).exact_div(den), 1});
            }
        } catch (const NotDivisible&) {
            throw UnsupportedBranch("branch is not polynomial in z3");
        }
        return out;
    }
    const UniPoly diff = p21 - p10;
    if (!diff.is_zero()) {
        try {
            out.push_back({1, (-p20).exact_div(diff), 1});
        } catch (const NotDivisible&) {
            throw UnsupportedBranch("branch is not polynomial in z3");
        }
    } else if (p20.is_zero()) {
        throw UnsupportedBranch("every fibre point is singular on the divisor");
    }
    out.push_back({2, UniPoly{}, 1});
    return out;
}

std::pair<UniPoly, UniPoly> post_blowup_eigen(const CurveData3& cd, const Branch3& branch) {
    const EigenData e = eigen_data(cd);
    UniPoly lambda_i;
    if (branch.chart == 1)
        lambda_i = cd.p[0][0] + cd.p[0][1] * branch.psi;
    else
        lambda_i = cd.p[1][1] + cd.p[1][0] * branch.psi;
    const UniPoly other = e.trace - lambda_i;
    return {lambda_i, other - lambda_i};
}

bool detect_ss_obstruction(const CurveData3& cd) {
    if (!cd.p[0][0].is_zero() || !cd.p[0][1].is_zero() || !cd.p[1][1].is_zero()) return false;
    const UniPoly& p20 = cd.p[1][0];
    if (p20.degree() != 1) return false;
    return gcd(p20, cd.p[2][1]).is_constant();
}

std::vector<Branch3> branches_of_strict(const BlowupResult& bt) {
    require_curve_field(bt.strict);
    if (bt.divisor_var > 1) throw ChartOutOfRange("curve centers have two charts");
    const std::size_t divisor = bt.divisor_var;
    const std::size_t fibre = 1 - divisor;
    const std::size_t zero[] = {divisor};
    BiPoly g;
    bool any = false;
    for (const auto& comp : bt.strict.components()) {
        BiPoly r = to_bi(comp.set_zero(zero), fibre);
        if (r.empty()) continue;
        g = any ? bgcd(g, r) : primitive(std::move(r));
        any = true;
    }
    if (!any) throw UnsupportedBranch("the exceptional divisor lies in the singular set");
    std::vector<Branch3> out;
    if (bdeg(g) < 1) return out;
    BiPoly reduced = g;
    const BiPoly dg = bderiv(g);
    if (!dg.empty()) {
        const BiPoly common = bgcd(g, dg);
        if (bdeg(common) > 0) reduced = primitive(*bdiv_exact(g, common));
    }
    for (const UniPoly& psi : polynomial_roots(reduced))
        out.push_back({static_cast<int>(divisor) + 1, psi, root_multiplicity(g, psi)});
    return out;
}

VectorField follow_branch(const BlowupResult& bt, const Branch3& branch) {
    if (branch.chart != static_cast<int>(bt.divisor_var) + 1) throw PreconditionError("branch belongs to another chart");
    const std::size_t divisor = bt.divisor_var;
    BranchData data{{divisor}, {{1 - divisor, branch.psi.to_multi(3, kBase)}}};
    return recenter_on_branch(bt.strict, data);
}

VectorField follow_fibre(const BlowupResult& chart1, const Rational& beta) {
    if (chart1.divisor_var != 0) throw PreconditionError("fibre branches are read in chart 1");
    const std::size_t perm[] = {0, 2, 1};
    const VectorField swapped = permute_coordinates(chart1.strict, perm);
    BranchData data{{0}, {{1, MultiPoly::constant(3, beta)}}};
    return recenter_on_branch(swapped, data);
}

ResolutionTrace resolve_curve(const VectorField& f, const ResolveOptions& options) {
    require_curve_field(f);
    const CenterLocal c{3, 2};
    ResolutionTrace trace{{}, ResolutionOutcome::BudgetExceeded, options.budget, true};
    VectorField current = f;
    std::string center = "W0";
    unsigned m0 = 0;
    for (unsigned step = 0;; ++step) {
        Classification cls = classify_center(current, c);
        const CurveData3 cd = extract_curve_data(current);
        EigenData e = eigen_data(cd);
        const CaseReport cr = case_classify3(e);
        const bool elementary = elementary_ratio_test(e).elementary;
        const bool ss = cr.tag == Case3::Nilpotent && detect_ss_obstruction(cd);
        if (step == 0) {
            m0 = cls.m_min;
            if (options.lambda0) {
                const unsigned long bound = blowup_bound(3, *options.lambda0, std::max(1U, cls.ell));
                trace.budget = std::max<unsigned long>(trace.budget, bound);
            }
        } else if (cls.m_min > m0 + 1) {
            trace.order_bound_held = false;
        }
        trace.steps.push_back({current, std::move(cls), std::move(e), cr.tag, elementary, ss, center});
        if (elementary) {
            trace.outcome = ResolutionOutcome::ElementaryReached;
            return trace;
        }
        if (ss && options.stop_on_obstruction) {
            trace.outcome = ResolutionOutcome::ObstructionSS;
            return trace;
        }
        if (step >= trace.budget) {
            trace.outcome = ResolutionOutcome::BudgetExceeded;
            return trace;
        }
        struct Candidate {
            VectorField field;
            std::string center;
        };
        std::vector<Candidate> candidates;
        for (std::size_t chart = 0; chart < 2; ++chart) {
            const BlowupResult bt = strict_transform(current, c, chart);
            for (const Branch3& b : branches_of_strict(bt)) {
                // A nonzero constant in chart 2 is the chart-1 branch 1/c.
                if (chart == 1 && b.psi.degree() == 0) continue;
                candidates.push_back({follow_branch(bt, b), describe(b)});
            }
        }
        if (candidates.empty()) {
            trace.outcome = ResolutionOutcome::NoHomeomorphicBranch;
            return trace;
        }
        auto pick = std::find_if(candidates.begin(), candidates.end(),
                                 [](const Candidate& cand) { return !quick_elementary(cand.field); });
        if (pick == candidates.end()) pick = candidates.begin();
        current = pick->field;
        center = pick->center;
    }
}

}  // namespace folia
