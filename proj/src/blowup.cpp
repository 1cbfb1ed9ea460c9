#include "folia/blowup.hpp"

#include "folia/errors.hpp"

#include <algorithm>

namespace folia {

VectorField pullback_chart(const VectorField& f, const CenterLocal& c, std::size_t chart) {
    assert_singular_along(f, c);
    if (chart >= c.d) throw ChartOutOfRange("chart index must lie in 1..d");
    const std::size_t m = f.num_vars();
    const auto images = chart_substitution(m, c.d, chart);
    std::vector<MultiPoly> composed;
    for (const auto& p : f.components()) composed.push_back(p.substitute(images));
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < f.n(); ++i) {
        if (i < c.d && i != chart) {
            MultiPoly h = composed[i] - MultiPoly::variable(m, i) * composed[chart];
            out.push_back(h.divide_monomial_power(chart, 1));
        } else {
            out.push_back(composed[i]);
        }
    }
    return VectorField(std::move(out), f.projective_degree(), f.num_params(),
                       "chart " + std::to_string(chart + 1));
}

BlowupResult strict_transform(const VectorField& f, const CenterLocal& c, std::size_t chart) {
    const CaseTag tag = classify_center(f, c).tag;
    const VectorField pulled = pullback_chart(f, c, chart);
    Order ell;
    for (const auto& p : pulled.components()) ell = order_min(ell, p.order_in(chart));
    if (!ell) throw DegenerateField("the pullback vanishes identically");
    std::vector<MultiPoly> out;
    for (const auto& p : pulled.components()) out.push_back(p.divide_monomial_power(chart, *ell));
    const bool invariant = out[chart].order_in(chart).value_or(1) >= 1;
    return {VectorField(std::move(out), f.projective_degree(), f.num_params(), pulled.chart_label()), *ell, chart,
            tag, invariant};
}

VectorField recenter_on_branch(const VectorField& fs, const BranchData& branch) {
    const std::size_t m = fs.num_vars();
    std::vector<bool> fixed(m, false);
    for (std::size_t z : branch.zero_vars) {
        if (z >= fs.n()) throw IndexOutOfRange("branch variable out of range");
        fixed[z] = true;
    }
    for (const auto& [k, psi] : branch.shifts) {
        if (k >= fs.n() || fixed[k]) throw PreconditionError("each branch variable may appear once");
        if (psi.num_vars() != m) throw DimensionMismatch("branch function lives in the wrong ring");
        fixed[k] = true;
    }
    for (const auto& [k, psi] : branch.shifts)
        for (std::size_t v = 0; v < m; ++v)
            if (fixed[v] && psi.degree_in(v) > 0)
                throw UnsupportedBranch("branch function depends on a constrained variable");

    // The branch must lie in the singular set.
    std::vector<MultiPoly> on_branch;
    for (std::size_t v = 0; v < m; ++v) on_branch.push_back(MultiPoly::variable(m, v));
    for (std::size_t z : branch.zero_vars) on_branch[z] = MultiPoly(m);
    for (const auto& [k, psi] : branch.shifts) on_branch[k] = psi;
    for (const auto& p : fs.components())
        if (!p.substitute(on_branch).is_zero()) throw BranchNotSingular("branch is not contained in the singular set");

    // d/dt (u_k - psi_k) = R_k - sum_v dpsi_k/du_v R_v
    std::vector<MultiPoly> comps = fs.components();
    for (const auto& [k, psi] : branch.shifts)
        for (std::size_t v = 0; v < fs.n(); ++v) {
            const MultiPoly dpsi = psi.derivative(v);
            if (!dpsi.is_zero()) comps[k] -= dpsi * fs[v];
        }
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < m; ++v) images.push_back(MultiPoly::variable(m, v));
    for (const auto& [k, psi] : branch.shifts) images[k] += psi;
    for (auto& p : comps) p = p.substitute(images);
    return VectorField(std::move(comps), fs.projective_degree(), fs.num_params(), fs.chart_label() + " recentered");
}

VectorField permute_coordinates(const VectorField& f, std::span<const std::size_t> perm) {
    if (perm.size() != f.n()) throw DimensionMismatch("permutation length differs from field dimension");
    std::vector<std::size_t> full(perm.begin(), perm.end());
    for (std::size_t v = f.n(); v < f.num_vars(); ++v) full.push_back(v);
    std::vector<MultiPoly> out(f.n(), MultiPoly(f.num_vars()));
    for (std::size_t i = 0; i < f.n(); ++i) out[perm[i]] = f[i].permute_vars(full);
    return VectorField(std::move(out), f.projective_degree(), f.num_params(), f.chart_label());
}

}  // namespace folia
