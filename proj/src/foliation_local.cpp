#include "folia/foliation_local.hpp"

#include "folia/errors.hpp"

#include <numeric>
#include <random>

namespace folia {

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::TypeI: return "TypeI";
        case CaseTag::TypeII: return "TypeII";
        case CaseTag::TypeIII: return "TypeIII";
        case CaseTag::Dicritical: return "Dicritical";
    }
    return "?";
}

namespace {

std::vector<std::size_t> first_vars(std::size_t d) {
    std::vector<std::size_t> v(d);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

MultiPoly restrict_to_center(const MultiPoly& p, std::size_t d) { return p.set_zero(first_vars(d)); }

VectorField apply_linear_change(const VectorField& f, const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = f.n();
    const std::size_t m = f.num_vars();
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < m; ++i) {
        if (i >= n) {
            images.push_back(MultiPoly::variable(m, i));
            continue;
        }
        MultiPoly zi(m);
        for (std::size_t j = 0; j < n; ++j)
            if (b(i, j) != 0) zi += b(i, j) * MultiPoly::variable(m, j);
        images.push_back(std::move(zi));
    }
    std::vector<MultiPoly> pulled;
    for (const auto& p : f.components()) pulled.push_back(p.substitute(images));
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly q(m);
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) != 0) q += a(i, j) * pulled[j];
        out.push_back(std::move(q));
    }
    return VectorField(std::move(out), f.projective_degree(), f.num_params(), f.chart_label());
}

bool has_generic_orders(const VectorField& f, std::size_t d, unsigned m_prime, unsigned m_min) {
    for (std::size_t i = 0; i < f.n(); ++i) {
        const Order o = f[i].vanish_order(d);
        if (!o || *o != (i < d ? m_prime : m_min)) return false;
    }
    return true;
}

}  // namespace

void assert_singular_along(const VectorField& f, const CenterLocal& c) {
    validate_center(f, c);
    for (std::size_t i = 0; i < f.n(); ++i)
        if (!restrict_to_center(f[i], c.d).is_zero())
            throw NotSingularAlongCenter("component " + std::to_string(i + 1) + " does not vanish on the center");
}

Multiplicities multiplicities(const VectorField& f, const CenterLocal& c) {
    assert_singular_along(f, c);
    Multiplicities m{{}, 0, 0};
    Order all;
    Order first;
    for (std::size_t i = 0; i < f.n(); ++i) {
        const Order o = f[i].vanish_order(c.d);
        m.per_component.push_back(o);
        all = order_min(all, o);
        if (i < c.d) first = order_min(first, o);
    }
    if (!first) throw DegenerateField("the first d components vanish identically");
    m.m_prime = *first;
    m.m_min = *all;
    return m;
}

NormalizedField normalize_linear(const VectorField& f, const CenterLocal& c, std::uint64_t seed) {
    const Multiplicities mult = multiplicities(f, c);
    const std::size_t n = f.n();
    const std::size_t d = c.d;
    if (has_generic_orders(f, d, mult.m_prime, mult.m_min)) return {f, RationalMatrix::identity(n), 0};
    constexpr unsigned kAttempts = 32;
    for (unsigned attempt = 1; attempt <= kAttempts; ++attempt) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U), attempt};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<int> dist(-3, 3);
        RationalMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(i < d && j >= d)) a(i, j) = dist(rng);
        const auto b = a.inverse();
        if (!b) continue;
        VectorField g = apply_linear_change(f, a, *b);
        if (has_generic_orders(g, d, mult.m_prime, mult.m_min)) return {std::move(g), a, attempt};
    }
    throw SeedExhausted("no block-triangular change reached the generic orders in 32 attempts");
}

PolyMatrix jacobian_block(const VectorField& f, const CenterLocal& c) {
    validate_center(f, c);
    PolyMatrix a(c.d);
    for (std::size_t i = 0; i < c.d; ++i)
        for (std::size_t j = 0; j < c.d; ++j) a[i].push_back(restrict_to_center(f[i].derivative(j), c.d));
    return a;
}

std::vector<MultiPoly> characteristic_coefficients(const PolyMatrix& a) {
    // Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
    const std::size_t d = a.size();
    if (d == 0) return {};
    const std::size_t m = a.front().front().num_vars();
    auto multiply = [&](const PolyMatrix& x, const PolyMatrix& y) {
        PolyMatrix r(d, std::vector<MultiPoly>(d, MultiPoly(m)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                if (x[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < d; ++j) r[i][j] += x[i][k] * y[k][j];
            }
        return r;
    };
    PolyMatrix mk(d, std::vector<MultiPoly>(d, MultiPoly(m)));
    for (std::size_t i = 0; i < d; ++i) mk[i][i] = MultiPoly::constant(m, 1);
    std::vector<MultiPoly> coeffs;
    for (std::size_t k = 1; k <= d; ++k) {
        PolyMatrix am = multiply(a, mk);
        MultiPoly tr(m);
        for (std::size_t i = 0; i < d; ++i) tr += am[i][i];
        MultiPoly ck = tr * make_rational(-1, static_cast<unsigned long>(k));
        coeffs.push_back(ck);
        for (std::size_t i = 0; i < d; ++i) am[i][i] += ck;
        mk = std::move(am);
    }
    return coeffs;
}

bool is_elementary(const VectorField& f, const CenterLocal& c) {
    for (const auto& coeff : characteristic_coefficients(jacobian_block(f, c)))
        if (!coeff.is_zero()) return true;
    return false;
}

Classification classify_center(const VectorField& f, const CenterLocal& c) {
    const Multiplicities mult = multiplicities(f, c);
    const std::size_t m = f.num_vars();
    const auto images = chart_substitution(m, c.d, 0);
    const MultiPoly p1 = f[0].substitute(images);
    Classification cls{CaseTag::TypeIII, mult.m_min, mult.m_prime, 0, 0, {}, true};
    bool all_zero = true;
    for (std::size_t i = 1; i < c.d; ++i) {
        MultiPoly h = f[i].substitute(images) - MultiPoly::variable(m, i) * p1;
        const std::size_t zero[] = {0};
        MultiPoly g = h.divide_monomial_power(0, mult.m_prime).set_zero(zero);
        all_zero = all_zero && g.is_zero();
        cls.all_g_nonzero = cls.all_g_nonzero && !g.is_zero();
        cls.g.push_back(std::move(g));
    }
    if (mult.m_min == mult.m_prime && all_zero) {
        cls.tag = CaseTag::Dicritical;
        cls.ell = mult.m_prime;
        cls.ell_kernel = cls.ell - 1;
        return cls;
    }
    if (mult.m_min + 1 == mult.m_prime)
        cls.tag = CaseTag::TypeI;
    else if (mult.m_min + 1 < mult.m_prime)
        cls.tag = CaseTag::TypeII;
    else
        cls.tag = CaseTag::TypeIII;
    cls.ell = std::min(mult.m_prime - 1, mult.m_min);
    cls.ell_kernel = cls.ell;
    return cls;
}

}  // namespace folia
