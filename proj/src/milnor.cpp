#include "folia/milnor.hpp"

#include "folia/errors.hpp"
#include "folia/linalg.hpp"

#include <map>
#include <random>

namespace folia {

namespace {

// All exponents in n variables of total degree <= max_deg, grouped by degree.
std::vector<Exponent> monomials_up_to(std::size_t n, unsigned max_deg) {
    std::vector<Exponent> out;
    Exponent e(n, 0);
    for (unsigned deg = 0; deg <= max_deg; ++deg) {
        // compositions of deg into n parts
        std::vector<Exponent> level;
        auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
            if (i + 1 == n) {
                e[i] = left;
                level.push_back(e);
                return;
            }
            for (unsigned v = left + 1; v-- > 0;) {
                e[i] = v;
                self(self, i + 1, left - v);
            }
        };
        rec(rec, 0, deg);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

unsigned degree_of(const Exponent& e) {
    unsigned s = 0;
    for (auto v : e) s += v;
    return s;
}

unsigned truncated_dimension(std::span<const MultiPoly> gens, std::size_t n, unsigned deg) {
    const auto monos = monomials_up_to(n, deg);
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    SparseEchelon echelon;
    Exponent prod(n);
    for (const auto& g : gens) {
        const Order ord = g.vanish_order(n);
        if (!ord) continue;
        for (const auto& mono : monos) {
            if (degree_of(mono) + *ord > deg) continue;
            SparseEchelon::Row row;
            for (const auto& [e, c] : g.terms()) {
                for (std::size_t v = 0; v < n; ++v) prod[v] = mono[v] + e[v];
                if (degree_of(prod) > deg) continue;
                row[index.at(prod)] += c;
            }
            std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
            if (!row.empty()) echelon.insert(std::move(row));
        }
    }
    return static_cast<unsigned>(monos.size() - echelon.rank());
}

}  // namespace

MilnorResult local_milnor(std::span<const MultiPoly> components, unsigned max_degree) {
    if (components.empty()) throw DimensionMismatch("no generators given");
    const std::size_t n = components.front().num_vars();
    for (const auto& g : components) {
        if (g.num_vars() != n) throw DimensionMismatch("generators live in different rings");
        if (g.constant_term() != 0) throw PreconditionError("the origin is not a common zero");
    }
    MilnorResult r{0, 0, {}};
    for (unsigned deg = 0; deg <= max_degree; ++deg) {
        r.dims.push_back(truncated_dimension(components, n, deg));
        if (deg >= 1 && r.dims[deg] == r.dims[deg - 1]) {
            r.mu = r.dims[deg - 1];
            r.stabilized_at = deg - 1;
            return r;
        }
    }
    const auto& d = r.dims;
    if (d.size() >= 4) {
        const auto s = d.size();
        const long inc1 = static_cast<long>(d[s - 1]) - static_cast<long>(d[s - 2]);
        const long inc2 = static_cast<long>(d[s - 2]) - static_cast<long>(d[s - 3]);
        const long inc3 = static_cast<long>(d[s - 3]) - static_cast<long>(d[s - 4]);
        if (inc1 > 0 && inc1 == inc2 && inc2 == inc3)
            throw NotIsolated("truncated dimensions grow linearly: the zero at the origin is not isolated");
    }
    throw NotStabilized("local algebra did not stabilise by degree " + std::to_string(max_degree));
}

namespace {

std::vector<MultiPoly> random_perturbation(std::size_t n, std::size_t d, int degree,
                                           const std::vector<unsigned>& q, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly y(n);
        // z^a with |a| = q_i in the first d variables, times 1 or one other coordinate
        for (const auto& a : monomials_up_to(d, q[i])) {
            if (degree_of(a) != q[i]) continue;
            for (std::size_t extra = d; extra <= n; ++extra) {
                Exponent e(a);
                e.resize(n, 0);
                if (extra < n) e[extra] += 1;
                if (static_cast<int>(degree_of(e)) > degree) continue;
                y.add_term(e, dist(rng));
            }
        }
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace

DeformationSpec build_deformation(const VectorField& f, const CenterLocal& c, const Classification& cls,
                                  std::uint64_t seed) {
    if (f.num_params() != 0) throw PreconditionError("the base field must be parameter free");
    assert_singular_along(f, c);
    const std::size_t n = f.n();
    const int degree = projective_degree_of(f.components());
    const unsigned lk = cls.ell_kernel;
    std::vector<unsigned> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = i < c.d ? lk + 1 : lk;
    if (static_cast<int>(lk + 1) > degree)
        throw PreconditionError("foliation degree is too small for the prescribed perturbation orders");

    constexpr unsigned kAttempts = 32;
    for (unsigned attempt = 1; attempt <= kAttempts; ++attempt) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U), attempt, 7U};
        std::mt19937_64 rng(seq);
        const auto ys = random_perturbation(n, c.d, degree, q, rng);
        bool orders_ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            const Order o = ys[i].vanish_order(c.d);
            orders_ok = orders_ok && o && *o == q[i];
        }
        if (!orders_ok) continue;
        const MultiPoly t = MultiPoly::variable(n + 1, n);
        std::vector<MultiPoly> deformed;
        for (std::size_t i = 0; i < n; ++i) deformed.push_back(f[i].extend_vars(n + 1) + t * ys[i].extend_vars(n + 1));
        if (projective_degree_of(deformed) != degree) continue;
        VectorField def(deformed, degree, 1, f.chart_label());
        if (lk == 0) {
            // W stays invariant but leaves the singular set.
            bool invariant = true;
            bool singular = true;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::size_t> first(c.d);
                for (std::size_t v = 0; v < c.d; ++v) first[v] = v;
                const bool vanishes = deformed[i].set_zero(first).is_zero();
                if (i < c.d) invariant = invariant && vanishes;
                singular = singular && vanishes;
            }
            if (!invariant || singular) continue;
            return {f, VectorField(ys, degree), std::move(def), q, cls, false, attempt};
        }
        Classification dc = classify_center(def, c);
        const bool special = dc.tag == CaseTag::TypeI && dc.all_g_nonzero;
        if (!special || dc.ell != lk) continue;
        return {f, VectorField(ys, degree), std::move(def), q, std::move(dc), true, attempt};
    }
    throw SeedExhausted("no perturbation met the certification in 32 attempts");
}

VectorField specialize(const DeformationSpec& spec, const Rational& t) {
    const std::size_t n = spec.base.n();
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < n; ++v) images.push_back(MultiPoly::variable(n, v));
    images.push_back(MultiPoly::constant(n, t));
    std::vector<MultiPoly> out;
    for (const auto& p : spec.deformed.components()) out.push_back(p.substitute(images));
    return VectorField(std::move(out), spec.deformed.projective_degree(), 0, spec.base.chart_label());
}

}  // namespace folia
