#pragma once

// Shared generators and brute-force reference computations for the tests.

#include "folia/multipoly.hpp"
#include "folia/poly_io.hpp"
#include "folia/unipoly.hpp"
#include "folia/vector_field.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace folia::testing {

inline MultiPoly P(const std::string& text, std::size_t n) { return parse_poly(text, n); }

inline VectorField field(const std::vector<std::string>& comps, int degree = -1) {
    std::vector<MultiPoly> ps;
    for (const auto& c : comps) ps.push_back(parse_poly(c, comps.size()));
    return VectorField(ps, degree < 0 ? projective_degree_of(ps) : degree);
}

// Enumerate all exponents in num_vars variables with total degree <= max_deg.
inline void for_each_exponent(std::size_t num_vars, unsigned max_deg, const std::function<void(const Exponent&)>& fn) {
    Exponent e(num_vars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == num_vars) {
            fn(e);
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            e[i] = a;
            rec(i + 1, left - a);
        }
        e[i] = 0;
    };
    rec(0, max_deg);
}

// Random polynomial of degree <= max_deg whose order along {z1..zd = 0} is >= min_order.
inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t num_vars, std::size_t d, unsigned max_deg,
                             unsigned min_order, double density = 0.35) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::bernoulli_distribution keep(density);
    MultiPoly p(num_vars);
    for_each_exponent(num_vars, max_deg, [&](const Exponent& e) {
        unsigned ord = 0;
        for (std::size_t i = 0; i < d; ++i) ord += e[i];
        if (ord < min_order || !keep(rng)) return;
        const int c = coef(rng);
        if (c != 0) p.add_term(e, c);
    });
    return p;
}

inline VectorField random_singular_field(std::mt19937_64& rng, std::size_t n, std::size_t d, unsigned max_deg) {
    std::vector<MultiPoly> comps;
    std::uniform_int_distribution<unsigned> ord(1, 2);
    while (true) {
        comps.clear();
        for (std::size_t i = 0; i < n; ++i) comps.push_back(random_poly(rng, n, d, max_deg, ord(rng)));
        bool first_block_nonzero = false;
        for (std::size_t i = 0; i < d; ++i) first_block_nonzero |= !comps[i].is_zero();
        if (first_block_nonzero) return VectorField(comps, static_cast<int>(max_deg));
    }
}

// Naive expansion of p(x + s) through the binomial theorem.
inline UniPoly naive_shift(const UniPoly& p, const Rational& s) {
    UniPoly out;
    const UniPoly base = UniPoly::x() + UniPoly::constant(s);
    for (int i = 0; i <= p.degree(); ++i) out += p.coeff(static_cast<unsigned>(i)) * base.pow(static_cast<unsigned>(i));
    return out;
}

}  // namespace folia::testing
