#pragma once

#include "folia/rational.hpp"

#include <optional>
#include <vector>

namespace folia {

// Successive blow-ups of P^n along curves W_0, W_1, ... each mapped
// isomorphically onto the previous one. ells[i-1] is ell_i.
struct TowerState {
    unsigned n;
    unsigned k;
    BigInt deg;
    BigInt chi;
    BigInt lambda0;
    std::vector<unsigned> ells;
};

void validate(const TowerState& t);

struct ChernIntegrals {
    std::optional<Rational> zeta_top;  // integral of zeta_j^(n-1) over E_j, j >= 1
    std::optional<Rational> e_on_w;    // integral of E_j over W_j, j >= 1
    Rational c1_tm;                    // c_1(T M_j) over W_j
    Rational c1_tf_star;               // pulled-back c_1(T F_j) over W_j
    Rational c1_normal;                // c_1 of the normal bundle of W_j
};

// Closed forms at level j.
ChernIntegrals chern_integrals(const TowerState& t, unsigned j);
// Same quantities built by iterating the one-step recursions from level 0.
ChernIntegrals chern_integrals_by_recursion(const TowerState& t, unsigned j);

// Exact values; the integer variants throw NonIntegerResult.
Rational n_on_divisor_exact(const TowerState& t, unsigned j);
Rational eta_exact(const TowerState& t, unsigned m);
Rational n_total_exact(const TowerState& t, unsigned j);
Rational mu_along_exact(const TowerState& t, unsigned j, unsigned ell_next, const BigInt& embedded_n,
                        bool literal_ellj = false);
Rational mu_next_exact(const TowerState& t, unsigned j, const Rational& mu_j);

BigInt n_on_divisor(const TowerState& t, unsigned j);
BigInt eta(const TowerState& t, unsigned m);
BigInt n_total(const TowerState& t, unsigned j);
BigInt mu_along(const TowerState& t, unsigned j, unsigned ell_next, const BigInt& embedded_n,
                bool literal_ellj = false);
BigInt mu_next(const TowerState& t, unsigned j, const BigInt& mu_j);

// Sum over ell = 1..ell1 of floor(log_{n-1}(ell (1+ell)^(n-2) (1+2 ell) |Lambda0|)).
// With squared_lambda the factor |Lambda0| is replaced by Lambda0^2.
unsigned long blowup_bound(unsigned n, const BigInt& lambda0, unsigned ell1, bool squared_lambda = false);

// a_j for a constant sequence ell_i = ell; integral for every j along a genuine tower.
Rational integrality_term(unsigned n, const BigInt& lambda0, unsigned ell, unsigned j);

}  // namespace folia
