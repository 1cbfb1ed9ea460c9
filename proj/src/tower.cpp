#include "folia/tower.hpp"

#include "folia/errors.hpp"
#include "folia/kernel_nu.hpp"

#include <string>

namespace folia {

namespace {

Rational scaled_lambda(const TowerState& t, long j) { return Rational(t.lambda0) * rpow(Rational(t.n - 1), -j); }

Rational pow_q(const Rational& base, unsigned e) { return rpow(base, static_cast<long>(e)); }

unsigned ell_at(const TowerState& t, unsigned i) {
    if (i < 1 || i > t.ells.size())
        throw IndexOutOfRange("tower needs ell_" + std::to_string(i) + " but has " + std::to_string(t.ells.size()));
    return t.ells[i - 1];
}

// (k-1) deg - Lambda0 sum_{i=1}^{j} ell_i / (n-1)^i
Rational bracket(const TowerState& t, unsigned j) {
    Rational s = 0;
    for (unsigned i = 1; i <= j; ++i) s += Rational(ell_at(t, i)) * rpow(Rational(t.n - 1), -static_cast<long>(i));
    return Rational((BigInt(t.k) - 1) * t.deg) - Rational(t.lambda0) * s;
}

Rational geometric(const Rational& q, unsigned last) {
    Rational s = 0;
    for (unsigned i = 0; i <= last; ++i) s += pow_q(q, i);
    return s;
}

}  // namespace

void validate(const TowerState& t) {
    if (t.n < 3) throw PreconditionError("towers need n >= 3");
    if (t.k < 1) throw PreconditionError("foliation degree must be positive");
    if (t.deg < 1) throw PreconditionError("curve degree must be positive");
    if (t.chi + t.lambda0 != (t.n + 1) * t.deg)
        throw PreconditionError("Lambda0 must equal (n+1) deg - chi");
}

ChernIntegrals chern_integrals(const TowerState& t, unsigned j) {
    validate(t);
    ChernIntegrals out;
    if (j >= 1) {
        const Rational sign = t.n % 2 == 0 ? 1 : -1;
        out.zeta_top = sign * scaled_lambda(t, static_cast<long>(j) - 1);
        out.e_on_w = scaled_lambda(t, j);
    }
    out.c1_tm = Rational(t.chi) + scaled_lambda(t, j);
    out.c1_tf_star = bracket(t, j);
    out.c1_normal = scaled_lambda(t, j);
    return out;
}

ChernIntegrals chern_integrals_by_recursion(const TowerState& t, unsigned j) {
    validate(t);
    const Rational sign = t.n % 2 == 0 ? 1 : -1;
    Rational normal = t.lambda0;
    Rational c1_tm = (t.n + 1) * t.deg;
    Rational c1_tf = (BigInt(t.k) - 1) * t.deg;
    ChernIntegrals out;
    for (unsigned i = 1; i <= j; ++i) {
        const Rational zeta = sign * normal;
        const Rational e = sign * zeta / (t.n - 1);
        normal -= (t.n - 2) * e;
        c1_tm -= (t.n - 2) * e;
        c1_tf -= ell_at(t, i) * e;
        out.zeta_top = zeta;
        out.e_on_w = e;
    }
    out.c1_tm = c1_tm;
    out.c1_tf_star = c1_tf;
    out.c1_normal = normal;
    return out;
}

Rational n_on_divisor_exact(const TowerState& t, unsigned j) {
    validate(t);
    if (j < 1) throw PreconditionError("the divisor count starts at level 1");
    const Rational l = ell_at(t, j);
    const Rational lp1 = l + 1;
    return Rational(t.chi) * geometric(lp1, t.n - 2) -
           l * pow_q(lp1, t.n - 2) * scaled_lambda(t, static_cast<long>(j) - 1) +
           (t.n - 1) * pow_q(lp1, t.n - 2) * bracket(t, j - 1);
}

Rational eta_exact(const TowerState& t, unsigned m) {
    validate(t);
    if (m < 1) throw PreconditionError("eta is indexed from 1");
    const Rational l = ell_at(t, m);
    const Rational lp1 = l + 1;
    const Rational n = t.n;
    return Rational(t.chi) * (geometric(lp1, t.n - 2) - pow_q(lp1, t.n - 1)) +
           pow_q(lp1, t.n - 2) * (l * l - l) * scaled_lambda(t, static_cast<long>(m) - 1) -
           pow_q(lp1, t.n - 2) * (n * l - n + 2) * bracket(t, m - 1);
}

Rational n_total_exact(const TowerState& t, unsigned j) {
    validate(t);
    Rational s = Rational(sum_powers(t.k, t.n));
    for (unsigned m = 1; m <= j; ++m) s += eta_exact(t, m);
    return s;
}

Rational mu_along_exact(const TowerState& t, unsigned j, unsigned ell_next, const BigInt& embedded_n,
                        bool literal_ellj) {
    validate(t);
    if (embedded_n < 0) throw PreconditionError("embedded point count must be non-negative");
    const Rational l = ell_next;
    const Rational lp1 = l + 1;
    const Rational n = t.n;
    Rational factor = pow_q(lp1, t.n - 2);
    if (literal_ellj) {
        if (j < 1) throw PreconditionError("the literal ell_j factor needs j >= 1");
        factor = pow_q(Rational(ell_at(t, j)) + 1, t.n - 2);
    }
    return pow_q(lp1, t.n - 1) * Rational(t.chi) - l * l * pow_q(lp1, t.n - 2) * scaled_lambda(t, j) +
           (n * l + 1) * factor * bracket(t, j) + Rational(embedded_n);
}

Rational mu_next_exact(const TowerState& t, unsigned j, const Rational& mu_j) {
    validate(t);
    const Rational l = ell_at(t, j + 1);
    const Rational lp1 = l + 1;
    const Rational n = t.n;
    return mu_j + Rational(t.chi) * (geometric(lp1, t.n - 2) - pow_q(lp1, t.n - 1)) +
           (l * l - l) * pow_q(lp1, t.n - 2) * scaled_lambda(t, j) -
           (n * l - n + 2) * pow_q(lp1, t.n - 2) * bracket(t, j);
}

BigInt n_on_divisor(const TowerState& t, unsigned j) {
    return require_integer(n_on_divisor_exact(t, j), "N(F_j, E_j)");
}

BigInt eta(const TowerState& t, unsigned m) { return require_integer(eta_exact(t, m), "eta"); }

BigInt n_total(const TowerState& t, unsigned j) { return require_integer(n_total_exact(t, j), "N(F_j, M_j)"); }

BigInt mu_along(const TowerState& t, unsigned j, unsigned ell_next, const BigInt& embedded_n, bool literal_ellj) {
    return require_integer(mu_along_exact(t, j, ell_next, embedded_n, literal_ellj), "mu(F_j, W_j)");
}

BigInt mu_next(const TowerState& t, unsigned j, const BigInt& mu_j) {
    return require_integer(mu_next_exact(t, j, Rational(mu_j)), "mu(F_j+1, E_j+1 components)");
}

unsigned long blowup_bound(unsigned n, const BigInt& lambda0, unsigned ell1, bool squared_lambda) {
    if (n < 3) throw PreconditionError("the bound needs n >= 3");
    if (lambda0 == 0) throw ZeroLambda("Lambda0 = 0 leaves the divisibility argument empty");
    if (ell1 < 1) throw PreconditionError("ell1 must be positive");
    const BigInt scale = squared_lambda ? BigInt(lambda0 * lambda0) : BigInt(abs(lambda0));
    unsigned long total = 0;
    for (unsigned l = 1; l <= ell1; ++l) {
        const BigInt x = BigInt(l) * ipow(BigInt(l + 1), n - 2) * BigInt(2 * l + 1) * scale;
        total += floor_log(x, BigInt(n - 1));
    }
    return total;
}

Rational integrality_term(unsigned n, const BigInt& lambda0, unsigned ell, unsigned j) {
    if (n < 3) throw PreconditionError("the sequence needs n >= 3");
    Rational s = 0;
    for (unsigned i = 1; i <= j; ++i) s += Rational(ell) * rpow(Rational(n - 1), -static_cast<long>(i));
    const Rational l = ell;
    return pow_q(l + 1, n - 2) * Rational(lambda0) *
           (l * l * rpow(Rational(n - 1), -static_cast<long>(j)) + (Rational(n) * l + 1) * s);
}

}  // namespace folia
