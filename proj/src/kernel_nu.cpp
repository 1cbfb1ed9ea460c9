#include "folia/kernel_nu.hpp"

#include "folia/errors.hpp"

#include <string>

namespace folia {

const char* to_string(KernelFamily f) {
    switch (f) {
        case KernelFamily::Phi: return "phi";
        case KernelFamily::Psi: return "psi";
        case KernelFamily::Theta: return "theta";
    }
    return "?";
}

KernelFamily parse_kernel_family(std::string_view name) {
    if (name == "phi") return KernelFamily::Phi;
    if (name == "psi") return KernelFamily::Psi;
    if (name == "theta") return KernelFamily::Theta;
    throw ParseError("unknown kernel family '" + std::string(name) + "'");
}

namespace {

UniPoly one_plus_x_pow(unsigned e) { return UniPoly({1, 1}).pow(e); }

void validate(const NuInput& in) {
    validate(in.ci);
    if (in.ci.d < 2) throw PreconditionError("the center must have codimension at least 2");
    if (in.k < 1) throw PreconditionError("foliation degree must be positive");
}

BigInt sign(long delta) { return delta % 2 == 0 ? BigInt(1) : BigInt(-1); }

// tau_i with tau_i = 0 beyond the truncation, sigma_i = 0 beyond d.
BigInt at(const std::vector<BigInt>& v, std::size_t i) { return i < v.size() ? v[i] : BigInt(0); }

}  // namespace

UniPoly kernel_poly(KernelFamily family, unsigned n, unsigned d, unsigned a1, unsigned a2) {
    if (a1 > d || a2 > n - d) throw IndexOutOfRange("multi-index outside the kernel range");
    const UniPoly phi = UniPoly::monomial(n - d - a2, 1) * one_plus_x_pow(d - a1);
    const UniPoly head = one_plus_x_pow(d - a1) - UniPoly::constant(1);
    const UniPoly psi = (a2 < n - d) ? head * UniPoly::monomial(n - d - a2 - 1, 1) : head.exact_div(UniPoly::x());
    switch (family) {
        case KernelFamily::Phi: return phi;
        case KernelFamily::Psi: return psi;
        case KernelFamily::Theta: return phi - psi;
    }
    return {};
}

BigInt nu(KernelFamily family, const NuInput& in) {
    validate(in);
    const unsigned n = in.ci.n;
    const unsigned d = in.ci.d;
    const ChernData ch = chern_coeffs(in.ci);
    const BigInt km1 = BigInt(in.k) - 1;
    Rational total = 0;
    for (unsigned s = 0; s <= n - d; ++s)
        for (unsigned a1 = 0; a1 <= std::min(d, s); ++a1) {
            const unsigned a2 = s - a1;
            const UniPoly taylor = kernel_poly(family, n, d, a1, a2).shift(Rational(in.ell));
            for (unsigned m = 0; m <= n - d - s; ++m) {
                const long delta = static_cast<long>(n - d - s - m);
                total += Rational(sign(delta) * ipow(km1, m) * at(ch.sigma, a1) * at(ch.tau, a2) *
                                  complete_symmetric(delta, in.ci.ks)) *
                         taylor.coeff(m);
            }
        }
    return -ch.deg * require_integer(total, "nu");
}

BigInt nu_gamma_oracle(const NuInput& in) {
    validate(in);
    const long n = in.ci.n;
    const long d = in.ci.d;
    const ChernData ch = chern_coeffs(in.ci);
    const BigInt km1 = BigInt(in.k) - 1;
    BigInt total = 0;
    for (long s = 0; s <= n - d; ++s)
        for (long a1 = 0; a1 <= std::min(d, s); ++a1) {
            const long a2 = s - a1;
            for (long j = s; j <= n; ++j) {
                const BigInt gamma = binomial(d - a1, j - s - 1) - binomial(d - a1, j - s);
                if (gamma == 0) continue;
                for (long m = 0; m <= n - d - s; ++m) {
                    const BigInt c = binomial(n - j, m);
                    if (c == 0) continue;
                    const long delta = n - d - s - m;
                    total += sign(delta) * c * gamma * ipow(BigInt(in.ell), static_cast<unsigned long>(n - j - m)) *
                             ipow(km1, static_cast<unsigned long>(m)) * at(ch.sigma, static_cast<std::size_t>(a1)) *
                             at(ch.tau, static_cast<std::size_t>(a2)) * complete_symmetric(delta, in.ci.ks);
                }
            }
        }
    return ch.deg * total;
}

BigInt sum_powers(unsigned k, unsigned n) {
    BigInt s = 0;
    for (unsigned i = 0; i <= n; ++i) s += ipow(BigInt(k), i);
    return s;
}

MilnorAlongCenter milnor_along_center(const NuInput& in, std::optional<BigInt> embedded_n) {
    MilnorAlongCenter out;
    out.nu_phi = nu(KernelFamily::Phi, in);
    out.nu_psi = nu(KernelFamily::Psi, in);
    out.nu_theta = nu(KernelFamily::Theta, in);
    out.mu_lower_bound = -out.nu_phi;
    out.mu_after_blowup_delta = out.nu_theta;
    if (embedded_n) {
        if (*embedded_n < 0) throw PreconditionError("embedded point count must be non-negative");
        out.sum_isolated_mu = sum_powers(in.k, in.ci.n) + out.nu_phi - *embedded_n;
        out.mu = -out.nu_phi + *embedded_n;
    }
    return out;
}

SpecialCounts special_counts(const NuInput& in) {
    return {-nu(KernelFamily::Psi, in), sum_powers(in.k, in.ci.n) + nu(KernelFamily::Theta, in)};
}

BigInt curve_remark_formula(const NuInput& in) {
    validate(in);
    const unsigned n = in.ci.n;
    if (in.ci.d + 1 != n) throw PreconditionError("the closed form needs a curve center");
    const ChernData ch = chern_coeffs(in.ci);
    const BigInt l = in.ell;
    const BigInt lp1 = l + 1;
    BigInt geometric = 0;
    for (unsigned j = 0; j + 3 <= n; ++j) geometric += ipow(lp1, j);
    const BigInt first = *ch.chi * (geometric - l * l * ipow(lp1, n - 2));
    const BigInt second = ipow(lp1, n - 2) * ch.deg *
                          ((BigInt(n) - BigInt(n) * l - 2) * (BigInt(in.k) - 1) + BigInt(n + 1) * (l * l - l));
    return first + second;
}

BigInt point_theta_closed_form(unsigned n, unsigned ell) {
    const BigInt lp1 = BigInt(ell) + 1;
    BigInt s = 0;
    for (unsigned j = 0; j < n; ++j) s += ipow(lp1, j);
    return ipow(lp1, n) - s;
}

}  // namespace folia
