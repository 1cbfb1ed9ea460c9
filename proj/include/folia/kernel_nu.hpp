#pragma once

#include "folia/symmetric_chern.hpp"
#include "folia/unipoly.hpp"

#include <optional>

namespace folia {

enum class KernelFamily { Phi, Psi, Theta };
const char* to_string(KernelFamily f);
KernelFamily parse_kernel_family(std::string_view name);

// Data entering nu: the center as a complete intersection, the foliation
// degree k and the kernel argument ell.
struct NuInput {
    CompleteIntersection ci;
    unsigned k;
    unsigned ell;
};

// phi_a = x^(n-d-a2) (1+x)^(d-a1); psi_a = ((1+x)^(d-a1) - 1) x^(n-d-a2-1); theta_a = phi_a - psi_a.
UniPoly kernel_poly(KernelFamily family, unsigned n, unsigned d, unsigned a1, unsigned a2);

// -deg * sum_a sum_m (-1)^delta [kernel_a^(m)(ell)/m!] (k-1)^m sigma_a1 tau_a2 W_delta
BigInt nu(KernelFamily family, const NuInput& in);

// Same quantity as nu(Theta) assembled from binomial Gamma coefficients.
BigInt nu_gamma_oracle(const NuInput& in);

struct MilnorAlongCenter {
    BigInt nu_phi;
    BigInt nu_psi;
    BigInt nu_theta;
    std::optional<BigInt> sum_isolated_mu;  // needs N
    BigInt mu_lower_bound;                  // -nu(Phi)
    std::optional<BigInt> mu;               // -nu(Phi) + N
    BigInt mu_after_blowup_delta;           // nu(Theta)
};

MilnorAlongCenter milnor_along_center(const NuInput& in, std::optional<BigInt> embedded_n);

struct SpecialCounts {
    BigInt n_e1;  // singular points on the exceptional divisor
    BigInt n_m1;  // singular points on the blown-up manifold
};
SpecialCounts special_counts(const NuInput& in);

BigInt sum_powers(unsigned k, unsigned n);  // sum_{i=0}^n k^i

// Closed form of nu(Theta) for curves (d = n - 1).
BigInt curve_remark_formula(const NuInput& in);

// (1+ell)^n - sum_{j<n} (1+ell)^j, the theta kernel at a point center.
BigInt point_theta_closed_form(unsigned n, unsigned ell);

}  // namespace folia
