#pragma once

#include "folia/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace folia {

// Complete intersection of hypersurfaces of degrees ks in P^n, dimension n - d.
struct CompleteIntersection {
    unsigned n;
    unsigned d;
    std::vector<unsigned> ks;
};

void validate(const CompleteIntersection& ci);

struct ChernData {
    std::vector<BigInt> sigma;  // sigma_i = e_i(ks), i = 0..d
    std::vector<BigInt> tau;    // tau_i, i = 0..n-d, of (1+h)^(n+1) / prod (1 + k_j h)
    BigInt deg;                 // product of ks
    std::optional<BigInt> chi;      // curves only: tau_1 * deg
    std::optional<BigInt> lambda0;  // curves only: (n+1) deg - chi
};

// Complete homogeneous symmetric polynomial of degree delta in ks; delta < 0 gives 0.
BigInt complete_symmetric(long delta, std::span<const unsigned> ks);
BigInt elementary_symmetric(long i, std::span<const unsigned> ks);

ChernData chern_coeffs(const CompleteIntersection& ci);

}  // namespace folia
