#include "folia/symmetric_chern.hpp"

#include "folia/errors.hpp"

namespace folia {

void validate(const CompleteIntersection& ci) {
    if (ci.d < 1 || ci.d > ci.n) throw PreconditionError("codimension must lie in 1..n");
    if (ci.ks.size() != ci.d) throw DimensionMismatch("one degree per defining hypersurface is required");
    for (unsigned k : ci.ks)
        if (k < 1) throw PreconditionError("hypersurface degrees must be positive");
}

BigInt complete_symmetric(long delta, std::span<const unsigned> ks) {
    if (delta < 0) return 0;
    // h[t] over a growing prefix of ks: h_new[t] = h_old[t] + k * h_new[t-1]
    std::vector<BigInt> h(static_cast<std::size_t>(delta) + 1, BigInt(0));
    h[0] = 1;
    if (ks.empty()) return delta == 0 ? BigInt(1) : BigInt(0);
    for (unsigned k : ks)
        for (std::size_t t = 1; t < h.size(); ++t) h[t] += k * h[t - 1];
    return h.back();
}

BigInt elementary_symmetric(long i, std::span<const unsigned> ks) {
    if (i < 0 || static_cast<std::size_t>(i) > ks.size()) return 0;
    std::vector<BigInt> e(ks.size() + 1, BigInt(0));
    e[0] = 1;
    std::size_t used = 0;
    for (unsigned k : ks) {
        ++used;
        for (std::size_t t = used; t >= 1; --t) e[t] += k * e[t - 1];
    }
    return e[static_cast<std::size_t>(i)];
}

ChernData chern_coeffs(const CompleteIntersection& ci) {
    validate(ci);
    ChernData out;
    for (unsigned i = 0; i <= ci.d; ++i) out.sigma.push_back(elementary_symmetric(i, ci.ks));
    const unsigned len = ci.n - ci.d + 1;
    // Multiply (1+h)^(n+1) by 1/(1 + k h) = sum (-k h)^t for each k, truncated.
    std::vector<BigInt> series(len, BigInt(0));
    for (unsigned i = 0; i < len; ++i) series[i] = binomial(ci.n + 1, i);
    for (unsigned k : ci.ks)
        for (unsigned t = 1; t < len; ++t) series[t] -= k * series[t - 1];
    out.tau = std::move(series);
    out.deg = 1;
    for (unsigned k : ci.ks) out.deg *= k;
    if (ci.d + 1 == ci.n) {
        out.chi = out.tau[1] * out.deg;
        out.lambda0 = (ci.n + 1) * out.deg - *out.chi;
    }
    return out;
}

}  // namespace folia
