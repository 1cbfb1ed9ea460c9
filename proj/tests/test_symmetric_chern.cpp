#include "folia/errors.hpp"
#include "folia/symmetric_chern.hpp"

#include <doctest.h>

#include <functional>

using namespace folia;

namespace {

// Sum over multisets of size delta of prod k_i, by explicit recursion.
BigInt complete_by_enumeration(unsigned delta, const std::vector<unsigned>& ks) {
    std::function<BigInt(std::size_t, unsigned)> rec = [&](std::size_t start, unsigned left) -> BigInt {
        if (left == 0) return 1;
        BigInt s = 0;
        for (std::size_t i = start; i < ks.size(); ++i) s += ks[i] * rec(i, left - 1);
        return s;
    };
    return rec(0, delta);
}

BigInt elementary_by_subsets(unsigned i, const std::vector<unsigned>& ks) {
    BigInt s = 0;
    for (unsigned mask = 0; mask < (1u << ks.size()); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != i) continue;
        BigInt p = 1;
        for (std::size_t b = 0; b < ks.size(); ++b)
            if (mask & (1u << b)) p *= ks[b];
        s += p;
    }
    return s;
}

}  // namespace

TEST_CASE("symmetric functions match enumeration") {
    const std::vector<std::vector<unsigned>> samples{{1}, {2, 3}, {1, 1, 1}, {3, 2, 2}, {4, 1, 3, 2}};
    for (const auto& ks : samples) {
        for (unsigned delta = 0; delta <= 6; ++delta) CHECK(complete_symmetric(delta, ks) == complete_by_enumeration(delta, ks));
        for (unsigned i = 0; i <= ks.size(); ++i) CHECK(elementary_symmetric(i, ks) == elementary_by_subsets(i, ks));
    }
    const std::vector<unsigned> ks{2, 3};
    CHECK(complete_symmetric(-1, ks) == 0);
    CHECK(complete_symmetric(2, ks) == 4 + 6 + 9);
    CHECK(elementary_symmetric(3, ks) == 0);
}

TEST_CASE("tau is the series quotient") {
    // tau * prod(1 + k h) == (1 + h)^(n+1) up to degree n - d.
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned d = 1; d < n; ++d) {
            std::vector<unsigned> ks(d);
            for (unsigned i = 0; i < d; ++i) ks[i] = 1 + (i * 2 + n) % 3;
            const ChernData cd = chern_coeffs({n, d, ks});
            REQUIRE(cd.tau.size() == n - d + 1);
            std::vector<BigInt> prod(cd.tau.begin(), cd.tau.end());
            for (unsigned k : ks)
                for (std::size_t t = prod.size() - 1; t >= 1; --t) prod[t] += k * prod[t - 1];
            for (std::size_t t = 0; t < prod.size(); ++t) CHECK(prod[t] == binomial(n + 1, static_cast<long>(t)));
        }
}

TEST_CASE("curve data for familiar curves") {
    // Line in P^3: chi = 2, lambda0 = 4 - 2 = 2.
    const ChernData line = chern_coeffs({3, 2, {1, 1}});
    REQUIRE(line.chi);
    CHECK(*line.chi == 2);
    CHECK(*line.lambda0 == 2);
    // Plane conic in P^3 (degrees 1, 2): chi = 2, deg 2.
    const ChernData conic = chern_coeffs({3, 2, {1, 2}});
    CHECK(conic.deg == 2);
    CHECK(*conic.chi == 2);
    // Plane cubic in P^2: genus 1.
    CHECK(*chern_coeffs({2, 1, {3}}).chi == 0);
    // Complete intersection of two quadrics in P^3: elliptic quartic.
    CHECK(*chern_coeffs({3, 2, {2, 2}}).chi == 0);
    // Surfaces carry no curve data.
    CHECK_FALSE(chern_coeffs({3, 1, {2}}).chi.has_value());
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(chern_coeffs({3, 2, {1}}), DimensionMismatch);
    CHECK_THROWS_AS(chern_coeffs({3, 2, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(chern_coeffs({3, 4, {1, 1, 1, 1}}), PreconditionError);
}
