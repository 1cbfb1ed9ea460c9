#pragma once

#include "folia/multipoly.hpp"
#include "folia/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace folia {

// Dense univariate polynomial over Q, coefficients stored lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly x();
    static UniPoly monomial(unsigned deg, const Rational& c);

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    UniPoly operator-() const;
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly pow(unsigned e) const;
    Rational evaluate(const Rational& at) const;
    UniPoly derivative() const;
    // p(x + s)
    UniPoly shift(const Rational& s) const;
    UniPoly monic() const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    // Throws NotDivisible when the remainder is nonzero.
    UniPoly exact_div(const UniPoly& divisor) const;

    MultiPoly to_multi(std::size_t num_vars, std::size_t var) const;
    // Throws PreconditionError if p involves any variable other than var.
    static UniPoly from_multi(const MultiPoly& p, std::size_t var);

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);  // monic, gcd(0, 0) = 0

// Yun's decomposition p = lc * prod f_i^i with f_i monic, squarefree, pairwise coprime.
struct SquareFreeFactor {
    UniPoly factor;
    unsigned multiplicity;
};
struct SquareFreeDecomposition {
    Rational leading;
    std::vector<SquareFreeFactor> factors;
};
SquareFreeDecomposition square_free(const UniPoly& p);

// s with s*s == p, leading coefficient positive; nullopt if p is not a square in Q[x].
std::optional<UniPoly> exact_sqrt(const UniPoly& p);
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace folia
