#pragma once

#include "folia/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace folia {

inline constexpr std::size_t kMaxVars = 16;

using Exponent = std::vector<std::uint32_t>;

// Vanishing order; std::nullopt stands for +infinity (the zero polynomial).
using Order = std::optional<unsigned>;

Order order_min(Order a, Order b);
bool order_less(Order a, Order b);  // nullopt compares greatest

// Graded-lex, largest first: higher total degree, then lexicographically larger.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse polynomial in Q[z1..zn]. Variables are addressed 0-based in code
// and printed 1-based as z1..zn.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexGreater>;

    explicit MultiPoly(std::size_t num_vars = 0);

    static MultiPoly constant(std::size_t num_vars, const Rational& c);
    static MultiPoly variable(std::size_t num_vars, std::size_t index);
    static MultiPoly monomial(Exponent exponent, const Rational& c);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    Rational coefficient(const Exponent& e) const;
    Rational constant_term() const;

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(unsigned e) const;

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    // Total degree counting only the first k variables; -1 for zero.
    int degree_in_first(std::size_t k) const;
    int degree_in(std::size_t var) const;

    // Order of vanishing along {z1 = ... = zd = 0}.
    Order vanish_order(std::size_t d) const;
    // Order of vanishing along {z_var = 0}.
    Order order_in(std::size_t var) const;

    // Exact division by z_var^e; throws NotDivisible.
    MultiPoly divide_monomial_power(std::size_t var, unsigned e) const;
    MultiPoly derivative(std::size_t var) const;

    // Replace z_i by images[i]; all images share one variable count.
    MultiPoly substitute(std::span<const MultiPoly> images) const;
    // Set the listed variables to zero.
    MultiPoly set_zero(std::span<const std::size_t> vars) const;
    // Set z_var := value.
    MultiPoly evaluate_var(std::size_t var, const Rational& value) const;
    Rational evaluate(std::span<const Rational> point) const;

    // Terms whose degree in the first k variables equals deg.
    MultiPoly homogeneous_part_in_first(std::size_t k, unsigned deg) const;
    // Terms of total degree exactly deg.
    MultiPoly homogeneous_part(unsigned deg) const;
    // Terms of total degree <= deg.
    MultiPoly truncate(unsigned deg) const;

    // Same polynomial viewed in more variables (appended at the end).
    MultiPoly extend_vars(std::size_t new_num_vars) const;
    // Rename variables: variable i becomes perm[i].
    MultiPoly permute_vars(std::span<const std::size_t> perm) const;

private:
    std::size_t num_vars_;
    TermMap terms_;
};

}  // namespace folia
