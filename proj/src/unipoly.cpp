#include "folia/unipoly.hpp"

#include "folia/errors.hpp"

#include <algorithm>

namespace folia {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::x() { return UniPoly({0, 1}); }

UniPoly UniPoly::monomial(unsigned deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& v : c_) v *= c;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational UniPoly::evaluate(const Rational& at) const {
    Rational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * at + *it;
    return s;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::shift(const Rational& s) const {
    // Horner in x + s
    UniPoly r;
    const UniPoly xs({s, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * xs + constant(*it);
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * (1 / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly{}, rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), Rational(0));
    const Rational lc = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const auto shift = static_cast<unsigned>(rem.degree() - divisor.degree());
        const Rational f = rem.leading() / lc;
        q[shift] = f;
        rem -= monomial(shift, f) * divisor;
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw NotDivisible("univariate division leaves a remainder");
    return q;
}

MultiPoly UniPoly::to_multi(std::size_t num_vars, std::size_t var) const {
    if (var >= num_vars) throw IndexOutOfRange("variable index out of range");
    MultiPoly r(num_vars);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Exponent e(num_vars, 0);
        e[var] = static_cast<std::uint32_t>(i);
        r.add_term(e, c_[i]);
    }
    return r;
}

UniPoly UniPoly::from_multi(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return {};
    if (var >= p.num_vars()) throw IndexOutOfRange("variable index out of range");
    std::vector<Rational> c(static_cast<std::size_t>(p.degree_in(var) + 1), Rational(0));
    for (const auto& [e, v] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) throw PreconditionError("polynomial is not univariate in the chosen variable");
        c[e[var]] = v;
    }
    return UniPoly(std::move(c));
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

SquareFreeDecomposition square_free(const UniPoly& p) {
    if (p.is_zero()) throw PreconditionError("square-free decomposition of zero");
    SquareFreeDecomposition out{p.leading(), {}};
    if (p.is_constant()) return out;
    const UniPoly f = p.monic();
    UniPoly a = gcd(f, f.derivative());
    UniPoly b = f.exact_div(a);
    UniPoly c = f.derivative().exact_div(a);
    UniPoly dd = c - b.derivative();
    unsigned i = 1;
    while (!b.is_constant()) {
        UniPoly g = gcd(b, dd);
        if (!g.is_constant()) out.factors.push_back({g, i});
        b = b.exact_div(g);
        c = dd.exact_div(g);
        dd = c - b.derivative();
        ++i;
    }
    return out;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) || !mpz_perfect_square_p(r.get_den().get_mpz_t()))
        return std::nullopt;
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    return make_rational(n, d);
}

std::optional<UniPoly> exact_sqrt(const UniPoly& p) {
    if (p.is_zero()) return UniPoly{};
    const auto lc_root = rational_sqrt(p.leading());
    if (!lc_root) return std::nullopt;
    const SquareFreeDecomposition sf = square_free(p);
    UniPoly s = UniPoly::constant(*lc_root);
    for (const auto& [factor, mult] : sf.factors) {
        if (mult % 2 != 0) return std::nullopt;
        s = s * factor.pow(mult / 2);
    }
    if (!(s * s == p)) return std::nullopt;
    return s;
}

}  // namespace folia
