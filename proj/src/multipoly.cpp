#include "folia/multipoly.hpp"

#include "folia/errors.hpp"

#include <algorithm>
#include <numeric>

namespace folia {

Order order_min(Order a, Order b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

bool order_less(Order a, Order b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
}

namespace {

unsigned degree_sum(const Exponent& e, std::size_t k) {
    unsigned s = 0;
    for (std::size_t i = 0; i < k && i < e.size(); ++i) s += e[i];
    return s;
}

void check_vars(std::size_t n) {
    if (n > kMaxVars) throw DimensionMismatch("at most 16 variables are supported");
}

void check_same(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars() != b.num_vars()) throw DimensionMismatch("polynomials live in different rings");
}

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = degree_sum(a, a.size());
    const unsigned db = degree_sum(b, b.size());
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::size_t num_vars) : num_vars_(num_vars) { check_vars(num_vars); }

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw IndexOutOfRange("variable index out of range");
    Exponent e(num_vars, 0);
    e[index] = 1;
    return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponent exponent, const Rational& c) {
    MultiPoly p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_sum(terms_.begin()->first, num_vars_) == 0);
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponent(num_vars_, 0)); }

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != num_vars_) throw DimensionMismatch("exponent length differs from variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same(a, b);
    MultiPoly r(a.num_vars_);
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(num_vars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

int MultiPoly::total_degree() const { return degree_in_first(num_vars_); }

int MultiPoly::degree_in_first(std::size_t k) const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(degree_sum(e, k)));
    return deg;
}

int MultiPoly::degree_in(std::size_t var) const {
    if (var >= num_vars_) throw IndexOutOfRange("variable index out of range");
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e[var]));
    return deg;
}

Order MultiPoly::vanish_order(std::size_t d) const {
    if (d > num_vars_) throw IndexOutOfRange("center codimension exceeds variable count");
    Order best;
    for (const auto& [e, c] : terms_) best = order_min(best, degree_sum(e, d));
    return best;
}

Order MultiPoly::order_in(std::size_t var) const {
    if (var >= num_vars_) throw IndexOutOfRange("variable index out of range");
    Order best;
    for (const auto& [e, c] : terms_) best = order_min(best, e[var]);
    return best;
}

MultiPoly MultiPoly::divide_monomial_power(std::size_t var, unsigned e) const {
    if (var >= num_vars_) throw IndexOutOfRange("variable index out of range");
    MultiPoly r(num_vars_);
    for (const auto& [ex, c] : terms_) {
        if (ex[var] < e) throw NotDivisible("polynomial is not divisible by the requested power");
        Exponent q = ex;
        q[var] -= e;
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= num_vars_) throw IndexOutOfRange("variable index out of range");
    MultiPoly r(num_vars_);
    for (const auto& [ex, c] : terms_) {
        if (ex[var] == 0) continue;
        Exponent q = ex;
        q[var] -= 1;
        r.add_term(q, c * ex[var]);
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
    if (images.size() != num_vars_) throw DimensionMismatch("one image per variable is required");
    const std::size_t m = images.empty() ? 0 : images.front().num_vars();
    for (const auto& im : images)
        if (im.num_vars() != m) throw DimensionMismatch("substitution images live in different rings");
    // powers[i][k] = images[i]^k, filled on demand
    std::vector<std::vector<MultiPoly>> powers(num_vars_);
    auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(m, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    MultiPoly r(m);
    for (const auto& [ex, c] : terms_) {
        MultiPoly t = constant(m, c);
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (ex[i] > 0) t = t * power(i, ex[i]);
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::set_zero(std::span<const std::size_t> vars) const {
    for (std::size_t v : vars)
        if (v >= num_vars_) throw IndexOutOfRange("variable index out of range");
    MultiPoly r(num_vars_);
    for (const auto& [ex, c] : terms_) {
        bool keep = std::all_of(vars.begin(), vars.end(), [&](std::size_t v) { return ex[v] == 0; });
        if (keep) r.terms_.emplace(ex, c);
    }
    return r;
}

MultiPoly MultiPoly::evaluate_var(std::size_t var, const Rational& value) const {
    if (var >= num_vars_) throw IndexOutOfRange("variable index out of range");
    MultiPoly r(num_vars_);
    for (const auto& [ex, c] : terms_) {
        Exponent q = ex;
        q[var] = 0;
        r.add_term(q, c * rpow(value, ex[var]));
    }
    return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != num_vars_) throw DimensionMismatch("point dimension differs from variable count");
    Rational s = 0;
    for (const auto& [ex, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (ex[i] > 0) t *= rpow(point[i], ex[i]);
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::homogeneous_part_in_first(std::size_t k, unsigned deg) const {
    MultiPoly r(num_vars_);
    for (const auto& [ex, c] : terms_)
        if (degree_sum(ex, k) == deg) r.terms_.emplace(ex, c);
    return r;
}

MultiPoly MultiPoly::homogeneous_part(unsigned deg) const { return homogeneous_part_in_first(num_vars_, deg); }

MultiPoly MultiPoly::truncate(unsigned deg) const {
    MultiPoly r(num_vars_);
    for (const auto& [ex, c] : terms_)
        if (degree_sum(ex, num_vars_) <= deg) r.terms_.emplace(ex, c);
    return r;
}

MultiPoly MultiPoly::extend_vars(std::size_t new_num_vars) const {
    if (new_num_vars < num_vars_) throw DimensionMismatch("cannot drop variables by extension");
    MultiPoly r(new_num_vars);
    for (const auto& [ex, c] : terms_) {
        Exponent q = ex;
        q.resize(new_num_vars, 0);
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

MultiPoly MultiPoly::permute_vars(std::span<const std::size_t> perm) const {
    if (perm.size() != num_vars_) throw DimensionMismatch("permutation length differs from variable count");
    std::vector<bool> seen(num_vars_, false);
    for (std::size_t p : perm) {
        if (p >= num_vars_ || seen[p]) throw PreconditionError("not a permutation");
        seen[p] = true;
    }
    MultiPoly r(num_vars_);
    for (const auto& [ex, c] : terms_) {
        Exponent q(num_vars_, 0);
        for (std::size_t i = 0; i < num_vars_; ++i) q[perm[i]] = ex[i];
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

}  // namespace folia
