#include "folia/rational.hpp"

#include "folia/errors.hpp"

#include <cctype>

namespace folia {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

BigInt require_integer(const Rational& r, std::string_view what) {
    if (!is_integer(r))
        throw NonIntegerResult(std::string(what) + " is not an integer: " + to_string(r));
    return r.get_num();
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == start) throw ParseError("expected digits", start);
        return j;
    };
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t end = digits(i);
    BigInt num(std::string(text.substr(i, end - i)));
    BigInt den = 1;
    if (end < text.size() && text[end] == '/') {
        std::size_t dend = digits(end + 1);
        den = BigInt(std::string(text.substr(end + 1, dend - end - 1)));
        if (den == 0) throw ParseError("zero denominator", end + 1);
        end = dend;
    }
    if (end != text.size()) throw ParseError("trailing characters in rational", end);
    if (neg) num = -num;
    return make_rational(num, den);
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, long e) {
    if (e >= 0) {
        return make_rational(ipow(base.get_num(), static_cast<unsigned long>(e)),
                             ipow(base.get_den(), static_cast<unsigned long>(e)));
    }
    if (base == 0) throw PreconditionError("zero raised to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -e);
}

unsigned long floor_log(const BigInt& x, const BigInt& base) {
    if (base < 2) throw PreconditionError("logarithm base must be at least 2");
    if (x < 1) throw PreconditionError("logarithm argument must be positive");
    unsigned long e = 0;
    BigInt p = base;
    while (p <= x) {
        p *= base;
        ++e;
    }
    return e;
}

}  // namespace folia
