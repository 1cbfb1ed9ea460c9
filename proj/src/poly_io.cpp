#include "folia/poly_io.hpp"

#include "folia/errors.hpp"

#include <cctype>
#include <sstream>

namespace folia {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t num_vars) : s_(text), n_(num_vars) {}

    MultiPoly run() {
        MultiPoly result(n_);
        skip();
        bool negative = false;
        if (peek('+') || peek('-')) {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        result += signed_term(negative);
        skip();
        while (pos_ < s_.size()) {
            if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
            negative = s_[pos_] == '-';
            ++pos_;
            result += signed_term(negative);
            skip();
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool peek_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    BigInt nat() {
        if (!peek_digit()) fail("expected a natural number");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    MultiPoly signed_term(bool negative) {
        skip();
        Rational coeff = 1;
        bool have_any = false;
        if (peek_digit()) {
            BigInt num = nat();
            BigInt den = 1;
            if (peek('/')) {
                ++pos_;
                const std::size_t at = pos_;
                den = nat();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            coeff = make_rational(num, den);
            have_any = true;
        }
        Exponent e(n_, 0);
        while (true) {
            const std::size_t save = pos_;
            bool star = false;
            if (have_any && peek('*')) {
                ++pos_;
                star = true;
            }
            if (!peek('z')) {
                if (star) fail("expected a variable after '*'");
                pos_ = save;
                break;
            }
            const std::size_t var_at = pos_;
            ++pos_;
            if (!peek_digit()) fail("expected a variable index");
            const BigInt idx = nat();
            if (idx < 1 || idx > static_cast<unsigned long>(n_))
                throw ParseError("variable index out of range", var_at);
            unsigned long power = 1;
            if (peek('^')) {
                ++pos_;
                const BigInt p = nat();
                if (!p.fits_uint_p()) fail("exponent too large");
                power = p.get_ui();
            }
            e[idx.get_ui() - 1] += static_cast<std::uint32_t>(power);
            have_any = true;
        }
        if (!have_any) fail("expected a coefficient or a variable");
        return MultiPoly::monomial(std::move(e), negative ? Rational(-coeff) : coeff);
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'z' + std::to_string(i + 1);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

template <typename Terms>
std::string join_terms(const Terms& terms) {
    // terms: sequence of (coefficient, monomial text) in print order
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [c, mono] : terms) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        if (mono.empty())
            out << to_string(a);
        else if (a == 1)
            out << mono;
        else
            out << to_string(a) << '*' << mono;
    }
    return out.str();
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t num_vars) {
    if (num_vars == 0 || num_vars > kMaxVars) throw ParseError("variable count must lie in 1..16");
    return Parser(text, num_vars).run();
}

std::string to_string(const MultiPoly& p) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace_back(c, monomial_text(e));
    return join_terms(terms);
}

std::string to_string(const UniPoly& p, std::string_view name) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::string mono;
        if (i >= 1) mono = std::string(name);
        if (i >= 2) mono += '^' + std::to_string(i);
        terms.emplace_back(c, mono);
    }
    return join_terms(terms);
}

}  // namespace folia
