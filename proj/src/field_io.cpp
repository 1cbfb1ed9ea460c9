#include "folia/field_io.hpp"

#include "folia/errors.hpp"
#include "folia/poly_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace folia {

namespace {

std::string_view strip(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail_line(const std::string& what, std::size_t line) {
    throw ParseError(what + " on line " + std::to_string(line));
}

long parse_long(std::string_view s, std::size_t line) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail_line("expected an integer, got '" + std::string(s) + "'", line);
    return v;
}

BigInt parse_bigint(std::string_view s, std::size_t line) {
    const Rational r = [&] {
        try {
            return parse_rational(s);
        } catch (const ParseError&) {
            fail_line("expected an integer, got '" + std::string(s) + "'", line);
        }
    }();
    if (!is_integer(r)) fail_line("expected an integer, got '" + std::string(s) + "'", line);
    return r.get_num();
}

// "P3" -> 3 for prefix "P"; nullopt when the key has another shape.
std::optional<std::size_t> indexed_key(std::string_view key, std::string_view prefix) {
    if (key.size() <= prefix.size() || key.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::size_t v = 0;
    const auto rest = key.substr(prefix.size());
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
    return v;
}

MultiPoly parse_poly_on_line(std::string_view text, std::size_t n, std::size_t line) {
    try {
        return parse_poly(text, n);
    } catch (const ParseError& e) {
        fail_line(e.what(), line);
    }
}

}  // namespace

std::vector<KeyValue> parse_key_values(std::string_view text) {
    std::vector<KeyValue> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++line_no;
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail_line("expected key=value", line_no);
        out.push_back({std::string(strip(line.substr(0, eq))), std::string(strip(line.substr(eq + 1))), line_no});
    }
    return out;
}

FieldFile parse_field_file(std::string_view text) {
    const auto kvs = parse_key_values(text);
    std::optional<long> n;
    std::optional<long> degree;
    std::optional<std::size_t> d;
    for (const auto& kv : kvs) {
        if (kv.key == "n") n = parse_long(kv.value, kv.line);
        if (kv.key == "degree") degree = parse_long(kv.value, kv.line);
        if (kv.key == "d") d = static_cast<std::size_t>(parse_long(kv.value, kv.line));
    }
    if (!n) throw ParseError("field file lacks n=");
    if (*n < 1 || *n > static_cast<long>(kMaxVars)) throw ParseError("n must lie in 1..16");
    const auto nn = static_cast<std::size_t>(*n);
    std::vector<std::optional<MultiPoly>> comps(nn);
    for (const auto& kv : kvs) {
        const auto idx = indexed_key(kv.key, "P");
        if (!idx) continue;
        if (*idx < 1 || *idx > nn) fail_line("component index out of range", kv.line);
        if (comps[*idx - 1]) fail_line("component given twice", kv.line);
        comps[*idx - 1] = parse_poly_on_line(kv.value, nn, kv.line);
    }
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < nn; ++i) {
        if (!comps[i]) throw ParseError("field file lacks P" + std::to_string(i + 1));
        out.push_back(*comps[i]);
    }
    const int deg = degree ? static_cast<int>(*degree) : projective_degree_of(out);
    return {VectorField(std::move(out), deg), d};
}

std::string format_field_file(const VectorField& f, std::optional<std::size_t> d) {
    if (f.num_params() != 0) throw PreconditionError("parameter fields have no file form");
    std::ostringstream out;
    out << "n=" << f.n() << "\n";
    out << "degree=" << f.projective_degree() << "\n";
    if (d) out << "d=" << *d << "\n";
    for (std::size_t i = 0; i < f.n(); ++i) out << "P" << i + 1 << " = " << to_string(f[i]) << "\n";
    return out.str();
}

std::vector<unsigned> parse_unsigned_list(std::string_view text) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    text = strip(text);
    if (text.empty()) return out;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto item = strip(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw ParseError("expected a comma separated list of naturals, got '" + std::string(text) + "'", pos);
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

BranchData parse_branch_file(std::string_view text, std::size_t num_vars) {
    BranchData b;
    for (const auto& kv : parse_key_values(text)) {
        if (kv.key == "zero") {
            for (unsigned v : parse_unsigned_list(kv.value)) {
                if (v < 1 || v > num_vars) fail_line("branch coordinate out of range", kv.line);
                b.zero_vars.push_back(v - 1);
            }
        } else if (const auto idx = indexed_key(kv.key, "shift")) {
            if (*idx < 1 || *idx > num_vars) fail_line("branch coordinate out of range", kv.line);
            b.shifts.emplace_back(*idx - 1, parse_poly_on_line(kv.value, num_vars, kv.line));
        }
    }
    return b;
}

std::string format_branch_file(const BranchData& b) {
    std::ostringstream out;
    if (!b.zero_vars.empty()) {
        out << "zero=";
        for (std::size_t i = 0; i < b.zero_vars.size(); ++i) out << (i ? "," : "") << b.zero_vars[i] + 1;
        out << "\n";
    }
    for (const auto& [k, psi] : b.shifts) out << "shift" << k + 1 << " = " << to_string(psi) << "\n";
    return out.str();
}

TowerState parse_tower_file(std::string_view text) {
    std::map<std::string, KeyValue> keys;
    for (const auto& kv : parse_key_values(text)) keys[kv.key] = kv;
    auto need = [&](const std::string& k) -> const KeyValue& {
        auto it = keys.find(k);
        if (it == keys.end()) throw ParseError("tower file lacks " + k + "=");
        return it->second;
    };
    TowerState t;
    t.n = static_cast<unsigned>(parse_long(need("n").value, need("n").line));
    t.k = static_cast<unsigned>(parse_long(need("k").value, need("k").line));
    t.deg = parse_bigint(need("deg").value, need("deg").line);
    t.chi = parse_bigint(need("chi").value, need("chi").line);
    t.lambda0 = (t.n + 1) * t.deg - t.chi;
    if (auto it = keys.find("lambda0"); it != keys.end())
        if (parse_bigint(it->second.value, it->second.line) != t.lambda0)
            fail_line("lambda0 disagrees with (n+1) deg - chi", it->second.line);
    if (auto it = keys.find("ells"); it != keys.end()) t.ells = parse_unsigned_list(it->second.value);
    return t;
}

std::string format_tower_file(const TowerState& t) {
    std::ostringstream out;
    out << "n=" << t.n << "\nk=" << t.k << "\ndeg=" << t.deg << "\nchi=" << t.chi << "\nlambda0=" << t.lambda0
        << "\nells=";
    for (std::size_t i = 0; i < t.ells.size(); ++i) out << (i ? "," : "") << t.ells[i];
    out << "\n";
    return out.str();
}

}  // namespace folia
