#include "homtensor/rational.hpp"

#include "homtensor/errors.hpp"

#include <cctype>

namespace homtensor {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        negative = num[0] == '-';
        num = num.substr(1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational literal: \"" + text + "\"");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw ParseError("zero denominator in rational literal: \"" + text + "\"");
    if (negative) n = -n;
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value) {
    return value.get_str();
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch in add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch in sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

void add_scaled(Vec& acc, const Rat& c, const Vec& v) {
    if (acc.size() != v.size()) throw DimensionError("vector length mismatch in add_scaled");
    if (c == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

Vec negate(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    s += ")";
    return s;
}

} // namespace homtensor
