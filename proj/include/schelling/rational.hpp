#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schelling {

/// Exact rational on 64-bit integers, used for threshold comparisons.
/// Happiness tests like `count >= tau*(2w+1)` decide the dynamics at integer
/// boundaries, so they are evaluated by cross-multiplication, never in
/// floating point. Values stay tiny (parsed parameters and a few sums), so
/// int64 with a gcd after every operation is plenty.
struct Rational {
    long long num{0};
    long long den{1};

    constexpr Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }
    Rational(long long n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// count >= this * scale, exactly.
    bool leq_scaled(long long count, long long scale) const {
        return static_cast<__int128>(num) * scale <= static_cast<__int128>(count) * den;
    }
    /// count < this * scale, exactly.
    bool gt_scaled(long long count, long long scale) const { return !leq_scaled(count, scale); }

    /// Parses "3", "9/20" or a plain decimal like "0.45".
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            long long n = std::stoll(s.substr(0, slash));
            long long d = std::stoll(s.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s), 1);
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.size() > 15) frac = frac.substr(0, 15);
        bool neg = !whole.empty() && whole[0] == '-';
        long long w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        long long scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        long long f = frac.empty() ? 0 : std::stoll(frac);
        long long n = (neg ? -1 : 1) * ((neg ? -w : w) * scale + f);
        return Rational(n, scale);
    }
};

} // namespace schelling
