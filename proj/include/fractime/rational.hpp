#ifndef FRACTIME_RATIONAL_HPP
#define FRACTIME_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fractime {

// Exact rational arithmetic for exponent bookkeeping. Values stay tiny
// (numerators/denominators of Lebesgue exponents), so int64 with __int128
// intermediates is plenty. Infinity is representable as 1/0 and is only
// meant for Lebesgue exponents; reciprocals of exponents are always finite.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    static Rat infinity() {
        Rat r;
        r.num = 1;
        r.den = 0;
        return r;
    }
    bool is_inf() const { return den == 0; }
    bool is_finite() const { return den != 0; }

    void normalize() {
        if (den == 0) {
            if (num == 0) throw std::domain_error("rational 0/0");
            num = num > 0 ? 1 : -1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const {
        if (is_inf())
            return num > 0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
        return double(num) / double(den);
    }

    // 1/x with 1/inf = 0 exactly.
    Rat recip() const {
        if (is_inf()) return Rat(0);
        if (num == 0) return infinity();
        return Rat(den, num);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den == 0 ? 0 : b.den); }
    friend Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return make((__int128)a.num * b.den, (__int128)a.den * b.num);
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        if (a.is_inf() || b.is_inf()) return a.value() < b.value();
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    std::string str() const {
        if (is_inf()) return num > 0 ? "inf" : "-inf";
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    static Rat make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rat r;
        r.num = (std::int64_t)n;
        r.den = (std::int64_t)d;
        if (r.den == 0) r.normalize();
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }
};

// Parses "p/q", "p", or "inf".
inline Rat parse_rat(const std::string& s) {
    if (s == "inf" || s == "infinity") return Rat::infinity();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace fractime

#endif
