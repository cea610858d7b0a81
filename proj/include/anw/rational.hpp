// Exact rational arithmetic on 64-bit numerator/denominator.
// All algebra in this library is exact; any overflow is a hard error,
// never a silent wrap.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anw {

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rat operator-(const Rat& a) { return Rat(checked(-(__int128)a.num_), a.den_, already_normal{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "n" or "n/d".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

private:
    struct already_normal {};
    Rat(long long n, long long d, already_normal) : num_(n), den_(d) {}

    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: 64-bit overflow");
        return (long long)v;
    }

    static Rat make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        return Rat(checked(n), checked(d), already_normal{});
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : (a == 0 ? 1 : a);
    }

    void normalize() { *this = make(num_, den_); }

    long long num_;
    long long den_;
};

}  // namespace anw
