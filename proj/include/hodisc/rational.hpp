#ifndef HODISC_RATIONAL_HPP
#define HODISC_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hodisc {

// Exact rational arithmetic on 128-bit integers. Point coordinates, interval
// endpoints and Haar closed forms are all dyadic at desk scale, so reduced
// numerators and denominators stay far below 2^127; any overflow throws
// instead of wrapping.
class Rational {
public:
    using int128 = __int128;

    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long v) : num_(v), den_(1) {}

    Rational(int128 num, int128 den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    // numer / 2^q
    static Rational dyadic(std::uint64_t numer, unsigned q) {
        if (q > 120) throw std::overflow_error("Rational::dyadic: q too large");
        return Rational(static_cast<int128>(numer), int128(1) << q);
    }

    int128 num() const { return num_; }
    int128 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        Rational r;
        r.num_ = checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_));
        r.den_ = checked_mul(den_, o.den_);
        r.normalize();
        return r;
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        Rational r;
        r.num_ = checked_mul(num_, o.num_);
        r.den_ = checked_mul(den_, o.den_);
        r.normalize();
        return r;
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        Rational r;
        r.num_ = checked_mul(num_, o.den_);
        r.den_ = checked_mul(den_, o.num_);
        r.normalize();
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    long double to_long_double() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }
    double to_double() const { return static_cast<double>(to_long_double()); }

    std::string to_string() const;

private:
    int128 num_;
    int128 den_;

    static int128 checked_mul(int128 a, int128 b) {
        int128 r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: multiply overflow");
        return r;
    }
    static int128 checked_add(int128 a, int128 b) {
        int128 r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: add overflow");
        return r;
    }
    static int128 gcd128(int128 a, int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        int128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }
};

inline std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

inline std::string Rational::to_string() const {
    if (den_ == 1) return int128_to_string(num_);
    return int128_to_string(num_) + "/" + int128_to_string(den_);
}

}  // namespace hodisc

#endif
