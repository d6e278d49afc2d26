// scalar.hpp — exact arithmetic in Q(sqrt(q0)).
//
// Every coefficient in the engine lives here: powers of v = sqrt(q0),
// counting ratios, Hall structure constants.  An element is a + b*sqrt(q0)
// with arbitrary-precision rational a, b.  For prime q0 the representation
// is unique, so equality is componentwise and tolerance-free.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qca {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_supported_prime(int q0) {
    return q0 == 2 || q0 == 3 || q0 == 5 || q0 == 7;
}

class ExactScalar {
public:
    ExactScalar() : a_(0), b_(0), q0_(0) {}
    ExactScalar(long v) : a_(v), b_(0), q0_(0) {}
    ExactScalar(const Rational& a) : a_(a), b_(0), q0_(0) {}
    ExactScalar(Rational a, Rational b, int q0) : a_(std::move(a)), b_(std::move(b)), q0_(q0) {
        normalize();
    }

    // v^k where v = sqrt(q0); exact for any integer k, negative included.
    static ExactScalar vpow(long k, int q0) {
        require_prime(q0);
        long h = (k >= 0 ? k : -k) / 2;
        Rational mag = int_pow(q0, h);
        if (k < 0) mag = 1 / mag;
        bool odd = (k % 2) != 0;
        if (!odd) return ExactScalar(mag, 0, q0);
        // v^(2h+1) = q0^h * v ; v^(-(2h+1)) = v / q0^(h+1)
        if (k > 0) return ExactScalar(0, mag, q0);
        return ExactScalar(0, mag / q0, q0);
    }

    // q^k = v^(2k)
    static ExactScalar qpow(long k, int q0) { return vpow(2 * k, q0); }

    const Rational& rat_part() const { return a_; }
    const Rational& root_part() const { return b_; }
    int q0() const { return q0_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // Exact integrality probe (used by counting identities).
    bool is_nonneg_integer() const {
        return b_ == 0 && a_ >= 0 && boost::multiprecision::denominator(a_) == 1;
    }
    BigInt as_integer() const {
        if (b_ != 0 || boost::multiprecision::denominator(a_) != 1)
            throw std::logic_error("ExactScalar: not an integer: " + to_string());
        return boost::multiprecision::numerator(a_);
    }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        return ExactScalar(x.a_ + y.a_, x.b_ + y.b_, merge_q0(x, y));
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        return ExactScalar(x.a_ - y.a_, x.b_ - y.b_, merge_q0(x, y));
    }
    ExactScalar operator-() const { return ExactScalar(-a_, -b_, q0_); }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        int q = merge_q0(x, y);
        // (a + b r)(c + d r) = ac + bd q0 + (ad + bc) r
        Rational bd = x.b_ * y.b_;
        if (bd != 0) bd *= q;
        return ExactScalar(x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_, q);
    }
    ExactScalar inverse() const {
        if (is_zero()) throw std::domain_error("ExactScalar: inverse of zero");
        if (b_ == 0) return ExactScalar(1 / a_, 0, q0_);
        // (a + b r)^-1 = (a - b r)/(a^2 - q0 b^2); denominator nonzero since r is irrational
        Rational den = a_ * a_ - Rational(q0_) * b_ * b_;
        return ExactScalar(a_ / den, -b_ / den, q0_);
    }
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) { return x * y.inverse(); }

    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    // Renders as a reduced v-expression when possible ("v^-3", "2", "1/4"),
    // otherwise "a + b*sqrt(q0)".
    std::string to_string() const {
        if (b_ == 0) return rat_str(a_);
        if (a_ == 0 && q0_ != 0) {
            long k;
            if (as_v_power(k)) return k == 1 ? "v" : "v^" + std::to_string(k);
            return rat_str(b_) + "*sqrt(" + std::to_string(q0_) + ")";
        }
        std::string s = rat_str(a_);
        if (b_ > 0) s += " + " + rat_str(b_);
        else s += " - " + rat_str(-b_);
        s += "*sqrt(" + std::to_string(q0_) + ")";
        return s;
    }

    // True iff *this = v^k for some integer k (requires pure a- or b-part).
    bool as_v_power(long& k) const {
        if (q0_ == 0 && a_ == 1 && b_ == 0) { k = 0; return true; }
        if (q0_ == 0) return false;
        if (a_ != 0 && b_ != 0) return false;
        const Rational& m = (b_ == 0) ? a_ : b_;
        if (m <= 0) return false;
        BigInt num = boost::multiprecision::numerator(m);
        BigInt den = boost::multiprecision::denominator(m);
        long e = 0;
        if (den == 1) {
            BigInt t = num;
            while (t % q0_ == 0) { t /= q0_; ++e; }
            if (t != 1) return false;
        } else {
            if (num != 1) return false;
            BigInt t = den;
            while (t % q0_ == 0) { t /= q0_; --e; }
            if (t != 1) return false;
        }
        k = 2 * e + (b_ != 0 ? 1 : 0);
        // recheck: vpow handles the negative-odd offset
        return vpow(k, q0_) == *this;
    }

private:
    static void require_prime(int q0) {
        if (!is_supported_prime(q0))
            throw std::invalid_argument("q0 must be one of {2,3,5,7}, got " + std::to_string(q0));
    }
    static Rational int_pow(int base, long e) {
        Rational r = 1;
        for (long i = 0; i < e; ++i) r *= base;
        return r;
    }
    static int merge_q0(const ExactScalar& x, const ExactScalar& y) {
        if (x.q0_ != 0 && y.q0_ != 0 && x.q0_ != y.q0_)
            throw std::logic_error("ExactScalar: mixing different base primes");
        return x.q0_ != 0 ? x.q0_ : y.q0_;
    }
    static std::string rat_str(const Rational& r) {
        std::string s = boost::multiprecision::numerator(r).str();
        if (boost::multiprecision::denominator(r) != 1)
            s += "/" + boost::multiprecision::denominator(r).str();
        return s;
    }
    void normalize() {
        if (b_ == 0) q0_ = 0;
        else require_prime(q0_);
    }

    Rational a_, b_;
    int q0_; // 0 while the sqrt part is untouched
};

} // namespace qca
