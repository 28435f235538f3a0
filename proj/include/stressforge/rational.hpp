#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "stressforge/error.hpp"

namespace stressforge {

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// every operation in the library is exact, there is no rounding anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw Error(ErrorKind::Schema, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw Error(ErrorKind::Schema, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Rejects anything else (floats in particular).
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorKind::Schema, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// "p/q" for non-integers, plain "p" otherwise.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::Schema, "empty rational literal");
    for (char c : text) {
        if (c == '.' || c == 'e' || c == 'E')
            throw Error(ErrorKind::FloatRejected,
                        "floating point literal rejected: \"" + text + "\"");
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw Error(ErrorKind::Schema, "bad rational literal: \"" + text + "\"");
    }
    try {
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw Error(ErrorKind::Schema, "zero denominator: \"" + text + "\"");
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Schema, "bad rational literal: \"" + text + "\"");
    }
}

using RationalVec = std::vector<Rational>;

inline Rational dot(const RationalVec& a, const RationalVec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// 2x2 determinant of column vectors (a, b).
inline Rational det2(const Rational& ax, const Rational& ay,
                     const Rational& bx, const Rational& by) {
    return ax * by - ay * bx;
}

} // namespace stressforge
