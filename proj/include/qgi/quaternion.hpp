#pragma once

#include <string>

#include "qgi/rational.hpp"

namespace qgi {

/// Quaternion over exact rationals: w + x*i + y*j + z*k with
/// i^2 = j^2 = k^2 = ijk = -1. Values are immutable in spirit: all
/// operations return fresh values and never mutate their operands, so
/// concurrent reads are safe.
class Quaternion {
public:
    Quaternion() : w_(0), x_(0), y_(0), z_(0) {}
    // Components are brought to lowest terms; a zero denominator is rejected.
    Quaternion(Rational w, Rational x, Rational y, Rational z)
        : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
        canonicalize_components();
    }
    explicit Quaternion(long real) : w_(real), x_(0), y_(0), z_(0) {}
    explicit Quaternion(const Rational& real) : w_(real), x_(0), y_(0), z_(0) {
        canonicalize_components();
    }

    static Quaternion i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static Quaternion j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static Quaternion k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

    const Rational& w() const { return w_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Rational& z() const { return z_; }

    bool is_zero() const;
    bool is_real() const;
    // True when the j and k parts vanish (value lies in the complex subfield).
    bool is_complex() const;

    Quaternion conjugate() const;
    // w^2 + x^2 + y^2 + z^2; zero iff the quaternion is zero.
    Rational norm2() const;
    // Multiplicative inverse conj(q)/norm2(q). Throws DivisionByZero on zero.
    Quaternion inverse() const;

    Quaternion operator-() const;
    Quaternion& operator+=(const Quaternion& rhs);
    Quaternion& operator-=(const Quaternion& rhs);
    Quaternion& operator*=(const Quaternion& rhs);

    friend Quaternion operator+(Quaternion lhs, const Quaternion& rhs) { return lhs += rhs; }
    friend Quaternion operator-(Quaternion lhs, const Quaternion& rhs) { return lhs -= rhs; }
    // Hamilton product; not commutative.
    friend Quaternion operator*(Quaternion lhs, const Quaternion& rhs) { return lhs *= rhs; }

    Quaternion operator*(const Rational& scalar) const;
    Quaternion operator/(const Rational& scalar) const;

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    // Human-readable form like "1 - 1/2i + k"; "0" for zero.
    std::string str() const;

private:
    void canonicalize_components();

    Rational w_, x_, y_, z_;
};

inline Quaternion conj(const Quaternion& q) { return q.conjugate(); }

} // namespace qgi
