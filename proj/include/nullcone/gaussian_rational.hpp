#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "nullcone/errors.hpp"

namespace nullcone {

using Rational = mpq_class;

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
/// Both parts are kept reduced (positive denominator, gcd 1) by GMP.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long value) : re_(value), im_(0) {} // NOLINT: implicit for literals
    explicit GaussianRational(Rational re) : re_(std::move(re)), im_(0) { canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Parses the scalar text form: `a/b`, `c/d*i`, `a/b+c/d*i`, `i`, `-i`, `0`, ...
    static GaussianRational parse(const std::string& text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, Rational(-im_)}; }

    /// re^2 + im^2 (a nonnegative rational, zero iff the value is zero).
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw DomainError("division by zero in Q(i)");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Canonical text form; parse(str()) round-trips exactly.
    std::string str() const;

private:
    void canonicalize() {
        re_.canonicalize();
        im_.canonicalize();
    }

    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool sqrt_exact(const Rational& value, Rational& root);

} // namespace nullcone
