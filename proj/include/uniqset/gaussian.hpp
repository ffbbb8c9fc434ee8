#pragma once

#include "uniqset/rational.hpp"

namespace uniqset {

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(Rational r) : re(std::move(r)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianRational conj() const { return {re, Rational(-im)}; }

    /// |z|^2, exact.
    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const GaussianRational& a, const Rational& s) {
        return {a.re * s, a.im * s};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm_sq();
        if (sgn(n) == 0) throw DivisionByZero();
        GaussianRational u = a * b.conj();
        return {u.re / n, u.im / n};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string to_string(const GaussianRational& z) {
    return to_string(z.re) + (sgn(z.im) < 0 ? "" : "+") + to_string(z.im) + "i";
}

}  // namespace uniqset
