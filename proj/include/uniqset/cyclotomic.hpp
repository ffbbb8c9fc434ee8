#pragma once

#include <optional>
#include <vector>

#include "uniqset/gaussian.hpp"

namespace uniqset {

/**
 * Exact element of the cyclotomic field generated by e^{-2 pi i / L}.
 *
 * The representation is canonical: `order()` is the smallest L whose field
 * contains the value (the conductor), and `coeffs()` are the coordinates in
 * the power basis 1, z, ..., z^{phi(L)-1} reduced modulo the L-th cyclotomic
 * polynomial, where z = e^{-2 pi i / L}. Equal values therefore always have
 * identical order and coefficients, and zero/equality tests are plain
 * coefficient comparisons.
 */
class CyclotomicNumber {
public:
    CyclotomicNumber() : order_(1), coeffs_(1, Rational(0)) {}

    static CyclotomicNumber from_rational(const Rational& q);
    static CyclotomicNumber from_gaussian(const GaussianRational& z);

    /// Canonical form of e^{-2 pi i j / L}; the exponent is reduced mod L.
    static CyclotomicNumber root(unsigned long order, long exponent);

    unsigned long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return order_ == 1 && sgn(coeffs_[0]) == 0; }
    bool is_rational() const { return order_ == 1; }

    std::optional<Rational> to_rational() const;
    /// Value as a + bi when the conductor divides 4.
    std::optional<GaussianRational> to_gaussian() const;

    CyclotomicNumber conj() const;
    CyclotomicNumber inverse() const;

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    /// Total order compatible with equality (lexicographic on the canonical
    /// representation); used for deterministic maps, not numeric comparison.
    static int compare(const CyclotomicNumber& a, const CyclotomicNumber& b);

private:
    friend class CycloAccumulator;
    CyclotomicNumber(unsigned long order, std::vector<Rational> coeffs);

    unsigned long order_;
    std::vector<Rational> coeffs_;  // size phi(order_)
};

/**
 * Fixed-order accumulation buffer for long exact sums and dot products.
 * Values are folded into the power basis of the requested order (every
 * operand's order must divide it); canonicalization happens once in finish().
 */
class CycloAccumulator {
public:
    explicit CycloAccumulator(unsigned long order);

    /// Adds value * e^{-2 pi i shift / order}. The value's order must divide
    /// the accumulator's.
    void add_shifted(const CyclotomicNumber& value, unsigned long shift);
    void add(const CyclotomicNumber& value) { add_shifted(value, 0); }

    /// Adds scale * e^{-2 pi i exponent / order}; requires 4 | order.
    void add_scaled_root(const GaussianRational& scale, unsigned long exponent);

    CyclotomicNumber finish() const;

    /// Fast path: extracts a + bi directly from the raw buffer, without the
    /// general conductor reduction. Requires 4 | order.
    std::optional<GaussianRational> finish_as_gaussian() const;

private:
    unsigned long order_;
    std::vector<Rational> raw_;
};

unsigned long euler_phi(unsigned long n);

/// Monic cyclotomic polynomial of index n, ascending integer coefficients.
std::vector<Integer> cyclotomic_polynomial(unsigned long n);

inline std::string to_string(const CyclotomicNumber& a) {
    std::string s = "cyclo(" + std::to_string(a.order()) + ";";
    for (const auto& c : a.coeffs()) s += " " + to_string(c);
    return s + ")";
}

}  // namespace uniqset
