#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gbl/rational.hpp"

namespace gbl {

// Exact element of Q(zeta_M)[1/sqrt(M)]: value = (sum_j c_j w^j) / sqrt(M)^k
// with rational c_j and w = exp(2*pi*i/M).
//
// Canonical form (unique per value on all reachable inputs):
//  - the coefficient polynomial is reduced modulo the M-th cyclotomic
//    polynomial, so only the first phi(M) entries may be nonzero; the vector
//    is stored padded to length M,
//  - k is reduced to {0,1} by absorbing sqrt(M)^2 = M into the coefficients,
//  - for perfect-square M, sqrt(M) itself is absorbed (k is always 0),
//  - for M = 1 (mod 4), sqrt(M) lies in Q(zeta_M) as the Gauss sum
//    g = sum_j w^(j^2); k=1 values are folded to k=0 via multiplication by
//    g/M (validated exactly by g^2 = M),
//  - zero always has k = 0.
//
// For M = 2,3 (mod 4) sqrt(M) is not an element of Q(zeta_M), so k=0 and k=1
// values are genuinely distinct; adding values of mismatched k in those
// fields has no representation here and throws "incompatible-radicals".
// Values of different orders combine only when both have k = 0 (promotion to
// the lcm order); no in-scope computation mixes radicals across orders.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), k_(0), coeffs_(1, Rational(0)) {}

    static Cyclotomic zero(int order) { return Cyclotomic(order); }
    static Cyclotomic one(int order) { return from_rational(Rational(1), order); }
    static Cyclotomic from_rational(const Rational& q, int order = 1);
    static Cyclotomic from_int(long v, int order = 1) { return from_rational(Rational(v), order); }
    // w_order^power
    static Cyclotomic root_power(int order, long power);
    // 1 / sqrt(order)^k, k >= 0
    static Cyclotomic inv_sqrt_order(int order, int k);
    // sqrt(order)
    static Cyclotomic sqrt_order(int order);
    // raw constructor from coefficients (canonicalizes)
    static Cyclotomic make(int order, std::vector<Rational> coeffs, int sqrt_power);

    int order() const { return order_; }
    int sqrt_power() const { return k_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const { return *this == one(order_); }
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    Cyclotomic conj() const;       // complex conjugate (w^j -> w^-j)
    Cyclotomic inverse() const;    // exact field inverse; throws on zero
    Cyclotomic promoted(int target_order) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    std::complex<double> to_complex() const;

    // Canonical machine form, e.g. "cyc(3;1;1/3,0,-2)"; parse() inverts it.
    std::string str() const;
    static Cyclotomic parse(const std::string& text);
    // Human-oriented form, e.g. "(1-2w)/sqrt3" or "w^2".
    std::string pretty() const;

private:
    explicit Cyclotomic(int order);
    void canonicalize();

    int order_;
    int k_;
    std::vector<Rational> coeffs_;  // length == order_, ascending powers of w
};

// Cyclotomic polynomial Phi_M, monic, ascending rational coefficients.
const std::vector<Rational>& cyclotomic_polynomial(int order);

}  // namespace gbl
