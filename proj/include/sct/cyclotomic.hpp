// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value of order N is stored as the canonical remainder modulo the N-th
// cyclotomic polynomial Phi_N, so two values of equal order are equal iff
// their coefficient vectors are equal. Binary operations on values of
// different orders lift both to Q(zeta_lcm) first.
#pragma once

#include "sct/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace sct {

// Phi_N with ascending integer coefficients (monic, degree phi(N)). Cached.
const std::vector<BigInt>& cyclotomic_polynomial(int n);

class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}

    static Cyclotomic from_rational(const Rational& q);
    static Cyclotomic integer(long v) { return from_rational(Rational(v)); }
    // zeta_N^k in canonical form
    static Cyclotomic root(int n, long k);
    // canonical remainder of sum_i raw[i] * zeta_N^i  (indices folded mod N)
    static Cyclotomic from_raw(int n, const std::vector<Rational>& raw);

    int order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;           // lies in Q
    Rational rational_value() const;    // requires is_rational()
    bool is_nonneg_integer() const;

    Cyclotomic lifted(int m) const;     // requires order() | m
    Cyclotomic conj() const;            // zeta_N -> zeta_N^{N-1}
    Cyclotomic scaled(const Rational& q) const;

    std::complex<double> approx() const; // at zeta_N = e^{2*pi*i/N}

    std::string str() const;            // polynomial string in "z"
    static Cyclotomic parse(int n, const std::string& s);

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    // deterministic total order (used only for canonical sorting)
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

private:
    int n_;
    std::vector<Rational> c_; // length deg Phi_n
};

} // namespace sct
