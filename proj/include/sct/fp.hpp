// Prime field GF(p) scalars, p a small prime. Residues live in [0, p).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sct {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Fp {
    int v = 0; // residue in [0, p)
    int p = 2; // prime modulus

    Fp() = default;
    Fp(long value, int prime) : p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("GF(p): modulus not prime");
        v = static_cast<int>(((value % prime) + prime) % prime);
    }

    bool is_zero() const { return v == 0; }
    bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
};

inline void check_same_field(const Fp& a, const Fp& b) {
    if (a.p != b.p) throw std::invalid_argument("GF(p): mixed moduli");
}

inline Fp operator+(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    return Fp(a.v + b.v, a.p);
}
inline Fp operator-(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    return Fp(a.v - b.v, a.p);
}
inline Fp operator*(const Fp& a, const Fp& b) {
    check_same_field(a, b);
    return Fp(a.v * b.v, a.p);
}
inline Fp operator-(const Fp& a) { return Fp(-a.v, a.p); }

// Modular inverse by Fermat; p is prime and small.
inline int inv_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    int r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

inline Fp inverse(const Fp& a) { return Fp(inv_mod(a.v, a.p), a.p); }

// smallest generator of the cyclic group GF(p)^*
inline int smallest_generator_mod(int p) {
    for (int g = 1; g < p; ++g) {
        int x = g, ord = 1;
        while (x != 1) {
            x = (x * g) % p;
            ++ord;
        }
        if (ord == p - 1) return g;
    }
    return 1;
}

} // namespace sct
