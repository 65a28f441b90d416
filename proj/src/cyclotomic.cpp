#include "sct/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sct {

namespace {

// exact division of integer polynomials, num /= den (den monic)
std::vector<BigInt> poly_div_exact(const std::vector<BigInt>& num,
                                   const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<BigInt> quot(dn - dd + 1, BigInt(0));
    for (int k = dn; k >= dd; --k) {
        BigInt q = rem[k]; // den monic
        quot[k - dd] = q;
        if (q == 0) continue;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= q * den[i];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return quot;
}

std::map<int, std::vector<BigInt>>& phi_cache() {
    static std::map<int, std::vector<BigInt>> cache;
    return cache;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(num)).first->second;
}

Cyclotomic Cyclotomic::from_rational(const Rational& q) {
    Cyclotomic z;
    z.n_ = 1;
    z.c_.assign(1, q);
    return z;
}

Cyclotomic Cyclotomic::from_raw(int n, const std::vector<Rational>& raw) {
    const auto& phi = cyclotomic_polynomial(n);
    int deg = (int)phi.size() - 1;
    // fold indices mod n (zeta^n = 1), then reduce modulo Phi_n
    std::vector<Rational> work(n, Rational(0));
    for (size_t i = 0; i < raw.size(); ++i) work[i % n] += raw[i];
    for (int k = n - 1; k >= deg; --k) {
        if (work[k] == 0) continue;
        Rational q = work[k];
        for (int i = 0; i <= deg; ++i) work[k - deg + i] -= q * Rational(phi[i]);
    }
    Cyclotomic z;
    z.n_ = n;
    z.c_.assign(work.begin(), work.begin() + deg);
    return z;
}

Cyclotomic Cyclotomic::root(int n, long k) {
    long kk = ((k % n) + n) % n;
    std::vector<Rational> raw(n, Rational(0));
    raw[kk] = 1;
    return from_raw(n, raw);
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::logic_error("cyclotomic value is not rational");
    return c_[0];
}

bool Cyclotomic::is_nonneg_integer() const {
    return is_rational() && is_integer(c_[0]) && c_[0] >= 0;
}

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("cyclotomic lift: order does not divide target");
    int e = m / n_;
    std::vector<Rational> raw(m, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) raw[(k * e) % m] += c_[k];
    return from_raw(m, raw);
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> raw(n_, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) raw[(k * (n_ - 1)) % n_] += c_[k];
    return from_raw(n_, raw);
}

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
    Cyclotomic z = *this;
    for (auto& c : z.c_) c *= q;
    return z;
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = 0; k < c_.size(); ++k) {
        double a = 2.0 * M_PI * (double)k / (double)n_;
        acc += c_[k].get_d() * std::complex<double>(std::cos(a), std::sin(a));
    }
    return acc;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    std::vector<Rational> raw(2 * x.c_.size(), Rational(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] == 0) continue;
            raw[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return Cyclotomic::from_raw(m, raw);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rational q = c_[k];
        if (first) {
            if (q < 0) { out << "-"; q = -q; }
        } else {
            out << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        bool unit = (q == 1);
        if (k == 0) {
            out << q.get_str();
        } else {
            if (!unit) out << q.get_str() << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

Cyclotomic Cyclotomic::parse(int n, const std::string& s) {
    std::vector<Rational> raw(n, Rational(0));
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    bool any = false;
    int sign = 1;
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { sign = s[i] == '-' ? -1 : 1; ++i; }
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        // term: [coef][*][z[^k]]
        std::string num;
        while (i < s.size() && (isdigit((unsigned char)s[i]) || s[i] == '/')) num += s[i++];
        Rational coef = num.empty() ? Rational(1) : parse_rational(num);
        skip_ws();
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        long power = 0;
        if (i < s.size() && s[i] == 'z') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && isdigit((unsigned char)s[i])) e += s[i++];
                if (e.empty()) throw std::invalid_argument("bad cyclotomic string: " + s);
                power = std::stol(e);
            }
        } else if (num.empty()) {
            throw std::invalid_argument("bad cyclotomic string: " + s);
        }
        raw[power % n] += sign * coef;
        any = true;
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] == '+') sign = 1;
        else if (s[i] == '-') sign = -1;
        else throw std::invalid_argument("bad cyclotomic string: " + s);
        ++i;
    }
    if (!any) throw std::invalid_argument("empty cyclotomic string");
    return from_raw(n, raw);
}

} // namespace sct
