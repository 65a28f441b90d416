// Dixon's algorithm: simultaneous eigenvectors of the class-sum matrices over
// GF(l) with l = 1 (mod exponent), l > 2 sqrt|G|, then exact cyclotomic lift
// through the fixed embedding zeta_e -> (smallest primitive root)^((l-1)/e).
#include "sct/class_function.hpp"
#include "sct/fp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sct {

namespace {

long powmod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

long invmod(long a, long m) { return powmod(((a % m) + m) % m, m - 2, m); }

long smallest_primitive_root(long l) {
    std::vector<long> prime_factors;
    long m = l - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long w = 2; w < l; ++w) {
        bool ok = true;
        for (long q : prime_factors)
            if (powmod(w, (l - 1) / q, l) == 1) { ok = false; break; }
        if (ok) return w;
    }
    throw std::logic_error("no primitive root found");
}

struct Ml {
    int rows = 0, cols = 0;
    std::vector<long> a;
    Ml() = default;
    Ml(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    long& at(int r, int c) { return a[(size_t)r * cols + c]; }
    long at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

Ml mulm(const Ml& x, const Ml& y, long l) {
    Ml r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % l;
        }
    return r;
}

// solves B X = C for X, B with full column rank
Ml solve_in_basis(const Ml& b, const Ml& c, long l) {
    int k = b.rows, m = b.cols;
    Ml work(k, m + c.cols);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m; ++j) work.at(i, j) = b.at(i, j);
        for (int j = 0; j < c.cols; ++j) work.at(i, m + j) = c.at(i, j);
    }
    int row = 0;
    std::vector<int> pivot_row_of_col(m, -1);
    for (int col = 0; col < m && row < k; ++col) {
        int pr = -1;
        for (int r = row; r < k; ++r)
            if (work.at(r, col) % l != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (int j = 0; j < work.cols; ++j) std::swap(work.at(pr, j), work.at(row, j));
        long s = invmod(work.at(row, col), l);
        for (int j = 0; j < work.cols; ++j) work.at(row, j) = (work.at(row, j) * s) % l;
        for (int r = 0; r < k; ++r) {
            if (r == row) continue;
            long f = work.at(r, col) % l;
            if (!f) continue;
            for (int j = 0; j < work.cols; ++j)
                work.at(r, j) = (work.at(r, j) + (l - f) * work.at(row, j)) % l;
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    Ml x(m, c.cols);
    for (int col = 0; col < m; ++col) {
        if (pivot_row_of_col[col] < 0) throw std::logic_error("basis matrix not full rank");
        for (int j = 0; j < c.cols; ++j) x.at(col, j) = work.at(pivot_row_of_col[col], m + j);
    }
    return x;
}

std::vector<long> charpoly(Ml h, long l) {
    int m = h.rows;
    // similarity reduction to upper Hessenberg
    for (int j = 0; j + 2 < m; ++j) {
        int pr = -1;
        for (int r = j + 1; r < m; ++r)
            if (h.at(r, j) % l != 0) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != j + 1) {
            for (int c = 0; c < m; ++c) std::swap(h.at(pr, c), h.at(j + 1, c));
            for (int r = 0; r < m; ++r) std::swap(h.at(r, pr), h.at(r, j + 1));
        }
        long piv_inv = invmod(h.at(j + 1, j), l);
        for (int r = j + 2; r < m; ++r) {
            long f = (h.at(r, j) * piv_inv) % l;
            if (!f) continue;
            for (int c = 0; c < m; ++c) h.at(r, c) = (h.at(r, c) + (l - f) * h.at(j + 1, c)) % l;
            for (int r2 = 0; r2 < m; ++r2)
                h.at(r2, j + 1) = (h.at(r2, j + 1) + f * h.at(r2, r)) % l;
        }
    }
    // leading-minor recurrence for Hessenberg matrices
    std::vector<std::vector<long>> p(m + 1);
    p[0] = {1};
    for (int r = 1; r <= m; ++r) {
        std::vector<long> cur(r + 1, 0);
        long diag = h.at(r - 1, r - 1) % l;
        for (int t = 0; t < r; ++t) {
            cur[t + 1] = (cur[t + 1] + p[r - 1][t]) % l;
            cur[t] = (cur[t] + (l - diag) * p[r - 1][t]) % l;
        }
        long subprod = 1;
        for (int i = 1; i <= r - 1; ++i) {
            subprod = (subprod * h.at(r - i, r - i - 1)) % l;
            long coef = (h.at(r - 1 - i, r - 1) * subprod) % l;
            if (!coef) continue;
            for (int t = 0; t <= r - 1 - i; ++t)
                cur[t] = (cur[t] + (l - coef) * p[r - 1 - i][t] % l) % l;
        }
        p[r] = std::move(cur);
    }
    return p[m];
}

std::vector<long> poly_roots(const std::vector<long>& poly, long l) {
    std::vector<long> roots;
    for (long mu = 0; mu < l; ++mu) {
        long acc = 0;
        for (int t = (int)poly.size() - 1; t >= 0; --t) acc = (acc * mu + poly[t]) % l;
        if (acc == 0) roots.push_back(mu);
    }
    return roots;
}

std::vector<std::vector<long>> kernel_mod(const Ml& m0, long l) {
    Ml work = m0;
    int rows = work.rows, cols = work.cols;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (work.at(r, col) % l != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(work.at(pr, j), work.at(row, j));
        long s = invmod(work.at(row, col), l);
        for (int j = 0; j < cols; ++j) work.at(row, j) = (work.at(row, j) * s) % l;
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            long f = work.at(r, col) % l;
            if (!f) continue;
            for (int j = 0; j < cols; ++j)
                work.at(r, j) = (work.at(r, j) + (l - f) * work.at(row, j)) % l;
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<long>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<long> v(cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (l - work.at((int)r, free)) % l;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

CharacterTable dixon_table(const Group& g) {
    CharacterTable out;
    out.g = &g;
    const auto& cc = g.classes();
    int k = cc.count();
    long n = (long)g.n;
    long e = g.exponent();
    out.n = (int)e;

    if (g.n == 1) {
        out.irr = {trivial_character(g)};
        return out;
    }

    long lo = (long)std::floor(2.0 * std::sqrt((double)n));
    long l = 0;
    for (long cand = e + 1;; cand += e) {
        if (cand > 1000000)
            throw std::runtime_error("dixon: no auxiliary prime below 10^6");
        if (cand > lo && is_prime(cand)) { l = cand; break; }
    }
    long w = smallest_primitive_root(l);
    long ze = powmod(w, (l - 1) / e, l);

    // class algebra structure constants a[i][j][kk]
    std::vector<std::vector<std::vector<long>>> a(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int kk = 0; kk < k; ++kk) {
        uint32_t z = cc.rep[kk];
        for (uint32_t x = 0; x < g.n; ++x) {
            uint32_t y = g.mul(g.inv(x), z);
            a[cc.class_of[x]][cc.class_of[y]][kk] += 1;
        }
    }

    // split the common eigenspaces
    std::vector<Ml> spaces;
    {
        Ml full(k, k);
        for (int i = 0; i < k; ++i) full.at(i, i) = 1;
        spaces.push_back(full);
    }
    for (int i = 0; i < k; ++i) {
        bool all_split = std::all_of(spaces.begin(), spaces.end(),
                                     [](const Ml& b) { return b.cols == 1; });
        if (all_split) break;
        Ml mi(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) mi.at(r, c) = a[i][r][c] % l;
        std::vector<Ml> next;
        for (const Ml& b : spaces) {
            if (b.cols == 1) {
                next.push_back(b);
                continue;
            }
            Ml mb = mulm(mi, b, l);
            Ml x = solve_in_basis(b, mb, l);
            auto poly = charpoly(x, l);
            auto roots = poly_roots(poly, l);
            int dim_sum = 0;
            for (long mu : roots) {
                Ml shifted = x;
                for (int d = 0; d < x.rows; ++d) shifted.at(d, d) = (shifted.at(d, d) + l - mu) % l;
                auto ker = kernel_mod(shifted, l);
                if (ker.empty()) continue;
                Ml nb(k, (int)ker.size());
                for (size_t kc = 0; kc < ker.size(); ++kc)
                    for (int r = 0; r < k; ++r) {
                        long acc = 0;
                        for (int c = 0; c < b.cols; ++c) acc = (acc + b.at(r, c) * ker[kc][c]) % l;
                        nb.at(r, (int)kc) = acc;
                    }
                dim_sum += nb.cols;
                next.push_back(std::move(nb));
            }
            if (dim_sum != b.cols) throw std::logic_error("dixon: eigenspace split lost dimensions");
        }
        spaces = std::move(next);
    }
    if ((int)spaces.size() != k)
        throw std::logic_error("dixon: class matrices did not separate eigenvectors");

    int idc = cc.class_of[g.id];
    std::vector<long> csize(k), csize_inv(k);
    for (int c = 0; c < k; ++c) {
        csize[c] = (long)cc.members[c].size();
        csize_inv[c] = invmod(csize[c] % l, l);
    }
    std::vector<int> inv_class(k);
    for (int c = 0; c < k; ++c) inv_class[c] = cc.class_of[g.inv(cc.rep[c])];

    // per-class power maps for the lifting step
    std::vector<int> ord(k);
    std::vector<std::vector<int>> pow_class(k);
    for (int c = 0; c < k; ++c) {
        ord[c] = g.element_order(cc.rep[c]);
        pow_class[c].resize(ord[c]);
        for (int t = 0; t < ord[c]; ++t)
            pow_class[c][t] = cc.class_of[g.power(cc.rep[c], t)];
    }

    long sqrt_n = (long)std::floor(std::sqrt((double)n) + 0.5);
    while (sqrt_n * sqrt_n > n) --sqrt_n;

    std::vector<ClassFunction> irr;
    for (const Ml& b : spaces) {
        std::vector<long> omega(k);
        long norm = b.at(idc, 0) % l;
        if (norm == 0) throw std::logic_error("dixon: eigenvector vanishes at identity class");
        long ninv = invmod(norm, l);
        for (int c = 0; c < k; ++c) omega[c] = (b.at(c, 0) * ninv) % l;

        long s = 0;
        for (int c = 0; c < k; ++c)
            s = (s + omega[c] * omega[inv_class[c]] % l * csize_inv[c]) % l;
        long t = (n % l) * invmod(s, l) % l;
        long deg = 0;
        for (long d = 1; d <= sqrt_n + 1; ++d)
            if ((d * d) % l == t) { deg = d; break; }
        if (!deg) throw std::logic_error("dixon: degree recovery failed");

        std::vector<long> chat(k);
        for (int c = 0; c < k; ++c) chat[c] = deg % l * omega[c] % l * csize_inv[c] % l;

        ClassFunction chi;
        chi.g = &g;
        chi.v.resize(k);
        for (int c = 0; c < k; ++c) {
            int m = ord[c];
            long zm = powmod(ze, e / m, l);
            long zm_inv = invmod(zm, l);
            long minv = invmod(m % l, l);
            std::vector<Rational> raw((size_t)e, Rational(0));
            for (int j = 0; j < m; ++j) {
                long acc = 0;
                for (int tt = 0; tt < m; ++tt)
                    acc = (acc + chat[pow_class[c][tt]] * powmod(zm_inv, (long)j * tt % m, l)) % l;
                long mult = acc * minv % l;
                if (mult >= l / 2 + 1)
                    throw std::logic_error("dixon: root-of-unity multiplicity out of range");
                raw[(size_t)((long)j * (e / m) % e)] += Rational(mult);
            }
            chi.v[c] = Cyclotomic::from_raw((int)e, raw);
        }
        irr.push_back(std::move(chi));
    }

    std::sort(irr.begin(), irr.end(), [&](const ClassFunction& x, const ClassFunction& y) {
        int cx = Cyclotomic::compare(x.v[idc], y.v[idc]);
        if (cx != 0) return cx < 0;
        for (int c = 0; c < k; ++c) {
            int cmp = Cyclotomic::compare(x.v[c], y.v[c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    out.irr = std::move(irr);

    // exact sanity: both orthogonality relations and the degree sum
    Cyclotomic degsum;
    for (int i = 0; i < k; ++i) {
        degsum += out.irr[i].v[idc] * out.irr[i].v[idc];
        for (int j = i; j < k; ++j) {
            Cyclotomic ip = inner_product(out.irr[i], out.irr[j]);
            if (!(ip == Cyclotomic::integer(i == j ? 1 : 0)))
                throw AxiomError("dixon: row orthogonality failed");
        }
    }
    if (!(degsum == Cyclotomic::integer(n))) throw AxiomError("dixon: degree sum mismatch");
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = 0; c2 < k; ++c2) {
            Cyclotomic acc;
            for (int i = 0; i < k; ++i) acc += out.irr[i].v[c1] * out.irr[i].v[c2].conj();
            long expect = (c1 == c2) ? n / csize[c1] : 0;
            if (!(acc == Cyclotomic::integer(expect)))
                throw AxiomError("dixon: column orthogonality failed");
        }
    return out;
}

} // namespace sct
