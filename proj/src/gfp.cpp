#include "sct/gfp.hpp"

#include <algorithm>
#include <stdexcept>

namespace sct {

bool Vec::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](uint8_t x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < r.dim(); ++i) r.c[i] = (uint8_t)((a.c[i] + b.c[i]) % a.p);
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < r.dim(); ++i) r.c[i] = (uint8_t)((a.c[i] + a.p - b.c[i]) % a.p);
    return r;
}

Vec scale(const Vec& a, int s) {
    s %= a.p;
    if (s < 0) s += a.p;
    Vec r = a;
    for (int i = 0; i < r.dim(); ++i) r.c[i] = (uint8_t)((a.c[i] * s) % a.p);
    return r;
}

int dot(const Vec& a, const Vec& b) {
    int acc = 0;
    for (int i = 0; i < a.dim(); ++i) acc += a.c[i] * b.c[i];
    return acc % a.p;
}

uint64_t encode(const Vec& v) {
    uint64_t code = 0;
    for (int i = 0; i < v.dim(); ++i) code = code * v.p + v.c[i];
    return code;
}

Vec decode(uint64_t code, int p, int dim) {
    Vec v(p, dim);
    for (int i = dim - 1; i >= 0; --i) {
        v.c[i] = (uint8_t)(code % p);
        code /= p;
    }
    return v;
}

uint64_t pow_u64(uint64_t b, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Mat Mat::identity(int prime, int n) {
    Mat m(prime, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::string Mat::key() const {
    std::string s;
    s.reserve(a.size());
    for (uint8_t x : a) s += (char)('0' + x);
    return s;
}

Mat mul(const Mat& a, const Mat& b) {
    Mat r(a.p, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = (uint8_t)((r.at(i, j) + v * b.at(k, j)) % a.p);
        }
    return r;
}

Vec apply(const Mat& m, const Vec& v) {
    Vec r(m.p, m.rows);
    for (int i = 0; i < m.rows; ++i) {
        int acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v.c[j];
        r.c[i] = (uint8_t)(acc % m.p);
    }
    return r;
}

Mat transpose(const Mat& m) {
    Mat r(m.p, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Mat add(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = (uint8_t)((a.a[i] + b.a[i]) % a.p);
    return r;
}

Mat sub(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = (uint8_t)((a.a[i] + a.p - b.a[i]) % a.p);
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        int s = inv_mod(m.at(row, col), m.p);
        for (int j = 0; j < m.cols; ++j) m.at(row, j) = (uint8_t)((m.at(row, j) * s) % m.p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            int f = m.at(r, col);
            if (!f) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(r, j) = (uint8_t)((m.at(r, j) + (m.p - f) * m.at(row, j)) % m.p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return (int)rref(m).size(); }

bool try_inverse(const Mat& m, Mat& out) {
    if (m.rows != m.cols) return false;
    int n = m.rows;
    Mat work(m.p, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) work.at(i, j) = m.at(i, j);
        work.at(i, n + i) = 1;
    }
    auto piv = rref(work);
    if ((int)piv.size() != n || piv[n - 1] != n - 1) return false;
    out = Mat(m.p, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = work.at(i, n + j);
    return true;
}

Mat inverse(const Mat& m) {
    Mat out;
    if (!try_inverse(m, out)) throw std::domain_error("matrix not invertible");
    return out;
}

std::vector<Vec> kernel_basis(const Mat& m) {
    Mat work = m;
    auto pivots = rref(work);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.p, m.cols);
        v.c[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            int val = work.at((int)r, free);
            v.c[pivots[r]] = (uint8_t)((m.p - val) % m.p);
        }
        basis.push_back(v);
    }
    return basis;
}

Vec SpanBasis::reduce(const Vec& v) const {
    Vec w = v;
    for (size_t i = 0; i < rows.size(); ++i) {
        int f = w.c[pivots[i]];
        if (f) w = sub(w, scale(rows[i], f));
    }
    return w;
}

bool SpanBasis::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool SpanBasis::insert(const Vec& v) {
    Vec w = reduce(v);
    int pc = -1;
    for (int i = 0; i < w.dim(); ++i)
        if (w.c[i]) { pc = i; break; }
    if (pc < 0) return false;
    w = scale(w, inv_mod(w.c[pc], p));
    // clear this column from existing rows, keep echelon form
    for (size_t i = 0; i < rows.size(); ++i) {
        int f = rows[i].c[pc];
        if (f) rows[i] = sub(rows[i], scale(w, f));
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < pc) ++pos;
    rows.insert(rows.begin() + pos, w);
    pivots.insert(pivots.begin() + pos, pc);
    return true;
}

std::vector<Vec> SpanBasis::enumerate() const {
    std::vector<Vec> out;
    int r = rank();
    uint64_t total = pow_u64(p, r);
    out.reserve(total);
    for (uint64_t code = 0; code < total; ++code) {
        Vec coef = decode(code, p, r);
        Vec v(p, dim);
        for (int i = 0; i < r; ++i)
            if (coef.c[i]) v = add(v, scale(rows[i], coef.c[i]));
        out.push_back(v);
    }
    return out;
}

std::vector<Vec> SpanBasis::annihilator() const {
    Mat m(p, rank(), dim);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = rows[i].c[j];
    return kernel_basis(m);
}

SpanBasis max_invariant_subspace(SpanBasis w, const std::vector<Mat>& maps) {
    bool changed = true;
    while (changed && w.rank() > 0) {
        changed = false;
        for (const Mat& m : maps) {
            int r = w.rank();
            // coefficient vectors c with m * (sum c_i b_i) still inside w
            Mat cond(w.p, w.dim, r);
            for (int i = 0; i < r; ++i) {
                Vec img = w.reduce(apply(m, w.rows[i]));
                for (int j = 0; j < w.dim; ++j) cond.at(j, i) = img.c[j];
            }
            auto coef_kernel = kernel_basis(cond);
            if ((int)coef_kernel.size() == r) continue;
            SpanBasis next(w.p, w.dim);
            for (const Vec& c : coef_kernel) {
                Vec v(w.p, w.dim);
                for (int i = 0; i < r; ++i)
                    if (c.c[i]) v = add(v, scale(w.rows[i], c.c[i]));
                next.insert(v);
            }
            w = next;
            changed = true;
            if (w.rank() == 0) break;
        }
    }
    return w;
}

} // namespace sct
