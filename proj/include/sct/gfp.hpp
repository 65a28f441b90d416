// Dense vectors and matrices over GF(p) for small p and small dimensions.
// Pivoting always chooses the lowest index, so echelon bases are deterministic.
#pragma once

#include "sct/fp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sct {

struct Vec {
    int p = 2;
    std::vector<uint8_t> c;

    Vec() = default;
    Vec(int prime, int dim) : p(prime), c(dim, 0) {}
    int dim() const { return (int)c.size(); }
    bool is_zero() const;
    bool operator==(const Vec& o) const { return p == o.p && c == o.c; }
};

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, int s);
int dot(const Vec& a, const Vec& b); // in [0, p)

// big-endian digit encoding: numeric order of codes == lex order of coords
uint64_t encode(const Vec& v);
Vec decode(uint64_t code, int p, int dim);
uint64_t pow_u64(uint64_t b, int e);

struct Mat {
    int p = 2, rows = 0, cols = 0;
    std::vector<uint8_t> a; // row-major

    Mat() = default;
    Mat(int prime, int r, int c) : p(prime), rows(r), cols(c), a((size_t)r * c, 0) {}
    static Mat identity(int prime, int n);
    uint8_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
    uint8_t at(int r, int c) const { return a[(size_t)r * cols + c]; }
    bool operator==(const Mat& o) const {
        return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
    }
    std::string key() const; // entries as digits, row-major
};

Mat mul(const Mat& a, const Mat& b);
Vec apply(const Mat& m, const Vec& v);      // m * v
Mat transpose(const Mat& m);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);

// reduced row echelon form in place; returns pivot column list
std::vector<int> rref(Mat& m);
int rank(Mat m);
Mat inverse(const Mat& m);                  // throws if singular
bool try_inverse(const Mat& m, Mat& out);
std::vector<Vec> kernel_basis(const Mat& m); // right kernel, echelon form

// Row-span structure with incremental insertion (deterministic echelon basis).
struct SpanBasis {
    int p = 2, dim = 0;
    std::vector<Vec> rows;      // in echelon form, pivot columns increasing
    std::vector<int> pivots;

    SpanBasis() = default;
    SpanBasis(int prime, int d) : p(prime), dim(d) {}
    int rank() const { return (int)rows.size(); }
    // reduces v against the basis; if a nonzero remainder is left, inserts it
    // and returns true
    bool insert(const Vec& v);
    bool contains(const Vec& v) const;
    Vec reduce(const Vec& v) const;
    // all p^rank member vectors of the span (coordinates in the ambient space)
    std::vector<Vec> enumerate() const;
    // vectors x with r * x = 0 for all rows r
    std::vector<Vec> annihilator() const;
};

// largest subspace of w mapped into itself by every map (iterated shrinking)
SpanBasis max_invariant_subspace(SpanBasis w, const std::vector<Mat>& maps);

} // namespace sct
