// Finite-dimensional nilpotent associative algebra J over GF(p), the algebra
// group U = 1 + J and linear forms on J.
//
// Elements of J and of J* are plain Vec coordinates in the basis e_1..e_d
// (resp. its dual). An element of U is stored as the coordinates of x in
// u = 1 + x.
#pragma once

#include "sct/gfp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sct {

struct NilpotentAlgebra {
    int p = 2;
    int dim = 0;
    // e_i * e_j = sum_k coeff * e_k, sparse per (i,j)
    std::vector<std::vector<std::vector<std::pair<int, int>>>> mult;
    int nil_class = 1; // least m with J^m = 0

    uint64_t usize() const { return pow_u64(p, dim); }
    Vec zero() const { return Vec(p, dim); }
    Vec basis_vec(int i) const {
        Vec v(p, dim);
        v.c[i] = 1;
        return v;
    }

    // validates associativity on all basis triples and nilpotency; throws on
    // failure and records nil_class on success
    void validate();

    Vec j_mul(const Vec& x, const Vec& y) const;

    // (1+x)(1+y) = 1 + x + y + xy
    Vec u_mul(const Vec& x, const Vec& y) const;
    // inv(1+x) = 1 + sum_{k>=1} (-x)^k
    Vec u_inv(const Vec& x) const;

    // all p^dim elements of U in lexicographic coordinate order
    std::vector<Vec> enumerate_u(uint64_t budget) const;

    // matrices of x -> y*x and x -> x*y
    Mat left_mult_matrix(const Vec& y) const;
    Mat right_mult_matrix(const Vec& y) const;
};

// form evaluation: lambda(x)
inline int form_eval(const Vec& lambda, const Vec& x) { return dot(lambda, x); }

// JSON definition file: { "p": int, "dim": int, "mult": [[[ [k, coeff], ...] ...]] }
NilpotentAlgebra algebra_from_json_text(const std::string& text);
NilpotentAlgebra algebra_from_json_file(const std::string& path);
std::string algebra_to_json_text(const NilpotentAlgebra& j);

// convenience builders
NilpotentAlgebra zero_algebra(int p, int dim);          // all products zero
NilpotentAlgebra strictly_upper_triangular(int p, int n); // J of UT(n, F_p)

} // namespace sct
