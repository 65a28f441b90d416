// The algebra group extension G = L x| U with U = 1 + J.
//
// L is a finite group equipped with commuting left/right actions on J
// (condition 1-2 of the construction, validated at build time). G elements
// are normal forms h*(1+x); the index of (h, x) is h*|U| + code(x), so the
// element order is the canonical key order (L key, then u coordinates).
//
// Action conventions used everywhere:
//   on J:  g*x = h(u x),  x*g = (x h)u          (left / right)
//   on J*: (g mu)(x) = mu(x g),  (mu g)(x) = mu(g x)
//   coadjoint: Ad*_h mu = mu o Ad_{h^-1},  Ad_h x = h x h^{-1}
#pragma once

#include "sct/group.hpp"
#include "sct/nilpotent_algebra.hpp"

#include <vector>

namespace sct {

struct LAction {
    Mat left;  // matrix of x -> h*x on J
    Mat right; // matrix of x -> x*h on J
};

struct ExtensionGroup {
    NilpotentAlgebra J;
    Group L;
    std::vector<LAction> lact;   // per L element
    std::vector<int> l_gens;     // generator indices of L
    std::vector<Mat> l_mats;     // concrete matrices when parabolic (else empty)
    int n_amb = 0;               // ambient matrix size for parabolic L (else 0)

    uint64_t usize = 1;
    Group G;
    std::vector<Mat> act_left;   // per G element: x -> g*x
    std::vector<Mat> act_right;  // per G element: x -> x*g

    uint32_t gindex(uint32_t l, uint64_t ucode) const { return (uint32_t)(l * usize + ucode); }
    uint32_t lpart(uint32_t g) const { return (uint32_t)(g / usize); }
    uint64_t upart(uint32_t g) const { return g % usize; }
    Vec uvec(uint32_t g) const { return decode(upart(g), J.p, J.dim); }
    uint32_t identity() const { return G.id; }

    Mat ad_mat(uint32_t l) const;              // x -> h x h^{-1}
    Vec coad(uint32_t l, const Vec& mu) const; // Ad*_h(mu)
    Vec form_left(uint32_t g, const Vec& mu) const;
    Vec form_right(const Vec& mu, uint32_t g) const;

    std::vector<uint32_t> u_elements() const;  // as G indices
    std::vector<uint32_t> l_elements() const;  // as G indices

    // subgroup of G from a subgroup of L paired with a subalgebra of J
    std::vector<uint32_t> mixed_subgroup(const std::vector<uint32_t>& l_subset,
                                         const std::vector<uint64_t>& u_codes) const;
};

// Builds and validates the extension. The action conditions h(xy) = (hx)y,
// (xy)h = x(yh), x(hy) = (xh)y and commutation of the two actions are checked
// on all basis pairs for every element of L.
ExtensionGroup build_extension(NilpotentAlgebra j, Group l, std::vector<LAction> lact,
                               std::vector<int> l_gens, std::vector<Mat> l_mats, int n_amb,
                               uint64_t budget = kDefaultBudget,
                               uint64_t group_budget = kDefaultGroupBudget);

// G = U for a bare algebra group (trivial L)
ExtensionGroup algebra_group_extension(NilpotentAlgebra j, uint64_t budget = kDefaultBudget,
                                       uint64_t group_budget = kDefaultGroupBudget);

} // namespace sct
