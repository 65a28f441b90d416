// Parabolic subgroups of GL(n, F_p) from block compositions: J-roots, rook
// placements and their classification, the stabilizers H(D) and H'(D), block
// normal forms, the root sets Delta_h / Delta'_h, and the rook-placement
// conjecture checker.
//
// Shape-level machinery works directly on n x n matrices so it scales past
// the point where the full group G could be enumerated.
#pragma once

#include "sct/actions.hpp"
#include "sct/extension_group.hpp"

#include <string>
#include <vector>

namespace sct {

struct Composition {
    int n = 0;
    std::vector<int> blocks;
    std::vector<int> block_of; // 0-based position -> block index
    std::vector<int> start;    // block index -> first position

    static Composition make(int n, std::vector<int> blocks);
    int block_count() const { return (int)blocks.size(); }
    std::string str() const;
};

struct JRoot {
    int i = 0, j = 0; // 0-based, block_of[i] < block_of[j]
    bool operator==(const JRoot& o) const { return i == o.i && j == o.j; }
    bool operator<(const JRoot& o) const { return i != o.i ? i < o.i : j < o.j; }
};

struct RookPlacement {
    std::vector<JRoot> roots; // sorted, at most one per row and per column
    // d_{km} block profile, flattened over block pairs k < m
    std::vector<int> profile(const Composition& c) const;
    std::string str() const;
};

struct ParabolicShape {
    Composition comp;
    int p = 2;
    std::vector<JRoot> roots; // basis of J, sorted by (row, col)
    std::vector<int> root_idx; // i*n + j -> basis index or -1
    NilpotentAlgebra J;

    int dim() const { return (int)roots.size(); }
    Mat to_matrix(const Vec& coords) const;  // n x n with entries at the roots
    Vec to_coords(const Mat& m) const;       // reads the root entries only
};

ParabolicShape make_shape(int n, int p, const std::vector<int>& blocks);

// x_D, u_D = 1 + x_D and lambda_D
Vec x_of(const ParabolicShape& s, const RookPlacement& d);
Vec lambda_of(const ParabolicShape& s, const RookPlacement& d);

// all invertible n x n matrices over GF(p), sorted by entry key
std::vector<Mat> gl_matrices(int n, int p, uint64_t budget = kDefaultBudget);
std::vector<Mat> gl_generators(int n, int p);
// block-diagonal L of the shape, sorted by entry key
std::vector<Mat> enumerate_block_l(const ParabolicShape& s, uint64_t budget = kDefaultBudget);
std::vector<Mat> block_l_generators(const ParabolicShape& s);

// full extension group with L enumerated; budget-guarded
ExtensionGroup build_parabolic(int n, int p, const std::vector<int>& blocks,
                               uint64_t budget = kDefaultBudget,
                               uint64_t group_budget = kDefaultGroupBudget);

std::vector<RookPlacement> all_rook_placements(const Composition& c);

struct RookClass {
    std::vector<int> profile;  // flattened d_{km}
    std::vector<int> members;  // indices into all_rook_placements order
    int rep = 0;               // canonical member (least root list)
};
std::vector<RookClass> rook_enumerate_classify(const Composition& c);

// ---- shape-level dual-space machinery (scales to large L) ----

struct DualActors {
    bool left_l = false, left_u = false, right_l = false, right_u = false;
};
DualActors dual_actors_for(Flavor f);      // orbit X lambda Y on J*
DualActors left_orbit_actors(Flavor f);    // one-sided orbit X lambda

// Ad*_h(mu) given h and h^{-1}
Vec coad_shape(const ParabolicShape& s, const Mat& h, const Mat& h_inv, const Vec& mu);

// span of the orbit <X lambda Y>
SpanBasis dual_orbit_span(const ParabolicShape& s, const Vec& lambda, DualActors a,
                          const std::vector<Mat>& l_gens);
// the orbit itself as a dense membership table over form codes
std::vector<char> dual_orbit_set(const ParabolicShape& s, const Vec& lambda, DualActors a,
                                 const std::vector<Mat>& l_gens,
                                 uint64_t budget = kDefaultBudget);

// {indices of l_elems pointwise fixing the span} -- equals H_{X lambda Y}
std::vector<int> pointwise_stabilizer_shape(const ParabolicShape& s,
                                            const std::vector<Mat>& l_elems,
                                            const SpanBasis& orbit_span);
// {indices with Ad*_h(lambda) inside the orbit} -- equals S_{X lambda Y}
std::vector<int> setwise_stabilizer_shape(const ParabolicShape& s,
                                          const std::vector<Mat>& l_elems, const Vec& lambda,
                                          const std::vector<char>& orbit_set);

// paper shape predicates for the parabolic stabilizers
bool h_of_d_contains(const ParabolicShape& s, const RookPlacement& d, const Mat& h);
bool hprime_of_d_contains(const ParabolicShape& s, const RookPlacement& d, const Mat& h);
// H(D) (prime_variant = false) or H'(D) (true) as index list into l_elems
std::vector<int> stabilizer_of_d(const ParabolicShape& s, const std::vector<Mat>& l_elems,
                                 const RookPlacement& d, bool prime_variant);

// ---- block normal forms ----

struct BlockForm {
    std::vector<std::pair<int, int>> segments; // inclusive block ranges
    std::vector<int> s;       // per segment: a-eigenrow count of the leader (-1 singleton)
    std::vector<int> a;       // per segment: the shared scalar (-1 singleton)
    Mat r;                    // conjugator, normal = Ad_r(h) = r h r^{-1}
    Mat normal;
};

// maximal decomposition with blocks in the lower block-triangular leading form
BlockForm canonical_block_form(const ParabolicShape& s, const Mat& h);
// maximal decomposition into scalar segments (every block of a segment equal)
std::vector<std::pair<int, int>> gg_scalar_coarsening(const ParabolicShape& s, const Mat& h);

// radical roots of the coarsened parabolic (roots across coarse segments)
std::vector<JRoot> coarsening_radical_roots(const ParabolicShape& s,
                                            const std::vector<std::pair<int, int>>& segments);

// Delta_h (GG) or Delta'_h (GU); for GU, h must already be in normal form
std::vector<JRoot> roots_outside_ideal(const ParabolicShape& s, const Mat& h_normal, Flavor f);
// the ideal J_h / J'_h by the maximal-invariant-subspace route (any h)
SpanBasis ideal_span_shape(const ParabolicShape& s, const Mat& h, Flavor f,
                           const std::vector<Mat>& l_gens);

// ---- primal-side orbit sets used by the superclass example tests ----

// orbit of x0 under the flavor's class actors on J/ideal, as reduced codes
std::vector<uint64_t> quotient_orbit_set_shape(const ParabolicShape& s, const SpanBasis& ideal,
                                               const Vec& x0, Flavor f,
                                               const std::vector<Mat>& l_gens);

// conjugacy class of h inside the full block L (closure under L generators)
std::vector<Mat> l_class_of(const ParabolicShape& s, const Mat& h,
                            const std::vector<Mat>& l_gens);

// ---- the rook-placement conjecture ----

struct ConjectureReport {
    int n = 0, p = 0;
    std::vector<int> blocks;
    int num_classes = 0;      // equivalence classes of J under x -> r a x b r^{-1}
    int num_weyl_orbits = 0;  // Weyl orbits on rook placements
    bool part1 = false;       // every class contains some x_D
    bool part2 = false;       // x_D ~ x_D' iff D, D' are Weyl conjugate
    bool holds() const { return part1 && part2; }
    std::string witness;
    std::string str() const;
};

ConjectureReport check_conjecture(int n, int p, const std::vector<int>& blocks,
                                  uint64_t budget = kDefaultBudget);

// the Weyl group of L as block permutation vectors on [0, n)
std::vector<std::vector<int>> weyl_permutations(const Composition& c);

} // namespace sct
