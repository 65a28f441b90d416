// Orbits of the left/right actions on J and J*, stabilizers, the invariant
// ideals J_h / J'_h / J''_h and quotient projections.
#pragma once

#include "sct/extension_group.hpp"

#include <vector>

namespace sct {

enum class Flavor { DI, GG, GU, UU };
const char* flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& s);

enum class Carrier { J, DualJ };
enum class Actor { G, L, U, None };

struct OrbitSet {
    Carrier carrier = Carrier::J;
    std::vector<int> orbit_of;               // code -> orbit id
    std::vector<uint64_t> reps;              // canonical (least) member code
    std::vector<std::vector<uint64_t>> members; // sorted codes
    int count() const { return (int)reps.size(); }
};

// the per-element linear maps of the chosen actors on the chosen carrier
std::vector<Mat> actor_moves(const ExtensionGroup& x, Carrier c, Actor left, Actor right);

// BFS orbit partition using the full element sets of both actors
OrbitSet orbit_enum(const ExtensionGroup& x, Carrier c, Actor left, Actor right,
                    uint64_t budget = kDefaultBudget);

// orbit partition of an arbitrary linear-map family on codes of GF(p)^dim
OrbitSet orbit_enum_moves(int p, int dim, Carrier c, const std::vector<Mat>& moves,
                          uint64_t budget = kDefaultBudget);

// dual-side orbit pair (X lambda Y) for a flavor: which actors act on J* and,
// for the superclass side, on the quotient of J
void flavor_dual_actors(Flavor f, Actor& left, Actor& right);
void flavor_class_actors(Flavor f, Actor& left, Actor& right);

// J_{lambda,rt} = {y : lambda(yx) = 0 for all x}
SpanBasis right_stabilizer_algebra(const NilpotentAlgebra& j, const Vec& lambda);
// |lambda U| = p^{dim lambda J}
uint64_t lambda_u_size(const NilpotentAlgebra& j, const Vec& lambda);

// {h in L : Ad*_h mu = mu for all mu in the list}
std::vector<uint32_t> pointwise_stabilizer(const ExtensionGroup& x,
                                           const std::vector<uint64_t>& form_codes);
// {h in L : Ad*_h maps the orbit onto itself}
std::vector<uint32_t> setwise_stabilizer(const ExtensionGroup& x, const OrbitSet& orbits,
                                         int orbit_id);

struct InvariantIdeal {
    uint32_t h = 0;      // L element index
    Flavor flavor = Flavor::GG;
    SpanBasis vspan;     // subspace of J* spanned by the h-fixed orbits
    SpanBasis basis;     // the ideal = vspan^perp in J
};

// V = sum of span(orbit) over flavor orbits pointwise fixed by Ad*_h;
// ideal = V^perp. Checks that the result is a two-sided ideal with the
// flavor's L-invariance.
InvariantIdeal ideal_of(const ExtensionGroup& x, uint32_t h, Flavor f,
                        const OrbitSet& dual_orbits);

// independent route: the maximal invariant subspace of Fix(Ad*_h) under the
// flavor's dual actions, computed by pure linear algebra
SpanBasis ideal_of_linear(const ExtensionGroup& x, uint32_t h, Flavor f);

struct Quotient {
    int p = 2, dim = 0, qdim = 0;
    SpanBasis ideal;
    Mat proj; // qdim x dim
    Mat lift; // dim x qdim, proj*lift = identity
};

Quotient make_quotient(int p, int dim, const SpanBasis& ideal);
// proj * A * lift; throws unless A maps the ideal into itself
Mat induced_on_quotient(const Quotient& q, const Mat& action);
// orbit partition of the induced flavor actions on J/ideal
OrbitSet quotient_orbits(const ExtensionGroup& x, const Quotient& q, Actor left, Actor right,
                         uint64_t budget = kDefaultBudget);

} // namespace sct
