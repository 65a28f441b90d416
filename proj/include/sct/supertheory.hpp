// Construction and verification of the DI, GG, GU and UU supercharacter
// theories of an algebra group extension G = L x| U.
//
// Parameters are pairs (lambda, theta): lambda a canonical representative of
// a dual orbit (GU/UU: of an L-conjugation cluster of dual orbits) and theta
// an orbit-sum character of the pointwise stabilizer of the orbit under the
// action of its setwise stabilizer. Superclasses are pairs (h, omega) built
// from conjugacy classes of L and orbits in J/J_h.
#pragma once

#include "sct/actions.hpp"
#include "sct/class_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sct {

struct ParamFamily {
    uint64_t lambda = 0;               // canonical cluster representative (form code)
    std::vector<int> orbit_ids;        // dual orbits merged by L-conjugation
    std::vector<uint64_t> orbit_members; // members of the representative's orbit
    std::vector<Vec> orbit_vecs;       // same, decoded
    uint64_t lambda_u = 1;             // |lambda U|
    Subgroup H;                        // pointwise stabilizer, subgroup of L
    Subgroup S;                        // setwise stabilizer, subgroup of L
    std::vector<ClassFunction> thetas; // S-orbit sums of Irr(H)
};

struct SuperParameter {
    int family = 0;
    int theta = 0;
};

struct HData {
    uint32_t h = 0;           // class representative in L (least element)
    int h_class = 0;
    InvariantIdeal ideal;
    Quotient quo;
    OrbitSet qorbits;
    std::vector<std::vector<int>> merged; // quotient orbits merged by C_L(h)
};

struct Superclass {
    int hdata = 0;
    int merged_index = 0;
    uint64_t omega_rep = 0;           // least code in the quotient space
    std::vector<uint32_t> members;    // sorted G element indices
};

struct VerifyReport {
    bool orthogonal = false;       // (a)
    bool constant = false;         // (b)
    bool counts_equal = false;     // (c)
    bool partition = false;        // (d)
    bool identity_class = false;   // (d) {1} in B
    bool degrees = false;          // (e)
    std::optional<bool> irr_partition; // (f), when a Dixon table of G was run
    std::string witness;           // first failure
    bool pass() const {
        return orthogonal && constant && counts_equal && partition && identity_class &&
               degrees && (!irr_partition.has_value() || *irr_partition);
    }
};

struct Theory {
    Flavor flavor = Flavor::DI;
    const ExtensionGroup* x = nullptr;
    int n_cyclo = 1;   // global cyclotomic order lcm(p, exponent(G))
    int eps_power = 1; // epsilon = zeta_N^{(N/p) * eps_power}
    OrbitSet dual_orbits;
    std::vector<ParamFamily> families;
    std::vector<SuperParameter> a_params;
    std::vector<HData> hdata;
    std::vector<Superclass> b_classes;
    std::vector<std::vector<Cyclotomic>> table; // |A| x |B|
    VerifyReport report;
};

struct BuildOptions {
    int eps_power = 1;
    bool check_irr = false; // run verification axiom (f) against a Dixon table
    uint64_t budget = kDefaultBudget;
};

// epsilon^t as an exact root of unity
Cyclotomic eps_value(int n_cyclo, int p, int eps_power, int t);

// the linear character xi_{theta,lambda} of G_{0,lambda} = H0 x| U_{lambda,rt};
// values are listed in the local element order of the returned subgroup.
// summed = true gives sum_{p in L} xi_{theta, p lambda}.
struct XiCharacter {
    Subgroup g0;                   // subgroup of G
    std::vector<Cyclotomic> values;
};
XiCharacter xi_character(const ExtensionGroup& x, const std::vector<uint32_t>& h0_elems_in_l,
                         const Vec& lambda, const ClassFunction& theta, const Subgroup& h0_sub,
                         int n_cyclo, int eps_power, bool summed);

// closed-formula value of the supercharacter at a group element
Cyclotomic superchar_closed(const Theory& t, int param, uint32_t g);
// same value through formula (chigen) with H0 = H_{G lambda G} (GG only);
// needs the G x U orbit of the family's lambda
Cyclotomic superchar_gg_via_gu_formula(const Theory& t, int param, uint32_t g,
                                       const OrbitSet& gu_orbits);
// brute-force induction of the defining xi character (the oracle)
ClassFunction superchar_oracle(const Theory& t, int param);

Theory build_theory(const ExtensionGroup& x, Flavor flavor, const BuildOptions& opts = {});
Theory build_di(const ExtensionGroup& x, const BuildOptions& opts = {}); // requires |L| = 1

VerifyReport verify_theory(const Theory& t, bool check_irr = false);

// exports; `group_descriptor` is embedded verbatim for reproducible rebuilds
std::string theory_to_json(const Theory& t, const std::string& group_descriptor_json);
std::string theory_to_csv(const Theory& t);

} // namespace sct
