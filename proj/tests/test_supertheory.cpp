#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sct/parabolic.hpp"
#include "sct/supertheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace sct;

namespace {

std::multiset<size_t> class_sizes(const Theory& t) {
    std::multiset<size_t> out;
    for (const auto& sc : t.b_classes) out.insert(sc.members.size());
    return out;
}

std::multiset<long> degrees(const Theory& t) {
    std::multiset<long> out;
    int idc = -1;
    for (size_t b = 0; b < t.b_classes.size(); ++b)
        if (t.b_classes[b].members.size() == 1 && t.b_classes[b].members[0] == t.x->G.id)
            idc = (int)b;
    REQUIRE(idc >= 0);
    for (const auto& row : t.table) out.insert(row[idc].rational_value().get_num().get_si());
    return out;
}

std::set<std::vector<uint32_t>> partition_of(const Theory& t) {
    std::set<std::vector<uint32_t>> out;
    for (const auto& sc : t.b_classes) out.insert(sc.members);
    return out;
}

void check_oracle_everywhere(const Theory& t) {
    for (size_t a = 0; a < t.a_params.size(); ++a) {
        ClassFunction ind = superchar_oracle(t, (int)a);
        for (uint32_t g = 0; g < t.x->G.n; ++g)
            CHECK(superchar_closed(t, (int)a, g) == ind.at_element(g));
    }
}

} // namespace

TEST_CASE("xi characters") {
    auto x = build_parabolic(3, 2, {2, 1});
    BuildOptions opts;
    int n = (int)std::lcm((long)2, x.G.exponent());

    // lambda = 0, theta trivial: the trivial character of H0 * U
    Subgroup whole_l = whole_group(x.L);
    Vec zero(2, x.J.dim);
    XiCharacter xi = xi_character(x, whole_l.elems, zero, trivial_character(whole_l.grp),
                                  whole_l, n, 1, false);
    CHECK(xi.g0.size() == x.G.n);
    for (const auto& v : xi.values) CHECK(v == Cyclotomic::integer(1));

    // every linear theta gives a multiplicative xi, and xi has the trace property
    auto uu = orbit_enum(x, Carrier::DualJ, Actor::U, Actor::U);
    for (int o = 0; o < uu.count(); ++o) {
        Vec lambda = decode(uu.reps[o], 2, x.J.dim);
        auto h = make_subgroup(x.L, pointwise_stabilizer(x, uu.members[o]));
        auto tab = dixon_table(h.grp);
        for (const auto& theta : tab.irr) {
            XiCharacter f = xi_character(x, h.elems, lambda, theta, h, n, 1, false);
            bool linear = theta.at_element(h.grp.id) == Cyclotomic::integer(1);
            for (uint32_t a = 0; a < f.g0.grp.n; ++a)
                for (uint32_t b = 0; b < f.g0.grp.n; ++b) {
                    if (linear)
                        CHECK(f.values[f.g0.grp.mul(a, b)] == f.values[a] * f.values[b]);
                    CHECK(f.values[f.g0.grp.mul(a, b)] == f.values[f.g0.grp.mul(b, a)]);
                }
        }
    }

    // stabilizer precondition: a non-stabilizing H0 is rejected
    Vec e12s(2, x.J.dim);
    e12s.c[0] = 1;
    bool some_rejected = false;
    try {
        xi_character(x, whole_l.elems, e12s, trivial_character(whole_l.grp), whole_l, n, 1,
                     false);
    } catch (const AxiomError&) {
        some_rejected = true;
    }
    CHECK(some_rejected);
}

TEST_CASE("DI baseline on UT(3,2)") {
    auto x = algebra_group_extension(strictly_upper_triangular(2, 3));
    Theory t = build_di(x, {.eps_power = 1, .check_irr = true});
    CHECK(t.a_params.size() == 5);
    CHECK(t.b_classes.size() == 5);
    CHECK(class_sizes(t) == std::multiset<size_t>{1, 1, 2, 2, 2});
    CHECK(degrees(t) == std::multiset<long>{1, 1, 1, 1, 2});
    CHECK(t.report.pass());
    CHECK(t.report.irr_partition.has_value());
    check_oracle_everywhere(t);
}

TEST_CASE("DI baseline on UT(3,3)") {
    auto x = algebra_group_extension(strictly_upper_triangular(3, 3));
    Theory t = build_di(x);
    CHECK(t.a_params.size() == 11);
    CHECK(t.b_classes.size() == 11);
    CHECK(t.report.pass());
}

TEST_CASE("zero-multiplication algebra gives the full irreducible theory") {
    for (int p : {2, 3}) {
        auto x = algebra_group_extension(zero_algebra(p, 3));
        Theory t = build_di(x, {.eps_power = 1, .check_irr = true});
        CHECK((long)t.a_params.size() == pow_u64(p, 3));
        CHECK(t.report.pass());
        for (const auto& row : t.table) CHECK(row.size() == t.b_classes.size());
        std::multiset<long> ones;
        for (size_t i = 0; i < t.a_params.size(); ++i) ones.insert(1);
        CHECK(degrees(t) == ones);
    }
}

TEST_CASE("with trivial L, all flavors coincide with DI") {
    auto x = algebra_group_extension(strictly_upper_triangular(2, 3));
    Theory di = build_di(x);
    for (Flavor f : {Flavor::GG, Flavor::GU, Flavor::UU}) {
        Theory t = build_theory(x, f);
        CHECK(t.report.pass());
        CHECK(partition_of(t) == partition_of(di));
        CHECK(t.a_params.size() == di.a_params.size());
        // identical value tables up to row order
        std::multiset<std::string> rows_t, rows_di;
        for (const auto& row : t.table) {
            std::string s;
            for (const auto& v : row) s += v.lifted(t.n_cyclo).str() + ";";
            rows_t.insert(s);
        }
        for (const auto& row : di.table) {
            std::string s;
            for (const auto& v : row) s += v.lifted(di.n_cyclo).str() + ";";
            rows_di.insert(s);
        }
        CHECK(rows_t == rows_di);
    }
}

TEST_CASE("all flavors on the Borel of GL(2,3) and parabolic (2,1) of GL(3,2)") {
    for (auto x : {build_parabolic(2, 3, {1, 1}), build_parabolic(3, 2, {2, 1})}) {
        for (Flavor f : {Flavor::GG, Flavor::GU, Flavor::UU}) {
            Theory t = build_theory(x, f, {.eps_power = 1, .check_irr = true});
            CHECK(t.a_params.size() == t.b_classes.size());
            CHECK(t.report.pass());
            check_oracle_everywhere(t);
        }
    }
}

TEST_CASE("GG values also satisfy the general induced-character formula") {
    for (auto x : {build_parabolic(2, 3, {1, 1}), build_parabolic(3, 2, {2, 1})}) {
        Theory t = build_theory(x, Flavor::GG);
        auto gu_orbits = orbit_enum(x, Carrier::DualJ, Actor::G, Actor::U);
        for (size_t a = 0; a < t.a_params.size(); ++a)
            for (uint32_t g = 0; g < x.G.n; ++g)
                CHECK(superchar_closed(t, (int)a, g) ==
                      superchar_gg_via_gu_formula(t, (int)a, g, gu_orbits));
    }
}

TEST_CASE("counting identity behind |A| = |B| for the GG theory") {
    for (auto x : {build_parabolic(2, 3, {1, 1}), build_parabolic(3, 2, {2, 1})}) {
        auto orb = orbit_enum(x, Carrier::DualJ, Actor::G, Actor::G);
        long lhs = 0;
        for (int o = 0; o < orb.count(); ++o) {
            auto h = make_subgroup(x.L, pointwise_stabilizer(x, orb.members[o]));
            lhs += k_orbit_count_on_elements(x.L, h, whole_group(x.L));
        }
        long rhs = 0;
        for (int c = 0; c < x.L.classes().count(); ++c) {
            auto ideal = ideal_of(x, x.L.classes().rep[c], Flavor::GG, orb);
            auto q = make_quotient(x.J.p, x.J.dim, ideal.basis);
            rhs += quotient_orbits(x, q, Actor::G, Actor::G).count();
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("superclass partitions refine from UU to GU to GG") {
    for (auto x : {build_parabolic(2, 3, {1, 1}), build_parabolic(3, 2, {2, 1})}) {
        Theory gg = build_theory(x, Flavor::GG);
        Theory gu = build_theory(x, Flavor::GU);
        Theory uu = build_theory(x, Flavor::UU);
        auto refines = [&](const Theory& fine, const Theory& coarse) {
            for (const auto& fc : fine.b_classes) {
                bool inside_one = false;
                for (const auto& cc : coarse.b_classes)
                    if (std::includes(cc.members.begin(), cc.members.end(), fc.members.begin(),
                                      fc.members.end())) {
                        inside_one = true;
                        break;
                    }
                if (!inside_one) return false;
            }
            return true;
        };
        CHECK(refines(uu, gu));
        CHECK(refines(gu, gg));
    }
}

TEST_CASE("changing the additive character permutes parameters, not partitions") {
    auto x = build_parabolic(2, 3, {1, 1});
    Theory t1 = build_theory(x, Flavor::GG, {.eps_power = 1});
    Theory t2 = build_theory(x, Flavor::GG, {.eps_power = 2});
    CHECK(t2.report.pass());
    CHECK(partition_of(t1) == partition_of(t2));
    std::multiset<std::string> rows1, rows2;
    for (const auto& row : t1.table) {
        std::string s;
        for (const auto& v : row) s += v.lifted(t1.n_cyclo).str() + ";";
        rows1.insert(s);
    }
    for (const auto& row : t2.table) {
        std::string s;
        for (const auto& v : row) s += v.lifted(t2.n_cyclo).str() + ";";
        rows2.insert(s);
    }
    CHECK(rows1 == rows2);
}

TEST_CASE("negative control: a corrupted superclass fails verification") {
    auto x = algebra_group_extension(strictly_upper_triangular(2, 3));
    Theory t = build_di(x);
    REQUIRE(t.report.pass());
    // move one element between two non-singleton superclasses
    int b1 = -1, b2 = -1;
    for (size_t b = 0; b < t.b_classes.size(); ++b)
        if (t.b_classes[b].members.size() > 1) (b1 < 0 ? b1 : b2) = (int)b;
    REQUIRE(b2 >= 0);
    uint32_t moved = t.b_classes[b1].members.back();
    t.b_classes[b1].members.pop_back();
    t.b_classes[b2].members.push_back(moved);
    std::sort(t.b_classes[b2].members.begin(), t.b_classes[b2].members.end());
    VerifyReport r = verify_theory(t, false);
    CHECK(!r.pass());
    CHECK(!r.constant);
    CHECK(!r.witness.empty());
}

TEST_CASE("theory export round trip") {
    auto x = build_parabolic(3, 2, {2, 1});
    Theory t = build_theory(x, Flavor::UU);
    std::string j1 = theory_to_json(t, "{\"kind\":\"parabolic\",\"blocks\":[2,1],\"p\":2}");
    std::string j2 = theory_to_json(t, "{\"kind\":\"parabolic\",\"blocks\":[2,1],\"p\":2}");
    CHECK(j1 == j2);
    CHECK(theory_to_csv(t).find("chi0") != std::string::npos);
}
