#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sct/class_function.hpp"
#include "sct/extension_group.hpp"

#include <algorithm>
#include <set>

using namespace sct;

namespace {
Group s3() { return Group::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

std::multiset<long> degrees(const CharacterTable& t) {
    std::multiset<long> out;
    int idc = t.g->classes().class_of[t.g->id];
    for (const auto& chi : t.irr) out.insert(chi.v[idc].rational_value().get_num().get_si());
    return out;
}
} // namespace

TEST_CASE("conjugacy classes") {
    CHECK(Group::trivial().classes().count() == 1);
    CHECK(s3().classes().count() == 3);
    auto x = algebra_group_extension(strictly_upper_triangular(2, 3));
    CHECK(x.G.classes().count() == 5); // UT(3,2) is dihedral of order 8
}

TEST_CASE("inner products") {
    Group g = s3();
    CHECK(inner_product(trivial_character(g), trivial_character(g)) == Cyclotomic::integer(1));
    CHECK(inner_product(trivial_character(g), regular_character(g)) == Cyclotomic::integer(1));
    auto tab = dixon_table(g);
    for (const auto& chi : tab.irr) CHECK(inner_product(chi, chi) == Cyclotomic::integer(1));
}

TEST_CASE("brute-force induction") {
    Group g = s3();
    // from the trivial subgroup: the regular character
    Subgroup one = make_subgroup(g, {g.id});
    ClassFunction reg = induce_brute(g, one, trivial_character(one.grp));
    CHECK(reg.v == regular_character(g).v);
    // from the whole group: identity operation
    Subgroup whole = whole_group(g);
    CHECK(induce_brute(g, whole, trivial_character(whole.grp)).v == trivial_character(g).v);
    // degree formula [G:H] * chi(1)
    std::vector<uint32_t> c3;
    for (uint32_t e = 0; e < g.n; ++e)
        if (g.element_order(e) != 2) c3.push_back(e);
    Subgroup h = make_subgroup(g, c3);
    ClassFunction ind = induce_brute(g, h, trivial_character(h.grp));
    CHECK(ind.at_element(g.id) == Cyclotomic::integer(2));
}

TEST_CASE("induction is transitive along 1 <= C3 <= S3") {
    Group g = s3();
    std::vector<uint32_t> c3_elems;
    for (uint32_t e = 0; e < g.n; ++e)
        if (g.element_order(e) != 2) c3_elems.push_back(e);
    Subgroup c3 = make_subgroup(g, c3_elems);
    Subgroup one_in_g = make_subgroup(g, {g.id});
    Subgroup one_in_c3 = make_subgroup(c3.grp, {c3.grp.id});

    ClassFunction direct = induce_brute(g, one_in_g, trivial_character(one_in_g.grp));
    ClassFunction step1 = induce_brute(c3.grp, one_in_c3, trivial_character(one_in_c3.grp));
    std::vector<Cyclotomic> step1_elems(c3.elems.size());
    for (size_t i = 0; i < c3.elems.size(); ++i) step1_elems[i] = step1.at_element((uint32_t)i);
    ClassFunction two_step = induce_brute(g, c3, step1_elems);
    CHECK(direct.v == two_step.v);
}

TEST_CASE("dixon tables: cyclic groups") {
    for (int n = 1; n <= 6; ++n) {
        Group g = Group::cyclic(n);
        auto tab = dixon_table(g);
        REQUIRE((int)tab.irr.size() == n);
        for (const auto& chi : tab.irr) {
            // all linear and multiplicative
            CHECK(chi.v[g.classes().class_of[g.id]] == Cyclotomic::integer(1));
            for (uint32_t a = 0; a < g.n; ++a)
                for (uint32_t b = 0; b < g.n; ++b)
                    CHECK(chi.at_element(g.mul(a, b)) == chi.at_element(a) * chi.at_element(b));
        }
    }
    // C3 has values {1, zeta, zeta^2} on the nonidentity classes
    Group c3 = Group::cyclic(3);
    auto tab = dixon_table(c3);
    std::multiset<std::string> vals;
    for (const auto& chi : tab.irr)
        for (int c = 0; c < 3; ++c) vals.insert(chi.v[c].lifted(3).str());
    CHECK(vals.count(Cyclotomic::root(3, 1).str()) == 2);
    CHECK(vals.count(Cyclotomic::root(3, 2).str()) == 2);
}

TEST_CASE("dixon tables: S3, D4, UT(3,2)") {
    CHECK(degrees(dixon_table(s3())) == std::multiset<long>{1, 1, 2});
    CHECK(degrees(dixon_table(Group::dihedral(4))) == std::multiset<long>{1, 1, 1, 1, 2});
    auto x = algebra_group_extension(strictly_upper_triangular(2, 3));
    CHECK(degrees(dixon_table(x.G)) == std::multiset<long>{1, 1, 1, 1, 2});
}

TEST_CASE("induced characters decompose with nonnegative integer multiplicities") {
    Group g = s3();
    auto tab = dixon_table(g);
    std::vector<uint32_t> c3_elems;
    for (uint32_t e = 0; e < g.n; ++e)
        if (g.element_order(e) != 2) c3_elems.push_back(e);
    Subgroup c3 = make_subgroup(g, c3_elems);
    auto sub_tab = dixon_table(c3.grp);
    for (const auto& psi : sub_tab.irr) {
        ClassFunction ind = induce_brute(g, c3, psi);
        for (const auto& chi : tab.irr) CHECK(inner_product(ind, chi).is_nonneg_integer());
    }
}

TEST_CASE("K-orbit sums of Irr(H): C3 normal in S3") {
    Group g = s3();
    std::vector<uint32_t> c3_elems;
    for (uint32_t e = 0; e < g.n; ++e)
        if (g.element_order(e) != 2) c3_elems.push_back(e);
    Subgroup h = make_subgroup(g, c3_elems);
    Subgroup k = whole_group(g);
    auto sums = k_irreducible_characters(g, h, k);
    REQUIRE(sums.size() == 2);
    CHECK(sums.size() == (size_t)k_orbit_count_on_elements(g, h, k));
    // one sum is trivial, the other takes value 2 at 1 and -1 elsewhere
    bool found_triv = false, found_omega = false;
    for (const auto& f : sums) {
        if (f.v == trivial_character(h.grp).v) found_triv = true;
        bool omega = f.v[h.grp.classes().class_of[h.grp.id]] == Cyclotomic::integer(2);
        for (int c = 0; c < h.grp.classes().count(); ++c)
            if (h.grp.classes().rep[c] != h.grp.id && !(f.v[c] == Cyclotomic::integer(-1)))
                omega = false;
        if (omega) found_omega = true;
    }
    CHECK(found_triv);
    CHECK(found_omega);
    // acting trivially gives back Irr(H)
    Subgroup triv_k = make_subgroup(g, {g.id});
    CHECK(k_irreducible_characters(g, h, triv_k).size() == 3);
}

TEST_CASE("column orthogonality holds for a mixed group") {
    // order 12: the Borel subgroup of GL(2,3) has exponent 6
    Group g = Group::dihedral(6);
    auto tab = dixon_table(g); // internal checks assert both orthogonality relations
    CHECK(tab.irr.size() == (size_t)g.classes().count());
    CHECK(character_table_to_json(tab).size() > 0);
}
