// Cyclotomic-valued class functions, exact inner products, brute-force
// character induction, Dixon irreducible tables and K-orbit-sum characters.
#pragma once

#include "sct/cyclotomic.hpp"
#include "sct/group.hpp"

#include <vector>

namespace sct {

struct ClassFunction {
    const Group* g = nullptr;
    std::vector<Cyclotomic> v; // indexed by conjugacy class

    const Cyclotomic& at_class(int c) const { return v[c]; }
    const Cyclotomic& at_element(uint32_t e) const { return v[g->classes().class_of[e]]; }
};

ClassFunction trivial_character(const Group& g);
ClassFunction regular_character(const Group& g);

// (1/|G|) sum_g f(g) * conj(h(g)), exact
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h);

// Induction computed from the definition: Ind(g) = (1/|H|) sum_{s in G}
// f~(s g s^{-1}), f~ zero outside H. `f_on_elems` gives the value at each
// H element (local order). Checks that the result is constant on classes.
ClassFunction induce_brute(const Group& g, const Subgroup& h,
                           const std::vector<Cyclotomic>& f_on_elems);
ClassFunction induce_brute(const Group& g, const Subgroup& h, const ClassFunction& chi_on_h);

struct CharacterTable {
    const Group* g = nullptr;
    int n = 1; // cyclotomic order (group exponent)
    std::vector<ClassFunction> irr;
};

// Irreducible table via class-sum matrices over GF(l), l = 1 mod exponent,
// l > 2 sqrt|G|, lifted to exact cyclotomic values. Both orthogonality
// relations are re-checked exactly before returning.
CharacterTable dixon_table(const Group& g);

// K-orbit sums of Irr(H); K must normalize H inside the common parent.
// Results are K-invariant, pairwise orthogonal, canonically sorted.
std::vector<ClassFunction> k_irreducible_characters(const Group& parent, const Subgroup& h,
                                                    const Subgroup& k);

// number of K-conjugation orbits on the elements of H
int k_orbit_count_on_elements(const Group& parent, const Subgroup& h, const Subgroup& k);

std::string character_table_to_json(const CharacterTable& t);

} // namespace sct
