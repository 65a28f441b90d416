// Generic finite-group machinery on explicitly enumerated groups.
//
// A Group is a full multiplication table plus canonical element keys; the
// element order is the canonical order, so the least index in a conjugacy
// class is its canonical representative.
#pragma once

#include "sct/budget.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sct {

struct ConjClasses {
    std::vector<int> class_of;            // element -> class index
    std::vector<uint32_t> rep;            // class -> least element
    std::vector<std::vector<uint32_t>> members;
    int count() const { return (int)rep.size(); }
};

struct Group {
    uint32_t n = 0;
    uint32_t id = 0;
    std::vector<uint32_t> mul_table;      // n*n
    std::vector<uint32_t> inv_table;
    std::vector<std::string> keys;        // canonical per-element keys

    uint32_t mul(uint32_t a, uint32_t b) const { return mul_table[(size_t)a * n + b]; }
    uint32_t inv(uint32_t a) const { return inv_table[a]; }
    uint32_t conj(uint32_t s, uint32_t g) const { return mul(mul(s, g), inv(s)); }
    uint32_t power(uint32_t g, long e) const;
    int element_order(uint32_t g) const;
    long exponent() const;

    // classes are ordered by their least element
    const ConjClasses& classes() const;

    static Group from_table(std::vector<uint32_t> table, std::vector<std::string> keys = {});
    // closure of generator permutations acting on [0, m); elements sorted by
    // image word, identity first
    static Group from_permutations(int m, const std::vector<std::vector<int>>& gens);
    static Group cyclic(int n);
    static Group dihedral(int n); // order 2n
    static Group trivial();

private:
    mutable ConjClasses classes_;
    mutable bool classes_done_ = false;
};

// A subgroup given by its (sorted) element indices in a parent group, promoted
// to a standalone Group for character-theoretic work.
struct Subgroup {
    const Group* parent = nullptr;
    std::vector<uint32_t> elems;          // sorted parent indices
    Group grp;                            // standalone copy
    std::vector<int> local_of;            // parent index -> local index or -1

    uint32_t size() const { return (uint32_t)elems.size(); }
    bool contains(uint32_t parent_idx) const { return local_of[parent_idx] >= 0; }
    int local(uint32_t parent_idx) const { return local_of[parent_idx]; }
};

// throws AxiomError if the element set is not closed under the product
Subgroup make_subgroup(const Group& g, std::vector<uint32_t> elems);
Subgroup whole_group(const Group& g);
std::vector<uint32_t> generated_subgroup(const Group& g, const std::vector<uint32_t>& gens);
bool is_normal_in(const Group& g, const Subgroup& h, const Subgroup& k); // k normalizes h
std::vector<uint32_t> centralizer(const Group& g, uint32_t h);

} // namespace sct
