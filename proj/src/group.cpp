#include "sct/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sct {

uint32_t Group::power(uint32_t g, long e) const {
    if (e < 0) return power(inv(g), -e);
    uint32_t r = id, b = g;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int Group::element_order(uint32_t g) const {
    int ord = 1;
    uint32_t x = g;
    while (x != id) {
        x = mul(x, g);
        ++ord;
    }
    return ord;
}

long Group::exponent() const {
    long e = 1;
    for (uint32_t g = 0; g < n; ++g) e = std::lcm(e, (long)element_order(g));
    return e;
}

const ConjClasses& Group::classes() const {
    if (classes_done_) return classes_;
    ConjClasses cc;
    cc.class_of.assign(n, -1);
    for (uint32_t g = 0; g < n; ++g) {
        if (cc.class_of[g] >= 0) continue;
        int ci = (int)cc.rep.size();
        cc.rep.push_back(g);
        std::vector<uint32_t> mem;
        for (uint32_t s = 0; s < n; ++s) {
            uint32_t c = conj(s, g);
            if (cc.class_of[c] < 0) {
                cc.class_of[c] = ci;
                mem.push_back(c);
            }
        }
        std::sort(mem.begin(), mem.end());
        cc.members.push_back(std::move(mem));
    }
    classes_ = std::move(cc);
    classes_done_ = true;
    return classes_;
}

Group Group::from_table(std::vector<uint32_t> table, std::vector<std::string> keys) {
    Group g;
    uint32_t n = (uint32_t)std::lround(std::sqrt((double)table.size()));
    if ((size_t)n * n != table.size()) throw std::invalid_argument("group table not square");
    g.n = n;
    g.mul_table = std::move(table);
    if (keys.empty()) {
        keys.resize(n);
        for (uint32_t i = 0; i < n; ++i) keys[i] = std::to_string(i);
    }
    g.keys = std::move(keys);
    // identity
    bool found = false;
    for (uint32_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (uint32_t a = 0; a < n && ok; ++a)
            if (g.mul(e, a) != a || g.mul(a, e) != a) ok = false;
        if (ok) {
            g.id = e;
            found = true;
        }
    }
    if (!found) throw AxiomError("group table has no identity");
    g.inv_table.assign(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
        bool has = false;
        for (uint32_t b = 0; b < n; ++b)
            if (g.mul(a, b) == g.id && g.mul(b, a) == g.id) {
                g.inv_table[a] = b;
                has = true;
                break;
            }
        if (!has) throw AxiomError("group table element without inverse");
    }
    return g;
}

Group Group::from_permutations(int m, const std::vector<std::vector<int>>& gens) {
    std::vector<int> idperm(m);
    std::iota(idperm.begin(), idperm.end(), 0);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> elems = {idperm};
    seen.insert(idperm);
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gperm : gens) {
            std::vector<int> prod(m);
            for (int i = 0; i < m; ++i) prod[i] = gperm[elems[head][i]];
            if (seen.insert(prod).second) elems.push_back(prod);
        }
    }
    std::sort(elems.begin(), elems.end());
    std::map<std::vector<int>, uint32_t> index;
    for (uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
    uint32_t n = (uint32_t)elems.size();
    std::vector<uint32_t> table((size_t)n * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            std::vector<int> prod(m);
            for (int i = 0; i < m; ++i) prod[i] = elems[a][elems[b][i]];
            table[(size_t)a * n + b] = index.at(prod);
        }
    std::vector<std::string> keys(n);
    for (uint32_t i = 0; i < n; ++i) {
        std::string k;
        for (int v : elems[i]) k += std::to_string(v) + ".";
        keys[i] = k;
    }
    return from_table(std::move(table), std::move(keys));
}

Group Group::cyclic(int n) {
    std::vector<int> shift(n);
    for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    return from_permutations(n, {shift});
}

Group Group::dihedral(int n) {
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return from_permutations(n, {rot, refl});
}

Group Group::trivial() { return from_table({0}, {"1"}); }

Subgroup make_subgroup(const Group& g, std::vector<uint32_t> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup h;
    h.parent = &g;
    h.elems = elems;
    h.local_of.assign(g.n, -1);
    for (uint32_t i = 0; i < elems.size(); ++i) h.local_of[elems[i]] = (int)i;
    uint32_t m = (uint32_t)elems.size();
    std::vector<uint32_t> table((size_t)m * m);
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b) {
            uint32_t prod = g.mul(elems[a], elems[b]);
            int loc = h.local_of[prod];
            if (loc < 0) throw AxiomError("subgroup element set not closed under product");
            table[(size_t)a * m + b] = (uint32_t)loc;
        }
    std::vector<std::string> keys(m);
    for (uint32_t i = 0; i < m; ++i) keys[i] = g.keys[elems[i]];
    h.grp = Group::from_table(std::move(table), std::move(keys));
    return h;
}

Subgroup whole_group(const Group& g) {
    std::vector<uint32_t> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(g, all);
}

std::vector<uint32_t> generated_subgroup(const Group& g, const std::vector<uint32_t>& gens) {
    std::vector<bool> seen(g.n, false);
    std::vector<uint32_t> out = {g.id};
    seen[g.id] = true;
    for (size_t head = 0; head < out.size(); ++head)
        for (uint32_t s : gens) {
            uint32_t prod = g.mul(out[head], s);
            if (!seen[prod]) {
                seen[prod] = true;
                out.push_back(prod);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_normal_in(const Group& g, const Subgroup& h, const Subgroup& k) {
    for (uint32_t s : k.elems)
        for (uint32_t x : h.elems)
            if (!h.contains(g.conj(s, x))) return false;
    return true;
}

std::vector<uint32_t> centralizer(const Group& g, uint32_t h) {
    std::vector<uint32_t> out;
    for (uint32_t s = 0; s < g.n; ++s)
        if (g.conj(s, h) == h) out.push_back(s);
    return out;
}

} // namespace sct
