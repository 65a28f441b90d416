#include "sct/class_function.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace sct {

ClassFunction trivial_character(const Group& g) {
    ClassFunction f;
    f.g = &g;
    f.v.assign(g.classes().count(), Cyclotomic::integer(1));
    return f;
}

ClassFunction regular_character(const Group& g) {
    ClassFunction f;
    f.g = &g;
    const auto& cc = g.classes();
    f.v.assign(cc.count(), Cyclotomic::integer(0));
    f.v[cc.class_of[g.id]] = Cyclotomic::integer((long)g.n);
    return f;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
    if (f.g != h.g) throw std::invalid_argument("inner product on different groups");
    const auto& cc = f.g->classes();
    Cyclotomic acc;
    for (int c = 0; c < cc.count(); ++c) {
        Cyclotomic term = f.v[c] * h.v[c].conj();
        acc += term.scaled(Rational((long)cc.members[c].size()));
    }
    return acc.scaled(Rational(1, (long)f.g->n));
}

ClassFunction induce_brute(const Group& g, const Subgroup& h,
                           const std::vector<Cyclotomic>& f_on_elems) {
    if (f_on_elems.size() != h.elems.size())
        throw std::invalid_argument("induce_brute: value count mismatch");
    const auto& cc = g.classes();
    ClassFunction out;
    out.g = &g;
    out.v.assign(cc.count(), Cyclotomic());
    Rational norm(1, (long)h.size());
    for (int c = 0; c < cc.count(); ++c) {
        bool have = false;
        Cyclotomic cval;
        for (uint32_t gg : cc.members[c]) {
            Cyclotomic acc;
            for (uint32_t s = 0; s < g.n; ++s) {
                uint32_t t = g.conj(s, gg);
                int loc = h.local(t);
                if (loc >= 0) acc += f_on_elems[loc];
            }
            acc = acc.scaled(norm);
            if (!have) {
                cval = acc;
                have = true;
            } else if (!(cval == acc)) {
                throw AxiomError("induced function not constant on a conjugacy class");
            }
        }
        out.v[c] = cval;
    }
    return out;
}

ClassFunction induce_brute(const Group& g, const Subgroup& h, const ClassFunction& chi_on_h) {
    std::vector<Cyclotomic> vals(h.elems.size());
    for (size_t i = 0; i < h.elems.size(); ++i) vals[i] = chi_on_h.at_element((uint32_t)i);
    return induce_brute(g, h, vals);
}

std::vector<ClassFunction> k_irreducible_characters(const Group& parent, const Subgroup& h,
                                                    const Subgroup& k) {
    if (!is_normal_in(parent, h, k))
        throw AxiomError("k_irreducible_characters: K does not normalize H");
    CharacterTable tab = dixon_table(h.grp);
    int m = (int)tab.irr.size();
    const auto& hcc = h.grp.classes();

    auto find_char = [&](const std::vector<Cyclotomic>& vals) {
        for (int i = 0; i < m; ++i)
            if (tab.irr[i].v == vals) return i;
        throw AxiomError("conjugated irreducible not found in table");
    };

    // orbits of the K-conjugation action on Irr(H)
    std::vector<int> orbit_of(m, -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < m; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<int> orbit = {i};
        orbit_of[i] = (int)orbits.size();
        for (size_t head = 0; head < orbit.size(); ++head) {
            for (uint32_t s : k.elems) {
                std::vector<Cyclotomic> vals(hcc.count());
                for (int c = 0; c < hcc.count(); ++c) {
                    uint32_t y = h.elems[hcc.rep[c]];
                    uint32_t y2 = parent.conj(s, y);
                    int loc = h.local(y2);
                    vals[c] = tab.irr[orbit[head]].v[hcc.class_of[loc]];
                }
                int j = find_char(vals);
                if (orbit_of[j] < 0) {
                    orbit_of[j] = orbit_of[i];
                    orbit.push_back(j);
                }
            }
        }
        orbits.push_back(std::move(orbit));
    }

    std::vector<ClassFunction> sums;
    for (const auto& orbit : orbits) {
        ClassFunction f;
        f.g = &h.grp;
        f.v.assign(hcc.count(), Cyclotomic());
        for (int i : orbit)
            for (int c = 0; c < hcc.count(); ++c) f.v[c] += tab.irr[i].v[c];
        sums.push_back(std::move(f));
    }
    std::sort(sums.begin(), sums.end(), [](const ClassFunction& a, const ClassFunction& b) {
        for (size_t i = 0; i < a.v.size(); ++i) {
            int c = Cyclotomic::compare(a.v[i], b.v[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return sums;
}

int k_orbit_count_on_elements(const Group& parent, const Subgroup& h, const Subgroup& k) {
    std::vector<bool> seen(h.elems.size(), false);
    int count = 0;
    for (size_t i = 0; i < h.elems.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        std::vector<uint32_t> stack = {h.elems[i]};
        seen[i] = true;
        while (!stack.empty()) {
            uint32_t x = stack.back();
            stack.pop_back();
            for (uint32_t s : k.elems) {
                uint32_t y = parent.conj(s, x);
                int loc = h.local(y);
                if (loc < 0) throw AxiomError("K does not normalize H");
                if (!seen[loc]) {
                    seen[loc] = true;
                    stack.push_back(y);
                }
            }
        }
    }
    return count;
}

std::string character_table_to_json(const CharacterTable& t) {
    nlohmann::ordered_json doc;
    doc["N"] = t.n;
    doc["order"] = t.g->n;
    const auto& cc = t.g->classes();
    auto classes = nlohmann::ordered_json::array();
    for (int c = 0; c < cc.count(); ++c) {
        nlohmann::ordered_json cls;
        cls["rep"] = t.g->keys[cc.rep[c]];
        cls["size"] = cc.members[c].size();
        classes.push_back(cls);
    }
    doc["classes"] = classes;
    auto irr = nlohmann::ordered_json::array();
    for (const auto& chi : t.irr) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& val : chi.v) row.push_back(val.lifted(t.n).str());
        irr.push_back(row);
    }
    doc["irreducibles"] = irr;
    return doc.dump(2);
}

} // namespace sct
