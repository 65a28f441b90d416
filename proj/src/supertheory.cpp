#include "sct/supertheory.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sct {

Cyclotomic eps_value(int n, int p, int k, int t) {
    long e = ((long)(n / p) * k % n) * t % n;
    return Cyclotomic::root(n, e);
}

namespace {

// sum_{mu in orbit} eps^{mu(x)} as one canonical cyclotomic
Cyclotomic eps_orbit_sum(int n, int p, int k, const std::vector<Vec>& orbit, const Vec& x) {
    std::vector<long> counts(p, 0);
    for (const Vec& mu : orbit) ++counts[dot(mu, x)];
    std::vector<Rational> raw(n, Rational(0));
    for (int t = 0; t < p; ++t) {
        if (!counts[t]) continue;
        long e = ((long)(n / p) * k % n) * t % n;
        raw[e] += Rational(counts[t]);
    }
    return Cyclotomic::from_raw(n, raw);
}

const Cyclotomic* theta_value(const ParamFamily& fam, const ClassFunction& theta,
                              uint32_t l_elem) {
    int loc = fam.H.local(l_elem);
    if (loc < 0) return nullptr;
    return &theta.v[fam.H.grp.classes().class_of[loc]];
}

} // namespace

Cyclotomic superchar_closed(const Theory& t, int param, uint32_t g) {
    const ExtensionGroup& x = *t.x;
    const SuperParameter& sp = t.a_params[param];
    const ParamFamily& fam = t.families[sp.family];
    const ClassFunction& theta = fam.thetas[sp.theta];
    uint32_t h = x.lpart(g);
    Vec xv = x.uvec(g);
    long lsize = (long)x.L.n;
    long orb = (long)fam.orbit_vecs.size();
    long hsize = (long)fam.H.size();

    if (t.flavor == Flavor::GG) {
        const Cyclotomic* tv = theta_value(fam, theta, h);
        if (!tv) return Cyclotomic();
        Rational coeff = make_rational(lsize * lsize * (long)fam.lambda_u, hsize * orb);
        Cyclotomic s = eps_orbit_sum(t.n_cyclo, x.J.p, t.eps_power, fam.orbit_vecs, xv);
        return (s * *tv).scaled(coeff);
    }

    long num = (t.flavor == Flavor::GU) ? lsize * (long)fam.lambda_u : (long)fam.lambda_u;
    Rational coeff = make_rational(num, hsize * orb);
    Cyclotomic acc;
    for (uint32_t r = 0; r < x.L.n; ++r) {
        const Cyclotomic* tv = theta_value(fam, theta, x.L.conj(r, h));
        if (!tv) continue;
        Vec moved = apply(x.ad_mat(r), xv);
        acc += eps_orbit_sum(t.n_cyclo, x.J.p, t.eps_power, fam.orbit_vecs, moved) * *tv;
    }
    return acc.scaled(coeff);
}

Cyclotomic superchar_gg_via_gu_formula(const Theory& t, int param, uint32_t g,
                                       const OrbitSet& gu_orbits) {
    const ExtensionGroup& x = *t.x;
    const SuperParameter& sp = t.a_params[param];
    const ParamFamily& fam = t.families[sp.family];
    const ClassFunction& theta = fam.thetas[sp.theta];
    uint32_t h = x.lpart(g);
    Vec xv = x.uvec(g);

    int gu_orbit = gu_orbits.orbit_of[fam.lambda];
    std::vector<Vec> orbit;
    for (uint64_t c : gu_orbits.members[gu_orbit]) orbit.push_back(decode(c, x.J.p, x.J.dim));

    Rational coeff = make_rational((long)x.L.n * (long)fam.lambda_u,
                                   (long)fam.H.size() * (long)orbit.size());
    Cyclotomic acc;
    for (uint32_t r = 0; r < x.L.n; ++r) {
        const Cyclotomic* tv = theta_value(fam, theta, x.L.conj(r, h));
        if (!tv) continue;
        Vec moved = apply(x.ad_mat(r), xv);
        acc += eps_orbit_sum(t.n_cyclo, x.J.p, t.eps_power, orbit, moved) * *tv;
    }
    return acc.scaled(coeff);
}

XiCharacter xi_character(const ExtensionGroup& x, const std::vector<uint32_t>& h0_elems_in_l,
                         const Vec& lambda, const ClassFunction& theta, const Subgroup& h0_sub,
                         int n_cyclo, int eps_power, bool summed) {
    for (uint32_t h : h0_elems_in_l)
        if (!(x.coad(h, lambda) == lambda))
            throw AxiomError("stabilizer precondition violated: H0 not inside H_lambda");

    SpanBasis jrt = right_stabilizer_algebra(x.J, lambda);
    std::vector<uint64_t> u_codes;
    for (const Vec& y : jrt.enumerate()) u_codes.push_back(encode(y));

    XiCharacter out;
    out.g0 = make_subgroup(x.G, x.mixed_subgroup(h0_elems_in_l, u_codes));

    std::vector<Vec> lambda_images; // p*lambda over p in L (or just lambda)
    if (summed)
        for (uint32_t l = 0; l < x.L.n; ++l)
            lambda_images.push_back(x.form_left(x.gindex(l, encode(x.J.zero())), lambda));
    else
        lambda_images.push_back(lambda);

    out.values.reserve(out.g0.elems.size());
    for (uint32_t ge : out.g0.elems) {
        uint32_t h = x.lpart(ge);
        Vec xv = x.uvec(ge);
        const Cyclotomic* tv = nullptr;
        int loc = h0_sub.local(h);
        tv = &theta.v[h0_sub.grp.classes().class_of[loc]];
        std::vector<long> counts(x.J.p, 0);
        for (const Vec& li : lambda_images) ++counts[dot(li, xv)];
        std::vector<Rational> raw(n_cyclo, Rational(0));
        for (int tt = 0; tt < x.J.p; ++tt)
            if (counts[tt])
                raw[((long)(n_cyclo / x.J.p) * eps_power % n_cyclo) * tt % n_cyclo] +=
                    Rational(counts[tt]);
        out.values.push_back(Cyclotomic::from_raw(n_cyclo, raw) * *tv);
    }
    return out;
}

ClassFunction superchar_oracle(const Theory& t, int param) {
    const ExtensionGroup& x = *t.x;
    const SuperParameter& sp = t.a_params[param];
    const ParamFamily& fam = t.families[sp.family];
    bool summed = (t.flavor == Flavor::GG || t.flavor == Flavor::GU);
    Vec lambda = decode(fam.lambda, x.J.p, x.J.dim);
    XiCharacter xi = xi_character(x, fam.H.elems, lambda, fam.thetas[sp.theta], fam.H,
                                  t.n_cyclo, t.eps_power, summed);
    return induce_brute(x.G, xi.g0, xi.values);
}

namespace {

std::vector<std::vector<int>> cluster_dual_orbits(const ExtensionGroup& x,
                                                  const OrbitSet& orbits, bool conjugate) {
    int k = orbits.count();
    std::vector<int> cluster_of(k, -1);
    std::vector<std::vector<int>> clusters;
    for (int o = 0; o < k; ++o) {
        if (cluster_of[o] >= 0) continue;
        int cid = (int)clusters.size();
        std::vector<int> cl = {o};
        cluster_of[o] = cid;
        if (conjugate) {
            for (size_t head = 0; head < cl.size(); ++head)
                for (uint32_t l = 0; l < x.L.n; ++l) {
                    Vec rep = decode(orbits.reps[cl[head]], x.J.p, x.J.dim);
                    int img = orbits.orbit_of[encode(x.coad(l, rep))];
                    if (cluster_of[img] < 0) {
                        cluster_of[img] = cid;
                        cl.push_back(img);
                    }
                }
        }
        std::sort(cl.begin(), cl.end());
        clusters.push_back(std::move(cl));
    }
    return clusters;
}

// quotient orbits merged under the centralizer of h acting by Ad
std::vector<std::vector<int>> merge_quotient_orbits(const ExtensionGroup& x, const Quotient& q,
                                                    const OrbitSet& qorbits, uint32_t h,
                                                    bool conjugate) {
    int k = qorbits.count();
    std::vector<int> merged_of(k, -1);
    std::vector<std::vector<int>> merged;
    std::vector<uint32_t> cent = conjugate ? centralizer(x.L, h) : std::vector<uint32_t>{};
    std::vector<Mat> cmats;
    for (uint32_t r : cent) cmats.push_back(induced_on_quotient(q, x.ad_mat(r)));
    for (int o = 0; o < k; ++o) {
        if (merged_of[o] >= 0) continue;
        int mid = (int)merged.size();
        std::vector<int> cl = {o};
        merged_of[o] = mid;
        for (size_t head = 0; head < cl.size(); ++head)
            for (const Mat& m : cmats) {
                Vec rep = decode(qorbits.reps[cl[head]], q.p, q.qdim);
                int img = qorbits.orbit_of[encode(apply(m, rep))];
                if (merged_of[img] < 0) {
                    merged_of[img] = mid;
                    cl.push_back(img);
                }
            }
        std::sort(cl.begin(), cl.end());
        merged.push_back(std::move(cl));
    }
    return merged;
}

std::vector<uint64_t> preimage_codes(const ExtensionGroup& x, const Quotient& q,
                                     const OrbitSet& qorbits, int orbit_id) {
    std::vector<Vec> ideal_members = q.ideal.enumerate();
    std::vector<uint64_t> out;
    out.reserve(qorbits.members[orbit_id].size() * ideal_members.size());
    for (uint64_t qc : qorbits.members[orbit_id]) {
        Vec lift = apply(q.lift, decode(qc, q.p, q.qdim));
        for (const Vec& iv : ideal_members) out.push_back(encode(add(lift, iv)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Theory build_theory(const ExtensionGroup& x, Flavor flavor, const BuildOptions& opts) {
    if (flavor == Flavor::DI && x.L.n != 1)
        throw std::invalid_argument("DI theory requires a bare algebra group (trivial L)");
    if (opts.eps_power % x.J.p == 0)
        throw std::invalid_argument("epsilon power must be coprime to p");

    Theory t;
    t.flavor = flavor;
    t.x = &x;
    t.eps_power = opts.eps_power;
    t.n_cyclo = (int)std::lcm((long)x.J.p, x.G.exponent());

    Actor dl, dr;
    flavor_dual_actors(flavor, dl, dr);
    t.dual_orbits = orbit_enum(x, Carrier::DualJ, dl, dr, opts.budget);

    bool conjugate_quotient = (flavor == Flavor::GU || flavor == Flavor::UU) && x.L.n > 1;
    auto clusters = cluster_dual_orbits(x, t.dual_orbits, conjugate_quotient);

    // order clusters by their least representative code
    std::sort(clusters.begin(), clusters.end(), [&](const auto& a, const auto& b) {
        uint64_t ra = t.dual_orbits.reps[a.front()];
        for (int o : a) ra = std::min(ra, t.dual_orbits.reps[o]);
        uint64_t rb = t.dual_orbits.reps[b.front()];
        for (int o : b) rb = std::min(rb, t.dual_orbits.reps[o]);
        return ra < rb;
    });

    for (const auto& cl : clusters) {
        ParamFamily fam;
        int rep_orbit = cl.front();
        for (int o : cl)
            if (t.dual_orbits.reps[o] < t.dual_orbits.reps[rep_orbit]) rep_orbit = o;
        fam.lambda = t.dual_orbits.reps[rep_orbit];
        fam.orbit_ids = cl;
        fam.orbit_members = t.dual_orbits.members[rep_orbit];
        for (uint64_t c : fam.orbit_members) fam.orbit_vecs.push_back(decode(c, x.J.p, x.J.dim));
        Vec lambda = decode(fam.lambda, x.J.p, x.J.dim);
        fam.lambda_u = lambda_u_size(x.J, lambda);
        fam.H = make_subgroup(x.L, pointwise_stabilizer(x, fam.orbit_members));
        fam.S = make_subgroup(x.L, setwise_stabilizer(x, t.dual_orbits, rep_orbit));
        if (flavor == Flavor::GG && fam.S.size() != x.L.n)
            throw AxiomError("GG: setwise stabilizer must be all of L");
        if (!is_normal_in(x.L, fam.H, fam.S))
            throw AxiomError("pointwise stabilizer not normal in setwise stabilizer");
        fam.thetas = k_irreducible_characters(x.L, fam.H, fam.S);
        if ((int)fam.thetas.size() != k_orbit_count_on_elements(x.L, fam.H, fam.S))
            throw AxiomError("orbit-sum character count differs from Brauer count");
        t.families.push_back(std::move(fam));
    }
    for (int f = 0; f < (int)t.families.size(); ++f)
        for (int th = 0; th < (int)t.families[f].thetas.size(); ++th)
            t.a_params.push_back({f, th});

    // superclass side
    Actor cl_act, cr_act;
    flavor_class_actors(flavor, cl_act, cr_act);
    const auto& lcc = x.L.classes();
    for (int hc = 0; hc < lcc.count(); ++hc) {
        HData hd;
        hd.h = lcc.rep[hc];
        hd.h_class = hc;
        hd.ideal = ideal_of(x, hd.h, flavor == Flavor::DI ? Flavor::UU : flavor, t.dual_orbits);
        hd.quo = make_quotient(x.J.p, x.J.dim, hd.ideal.basis);
        hd.qorbits = quotient_orbits(x, hd.quo, cl_act, cr_act, opts.budget);
        hd.merged = merge_quotient_orbits(x, hd.quo, hd.qorbits, hd.h, conjugate_quotient);
        t.hdata.push_back(std::move(hd));
    }

    for (int hi = 0; hi < (int)t.hdata.size(); ++hi) {
        const HData& hd = t.hdata[hi];
        for (int mi = 0; mi < (int)hd.merged.size(); ++mi) {
            Superclass sc;
            sc.hdata = hi;
            sc.merged_index = mi;
            int least_orbit = hd.merged[mi].front();
            for (int o : hd.merged[mi])
                if (hd.qorbits.reps[o] < hd.qorbits.reps[least_orbit]) least_orbit = o;
            sc.omega_rep = hd.qorbits.reps[least_orbit];
            auto pre = preimage_codes(x, hd.quo, hd.qorbits, least_orbit);
            if (t.flavor == Flavor::GG) {
                for (uint32_t l : x.L.classes().members[hd.h_class])
                    for (uint64_t c : pre) sc.members.push_back(x.gindex(l, c));
            } else {
                std::vector<Vec> prev;
                prev.reserve(pre.size());
                for (uint64_t c : pre) prev.push_back(decode(c, x.J.p, x.J.dim));
                for (uint32_t r = 0; r < x.L.n; ++r) {
                    uint32_t hconj = x.L.conj(r, hd.h);
                    Mat ad = x.ad_mat(r);
                    for (const Vec& xv : prev)
                        sc.members.push_back(x.gindex(hconj, encode(apply(ad, xv))));
                }
            }
            std::sort(sc.members.begin(), sc.members.end());
            sc.members.erase(std::unique(sc.members.begin(), sc.members.end()),
                             sc.members.end());
            t.b_classes.push_back(std::move(sc));
        }
    }

    // value table at one member per superclass
    t.table.assign(t.a_params.size(), {});
    for (size_t a = 0; a < t.a_params.size(); ++a) {
        t.table[a].reserve(t.b_classes.size());
        for (const Superclass& sc : t.b_classes)
            t.table[a].push_back(superchar_closed(t, (int)a, sc.members.front()).lifted(t.n_cyclo));
    }

    t.report = verify_theory(t, opts.check_irr);
    return t;
}

Theory build_di(const ExtensionGroup& x, const BuildOptions& opts) {
    return build_theory(x, Flavor::DI, opts);
}

VerifyReport verify_theory(const Theory& t, bool check_irr) {
    const ExtensionGroup& x = *t.x;
    VerifyReport r;
    auto fail = [&](const std::string& msg) {
        if (r.witness.empty()) r.witness = msg;
    };

    // (c)
    r.counts_equal = t.a_params.size() == t.b_classes.size();
    if (!r.counts_equal)
        fail("|A| = " + std::to_string(t.a_params.size()) +
             " but |B| = " + std::to_string(t.b_classes.size()));

    // (d) partition of G, {1} a class, classes are unions of conjugacy classes
    std::vector<int> covered(x.G.n, -1);
    r.partition = true;
    uint64_t total = 0;
    for (size_t b = 0; b < t.b_classes.size(); ++b) {
        total += t.b_classes[b].members.size();
        for (uint32_t g : t.b_classes[b].members) {
            if (covered[g] >= 0) {
                r.partition = false;
                fail("superclasses overlap at element " + x.G.keys[g]);
            }
            covered[g] = (int)b;
        }
    }
    if (total != x.G.n) {
        r.partition = false;
        fail("superclasses cover " + std::to_string(total) + " of " + std::to_string(x.G.n) +
             " elements");
    }
    const auto& gcc = x.G.classes();
    for (size_t b = 0; b < t.b_classes.size() && r.partition; ++b)
        for (uint32_t g : t.b_classes[b].members) {
            int cls = gcc.class_of[g];
            if (covered[gcc.rep[cls]] != (int)b) {
                r.partition = false;
                fail("superclass splits the conjugacy class of " + x.G.keys[gcc.rep[cls]]);
                break;
            }
        }
    r.identity_class = false;
    int id_class = -1;
    for (size_t b = 0; b < t.b_classes.size(); ++b)
        if (t.b_classes[b].members.size() == 1 && t.b_classes[b].members[0] == x.G.id) {
            r.identity_class = true;
            id_class = (int)b;
        }
    if (!r.identity_class) fail("{1} is not a superclass");

    // (b) each character is constant on each superclass (exhaustive)
    r.constant = true;
    for (size_t a = 0; a < t.a_params.size() && r.constant; ++a)
        for (size_t b = 0; b < t.b_classes.size() && r.constant; ++b)
            for (uint32_t g : t.b_classes[b].members) {
                Cyclotomic v = superchar_closed(t, (int)a, g);
                if (!(v == t.table[a][b])) {
                    r.constant = false;
                    fail("character " + std::to_string(a) + " is not constant on superclass " +
                         std::to_string(b) + " (witness element " + x.G.keys[g] + ")");
                    break;
                }
            }

    // (a) pairwise orthogonality from the table and superclass sizes
    r.orthogonal = true;
    for (size_t a1 = 0; a1 < t.a_params.size() && r.orthogonal; ++a1)
        for (size_t a2 = a1; a2 < t.a_params.size(); ++a2) {
            Cyclotomic acc;
            for (size_t b = 0; b < t.b_classes.size(); ++b) {
                Cyclotomic term = t.table[a1][b] * t.table[a2][b].conj();
                acc += term.scaled(Rational((long)t.b_classes[b].members.size()));
            }
            acc = acc.scaled(Rational(1, (long)x.G.n));
            if (a1 == a2) {
                if (acc.is_zero()) {
                    r.orthogonal = false;
                    fail("character " + std::to_string(a1) + " has zero norm");
                    break;
                }
            } else if (!acc.is_zero()) {
                r.orthogonal = false;
                fail("characters " + std::to_string(a1) + " and " + std::to_string(a2) +
                     " are not orthogonal");
                break;
            }
        }

    // (e) degrees are positive integers
    r.degrees = true;
    if (id_class >= 0) {
        for (size_t a = 0; a < t.a_params.size(); ++a) {
            const Cyclotomic& deg = t.table[a][id_class];
            if (!deg.is_nonneg_integer() || deg.is_zero()) {
                r.degrees = false;
                fail("character " + std::to_string(a) + " has degree " + deg.str());
                break;
            }
        }
    } else {
        r.degrees = false;
    }

    // (f) each irreducible is a constituent of exactly one supercharacter
    if (check_irr) {
        CharacterTable tab = dixon_table(x.G);
        bool ok = true;
        std::vector<int> owner(tab.irr.size(), -1);
        for (size_t a = 0; a < t.a_params.size() && ok; ++a) {
            ClassFunction chi;
            chi.g = &x.G;
            chi.v.resize(gcc.count());
            for (int c = 0; c < gcc.count(); ++c)
                chi.v[c] = t.table[a][covered[gcc.rep[c]]];
            for (size_t i = 0; i < tab.irr.size(); ++i) {
                Cyclotomic ip = inner_product(chi, tab.irr[i]);
                if (!ip.is_nonneg_integer()) {
                    ok = false;
                    fail("multiplicity of irreducible " + std::to_string(i) + " in character " +
                         std::to_string(a) + " is " + ip.str());
                    break;
                }
                if (!ip.is_zero()) {
                    if (owner[i] >= 0) {
                        ok = false;
                        fail("irreducible " + std::to_string(i) + " appears in characters " +
                             std::to_string(owner[i]) + " and " + std::to_string(a));
                        break;
                    }
                    owner[i] = (int)a;
                }
            }
        }
        for (size_t i = 0; i < owner.size() && ok; ++i)
            if (owner[i] < 0) {
                ok = false;
                fail("irreducible " + std::to_string(i) + " appears in no supercharacter");
            }
        r.irr_partition = ok;
    }
    return r;
}

std::string theory_to_json(const Theory& t, const std::string& group_descriptor_json) {
    const ExtensionGroup& x = *t.x;
    nlohmann::ordered_json doc;
    doc["format"] = "sct-theory/1";
    doc["flavor"] = flavor_name(t.flavor);
    doc["group"] = nlohmann::ordered_json::parse(group_descriptor_json);
    doc["p"] = x.J.p;
    doc["N"] = t.n_cyclo;
    doc["epsilon_power"] = t.eps_power;
    doc["group_order"] = x.G.n;

    auto params = nlohmann::ordered_json::array();
    for (const auto& sp : t.a_params) {
        const ParamFamily& fam = t.families[sp.family];
        nlohmann::ordered_json pj;
        Vec lambda = decode(fam.lambda, x.J.p, x.J.dim);
        pj["lambda"] = std::vector<int>(lambda.c.begin(), lambda.c.end());
        pj["stabilizer_order"] = fam.H.size();
        auto tv = nlohmann::ordered_json::array();
        for (const auto& v : fam.thetas[sp.theta].v) tv.push_back(v.lifted(t.n_cyclo).str());
        pj["theta"] = tv;
        params.push_back(pj);
    }
    doc["parameters"] = params;

    auto classes = nlohmann::ordered_json::array();
    for (const auto& sc : t.b_classes) {
        nlohmann::ordered_json cj;
        cj["rep"] = x.G.keys[sc.members.front()];
        cj["size"] = sc.members.size();
        cj["h"] = x.L.keys[t.hdata[sc.hdata].h];
        classes.push_back(cj);
    }
    doc["superclasses"] = classes;

    auto values = nlohmann::ordered_json::array();
    for (const auto& row : t.table) {
        auto rj = nlohmann::ordered_json::array();
        for (const auto& v : row) rj.push_back(v.lifted(t.n_cyclo).str());
        values.push_back(rj);
    }
    doc["values"] = values;

    nlohmann::ordered_json rep;
    rep["orthogonal"] = t.report.orthogonal;
    rep["constant_on_superclasses"] = t.report.constant;
    rep["counts_equal"] = t.report.counts_equal;
    rep["partition"] = t.report.partition;
    rep["identity_class"] = t.report.identity_class;
    rep["degrees_positive"] = t.report.degrees;
    if (t.report.irr_partition.has_value()) rep["irreducible_partition"] = *t.report.irr_partition;
    rep["pass"] = t.report.pass();
    if (!t.report.witness.empty()) rep["witness"] = t.report.witness;
    doc["verification"] = rep;
    return doc.dump(2);
}

std::string theory_to_csv(const Theory& t) {
    const ExtensionGroup& x = *t.x;
    std::ostringstream out;
    out << "parameter";
    for (size_t b = 0; b < t.b_classes.size(); ++b)
        out << ",K" << b << "[" << x.G.keys[t.b_classes[b].members.front()] << "]x"
            << t.b_classes[b].members.size();
    out << "\n";
    char buf[96];
    for (size_t a = 0; a < t.table.size(); ++a) {
        out << "chi" << a;
        for (const auto& v : t.table[a]) {
            auto z = v.approx();
            std::snprintf(buf, sizeof buf, ",%.12g%+.12gi", z.real(), z.imag());
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace sct
