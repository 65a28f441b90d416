#include "sct/actions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sct {

const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::DI: return "DI";
        case Flavor::GG: return "GG";
        case Flavor::GU: return "GU";
        case Flavor::UU: return "UU";
    }
    return "?";
}

Flavor flavor_from_name(const std::string& s) {
    if (s == "DI") return Flavor::DI;
    if (s == "GG") return Flavor::GG;
    if (s == "GU") return Flavor::GU;
    if (s == "UU") return Flavor::UU;
    throw std::invalid_argument("unknown flavor: " + s);
}

void flavor_dual_actors(Flavor f, Actor& left, Actor& right) {
    switch (f) {
        case Flavor::GG: left = Actor::G; right = Actor::G; break;
        case Flavor::GU: left = Actor::G; right = Actor::U; break;
        case Flavor::DI:
        case Flavor::UU: left = Actor::U; right = Actor::U; break;
    }
}

void flavor_class_actors(Flavor f, Actor& left, Actor& right) {
    switch (f) {
        case Flavor::GG: left = Actor::G; right = Actor::G; break;
        case Flavor::GU: left = Actor::U; right = Actor::G; break;
        case Flavor::DI:
        case Flavor::UU: left = Actor::U; right = Actor::U; break;
    }
}

namespace {

std::vector<uint32_t> actor_elements(const ExtensionGroup& x, Actor a) {
    switch (a) {
        case Actor::G: {
            std::vector<uint32_t> all(x.G.n);
            for (uint32_t i = 0; i < x.G.n; ++i) all[i] = i;
            return all;
        }
        case Actor::L: return x.l_elements();
        case Actor::U: return x.u_elements();
        case Actor::None: return {};
    }
    return {};
}

} // namespace

std::vector<Mat> actor_moves(const ExtensionGroup& x, Carrier c, Actor left, Actor right) {
    std::vector<Mat> moves;
    for (uint32_t g : actor_elements(x, left))
        moves.push_back(c == Carrier::J ? x.act_left[g] : transpose(x.act_right[g]));
    for (uint32_t g : actor_elements(x, right))
        moves.push_back(c == Carrier::J ? x.act_right[g] : transpose(x.act_left[g]));
    return moves;
}

OrbitSet orbit_enum_moves(int p, int dim, Carrier c, const std::vector<Mat>& moves,
                          uint64_t budget) {
    uint64_t total = pow_u64(p, dim);
    if (total > budget)
        throw BudgetError("orbit enumeration over " + std::to_string(total) +
                          " elements exceeds budget " + std::to_string(budget));
    OrbitSet os;
    os.carrier = c;
    os.orbit_of.assign(total, -1);
    for (uint64_t seed = 0; seed < total; ++seed) {
        if (os.orbit_of[seed] >= 0) continue;
        int oid = (int)os.reps.size();
        std::vector<uint64_t> mem;
        os.orbit_of[seed] = oid;
        mem.push_back(seed);
        std::deque<uint64_t> work;
        work.push_back(seed);
        while (!work.empty()) {
            uint64_t cur = work.front();
            work.pop_front();
            Vec v = decode(cur, p, dim);
            for (const Mat& m : moves) {
                uint64_t next = encode(apply(m, v));
                if (os.orbit_of[next] < 0) {
                    os.orbit_of[next] = oid;
                    mem.push_back(next);
                    work.push_back(next);
                }
            }
        }
        std::sort(mem.begin(), mem.end());
        os.reps.push_back(mem.front());
        os.members.push_back(std::move(mem));
    }
    return os;
}

OrbitSet orbit_enum(const ExtensionGroup& x, Carrier c, Actor left, Actor right,
                    uint64_t budget) {
    return orbit_enum_moves(x.J.p, x.J.dim, c, actor_moves(x, c, left, right), budget);
}

SpanBasis right_stabilizer_algebra(const NilpotentAlgebra& j, const Vec& lambda) {
    // y in J_{lambda,rt}  <=>  sum_i y_i lambda(e_i e_j) = 0 for every j
    Mat m(j.p, j.dim, j.dim);
    for (int i = 0; i < j.dim; ++i)
        for (int jj = 0; jj < j.dim; ++jj)
            m.at(jj, i) = (uint8_t)form_eval(lambda, j.j_mul(j.basis_vec(i), j.basis_vec(jj)));
    SpanBasis out(j.p, j.dim);
    for (const Vec& v : kernel_basis(m)) out.insert(v);
    return out;
}

uint64_t lambda_u_size(const NilpotentAlgebra& j, const Vec& lambda) {
    // lambda J is spanned by the forms x -> lambda(e_i x)
    SpanBasis span(j.p, j.dim);
    for (int i = 0; i < j.dim; ++i) {
        Vec row(j.p, j.dim);
        for (int jj = 0; jj < j.dim; ++jj)
            row.c[jj] = (uint8_t)form_eval(lambda, j.j_mul(j.basis_vec(i), j.basis_vec(jj)));
        span.insert(row);
    }
    return pow_u64(j.p, span.rank());
}

std::vector<uint32_t> pointwise_stabilizer(const ExtensionGroup& x,
                                           const std::vector<uint64_t>& form_codes) {
    std::vector<Vec> forms;
    forms.reserve(form_codes.size());
    for (uint64_t c : form_codes) forms.push_back(decode(c, x.J.p, x.J.dim));
    std::vector<uint32_t> out;
    for (uint32_t h = 0; h < x.L.n; ++h) {
        bool ok = true;
        for (const Vec& mu : forms)
            if (!(x.coad(h, mu) == mu)) { ok = false; break; }
        if (ok) out.push_back(h);
    }
    return out;
}

std::vector<uint32_t> setwise_stabilizer(const ExtensionGroup& x, const OrbitSet& orbits,
                                         int orbit_id) {
    if (orbits.carrier != Carrier::DualJ)
        throw std::invalid_argument("setwise_stabilizer expects a dual-space orbit");
    Vec rep = decode(orbits.reps[orbit_id], x.J.p, x.J.dim);
    std::vector<uint32_t> out;
    for (uint32_t h = 0; h < x.L.n; ++h) {
        uint64_t moved = encode(x.coad(h, rep));
        if (orbits.orbit_of[moved] == orbit_id) out.push_back(h);
    }
    return out;
}

namespace {

// flavor-specific linear maps on J* whose invariant subspaces are the spans
// of unions of flavor orbits: L generators (invertible) plus the two algebra
// actions of basis elements (the linearizations of the U actions)
std::vector<Mat> dual_invariance_maps(const ExtensionGroup& x, Flavor f) {
    Actor la, ra;
    flavor_dual_actors(f, la, ra);
    std::vector<Mat> maps;
    for (int i = 0; i < x.J.dim; ++i) {
        Mat lm = x.J.left_mult_matrix(x.J.basis_vec(i));
        Mat rm = x.J.right_mult_matrix(x.J.basis_vec(i));
        if (la == Actor::G || la == Actor::U) maps.push_back(transpose(rm)); // (y mu)(x)=mu(xy)
        if (ra == Actor::G || ra == Actor::U) maps.push_back(transpose(lm)); // (mu y)(x)=mu(yx)
    }
    for (int gen : x.l_gens) {
        uint32_t g = x.gindex((uint32_t)gen, encode(x.J.zero()));
        if (la == Actor::G || la == Actor::L) maps.push_back(transpose(x.act_right[g]));
        if (ra == Actor::G || ra == Actor::L) maps.push_back(transpose(x.act_left[g]));
    }
    return maps;
}

} // namespace

InvariantIdeal ideal_of(const ExtensionGroup& x, uint32_t h, Flavor f,
                        const OrbitSet& dual_orbits) {
    InvariantIdeal out;
    out.h = h;
    out.flavor = f;
    out.vspan = SpanBasis(x.J.p, x.J.dim);
    for (int o = 0; o < dual_orbits.count(); ++o) {
        // h fixes the orbit pointwise iff it fixes every member
        bool fixed = true;
        for (uint64_t code : dual_orbits.members[o]) {
            Vec mu = decode(code, x.J.p, x.J.dim);
            if (!(x.coad(h, mu) == mu)) { fixed = false; break; }
        }
        if (!fixed) continue;
        for (uint64_t code : dual_orbits.members[o])
            out.vspan.insert(decode(code, x.J.p, x.J.dim));
    }
    out.basis = SpanBasis(x.J.p, x.J.dim);
    for (const Vec& v : out.vspan.annihilator()) out.basis.insert(v);

    // two-sided ideal check
    for (const Vec& b : out.basis.rows)
        for (int i = 0; i < x.J.dim; ++i) {
            if (!out.basis.contains(x.J.j_mul(x.J.basis_vec(i), b)))
                throw AxiomError("ideal_of: not a left ideal");
            if (!out.basis.contains(x.J.j_mul(b, x.J.basis_vec(i))))
                throw AxiomError("ideal_of: not a right ideal");
        }
    // flavor invariance under L
    for (uint32_t l = 0; l < x.L.n; ++l)
        for (const Vec& b : out.basis.rows) {
            if (f == Flavor::GG && !out.basis.contains(apply(x.lact[l].left, b)))
                throw AxiomError("ideal_of: GG ideal not left L-invariant");
            if ((f == Flavor::GG || f == Flavor::GU) &&
                !out.basis.contains(apply(x.lact[l].right, b)))
                throw AxiomError("ideal_of: ideal not right L-invariant");
        }
    return out;
}

SpanBasis ideal_of_linear(const ExtensionGroup& x, uint32_t h, Flavor f) {
    int p = x.J.p, d = x.J.dim;
    // Fix(Ad*_h) = kernel of (coadjoint matrix - identity)
    Mat coad_mat = transpose(x.ad_mat(x.L.inv(h)));
    Mat shifted = sub(coad_mat, Mat::identity(p, d));
    SpanBasis w(p, d);
    for (const Vec& v : kernel_basis(shifted)) w.insert(v);

    w = max_invariant_subspace(std::move(w), dual_invariance_maps(x, f));
    SpanBasis ideal(p, d);
    for (const Vec& v : w.annihilator()) ideal.insert(v);
    return ideal;
}

Quotient make_quotient(int p, int dim, const SpanBasis& ideal) {
    Quotient q;
    q.p = p;
    q.dim = dim;
    q.ideal = ideal;
    std::vector<bool> is_pivot(dim, false);
    for (int c : ideal.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    q.qdim = (int)free_cols.size();
    // proj(x) = coordinates of (x reduced mod ideal) at the free columns
    q.proj = Mat(p, q.qdim, dim);
    for (int c = 0; c < dim; ++c) {
        Vec ec(p, dim);
        ec.c[c] = 1;
        Vec red = ideal.reduce(ec);
        for (int r = 0; r < q.qdim; ++r) q.proj.at(r, c) = red.c[free_cols[r]];
    }
    q.lift = Mat(p, dim, q.qdim);
    for (int r = 0; r < q.qdim; ++r) q.lift.at(free_cols[r], r) = 1;
    return q;
}

Mat induced_on_quotient(const Quotient& q, const Mat& action) {
    for (const Vec& b : q.ideal.rows)
        if (!q.ideal.contains(apply(action, b)))
            throw AxiomError("quotient action: ideal is not invariant");
    return mul(q.proj, mul(action, q.lift));
}

OrbitSet quotient_orbits(const ExtensionGroup& x, const Quotient& q, Actor left, Actor right,
                         uint64_t budget) {
    std::vector<Mat> moves;
    for (const Mat& m : actor_moves(x, Carrier::J, left, right))
        moves.push_back(induced_on_quotient(q, m));
    return orbit_enum_moves(q.p, q.qdim, Carrier::J, moves, budget);
}

} // namespace sct
