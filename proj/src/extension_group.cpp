#include "sct/extension_group.hpp"

#include <numeric>
#include <stdexcept>

namespace sct {

Mat ExtensionGroup::ad_mat(uint32_t l) const {
    return mul(lact[l].left, lact[L.inv(l)].right);
}

Vec ExtensionGroup::coad(uint32_t l, const Vec& mu) const {
    return apply(transpose(ad_mat(L.inv(l))), mu);
}

Vec ExtensionGroup::form_left(uint32_t g, const Vec& mu) const {
    return apply(transpose(act_right[g]), mu);
}

Vec ExtensionGroup::form_right(const Vec& mu, uint32_t g) const {
    return apply(transpose(act_left[g]), mu);
}

std::vector<uint32_t> ExtensionGroup::u_elements() const {
    std::vector<uint32_t> out;
    out.reserve(usize);
    for (uint64_t c = 0; c < usize; ++c) out.push_back(gindex(L.id, c));
    return out;
}

std::vector<uint32_t> ExtensionGroup::l_elements() const {
    std::vector<uint32_t> out;
    out.reserve(L.n);
    for (uint32_t l = 0; l < L.n; ++l) out.push_back(gindex(l, encode(J.zero())));
    return out;
}

std::vector<uint32_t> ExtensionGroup::mixed_subgroup(const std::vector<uint32_t>& l_subset,
                                                     const std::vector<uint64_t>& u_codes) const {
    std::vector<uint32_t> out;
    out.reserve(l_subset.size() * u_codes.size());
    for (uint32_t l : l_subset)
        for (uint64_t c : u_codes) out.push_back(gindex(l, c));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void validate_action_conditions(const NilpotentAlgebra& j, const Group& l,
                                const std::vector<LAction>& lact) {
    for (uint32_t h = 0; h < l.n; ++h) {
        const Mat& lh = lact[h].left;
        const Mat& rh = lact[h].right;
        for (int a = 0; a < j.dim; ++a) {
            Vec ea = j.basis_vec(a);
            Vec hea = apply(lh, ea);
            Vec eah = apply(rh, ea);
            for (int b = 0; b < j.dim; ++b) {
                Vec eb = j.basis_vec(b);
                Vec prod = j.j_mul(ea, eb);
                // h(xy) = (hx)y
                if (!(apply(lh, prod) == j.j_mul(hea, eb)))
                    throw AxiomError("extension: condition h(xy)=(hx)y fails");
                // (xy)h = x(yh)
                if (!(apply(rh, prod) == j.j_mul(ea, apply(rh, eb))))
                    throw AxiomError("extension: condition (xy)h=x(yh) fails");
                // x(hy) = (xh)y
                if (!(j.j_mul(ea, apply(lh, eb)) == j.j_mul(eah, eb)))
                    throw AxiomError("extension: condition x(hy)=(xh)y fails");
            }
        }
        // the left action is a homomorphism, the right one an antihomomorphism
        for (uint32_t h2 = 0; h2 < l.n; ++h2) {
            uint32_t prod = l.mul(h, h2);
            if (!(mul(lact[h].left, lact[h2].left) == lact[prod].left))
                throw AxiomError("extension: left action not multiplicative");
            if (!(mul(lact[h2].right, lact[h].right) == lact[prod].right))
                throw AxiomError("extension: right action not multiplicative");
            if (!(mul(lact[h].left, lact[h2].right) == mul(lact[h2].right, lact[h].left)))
                throw AxiomError("extension: left/right actions do not commute");
        }
    }
}

} // namespace

ExtensionGroup build_extension(NilpotentAlgebra j, Group l, std::vector<LAction> lact,
                               std::vector<int> l_gens, std::vector<Mat> l_mats, int n_amb,
                               uint64_t budget, uint64_t group_budget) {
    ExtensionGroup x;
    x.J = std::move(j);
    x.L = std::move(l);
    x.lact = std::move(lact);
    x.l_gens = std::move(l_gens);
    x.l_mats = std::move(l_mats);
    x.n_amb = n_amb;

    x.usize = x.J.usize();
    if (x.usize > budget)
        throw BudgetError("extension: |U| = " + std::to_string(x.usize) + " exceeds budget");
    uint64_t gsize = x.usize * x.L.n;
    if (gsize > group_budget)
        throw BudgetError("extension: |G| = " + std::to_string(gsize) +
                          " exceeds group table budget");

    validate_action_conditions(x.J, x.L, x.lact);

    // Ad_h is an automorphism of U: Ad_h(x) Ad_h(y) spans checked via algebra
    for (uint32_t h = 0; h < x.L.n; ++h) {
        Mat ad = x.ad_mat(h);
        for (int a = 0; a < x.J.dim; ++a)
            for (int b = 0; b < x.J.dim; ++b) {
                Vec lhs = apply(ad, x.J.j_mul(x.J.basis_vec(a), x.J.basis_vec(b)));
                Vec rhs = x.J.j_mul(apply(ad, x.J.basis_vec(a)), apply(ad, x.J.basis_vec(b)));
                if (!(lhs == rhs)) throw AxiomError("extension: Ad_h is not an algebra map");
            }
    }

    // multiplication table: (h1,u1)(h2,u2) = (h1 h2, Ad_{h2^{-1}}(u1) * u2)
    uint32_t n = (uint32_t)gsize;
    std::vector<uint32_t> table((size_t)n * n);
    std::vector<Vec> uvecs(x.usize);
    for (uint64_t c = 0; c < x.usize; ++c) uvecs[c] = decode(c, x.J.p, x.J.dim);
    for (uint32_t h1 = 0; h1 < x.L.n; ++h1)
        for (uint32_t h2 = 0; h2 < x.L.n; ++h2) {
            uint32_t hprod = x.L.mul(h1, h2);
            Mat ad = x.ad_mat(x.L.inv(h2));
            for (uint64_t c1 = 0; c1 < x.usize; ++c1) {
                Vec moved = apply(ad, uvecs[c1]);
                uint32_t a = x.gindex(h1, c1);
                for (uint64_t c2 = 0; c2 < x.usize; ++c2) {
                    Vec u = x.J.u_mul(moved, uvecs[c2]);
                    table[(size_t)a * n + x.gindex(h2, c2)] = x.gindex(hprod, encode(u));
                }
            }
        }
    std::vector<std::string> keys(n);
    for (uint32_t h = 0; h < x.L.n; ++h)
        for (uint64_t c = 0; c < x.usize; ++c) {
            std::string k = x.L.keys[h] + "|";
            Vec u = uvecs[c];
            for (int i = 0; i < x.J.dim; ++i) k += (char)('0' + u.c[i]);
            keys[x.gindex(h, c)] = k;
        }
    x.G = Group::from_table(std::move(table), std::move(keys));

    // per-element action matrices on J
    x.act_left.resize(n);
    x.act_right.resize(n);
    Mat eye = Mat::identity(x.J.p, x.J.dim);
    for (uint32_t h = 0; h < x.L.n; ++h)
        for (uint64_t c = 0; c < x.usize; ++c) {
            uint32_t g = x.gindex(h, c);
            Mat lu = add(eye, x.J.left_mult_matrix(uvecs[c]));
            Mat ru = add(eye, x.J.right_mult_matrix(uvecs[c]));
            x.act_left[g] = mul(x.lact[h].left, lu);   // g*x = h(u x)
            x.act_right[g] = mul(ru, x.lact[h].right); // x*g = (x h)u
        }

    // the two G actions on J are mutually commuting group actions
    // (exhaustive on small groups, implied by the L conditions in general)
    if (n <= 128) {
        for (uint32_t g1 = 0; g1 < n; ++g1)
            for (uint32_t g2 = 0; g2 < n; ++g2) {
                uint32_t prod = x.G.mul(g1, g2);
                if (!(mul(x.act_left[g1], x.act_left[g2]) == x.act_left[prod]))
                    throw AxiomError("extension: left G action not multiplicative");
                if (!(mul(x.act_right[g2], x.act_right[g1]) == x.act_right[prod]))
                    throw AxiomError("extension: right G action not multiplicative");
            }
    }
    return x;
}

ExtensionGroup algebra_group_extension(NilpotentAlgebra j, uint64_t budget,
                                       uint64_t group_budget) {
    Group l = Group::trivial();
    std::vector<LAction> lact(1);
    lact[0].left = Mat::identity(j.p, j.dim);
    lact[0].right = Mat::identity(j.p, j.dim);
    return build_extension(std::move(j), std::move(l), std::move(lact), {0}, {}, 0, budget,
                           group_budget);
}

} // namespace sct
