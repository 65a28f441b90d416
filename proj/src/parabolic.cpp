#include "sct/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sct {

Composition Composition::make(int n, std::vector<int> blocks) {
    Composition c;
    c.n = n;
    c.blocks = std::move(blocks);
    int sum = 0;
    for (int b : c.blocks) {
        if (b <= 0) throw std::invalid_argument("composition blocks must be positive");
        sum += b;
    }
    if (sum != n) throw std::invalid_argument("composition blocks must sum to n");
    c.block_of.resize(n);
    int pos = 0;
    for (size_t k = 0; k < c.blocks.size(); ++k) {
        c.start.push_back(pos);
        for (int t = 0; t < c.blocks[k]; ++t) c.block_of[pos++] = (int)k;
    }
    return c;
}

std::string Composition::str() const {
    std::string s;
    for (size_t k = 0; k < blocks.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(blocks[k]);
    }
    return s;
}

std::vector<int> RookPlacement::profile(const Composition& c) const {
    int ell = c.block_count();
    std::vector<int> prof;
    for (int k = 0; k < ell; ++k)
        for (int m = k + 1; m < ell; ++m) {
            int count = 0;
            for (const JRoot& r : roots)
                if (c.block_of[r.i] == k && c.block_of[r.j] == m) ++count;
            prof.push_back(count);
        }
    return prof;
}

std::string RookPlacement::str() const {
    if (roots.empty()) return "-";
    std::string s;
    for (size_t t = 0; t < roots.size(); ++t) {
        if (t) s += ";";
        s += "(" + std::to_string(roots[t].i + 1) + "," + std::to_string(roots[t].j + 1) + ")";
    }
    return s;
}

ParabolicShape make_shape(int n, int p, const std::vector<int>& blocks) {
    ParabolicShape s;
    s.comp = Composition::make(n, blocks);
    s.p = p;
    s.root_idx.assign((size_t)n * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.comp.block_of[i] < s.comp.block_of[j]) {
                s.root_idx[(size_t)i * n + j] = (int)s.roots.size();
                s.roots.push_back({i, j});
            }
    s.J.p = p;
    s.J.dim = (int)s.roots.size();
    s.J.mult.assign(s.J.dim, std::vector<std::vector<std::pair<int, int>>>(s.J.dim));
    for (int a = 0; a < s.J.dim; ++a)
        for (int b = 0; b < s.J.dim; ++b)
            if (s.roots[a].j == s.roots[b].i)
                s.J.mult[a][b].push_back({s.root_idx[(size_t)s.roots[a].i * n + s.roots[b].j], 1});
    s.J.validate();
    return s;
}

Mat ParabolicShape::to_matrix(const Vec& coords) const {
    Mat m(p, comp.n, comp.n);
    for (int t = 0; t < dim(); ++t) m.at(roots[t].i, roots[t].j) = coords.c[t];
    return m;
}

Vec ParabolicShape::to_coords(const Mat& m) const {
    Vec v(p, dim());
    for (int t = 0; t < dim(); ++t) v.c[t] = m.at(roots[t].i, roots[t].j);
    return v;
}

Vec x_of(const ParabolicShape& s, const RookPlacement& d) {
    Vec v(s.p, s.dim());
    for (const JRoot& r : d.roots) v.c[s.root_idx[(size_t)r.i * s.comp.n + r.j]] = 1;
    return v;
}

Vec lambda_of(const ParabolicShape& s, const RookPlacement& d) { return x_of(s, d); }

std::vector<Mat> gl_matrices(int n, int p, uint64_t budget) {
    uint64_t total = pow_u64(p, n * n);
    if (total > 64 * budget)
        throw BudgetError("GL(" + std::to_string(n) + "," + std::to_string(p) +
                          ") enumeration too large");
    std::vector<Mat> out;
    Mat dummy;
    for (uint64_t code = 0; code < total; ++code) {
        Vec flat = decode(code, p, n * n);
        Mat m(p, n, n);
        m.a.assign(flat.c.begin(), flat.c.end());
        if (try_inverse(m, dummy)) out.push_back(m);
    }
    if (out.size() > budget) throw BudgetError("GL enumeration exceeds budget");
    return out; // already in key order: code order == key order
}

std::vector<Mat> gl_generators(int n, int p) {
    std::vector<Mat> gens;
    if (n == 1) {
        if (p > 2) {
            Mat d = Mat::identity(p, 1);
            d.at(0, 0) = (uint8_t)smallest_generator_mod(p);
            gens.push_back(d);
        }
        return gens;
    }
    Mat swap01 = Mat(p, n, n);
    for (int i = 2; i < n; ++i) swap01.at(i, i) = 1;
    swap01.at(0, 1) = 1;
    swap01.at(1, 0) = 1;
    gens.push_back(swap01);
    if (n > 2) {
        Mat cyc(p, n, n);
        for (int i = 0; i < n; ++i) cyc.at((i + 1) % n, i) = 1;
        gens.push_back(cyc);
    }
    Mat trans = Mat::identity(p, n);
    trans.at(0, 1) = 1;
    gens.push_back(trans);
    if (p > 2) {
        Mat d = Mat::identity(p, n);
        d.at(0, 0) = (uint8_t)smallest_generator_mod(p);
        gens.push_back(d);
    }
    return gens;
}

namespace {

Mat embed_block(const ParabolicShape& s, int block, const Mat& m) {
    Mat out = Mat::identity(s.p, s.comp.n);
    int b0 = s.comp.start[block];
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(b0 + i, b0 + j) = m.at(i, j);
    return out;
}

} // namespace

std::vector<Mat> enumerate_block_l(const ParabolicShape& s, uint64_t budget) {
    std::vector<std::vector<Mat>> per_block;
    uint64_t total = 1;
    for (int k = 0; k < s.comp.block_count(); ++k) {
        per_block.push_back(gl_matrices(s.comp.blocks[k], s.p, budget));
        total *= per_block.back().size();
        if (total > budget)
            throw BudgetError("|L| = " + std::to_string(total) + " exceeds budget " +
                              std::to_string(budget));
    }
    std::vector<Mat> out;
    out.reserve(total);
    std::vector<size_t> idx(per_block.size(), 0);
    while (true) {
        Mat m = Mat::identity(s.p, s.comp.n);
        for (size_t k = 0; k < per_block.size(); ++k) {
            const Mat& b = per_block[k][idx[k]];
            int b0 = s.comp.start[k];
            for (int i = 0; i < b.rows; ++i)
                for (int j = 0; j < b.cols; ++j) m.at(b0 + i, b0 + j) = b.at(i, j);
        }
        out.push_back(std::move(m));
        size_t k = per_block.size();
        while (k > 0) {
            --k;
            if (++idx[k] < per_block[k].size()) break;
            idx[k] = 0;
            if (k == 0) {
                std::sort(out.begin(), out.end(),
                          [](const Mat& a, const Mat& b) { return a.a < b.a; });
                return out;
            }
        }
    }
}

std::vector<Mat> block_l_generators(const ParabolicShape& s) {
    std::vector<Mat> gens;
    for (int k = 0; k < s.comp.block_count(); ++k)
        for (const Mat& g : gl_generators(s.comp.blocks[k], s.p))
            gens.push_back(embed_block(s, k, g));
    return gens;
}

ExtensionGroup build_parabolic(int n, int p, const std::vector<int>& blocks, uint64_t budget,
                               uint64_t group_budget) {
    ParabolicShape s = make_shape(n, p, blocks);
    std::vector<Mat> lmats = enumerate_block_l(s, budget);

    std::unordered_map<std::string, uint32_t> index;
    for (uint32_t i = 0; i < lmats.size(); ++i) index[lmats[i].key()] = i;
    uint32_t ln = (uint32_t)lmats.size();
    std::vector<uint32_t> table((size_t)ln * ln);
    for (uint32_t a = 0; a < ln; ++a)
        for (uint32_t b = 0; b < ln; ++b)
            table[(size_t)a * ln + b] = index.at(mul(lmats[a], lmats[b]).key());
    std::vector<std::string> keys(ln);
    for (uint32_t i = 0; i < ln; ++i) keys[i] = lmats[i].key();
    Group l = Group::from_table(std::move(table), std::move(keys));

    std::vector<LAction> lact(ln);
    for (uint32_t i = 0; i < ln; ++i) {
        Mat left(p, s.dim(), s.dim()), right(p, s.dim(), s.dim());
        for (int t = 0; t < s.dim(); ++t) {
            Mat e(p, n, n);
            e.at(s.roots[t].i, s.roots[t].j) = 1;
            Vec lcol = s.to_coords(mul(lmats[i], e));
            Vec rcol = s.to_coords(mul(e, lmats[i]));
            for (int r = 0; r < s.dim(); ++r) {
                left.at(r, t) = lcol.c[r];
                right.at(r, t) = rcol.c[r];
            }
        }
        lact[i] = {std::move(left), std::move(right)};
    }
    std::vector<int> gens;
    for (const Mat& g : block_l_generators(s)) gens.push_back((int)index.at(g.key()));
    return build_extension(s.J, std::move(l), std::move(lact), std::move(gens), std::move(lmats),
                           n, budget, group_budget);
}

std::vector<RookPlacement> all_rook_placements(const Composition& c) {
    std::vector<JRoot> roots;
    for (int i = 0; i < c.n; ++i)
        for (int j = i + 1; j < c.n; ++j)
            if (c.block_of[i] < c.block_of[j]) roots.push_back({i, j});
    std::vector<RookPlacement> out;
    std::vector<JRoot> current;
    std::vector<bool> row_used(c.n, false), col_used(c.n, false);
    // depth-first over the sorted root list; emits placements in lex order
    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == roots.size()) {
            out.push_back({current});
            return;
        }
        self(self, t + 1);
        const JRoot& r = roots[t];
        if (!row_used[r.i] && !col_used[r.j]) {
            row_used[r.i] = col_used[r.j] = true;
            current.push_back(r);
            self(self, t + 1);
            current.pop_back();
            row_used[r.i] = col_used[r.j] = false;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const RookPlacement& a, const RookPlacement& b) {
                  return std::lexicographical_compare(
                      a.roots.begin(), a.roots.end(), b.roots.begin(), b.roots.end(),
                      [](const JRoot& x, const JRoot& y) { return x < y; });
              });
    return out;
}

std::vector<RookClass> rook_enumerate_classify(const Composition& c) {
    auto placements = all_rook_placements(c);
    std::map<std::vector<int>, std::vector<int>> by_profile;
    for (size_t t = 0; t < placements.size(); ++t)
        by_profile[placements[t].profile(c)].push_back((int)t);
    std::vector<RookClass> out;
    for (auto& [prof, members] : by_profile) {
        RookClass rc;
        rc.profile = prof;
        rc.members = members;
        rc.rep = members.front(); // placements are in lex order already
        out.push_back(std::move(rc));
    }
    return out;
}

DualActors dual_actors_for(Flavor f) {
    switch (f) {
        case Flavor::GG: return {true, true, true, true};
        case Flavor::GU: return {true, true, false, true};
        case Flavor::DI:
        case Flavor::UU: return {false, true, false, true};
    }
    return {};
}

DualActors left_orbit_actors(Flavor f) {
    switch (f) {
        case Flavor::GG:
        case Flavor::GU: return {true, true, false, false};
        case Flavor::DI:
        case Flavor::UU: return {false, true, false, false};
    }
    return {};
}

Vec coad_shape(const ParabolicShape& s, const Mat& h, const Mat& h_inv, const Vec& mu) {
    (void)h;
    return s.to_coords(mul(transpose(h_inv), mul(s.to_matrix(mu), transpose(h_inv))));
}

namespace {

// dual moves: form matrix M transforms as M -> M A^T (left action by A) and
// M -> B^T M (right action by B), masked back to root support
Vec dual_left(const ParabolicShape& s, const Vec& mu, const Mat& a) {
    return s.to_coords(mul(s.to_matrix(mu), transpose(a)));
}
Vec dual_right(const ParabolicShape& s, const Vec& mu, const Mat& b) {
    return s.to_coords(mul(transpose(b), s.to_matrix(mu)));
}

std::vector<Mat> root_unit_matrices(const ParabolicShape& s) {
    std::vector<Mat> out;
    for (const JRoot& r : s.roots) {
        Mat e(s.p, s.comp.n, s.comp.n);
        e.at(r.i, r.j) = 1;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

SpanBasis dual_orbit_span(const ParabolicShape& s, const Vec& lambda, DualActors a,
                          const std::vector<Mat>& l_gens) {
    auto units = root_unit_matrices(s);
    SpanBasis span(s.p, s.dim());
    std::deque<Vec> fresh;
    auto push = [&](const Vec& v) {
        if (span.insert(v)) fresh.push_back(v);
    };
    push(lambda);
    while (!fresh.empty()) {
        Vec v = fresh.front();
        fresh.pop_front();
        if (a.left_l)
            for (const Mat& g : l_gens) push(dual_left(s, v, g));
        if (a.right_l)
            for (const Mat& g : l_gens) push(dual_right(s, v, g));
        if (a.left_u)
            for (const Mat& e : units) push(dual_left(s, v, e));
        if (a.right_u)
            for (const Mat& e : units) push(dual_right(s, v, e));
    }
    return span;
}

std::vector<char> dual_orbit_set(const ParabolicShape& s, const Vec& lambda, DualActors a,
                                 const std::vector<Mat>& l_gens, uint64_t budget) {
    uint64_t total = pow_u64(s.p, s.dim());
    if (total > budget) throw BudgetError("dual orbit carrier exceeds budget");
    auto units = root_unit_matrices(s);
    std::vector<char> in_orbit(total, 0), left_done(total, 0), right_done(total, 0);
    std::deque<uint64_t> work;
    auto push = [&](const Vec& v) {
        uint64_t c = encode(v);
        if (!in_orbit[c]) {
            in_orbit[c] = 1;
            work.push_back(c);
        }
    };
    push(lambda);
    while (!work.empty()) {
        uint64_t code = work.front();
        work.pop_front();
        Vec v = decode(code, s.p, s.dim());
        if (a.left_l)
            for (const Mat& g : l_gens) push(dual_left(s, v, g));
        if (a.right_l)
            for (const Mat& g : l_gens) push(dual_right(s, v, g));
        if (a.left_u && !left_done[code]) {
            SpanBasis piece(s.p, s.dim());
            for (const Mat& e : units) piece.insert(dual_left(s, v, e));
            for (const Vec& w : piece.enumerate()) {
                Vec pt = add(v, w);
                push(pt);
                left_done[encode(pt)] = 1;
            }
        }
        if (a.right_u && !right_done[code]) {
            SpanBasis piece(s.p, s.dim());
            for (const Mat& e : units) piece.insert(dual_right(s, v, e));
            for (const Vec& w : piece.enumerate()) {
                Vec pt = add(v, w);
                push(pt);
                right_done[encode(pt)] = 1;
            }
        }
    }
    return in_orbit;
}

std::vector<int> pointwise_stabilizer_shape(const ParabolicShape& s,
                                            const std::vector<Mat>& l_elems,
                                            const SpanBasis& orbit_span) {
    std::vector<int> out;
    for (size_t t = 0; t < l_elems.size(); ++t) {
        Mat hinv = inverse(l_elems[t]);
        bool ok = true;
        for (const Vec& mu : orbit_span.rows)
            if (!(coad_shape(s, l_elems[t], hinv, mu) == mu)) { ok = false; break; }
        if (ok) out.push_back((int)t);
    }
    return out;
}

std::vector<int> setwise_stabilizer_shape(const ParabolicShape& s,
                                          const std::vector<Mat>& l_elems, const Vec& lambda,
                                          const std::vector<char>& orbit_set) {
    std::vector<int> out;
    for (size_t t = 0; t < l_elems.size(); ++t) {
        Mat hinv = inverse(l_elems[t]);
        Vec moved = coad_shape(s, l_elems[t], hinv, lambda);
        if (orbit_set[encode(moved)]) out.push_back((int)t);
    }
    return out;
}

namespace {

// 0 when the block is not scalar, else the scalar value (nonzero)
int scalar_of_block(const Mat& h, int b0, int size) {
    int a = h.at(b0, b0);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (h.at(b0 + i, b0 + j) != (i == j ? a : 0)) return 0;
    return a;
}

Mat diagonal_block(const Mat& h, int b0, int size) {
    Mat out(h.p, size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) out.at(i, j) = h.at(b0 + i, b0 + j);
    return out;
}

} // namespace

bool h_of_d_contains(const ParabolicShape& s, const RookPlacement& d, const Mat& h) {
    for (const JRoot& r : d.roots) {
        int k = s.comp.block_of[r.i], m = s.comp.block_of[r.j];
        int a = scalar_of_block(h, s.comp.start[k], s.comp.blocks[k]);
        if (!a) return false;
        for (int t = k + 1; t <= m; ++t)
            if (scalar_of_block(h, s.comp.start[t], s.comp.blocks[t]) != a) return false;
    }
    return true;
}

bool hprime_of_d_contains(const ParabolicShape& s, const RookPlacement& d, const Mat& h) {
    for (const JRoot& r : d.roots) {
        int k = s.comp.block_of[r.i], m = s.comp.block_of[r.j];
        int a = scalar_of_block(h, s.comp.start[m], s.comp.blocks[m]);
        if (!a) return false;
        for (int t = k + 1; t <= m; ++t)
            if (scalar_of_block(h, s.comp.start[t], s.comp.blocks[t]) != a) return false;
        // row r.i of the k-th block: a on the diagonal, zero elsewhere
        int b0 = s.comp.start[k];
        for (int j = 0; j < s.comp.blocks[k]; ++j) {
            int expect = (b0 + j == r.i) ? a : 0;
            if (h.at(r.i, b0 + j) != expect) return false;
        }
    }
    return true;
}

std::vector<int> stabilizer_of_d(const ParabolicShape& s, const std::vector<Mat>& l_elems,
                                 const RookPlacement& d, bool prime_variant) {
    std::vector<int> out;
    for (size_t t = 0; t < l_elems.size(); ++t) {
        bool in = prime_variant ? hprime_of_d_contains(s, d, l_elems[t])
                                : h_of_d_contains(s, d, l_elems[t]);
        if (in) out.push_back((int)t);
    }
    return out;
}

std::vector<std::pair<int, int>> gg_scalar_coarsening(const ParabolicShape& s, const Mat& h) {
    std::vector<std::pair<int, int>> segments;
    int ell = s.comp.block_count();
    int k = 0;
    while (k < ell) {
        int a = scalar_of_block(h, s.comp.start[k], s.comp.blocks[k]);
        int m = k;
        if (a)
            while (m + 1 < ell &&
                   scalar_of_block(h, s.comp.start[m + 1], s.comp.blocks[m + 1]) == a)
                ++m;
        segments.push_back({k, m});
        k = m + 1;
    }
    return segments;
}

BlockForm canonical_block_form(const ParabolicShape& s, const Mat& h) {
    BlockForm bf;
    bf.r = Mat::identity(s.p, s.comp.n);
    int ell = s.comp.block_count();
    int k = 0;
    while (k < ell) {
        int a = 0, m = k;
        if (k + 1 < ell) {
            a = scalar_of_block(h, s.comp.start[k + 1], s.comp.blocks[k + 1]);
            if (a) {
                m = k + 1;
                while (m + 1 < ell &&
                       scalar_of_block(h, s.comp.start[m + 1], s.comp.blocks[m + 1]) == a)
                    ++m;
            }
        }
        if (m == k) {
            // singleton segment; if the block itself is scalar, record its value
            bf.segments.push_back({k, k});
            bf.s.push_back(-1);
            bf.a.push_back(-1);
            k = m + 1;
            continue;
        }
        // leading block k followed by the scalar run a E
        int nk = s.comp.blocks[k], b0 = s.comp.start[k];
        Mat hk = diagonal_block(h, b0, nk);
        Mat shifted = transpose(hk);
        for (int i = 0; i < nk; ++i) shifted.at(i, i) = (uint8_t)((shifted.at(i, i) + s.p - a) % s.p);
        auto eig = kernel_basis(shifted); // rows v with v h_k = a v
        int sk = (int)eig.size();
        // conjugator: eigenrows on top, completed with standard basis rows
        Mat rk(s.p, nk, nk);
        {
            SpanBasis chosen(s.p, nk);
            int row = 0;
            for (const Vec& v : eig) {
                chosen.insert(v);
                for (int j = 0; j < nk; ++j) rk.at(row, j) = v.c[j];
                ++row;
            }
            for (int cand = 0; cand < nk && row < nk; ++cand) {
                Vec e(s.p, nk);
                e.c[cand] = 1;
                if (chosen.insert(e)) {
                    for (int j = 0; j < nk; ++j) rk.at(row, j) = e.c[j];
                    ++row;
                }
            }
        }
        Mat normal_k = mul(mul(rk, hk), inverse(rk));
        for (int i = 0; i < sk; ++i)
            for (int j = 0; j < nk; ++j)
                if (normal_k.at(i, j) != (i == j ? a : 0))
                    throw std::logic_error("block form: top rows not (aE | 0)");
        {
            Mat low = normal_k;
            for (int i = 0; i < nk; ++i) low.at(i, i) = (uint8_t)((low.at(i, i) + s.p - a) % s.p);
            if (rank(low) != nk - sk)
                throw std::logic_error("block form: (Y | X - aE) does not have full rank");
        }
        for (int i = 0; i < nk; ++i)
            for (int j = 0; j < nk; ++j) bf.r.at(b0 + i, b0 + j) = rk.at(i, j);
        bf.segments.push_back({k, m});
        bf.s.push_back(sk);
        bf.a.push_back(a);
        k = m + 1;
    }
    bf.normal = mul(mul(bf.r, h), inverse(bf.r));
    return bf;
}

std::vector<JRoot> coarsening_radical_roots(const ParabolicShape& s,
                                            const std::vector<std::pair<int, int>>& segments) {
    std::vector<int> seg_of(s.comp.block_count());
    for (size_t t = 0; t < segments.size(); ++t)
        for (int b = segments[t].first; b <= segments[t].second; ++b) seg_of[b] = (int)t;
    std::vector<JRoot> out;
    for (const JRoot& r : s.roots)
        if (seg_of[s.comp.block_of[r.i]] < seg_of[s.comp.block_of[r.j]]) out.push_back(r);
    return out;
}

std::vector<JRoot> roots_outside_ideal(const ParabolicShape& s, const Mat& h_normal, Flavor f) {
    if (f == Flavor::GG) {
        auto segments = gg_scalar_coarsening(s, h_normal);
        std::vector<int> seg_of(s.comp.block_count());
        for (size_t t = 0; t < segments.size(); ++t)
            for (int b = segments[t].first; b <= segments[t].second; ++b) seg_of[b] = (int)t;
        std::vector<JRoot> out;
        for (const JRoot& r : s.roots)
            if (seg_of[s.comp.block_of[r.i]] == seg_of[s.comp.block_of[r.j]]) out.push_back(r);
        return out;
    }
    if (f != Flavor::GU) throw std::invalid_argument("roots_outside_ideal: GG or GU only");

    // J'_h = Im(Ad_h - 1) + radical of the coarsened parabolic, h in normal form
    BlockForm bf = canonical_block_form(s, h_normal);
    if (!(bf.normal == h_normal))
        throw std::invalid_argument("roots_outside_ideal: GU variant needs a normal-form h");
    SpanBasis span(s.p, s.dim());
    Mat hinv = inverse(h_normal);
    for (int t = 0; t < s.dim(); ++t) {
        Mat e(s.p, s.comp.n, s.comp.n);
        e.at(s.roots[t].i, s.roots[t].j) = 1;
        Vec img = s.to_coords(mul(h_normal, mul(e, hinv)));
        Vec base(s.p, s.dim());
        base.c[t] = 1;
        span.insert(sub(img, base));
    }
    for (const JRoot& r : coarsening_radical_roots(s, bf.segments)) {
        Vec e(s.p, s.dim());
        e.c[s.root_idx[(size_t)r.i * s.comp.n + r.j]] = 1;
        span.insert(e);
    }
    // the ideal must be spanned by root subspaces
    int rooted = 0;
    std::vector<JRoot> outside;
    for (int t = 0; t < s.dim(); ++t) {
        Vec e(s.p, s.dim());
        e.c[t] = 1;
        if (span.contains(e)) ++rooted;
        else outside.push_back(s.roots[t]);
    }
    if (rooted != span.rank())
        throw AxiomError("J'_h is not spanned by root subspaces");
    return outside;
}

SpanBasis ideal_span_shape(const ParabolicShape& s, const Mat& h, Flavor f,
                           const std::vector<Mat>& l_gens) {
    DualActors a = dual_actors_for(f);
    int d = s.dim();
    // Fix(Ad*_h)
    Mat coad_mat(s.p, d, d);
    Mat hinv = inverse(h);
    for (int t = 0; t < d; ++t) {
        Vec e(s.p, d);
        e.c[t] = 1;
        Vec img = coad_shape(s, h, hinv, e);
        for (int r = 0; r < d; ++r) coad_mat.at(r, t) = img.c[r];
    }
    SpanBasis w(s.p, d);
    for (const Vec& v : kernel_basis(sub(coad_mat, Mat::identity(s.p, d)))) w.insert(v);

    auto as_matrix = [&](auto&& move) {
        Mat m(s.p, d, d);
        for (int t = 0; t < d; ++t) {
            Vec e(s.p, d);
            e.c[t] = 1;
            Vec img = move(e);
            for (int r = 0; r < d; ++r) m.at(r, t) = img.c[r];
        }
        return m;
    };
    std::vector<Mat> maps;
    auto units = root_unit_matrices(s);
    if (a.left_u)
        for (const Mat& e : units)
            maps.push_back(as_matrix([&](const Vec& v) { return dual_left(s, v, e); }));
    if (a.right_u)
        for (const Mat& e : units)
            maps.push_back(as_matrix([&](const Vec& v) { return dual_right(s, v, e); }));
    if (a.left_l)
        for (const Mat& g : l_gens)
            maps.push_back(as_matrix([&](const Vec& v) { return dual_left(s, v, g); }));
    if (a.right_l)
        for (const Mat& g : l_gens)
            maps.push_back(as_matrix([&](const Vec& v) { return dual_right(s, v, g); }));
    w = max_invariant_subspace(std::move(w), maps);

    SpanBasis ideal(s.p, d);
    for (const Vec& v : w.annihilator()) ideal.insert(v);
    return ideal;
}

std::vector<uint64_t> quotient_orbit_set_shape(const ParabolicShape& s, const SpanBasis& ideal,
                                               const Vec& x0, Flavor f,
                                               const std::vector<Mat>& l_gens) {
    Actor la, ra;
    flavor_class_actors(f == Flavor::DI ? Flavor::UU : f, la, ra);
    bool left_l = la == Actor::G, right_l = ra == Actor::G;

    std::unordered_set<uint64_t> seen;
    std::deque<Vec> work;
    Vec start = ideal.reduce(x0);
    seen.insert(encode(start));
    work.push_back(start);
    auto push = [&](const Vec& v) {
        Vec red = ideal.reduce(v);
        if (seen.insert(encode(red)).second) work.push_back(red);
    };
    while (!work.empty()) {
        Vec v = work.front();
        work.pop_front();
        Mat vm = s.to_matrix(v);
        if (left_l)
            for (const Mat& g : l_gens) push(s.to_coords(mul(g, vm)));
        if (right_l)
            for (const Mat& g : l_gens) push(s.to_coords(mul(vm, g)));
        // full U pieces on both sides
        SpanBasis lp(s.p, s.dim()), rp(s.p, s.dim());
        for (int i = 0; i < s.dim(); ++i) {
            lp.insert(s.J.j_mul(s.J.basis_vec(i), v));
            rp.insert(s.J.j_mul(v, s.J.basis_vec(i)));
        }
        for (const Vec& w : lp.enumerate()) push(add(v, w));
        for (const Vec& w : rp.enumerate()) push(add(v, w));
    }
    std::vector<uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mat> l_class_of(const ParabolicShape& s, const Mat& h,
                            const std::vector<Mat>& l_gens) {
    std::vector<Mat> inv_gens;
    for (const Mat& g : l_gens) inv_gens.push_back(inverse(g));
    std::map<std::vector<uint8_t>, size_t> seen;
    std::vector<Mat> out = {h};
    seen[h.a] = 0;
    for (size_t head = 0; head < out.size(); ++head)
        for (size_t t = 0; t < l_gens.size(); ++t) {
            Mat c = mul(l_gens[t], mul(out[head], inv_gens[t]));
            if (!seen.count(c.a)) {
                seen[c.a] = out.size();
                out.push_back(std::move(c));
            }
        }
    return out;
}

std::vector<std::vector<int>> weyl_permutations(const Composition& c) {
    std::vector<std::vector<std::vector<int>>> per_block;
    for (int k = 0; k < c.block_count(); ++k) {
        std::vector<int> base(c.blocks[k]);
        std::iota(base.begin(), base.end(), 0);
        std::vector<std::vector<int>> perms;
        do perms.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
        per_block.push_back(std::move(perms));
    }
    std::vector<std::vector<int>> out;
    std::vector<size_t> idx(per_block.size(), 0);
    while (true) {
        std::vector<int> perm(c.n);
        for (int k = 0; k < c.block_count(); ++k)
            for (int t = 0; t < c.blocks[k]; ++t)
                perm[c.start[k] + t] = c.start[k] + per_block[k][idx[k]][t];
        out.push_back(std::move(perm));
        size_t k = per_block.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++idx[k] < per_block[k].size()) { done = false; break; }
            idx[k] = 0;
        }
        if (done) break;
    }
    return out;
}

std::string ConjectureReport::str() const {
    std::ostringstream out;
    out << "conjecture check: blocks=";
    for (size_t k = 0; k < blocks.size(); ++k) out << (k ? "," : "") << blocks[k];
    out << " p=" << p << "\n";
    out << "  equivalence classes of J: " << num_classes << "\n";
    out << "  Weyl orbits of rook placements: " << num_weyl_orbits << "\n";
    out << "  part 1 (every class has an x_D): " << (part1 ? "HOLDS" : "FAILS") << "\n";
    out << "  part 2 (x_D ~ x_D' iff Weyl conjugate): " << (part2 ? "HOLDS" : "FAILS") << "\n";
    if (!witness.empty()) out << "  witness: " << witness << "\n";
    out << "  verified by exhaustive search at this size only\n";
    return out.str();
}

ConjectureReport check_conjecture(int n, int p, const std::vector<int>& blocks,
                                  uint64_t budget) {
    ParabolicShape s = make_shape(n, p, blocks);
    ConjectureReport rep;
    rep.n = n;
    rep.p = p;
    rep.blocks = blocks;

    uint64_t total = pow_u64(p, s.dim());
    if (total > budget) throw BudgetError("conjecture: |J| exceeds budget");
    std::vector<Mat> l_elems = enumerate_block_l(s, budget);
    std::vector<Mat> l_inv;
    for (const Mat& m : l_elems) l_inv.push_back(inverse(m));

    // equivalence classes of x -> r a x b r^{-1}
    std::vector<int> class_of(total, -1);
    int num_classes = 0;
    for (uint64_t seed = 0; seed < total; ++seed) {
        if (class_of[seed] >= 0) continue;
        int cid = num_classes++;
        std::deque<uint64_t> work;
        class_of[seed] = cid;
        work.push_back(seed);
        while (!work.empty()) {
            uint64_t code = work.front();
            work.pop_front();
            Vec v = decode(code, p, s.dim());
            Mat vm = s.to_matrix(v);
            auto push = [&](const Vec& w) {
                uint64_t c = encode(w);
                if (class_of[c] < 0) {
                    class_of[c] = cid;
                    work.push_back(c);
                }
            };
            for (size_t t = 0; t < l_elems.size(); ++t)
                push(s.to_coords(mul(l_elems[t], mul(vm, l_inv[t]))));
            SpanBasis lp(p, s.dim()), rp(p, s.dim());
            for (int i = 0; i < s.dim(); ++i) {
                lp.insert(s.J.j_mul(s.J.basis_vec(i), v));
                rp.insert(s.J.j_mul(v, s.J.basis_vec(i)));
            }
            for (const Vec& w : lp.enumerate()) push(add(v, w));
            for (const Vec& w : rp.enumerate()) push(add(v, w));
        }
    }
    rep.num_classes = num_classes;

    // rook placements, their classes under the equivalence, and Weyl orbits
    auto placements = all_rook_placements(s.comp);
    std::map<std::vector<JRoot>, int> placement_index;
    for (size_t t = 0; t < placements.size(); ++t)
        placement_index[placements[t].roots] = (int)t;
    std::vector<int> xd_class(placements.size());
    std::vector<bool> class_has_xd(num_classes, false);
    for (size_t t = 0; t < placements.size(); ++t) {
        xd_class[t] = class_of[encode(x_of(s, placements[t]))];
        class_has_xd[xd_class[t]] = true;
    }
    rep.part1 = true;
    for (int c = 0; c < num_classes; ++c)
        if (!class_has_xd[c]) {
            rep.part1 = false;
            if (rep.witness.empty())
                rep.witness = "equivalence class " + std::to_string(c) + " contains no x_D";
        }

    auto perms = weyl_permutations(s.comp);
    std::vector<int> weyl_orbit(placements.size(), -1);
    int num_orbits = 0;
    for (size_t t = 0; t < placements.size(); ++t) {
        if (weyl_orbit[t] >= 0) continue;
        int oid = num_orbits++;
        std::deque<int> work = {(int)t};
        weyl_orbit[t] = oid;
        while (!work.empty()) {
            int cur = work.front();
            work.pop_front();
            for (const auto& perm : perms) {
                std::vector<JRoot> mapped;
                for (const JRoot& r : placements[cur].roots)
                    mapped.push_back({perm[r.i], perm[r.j]});
                std::sort(mapped.begin(), mapped.end());
                int img = placement_index.at(mapped);
                if (weyl_orbit[img] < 0) {
                    weyl_orbit[img] = oid;
                    work.push_back(img);
                }
            }
        }
    }
    rep.num_weyl_orbits = num_orbits;

    rep.part2 = true;
    for (size_t t1 = 0; t1 < placements.size() && rep.part2; ++t1)
        for (size_t t2 = t1 + 1; t2 < placements.size(); ++t2) {
            bool equiv = xd_class[t1] == xd_class[t2];
            bool weyl = weyl_orbit[t1] == weyl_orbit[t2];
            if (equiv != weyl) {
                rep.part2 = false;
                if (rep.witness.empty())
                    rep.witness = "x_D for D=" + placements[t1].str() + " and D'=" +
                                  placements[t2].str() +
                                  (equiv ? " are equivalent but not Weyl conjugate"
                                         : " are Weyl conjugate but not equivalent");
                break;
            }
        }
    return rep;
}

} // namespace sct
