#include "sct/nilpotent_algebra.hpp"
#include "sct/budget.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sct {

Vec NilpotentAlgebra::j_mul(const Vec& x, const Vec& y) const {
    Vec r(p, dim);
    for (int i = 0; i < dim; ++i) {
        if (!x.c[i]) continue;
        for (int j = 0; j < dim; ++j) {
            if (!y.c[j]) continue;
            int f = (x.c[i] * y.c[j]) % p;
            for (auto [k, coeff] : mult[i][j])
                r.c[k] = (uint8_t)((r.c[k] + f * coeff) % p);
        }
    }
    return r;
}

Vec NilpotentAlgebra::u_mul(const Vec& x, const Vec& y) const {
    return add(add(x, y), j_mul(x, y));
}

Vec NilpotentAlgebra::u_inv(const Vec& x) const {
    // Neumann series, terminates by nilpotency
    Vec acc(p, dim), pw = x;
    int sign = -1;
    for (int k = 1; k <= nil_class + 1 && !pw.is_zero(); ++k) {
        acc = (sign < 0) ? sub(acc, pw) : add(acc, pw);
        pw = j_mul(pw, x);
        sign = -sign;
    }
    return acc;
}

std::vector<Vec> NilpotentAlgebra::enumerate_u(uint64_t budget) const {
    uint64_t n = usize();
    if (n > budget)
        throw BudgetError("enumeration of U needs " + std::to_string(n) +
                          " elements, budget is " + std::to_string(budget));
    std::vector<Vec> out;
    out.reserve(n);
    for (uint64_t code = 0; code < n; ++code) out.push_back(decode(code, p, dim));
    return out;
}

Mat NilpotentAlgebra::left_mult_matrix(const Vec& y) const {
    Mat m(p, dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec col = j_mul(y, basis_vec(j));
        for (int i = 0; i < dim; ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

Mat NilpotentAlgebra::right_mult_matrix(const Vec& y) const {
    Mat m(p, dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec col = j_mul(basis_vec(j), y);
        for (int i = 0; i < dim; ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

void NilpotentAlgebra::validate() {
    if (!is_prime(p)) throw std::invalid_argument("algebra: p must be prime");
    if (dim < 0) throw std::invalid_argument("algebra: negative dimension");
    if ((int)mult.size() != dim) throw std::invalid_argument("algebra: bad mult table size");
    for (auto& row : mult) {
        if ((int)row.size() != dim) throw std::invalid_argument("algebra: bad mult table size");
        for (auto& entry : row)
            for (auto [k, coeff] : entry)
                if (k < 0 || k >= dim || coeff < 0 || coeff >= p)
                    throw std::invalid_argument("algebra: bad structure constant");
    }
    // associativity on all basis triples
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Vec lhs = j_mul(j_mul(basis_vec(i), basis_vec(j)), basis_vec(k));
                Vec rhs = j_mul(basis_vec(i), j_mul(basis_vec(j), basis_vec(k)));
                if (!(lhs == rhs))
                    throw std::invalid_argument("algebra: product not associative at basis triple (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
            }
    // nilpotency: span products of basis layers must reach 0 within dim+1 steps
    SpanBasis layer(p, dim);
    for (int i = 0; i < dim; ++i) layer.insert(basis_vec(i));
    nil_class = 1;
    while (layer.rank() > 0) {
        if (nil_class > dim + 1) throw std::invalid_argument("algebra: not nilpotent");
        SpanBasis next(p, dim);
        for (const Vec& a : layer.rows)
            for (int i = 0; i < dim; ++i) next.insert(j_mul(a, basis_vec(i)));
        if (next.rank() >= layer.rank() && next.rank() > 0 && nil_class > dim)
            throw std::invalid_argument("algebra: not nilpotent");
        layer = next;
        ++nil_class;
    }
}

NilpotentAlgebra algebra_from_json_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    NilpotentAlgebra j;
    j.p = doc.at("p").get<int>();
    j.dim = doc.at("dim").get<int>();
    j.mult.assign(j.dim, std::vector<std::vector<std::pair<int, int>>>(j.dim));
    const auto& table = doc.at("mult");
    if ((int)table.size() != j.dim) throw std::invalid_argument("algebra json: bad mult size");
    for (int a = 0; a < j.dim; ++a) {
        if ((int)table[a].size() != j.dim) throw std::invalid_argument("algebra json: bad mult row");
        for (int b = 0; b < j.dim; ++b)
            for (const auto& term : table[a][b]) {
                if (term.size() != 2) throw std::invalid_argument("algebra json: bad term");
                j.mult[a][b].push_back({term[0].get<int>(), term[1].get<int>()});
            }
    }
    j.validate();
    return j;
}

NilpotentAlgebra algebra_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return algebra_from_json_text(buf.str());
}

std::string algebra_to_json_text(const NilpotentAlgebra& j) {
    nlohmann::ordered_json doc;
    doc["p"] = j.p;
    doc["dim"] = j.dim;
    auto table = nlohmann::ordered_json::array();
    for (int a = 0; a < j.dim; ++a) {
        auto row = nlohmann::ordered_json::array();
        for (int b = 0; b < j.dim; ++b) {
            auto entry = nlohmann::ordered_json::array();
            for (auto [k, coeff] : j.mult[a][b]) entry.push_back({k, coeff});
            row.push_back(entry);
        }
        table.push_back(row);
    }
    doc["mult"] = table;
    return doc.dump(2);
}

NilpotentAlgebra zero_algebra(int p, int dim) {
    NilpotentAlgebra j;
    j.p = p;
    j.dim = dim;
    j.mult.assign(dim, std::vector<std::vector<std::pair<int, int>>>(dim));
    j.validate();
    return j;
}

NilpotentAlgebra strictly_upper_triangular(int p, int n) {
    // basis: E_ij for i<j, ordered by (i, j)
    NilpotentAlgebra j;
    j.p = p;
    std::vector<std::pair<int, int>> roots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) roots.push_back({a, b});
    j.dim = (int)roots.size();
    j.mult.assign(j.dim, std::vector<std::vector<std::pair<int, int>>>(j.dim));
    auto index_of = [&](int a, int b) {
        for (size_t t = 0; t < roots.size(); ++t)
            if (roots[t].first == a && roots[t].second == b) return (int)t;
        return -1;
    };
    for (int s = 0; s < j.dim; ++s)
        for (int t = 0; t < j.dim; ++t) {
            auto [a, b] = roots[s];
            auto [c, d] = roots[t];
            if (b == c) j.mult[s][t].push_back({index_of(a, d), 1});
        }
    j.validate();
    return j;
}

} // namespace sct
