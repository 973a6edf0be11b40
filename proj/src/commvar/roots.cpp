#include "quatgrad/commvar/roots.hpp"

#include "quatgrad/linalg/elimination.hpp"
#include "quatgrad/linalg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quatgrad::commvar {

namespace {

Rational pair(const Vector& a, const Matrix& inner, const Vector& b) { return dot(a, inner * b); }

std::size_t vector_rank(const std::vector<Vector>& vs) {
    if (vs.empty()) return 0;
    return rank(Matrix::from_rows(vs));
}

struct Component {
    std::string type;
    std::size_t rank;
};

Component classify_irreducible(const std::vector<Vector>& rs, const Matrix& inner) {
    std::set<Rational> lengths;
    for (const auto& r : rs) lengths.insert(pair(r, inner, r));
    const std::size_t k = vector_rank(rs), s = rs.size();
    auto count = [&](const Rational& l) {
        return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [&](const Vector& r) { return pair(r, inner, r) == l; }));
    };
    if (lengths.size() == 1) {
        if (s == k * (k + 1)) return {"A", k};
        if (k >= 4 && s == 2 * k * (k - 1)) return {"D", k};
        if ((k == 6 && s == 72) || (k == 7 && s == 126) || (k == 8 && s == 240)) return {"E", k};
        return {"?", k};
    }
    const Rational lo = *lengths.begin(), hi = *lengths.rbegin();
    const Rational q = hi / lo;
    if (lengths.size() == 2) {
        const std::size_t nlong = count(hi), nshort = count(lo);
        if (q == 2) {
            if (k == 4 && s == 48) return {"F", 4};
            if (nlong == 2 * k && nshort == 2 * k * (k - 1)) return {"C", k};
            if (nshort == 2 * k && nlong == 2 * k * (k - 1)) return {"B", k};
        }
        if (q == 3 && k == 2 && s == 12) return {"G", 2};
        if (q == 4 && k == 1 && s == 4) return {"BC", 1};
        return {"?", k};
    }
    if (lengths.size() == 3) {
        const Rational mid = *std::next(lengths.begin());
        if (mid / lo == 2 && q == 4 && count(lo) == 2 * k && count(hi) == 2 * k && count(mid) == 2 * k * (k - 1))
            return {"BC", k};
    }
    return {"?", k};
}

}  // namespace

RootProfile classify_roots(const std::vector<Vector>& roots, const Matrix& inner,
                           const std::vector<std::size_t>& multiplicities) {
    RootProfile p;
    if (roots.empty()) {
        p.reflection_closed = true;
        p.uniform_multiplicities = true;
        return p;
    }
    std::set<Vector> all(roots.begin(), roots.end());
    p.reflection_closed = true;
    for (const auto& a : roots) {
        for (const auto& b : roots) {
            Vector r = subtract(b, scaled(a, 2 * pair(a, inner, b) / pair(a, inner, a)));
            if (!all.count(r)) p.reflection_closed = false;
        }
    }
    // irreducible components: connected by non-orthogonality
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pair(roots[i], inner, roots[j]) != 0) parent[root(i)] = root(j);
    std::map<std::size_t, std::vector<Vector>> comps;
    for (std::size_t i = 0; i < n; ++i) comps[root(i)].push_back(roots[i]);
    std::vector<std::string> labels;
    for (const auto& [_, rs] : comps) {
        Component c = classify_irreducible(rs, inner);
        labels.push_back(c.type + std::to_string(c.rank));
        p.rank += c.rank;
        if (comps.size() == 1) p.type = c.type;
    }
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) p.label += (i ? "x" : "") + labels[i];
    if (comps.size() > 1) p.type = "product";

    std::map<Rational, std::set<std::size_t>> by_length;
    for (std::size_t i = 0; i < n; ++i) by_length[pair(roots[i], inner, roots[i])].insert(multiplicities[i]);
    p.uniform_multiplicities = std::all_of(by_length.begin(), by_length.end(), [](const auto& kv) { return kv.second.size() == 1; });
    p.m_short = *by_length.begin()->second.begin();
    p.m_long = *by_length.rbegin()->second.begin();
    if (by_length.size() == 3) p.m_middle = *std::next(by_length.begin())->second.begin();
    return p;
}

bool RestrictedRootSystem::complete() const {
    std::size_t total = zero_space.dim();
    for (const auto& r : roots) total += r.multiplicity;
    return total == algebra_dim;
}

bool RestrictedRootSystem::paired() const {
    for (const auto& r : roots) {
        const RestrictedRoot* o = find(scaled(r.weight, Rational(-1)));
        if (!o || o->multiplicity != r.multiplicity) return false;
    }
    return true;
}

const RestrictedRoot* RestrictedRootSystem::find(const Vector& w) const {
    for (const auto& r : roots)
        if (r.weight == w) return &r;
    return nullptr;
}

RootProfile RestrictedRootSystem::profile() const {
    std::vector<Vector> ws;
    std::vector<std::size_t> ms;
    for (const auto& r : roots) {
        ws.push_back(r.weight);
        ms.push_back(r.multiplicity);
    }
    if (ws.empty()) return classify_roots({}, Matrix(), {});
    return classify_roots(ws, gram.inverse(), ms);
}

RestrictedRootSystem restricted_roots(const lie::LieAlgebra& g, const std::vector<Matrix>& css) {
    RestrictedRootSystem out;
    out.css = css;
    out.algebra_dim = g.dim();
    const std::size_t r = css.size();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (!commutator(css[i], css[j]).is_zero()) throw std::invalid_argument("restricted_roots: css elements do not commute");

    // (weight so far, space)
    std::vector<std::pair<Vector, Subspace>> parts{{Vector{}, g.whole()}};
    for (const auto& c : css) {
        auto roots = rational_roots(char_poly(c));
        std::size_t count = 0;
        for (const auto& [_, m] : roots) count += m;
        if (count != c.rows()) throw std::invalid_argument("restricted_roots: irrational spectrum");
        std::set<Rational> diffs;
        for (const auto& [a, ma] : roots)
            for (const auto& [b, mb] : roots) diffs.insert(a - b);
        const Matrix ad = g.ad(c);
        std::vector<std::pair<Vector, Subspace>> next;
        std::vector<std::size_t> covered(parts.size(), 0);
        for (const Rational& d : diffs) {
            Subspace ker = kernel_basis(ad - Matrix::identity(g.dim()) * d);
            if (ker.dim() == 0) continue;
            for (std::size_t p = 0; p < parts.size(); ++p) {
                Subspace s = intersect(parts[p].second, ker);
                if (s.dim() == 0) continue;
                covered[p] += s.dim();
                Vector w = parts[p].first;
                w.push_back(d);
                next.emplace_back(w, s);
            }
        }
        for (std::size_t p = 0; p < parts.size(); ++p)
            if (covered[p] != parts[p].second.dim()) throw std::invalid_argument("restricted_roots: element not semisimple on g");
        parts = std::move(next);
    }

    out.gram = Matrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out.gram(i, j) = (css[i] * css[j]).trace();
    const Matrix inner = r ? out.gram.inverse() : Matrix();

    out.zero_space = Subspace(g.dim());
    Integer scale = 1;
    for (const auto& [w, s] : parts) {
        if (is_zero(w)) {
            out.zero_space = s;
            continue;
        }
        RestrictedRoot root;
        root.weight = w;
        root.space = s;
        root.multiplicity = s.dim();
        root.length2 = pair(w, inner, w);
        for (const auto& x : w) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
        out.roots.push_back(root);
    }
    out.scale = scale;
    for (auto& root : out.roots)
        for (const auto& x : root.weight) {
            Rational y = x * Rational(scale);
            root.integer_weight.push_back(y.get_num());
        }
    std::sort(out.roots.begin(), out.roots.end(), [](const RestrictedRoot& a, const RestrictedRoot& b) { return a.weight < b.weight; });
    return out;
}

}  // namespace quatgrad::commvar
