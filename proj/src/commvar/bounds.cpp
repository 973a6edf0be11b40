#include "quatgrad/commvar/bounds.hpp"

#include "quatgrad/commvar/css.hpp"
#include "quatgrad/linalg/elimination.hpp"
#include "quatgrad/linalg/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace quatgrad::commvar {

namespace {

using gradings::QuaternionicDecomposition;

void add_check(BoundResult& b, const std::string& id, std::size_t expected, std::size_t actual) {
    b.checks.push_back({id, expected == actual, std::to_string(expected), std::to_string(actual)});
}

void add_check(BoundResult& b, const std::string& id, bool pass) {
    b.checks.push_back({id, pass, "true", pass ? "true" : "false"});
}

Matrix combine(const std::vector<Matrix>& css, const Vector& coef) {
    Matrix x(css[0].rows(), css[0].cols());
    for (std::size_t k = 0; k < css.size(); ++k) x += css[k] * coef[k];
    return x;
}

// Elements of span(css) killed by every constraint (weights in css coordinates).
std::vector<Matrix> css_kernel(const std::vector<Matrix>& css, const std::vector<Vector>& constraints) {
    Subspace ker = constraints.empty() ? Subspace::full(css.size()) : kernel_basis(Matrix::from_rows(constraints));
    std::vector<Matrix> out;
    for (const auto& v : ker.basis()) out.push_back(combine(css, v));
    return out;
}

Matrix random_in(const std::vector<Matrix>& xs, std::size_t n, std::mt19937_64& rng, long range) {
    Matrix x(n, n);
    std::uniform_int_distribution<long> coef(1, range);
    for (const auto& b : xs) x += b * Rational(coef(rng));
    return x;
}

std::size_t g00_centralizer_dim(const QuaternionicDecomposition& qd, const std::vector<Matrix>& xs, std::mt19937_64& rng) {
    const auto& g = *qd.algebra();
    std::size_t best = qd.dim(0, 0);
    for (int t = 0; t < 3; ++t) best = std::min(best, g.centralizer({random_in(xs, g.size(), rng, 9 + t)}, qd.piece(0, 0)).dim());
    return best;
}

// Common part of both constructions once c~ is fixed.
void finish(BoundResult& b, const QuaternionicDecomposition& qd, const std::vector<Matrix>& c11, const std::vector<Matrix>& ctilde,
            const RestrictedRootSystem& rs, const std::vector<bool>& in_h, std::mt19937_64& rng) {
    const auto& g = *qd.algebra();
    b.dim_g11 = qd.dim(1, 1);
    b.dim_c11 = c11.size();
    b.dim_ctilde = ctilde.size();
    Subspace z10 = g.centralizer(ctilde, qd.piece(1, 0));
    b.dim_z10 = z10.dim();
    b.value = b.dim_g11 + b.dim_z10 + b.dim_ctilde - b.dim_c11;

    // G00-regular elements in c~: no root of g00 + g11 vanishes on c~
    std::vector<Vector> cols;
    for (const auto& c : c11) cols.push_back(g.coordinates(c));
    const Matrix to_coords = Matrix::from_columns(cols);
    std::vector<Vector> tilde_coef;
    for (const auto& x : ctilde) {
        auto sol = solve(to_coords, g.coordinates(x));
        if (!sol) throw std::logic_error("bound: c~ not inside c11");
        tilde_coef.push_back(*sol);
    }
    bool regular_by_roots = true;
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
        if (!in_h[k]) continue;
        bool vanishes = true;
        for (const auto& c : tilde_coef)
            if (dot(c, rs.roots[k].weight) != 0) vanishes = false;
        if (vanishes) regular_by_roots = false;
    }
    add_check(b, "g00-regular-roots", regular_by_roots);
    std::size_t on_tilde = ctilde.empty() ? qd.dim(0, 0) : g00_centralizer_dim(qd, ctilde, rng);
    add_check(b, "g00-regular-centralizer", g00_centralizer_dim(qd, c11, rng), on_tilde);

    // direct orbit dimension of G00 on c^ = z(c~)_10 + c~
    std::vector<Vector> hat = z10.basis();
    for (const auto& x : ctilde) hat.push_back(g.coordinates(x));
    Subspace chat = Subspace::span(g.dim(), hat);
    std::size_t best = 0;
    for (int t = 0; t < 3; ++t) {
        Matrix y = g.element(random_vector(chat, rng, 9 + t));
        std::vector<Vector> vs = chat.basis();
        for (const auto& a : g.elements(qd.piece(0, 0))) vs.push_back(g.coordinates(commutator(a, y), false));
        best = std::max(best, Subspace::span(g.dim(), vs).dim());
    }
    b.orbit_dim = best;
    add_check(b, "orbit-dim", b.value, b.orbit_dim);
}

}  // namespace

bool BoundResult::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

std::vector<bool> h_roots(const QuaternionicDecomposition& qd, const RestrictedRootSystem& rs) {
    Subspace h = sum(qd.piece(0, 0), qd.piece(1, 1));
    Subspace rest = sum(qd.piece(1, 0), qd.piece(0, 1));
    std::vector<bool> out;
    for (const auto& r : rs.roots) {
        std::size_t a = intersect(r.space, h).dim(), c = intersect(r.space, rest).dim();
        if (a + c != r.multiplicity) throw std::invalid_argument("h_roots: root space not stable under sigma3");
        out.push_back(a > 0);
    }
    return out;
}

BoundResult lower_bound_single_root(const QuaternionicDecomposition& qd, const std::vector<Matrix>& c11, std::mt19937_64& rng) {
    const auto& g = *qd.algebra();
    if (!is_css(g, c11, qd.piece(1, 1))) throw std::invalid_argument("single-root bound: c11 is not a CSS of g11");
    RestrictedRootSystem rs = restricted_roots(g, c11);
    std::vector<bool> in_h = h_roots(qd, rs);
    auto proportional = [](const Vector& a, const Vector& b) {
        return rank(Matrix::from_rows({a, b})) == 1;
    };
    std::size_t pick = rs.roots.size();
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
        const auto& mu = rs.roots[k];
        if (mu.multiplicity <= 1) continue;
        bool clean = true;
        for (std::size_t j = 0; j < rs.roots.size(); ++j)
            if (in_h[j] && proportional(rs.roots[j].weight, mu.weight)) clean = false;
        if (!clean) continue;
        if (pick == rs.roots.size() || mu.multiplicity > rs.roots[pick].multiplicity) pick = k;
    }
    if (pick == rs.roots.size()) throw std::invalid_argument("single-root bound: no root with m > 1 outside the g00 + g11 roots");
    BoundResult b;
    b.construction = "single-root";
    b.mu = rs.roots[pick].weight;
    b.m_mu = rs.roots[pick].multiplicity;
    std::vector<Matrix> ctilde = css_kernel(c11, {b.mu});
    finish(b, qd, c11, ctilde, rs, in_h, rng);
    add_check(b, "z10-equals-m", b.m_mu, b.dim_z10);
    add_check(b, "ctilde-dim", c11.size() - 1, b.dim_ctilde);
    return b;
}

BoundResult lower_bound_kernel_construction(const QuaternionicDecomposition& qd, const std::vector<Matrix>& c11,
                                            std::mt19937_64& rng) {
    const auto& g = *qd.algebra();
    if (!is_css(g, c11, qd.piece(1, 1))) throw std::invalid_argument("kernel bound: c11 is not a CSS of g11");
    RestrictedRootSystem rs = restricted_roots(g, c11);
    RootProfile p = rs.profile();
    const std::size_t r = c11.size();
    if (p.type != "C" || p.rank != r) throw std::invalid_argument("kernel bound: expected a C_r profile, got " + p.label);
    std::vector<bool> in_h = h_roots(qd, rs);

    // long roots +-2 eps_i
    Rational longest = 0;
    for (const auto& root : rs.roots) longest = std::max(longest, root.length2);
    std::vector<Vector> reps;
    for (const auto& root : rs.roots) {
        if (root.length2 != longest) continue;
        Vector neg = scaled(root.weight, Rational(-1));
        if (std::find(reps.begin(), reps.end(), neg) == reps.end()) reps.push_back(root.weight);
    }
    if (reps.size() != r) throw std::invalid_argument("kernel bound: expected r pairs of long roots");
    auto is_h_root = [&](const Vector& w) {
        const RestrictedRoot* root = rs.find(w);
        if (!root) return false;
        return static_cast<bool>(in_h[static_cast<std::size_t>(root - rs.roots.data())]);
    };
    std::vector<Vector> eps{scaled(reps[0], ratio(1, 2))};
    for (std::size_t j = 1; j < r; ++j) {
        Vector e = scaled(reps[j], ratio(1, 2));
        if (is_h_root(subtract(eps[0], e))) eps.push_back(e);
        else if (is_h_root(add(eps[0], e))) eps.push_back(scaled(e, Rational(-1)));
        else throw std::invalid_argument("kernel bound: eps_1 - eps_j is not a root of g00 + g11");
    }

    BoundResult b;
    b.construction = "kernel";
    b.r = r;
    bool split = true;
    std::size_t m_short = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (!rs.find(scaled(eps[i], Rational(2))) || is_h_root(scaled(eps[i], Rational(2)))) split = false;
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            if (!is_h_root(subtract(eps[i], eps[j]))) split = false;
            const RestrictedRoot* plus = rs.find(add(eps[i], eps[j]));
            if (!plus || is_h_root(plus->weight)) split = false;
            else m_short = plus->multiplicity;
        }
    }
    b.m_short = m_short;
    add_check(b, "eps-basis-split", split);
    add_check(b, "long-multiplicity", 1, p.m_long);

    std::vector<Vector> constraints;
    for (std::size_t i = 0; i < (r + 1) / 2; ++i) constraints.push_back(add(eps[i], eps[r - 1 - i]));
    std::vector<Matrix> ctilde = css_kernel(c11, constraints);
    finish(b, qd, c11, ctilde, rs, in_h, rng);
    add_check(b, "ctilde-dim", r / 2, b.dim_ctilde);
    add_check(b, "z10-dim", r % 2 == 0 ? b.m_short * r / 2 : b.m_short * (r / 2) + 1, b.dim_z10);
    add_check(b, "bound-formula", b.dim_g11 + (b.m_short - 1) * (r / 2), b.value);
    return b;
}

}  // namespace quatgrad::commvar
