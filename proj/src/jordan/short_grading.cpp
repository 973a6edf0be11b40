#include "quatgrad/jordan/short_grading.hpp"

#include "quatgrad/linalg/elimination.hpp"

#include <regex>
#include <stdexcept>

namespace quatgrad::jordan {

namespace {

Subspace ad_eigenspace(const Matrix& adh, long lambda) {
    return kernel_basis(adh - Matrix::identity(adh.rows()) * Rational(lambda));
}

Subspace image_under(const lie::LieAlgebra& g, const Matrix& x, const Subspace& s) {
    std::vector<Vector> vs;
    for (const auto& y : g.elements(s)) vs.push_back(g.coordinates(commutator(x, y), false));
    return Subspace::span(g.dim(), vs);
}

bool all_brackets_vanish(const lie::LieAlgebra& g, const Subspace& s) {
    auto xs = g.elements(s);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!commutator(xs[i], xs[j]).is_zero()) return false;
    return true;
}

}  // namespace

ShortGrading make_short_grading(lie::AlgebraPtr g, const Matrix& h, const Matrix& e, std::vector<Matrix> frame,
                                std::string id, JordanFamily family, int family_n) {
    if (!g->contains(h) || !g->contains(e)) throw std::invalid_argument("short grading " + id + ": h or e outside the algebra");
    Matrix adh = g->ad(h);
    ShortGrading sg{std::move(id), g, h, e, Matrix(), ad_eigenspace(adh, -2), ad_eigenspace(adh, 0), ad_eigenspace(adh, 2),
                    Subspace(), Subspace(), std::move(frame), family, family_n};
    if (sg.minus.dim() + sg.zero.dim() + sg.plus.dim() != g->dim())
        throw std::invalid_argument("short grading " + sg.id + ": ad h has eigenvalues other than 0, +-2");
    if (!sg.plus.contains(g->coordinates(e))) throw std::invalid_argument("short grading " + sg.id + ": e is not in g(1)");
    Matrix sum_frame(g->size(), g->size());
    for (const auto& x : sg.frame) sum_frame += x;
    if (!sg.frame.empty() && sum_frame != e) throw std::invalid_argument("short grading " + sg.id + ": frame does not add up to e");

    auto minus_basis = g->elements(sg.minus);
    std::vector<Vector> cols;
    for (const auto& y : minus_basis) cols.push_back(g->coordinates(commutator(e, y), false));
    auto c = solve(Matrix::from_columns(cols), g->coordinates(h));
    if (!c) throw std::invalid_argument("short grading " + sg.id + ": no f in g(-1) with [e,f] = h");
    sg.f = Matrix(g->size(), g->size());
    for (std::size_t i = 0; i < minus_basis.size(); ++i) sg.f += minus_basis[i] * (*c)[i];
    sg.k = g->centralizer({e}, sg.zero);
    sg.m = image_under(*g, e, sg.minus);
    return sg;
}

std::vector<std::string> short_grading_ids() {
    return {"sl4-full", "sl6-full", "sp4-sym", "sp6-sym", "so8-skew", "so6-spin", "so7-spin", "so8-spin"};
}

ShortGrading short_grading(const std::string& id) {
    std::smatch mt;
    auto num = [&](int i) { return static_cast<std::size_t>(std::stoul(mt[i].str())); };
    if (std::regex_match(id, mt, std::regex("sl(\\d+)-full"))) {
        const std::size_t N = num(1), n = N / 2;
        if (N % 2 != 0 || n < 1) throw std::invalid_argument("sl-full needs an even size: " + id);
        auto g = lie::build_algebra(lie::Family::sl, N);
        Vector d(N);
        for (std::size_t k = 0; k < N; ++k) d[k] = k < n ? 1 : -1;
        std::vector<Matrix> frame;
        for (std::size_t k = 0; k < n; ++k) frame.push_back(Matrix::unit(N, k, n + k));
        Matrix e(N, N);
        for (const auto& x : frame) e += x;
        return make_short_grading(g, Matrix::diagonal(d), e, frame, id, JordanFamily::full, static_cast<int>(n));
    }
    if (std::regex_match(id, mt, std::regex("sp(\\d+)-sym"))) {
        const std::size_t N = num(1), n = N / 2;
        if (N % 2 != 0 || n < 1) throw std::invalid_argument("sp-sym needs an even size: " + id);
        auto g = lie::build_algebra(lie::Family::sp, N);
        Vector d(N);
        for (std::size_t k = 0; k < N; ++k) d[k] = k < n ? 1 : -1;
        std::vector<Matrix> frame;
        for (std::size_t k = 0; k < n; ++k) frame.push_back(Matrix::unit(N, k, N - 1 - k));
        Matrix e(N, N);
        for (const auto& x : frame) e += x;
        return make_short_grading(g, Matrix::diagonal(d), e, frame, id, JordanFamily::sym, static_cast<int>(n));
    }
    if (std::regex_match(id, mt, std::regex("so(\\d+)-skew"))) {
        const std::size_t N = num(1), n = N / 4;
        if (N % 4 != 0 || n < 2) throw std::invalid_argument("so-skew needs size 4n with n >= 2: " + id);
        auto g = lie::build_algebra(lie::Family::so, N);
        Vector d(N);
        for (std::size_t k = 0; k < N; ++k) d[k] = k < 2 * n ? 1 : -1;
        std::vector<Matrix> frame;
        for (std::size_t k = 0; k < n; ++k)
            frame.push_back(Matrix::unit(N, 2 * k, N - 2 - 2 * k) - Matrix::unit(N, 2 * k + 1, N - 1 - 2 * k));
        Matrix e(N, N);
        for (const auto& x : frame) e += x;
        return make_short_grading(g, Matrix::diagonal(d), e, frame, id, JordanFamily::skew, static_cast<int>(n));
    }
    if (std::regex_match(id, mt, std::regex("so(\\d+)-spin"))) {
        const std::size_t N = num(1);
        if (N < 5) throw std::invalid_argument("so-spin needs size >= 5: " + id);
        auto g = lie::build_algebra(lie::Family::so, N);
        Vector d(N);
        d[0] = 2;
        d[N - 1] = -2;
        std::vector<Matrix> frame{Matrix::unit(N, 0, N - 2) - Matrix::unit(N, 1, N - 1),
                                  Matrix::unit(N, 0, 1) - Matrix::unit(N, N - 2, N - 1)};
        Matrix e = frame[0] + frame[1];
        // g(-1) has dimension N-2, the spin factor on k^(N-3)
        return make_short_grading(g, Matrix::diagonal(d), e, frame, id, JordanFamily::spin, static_cast<int>(N) - 3);
    }
    throw std::invalid_argument("unknown short grading: " + id);
}

ShortGradingChecks check_short_grading(const ShortGrading& sg) {
    const auto& g = *sg.algebra;
    ShortGradingChecks c;
    c.sl2_triple = commutator(sg.h, sg.e) == sg.e * Rational(2) && commutator(sg.h, sg.f) == sg.f * Rational(-2) &&
                   commutator(sg.e, sg.f) == sg.h;
    c.abelian_radicals = all_brackets_vanish(g, sg.plus) && all_brackets_vanish(g, sg.minus);
    c.minus_e_trivial = g.centralizer({sg.e}, sg.minus).dim() == 0;
    c.ge_split = g.centralizer({sg.e}) == sum(sg.k, sg.plus);
    Subspace em = image_under(g, sg.e, sg.m);
    c.e_structure = sg.m.dim() == sg.minus.dim() && em == sg.plus && sg.m.dim() == sg.plus.dim() &&
                    sg.k.dim() + sg.m.dim() == sg.zero.dim() && sum(sg.k, sg.m) == sg.zero;
    return c;
}

Matrix minus_element(const ShortGrading& sg, const Vector& coords) { return sg.algebra->element(sg.minus.combine(coords)); }

Vector minus_coordinates(const ShortGrading& sg, const Matrix& x) {
    return sg.minus.coordinates(sg.algebra->coordinates(x));
}

JordanAlgebraModel from_short_grading(const ShortGrading& sg) {
    const auto& g = *sg.algebra;
    auto basis = g.elements(sg.minus);
    const std::size_t d = basis.size();
    std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) {
        labels.push_back("y" + std::to_string(i + 1));
        for (std::size_t j = 0; j < d; ++j)
            table[i][j] = minus_coordinates(sg, commutator(basis[i], commutator(sg.e, basis[j])));
    }
    JordanAlgebraModel J(JordanFamily::short_grading, sg.family_n, labels, table);
    if (d != jordan_dim(sg.family, sg.family_n))
        throw std::logic_error("from_short_grading: g(-1) has unexpected dimension for " + sg.id);
    std::mt19937_64 rng(d);
    if (!validate(J, rng, 10).ok()) throw std::logic_error("from_short_grading: Jordan axioms fail for " + sg.id);
    return J;
}

JordanTriad build_jordan_triad(const ShortGrading& sg) {
    const auto& g = *sg.algebra;
    const std::size_t N = g.size();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j && sg.h(i, j) != 0) throw std::invalid_argument("build_jordan_triad: h must be diagonal");
    Rational dmin = sg.h(0, 0);
    for (std::size_t i = 1; i < N; ++i)
        if (sg.h(i, i) < dmin) dmin = sg.h(i, i);
    Vector s(N);
    for (std::size_t i = 0; i < N; ++i) {
        Rational q = (sg.h(i, i) - dmin) / 2;
        if (q.get_den() != 1) throw std::invalid_argument("build_jordan_triad: h has non-even gaps");
        s[i] = (q.get_num() % 2 == 0) ? 1 : -1;
    }
    auto sigma1 = gradings::Involution::inner(sg.algebra, Matrix::diagonal(s), "Ad(exp(i pi h/2))");

    std::vector<Vector> from, to;
    for (const auto& v : sg.k.basis()) {
        from.push_back(v);
        to.push_back(v);
    }
    for (const auto& x : g.elements(sg.m)) {
        Vector cx = g.coordinates(x);
        from.push_back(cx);
        to.push_back(scaled(cx, Rational(-1)));
        Vector xe = g.coordinates(commutator(x, sg.e), false), xf = g.coordinates(commutator(x, sg.f), false);
        from.push_back(xe);
        to.push_back(scaled(xf, Rational(-1)));
        from.push_back(xf);
        to.push_back(scaled(xe, Rational(-1)));
    }
    if (from.size() != g.dim()) throw std::logic_error("build_jordan_triad: k + m + g(1) + g(-1) does not fill g");
    Matrix B = Matrix::from_columns(from), C = Matrix::from_columns(to);
    auto sigma2 = gradings::Involution::from_operator(sg.algebra, C * B.inverse(), "sigma2[" + sg.id + "]");
    return JordanTriad{sg, gradings::quaternionic(sigma1, sigma2)};
}

TriadChecks check_triad(const JordanTriad& t) {
    const auto& sg = t.sg;
    const auto& g = *sg.algebra;
    TriadChecks c;
    Subspace a = image_under(g, sg.e - sg.f, sg.m), b = image_under(g, sg.e + sg.f, sg.m);
    c.pieces_match = t.qd.piece(0, 0) == sg.k && t.qd.piece(0, 1) == sg.m && t.qd.piece(1, 0) == a && t.qd.piece(1, 1) == b;
    c.h_in_01 = t.qd.piece(0, 1).contains(g.coordinates(sg.h));
    c.e_plus_f_in_10 = t.qd.piece(1, 0).contains(g.coordinates(sg.e + sg.f));
    c.e_minus_f_in_11 = t.qd.piece(1, 1).contains(g.coordinates(sg.e - sg.f));
    Subspace s3 = g.span_of({sg.e, sg.h, sg.f});
    bool stable = true, differ = false, nontrivial1 = false, nontrivial2 = false;
    for (const Matrix& x : {sg.e, sg.h, sg.f}) {
        Matrix a1 = t.qd.sigma1().apply(x), a2 = t.qd.sigma2().apply(x);
        if (!s3.contains(g.coordinates(a1)) || !s3.contains(g.coordinates(a2))) stable = false;
        if (a1 != a2) differ = true;
        if (a1 != x) nontrivial1 = true;
        if (a2 != x) nontrivial2 = true;
    }
    c.sl2_distinct = stable && differ && nontrivial1 && nontrivial2 && t.qd.sigma2().apply(sg.e) == sg.f;
    return c;
}

bool tkk_identity_check(const ShortGrading& sg, const Matrix& x, const Matrix& y, long c) {
    const Matrix xe = commutator(x, sg.e), ye = commutator(y, sg.e);
    Matrix lhs = commutator(commutator(xe, sg.e - sg.f), commutator(ye, sg.e + sg.f));
    Matrix rhs = commutator(commutator(xe, y), sg.e) * Rational(c);
    return lhs == rhs;
}

TransportedPair commuting_pair_transport(const ShortGrading& sg, const Matrix& x, const Matrix& y) {
    TransportedPair p;
    p.first = commutator(commutator(x, sg.e), sg.e - sg.f);
    p.second = commutator(commutator(y, sg.e), sg.e + sg.f);
    p.commute = commutator(p.first, p.second).is_zero();
    return p;
}

}  // namespace quatgrad::jordan
