#include "quatgrad/gradings/catalog.hpp"

#include "quatgrad/jordan/short_grading.hpp"
#include "quatgrad/lie/elements.hpp"

#include <regex>
#include <stdexcept>

namespace quatgrad::gradings {

namespace {

using lie::Family;

std::size_t to_size(const std::ssub_match& m) { return static_cast<std::size_t>(std::stoul(m.str())); }

// Traceless diagonal matrices E_ii - E_i+1,i+1.
std::vector<Matrix> traceless_diagonal(std::size_t N) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i + 1 < N; ++i) out.push_back(Matrix::unit(N, i, i) - Matrix::unit(N, i + 1, i + 1));
    return out;
}

// Traceless diagonal matrices with d_k = d_{N-1-k}.
std::vector<Matrix> palindromic_diagonal(std::size_t N) {
    const std::size_t n = N / 2;
    std::vector<Matrix> out;
    for (std::size_t k = 0; k + 1 < n; ++k)
        out.push_back(Matrix::unit(N, k, k) + Matrix::unit(N, N - 1 - k, N - 1 - k) - Matrix::unit(N, k + 1, k + 1) -
                      Matrix::unit(N, N - 2 - k, N - 2 - k));
    return out;
}

// v (F u)^T - u (F v)^T, the element u ^ v of so_F.
Matrix wedge(const Matrix& F, const Vector& u, const Vector& v) {
    const std::size_t N = F.rows();
    Vector Fu = F * u, Fv = F * v;
    Matrix out(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(i, j) = u[i] * Fv[j] - v[i] * Fu[j];
    return out;
}

// I - 2 u u^T F / <u,u>.
Matrix reflection(const Matrix& F, const Vector& u) {
    const std::size_t N = F.rows();
    Vector Fu = F * u;
    Rational q = dot(u, Fu);
    if (q == 0) throw std::invalid_argument("reflection in an isotropic vector");
    Matrix r = Matrix::identity(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r(i, j) -= 2 * u[i] * Fu[j] / q;
    return r;
}

// z(css) cap piece == span(css), all elements semisimple and commuting.
void certify_css(const lie::LieAlgebra& g, const std::vector<Matrix>& css, const Subspace& piece, const std::string& id) {
    for (const auto& x : css) {
        if (!piece.contains(g.coordinates(x))) throw std::logic_error("catalog " + id + ": CSS element outside its piece");
        if (!lie::is_semisimple(x)) throw std::logic_error("catalog " + id + ": CSS element not semisimple");
    }
    Subspace c = g.span_of(css);
    if (c.dim() != css.size()) throw std::logic_error("catalog " + id + ": CSS basis is dependent");
    if (g.centralizer(css, piece) != c) throw std::logic_error("catalog " + id + ": CSS is not maximal");
}

}  // namespace

std::vector<std::string> grading_ids() {
    return {"sl2-diag", "sl3-so3", "sl4-so4", "sp4-gl2", "sp6-gl3", "sl4-sp4", "sl6-sp6",
            "sl4-herm", "sl6-herm", "so5-so4", "so6-so5"};
}

CatalogGrading catalog_grading(const std::string& id) {
    std::smatch mt;
    CatalogGrading out{id, "", grading_of(Involution::negative_transpose(lie::build_algebra(Family::sl, 2))), {}};
    if (id == "sl2-diag") {
        auto g = lie::build_algebra(Family::sl, 2);
        out.description = "sl2 with Ad(diag(1,-1))";
        out.grading = grading_of(Involution::inner(g, Matrix::diagonal({Rational(1), Rational(-1)}), "Ad(diag(1,-1))"));
        out.rational_css = {Matrix::unit(2, 0, 1) + Matrix::unit(2, 1, 0)};
    } else if (std::regex_match(id, mt, std::regex("sl(\\d+)-so(\\d+)")) && mt[1] == mt[2]) {
        const std::size_t N = to_size(mt[1]);
        auto g = lie::build_algebra(Family::sl, N);
        out.description = "(sl" + std::to_string(N) + ", so" + std::to_string(N) + ") by x -> -x^T";
        out.grading = grading_of(Involution::negative_transpose(g));
        out.rational_css = traceless_diagonal(N);
    } else if (std::regex_match(id, mt, std::regex("sp(\\d+)-gl(\\d+)")) && to_size(mt[1]) == 2 * to_size(mt[2])) {
        const std::size_t N = to_size(mt[1]);
        auto g = lie::build_algebra(Family::sp, N);
        out.description = "(sp" + std::to_string(N) + ", gl" + std::to_string(N / 2) + ") by Ad(F)";
        out.grading = grading_of(Involution::inner(g, g->form(), "Ad(F)"));
        for (std::size_t k = 0; k < N / 2; ++k)
            out.rational_css.push_back(Matrix::unit(N, k, k) - Matrix::unit(N, N - 1 - k, N - 1 - k));
    } else if (std::regex_match(id, mt, std::regex("sl(\\d+)-sp(\\d+)")) && mt[1] == mt[2] && to_size(mt[1]) % 2 == 0) {
        const std::size_t N = to_size(mt[1]);
        auto g = lie::build_algebra(Family::sl, N);
        out.description = "(sl" + std::to_string(N) + ", sp" + std::to_string(N) + ") by x -> -F^-1 x^T F";
        out.grading = grading_of(Involution::outer(g, lie::split_form(Family::sp, N).inverse(), "-F^-1 x^T F"));
        out.rational_css = palindromic_diagonal(N);
    } else if (std::regex_match(id, mt, std::regex("sl(\\d+)-herm")) && to_size(mt[1]) % 2 == 0) {
        const std::size_t N = to_size(mt[1]), n = N / 2;
        auto g = lie::build_algebra(Family::sl, N);
        Vector d(N);
        for (std::size_t k = 0; k < N; ++k) d[k] = k < n ? 1 : -1;
        out.description = "(sl" + std::to_string(N) + ", s(gl" + std::to_string(n) + "+gl" + std::to_string(n) + ")) by Ad(diag(I,-I))";
        out.grading = grading_of(Involution::inner(g, Matrix::diagonal(d), "Ad(diag(I,-I))"));
        for (std::size_t k = 0; k < n; ++k) out.rational_css.push_back(Matrix::unit(N, k, n + k) + Matrix::unit(N, n + k, k));
    } else if (std::regex_match(id, mt, std::regex("so(\\d+)-so(\\d+)")) && to_size(mt[1]) == to_size(mt[2]) + 1 &&
               to_size(mt[1]) >= 3) {
        const std::size_t N = to_size(mt[1]);
        auto g = lie::build_algebra(Family::so, N);
        Vector u(N);
        u[0] = 1;
        u[N - 1] = 1;
        out.description = "(so" + std::to_string(N) + ", so" + std::to_string(N - 1) + ") by a reflection";
        out.grading = grading_of(Involution::inner(g, reflection(g->form(), u), "Ad(r_u)"));
        out.rational_css = {Matrix::unit(N, 0, 0) - Matrix::unit(N, N - 1, N - 1)};
    } else {
        throw std::invalid_argument("unsupported grading id: " + id);
    }
    certify_css(*out.grading.algebra(), out.rational_css, out.grading.g1, id);
    return out;
}

std::string kind_name(DecompositionKind k) {
    switch (k) {
        case DecompositionKind::chain: return "chain";
        case DecompositionKind::dyad: return "dyad";
        case DecompositionKind::triad: return "triad";
    }
    return "?";
}

std::vector<std::string> decomposition_ids() {
    return {"so5-chain", "so6-chain", "so7-chain", "sl4-sp-dyad", "sl6-sp-dyad", "sl6-sp-dyad-m2",
            "sl3-maxrank-dyad", "sl4-maxrank-dyad", "sl4-full-triad", "sl6-full-triad", "sp4-sym-triad",
            "sp6-sym-triad", "so8-skew-triad", "so6-spin-triad", "so7-spin-triad"};
}

CatalogDecomposition catalog_decomposition(const std::string& id) {
    std::smatch mt;
    auto make = [&](std::string desc, DecompositionKind kind, QuaternionicDecomposition qd, std::vector<Matrix> css,
                    PieceIndex piece) {
        certify_css(*qd.algebra(), css, qd.piece(piece.i, piece.j), id);
        return CatalogDecomposition{id, std::move(desc), kind, std::move(qd), std::move(css), piece};
    };
    if (std::regex_match(id, mt, std::regex("so(\\d+)-chain"))) {
        const std::size_t N = to_size(mt[1]);
        if (N < 3) throw std::invalid_argument("so-chain needs N >= 3: " + id);
        auto g = lie::build_algebra(Family::so, N);
        Vector u(N), w(N);
        u[0] = 1;
        u[N - 1] = 1;
        w[0] = 1;
        w[N - 1] = -1;
        const Matrix& F = g->form();
        auto s1 = Involution::inner(g, reflection(F, u), "Ad(r_u)");
        auto s2 = Involution::inner(g, reflection(F, w), "Ad(r_w)");
        return make("so" + std::to_string(N) + " > so" + std::to_string(N - 1) + " > so" + std::to_string(N - 2) + "+so2",
                    DecompositionKind::chain, quaternionic(s1, s2), {wedge(F, u, w)}, {1, 1});
    }
    if (std::regex_match(id, mt, std::regex("sl(\\d+)-sp-dyad(?:-m(\\d+))?"))) {
        const std::size_t N = to_size(mt[1]), n = N / 2;
        const std::size_t m = mt[2].matched ? to_size(mt[2]) : 1;
        if (N % 2 != 0 || n < 2 || m < 1 || m >= n) throw std::invalid_argument("sl-sp-dyad needs N = 2n, 1 <= m < n: " + id);
        auto g = lie::build_algebra(Family::sl, N);
        Vector d(N);
        for (std::size_t k = 0; k < n; ++k) d[k] = d[N - 1 - k] = k < m ? 1 : -1;
        auto s1 = Involution::outer(g, lie::split_form(Family::sp, N).inverse(), "-F^-1 x^T F");
        auto s2 = s1.compose(Involution::inner(g, Matrix::diagonal(d), "Ad(D)"));
        return make("(sl" + std::to_string(N) + ", sp" + std::to_string(N) + ") dyad, g00 = sp" + std::to_string(2 * m) + "+sp" +
                        std::to_string(N - 2 * m),
                    DecompositionKind::dyad, quaternionic(s1, s2), palindromic_diagonal(N), {1, 1});
    }
    if (std::regex_match(id, mt, std::regex("sl(\\d+)-maxrank-dyad"))) {
        const std::size_t N = to_size(mt[1]);
        if (N < 2) throw std::invalid_argument("sl-maxrank-dyad needs N >= 2: " + id);
        auto g = lie::build_algebra(Family::sl, N);
        Vector d(N, Rational(1));
        d[N - 1] = -1;
        auto s1 = Involution::negative_transpose(g);
        auto s2 = Involution::outer(g, Matrix::diagonal(d), "-D x^T D");
        return make("sl" + std::to_string(N) + " maximal-rank dyad", DecompositionKind::dyad, quaternionic(s1, s2),
                    traceless_diagonal(N), {1, 1});
    }
    if (std::regex_match(id, mt, std::regex("(.+)-triad"))) {
        auto sg = jordan::short_grading(mt[1].str());
        auto t = jordan::build_jordan_triad(sg);
        std::vector<Matrix> css;
        for (const auto& x : sg.frame) css.push_back(x + t.qd.sigma2().apply(x));
        return make("Jordan triad of " + sg.id, DecompositionKind::triad, reorient(t.qd, {0, 1}, {1, 1}), css, {1, 1});
    }
    throw std::invalid_argument("unsupported decomposition id: " + id);
}

}  // namespace quatgrad::gradings
