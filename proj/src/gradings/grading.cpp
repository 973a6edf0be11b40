#include "quatgrad/gradings/grading.hpp"

#include "quatgrad/linalg/elimination.hpp"

#include <stdexcept>

namespace quatgrad::gradings {

namespace {

Subspace eigenspace(const Matrix& op, long eigenvalue) {
    Matrix m = op - Matrix::identity(op.rows()) * Rational(eigenvalue);
    return kernel_basis(m);
}

Subspace joint_eigenspace(const Matrix& a, long ea, const Matrix& b, long eb) {
    const std::size_t d = a.rows();
    Matrix m(2 * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            m(i, j) = a(i, j) - (i == j ? Rational(ea) : Rational(0));
            m(d + i, j) = b(i, j) - (i == j ? Rational(eb) : Rational(0));
        }
    return kernel_basis(m);
}

long sign(int k) { return (k % 2 == 0) ? 1 : -1; }

bool bracket_lands(const lie::LieAlgebra& g, const Subspace& a, const Subspace& b,
                   const std::vector<std::pair<const Matrix*, long>>& constraints) {
    std::vector<Matrix> as = g.elements(a), bs = g.elements(b);
    for (const auto& x : as)
        for (const auto& y : bs) {
            Vector v = g.coordinates(commutator(x, y), false);
            for (const auto& [op, e] : constraints)
                if ((*op) * v != scaled(v, Rational(e))) return false;
        }
    return true;
}

}  // namespace

Z2Grading grading_of(const Involution& sigma) {
    Z2Grading gr{sigma, eigenspace(sigma.op(), 1), eigenspace(sigma.op(), -1)};
    const auto& g = *sigma.algebra();
    if (gr.g0.dim() + gr.g1.dim() != g.dim()) throw std::logic_error("grading_of: eigenspaces do not span the algebra");
    const Matrix& op = sigma.op();
    if (!bracket_lands(g, gr.g0, gr.g0, {{&op, 1}}) || !bracket_lands(g, gr.g0, gr.g1, {{&op, -1}}) ||
        !bracket_lands(g, gr.g1, gr.g1, {{&op, 1}}))
        throw std::logic_error("grading_of: bracket relations fail");
    return gr;
}

bool is_maximal_rank(const Z2Grading& grading) {
    return static_cast<long>(grading.g1.dim()) - static_cast<long>(grading.g0.dim()) ==
           static_cast<long>(grading.algebra()->rank());
}

int homogeneous_degree(const Z2Grading& grading, const Matrix& x) {
    Vector c = grading.algebra()->coordinates(x);
    if (grading.g0.contains(c)) return 0;
    if (grading.g1.contains(c)) return 1;
    throw std::invalid_argument("element is not homogeneous for the grading");
}

std::array<std::size_t, 2> graded_centralizer_dims(const Z2Grading& grading, const Matrix& x) {
    homogeneous_degree(grading, x);
    const auto& g = *grading.algebra();
    return {g.centralizer({x}, grading.g0).dim(), g.centralizer({x}, grading.g1).dim()};
}

QuaternionicDecomposition::QuaternionicDecomposition(Involution s1, Involution s2)
    : s1_(std::move(s1)), s2_(std::move(s2)), s3_(s1_) {
    if (!lie::same_algebra(s1_.algebra(), s2_.algebra())) throw std::invalid_argument("quaternionic: involutions of different algebras");
    if (s1_ == s2_) throw std::invalid_argument("quaternionic: sigma1 = sigma2");
    if (!s1_.commutes_with(s2_)) throw std::invalid_argument("quaternionic: involutions do not commute");
    s3_ = s1_.compose(s2_);
    std::size_t total = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            pieces_[static_cast<std::size_t>(2 * i + j)] = joint_eigenspace(s1_.op(), sign(i), s2_.op(), sign(j));
            total += piece(i, j).dim();
        }
    if (total != algebra()->dim()) throw std::logic_error("quaternionic: pieces do not span the algebra");
}

std::vector<BracketInclusion> check_bracket_inclusions(const QuaternionicDecomposition& qd) {
    std::vector<BracketInclusion> out;
    const auto& g = *qd.algebra();
    const Matrix& a = qd.sigma1().op();
    const Matrix& b = qd.sigma2().op();
    for (int p = 0; p < 4; ++p)
        for (int q = p; q < 4; ++q) {
            const int i = p / 2, j = p % 2, k = q / 2, l = q % 2;
            bool holds = bracket_lands(g, qd.piece(i, j), qd.piece(k, l), {{&a, sign(i + k)}, {&b, sign(j + l)}});
            out.push_back({i, j, k, l, holds});
        }
    return out;
}

QuaternionicDecomposition quaternionic(const Involution& s1, const Involution& s2) {
    QuaternionicDecomposition qd(s1, s2);
    for (const auto& inc : check_bracket_inclusions(qd))
        if (!inc.holds)
            throw std::logic_error("quaternionic: bracket inclusion fails for g" + std::to_string(inc.i) + std::to_string(inc.j) +
                                   " and g" + std::to_string(inc.k) + std::to_string(inc.l));
    return qd;
}

PieceIndex parse_piece(const std::string& s) {
    if (s == "01") return {0, 1};
    if (s == "10") return {1, 0};
    if (s == "11") return {1, 1};
    if (s == "00") return {0, 0};
    throw std::invalid_argument("bad piece label: " + s);
}

PieceIndex homogeneous_piece(const QuaternionicDecomposition& qd, const Matrix& x) {
    Vector c = qd.algebra()->coordinates(x);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (qd.piece(i, j).contains(c)) return {i, j};
    throw std::invalid_argument("element is not homogeneous for the decomposition");
}

std::array<std::size_t, 4> graded_centralizer_dims(const QuaternionicDecomposition& qd, const Matrix& x) {
    homogeneous_piece(qd, x);
    std::array<std::size_t, 4> out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[static_cast<std::size_t>(2 * i + j)] = qd.algebra()->centralizer({x}, qd.piece(i, j)).dim();
    return out;
}

namespace {
// The one among sigma1, sigma2, sigma3 acting by +1 on the given nonzero piece.
const Involution& fixing(const QuaternionicDecomposition& qd, PieceIndex p) {
    if (p == PieceIndex{0, 1}) return qd.sigma1();
    if (p == PieceIndex{1, 0}) return qd.sigma2();
    if (p == PieceIndex{1, 1}) return qd.sigma3();
    throw std::invalid_argument("reorient: pieces must be among 01, 10, 11");
}
}  // namespace

QuaternionicDecomposition reorient(const QuaternionicDecomposition& qd, PieceIndex target, PieceIndex first_source) {
    if (target == first_source) throw std::invalid_argument("reorient: target and source coincide");
    return QuaternionicDecomposition(fixing(qd, target), fixing(qd, first_source));
}

}  // namespace quatgrad::gradings
