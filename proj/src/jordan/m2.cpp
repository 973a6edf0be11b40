#include "quatgrad/jordan/m2.hpp"

#include "quatgrad/jordan/model.hpp"
#include "quatgrad/linalg/elimination.hpp"
#include "quatgrad/linalg/polynomial.hpp"
#include "quatgrad/linalg/random.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quatgrad::jordan {

namespace {

// Kernel of X -> X B - s B X on n x n matrices, s = 1 or -1 (X B + B X for s = -1).
Subspace twisted_commutant(const Matrix& B, long s) {
    const std::size_t n = B.rows();
    Matrix m(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix X = Matrix::unit(n, a, b);
            Matrix img = X * B - B * X * Rational(s);
            for (std::size_t k = 0; k < n * n; ++k) m(k, a * n + b) = img.entries()[k];
        }
    return kernel_basis(m);
}

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

bool m2_membership(const Matrix& B) {
    if (!B.square()) throw std::invalid_argument("m2_membership: matrix must be square");
    auto chi = char_poly_coefficients(B);
    for (std::size_t k = 1; k < chi.size(); k += 2)
        if (chi[k] != 0) return false;
    return true;
}

bool is_regular(const Matrix& B) { return twisted_commutant(B, 1).dim() == B.rows(); }

std::size_t m2_constraint_count(std::size_t n) { return (n + 1) / 2; }

Matrix sample_m2_regular(std::size_t n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("sample_m2_regular: n must be positive");
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::set<long> roots;
        std::uniform_int_distribution<long> pick(1, static_cast<long>(3 * n + 3));
        while (roots.size() < n / 2) roots.insert(pick(rng));
        Polynomial p({Rational(1)});
        for (long a : roots) p = p * Polynomial({Rational(-a * a), Rational(0), Rational(1)});
        if (n % 2 == 1) p = p * Polynomial({Rational(0), Rational(1)});
        Matrix C(n, n);
        for (std::size_t i = 1; i < n; ++i) C(i, i - 1) = 1;
        for (std::size_t i = 0; i < n; ++i) C(i, n - 1) = -p.coefficient(i);
        if (m2_membership(C) && is_regular(C)) return C;
    }
    throw std::runtime_error("sample_m2_regular: retries exhausted");
}

std::size_t m2_jacobian_rank(const Matrix& B) {
    const std::size_t n = B.rows();
    auto base = char_poly_coefficients(B);
    std::vector<std::size_t> odd;
    for (std::size_t k = 1; k <= n; k += 2) odd.push_back(k);
    Matrix jac(odd.size(), n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // det(t - B - s E_ab) is affine in s, so a unit step gives the derivative
            auto shifted = char_poly_coefficients(B + Matrix::unit(n, a, b));
            for (std::size_t r = 0; r < odd.size(); ++r) jac(r, a * n + b) = shifted[odd[r]] - base[odd[r]];
        }
    return rank(jac);
}

std::optional<Matrix> anti_commuting_witness(const Matrix& B, std::mt19937_64& rng) {
    const std::size_t n = B.rows();
    Subspace sols = twisted_commutant(B, -1);
    if (sols.dim() == 0) return std::nullopt;
    for (int attempt = 0; attempt < 30; ++attempt) {
        Matrix A = Matrix::reshape(random_vector(sols, rng, 3), n, n);
        if (rank(A) == n) return A;
    }
    return std::nullopt;
}

bool FiberBoundReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const FiberCheck& c) { return c.pass; });
}

FiberBoundReport fiber_bound_report(std::size_t n, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("fiber_bound_report: n must be at least 2");
    FiberBoundReport r;
    r.n = n;
    r.sample = sample_m2_regular(n, rng);
    const Matrix& B = r.sample;
    JordanAlgebraModel J = make_jordan(JordanFamily::full, static_cast<int>(n));
    Subspace zj = jordan_centralizer(J, full_coordinates(B));
    Subspace zl = twisted_commutant(B, 1);
    r.jordan_centralizer_dim = zj.dim();
    r.lie_centralizer_dim = zl.dim();
    r.constraint_count = m2_constraint_count(n);
    r.jacobian_rank = m2_jacobian_rank(B);
    r.bound = n * n - r.constraint_count + n;

    r.checks.push_back({"member", m2_membership(B), "true", m2_membership(B) ? "true" : "false"});
    r.checks.push_back({"regular", zl.dim() == n, str(n), str(zl.dim())});
    r.checks.push_back({"jordan-centralizer-dim", zj.dim() == n, str(n), str(zj.dim())});
    r.checks.push_back({"constraint-count", r.constraint_count == (n + 1) / 2, str((n + 1) / 2), str(r.constraint_count)});
    r.checks.push_back({"jacobian-rank", r.jacobian_rank == r.constraint_count, str(r.constraint_count), str(r.jacobian_rank)});

    auto A = anti_commuting_witness(B, rng);
    bool witness = A.has_value() && (*A) * B == -(B * (*A));
    r.checks.push_back({"anti-commuting-witness", witness, "A B A^-1 = -B", witness ? "found" : "missing"});
    if (witness) {
        std::vector<Vector> images;
        bool inside = true;
        for (const auto& c : zl.basis()) {
            Matrix AC = (*A) * Matrix::reshape(c, n, n);
            images.push_back(AC.flatten());
            if (!zj.contains(full_coordinates(AC))) inside = false;
        }
        std::size_t rk = Subspace::span(n * n, images).dim();
        r.checks.push_back({"lie-to-jordan-injective", inside && rk == zl.dim(), str(zl.dim()), inside ? str(rk) : "outside"});
    }
    r.checks.push_back({"bound", r.bound == n * n + n / 2, str(n * n + n / 2), str(r.bound)});
    return r;
}

}  // namespace quatgrad::jordan
