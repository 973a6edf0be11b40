#include "quatgrad/linalg/elimination.hpp"

#include "quatgrad/linalg/subspace.hpp"

namespace quatgrad {
namespace {

using IntRow = std::vector<Integer>;

IntRow clear_denominators(const Matrix& m, std::size_t i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& x = m(i, j);
        if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    IntRow row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& x = m(i, j);
        if (sgn(x) != 0) row[j] = x.get_num() * (l / x.get_den());
    }
    return row;
}

struct IntEchelon {
    std::vector<IntRow> rows;  // first pivots.size() rows are the echelon rows
    std::vector<std::size_t> pivots;
};

// One-step Bareiss: after k pivots every entry below is a (k+1)-minor of the
// input, so the division by the previous pivot is exact.
IntEchelon bareiss(const Matrix& m) {
    IntEchelon e;
    e.rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        IntRow row = clear_denominators(m, i);
        bool nonzero = false;
        for (const auto& x : row)
            if (x != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) e.rows.push_back(std::move(row));
    }
    const std::size_t nrows = e.rows.size();
    const std::size_t ncols = m.cols();
    Integer prev = 1;
    Integer t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && e.rows[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(e.rows[p], e.rows[r]);
        const IntRow& prow = e.rows[r];
        const Integer piv = prow[c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            IntRow& row = e.rows[i];
            const Integer f = row[c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                if (f == 0) {
                    if (row[j] == 0) continue;
                    row[j] *= piv;
                } else {
                    row[j] *= piv;
                    if (prow[j] != 0) {
                        t = f * prow[j];
                        row[j] -= t;
                    }
                }
                if (prev != 1 && row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = piv;
        e.pivots.push_back(c);
        ++r;
    }
    e.rows.resize(r);
    return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return bareiss(m).pivots.size(); }

RowEchelon rref(const Matrix& m) {
    IntEchelon e = bareiss(m);
    const std::size_t r = e.pivots.size();
    Matrix red(r, m.cols());
    for (std::size_t k = 0; k < r; ++k) {
        const Integer& piv = e.rows[k][e.pivots[k]];
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (e.rows[k][j] != 0) red(k, j) = ratio(e.rows[k][j], piv);
    }
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            if (sgn(red(i, pc)) == 0) continue;
            Rational f = red(i, pc);
            for (std::size_t j = pc; j < m.cols(); ++j)
                if (sgn(red(k, j)) != 0) red(i, j) -= f * red(k, j);
        }
    }
    return RowEchelon{std::move(red), std::move(e.pivots)};
}

Subspace kernel_basis(const Matrix& m) {
    RowEchelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> vectors;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            if (sgn(e.reduced(k, f)) != 0) v[e.pivots[k]] = -e.reduced(k, f);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(n, vectors);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RowEchelon e = rref(aug);
    Vector x(m.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == m.cols()) return std::nullopt;
        x[e.pivots[k]] = e.reduced(k, m.cols());
    }
    return x;
}

}  // namespace quatgrad
