#include "quatgrad/jordan/model.hpp"

#include "quatgrad/linalg/elimination.hpp"

#include <functional>
#include <stdexcept>

namespace quatgrad::jordan {

std::string family_name(JordanFamily f) {
    switch (f) {
        case JordanFamily::full: return "full";
        case JordanFamily::sym: return "sym";
        case JordanFamily::skew: return "skew";
        case JordanFamily::spin: return "spin";
        case JordanFamily::short_grading: return "short-grading";
    }
    return "?";
}

JordanFamily parse_jordan_family(const std::string& s) {
    for (JordanFamily f : {JordanFamily::full, JordanFamily::sym, JordanFamily::skew, JordanFamily::spin})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown Jordan family: " + s);
}

JordanAlgebraModel::JordanAlgebraModel(JordanFamily family, int n, std::vector<std::string> labels,
                                       std::vector<std::vector<Vector>> table)
    : family_(family), n_(n), labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t d = labels_.size();
    if (table_.size() != d) throw std::invalid_argument("jordan: structure table has wrong size");
    for (const auto& row : table_) {
        if (row.size() != d) throw std::invalid_argument("jordan: structure table has wrong size");
        for (const auto& v : row)
            if (v.size() != d) throw std::invalid_argument("jordan: structure table has wrong size");
    }
}

Vector JordanAlgebraModel::product(const Vector& x, const Vector& y) const {
    const std::size_t d = dim();
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j] == 0) continue;
            Rational c = x[i] * y[j];
            const Vector& t = table_[i][j];
            for (std::size_t k = 0; k < d; ++k)
                if (t[k] != 0) out[k] += c * t[k];
        }
    }
    return out;
}

Vector JordanAlgebraModel::basis_vector(std::size_t i) const {
    Vector v(dim());
    v.at(i) = 1;
    return v;
}

Matrix JordanAlgebraModel::left_multiplication(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(product(x, basis_vector(j)));
    return Matrix::from_columns(cols);
}

std::optional<Vector> JordanAlgebraModel::unit() const {
    // u o b_j = b_j for all j, linear in u
    const std::size_t d = dim();
    Matrix m(d * d, d);
    Vector rhs(d * d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) m(j * d + k, i) = table_[i][j][k];
            if (i == j) rhs[j * d + i] = 1;
        }
    return solve(m, rhs);
}

namespace {

using MatrixProduct = std::function<Matrix(const Matrix&, const Matrix&)>;

// Basis matrices, each with a marker entry equal to 1 where every other basis
// matrix vanishes, so coordinates are read off directly.
struct MatrixBasis {
    std::vector<Matrix> elems;
    std::vector<std::pair<std::size_t, std::size_t>> marker;
    std::vector<std::string> labels;
};

JordanAlgebraModel from_matrix_basis(JordanFamily family, int n, const MatrixBasis& mb, const MatrixProduct& prod) {
    const std::size_t d = mb.elems.size();
    std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix p = prod(mb.elems[i], mb.elems[j]);
            Vector c(d);
            Matrix check(p.rows(), p.cols());
            for (std::size_t k = 0; k < d; ++k) {
                c[k] = p(mb.marker[k].first, mb.marker[k].second);
                if (c[k] != 0) check += mb.elems[k] * c[k];
            }
            if (check != p) throw std::logic_error("jordan: product leaves the matrix family");
            table[i][j] = c;
        }
    return JordanAlgebraModel(family, n, mb.labels, table);
}

std::string ij(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

std::size_t jordan_dim(JordanFamily family, int n) {
    const auto m = static_cast<std::size_t>(n);
    switch (family) {
        case JordanFamily::full: return m * m;
        case JordanFamily::sym: return m * (m + 1) / 2;
        case JordanFamily::skew: return m * (2 * m - 1);
        case JordanFamily::spin: return m + 1;
        case JordanFamily::short_grading: break;
    }
    throw std::invalid_argument("jordan_dim: no closed formula for this family");
}

JordanAlgebraModel make_jordan(JordanFamily family, int n) {
    if (n < 1) throw std::invalid_argument("make_jordan: n must be positive");
    const auto m = static_cast<std::size_t>(n);
    const Rational half = ratio(1, 2);
    MatrixBasis mb;
    std::optional<JordanAlgebraModel> J;
    switch (family) {
        case JordanFamily::full: {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    mb.elems.push_back(Matrix::unit(m, i, j));
                    mb.marker.push_back({i, j});
                    mb.labels.push_back("E" + ij(i, j));
                }
            J = from_matrix_basis(family, n, mb, [&](const Matrix& a, const Matrix& b) { return (a * b + b * a) * half; });
            break;
        }
        case JordanFamily::sym: {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) {
                    Matrix e = Matrix::unit(m, i, j);
                    if (i != j) e += Matrix::unit(m, j, i);
                    mb.elems.push_back(e);
                    mb.marker.push_back({i, j});
                    mb.labels.push_back("S" + ij(i, j));
                }
            J = from_matrix_basis(family, n, mb, [&](const Matrix& a, const Matrix& b) { return (a * b + b * a) * half; });
            break;
        }
        case JordanFamily::skew: {
            const std::size_t s = 2 * m;
            Matrix Jm(s, s);
            for (std::size_t i = 0; i < m; ++i) {
                Jm(i, m + i) = 1;
                Jm(m + i, i) = -1;
            }
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = i + 1; j < s; ++j) {
                    mb.elems.push_back(Matrix::unit(s, i, j) - Matrix::unit(s, j, i));
                    mb.marker.push_back({i, j});
                    mb.labels.push_back("A" + ij(i, j));
                }
            J = from_matrix_basis(family, n, mb,
                                  [&](const Matrix& a, const Matrix& b) { return (a * Jm * b + b * Jm * a) * half; });
            break;
        }
        case JordanFamily::spin: {
            const std::size_t d = m + 1;
            std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
            std::vector<std::string> labels{"1"};
            for (std::size_t i = 1; i < d; ++i) labels.push_back("u" + std::to_string(i));
            for (std::size_t i = 0; i < d; ++i) {
                table[0][i][i] = 1;
                table[i][0][i] = 1;
            }
            for (std::size_t i = 1; i < d; ++i) table[i][i][0] = 1;
            J.emplace(family, n, labels, table);
            break;
        }
        case JordanFamily::short_grading:
            throw std::invalid_argument("make_jordan: use from_short_grading");
    }
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(family));
    JordanValidation v = validate(*J, rng, 10);
    if (!v.ok()) throw std::logic_error("make_jordan: Jordan axioms fail for " + family_name(family));
    return *J;
}

bool jordan_identity(const JordanAlgebraModel& J, const Vector& x, const Vector& y) {
    Vector xx = J.product(x, x);
    return J.product(J.product(x, y), xx) == J.product(x, J.product(y, xx));
}

JordanValidation validate(const JordanAlgebraModel& J, std::mt19937_64& rng, std::size_t samples) {
    JordanValidation v;
    const std::size_t d = J.dim();
    v.commutative = true;
    for (std::size_t i = 0; i < d && v.commutative; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (J.product(J.basis_vector(i), J.basis_vector(j)) != J.product(J.basis_vector(j), J.basis_vector(i))) {
                v.commutative = false;
                break;
            }
    if (d <= 10) {
        // The identity is cubic in x; the points b_i + b_j + b_k (i <= j <= k)
        // determine a homogeneous cubic, so this settles it on the whole space.
        v.basis_checked = true;
        v.identity_on_basis = true;
        for (std::size_t i = 0; i < d && v.identity_on_basis; ++i)
            for (std::size_t j = i; j < d && v.identity_on_basis; ++j)
                for (std::size_t k = j; k < d && v.identity_on_basis; ++k) {
                    Vector x = add(add(J.basis_vector(i), J.basis_vector(j)), J.basis_vector(k));
                    for (std::size_t l = 0; l < d; ++l)
                        if (!jordan_identity(J, x, J.basis_vector(l))) {
                            v.identity_on_basis = false;
                            break;
                        }
                }
    }
    std::uniform_int_distribution<long> coef(-3, 3);
    v.identity_on_samples = true;
    for (std::size_t s = 0; s < samples; ++s) {
        Vector x(d), y(d);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = coef(rng);
            y[i] = coef(rng);
        }
        ++v.random_samples;
        if (!jordan_identity(J, x, y)) v.identity_on_samples = false;
    }
    return v;
}

Subspace jordan_centralizer(const JordanAlgebraModel& J, const Vector& x) {
    if (x.size() != J.dim()) throw std::invalid_argument("jordan_centralizer: wrong vector size");
    return kernel_basis(J.left_multiplication(x));
}

Vector full_coordinates(const Matrix& B) {
    if (!B.square()) throw std::invalid_argument("full_coordinates: matrix must be square");
    return B.flatten();
}

}  // namespace quatgrad::jordan
