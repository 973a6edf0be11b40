#include "quatgrad/partitions/sweep.hpp"

#include "quatgrad/lie/elements.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace quatgrad::partitions {

using lie::Family;

namespace {

Matrix jordan_matrix(const Partition& lambda) { return lie::adapted_nilpotent(Family::gl, lambda).e; }

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

Matrix sign_diagonal(std::size_t plus, std::size_t minus) {
    Vector d(plus + minus, Rational(1));
    for (std::size_t i = plus; i < plus + minus; ++i) d[i] = -1;
    return Matrix::diagonal(d);
}

// Nilpotent of type lambda in the split form of its own size.
Matrix split_nilpotent(Family f, const Partition& lambda) {
    if (lambda.size() == 1) return Matrix(1, 1);
    return lie::nilpotent_from_partition(lie::build_algebra(f, static_cast<std::size_t>(lambda.size())), lambda).matrix();
}

// gl_n inside sp_2n / so_2n as block diagonal diag(A, -K A^T K), K the
// antidiagonal; this is the fixed algebra of Ad(diag(I, -I)) for split forms.
Matrix gl_block_embedding(const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) k(i, n - 1 - i) = 1;
    return block_diagonal(a, -(k * a.transpose() * k));
}

GradedDims dims_from(const lie::LieAlgebra& g, const Matrix& e, const std::vector<Matrix>& g0_generators) {
    std::vector<Matrix> with_e = g0_generators;
    with_e.push_back(e);
    GradedDims d;
    const long total = static_cast<long>(g.centralizer({e}).dim());
    d.g0 = static_cast<long>(g.centralizer(with_e).dim());
    d.g1 = total - d.g0;
    d.rank = static_cast<long>(g.rank());
    return d;
}

}  // namespace

GradedDims oracle_dims(PairTag tag, const NilpotentDatum& d) {
    check_datum(tag, d);
    const std::size_t N = static_cast<std::size_t>(ambient_size(tag, d));
    switch (tag) {
        case PairTag::sl_so:
        case PairTag::sl_sp: {
            const Family sub = (tag == PairTag::sl_so) ? Family::so : Family::sp;
            auto g = lie::build_algebra(Family::sl, N);
            auto g0 = lie::build_algebra(sub, N);
            Matrix e = lie::nilpotent_from_partition(g0, d.lambda).matrix();
            GradedDims out;
            const long total = static_cast<long>(g->centralizer({e}).dim());
            out.g0 = static_cast<long>(g0->centralizer({e}).dim());
            out.g1 = total - out.g0;
            out.rank = static_cast<long>(g->rank());
            return out;
        }
        case PairTag::sp_gl:
        case PairTag::so_gl: {
            const Family f = (tag == PairTag::sp_gl) ? Family::sp : Family::so;
            auto g = lie::build_algebra(f, N);
            Matrix e = gl_block_embedding(jordan_matrix(d.lambda));
            const std::size_t n = N / 2;
            return dims_from(*g, e, {sign_diagonal(n, n)});
        }
        case PairTag::sl_sl: {
            auto g = lie::build_algebra(Family::sl, N);
            Matrix e = block_diagonal(jordan_matrix(d.lambda), jordan_matrix(d.mu));
            return dims_from(*g, e, {sign_diagonal(d.lambda.size(), d.mu.size())});
        }
        case PairTag::sp_sp:
        case PairTag::so_so: {
            const Family f = (tag == PairTag::sp_sp) ? Family::sp : Family::so;
            const std::size_t n = d.lambda.size(), m = d.mu.size();
            // Two odd-dimensional orthogonal blocks only combine to a split
            // form over Q if their anisotropic parts have opposite signs.
            Rational second_sign = (f == Family::so && n % 2 == 1 && m % 2 == 1) ? -1 : 1;
            Matrix form = block_diagonal(lie::split_form(f, n), lie::split_form(f, m) * second_sign);
            Matrix e_adapted = block_diagonal(split_nilpotent(f, d.lambda), split_nilpotent(f, d.mu));
            Matrix T = lie::split_congruence(form, f);
            Matrix Tinv = T.inverse();
            auto g = lie::build_algebra(f, N);
            Matrix e = Tinv * e_adapted * T;
            Matrix D = Tinv * sign_diagonal(n, m) * T;
            return dims_from(*g, e, {D});
        }
    }
    throw std::logic_error("oracle_dims: bad tag");
}

SweepReport sweep(PairTag tag, int bound) {
    if (bound < 2) throw std::invalid_argument("sweep: bound must be at least 2");
    SweepReport r;
    r.pair = pair_name(tag);
    r.bound = bound;
    r.method = has_closed_formula(tag) ? "formula" : "matrix-oracle";
    r.min_defect = std::numeric_limits<long>::max();
    for (const auto& d : enumerate_data(tag, bound)) {
        ++r.instances_checked;
        const GradedDims dims = has_closed_formula(tag) ? formula_dims(tag, d) : oracle_dims(tag, d);
        const long def = dims.defect();
        if (def < r.min_defect) {
            r.min_defect = def;
            r.argmin.clear();
        }
        if (def == r.min_defect) r.argmin.push_back(d);
        if (def % 2 != 0) r.violations.push_back({d, "defect " + std::to_string(def) + " is odd"});
        if (!d.is_zero() && def < 2) r.violations.push_back({d, "defect " + std::to_string(def) + " < 2"});
        if (tag == PairTag::so_gl && dims.g0 < dims.g1)
            r.violations.push_back({d, "dim g0^e < dim g1^e"});
        if (tag == PairTag::sl_sl) {
            const long f = F(d.lambda, d.mu);
            if (2 * f != def) r.violations.push_back({d, "defect differs from 2F"});
            if (f <= 0) r.violations.push_back({d, "F = " + std::to_string(f) + " not positive"});
            if (d.lambda.length() >= 2 && d.mu.length() >= 2) {
                const long rec = F_recursion_value(d.lambda, d.mu);
                const long floor = F(d.lambda.tail(), d.mu.tail()) + std::max(d.lambda.parts()[0], d.mu.parts()[0]);
                if (rec != f) r.violations.push_back({d, "recursion identity fails"});
                if (f < floor) r.violations.push_back({d, "F below F(tails) + max of first parts"});
                if (f < std::max(d.lambda.parts()[0], d.mu.parts()[0]))
                    r.violations.push_back({d, "F below max of first parts"});
            }
        }
    }
    if (r.instances_checked == 0) r.min_defect = 0;
    return r;
}

}  // namespace quatgrad::partitions
