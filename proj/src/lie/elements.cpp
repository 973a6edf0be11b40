#include "quatgrad/lie/elements.hpp"

#include "quatgrad/linalg/elimination.hpp"
#include "quatgrad/linalg/polynomial.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace quatgrad::lie {

using partitions::Partition;

bool is_nilpotent(const Matrix& x) {
    if (!x.square()) throw std::invalid_argument("is_nilpotent: non-square matrix");
    Matrix p = x;
    for (std::size_t k = 1; k < x.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * x;
    }
    return p.is_zero();
}

bool is_semisimple(const Matrix& x) { return squarefree_part(char_poly(x))(x).is_zero(); }

Partition jordan_type(const Matrix& x) {
    if (!is_nilpotent(x)) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    const std::size_t n = x.rows();
    std::vector<long> r{static_cast<long>(n)};
    Matrix p = x;
    while (r.back() > 0) {
        r.push_back(static_cast<long>(rank(p)));
        p = p * x;
    }
    r.push_back(0);
    std::vector<int> parts;
    for (std::size_t k = r.size() - 2; k >= 1; --k) {
        long exactly = (r[k - 1] - r[k]) - (r[k] - r[k + 1]);
        for (long i = 0; i < exactly; ++i) parts.push_back(static_cast<int>(k));
    }
    return Partition(std::move(parts));
}

AdaptedNilpotent adapted_nilpotent(Family family, const Partition& lambda) {
    const std::size_t n = static_cast<std::size_t>(lambda.size());
    AdaptedNilpotent out{Matrix(n, n), Matrix()};
    const bool formed = family == Family::so || family == Family::sp;
    if (formed) out.form = Matrix(n, n);
    if (family == Family::so && !lambda.admissible_so())
        throw std::invalid_argument("so: even parts must occur with even multiplicity: " + lambda.to_string());
    if (family == Family::sp && !lambda.admissible_sp())
        throw std::invalid_argument("sp: odd parts must occur with even multiplicity: " + lambda.to_string());

    std::size_t offset = 0;
    auto chain = [&](std::size_t o, int p) {
        for (int j = 0; j + 1 < p; ++j) out.e(o + j + 1, o + j) = 1;
    };
    if (!formed) {
        for (int p : lambda.parts()) {
            chain(offset, p);
            offset += p;
        }
        return out;
    }

    const long eps = (family == Family::so) ? 1 : -1;
    // Self-dual odd blocks in so carry a vector pairing with itself; their
    // signs alternate so the whole form splits over Q.
    long next_middle = 1;
    std::map<int, int, std::greater<int>> mult;
    for (int p : lambda.parts()) ++mult[p];
    for (const auto& [p, m] : mult) {
        const bool single = (family == Family::so) ? (p % 2 == 1) : (p % 2 == 0);
        if (single) {
            for (int b = 0; b < m; ++b) {
                long s = 1;
                if (family == Family::so) {
                    const long sign_mid = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
                    s = next_middle * sign_mid;
                    next_middle = -next_middle;
                }
                chain(offset, p);
                for (int j = 0; j < p; ++j) out.form(offset + j, offset + p - 1 - j) = (j % 2 == 0) ? s : -s;
                offset += p;
            }
        } else {
            for (int b = 0; b < m / 2; ++b) {
                const std::size_t v = offset, w = offset + p;
                chain(v, p);
                chain(w, p);
                for (int j = 0; j < p; ++j) {
                    const long sgn_j = (j % 2 == 0) ? 1 : -1;
                    out.form(v + j, w + p - 1 - j) = sgn_j;
                    out.form(w + p - 1 - j, v + j) = eps * sgn_j;
                }
                offset += 2 * p;
            }
        }
    }
    return out;
}

Matrix split_congruence(const Matrix& F, Family family) {
    if (!F.square()) throw std::invalid_argument("split_congruence: non-square form");
    if (family != Family::so && family != Family::sp) throw std::invalid_argument("split_congruence: family has no form");
    const std::size_t n = F.rows();
    const Matrix target = split_form(family, n);
    std::vector<std::size_t> partner(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(F(i, j)) != 0) {
                partner[i] = j;
                ++count;
            }
        if (count != 1) throw std::invalid_argument("split_congruence: form is not monomial");
    }
    Matrix T(n, n);
    std::size_t k = 0;
    std::deque<std::size_t> plus, minus;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = partner[i];
        if (p == i) {
            if (family == Family::sp) throw std::invalid_argument("split_congruence: alternating form with isotropy defect");
            if (F(i, i) == 1) plus.push_back(i);
            else if (F(i, i) == -1) minus.push_back(i);
            else throw std::invalid_argument("split_congruence: self-pairing must be +-1");
            continue;
        }
        if (p < i) continue;
        T(i, k) = 1;
        T(p, n - 1 - k) = 1 / F(i, p);
        ++k;
    }
    while (!plus.empty() && !minus.empty()) {
        const std::size_t u = plus.front(), v = minus.front();
        plus.pop_front();
        minus.pop_front();
        T(u, k) = 1;
        T(v, k) = 1;
        T(u, n - 1 - k) = ratio(1, 2);
        T(v, n - 1 - k) = ratio(-1, 2);
        ++k;
    }
    if (!minus.empty() || plus.size() > 1 || (plus.size() == 1) != (n % 2 == 1))
        throw std::invalid_argument("split_congruence: form is not split over Q");
    if (plus.size() == 1) T(plus.front(), n / 2) = 1;
    if (T.transpose() * F * T != target) throw std::logic_error("split_congruence: verification failed");
    return T;
}

LieElement nilpotent_from_partition(const AlgebraPtr& algebra, const Partition& lambda) {
    if (static_cast<std::size_t>(lambda.size()) != algebra->size())
        throw std::invalid_argument("nilpotent_from_partition: " + lambda.to_string() + " is not a partition of " +
                                    std::to_string(algebra->size()));
    AdaptedNilpotent a = adapted_nilpotent(algebra->family(), lambda);
    Matrix e = a.e;
    if (algebra->has_form()) {
        Matrix T = split_congruence(a.form, algebra->family());
        e = T.inverse() * a.e * T;
    }
    LieElement x(algebra, e);
    if (jordan_type(e) != lambda) throw std::logic_error("nilpotent_from_partition: Jordan type mismatch");
    return x;
}

}  // namespace quatgrad::lie
