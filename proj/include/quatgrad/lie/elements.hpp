#pragma once

#include "quatgrad/lie/algebra.hpp"
#include "quatgrad/partitions/partition.hpp"

namespace quatgrad::lie {

bool is_nilpotent(const Matrix& x);
// Minimal polynomial squarefree, i.e. the squarefree part of the
// characteristic polynomial already annihilates x.
bool is_semisimple(const Matrix& x);

// Jordan block sizes of a nilpotent matrix, read off from rank(x^k).
partitions::Partition jordan_type(const Matrix& x);

// Nilpotent of the given Jordan type in an adapted basis, together with the
// invariant form in that basis (empty matrix for gl/sl). Every basis vector
// pairs nontrivially with exactly one basis vector, so the form is monomial.
struct AdaptedNilpotent {
    Matrix e;
    Matrix form;
};
AdaptedNilpotent adapted_nilpotent(Family family, const partitions::Partition& lambda);

// T with T^T F' T = split_form(family, n) for a monomial form F' whose
// self-paired entries are +-1 (symmetric case) and balanced enough to be split
// over Q. Throws std::invalid_argument otherwise.
Matrix split_congruence(const Matrix& monomial_form, Family family);

LieElement nilpotent_from_partition(const AlgebraPtr& algebra, const partitions::Partition& lambda);

}  // namespace quatgrad::lie
