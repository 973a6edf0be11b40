#pragma once

#include "quatgrad/linalg/matrix.hpp"
#include "quatgrad/linalg/subspace.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace quatgrad::jordan {

enum class JordanFamily { full, sym, skew, spin, short_grading };

std::string family_name(JordanFamily f);
JordanFamily parse_jordan_family(const std::string& s);

// A finite-dimensional commutative algebra given by structure constants:
// table[i][j] holds the coordinates of b_i o b_j.
class JordanAlgebraModel {
public:
    JordanAlgebraModel(JordanFamily family, int n, std::vector<std::string> labels,
                       std::vector<std::vector<Vector>> table);

    JordanFamily family() const { return family_; }
    int n() const { return n_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    Vector product(const Vector& x, const Vector& y) const;
    Vector basis_vector(std::size_t i) const;
    // Matrix of L_x : y -> x o y.
    Matrix left_multiplication(const Vector& x) const;
    std::optional<Vector> unit() const;

private:
    JordanFamily family_;
    int n_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vector>> table_;
};

// full(n): n x n matrices, A o B = (AB + BA)/2.  sym(n): symmetric n x n.
// skew(n): skew 2n x 2n matrices with A o B = (AJB + BJA)/2, J = [[0,I],[-I,0]].
// spin(n): k + k^n with (a,u) o (b,v) = (ab + <u,v>, av + bu).
// Each model is validated before it is returned.
JordanAlgebraModel make_jordan(JordanFamily family, int n);

// Expected dimension of make_jordan(family, n).
std::size_t jordan_dim(JordanFamily family, int n);

struct JordanValidation {
    bool commutative = false;
    bool identity_on_basis = false;  // all triples; only attempted when dim <= 10
    bool basis_checked = false;
    std::size_t random_samples = 0;
    bool identity_on_samples = false;
    bool ok() const { return commutative && identity_on_samples && (!basis_checked || identity_on_basis); }
};

// (x o y) o (x o x) = x o (y o (x o x)).
bool jordan_identity(const JordanAlgebraModel& J, const Vector& x, const Vector& y);
JordanValidation validate(const JordanAlgebraModel& J, std::mt19937_64& rng, std::size_t samples = 20);

// ker L_x.
Subspace jordan_centralizer(const JordanAlgebraModel& J, const Vector& x);

// Coordinates of an n x n matrix in full(n) (row-major entries).
Vector full_coordinates(const Matrix& B);

}  // namespace quatgrad::jordan
