#pragma once

#include "quatgrad/partitions/partition.hpp"

#include <string>
#include <vector>

namespace quatgrad::partitions {

// Centralizer dimensions of a nilpotent element of the given Jordan type.
long dim_cent_gl(const Partition& lambda);
long dim_cent_sl(const Partition& lambda);
long dim_cent_sp(const Partition& lambda);  // needs admissible_sp
long dim_cent_so(const Partition& lambda);  // needs admissible_so

// Symmetric pairs (g, g0) with a nilpotent e in g0. The first four have
// closed formulas; the last three are only handled by the matrix oracle.
enum class PairTag { sl_so, sp_gl, so_gl, sl_sl, sl_sp, sp_sp, so_so };

std::string pair_name(PairTag tag);  // "sl-so", ...
PairTag parse_pair(const std::string& name);
bool has_closed_formula(PairTag tag);
bool takes_two_partitions(PairTag tag);
const std::vector<PairTag>& all_pairs();

// Nilpotent data for a pair. For sl_so the partition lives in so_n inside sl_n;
// for sp_gl / so_gl it is the Jordan type in gl_n (doubled inside sp_2n / so_2n);
// two-partition pairs use (lambda; mu) for the two blocks of g0.
struct NilpotentDatum {
    Partition lambda;
    Partition mu;  // empty for one-partition pairs

    bool is_zero() const;
    std::string to_string() const;
    friend bool operator==(const NilpotentDatum&, const NilpotentDatum&) = default;
};

struct GradedDims {
    long g0 = 0;    // dim g0^e
    long g1 = 0;    // dim g1^e
    long rank = 0;  // rk g
    long defect() const { return g0 + rank - g1; }
};

// Validates admissibility of the datum for the pair; throws std::invalid_argument.
void check_datum(PairTag tag, const NilpotentDatum& d);

// Ambient matrix size of g for the datum.
int ambient_size(PairTag tag, const NilpotentDatum& d);

// Closed-formula graded centralizer dims (closed-formula pairs only).
GradedDims formula_dims(PairTag tag, const NilpotentDatum& d);

// dim g0^e + rk g - dim g1^e from the closed formulas.
long defect(PairTag tag, const NilpotentDatum& d);

// The combinatorial function of the (sl_{n+m}, s(gl_n + gl_m)) case.
long F(const Partition& lambda, const Partition& mu);

// F(lambda'; mu') + max(l1, m1) + sum_{i>=2}(l_i - min(l_i, m1)) + sum_{j>=2}(m_j - min(l1, m_j)),
// where primes drop the first part; needs both partitions of length >= 2.
long F_recursion_value(const Partition& lambda, const Partition& mu);

// All admissible nonzero data with ambient bound as used by sweep(); in
// lexicographic order. For sl_sl this also includes the zero datum for each
// n + m >= 3, and the bound is on n + m.
std::vector<NilpotentDatum> enumerate_data(PairTag tag, int bound);

}  // namespace quatgrad::partitions
