#pragma once

#include "quatgrad/partitions/calculus.hpp"

#include <string>
#include <vector>

namespace quatgrad::partitions {

// Graded centralizer dims computed from explicit matrices: the nilpotent is
// embedded in g0, and dim g1^e = dim g^e - dim g0^e since z(e) is stable
// under the involution.
GradedDims oracle_dims(PairTag tag, const NilpotentDatum& d);

struct SweepViolation {
    NilpotentDatum datum;
    std::string reason;
};

struct SweepReport {
    std::string pair;
    int bound = 0;
    long min_defect = 0;
    std::vector<NilpotentDatum> argmin;
    std::vector<SweepViolation> violations;
    long instances_checked = 0;
    std::string method;  // "formula" or "matrix-oracle"
};

// Every admissible datum up to the bound (see enumerate_data) is checked for
// defect >= 2 and even; sl-sl additionally checks F > 0 and the recursion
// identity, so-gl checks dim g0^e >= dim g1^e.
SweepReport sweep(PairTag tag, int bound);

}  // namespace quatgrad::partitions
