#pragma once

#include "quatgrad/gradings/grading.hpp"
#include "quatgrad/jordan/model.hpp"
#include "quatgrad/lie/algebra.hpp"

#include <string>
#include <vector>

namespace quatgrad::jordan {

// g = g(-1) + g(0) + g(1) with [h, x] = 2i x on g(i), e in the dense orbit of
// g(1) and f in g(-1) with [e, f] = h.
struct ShortGrading {
    std::string id;
    lie::AlgebraPtr algebra;
    Matrix h, e, f;
    Subspace minus, zero, plus;
    Subspace k;  // g(0)^e
    Subspace m;  // [g(-1), e]
    // Commuting summands of e; e_i + sigma2(e_i) span a rational CSS of the triad.
    std::vector<Matrix> frame;
    JordanFamily family;
    int family_n;  // make_jordan(family, family_n) has the dimension of g(-1)
};

// Solves for f and validates the grading; throws when f does not exist.
ShortGrading make_short_grading(lie::AlgebraPtr g, const Matrix& h, const Matrix& e, std::vector<Matrix> frame,
                                std::string id, JordanFamily family, int family_n);

// sl<2n>-full, sp<2n>-sym, so<4n>-skew, so<N>-spin.
ShortGrading short_grading(const std::string& id);
std::vector<std::string> short_grading_ids();

struct ShortGradingChecks {
    bool sl2_triple = false;       // [h,e]=2e, [h,f]=-2f, [e,f]=h
    bool abelian_radicals = false;  // [g(1),g(1)] = [g(-1),g(-1)] = 0
    bool minus_e_trivial = false;   // g(-1)^e = 0
    bool ge_split = false;          // g^e = g(0)^e + g(1)
    bool e_structure = false;       // e: g(-1) -> m -> g(1) isomorphisms, e kills k
    bool ok() const { return sl2_triple && abelian_radicals && minus_e_trivial && ge_split && e_structure; }
};
ShortGradingChecks check_short_grading(const ShortGrading& sg);

// g(-1) with x o y = [x, [e, y]], in coordinates of the echelon basis of g(-1).
JordanAlgebraModel from_short_grading(const ShortGrading& sg);
Matrix minus_element(const ShortGrading& sg, const Vector& coords);
Vector minus_coordinates(const ShortGrading& sg, const Matrix& x);

struct JordanTriad {
    ShortGrading sg;
    gradings::QuaternionicDecomposition qd;  // (sigma1, sigma2)
};

// sigma1 fixes g(0) and negates g(+-1); sigma2 is 1 on k, -1 on m and swaps
// [x,e] with -[x,f] for x in m.
JordanTriad build_jordan_triad(const ShortGrading& sg);

struct TriadChecks {
    bool pieces_match = false;  // g00 = k, g01 = m, g10 = [m,e-f], g11 = [m,e+f]
    bool h_in_01 = false;
    bool e_plus_f_in_10 = false;
    bool e_minus_f_in_11 = false;
    bool sl2_distinct = false;  // sigma1, sigma2 differ on span{e,h,f}
    bool ok() const { return pieces_match && h_in_01 && e_plus_f_in_10 && e_minus_f_in_11 && sl2_distinct; }
};
TriadChecks check_triad(const JordanTriad& t);

// [[[x,e],e-f],[[y,e],e+f]] == c [[[x,e],y],e] for x, y in g(-1). Expanding
// with [[x,e],f] = 2x gives two equal terms, so the constant is c = 4.
bool tkk_identity_check(const ShortGrading& sg, const Matrix& x, const Matrix& y, long c = 4);

struct TransportedPair {
    Matrix first;   // [[x,e], e-f]
    Matrix second;  // [[y,e], e+f]
    bool commute;
};
TransportedPair commuting_pair_transport(const ShortGrading& sg, const Matrix& x, const Matrix& y);

}  // namespace quatgrad::jordan
