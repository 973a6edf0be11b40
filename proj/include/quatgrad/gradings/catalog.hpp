#pragma once

#include "quatgrad/gradings/grading.hpp"

#include <string>
#include <vector>

namespace quatgrad::gradings {

// Stable string ids:
//   sl<n>-so<n>        x -> -x^T
//   sp<2n>-gl<n>       Ad(F), F the split symplectic form
//   sl<2n>-sp<2n>      x -> -F^-1 x^T F
//   sl<2n>-herm        Ad(diag(I_n, -I_n))
//   so<N>-so<N-1>      Ad of a reflection
//   sl2-diag           Ad(diag(1,-1))
struct CatalogGrading {
    std::string id;
    std::string description;
    Z2Grading grading;
    // Basis of a CSS of g1 whose ad-spectrum is rational.
    std::vector<Matrix> rational_css;
};

CatalogGrading catalog_grading(const std::string& id);
std::vector<std::string> grading_ids();

enum class DecompositionKind { chain, dyad, triad };
std::string kind_name(DecompositionKind k);

// Stable string ids:
//   so<N>-chain              reflections in two orthogonal anisotropic vectors
//   sl<2n>-sp-dyad[-m<k>]    -F^-1 x^T F and its twist by Ad(D), g00 = sp_2k + sp_2n-2k
//   sl<n>-maxrank-dyad       -x^T and -D x^T D, D = diag(1,..,1,-1)
//   <short grading>-triad    Jordan triad, relabelled by (sigma1, sigma1 sigma2)
//                            so that the frame CSS sits in g11
struct CatalogDecomposition {
    std::string id;
    std::string description;
    DecompositionKind kind;
    QuaternionicDecomposition qd;
    std::vector<Matrix> rational_css;  // a little CSS of css_piece with rational spectrum
    PieceIndex css_piece;
};

CatalogDecomposition catalog_decomposition(const std::string& id);
std::vector<std::string> decomposition_ids();

}  // namespace quatgrad::gradings
