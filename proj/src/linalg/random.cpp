#include "quatgrad/linalg/random.hpp"

namespace quatgrad {

Vector random_vector(const Subspace& s, std::mt19937_64& rng, long range) {
    std::uniform_int_distribution<long> coef(-range, range);
    Vector c(s.dim());
    for (auto& x : c) x = coef(rng);
    if (s.dim() == 0) return Vector(s.ambient());
    return s.combine(c);
}

}  // namespace quatgrad
