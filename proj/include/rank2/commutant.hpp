#pragma once

// Bounded-degree centralizer kernels: the canonical kernel basis of the
// linear map g |-> [f, g] on the free algebra, or g |-> (J_{x_i,x_j}(f, g))
// stacked over all i < j on the polynomial ring, with g ranging over
// polynomials of degree <= bound.
//
// The constraint matrix is assembled sparsely over the coordinate words that
// actually occur (absent rows are identically zero and impose nothing). Over
// Q the elimination runs modulo word-size primes with CRT and rational
// reconstruction; every candidate basis vector is then verified exactly by
// recomputing its commutator / Jacobians, and the verified count equals the
// modular kernel dimension, which certifies the exact dimension (rank can
// only drop under reduction mod p). Over GF(p) the elimination runs directly
// in the session field. The result is the same canonical free-column basis
// linalg::kernel_basis would produce on the dense matrix.

#include <cstdint>
#include <vector>

#include "rank2/cpoly.hpp"
#include "rank2/ncpoly.hpp"
#include "rank2/scalar.hpp"

namespace rank2 {

struct CommutantBasis {
    // Coordinates in the coefficient_vector basis of degree <= bound,
    // one vector per free column, free columns ascending.
    std::vector<std::vector<Scalar>> vectors;
    std::vector<std::size_t> free_cols;
    std::size_t dimension() const noexcept { return vectors.size(); }
};

// f nonconstant. Kernel of g |-> [f, g] restricted to degree <= degree_bound.
CommutantBasis commutant_basis(const NcPoly& f, std::size_t degree_bound);

// f nonconstant, characteristic-zero checks are the caller's business;
// kernel of g |-> (J_{x_i,x_j}(f, g))_{i<j} restricted to total degree <= bound.
CommutantBasis commutant_basis(const CPoly& f, std::size_t degree_bound);

}  // namespace rank2
