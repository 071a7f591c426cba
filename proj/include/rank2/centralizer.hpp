#pragma once

// Centralizer roots: the canonical generator u with C(f) = K[u], obtained
// from the bounded-degree kernel of g |-> [f,g] (free algebra) or of the
// stacked Jacobians (polynomial ring, characteristic zero), plus univariate
// decomposition f = sum c_k u^k.

#include <optional>
#include <vector>

#include "rank2/cpoly.hpp"
#include "rank2/ncpoly.hpp"
#include "rank2/scalar.hpp"

namespace rank2 {

struct RootNormalization {
    bool monic_deglex = true;
    bool zero_constant_term = true;
};

// Coefficients [c_0, ..., c_m] witnessing f = sum c_k u^k; c_m != 0,
// empty for f = 0.
struct Decomposition {
    std::vector<Scalar> coefficients;

    bool operator==(const Decomposition& o) const { return coefficients == o.coefficients; }
};

struct FreeRootResult {
    NcPoly u;
    RootNormalization normalization;
    std::size_t kernel_dimension;
};

struct CommRootResult {
    CPoly u;
    RootNormalization normalization;
    std::size_t kernel_dimension;
};

// The minimal-positive-degree element of C(f) up to the affine ambiguity,
// normalized to deglex-monic with zero constant term. f must be nonconstant.
FreeRootResult centralizer_root_free(const NcPoly& f);
// Same over K[x_1..x_n]; requires characteristic zero.
CommRootResult centralizer_root_comm(const CPoly& f);

// Membership of f in K[u]: the coefficient list of h with f = h(u), or
// nullopt. u must be nonconstant (ConstantU).
std::optional<Decomposition> decompose(const NcPoly& f, const NcPoly& u);
std::optional<Decomposition> decompose(const CPoly& f, const CPoly& u);

NcPoly evaluate_decomposition(const Decomposition& h, const NcPoly& u);
CPoly evaluate_decomposition(const Decomposition& h, const CPoly& u);

}  // namespace rank2
