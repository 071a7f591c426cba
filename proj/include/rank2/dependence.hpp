#pragma once

// Algebraic-dependence verdicts: the commutator criterion in the free
// algebra (any characteristic), the Jacobian criterion in the polynomial
// ring (characteristic zero), and a brute-force annihilator oracle used to
// cross-validate both.

#include <optional>
#include <vector>

#include "rank2/cpoly.hpp"
#include "rank2/linalg.hpp"
#include "rank2/ncpoly.hpp"

namespace rank2 {

struct FreeDependenceVerdict {
    bool dependent;
    NcPoly witness;  // the commutator [f, g]
};

struct CommDependenceVerdict {
    bool dependent;
    std::vector<CPoly> witnesses;  // J_{x_i,x_j}(f,g) for all i < j, (i,j) ascending
};

// f, g dependent over K iff [f,g] = 0; valid over any field.
FreeDependenceVerdict dep_free(const NcPoly& f, const NcPoly& g);

// f, g dependent iff every J_{x_i,x_j}(f,g) vanishes; characteristic zero only.
CommDependenceVerdict dep_comm(const CPoly& f, const CPoly& g);

struct Annihilator {
    CPoly p;  // nonzero polynomial in fresh commuting variables (s, t) with p(f, g) = 0
    std::size_t s_bound;
    std::size_t t_bound;
};

// Searches for P(s,t) != 0 with s-degree <= a, t-degree <= b and P(f,g) = 0,
// via the kernel of the coefficient matrix of all products f^i g^j. Absence
// at these bounds does not prove independence. In the free case the inputs
// must commute (NonCommutingPair otherwise) so that the products are
// unambiguous.
std::optional<Annihilator> annihilator_oracle(const NcPoly& f, const NcPoly& g, std::size_t a,
                                              std::size_t b,
                                              std::size_t entry_cap = MatrixK::kDefaultEntryCap);
std::optional<Annihilator> annihilator_oracle(const CPoly& f, const CPoly& g, std::size_t a,
                                              std::size_t b,
                                              std::size_t entry_cap = MatrixK::kDefaultEntryCap);

// Evaluate an annihilator at (f, g): sum over terms of p of c * f^i g^j.
NcPoly annihilator_apply(const CPoly& p, const NcPoly& f, const NcPoly& g);
CPoly annihilator_apply(const CPoly& p, const CPoly& f, const CPoly& g);

}  // namespace rank2
