#pragma once

// The constructive rank-two cancellation pipeline: from two commuting (resp.
// Jacobian-dependent) generators v, w and a designated generator z, produce
// the single z-free generator u0 with verified decompositions of v|_{z=0}
// and w|_{z=0} over it.

#include "rank2/centralizer.hpp"
#include "rank2/cpoly.hpp"
#include "rank2/ncpoly.hpp"

namespace rank2 {

struct FreeCancellationResult {
    NcPoly u;   // centralizer root with v, w in K[u]
    NcPoly u0;  // z-free part of u
    NcPoly u1;  // terms of u containing z
    Decomposition h_v;  // v|_{z=0} = h_v(u0)
    Decomposition h_w;  // w|_{z=0} = h_w(u0)
    bool verified;
};

struct CommCancellationResult {
    CPoly u;
    CPoly u0;
    CPoly u1;
    Decomposition h_v;
    Decomposition h_w;
    bool verified;
};

FreeCancellationResult cancel_extract_free(const NcPoly& v, const NcPoly& w, std::size_t z_index);
CommCancellationResult cancel_extract_comm(const CPoly& v, const CPoly& w, std::size_t z_index);

}  // namespace rank2
