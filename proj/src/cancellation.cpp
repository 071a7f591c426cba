#include "rank2/cancellation.hpp"

namespace rank2 {

namespace {

template <class P>
const P& pick_anchor(const P& v, const P& w) {
    if (v.is_constant() && w.is_constant())
        throw ConstantInput("at least one generator must be nonconstant");
    if (v.is_constant()) return w;
    if (w.is_constant()) return v;
    return *w.degree() > *v.degree() ? w : v;
}

}  // namespace

FreeCancellationResult cancel_extract_free(const NcPoly& v, const NcPoly& w, std::size_t z_index) {
    if (v.field() != w.field() || v.alphabet() != w.alphabet())
        throw AlgebraMismatch("v and w live in different free algebras");
    if (z_index >= v.alphabet().size())
        throw UnknownGenerator("designated generator is not in the alphabet");

    const NcPoly& anchor = pick_anchor(v, w);
    if (!commutator(v, w).is_zero())
        throw IndependentGenerators(
            "[v,w] != 0: the generators are algebraically independent and adjoining z would "
            "give a free algebra of rank three");

    NcPoly u = centralizer_root_free(anchor).u;
    auto dv = decompose(v, u);
    auto dw = decompose(w, u);
    if (!dv || !dw)
        throw NotInRootAlgebra("a generator fails to decompose over the centralizer root");

    ZSplit split = z_split(u, z_index);
    if (split.u0.is_constant())
        throw DegenerateU0("the z-free part of the root is constant; K[u0] collapses to K");

    NcPoly v0 = kill_generator(v, z_index);
    NcPoly w0 = kill_generator(w, z_index);
    auto hv = decompose(v0, split.u0);
    auto hw = decompose(w0, split.u0);
    if (!hv || !hw)
        throw InternalVerificationFailure("v|_{z=0} must decompose over u0 but does not");

    bool verified = evaluate_decomposition(*hv, split.u0) == v0 &&
                    evaluate_decomposition(*hw, split.u0) == w0;
    if (!verified) throw InternalVerificationFailure("decomposition re-evaluation mismatch");

    return FreeCancellationResult{std::move(u),   std::move(split.u0), std::move(split.u1),
                                  std::move(*hv), std::move(*hw),      true};
}

CommCancellationResult cancel_extract_comm(const CPoly& v, const CPoly& w, std::size_t z_index) {
    if (v.field() != w.field() || v.alphabet() != w.alphabet())
        throw AlgebraMismatch("v and w live in different polynomial rings");
    if (v.field().characteristic() != 0)
        throw CharacteristicNotZero("the commutative pipeline requires characteristic zero");
    if (z_index >= v.alphabet().size())
        throw UnknownGenerator("designated variable is not in the alphabet");

    const CPoly& anchor = pick_anchor(v, w);
    const std::size_t n = v.alphabet().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!jacobian_det(v, w, i, j).is_zero())
                throw TranscendenceDegreeTwo(
                    "some Jacobian of (v,w) is nonzero: the generators cannot span a rank-one "
                    "subalgebra");

    CPoly u = centralizer_root_comm(anchor).u;
    auto dv = decompose(v, u);
    auto dw = decompose(w, u);
    if (!dv || !dw)
        throw NotInRootAlgebra("a generator fails to decompose over the centralizer root");

    CZSplit split = z_split(u, z_index);
    if (split.u0.is_constant())
        throw DegenerateU0("the z-free part of the root is constant; K[u0] collapses to K");

    CPoly v0 = kill_variable(v, z_index);
    CPoly w0 = kill_variable(w, z_index);
    auto hv = decompose(v0, split.u0);
    auto hw = decompose(w0, split.u0);
    if (!hv || !hw)
        throw InternalVerificationFailure("v|_{z=0} must decompose over u0 but does not");

    bool verified = evaluate_decomposition(*hv, split.u0) == v0 &&
                    evaluate_decomposition(*hw, split.u0) == w0;
    if (!verified) throw InternalVerificationFailure("decomposition re-evaluation mismatch");

    return CommCancellationResult{std::move(u),   std::move(split.u0), std::move(split.u1),
                                  std::move(*hv), std::move(*hw),      true};
}

}  // namespace rank2
