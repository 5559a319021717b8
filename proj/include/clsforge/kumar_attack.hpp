#ifndef CLSFORGE_KUMAR_ATTACK_HPP_
#define CLSFORGE_KUMAR_ATTACK_HPP_

#include <string_view>

#include "clsforge/kumar.hpp"

// The two forgeries against Kumar et al.'s scheme.
//
// Type 1: a signature's randomness commitment R and state info Delta
// are reusable.  Knowing the signer's secret value x_S, one observed
// (m, sigma, Delta) yields D_{S,Delta} = V - x_S h P_pub, from which
// signatures on arbitrary new messages under the same Delta follow.
//
// Type 2: the KGC's alpha satisfies h alpha Y_S = h x_S P_pub, so the
// KGC signs for any user from scratch without ever seeing x_S.
namespace clsforge::kumar {

// D_{S,Delta} = D_S + r W for the unknown r committed in R; valid for
// forging any message under the same Delta.
struct DeltaBoundKey {
    GroupElement d_delta;
    std::string delta;
    GroupElement big_r;  // reused commitment
};

// Throws InvalidObservation if the observed signature does not verify
// for (id, pk, sig.delta, message).
DeltaBoundKey recover_delta_key(const Params& params, std::string_view id, const PublicKey& pk,
                                const Scalar& x, std::string_view message, const Signature& observed);

// (R, V') with V' = D_{S,Delta} + h' x P_pub, h' bound to message_new.
Signature forge_type1(const Params& params, std::string_view id, const PublicKey& pk,
                      const DeltaBoundKey& dbk, const Scalar& x, std::string_view message_new);

// KGC forgery on any (message, delta) for the target's published key.
// Note the input surface: the user's secret value x never appears.
Signature forge_type2(const Params& params, const MasterSecret& msk, std::string_view id,
                      const PublicKey& pk, std::string_view delta, std::string_view message,
                      RandomSource& rng);

}  // namespace clsforge::kumar

#endif  // CLSFORGE_KUMAR_ATTACK_HPP_
