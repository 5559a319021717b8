#include "clsforge/kumar_attack.hpp"

#include "clsforge/errors.hpp"

namespace clsforge::kumar {

DeltaBoundKey recover_delta_key(const Params& params, std::string_view id, const PublicKey& pk,
                                const Scalar& x, std::string_view message,
                                const Signature& observed) {
    if (!verify(params, id, pk, observed.delta, message, observed)) {
        throw InvalidObservation("observed signature does not verify");
    }
    const PairingSuite& suite = params.suite;
    Scalar h = hash_to_scalar(suite, HashTag::H3, h3_input(message, id, pk, observed.big_r));
    GroupElement masked = group_exp(params.p_pub, scalar_mul(x, h));
    GroupElement d_delta = group_mul(observed.v, group_inverse(masked));
    return DeltaBoundKey{d_delta, observed.delta, observed.big_r};
}

Signature forge_type1(const Params& params, std::string_view id, const PublicKey& pk,
                      const DeltaBoundKey& dbk, const Scalar& x, std::string_view message_new) {
    const PairingSuite& suite = params.suite;
    Scalar h_new = hash_to_scalar(suite, HashTag::H3, h3_input(message_new, id, pk, dbk.big_r));
    GroupElement v_new =
        group_mul(dbk.d_delta, group_exp(params.p_pub, scalar_mul(h_new, x)));
    return Signature{dbk.big_r, v_new, dbk.delta};
}

Signature forge_type2(const Params& params, const MasterSecret& msk, std::string_view id,
                      const PublicKey& pk, std::string_view delta, std::string_view message,
                      RandomSource& rng) {
    const PairingSuite& suite = params.suite;
    GroupElement d = group_exp(hash_to_group(suite, HashTag::H1, id), msk.alpha);
    Scalar r = random_nonzero_scalar(rng, suite);
    GroupElement big_r = group_exp(params.p, r);
    GroupElement w = hash_to_group(suite, HashTag::H2, delta);
    Scalar h = hash_to_scalar(suite, HashTag::H3, h3_input(message, id, pk, big_r));
    // h alpha Y_S equals the honest signer's h x P_pub: alpha stands in
    // for the secret value the KGC never learns.
    GroupElement v = group_mul(group_mul(d, group_exp(w, r)),
                               group_exp(pk.y, scalar_mul(h, msk.alpha)));
    return Signature{big_r, v, std::string(delta)};
}

}  // namespace clsforge::kumar
