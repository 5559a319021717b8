#include "clsforge/karati_attack.hpp"

#include "clsforge/errors.hpp"

namespace clsforge::karati {

std::pair<PartialKey, Scalar> forge_partial_key(const Params& params, std::string_view source_id,
                                                const PartialKey& source_key,
                                                std::string_view target_id) {
    if (!verify_partial_key(params, source_id, source_key)) {
        throw InvalidInputKey("source partial key fails its genuineness relation");
    }
    const PairingSuite& suite = params.suite;
    Scalar h_src = hash_to_scalar(suite, HashTag::H, source_id);
    Scalar h_tgt = hash_to_scalar(suite, HashTag::H, target_id);

    // alpha = h'/h; y' = y_S^alpha; R' = R_S / g1^((alpha-1) h).
    Scalar alpha = scalar_mul(h_tgt, scalar_inverse(h_src));
    GroupElement y_forged = group_exp(source_key.y_i, alpha);
    Scalar shift = scalar_mul(scalar_sub(alpha, suite.scalar(1)), h_src);
    GroupElement r_forged =
        group_mul(source_key.big_r, group_inverse(group_exp(suite.g1(), shift)));
    return {PartialKey{y_forged, r_forged}, alpha};
}

ForgeryBundle forge_signature(const Params& params, std::string_view source_id,
                              const PartialKey& source_key, std::string_view target_id,
                              std::string_view message, RandomSource& rng) {
    auto [partial, alpha] = forge_partial_key(params, source_id, source_key, target_id);
    // From here on the attacker just runs the scheme as the target.
    PrivateKey sk = set_private_key(params, partial, rng);
    PublicKey pk = set_public_key(params, partial, sk);
    Signature sig = sign(params, target_id, sk, message, rng);
    return ForgeryBundle{std::string(target_id), partial, sk, pk,
                         std::string(message),   sig,     alpha};
}

}  // namespace clsforge::karati
