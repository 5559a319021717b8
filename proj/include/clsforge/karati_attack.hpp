#ifndef CLSFORGE_KARATI_ATTACK_HPP_
#define CLSFORGE_KARATI_ATTACK_HPP_

#include <string>
#include <string_view>
#include <utility>

#include "clsforge/karati.hpp"

// Partial-key mauling against Karati et al.'s scheme: one valid partial
// private key for any identity converts into a valid partial private
// key for any other identity, after which the holder runs the honest
// key-derivation and signing algorithms in the victim's name.  Only
// public parameters and the one captured key are consumed; the master
// secret never enters.
namespace clsforge::karati {

struct ForgeryBundle {
    std::string target_id;
    PartialKey partial;
    PrivateKey sk;
    PublicKey pk;
    std::string message;
    Signature sig;
    Scalar alpha;  // h_target / h_source used in the mauling
};

// Returns the forged partial key for target_id together with alpha.
// Throws InvalidInputKey if (source_id, source_key) fails its own
// genuineness relation.
std::pair<PartialKey, Scalar> forge_partial_key(const Params& params, std::string_view source_id,
                                                const PartialKey& source_key,
                                                std::string_view target_id);

// Full pipeline: maul the partial key, derive a key pair for the
// target, sign the chosen message.
ForgeryBundle forge_signature(const Params& params, std::string_view source_id,
                              const PartialKey& source_key, std::string_view target_id,
                              std::string_view message, RandomSource& rng);

}  // namespace clsforge::karati

#endif  // CLSFORGE_KARATI_ATTACK_HPP_
