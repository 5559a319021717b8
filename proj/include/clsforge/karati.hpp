#ifndef CLSFORGE_KARATI_HPP_
#define CLSFORGE_KARATI_HPP_

#include <string_view>
#include <utility>

#include "clsforge/group.hpp"
#include "clsforge/rng.hpp"

// Karati et al.'s pairing-based certificateless signature scheme
// (multiplicative notation).  The six algorithms are implemented
// faithfully; in particular CLS-Verify performs no partial-key
// genuineness check, which is what the partial-key mauling attack
// exploits.
namespace clsforge::karati {

struct Params {
    PairingSuite suite;
    GroupElement g2;     // e(g1,g1)^y in GT
    GroupElement y_kgc;  // g1^y
};

struct MasterSecret {
    Scalar y;
};

// D_i = (y_i, R_i) with y_i = g1^(y h_i / (h_i + r_i + y)), R_i = g1^r_i.
struct PartialKey {
    GroupElement y_i;
    GroupElement big_r;
};

struct PrivateKey {
    Scalar c;
    Scalar x;
    GroupElement big_r;
};

struct PublicKey {
    GroupElement y1;  // y_i^(1/x) in G1
    GroupElement y2;  // g2^c in GT
};

struct Signature {
    GroupElement sigma1;  // GT
    GroupElement sigma2;  // G1
};

std::pair<Params, MasterSecret> setup(const PairingSuite& suite, RandomSource& rng);

// KGC side.  Resamples r_i internally in the (probability 1/q) event
// that h_i + r_i + y vanishes mod q and the key exponent is undefined.
PartialKey extract_partial_key(const Params& params, const MasterSecret& msk,
                               std::string_view id, RandomSource& rng);

// The genuineness relation the user checks on receipt:
//   e(g1, Y_KGC)^h_i == e(y_i, g1^h_i * R_i * Y_KGC).
bool verify_partial_key(const Params& params, std::string_view id, const PartialKey& pk);

PrivateKey set_private_key(const Params& params, const PartialKey& partial, RandomSource& rng);

PublicKey set_public_key(const Params& params, const PartialKey& partial, const PrivateKey& sk);

// The scheme exponentiates by the message, so the message must live in
// Z*_q; m_bar = hash(MSG, m) guarantees that.  A raw numeric m_bar is
// also accepted through the _scalar entry points (it must be nonzero).
Scalar message_scalar(const Params& params, std::string_view message);

Signature sign(const Params& params, std::string_view id, const PrivateKey& sk,
               std::string_view message, RandomSource& rng);
Signature sign_scalar(const Params& params, std::string_view id, const PrivateKey& sk,
                      const Scalar& m_bar, RandomSource& rng);

// VALID iff (Y_S2^(1/m) / sigma1)^h_S == e(Y_S1, sigma2).
bool verify(const Params& params, std::string_view id, const PublicKey& pk,
            std::string_view message, const Signature& sig);
bool verify_scalar(const Params& params, std::string_view id, const PublicKey& pk,
                   const Scalar& m_bar, const Signature& sig);

}  // namespace clsforge::karati

#endif  // CLSFORGE_KARATI_HPP_
