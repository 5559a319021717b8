#ifndef CLSFORGE_KUMAR_HPP_
#define CLSFORGE_KUMAR_HPP_

#include <string>
#include <string_view>
#include <utility>

#include "clsforge/group.hpp"
#include "clsforge/rng.hpp"

// Kumar et al.'s certificateless signature scheme (additive notation in
// the source; the group operation here is group_mul regardless).  A
// signature is bound to opaque caller-supplied state information Delta
// through W = H2(Delta).
namespace clsforge::kumar {

struct Params {
    PairingSuite suite;
    GroupElement p;      // generator P
    GroupElement p_pub;  // alpha * P
};

struct MasterSecret {
    Scalar alpha;
};

struct PartialKey {
    GroupElement d;  // alpha * H1(ID)
};

struct PrivateKey {
    Scalar x;
    GroupElement d;
};

struct PublicKey {
    GroupElement y;  // x * P
};

struct Signature {
    GroupElement big_r;  // r * P
    GroupElement v;
    std::string delta;  // state information carried alongside (R, V)
};

std::pair<Params, MasterSecret> setup(const PairingSuite& suite, RandomSource& rng);

// Deterministic: D_i = alpha * H1(ID).
PartialKey extract_partial_key(const Params& params, const MasterSecret& msk, std::string_view id);

// Pairing-based genuineness predicate e(D_i, P) == e(H1(ID), P_pub).
// Library addition for testing; the scheme itself never checks it and
// CLS-Verify below stays faithful to the published algorithm.
bool check_partial_key(const Params& params, std::string_view id, const PartialKey& pk);

PrivateKey set_private_key(const Params& params, const PartialKey& partial, RandomSource& rng);
PublicKey set_public_key(const Params& params, const PrivateKey& sk);

// Length-prefixed serialization of the tuple H3 is fed: (m, ID, Y_S, R).
std::string h3_input(std::string_view message, std::string_view id, const PublicKey& pk,
                     const GroupElement& big_r);

// R = r P, W = H2(Delta), h = H3(m, ID, Y_S, R), V = D + r W + h x P_pub.
Signature sign(const Params& params, std::string_view id, const PublicKey& pk,
               const PrivateKey& sk, std::string_view delta, std::string_view message,
               RandomSource& rng);

// VALID iff e(V, P) == e(Q_ID + h Y_S, P_pub) * e(R, W).
bool verify(const Params& params, std::string_view id, const PublicKey& pk,
            std::string_view delta, std::string_view message, const Signature& sig);

}  // namespace clsforge::kumar

#endif  // CLSFORGE_KUMAR_HPP_
