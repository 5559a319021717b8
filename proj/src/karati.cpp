#include "clsforge/karati.hpp"

#include "clsforge/errors.hpp"

namespace clsforge::karati {

namespace {

// g1^h_i * R_i * Y_KGC, the recurring base of both sides of the scheme.
GroupElement key_base(const Params& params, const Scalar& h, const GroupElement& big_r) {
    return group_mul(group_mul(group_exp(params.suite.g1(), h), big_r), params.y_kgc);
}

}  // namespace

std::pair<Params, MasterSecret> setup(const PairingSuite& suite, RandomSource& rng) {
    Scalar y = random_nonzero_scalar(rng, suite);
    GroupElement g2 = group_exp(pairing(suite.g1(), suite.g1()), y);
    GroupElement y_kgc = group_exp(suite.g1(), y);
    return {Params{suite, g2, y_kgc}, MasterSecret{y}};
}

PartialKey extract_partial_key(const Params& params, const MasterSecret& msk,
                               std::string_view id, RandomSource& rng) {
    const PairingSuite& suite = params.suite;
    Scalar h = hash_to_scalar(suite, HashTag::H, id);
    for (;;) {
        Scalar r = random_nonzero_scalar(rng, suite);
        Scalar denom = scalar_add(scalar_add(h, r), msk.y);
        if (denom.is_zero()) {
            continue;  // exponent y h / (h + r + y) undefined; redraw r
        }
        Scalar e = scalar_mul(scalar_mul(msk.y, h), scalar_inverse(denom));
        return PartialKey{group_exp(suite.g1(), e), group_exp(suite.g1(), r)};
    }
}

bool verify_partial_key(const Params& params, std::string_view id, const PartialKey& pk) {
    const PairingSuite& suite = params.suite;
    if (!suite.same_suite(pk.y_i) || !suite.same_suite(pk.big_r)) {
        throw GroupMismatch("partial key from a different suite");
    }
    Scalar h = hash_to_scalar(suite, HashTag::H, id);
    GroupElement lhs = group_exp(pairing(suite.g1(), params.y_kgc), h);
    GroupElement rhs = pairing(pk.y_i, key_base(params, h, pk.big_r));
    return lhs == rhs;
}

PrivateKey set_private_key(const Params& params, const PartialKey& partial, RandomSource& rng) {
    Scalar x = random_nonzero_scalar(rng, params.suite);
    Scalar c = random_nonzero_scalar(rng, params.suite);
    return PrivateKey{c, x, partial.big_r};
}

PublicKey set_public_key(const Params& params, const PartialKey& partial, const PrivateKey& sk) {
    return PublicKey{group_exp(partial.y_i, scalar_inverse(sk.x)), group_exp(params.g2, sk.c)};
}

Scalar message_scalar(const Params& params, std::string_view message) {
    return hash_to_scalar(params.suite, HashTag::MSG, message);
}

Signature sign(const Params& params, std::string_view id, const PrivateKey& sk,
               std::string_view message, RandomSource& rng) {
    return sign_scalar(params, id, sk, message_scalar(params, message), rng);
}

Signature sign_scalar(const Params& params, std::string_view id, const PrivateKey& sk,
                      const Scalar& m_bar, RandomSource& rng) {
    const PairingSuite& suite = params.suite;
    if (m_bar.is_zero()) {
        throw ZeroInverse("message scalar must be nonzero");
    }
    Scalar h = hash_to_scalar(suite, HashTag::H, id);
    Scalar t = random_nonzero_scalar(rng, suite);
    // sigma2 exponent (c/m - t) x may legitimately vanish; sigma2 is
    // the identity then and verification still holds.
    Scalar e = scalar_mul(scalar_sub(scalar_mul(sk.c, scalar_inverse(m_bar)), t), sk.x);
    GroupElement sigma1 = group_exp(params.g2, t);
    GroupElement sigma2 = group_exp(key_base(params, h, sk.big_r), e);
    return Signature{sigma1, sigma2};
}

bool verify(const Params& params, std::string_view id, const PublicKey& pk,
            std::string_view message, const Signature& sig) {
    return verify_scalar(params, id, pk, message_scalar(params, message), sig);
}

bool verify_scalar(const Params& params, std::string_view id, const PublicKey& pk,
                   const Scalar& m_bar, const Signature& sig) {
    const PairingSuite& suite = params.suite;
    if (!suite.same_suite(pk.y1) || !suite.same_suite(pk.y2) || !suite.same_suite(sig.sigma1) ||
        !suite.same_suite(sig.sigma2)) {
        throw GroupMismatch("key or signature from a different suite");
    }
    if (m_bar.is_zero()) {
        throw ZeroInverse("message scalar must be nonzero");
    }
    Scalar h = hash_to_scalar(suite, HashTag::H, id);
    GroupElement ratio = group_mul(group_exp(pk.y2, scalar_inverse(m_bar)), group_inverse(sig.sigma1));
    GroupElement lhs = group_exp(ratio, h);
    GroupElement rhs = pairing(pk.y1, sig.sigma2);
    return lhs == rhs;
}

}  // namespace clsforge::karati
