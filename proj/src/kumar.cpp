#include "clsforge/kumar.hpp"

#include "clsforge/encoding.hpp"
#include "clsforge/errors.hpp"

namespace clsforge::kumar {

namespace {

void append_field(std::string& out, std::string_view field) {
    uint32_t n = static_cast<uint32_t>(field.size());
    for (int shift = 24; shift >= 0; shift -= 8) {
        out.push_back(static_cast<char>((n >> shift) & 0xFF));
    }
    out.append(field);
}

}  // namespace

std::pair<Params, MasterSecret> setup(const PairingSuite& suite, RandomSource& rng) {
    Scalar alpha = random_nonzero_scalar(rng, suite);
    GroupElement p = suite.g1();
    return {Params{suite, p, group_exp(p, alpha)}, MasterSecret{alpha}};
}

PartialKey extract_partial_key(const Params& params, const MasterSecret& msk, std::string_view id) {
    GroupElement q_id = hash_to_group(params.suite, HashTag::H1, id);
    return PartialKey{group_exp(q_id, msk.alpha)};
}

bool check_partial_key(const Params& params, std::string_view id, const PartialKey& pk) {
    GroupElement q_id = hash_to_group(params.suite, HashTag::H1, id);
    return pairing(pk.d, params.p) == pairing(q_id, params.p_pub);
}

PrivateKey set_private_key(const Params& params, const PartialKey& partial, RandomSource& rng) {
    return PrivateKey{random_nonzero_scalar(rng, params.suite), partial.d};
}

PublicKey set_public_key(const Params& params, const PrivateKey& sk) {
    return PublicKey{group_exp(params.p, sk.x)};
}

std::string h3_input(std::string_view message, std::string_view id, const PublicKey& pk,
                     const GroupElement& big_r) {
    std::string out;
    append_field(out, message);
    append_field(out, id);
    append_field(out, serialize_element(pk.y));
    append_field(out, serialize_element(big_r));
    return out;
}

Signature sign(const Params& params, std::string_view id, const PublicKey& pk,
               const PrivateKey& sk, std::string_view delta, std::string_view message,
               RandomSource& rng) {
    const PairingSuite& suite = params.suite;
    Scalar r = random_nonzero_scalar(rng, suite);
    GroupElement big_r = group_exp(params.p, r);
    GroupElement w = hash_to_group(suite, HashTag::H2, delta);
    Scalar h = hash_to_scalar(suite, HashTag::H3, h3_input(message, id, pk, big_r));
    GroupElement v = group_mul(group_mul(sk.d, group_exp(w, r)),
                               group_exp(params.p_pub, scalar_mul(h, sk.x)));
    return Signature{big_r, v, std::string(delta)};
}

bool verify(const Params& params, std::string_view id, const PublicKey& pk,
            std::string_view delta, std::string_view message, const Signature& sig) {
    const PairingSuite& suite = params.suite;
    if (!suite.same_suite(sig.big_r) || !suite.same_suite(sig.v) || !suite.same_suite(pk.y)) {
        throw GroupMismatch("key or signature from a different suite");
    }
    GroupElement q_id = hash_to_group(suite, HashTag::H1, id);
    GroupElement w = hash_to_group(suite, HashTag::H2, delta);
    Scalar h = hash_to_scalar(suite, HashTag::H3, h3_input(message, id, pk, sig.big_r));
    GroupElement lhs = pairing(sig.v, params.p);
    GroupElement rhs = group_mul(pairing(group_mul(q_id, group_exp(pk.y, h)), params.p_pub),
                                 pairing(sig.big_r, w));
    return lhs == rhs;
}

}  // namespace clsforge::kumar
