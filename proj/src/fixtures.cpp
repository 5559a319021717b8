#include "clsforge/fixtures.hpp"

#include "clsforge/encoding.hpp"
#include "clsforge/errors.hpp"
#include "clsforge/karati_attack.hpp"
#include "clsforge/kumar_attack.hpp"

namespace clsforge::fixtures {

namespace {

// random_nonzero_scalar maps a raw draw v to v % (q-1) + 1, so a
// SequenceSource fed (s - 1) yields exactly the scalar s.
SequenceSource draws_for(std::initializer_list<uint64_t> scalars) {
    std::vector<uint64_t> raw;
    for (uint64_t s : scalars) raw.push_back(s - 1);
    return SequenceSource(std::move(raw));
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(std::string("fixture self-check failed: ") + what);
}

}  // namespace

PairingSuite f1_suite() {
    PairingSuite suite(kFixtureOrder);
    suite.pin_hash(HashTag::H, "alice", 11);
    suite.pin_hash(HashTag::H, "bob", 22);
    suite.pin_hash(HashTag::MSG, "message-1", 9);
    return suite;
}

PairingSuite f2_suite() {
    PairingSuite suite(kFixtureOrder);
    suite.pin_hash(HashTag::H1, "alice", 13);
    suite.pin_hash(HashTag::H2, "delta-1", 9);
    // H3 pins are keyed on the exact tuple bytes fed to the hash.
    kumar::PublicKey pk{suite.element(Group::G1, 5)};
    GroupElement r4 = suite.element(Group::G1, 4);
    GroupElement r10 = suite.element(Group::G1, 10);
    suite.pin_hash(HashTag::H3, kumar::h3_input("message-1", "alice", pk, r4), 6);
    suite.pin_hash(HashTag::H3, kumar::h3_input("message-2", "alice", pk, r4), 2);
    suite.pin_hash(HashTag::H3, kumar::h3_input("message-1", "alice", pk, r10), 8);
    return suite;
}

KaratiF1 make_f1() {
    PairingSuite suite = f1_suite();
    SequenceSource rng = draws_for({7, 3, 2, 5, 4});  // y, r_S, x_S, c_S, t
    auto [params, msk] = karati::setup(suite, rng);
    karati::PartialKey partial = karati::extract_partial_key(params, msk, "alice", rng);
    karati::PrivateKey sk = karati::set_private_key(params, partial, rng);
    karati::PublicKey pk = karati::set_public_key(params, partial, sk);
    karati::Signature sig = karati::sign(params, "alice", sk, "message-1", rng);
    return KaratiF1{suite, params, msk,        partial, sk, pk, sig,
                    "alice", "bob", "message-1"};
}

KumarF2 make_f2() {
    PairingSuite suite = f2_suite();
    SequenceSource rng = draws_for({7, 5, 4});  // alpha, x_S, r
    auto [params, msk] = kumar::setup(suite, rng);
    kumar::PartialKey partial = kumar::extract_partial_key(params, msk, "alice");
    kumar::PrivateKey sk = kumar::set_private_key(params, partial, rng);
    kumar::PublicKey pk = kumar::set_public_key(params, sk);
    kumar::Signature sig = kumar::sign(params, "alice", pk, sk, "delta-1", "message-1", rng);
    return KumarF2{suite,     params,      msk,         partial, sk, pk, sig,
                   "alice",   "delta-1",   "message-1", "message-2"};
}

nlohmann::json f1_vector() {
    KaratiF1 f = make_f1();
    const PairingSuite& suite = f.suite;
    Scalar h_signer = hash_to_scalar(suite, HashTag::H, f.signer);
    Scalar h_target = hash_to_scalar(suite, HashTag::H, f.target);
    Scalar m_bar = karati::message_scalar(f.params, f.message);

    auto eq1_sides = [&](std::string_view id, const karati::PartialKey& pk) {
        Scalar h = hash_to_scalar(suite, HashTag::H, id);
        GroupElement lhs = group_exp(pairing(suite.g1(), f.params.y_kgc), h);
        GroupElement base =
            group_mul(group_mul(group_exp(suite.g1(), h), pk.big_r), f.params.y_kgc);
        GroupElement rhs = pairing(pk.y_i, base);
        return std::pair{lhs, rhs};
    };

    auto [eq1_lhs, eq1_rhs] = eq1_sides(f.signer, f.partial);
    require(eq1_lhs == eq1_rhs, "F1 partial key relation");

    GroupElement ver_lhs = group_exp(
        group_mul(group_exp(f.pk.y2, scalar_inverse(m_bar)), group_inverse(f.sig.sigma1)),
        h_signer);
    GroupElement ver_rhs = pairing(f.pk.y1, f.sig.sigma2);
    require(ver_lhs == ver_rhs, "F1 verification sides");
    require(karati::verify(f.params, f.signer, f.pk, f.message, f.sig), "F1 verify");

    // Theorem-1 walk: maul alice's partial key into one for bob, then
    // derive keys (x=3, c=8) and sign the same message with t=6.
    SequenceSource forge_rng = draws_for({3, 8, 6});
    karati::ForgeryBundle bundle = karati::forge_signature(
        f.params, f.signer, f.partial, f.target, f.message, forge_rng);
    auto [aeq_lhs, aeq_rhs] = eq1_sides(f.target, bundle.partial);
    require(aeq_lhs == aeq_rhs, "F1 forged partial key relation");
    require(karati::verify(f.params, f.target, bundle.pk, f.message, bundle.sig),
            "F1 forged verify");

    nlohmann::json vec{
        {"fixture", "F1"},
        {"scheme", "karati"},
        {"q", suite.order()},
        {"suite", suite.id()},
        {"digest", suite.digest_name()},
        {"identities", {{"signer", f.signer}, {"target", f.target}}},
        {"message", f.message},
        {"pinned_hashes",
         {{"h_signer", h_signer.value}, {"h_target", h_target.value}, {"m_bar", m_bar.value}}},
        {"master_secret_y", f.msk.y.value},
        {"scalars",
         {{"r_S", 3}, {"x_S", f.sk.x.value}, {"c_S", f.sk.c.value}, {"t", 4}, {"m_bar", m_bar.value}}},
        {"elements",
         {{"Y_KGC", serialize_element(f.params.y_kgc)},
          {"g2", serialize_element(f.params.g2)},
          {"y_S", serialize_element(f.partial.y_i)},
          {"R_S", serialize_element(f.partial.big_r)},
          {"eq1_lhs", serialize_element(eq1_lhs)},
          {"eq1_rhs", serialize_element(eq1_rhs)},
          {"Y_S1", serialize_element(f.pk.y1)},
          {"Y_S2", serialize_element(f.pk.y2)},
          {"sigma1", serialize_element(f.sig.sigma1)},
          {"sigma2", serialize_element(f.sig.sigma2)},
          {"verify_lhs", serialize_element(ver_lhs)},
          {"verify_rhs", serialize_element(ver_rhs)}}},
        {"verify", "VALID"},
        {"attack",
         {{"target_id", bundle.target_id},
          {"alpha", bundle.alpha.value},
          {"forged_partial_y", serialize_element(bundle.partial.y_i)},
          {"forged_partial_R", serialize_element(bundle.partial.big_r)},
          {"eq1_lhs", serialize_element(aeq_lhs)},
          {"eq1_rhs", serialize_element(aeq_rhs)},
          {"forged_scalars", {{"x", bundle.sk.x.value}, {"c", bundle.sk.c.value}, {"t", 6}}},
          {"forged_public_Y1", serialize_element(bundle.pk.y1)},
          {"forged_public_Y2", serialize_element(bundle.pk.y2)},
          {"forged_sigma1", serialize_element(bundle.sig.sigma1)},
          {"forged_sigma2", serialize_element(bundle.sig.sigma2)},
          {"forged_verify", "VALID"}}},
    };
    return vec;
}

nlohmann::json f2_vector() {
    KumarF2 f = make_f2();
    const PairingSuite& suite = f.suite;
    GroupElement q_id = hash_to_group(suite, HashTag::H1, f.signer);
    GroupElement w = hash_to_group(suite, HashTag::H2, f.delta);
    Scalar h_sign = hash_to_scalar(suite, HashTag::H3,
                                   kumar::h3_input(f.message, f.signer, f.pk, f.sig.big_r));

    GroupElement ver_lhs = pairing(f.sig.v, f.params.p);
    GroupElement ver_rhs =
        group_mul(pairing(group_mul(q_id, group_exp(f.pk.y, h_sign)), f.params.p_pub),
                  pairing(f.sig.big_r, w));
    require(ver_lhs == ver_rhs, "F2 verification sides");
    require(kumar::verify(f.params, f.signer, f.pk, f.delta, f.message, f.sig), "F2 verify");

    // Theorem-2 walk: strip the x_S h P_pub mask, rebind to message-2.
    kumar::DeltaBoundKey dbk =
        kumar::recover_delta_key(f.params, f.signer, f.pk, f.sk.x, f.message, f.sig);
    kumar::Signature forged =
        kumar::forge_type1(f.params, f.signer, f.pk, dbk, f.sk.x, f.message_forged);
    Scalar h_forged = hash_to_scalar(
        suite, HashTag::H3, kumar::h3_input(f.message_forged, f.signer, f.pk, dbk.big_r));
    require(kumar::verify(f.params, f.signer, f.pk, f.delta, f.message_forged, forged),
            "F2 type-1 forged verify");

    // Theorem-3 walk: KGC forges from scratch with r=10.
    SequenceSource t2_rng = draws_for({10});
    kumar::Signature forged2 =
        kumar::forge_type2(f.params, f.msk, f.signer, f.pk, f.delta, f.message, t2_rng);
    Scalar h_type2 = hash_to_scalar(
        suite, HashTag::H3, kumar::h3_input(f.message, f.signer, f.pk, forged2.big_r));
    require(kumar::verify(f.params, f.signer, f.pk, f.delta, f.message, forged2),
            "F2 type-2 forged verify");

    nlohmann::json vec{
        {"fixture", "F2"},
        {"scheme", "kumar"},
        {"q", suite.order()},
        {"suite", suite.id()},
        {"digest", suite.digest_name()},
        {"identities", {{"signer", f.signer}}},
        {"delta", f.delta},
        {"message", f.message},
        {"pinned_hashes",
         {{"q_id", q_id.exp},
          {"w", w.exp},
          {"h_sign", h_sign.value},
          {"h_forged", h_forged.value},
          {"h_type2", h_type2.value}}},
        {"master_secret_alpha", f.msk.alpha.value},
        {"scalars", {{"x_S", f.sk.x.value}, {"r", 4}}},
        {"elements",
         {{"P_pub", serialize_element(f.params.p_pub)},
          {"Q_ID", serialize_element(q_id)},
          {"D_S", serialize_element(f.partial.d)},
          {"Y_S", serialize_element(f.pk.y)},
          {"W", serialize_element(w)},
          {"R", serialize_element(f.sig.big_r)},
          {"V", serialize_element(f.sig.v)},
          {"verify_lhs", serialize_element(ver_lhs)},
          {"verify_rhs", serialize_element(ver_rhs)}}},
        {"verify", "VALID"},
        {"attack_type1",
         {{"message_forged", f.message_forged},
          {"h_forged", h_forged.value},
          {"D_S_delta", serialize_element(dbk.d_delta)},
          {"R", serialize_element(forged.big_r)},
          {"V_forged", serialize_element(forged.v)},
          {"verify", "VALID"}}},
        {"attack_type2",
         {{"r", 10},
          {"h", h_type2.value},
          {"R", serialize_element(forged2.big_r)},
          {"V", serialize_element(forged2.v)},
          {"verify", "VALID"}}},
    };
    return vec;
}

}  // namespace clsforge::fixtures
