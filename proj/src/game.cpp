#include "clsforge/game.hpp"

#include <iomanip>
#include <sstream>

#include "clsforge/codec.hpp"
#include "clsforge/encoding.hpp"
#include "clsforge/errors.hpp"
#include "clsforge/karati_attack.hpp"
#include "clsforge/kumar_attack.hpp"

namespace clsforge::game {

const char* scheme_kind_name(SchemeKind s) {
    return s == SchemeKind::Karati ? "karati" : "kumar";
}

const char* game_name(AdversaryType a) {
    return a == AdversaryType::A1 ? "game1" : "game2";
}

const char* call_kind_name(CallKind k) {
    switch (k) {
        case CallKind::PartialKey: return "PartialKey";
        case CallKind::SecretValue: return "SecretValue";
        case CallKind::PublicKey: return "PublicKey";
        case CallKind::ReplaceKey: return "ReplaceKey";
        case CallKind::Sign: return "Sign";
    }
    return "?";
}

SchemeKind scheme_kind_from_name(const std::string& name) {
    if (name == "karati") return SchemeKind::Karati;
    if (name == "kumar") return SchemeKind::Kumar;
    throw SchemaError("unknown scheme '" + name + "'");
}

AdversaryType adversary_from_game_name(const std::string& name) {
    if (name == "game1") return AdversaryType::A1;
    if (name == "game2") return AdversaryType::A2;
    throw SchemaError("unknown game '" + name + "'");
}

CallKind call_kind_from_name(const std::string& name) {
    if (name == "PartialKey") return CallKind::PartialKey;
    if (name == "SecretValue") return CallKind::SecretValue;
    if (name == "PublicKey") return CallKind::PublicKey;
    if (name == "ReplaceKey") return CallKind::ReplaceKey;
    if (name == "Sign") return CallKind::Sign;
    throw SchemaError("unknown oracle kind '" + name + "'");
}

Challenger::Challenger(SchemeKind scheme, AdversaryType adversary, uint64_t q, uint64_t seed,
                       uint32_t query_cap)
    : scheme_(scheme), adversary_(adversary), q_(q), query_cap_(query_cap), rng_(seed) {
    PairingSuite suite(q);
    if (scheme_ == SchemeKind::Karati) {
        auto [params, msk] = karati::setup(suite, rng_);
        karati_params_ = params;
        karati_msk_ = msk;
        disclosed_["params"] = karati::params_to_json(params);
        if (adversary_ == AdversaryType::A2) {
            disclosed_["master_secret"] = {{"y", serialize_scalar(msk.y)}};
        }
    } else {
        auto [params, msk] = kumar::setup(suite, rng_);
        kumar_params_ = params;
        kumar_msk_ = msk;
        disclosed_["params"] = kumar::params_to_json(params);
        if (adversary_ == AdversaryType::A2) {
            disclosed_["master_secret"] = {{"alpha", serialize_scalar(msk.alpha)}};
        }
    }
}

Challenger::KaratiEntry& Challenger::karati_entry(const std::string& id) {
    auto it = karati_registry_.find(id);
    if (it == karati_registry_.end()) {
        const karati::Params& params = *karati_params_;
        karati::PartialKey partial =
            karati::extract_partial_key(params, *karati_msk_, id, rng_);
        karati::PrivateKey sk = karati::set_private_key(params, partial, rng_);
        karati::PublicKey pk = karati::set_public_key(params, partial, sk);
        it = karati_registry_.emplace(id, KaratiEntry{partial, sk, pk, pk, false}).first;
    }
    return it->second;
}

Challenger::KumarEntry& Challenger::kumar_entry(const std::string& id) {
    auto it = kumar_registry_.find(id);
    if (it == kumar_registry_.end()) {
        const kumar::Params& params = *kumar_params_;
        kumar::PartialKey partial = kumar::extract_partial_key(params, *kumar_msk_, id);
        kumar::PrivateKey sk = kumar::set_private_key(params, partial, rng_);
        kumar::PublicKey pk = kumar::set_public_key(params, sk);
        it = kumar_registry_.emplace(id, KumarEntry{partial, sk, pk, pk, false}).first;
    }
    return it->second;
}

nlohmann::json Challenger::request(CallKind kind, const std::string& id,
                                   const nlohmann::json& payload) {
    if (log_.size() >= query_cap_) {
        throw QueryCapExceeded("query cap of " + std::to_string(query_cap_) + " calls reached");
    }
    if (!payload.is_object()) {
        throw UnknownScheme("oracle payload must be a JSON object");
    }
    if (kind == CallKind::ReplaceKey && adversary_ == AdversaryType::A2) {
        throw RoleViolation("A2 is not allowed to replace public keys");
    }

    nlohmann::json response;
    try {
        switch (kind) {
            case CallKind::PartialKey:
                response = scheme_ == SchemeKind::Karati
                               ? karati::partial_key_to_json(karati_entry(id).partial)
                               : kumar::partial_key_to_json(kumar_entry(id).partial);
                break;
            case CallKind::SecretValue:
                // Karati's Set-Private-Key draws two user secrets; the
                // secret value handed out is the pair.
                if (scheme_ == SchemeKind::Karati) {
                    const KaratiEntry& e = karati_entry(id);
                    response = {{"c_i", serialize_scalar(e.sk.c)},
                                {"x_i", serialize_scalar(e.sk.x)}};
                } else {
                    response = {{"x_i", serialize_scalar(kumar_entry(id).sk.x)}};
                }
                break;
            case CallKind::PublicKey:
                response = scheme_ == SchemeKind::Karati
                               ? karati::public_key_to_json(karati_entry(id).pk_current)
                               : kumar::public_key_to_json(kumar_entry(id).pk_current);
                break;
            case CallKind::ReplaceKey: {
                if (!payload.contains("public_key")) {
                    throw SchemaError("ReplaceKey payload requires 'public_key'");
                }
                if (scheme_ == SchemeKind::Karati) {
                    KaratiEntry& e = karati_entry(id);
                    e.pk_current = karati::public_key_from_json(karati_params_->suite,
                                                                payload.at("public_key"));
                    e.replaced = true;
                } else {
                    KumarEntry& e = kumar_entry(id);
                    e.pk_current = kumar::public_key_from_json(kumar_params_->suite,
                                                               payload.at("public_key"));
                    e.replaced = true;
                }
                response = {{"replaced", true}};
                break;
            }
            case CallKind::Sign: {
                std::string message = json_string_field(payload, "message");
                // The oracle signs with the honest private key and names
                // the public key the signature verifies under.
                if (scheme_ == SchemeKind::Karati) {
                    KaratiEntry& e = karati_entry(id);
                    karati::Signature sig =
                        karati::sign(*karati_params_, id, e.sk, message, rng_);
                    response = karati::signature_to_json(sig);
                    response["public_key"] = karati::public_key_to_json(e.pk_original);
                } else {
                    std::string delta = base64_decode(json_string_field(payload, "delta"));
                    KumarEntry& e = kumar_entry(id);
                    kumar::Signature sig = kumar::sign(*kumar_params_, id, e.pk_original, e.sk,
                                                       delta, message, rng_);
                    response = kumar::signature_to_json(sig);
                    response["delta"] = base64_encode(sig.delta);
                    response["public_key"] = kumar::public_key_to_json(e.pk_original);
                }
                break;
            }
        }
    } catch (const SchemaError& e) {
        throw UnknownScheme(std::string("oracle payload mismatch: ") + e.what());
    } catch (const MalformedEncoding& e) {
        throw UnknownScheme(std::string("oracle payload mismatch: ") + e.what());
    }

    log_.push_back(OracleCall{static_cast<uint32_t>(log_.size() + 1), kind, id, payload, response});
    return response;
}

bool Challenger::forgery_verifies(const Forgery& forgery, bool use_original_key) {
    try {
        if (scheme_ == SchemeKind::Karati) {
            const KaratiEntry& e = karati_entry(forgery.id);
            const karati::PublicKey& pk = use_original_key ? e.pk_original : e.pk_current;
            karati::Signature sig =
                karati::signature_from_json(karati_params_->suite, forgery.signature);
            return karati::verify(*karati_params_, forgery.id, pk, forgery.message, sig);
        }
        const KumarEntry& e = kumar_entry(forgery.id);
        const kumar::PublicKey& pk = use_original_key ? e.pk_original : e.pk_current;
        if (!forgery.delta_b64) {
            return false;  // a kumar forgery claim must name its state info
        }
        std::string delta = base64_decode(*forgery.delta_b64);
        kumar::Signature sig =
            kumar::signature_from_json(kumar_params_->suite, forgery.signature, delta);
        return kumar::verify(*kumar_params_, forgery.id, pk, delta, forgery.message, sig);
    } catch (const Error&) {
        return false;  // malformed forgeries are not valid signatures
    }
}

Verdict Challenger::judge_game1(const Transcript& transcript) {
    if (!forgery_verifies(transcript.forgery, /*use_original_key=*/false)) {
        return Verdict{false, "verify clause"};
    }
    for (const OracleCall& call : transcript.calls) {
        if (call.kind == CallKind::PartialKey && call.id == transcript.forgery.id) {
            return Verdict{false, "partial-key clause"};
        }
    }
    for (const OracleCall& call : transcript.calls) {
        if (call.kind == CallKind::Sign && call.id == transcript.forgery.id &&
            call.payload.value("message", "") == transcript.forgery.message) {
            return Verdict{false, "sign clause"};
        }
    }
    return Verdict{true, ""};
}

Verdict Challenger::judge_game2(const Transcript& transcript) {
    if (!forgery_verifies(transcript.forgery, /*use_original_key=*/true)) {
        return Verdict{false, "verify clause"};
    }
    for (const OracleCall& call : transcript.calls) {
        if (call.kind == CallKind::SecretValue && call.id == transcript.forgery.id) {
            return Verdict{false, "secret-value clause"};
        }
    }
    for (const OracleCall& call : transcript.calls) {
        if (call.kind == CallKind::Sign && call.id == transcript.forgery.id &&
            call.payload.value("message", "") == transcript.forgery.message) {
            return Verdict{false, "sign clause"};
        }
    }
    return Verdict{true, ""};
}

const char* script_name(ScriptKind s) {
    switch (s) {
        case ScriptKind::KaratiT1: return "karati-t1";
        case ScriptKind::KumarT2Type1: return "kumar-t2-type1";
        case ScriptKind::KumarT3Type2: return "kumar-t3-type2";
    }
    return "?";
}

ScriptKind script_from_name(const std::string& name) {
    if (name == "karati-t1") return ScriptKind::KaratiT1;
    if (name == "kumar-t2-type1") return ScriptKind::KumarT2Type1;
    if (name == "kumar-t3-type2") return ScriptKind::KumarT3Type2;
    throw ConfigError("unknown attack script '" + name + "'");
}

SchemeKind script_scheme(ScriptKind s) {
    return s == ScriptKind::KaratiT1 ? SchemeKind::Karati : SchemeKind::Kumar;
}

AdversaryType script_adversary(ScriptKind s) {
    return s == ScriptKind::KumarT3Type2 ? AdversaryType::A2 : AdversaryType::A1;
}

namespace {

std::string fresh_label(const char* prefix, RandomSource& rng) {
    std::ostringstream out;
    out << prefix << std::hex << std::setw(8) << std::setfill('0')
        << static_cast<uint32_t>(rng.next_u64());
    return out.str();
}

// A1 learns one partial key (of a bystander), mauls it into a partial
// key for the target, completes the key pair, replaces the target's
// public key, and signs.
Transcript run_karati_t1(Challenger& c, RandomSource& adv, uint64_t seed) {
    karati::Params params = karati::params_from_json(c.disclosed().at("params"));
    std::string target = fresh_label("target-", adv);
    std::string source = fresh_label("source-", adv);
    std::string message = fresh_label("msg-", adv);

    c.request(CallKind::PublicKey, target, nlohmann::json::object());
    nlohmann::json partial_json =
        c.request(CallKind::PartialKey, source, nlohmann::json::object());
    karati::PartialKey source_key =
        karati::partial_key_from_json(params.suite, partial_json);

    karati::ForgeryBundle bundle =
        karati::forge_signature(params, source, source_key, target, message, adv);

    c.request(CallKind::ReplaceKey, target,
              {{"public_key", karati::public_key_to_json(bundle.pk)}});

    Transcript t{AdversaryType::A1, SchemeKind::Karati, seed, c.order(), c.calls(),
                 Forgery{target, message, karati::signature_to_json(bundle.sig),
                         karati::public_key_to_json(bundle.pk), std::nullopt},
                 std::nullopt};
    t.verdict = c.judge_game1(t);
    return t;
}

// A1 observes one signature of the target, asks for the secret value,
// strips the mask, and rebinds the delta-bound key to a new message.
Transcript run_kumar_t2_type1(Challenger& c, RandomSource& adv, uint64_t seed) {
    kumar::Params params = kumar::params_from_json(c.disclosed().at("params"));
    std::string target = fresh_label("target-", adv);
    std::string m_old = fresh_label("msg-old-", adv);
    std::string m_new = fresh_label("msg-new-", adv);
    std::string delta = fresh_label("delta-", adv);

    nlohmann::json pk_json = c.request(CallKind::PublicKey, target, nlohmann::json::object());
    kumar::PublicKey pk = kumar::public_key_from_json(params.suite, pk_json);

    nlohmann::json sig_json = c.request(
        CallKind::Sign, target, {{"message", m_old}, {"delta", base64_encode(delta)}});
    kumar::Signature observed = kumar::signature_from_json(params.suite, sig_json, delta);

    nlohmann::json x_json = c.request(CallKind::SecretValue, target, nlohmann::json::object());
    Scalar x = deserialize_scalar(params.suite, json_string_field(x_json, "x_i"));

    kumar::DeltaBoundKey dbk =
        kumar::recover_delta_key(params, target, pk, x, m_old, observed);
    kumar::Signature forged = kumar::forge_type1(params, target, pk, dbk, x, m_new);

    Transcript t{AdversaryType::A1, SchemeKind::Kumar, seed, c.order(), c.calls(),
                 Forgery{target, m_new, kumar::signature_to_json(forged),
                         kumar::public_key_to_json(pk), base64_encode(delta)},
                 std::nullopt};
    t.verdict = c.judge_game1(t);
    return t;
}

// A2 (the KGC) forges from scratch: no sign query, no secret value.
Transcript run_kumar_t3_type2(Challenger& c, RandomSource& adv, uint64_t seed) {
    kumar::Params params = kumar::params_from_json(c.disclosed().at("params"));
    kumar::MasterSecret msk{deserialize_scalar(
        params.suite, json_string_field(c.disclosed().at("master_secret"), "alpha"))};
    std::string target = fresh_label("target-", adv);
    std::string message = fresh_label("msg-", adv);
    std::string delta = fresh_label("delta-", adv);

    nlohmann::json pk_json = c.request(CallKind::PublicKey, target, nlohmann::json::object());
    kumar::PublicKey pk = kumar::public_key_from_json(params.suite, pk_json);

    kumar::Signature forged =
        kumar::forge_type2(params, msk, target, pk, delta, message, adv);

    Transcript t{AdversaryType::A2, SchemeKind::Kumar, seed, c.order(), c.calls(),
                 Forgery{target, message, kumar::signature_to_json(forged),
                         kumar::public_key_to_json(pk), base64_encode(delta)},
                 std::nullopt};
    t.verdict = c.judge_game2(t);
    return t;
}

}  // namespace

Transcript run_scripted_adversary(ScriptKind script, uint64_t seed, uint64_t q) {
    Challenger challenger(script_scheme(script), script_adversary(script), q,
                          derive_seed(seed, 1));
    Mt19937Source adv(derive_seed(seed, 2));
    switch (script) {
        case ScriptKind::KaratiT1: return run_karati_t1(challenger, adv, seed);
        case ScriptKind::KumarT2Type1: return run_kumar_t2_type1(challenger, adv, seed);
        case ScriptKind::KumarT3Type2: return run_kumar_t3_type2(challenger, adv, seed);
    }
    throw ConfigError("unreachable script kind");
}

}  // namespace clsforge::game
