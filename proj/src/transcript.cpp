#include "clsforge/transcript.hpp"

#include <set>

#include "clsforge/errors.hpp"

namespace clsforge::game {

namespace {

void require_keys(const nlohmann::json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const char* where) {
    if (!j.is_object()) {
        throw SchemaError(std::string(where) + " must be a JSON object");
    }
    for (const auto& key : required) {
        if (!j.contains(key)) {
            throw SchemaError(std::string(where) + " is missing '" + key + "'");
        }
    }
    for (const auto& [key, _] : j.items()) {
        if (!required.contains(key) && !optional.contains(key)) {
            throw SchemaError(std::string(where) + " has unexpected field '" + key + "'");
        }
    }
}

std::string string_at(const nlohmann::json& j, const char* key, const char* where) {
    if (!j.at(key).is_string()) {
        throw SchemaError(std::string(where) + "." + key + " must be a string");
    }
    return j.at(key).get<std::string>();
}

uint64_t u64_at(const nlohmann::json& j, const char* key, const char* where) {
    if (!j.at(key).is_number_unsigned()) {
        throw SchemaError(std::string(where) + "." + key + " must be an unsigned integer");
    }
    return j.at(key).get<uint64_t>();
}

}  // namespace

nlohmann::json transcript_to_json(const Transcript& t) {
    nlohmann::json calls = nlohmann::json::array();
    for (const OracleCall& call : t.calls) {
        calls.push_back({{"seq", call.seq},
                         {"kind", call_kind_name(call.kind)},
                         {"id", call.id},
                         {"payload", call.payload},
                         {"response", call.response}});
    }
    nlohmann::json forgery{{"id", t.forgery.id},
                           {"message", t.forgery.message},
                           {"signature", t.forgery.signature},
                           {"public_key", t.forgery.public_key}};
    if (t.forgery.delta_b64) {
        forgery["delta"] = *t.forgery.delta_b64;
    }
    nlohmann::json out{{"game", game_name(t.adversary)},
                       {"scheme", scheme_kind_name(t.scheme)},
                       {"seed", t.seed},
                       {"suite", {{"backend", "mock"}, {"digest", "sha256"}, {"q", t.order}}},
                       {"calls", calls},
                       {"forgery", forgery}};
    if (t.verdict) {
        out["verdict"] = t.verdict->win
                             ? nlohmann::json{{"result", "WIN"}}
                             : nlohmann::json{{"result", "LOSE"}, {"reason", t.verdict->reason}};
    }
    return out;
}

Transcript transcript_from_json(const nlohmann::json& j) {
    require_keys(j, {"calls", "forgery", "game", "scheme", "seed", "suite", "verdict"}, {},
                 "transcript");

    Transcript t;
    t.adversary = adversary_from_game_name(string_at(j, "game", "transcript"));
    t.scheme = scheme_kind_from_name(string_at(j, "scheme", "transcript"));
    t.seed = u64_at(j, "seed", "transcript");

    const nlohmann::json& suite = j.at("suite");
    require_keys(suite, {"backend", "digest", "q"}, {}, "suite");
    if (string_at(suite, "backend", "suite") != "mock") {
        throw SchemaError("unsupported backend '" + string_at(suite, "backend", "suite") + "'");
    }
    if (string_at(suite, "digest", "suite") != "sha256") {
        throw SchemaError("unsupported digest '" + string_at(suite, "digest", "suite") + "'");
    }
    t.order = u64_at(suite, "q", "suite");
    if (!is_prime(t.order)) {
        throw SchemaError("suite order " + std::to_string(t.order) + " is not prime");
    }

    const nlohmann::json& calls = j.at("calls");
    if (!calls.is_array()) {
        throw SchemaError("transcript.calls must be an array");
    }
    uint32_t expected_seq = 1;
    for (const nlohmann::json& cj : calls) {
        require_keys(cj, {"id", "kind", "payload", "response", "seq"}, {}, "call");
        OracleCall call;
        call.seq = static_cast<uint32_t>(u64_at(cj, "seq", "call"));
        if (call.seq != expected_seq) {
            throw SchemaError("call sequence numbers must be 1..n in order");
        }
        ++expected_seq;
        call.kind = call_kind_from_name(string_at(cj, "kind", "call"));
        call.id = string_at(cj, "id", "call");
        if (!cj.at("payload").is_object() || !cj.at("response").is_object()) {
            throw SchemaError("call payload and response must be objects");
        }
        call.payload = cj.at("payload");
        call.response = cj.at("response");
        t.calls.push_back(std::move(call));
    }

    const nlohmann::json& f = j.at("forgery");
    require_keys(f, {"id", "message", "public_key", "signature"}, {"delta"}, "forgery");
    t.forgery.id = string_at(f, "id", "forgery");
    t.forgery.message = string_at(f, "message", "forgery");
    if (!f.at("signature").is_object() || !f.at("public_key").is_object()) {
        throw SchemaError("forgery signature and public_key must be objects");
    }
    t.forgery.signature = f.at("signature");
    t.forgery.public_key = f.at("public_key");
    if (f.contains("delta")) {
        t.forgery.delta_b64 = string_at(f, "delta", "forgery");
    }

    const nlohmann::json& v = j.at("verdict");
    require_keys(v, {"result"}, {"reason"}, "verdict");
    std::string result = string_at(v, "result", "verdict");
    if (result == "WIN") {
        t.verdict = Verdict{true, ""};
    } else if (result == "LOSE") {
        t.verdict = Verdict{false, v.contains("reason") ? string_at(v, "reason", "verdict") : ""};
    } else {
        throw SchemaError("verdict result must be WIN or LOSE");
    }
    return t;
}

std::string canonical_transcript_bytes(const Transcript& t) {
    return transcript_to_json(t).dump(2) + "\n";
}

ScriptKind script_for_transcript(const Transcript& t) {
    if (t.adversary == AdversaryType::A1 && t.scheme == SchemeKind::Karati) {
        return ScriptKind::KaratiT1;
    }
    if (t.adversary == AdversaryType::A1 && t.scheme == SchemeKind::Kumar) {
        return ScriptKind::KumarT2Type1;
    }
    if (t.adversary == AdversaryType::A2 && t.scheme == SchemeKind::Kumar) {
        return ScriptKind::KumarT3Type2;
    }
    throw SchemaError("no scripted adversary exists for game2/karati transcripts");
}

void verify_transcript_bytes(const std::string& file_bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(file_bytes);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("transcript does not parse: ") + e.what());
    }
    Transcript recorded = transcript_from_json(j);
    Transcript regenerated =
        run_scripted_adversary(script_for_transcript(recorded), recorded.seed, recorded.order);

    if (canonical_transcript_bytes(regenerated) == file_bytes) {
        return;
    }

    // Name the first divergent piece for the error message.
    size_t n = std::min(recorded.calls.size(), regenerated.calls.size());
    for (size_t i = 0; i < n; ++i) {
        nlohmann::json a{{"kind", call_kind_name(recorded.calls[i].kind)},
                         {"id", recorded.calls[i].id},
                         {"payload", recorded.calls[i].payload},
                         {"response", recorded.calls[i].response}};
        nlohmann::json b{{"kind", call_kind_name(regenerated.calls[i].kind)},
                         {"id", regenerated.calls[i].id},
                         {"payload", regenerated.calls[i].payload},
                         {"response", regenerated.calls[i].response}};
        if (a != b) {
            throw ReplayMismatch("call #" + std::to_string(i + 1) + " (" +
                                 call_kind_name(recorded.calls[i].kind) +
                                 ") diverges from replay");
        }
    }
    if (recorded.calls.size() != regenerated.calls.size()) {
        throw ReplayMismatch("call count differs from replay (recorded " +
                             std::to_string(recorded.calls.size()) + ", replayed " +
                             std::to_string(regenerated.calls.size()) + ")");
    }
    if (transcript_to_json(recorded).at("forgery") !=
        transcript_to_json(regenerated).at("forgery")) {
        throw ReplayMismatch("forgery diverges from replay");
    }
    if (transcript_to_json(recorded).at("verdict") !=
        transcript_to_json(regenerated).at("verdict")) {
        throw ReplayMismatch("verdict does not re-derive");
    }
    throw ReplayMismatch("transcript bytes differ from the canonical serialization");
}

}  // namespace clsforge::game
