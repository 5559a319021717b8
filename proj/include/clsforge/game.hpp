#ifndef CLSFORGE_GAME_HPP_
#define CLSFORGE_GAME_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "clsforge/karati.hpp"
#include "clsforge/kumar.hpp"
#include "clsforge/rng.hpp"

// The certificateless adversarial model: a challenger owning scheme
// state, the five oracle queries, and the Game 1 / Game 2 judges.  A
// type-1 adversary may replace public keys but never sees the master
// secret; a type-2 adversary (the KGC) receives the master secret but
// must not replace keys.
namespace clsforge::game {

enum class SchemeKind { Karati, Kumar };
enum class AdversaryType { A1, A2 };
enum class CallKind { PartialKey, SecretValue, PublicKey, ReplaceKey, Sign };

const char* scheme_kind_name(SchemeKind s);         // "karati" / "kumar"
const char* game_name(AdversaryType a);             // "game1" / "game2"
const char* call_kind_name(CallKind k);
SchemeKind scheme_kind_from_name(const std::string& name);
AdversaryType adversary_from_game_name(const std::string& name);
CallKind call_kind_from_name(const std::string& name);

struct OracleCall {
    uint32_t seq = 0;  // 1-based position in the transcript
    CallKind kind = CallKind::PublicKey;
    std::string id;
    nlohmann::json payload;
    nlohmann::json response;
};

struct Forgery {
    std::string id;
    std::string message;
    nlohmann::json signature;
    nlohmann::json public_key;  // key the adversary claims it verifies under
    std::optional<std::string> delta_b64;
};

struct Verdict {
    bool win = false;
    std::string reason;  // violated clause when !win
};

struct Transcript {
    AdversaryType adversary = AdversaryType::A1;
    SchemeKind scheme = SchemeKind::Karati;
    uint64_t seed = 0;
    uint64_t order = 0;  // suite order q
    std::vector<OracleCall> calls;
    Forgery forgery;
    std::optional<Verdict> verdict;
};

// Challenger for one game.  Single-owner mutable: keys are created
// lazily on an identity's first appearance and stay stable afterwards;
// every successful oracle call is appended to the internal log.
class Challenger {
  public:
    Challenger(SchemeKind scheme, AdversaryType adversary, uint64_t q, uint64_t seed,
               uint32_t query_cap = 1u << 16);

    // What the adversary is handed after Setup: the public parameters,
    // plus the master secret iff the adversary is the KGC (A2).
    const nlohmann::json& disclosed() const { return disclosed_; }

    // Runs one oracle query.  Throws RoleViolation (A2 calling
    // ReplaceKey), UnknownScheme (payload does not fit the scheme),
    // QueryCapExceeded.
    nlohmann::json request(CallKind kind, const std::string& id, const nlohmann::json& payload);

    const std::vector<OracleCall>& calls() const { return log_; }
    SchemeKind scheme() const { return scheme_; }
    AdversaryType adversary() const { return adversary_; }
    uint64_t order() const { return q_; }

    // Win conditions.  Game 1: the forgery verifies under the key in
    // effect and neither Request-Partial-Private-Key(ID) nor
    // CL-Sign(ID, m) appears in the transcript.  Game 2: it verifies
    // under the never-replaced key and neither Request-Secret-Value(ID)
    // nor CL-Sign(ID, m) appears.
    Verdict judge_game1(const Transcript& transcript);
    Verdict judge_game2(const Transcript& transcript);

  private:
    struct KaratiEntry {
        karati::PartialKey partial;
        karati::PrivateKey sk;
        karati::PublicKey pk_original;
        karati::PublicKey pk_current;
        bool replaced = false;
    };
    struct KumarEntry {
        kumar::PartialKey partial;
        kumar::PrivateKey sk;
        kumar::PublicKey pk_original;
        kumar::PublicKey pk_current;
        bool replaced = false;
    };

    KaratiEntry& karati_entry(const std::string& id);
    KumarEntry& kumar_entry(const std::string& id);
    bool forgery_verifies(const Forgery& forgery, bool use_original_key);

    SchemeKind scheme_;
    AdversaryType adversary_;
    uint64_t q_;
    uint32_t query_cap_;
    Mt19937Source rng_;
    std::optional<karati::Params> karati_params_;
    std::optional<karati::MasterSecret> karati_msk_;
    std::optional<kumar::Params> kumar_params_;
    std::optional<kumar::MasterSecret> kumar_msk_;
    std::map<std::string, KaratiEntry> karati_registry_;
    std::map<std::string, KumarEntry> kumar_registry_;
    std::vector<OracleCall> log_;
    nlohmann::json disclosed_;
};

// The three attacks wired into their games as scripted adversaries.
enum class ScriptKind { KaratiT1, KumarT2Type1, KumarT3Type2 };

const char* script_name(ScriptKind s);
ScriptKind script_from_name(const std::string& name);  // ConfigError on unknown name
SchemeKind script_scheme(ScriptKind s);
AdversaryType script_adversary(ScriptKind s);

// Deterministic under (seed, q): identities, messages, challenger
// randomness and adversary randomness all derive from the seed.  The
// returned transcript carries the judge's verdict.
Transcript run_scripted_adversary(ScriptKind script, uint64_t seed, uint64_t q);

}  // namespace clsforge::game

#endif  // CLSFORGE_GAME_HPP_
