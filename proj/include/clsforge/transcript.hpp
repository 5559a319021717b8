#ifndef CLSFORGE_TRANSCRIPT_HPP_
#define CLSFORGE_TRANSCRIPT_HPP_

#include <string>

#include "clsforge/game.hpp"

// Transcript file format and replay checking.  The canonical byte form
// is the pretty-printed JSON with sorted keys plus a trailing newline;
// verify-transcript re-runs the recorded script from the recorded seed
// and demands byte-identical reproduction.
namespace clsforge::game {

nlohmann::json transcript_to_json(const Transcript& t);

// Strict schema validation; throws SchemaError on any shape problem.
Transcript transcript_from_json(const nlohmann::json& j);

std::string canonical_transcript_bytes(const Transcript& t);

// Which scripted adversary produced a transcript of this game/scheme.
ScriptKind script_for_transcript(const Transcript& t);

// Full check of a transcript file's contents: parse, re-execute, byte
// compare.  Throws SchemaError if the file does not parse against the
// schema, ReplayMismatch naming the first divergent piece otherwise.
void verify_transcript_bytes(const std::string& file_bytes);

}  // namespace clsforge::game

#endif  // CLSFORGE_TRANSCRIPT_HPP_
