#ifndef CLSFORGE_CODEC_HPP_
#define CLSFORGE_CODEC_HPP_

#include "json.hpp"

#include "clsforge/karati.hpp"
#include "clsforge/kumar.hpp"

// JSON encodings for key material and signatures.  Elements and scalars
// use the ASCII wire encoding from encoding.hpp; decoding throws
// SchemaError on shape problems and MalformedEncoding on bad values.
namespace clsforge {

namespace karati {

nlohmann::json params_to_json(const Params& p);
Params params_from_json(const nlohmann::json& j);

nlohmann::json partial_key_to_json(const PartialKey& k);
PartialKey partial_key_from_json(const PairingSuite& suite, const nlohmann::json& j);

nlohmann::json private_key_to_json(const PrivateKey& k);
PrivateKey private_key_from_json(const PairingSuite& suite, const nlohmann::json& j);

nlohmann::json public_key_to_json(const PublicKey& k);
PublicKey public_key_from_json(const PairingSuite& suite, const nlohmann::json& j);

nlohmann::json signature_to_json(const Signature& s);
Signature signature_from_json(const PairingSuite& suite, const nlohmann::json& j);

}  // namespace karati

namespace kumar {

nlohmann::json params_to_json(const Params& p);
Params params_from_json(const nlohmann::json& j);

nlohmann::json partial_key_to_json(const PartialKey& k);
PartialKey partial_key_from_json(const PairingSuite& suite, const nlohmann::json& j);

nlohmann::json private_key_to_json(const PrivateKey& k);
PrivateKey private_key_from_json(const PairingSuite& suite, const nlohmann::json& j);

nlohmann::json public_key_to_json(const PublicKey& k);
PublicKey public_key_from_json(const PairingSuite& suite, const nlohmann::json& j);

// delta travels separately (base64) in transcripts and key files.
nlohmann::json signature_to_json(const Signature& s);
Signature signature_from_json(const PairingSuite& suite, const nlohmann::json& j,
                              std::string delta);

}  // namespace kumar

// Fetch j[key] as a string field or throw SchemaError.
std::string json_string_field(const nlohmann::json& j, const char* key);

}  // namespace clsforge

#endif  // CLSFORGE_CODEC_HPP_
