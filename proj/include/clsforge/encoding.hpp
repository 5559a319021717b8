#ifndef CLSFORGE_ENCODING_HPP_
#define CLSFORGE_ENCODING_HPP_

#include <string>
#include <string_view>

#include "clsforge/group.hpp"

namespace clsforge {

// ASCII wire encoding used inside key files and transcripts:
//   elements  <suite-id>:<G1|GT>:<decimal exponent>   e.g. mock101:G1:42
//   scalars   <suite-id>:S:<decimal value>            e.g. mock101:S:7
std::string serialize_element(const GroupElement& e);
std::string serialize_scalar(const Scalar& s);

// Throw MalformedEncoding on bad group tag, value >= q, wrong suite id,
// or any syntactic damage.
GroupElement deserialize_element(const PairingSuite& suite, std::string_view text);
Scalar deserialize_scalar(const PairingSuite& suite, std::string_view text);

std::string base64_encode(std::string_view data);
std::string base64_decode(std::string_view text);  // MalformedEncoding on bad input

}  // namespace clsforge

#endif  // CLSFORGE_ENCODING_HPP_
