#include "clsforge/codec.hpp"

#include "clsforge/encoding.hpp"
#include "clsforge/errors.hpp"

namespace clsforge {

std::string json_string_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
        throw SchemaError(std::string("missing or non-string field '") + key + "'");
    }
    return j.at(key).get<std::string>();
}

namespace {

uint64_t json_u64_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw SchemaError(std::string("missing or non-integer field '") + key + "'");
    }
    return j.at(key).get<uint64_t>();
}

GroupElement element_field(const PairingSuite& suite, const nlohmann::json& j, const char* key) {
    return deserialize_element(suite, json_string_field(j, key));
}

Scalar scalar_field(const PairingSuite& suite, const nlohmann::json& j, const char* key) {
    return deserialize_scalar(suite, json_string_field(j, key));
}

}  // namespace

namespace karati {

nlohmann::json params_to_json(const Params& p) {
    return {{"q", p.suite.order()},
            {"g2", serialize_element(p.g2)},
            {"Y_KGC", serialize_element(p.y_kgc)}};
}

Params params_from_json(const nlohmann::json& j) {
    PairingSuite suite(json_u64_field(j, "q"));
    return Params{suite, element_field(suite, j, "g2"), element_field(suite, j, "Y_KGC")};
}

nlohmann::json partial_key_to_json(const PartialKey& k) {
    return {{"y_i", serialize_element(k.y_i)}, {"R_i", serialize_element(k.big_r)}};
}

PartialKey partial_key_from_json(const PairingSuite& suite, const nlohmann::json& j) {
    return PartialKey{element_field(suite, j, "y_i"), element_field(suite, j, "R_i")};
}

nlohmann::json private_key_to_json(const PrivateKey& k) {
    return {{"c_i", serialize_scalar(k.c)},
            {"x_i", serialize_scalar(k.x)},
            {"R_i", serialize_element(k.big_r)}};
}

PrivateKey private_key_from_json(const PairingSuite& suite, const nlohmann::json& j) {
    return PrivateKey{scalar_field(suite, j, "c_i"), scalar_field(suite, j, "x_i"),
                      element_field(suite, j, "R_i")};
}

nlohmann::json public_key_to_json(const PublicKey& k) {
    return {{"Y_i1", serialize_element(k.y1)}, {"Y_i2", serialize_element(k.y2)}};
}

PublicKey public_key_from_json(const PairingSuite& suite, const nlohmann::json& j) {
    return PublicKey{element_field(suite, j, "Y_i1"), element_field(suite, j, "Y_i2")};
}

nlohmann::json signature_to_json(const Signature& s) {
    return {{"sigma1", serialize_element(s.sigma1)}, {"sigma2", serialize_element(s.sigma2)}};
}

Signature signature_from_json(const PairingSuite& suite, const nlohmann::json& j) {
    return Signature{element_field(suite, j, "sigma1"), element_field(suite, j, "sigma2")};
}

}  // namespace karati

namespace kumar {

nlohmann::json params_to_json(const Params& p) {
    return {{"q", p.suite.order()},
            {"P", serialize_element(p.p)},
            {"P_pub", serialize_element(p.p_pub)}};
}

Params params_from_json(const nlohmann::json& j) {
    PairingSuite suite(json_u64_field(j, "q"));
    return Params{suite, element_field(suite, j, "P"), element_field(suite, j, "P_pub")};
}

nlohmann::json partial_key_to_json(const PartialKey& k) {
    return {{"D_i", serialize_element(k.d)}};
}

PartialKey partial_key_from_json(const PairingSuite& suite, const nlohmann::json& j) {
    return PartialKey{element_field(suite, j, "D_i")};
}

nlohmann::json private_key_to_json(const PrivateKey& k) {
    return {{"x_i", serialize_scalar(k.x)}, {"D_i", serialize_element(k.d)}};
}

PrivateKey private_key_from_json(const PairingSuite& suite, const nlohmann::json& j) {
    return PrivateKey{scalar_field(suite, j, "x_i"), element_field(suite, j, "D_i")};
}

nlohmann::json public_key_to_json(const PublicKey& k) {
    return {{"Y_i", serialize_element(k.y)}};
}

PublicKey public_key_from_json(const PairingSuite& suite, const nlohmann::json& j) {
    return PublicKey{element_field(suite, j, "Y_i")};
}

nlohmann::json signature_to_json(const Signature& s) {
    return {{"R", serialize_element(s.big_r)}, {"V", serialize_element(s.v)}};
}

Signature signature_from_json(const PairingSuite& suite, const nlohmann::json& j,
                              std::string delta) {
    return Signature{element_field(suite, j, "R"), element_field(suite, j, "V"),
                     std::move(delta)};
}

}  // namespace kumar

}  // namespace clsforge
