#include "clsforge/group.hpp"

#include <openssl/evp.h>

#include <array>

#include "clsforge/errors.hpp"

namespace clsforge {

namespace {

void require_combinable(const GroupElement& a, const GroupElement& b) {
    if (a.order != b.order) {
        throw GroupMismatch("elements belong to different suites");
    }
    if (a.group != b.group) {
        throw GroupMismatch("elements belong to different groups");
    }
}

std::array<uint8_t, 32> sha256(std::string_view data) {
    std::array<uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size()) {
        throw Error("sha256 digest failed");
    }
    return out;
}

}  // namespace

PairingSuite::PairingSuite(uint64_t q) : q_(q), backend_("mock"), digest_("sha256") {
    if (!is_prime(q)) {
        throw ConfigError("group order must be prime, got " + std::to_string(q));
    }
}

void PairingSuite::pin_hash(HashTag tag, std::string_view data, uint64_t value) {
    pins_[{tag, std::string(data)}] = value % q_;
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
    require_combinable(a, b);
    return GroupElement{a.group, add_mod(a.exp, b.exp, a.order), a.order};
}

GroupElement group_inverse(const GroupElement& a) {
    return GroupElement{a.group, sub_mod(0, a.exp, a.order), a.order};
}

GroupElement group_exp(const GroupElement& a, const Scalar& s) {
    if (a.order != s.modulus) {
        throw GroupMismatch("scalar and element belong to different suites");
    }
    return GroupElement{a.group, mul_mod(a.exp, s.value, a.order), a.order};
}

GroupElement pairing(const GroupElement& a, const GroupElement& b) {
    if (a.order != b.order) {
        throw GroupMismatch("pairing arguments belong to different suites");
    }
    if (a.group != Group::G1 || b.group != Group::G1) {
        throw GroupMismatch("pairing arguments must both lie in G1");
    }
    return GroupElement{Group::GT, mul_mod(a.exp, b.exp, a.order), a.order};
}

Scalar hash_to_scalar(const PairingSuite& suite, HashTag tag, std::string_view data) {
    auto pinned = suite.pins_.find({tag, std::string(data)});
    if (pinned != suite.pins_.end()) {
        return Scalar{pinned->second, suite.order()};
    }
    std::string input;
    input.reserve(data.size() + 1);
    input.push_back(static_cast<char>(tag));
    input.append(data);
    auto digest = sha256(input);
    // First 16 digest bytes as a big-endian integer, reduced into
    // [1, q): the +1 keeps outputs in Z*_q so they are always
    // invertible where the schemes divide by them.
    unsigned __int128 acc = 0;
    for (int i = 0; i < 16; ++i) {
        acc = (acc << 8) | digest[static_cast<size_t>(i)];
    }
    uint64_t q = suite.order();
    return Scalar{static_cast<uint64_t>(acc % (q - 1)) + 1, q};
}

GroupElement hash_to_group(const PairingSuite& suite, HashTag tag, std::string_view data) {
    if (tag != HashTag::H1 && tag != HashTag::H2) {
        throw Error("hash_to_group expects tag H1 or H2");
    }
    Scalar e = hash_to_scalar(suite, tag, data);
    return GroupElement{Group::G1, e.value, suite.order()};
}

const char* group_name(Group g) {
    return g == Group::G1 ? "G1" : "GT";
}

const char* hash_tag_name(HashTag t) {
    switch (t) {
        case HashTag::H: return "H";
        case HashTag::H1: return "H1";
        case HashTag::H2: return "H2";
        case HashTag::H3: return "H3";
        case HashTag::MSG: return "MSG";
    }
    return "?";
}

}  // namespace clsforge
