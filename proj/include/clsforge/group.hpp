#ifndef CLSFORGE_GROUP_HPP_
#define CLSFORGE_GROUP_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "clsforge/scalar.hpp"

namespace clsforge {

enum class Group : uint8_t { G1, GT };

// Domain-separation tags for the hash functions used across both
// schemes.  Each tag is a distinct single-byte prefix of the digest
// input, so the five functions are independent.
enum class HashTag : uint8_t { H = 0, H1 = 1, H2 = 2, H3 = 3, MSG = 4 };

// Element of G1 or GT under the exponent-transparent mock backend: the
// payload is the discrete log of the element with respect to the
// group's generator.  This is deliberately insecure; it is what lets an
// independent oracle recompute every exponent the schemes produce.
struct GroupElement {
    Group group = Group::G1;
    uint64_t exp = 0;
    uint64_t order = 0;  // suite order q

    bool is_identity() const { return exp == 0; }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Symmetric (type-1) pairing suite e: G1 x G1 -> GT of prime order q.
// The only shipped backend is the mock one; a hardness-bearing curve
// backend would slot in behind this same surface.
class PairingSuite {
  public:
    explicit PairingSuite(uint64_t q);

    uint64_t order() const { return q_; }
    const std::string& backend() const { return backend_; }
    const std::string& digest_name() const { return digest_; }
    std::string id() const { return backend_ + std::to_string(q_); }

    GroupElement g1() const { return GroupElement{Group::G1, 1, q_}; }
    GroupElement gt() const { return GroupElement{Group::GT, 1, q_}; }
    GroupElement identity(Group g) const { return GroupElement{g, 0, q_}; }
    GroupElement element(Group g, uint64_t exp) const { return GroupElement{g, exp % q_, q_}; }
    Scalar scalar(uint64_t v) const { return make_scalar(v, q_); }

    bool same_suite(const GroupElement& e) const { return e.order == q_; }
    bool same_suite(const Scalar& s) const { return s.modulus == q_; }

    // Test-only override: fixes the output of hash_to_scalar (and hence
    // hash_to_group) for one exact (tag, input) pair.  Production runs
    // keep the table empty.
    void pin_hash(HashTag tag, std::string_view data, uint64_t value);
    bool has_pins() const { return !pins_.empty(); }

    friend bool operator==(const PairingSuite& a, const PairingSuite& b) {
        return a.q_ == b.q_ && a.backend_ == b.backend_;
    }

    friend Scalar hash_to_scalar(const PairingSuite&, HashTag, std::string_view);

  private:
    uint64_t q_;
    std::string backend_;
    std::string digest_;
    std::map<std::pair<HashTag, std::string>, uint64_t> pins_;
};

GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const GroupElement& a);
GroupElement group_exp(const GroupElement& a, const Scalar& s);
// e(a, b) for a, b in G1; bilinear and non-degenerate, e(g1, g1) = gt.
GroupElement pairing(const GroupElement& a, const GroupElement& b);

// Deterministic hash into Z*_q (never zero, so every output is
// invertible).  Tag must be one of H, H3, MSG for scalar use.
Scalar hash_to_scalar(const PairingSuite& suite, HashTag tag, std::string_view data);
// Deterministic non-identity element of G1; tags H1, H2.
GroupElement hash_to_group(const PairingSuite& suite, HashTag tag, std::string_view data);

const char* group_name(Group g);
const char* hash_tag_name(HashTag t);

}  // namespace clsforge

#endif  // CLSFORGE_GROUP_HPP_
