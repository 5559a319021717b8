#ifndef CLSFORGE_FIXTURES_HPP_
#define CLSFORGE_FIXTURES_HPP_

#include <string>

#include "json.hpp"

#include "clsforge/karati.hpp"
#include "clsforge/kumar.hpp"

// The two desk-checkable golden fixtures at q = 101.  Hash outputs are
// pinned so every exponent matches the committed vectors, which were
// derived by the standalone modular-arithmetic oracle script before
// this library was written (tests/oracle/fixture_oracle.py).
namespace clsforge::fixtures {

inline constexpr uint64_t kFixtureOrder = 101;

// F1 (karati): y=7, h(alice)=11, h(bob)=22, m_bar=9, r_S=3, x_S=2,
// c_S=5, t=4.
struct KaratiF1 {
    PairingSuite suite;
    karati::Params params;
    karati::MasterSecret msk;
    karati::PartialKey partial;
    karati::PrivateKey sk;
    karati::PublicKey pk;
    karati::Signature sig;
    std::string signer;
    std::string target;
    std::string message;
};

// F2 (kumar): alpha=7, H1(alice)=13, H2(delta-1)=9, x_S=5, r=4 with
// h=6; forged message pins h'=2; type-2 run pins r=10, h=8.
struct KumarF2 {
    PairingSuite suite;
    kumar::Params params;
    kumar::MasterSecret msk;
    kumar::PartialKey partial;
    kumar::PrivateKey sk;
    kumar::PublicKey pk;
    kumar::Signature sig;
    std::string signer;
    std::string delta;
    std::string message;
    std::string message_forged;
};

KaratiF1 make_f1();
KumarF2 make_f2();

// Suites with only the pins installed (no key material built yet).
PairingSuite f1_suite();
PairingSuite f2_suite();

// Complete golden vectors in the committed JSON layout.  Every
// verification along the way is re-checked; a mismatch throws.
nlohmann::json f1_vector();
nlohmann::json f2_vector();

}  // namespace clsforge::fixtures

#endif  // CLSFORGE_FIXTURES_HPP_
