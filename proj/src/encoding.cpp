#include "clsforge/encoding.hpp"

#include <charconv>

#include "clsforge/errors.hpp"

namespace clsforge {

namespace {

std::string suite_prefix(uint64_t order) {
    return "mock" + std::to_string(order);
}

// Strictly decimal, no sign, no leading blanks, full consumption.
uint64_t parse_decimal(std::string_view text) {
    if (text.empty()) {
        throw MalformedEncoding("empty numeric field");
    }
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw MalformedEncoding("bad numeric field '" + std::string(text) + "'");
    }
    return value;
}

struct Parts {
    std::string_view suite;
    std::string_view tag;
    std::string_view value;
};

Parts split(std::string_view text) {
    size_t first = text.find(':');
    size_t second = first == std::string_view::npos ? std::string_view::npos : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw MalformedEncoding("expected <suite>:<tag>:<value>, got '" + std::string(text) + "'");
    }
    return Parts{text.substr(0, first), text.substr(first + 1, second - first - 1), text.substr(second + 1)};
}

constexpr char kB64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

}  // namespace

std::string serialize_element(const GroupElement& e) {
    return suite_prefix(e.order) + ":" + group_name(e.group) + ":" + std::to_string(e.exp);
}

std::string serialize_scalar(const Scalar& s) {
    return suite_prefix(s.modulus) + ":S:" + std::to_string(s.value);
}

GroupElement deserialize_element(const PairingSuite& suite, std::string_view text) {
    Parts p = split(text);
    if (p.suite != suite.id()) {
        throw MalformedEncoding("suite id '" + std::string(p.suite) + "' does not match " + suite.id());
    }
    Group g;
    if (p.tag == "G1") {
        g = Group::G1;
    } else if (p.tag == "GT") {
        g = Group::GT;
    } else {
        throw MalformedEncoding("unknown group tag '" + std::string(p.tag) + "'");
    }
    uint64_t exp = parse_decimal(p.value);
    if (exp >= suite.order()) {
        throw MalformedEncoding("exponent " + std::string(p.value) + " out of range for q=" +
                                std::to_string(suite.order()));
    }
    return GroupElement{g, exp, suite.order()};
}

Scalar deserialize_scalar(const PairingSuite& suite, std::string_view text) {
    Parts p = split(text);
    if (p.suite != suite.id()) {
        throw MalformedEncoding("suite id '" + std::string(p.suite) + "' does not match " + suite.id());
    }
    if (p.tag != "S") {
        throw MalformedEncoding("expected scalar tag S, got '" + std::string(p.tag) + "'");
    }
    uint64_t value = parse_decimal(p.value);
    if (value >= suite.order()) {
        throw MalformedEncoding("scalar " + std::string(p.value) + " out of range for q=" +
                                std::to_string(suite.order()));
    }
    return Scalar{value, suite.order()};
}

std::string base64_encode(std::string_view data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    size_t i = 0;
    while (i + 3 <= data.size()) {
        uint32_t n = (uint8_t(data[i]) << 16) | (uint8_t(data[i + 1]) << 8) | uint8_t(data[i + 2]);
        out.push_back(kB64Alphabet[(n >> 18) & 63]);
        out.push_back(kB64Alphabet[(n >> 12) & 63]);
        out.push_back(kB64Alphabet[(n >> 6) & 63]);
        out.push_back(kB64Alphabet[n & 63]);
        i += 3;
    }
    size_t rest = data.size() - i;
    if (rest == 1) {
        uint32_t n = uint8_t(data[i]) << 16;
        out.push_back(kB64Alphabet[(n >> 18) & 63]);
        out.push_back(kB64Alphabet[(n >> 12) & 63]);
        out.append("==");
    } else if (rest == 2) {
        uint32_t n = (uint8_t(data[i]) << 16) | (uint8_t(data[i + 1]) << 8);
        out.push_back(kB64Alphabet[(n >> 18) & 63]);
        out.push_back(kB64Alphabet[(n >> 12) & 63]);
        out.push_back(kB64Alphabet[(n >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

std::string base64_decode(std::string_view text) {
    if (text.size() % 4 != 0) {
        throw MalformedEncoding("base64 length not a multiple of 4");
    }
    auto value_of = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    std::string out;
    out.reserve(text.size() / 4 * 3);
    for (size_t i = 0; i < text.size(); i += 4) {
        int pad = 0;
        uint32_t n = 0;
        for (size_t j = 0; j < 4; ++j) {
            char c = text[i + j];
            if (c == '=') {
                if (i + 4 != text.size() || j < 2) {
                    throw MalformedEncoding("base64 padding misplaced");
                }
                ++pad;
                n <<= 6;
            } else {
                if (pad > 0) {
                    throw MalformedEncoding("base64 data after padding");
                }
                int v = value_of(c);
                if (v < 0) {
                    throw MalformedEncoding("base64 contains invalid character");
                }
                n = (n << 6) | static_cast<uint32_t>(v);
            }
        }
        out.push_back(static_cast<char>((n >> 16) & 0xFF));
        if (pad < 2) out.push_back(static_cast<char>((n >> 8) & 0xFF));
        if (pad < 1) out.push_back(static_cast<char>(n & 0xFF));
    }
    return out;
}

}  // namespace clsforge
