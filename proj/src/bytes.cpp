// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/bytes.hpp"

#include <algorithm>
#include <array>

namespace chaindns {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

constexpr char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
}
}  // namespace

std::string to_hex(const std::uint8_t* data, std::size_t len) {
    std::string out;
    out.reserve(len * 2);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(kHexDigits[data[i] >> 4]);
        out.push_back(kHexDigits[data[i] & 0x0f]);
    }
    return out;
}

std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }

std::optional<Bytes> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) return std::nullopt;
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_value(hex[i]);
        int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

std::string base64_encode(const Bytes& b) {
    std::string out;
    out.reserve((b.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= b.size(); i += 3) {
        std::uint32_t v = b[i] << 16 | b[i + 1] << 8 | b[i + 2];
        out.push_back(kB64Alphabet[v >> 18]);
        out.push_back(kB64Alphabet[v >> 12 & 0x3f]);
        out.push_back(kB64Alphabet[v >> 6 & 0x3f]);
        out.push_back(kB64Alphabet[v & 0x3f]);
    }
    std::size_t rest = b.size() - i;
    if (rest == 1) {
        std::uint32_t v = b[i] << 16;
        out.push_back(kB64Alphabet[v >> 18]);
        out.push_back(kB64Alphabet[v >> 12 & 0x3f]);
        out.append("==");
    } else if (rest == 2) {
        std::uint32_t v = b[i] << 16 | b[i + 1] << 8;
        out.push_back(kB64Alphabet[v >> 18]);
        out.push_back(kB64Alphabet[v >> 12 & 0x3f]);
        out.push_back(kB64Alphabet[v >> 6 & 0x3f]);
        out.push_back('=');
    }
    return out;
}

std::optional<Bytes> base64_decode(std::string_view s) {
    if (s.size() % 4 != 0) return std::nullopt;
    Bytes out;
    out.reserve(s.size() / 4 * 3);
    for (std::size_t i = 0; i < s.size(); i += 4) {
        int pad = 0;
        std::uint32_t v = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            char c = s[i + j];
            if (c == '=') {
                // padding only allowed in the tail positions of the last group
                if (i + 4 != s.size() || j < 2) return std::nullopt;
                ++pad;
                v <<= 6;
                continue;
            }
            if (pad > 0) return std::nullopt;
            int d = b64_value(c);
            if (d < 0) return std::nullopt;
            v = v << 6 | static_cast<std::uint32_t>(d);
        }
        out.push_back(static_cast<std::uint8_t>(v >> 16));
        if (pad < 2) out.push_back(static_cast<std::uint8_t>(v >> 8));
        if (pad < 1) out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

bool contains_subsequence(const Bytes& haystack, const Bytes& needle) {
    if (needle.empty()) return true;
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
           haystack.end();
}

}  // namespace chaindns
