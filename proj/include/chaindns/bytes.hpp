// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chaindns {

using Bytes = std::vector<std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(const Bytes& b) {
    return std::string(b.begin(), b.end());
}

std::string to_hex(const std::uint8_t* data, std::size_t len);
std::string to_hex(const Bytes& b);
std::optional<Bytes> from_hex(std::string_view hex);

std::string base64_encode(const Bytes& b);
std::optional<Bytes> base64_decode(std::string_view s);

// True if `haystack` contains `needle` as a contiguous byte subsequence.
bool contains_subsequence(const Bytes& haystack, const Bytes& needle);

inline bool starts_with(const Bytes& b, const Bytes& prefix) {
    return b.size() >= prefix.size() &&
           std::equal(prefix.begin(), prefix.end(), b.begin());
}

inline void append(Bytes& out, const Bytes& more) {
    out.insert(out.end(), more.begin(), more.end());
}

}  // namespace chaindns
