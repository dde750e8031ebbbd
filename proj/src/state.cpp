// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/state.hpp"

#include "chaindns/codec.hpp"
#include "chaindns/hash.hpp"

namespace chaindns {

std::optional<std::uint64_t> ChainState::get_u64(const Bytes& key) const {
    const Bytes* v = get(key);
    if (!v) return std::nullopt;
    codec::Reader r(*v);
    std::uint64_t out = r.u64le();
    if (!r.complete()) return std::nullopt;
    return out;
}

void ChainState::put_u64(const Bytes& key, std::uint64_t v) {
    codec::Writer w;
    w.u64le(v);
    put(key, std::move(w).take());
}

Hash32 state_root(const ChainState& state) {
    codec::Writer w;
    w.u64le(state.entries.size());
    for (const auto& [key, value] : state.entries) {
        w.u32le(static_cast<std::uint32_t>(key.size()));
        w.raw(key);
        w.u32le(static_cast<std::uint32_t>(value.size()));
        w.raw(value);
    }
    w.u64le(state.fee_pool);
    return digest256(w.bytes());
}

}  // namespace chaindns
