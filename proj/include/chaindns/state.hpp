// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "chaindns/bytes.hpp"
#include "chaindns/types.hpp"

namespace chaindns {

// Key-value consensus state of one chain. A deterministic function of the
// genesis state and the ordered block sequence.
struct ChainState {
    std::map<Bytes, Bytes> entries;
    std::uint64_t fee_pool = 0;  // cumulative collected fees

    const Bytes* get(const Bytes& key) const {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    }
    void put(Bytes key, Bytes value) { entries[std::move(key)] = std::move(value); }
    bool erase(const Bytes& key) { return entries.erase(key) > 0; }

    std::optional<std::uint64_t> get_u64(const Bytes& key) const;
    void put_u64(const Bytes& key, std::uint64_t v);

    // Visit entries whose key starts with `prefix`, in key order.
    template <typename F>
    void for_each_prefix(const Bytes& prefix, F&& f) const {
        for (auto it = entries.lower_bound(prefix); it != entries.end(); ++it) {
            if (!starts_with(it->first, prefix)) break;
            f(it->first, it->second);
        }
    }

    bool operator==(const ChainState&) const = default;
};

// Digest of the full state: every entry in key order plus the fee pool.
Hash32 state_root(const ChainState& state);

}  // namespace chaindns
