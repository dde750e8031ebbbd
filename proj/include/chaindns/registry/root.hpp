// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaindns/errc.hpp"
#include "chaindns/state.hpp"
#include "chaindns/types.hpp"

// Root-network registry: maps TLD names to the connection information of
// the network managing each TLD. Records live at storage_key_for(tld).
namespace chaindns::rootreg {

// Stores TldRecord{tld, chain_spec, origin} if the TLD is unclaimed.
Errc register_tld(ChainState& state, const AccountId& origin, const std::string& tld,
                  const ChainSpec& chain_spec);

std::optional<ChainSpec> query_tld(const ChainState& state, const std::string& tld);
std::optional<TldRecord> query_tld_record(const ChainState& state, const std::string& tld);

// Complete listing, lexicographically ordered by TLD name.
std::vector<std::pair<std::string, AccountId>> list_tlds(const ChainState& state);

}  // namespace chaindns::rootreg
