// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chaindns/errc.hpp"
#include "chaindns/state.hpp"
#include "chaindns/types.hpp"

// Per-TLD registry: full domain names mapped to DomainInformation, plus the
// inverse maintainer-to-domain map used by the mandatory-participation
// worker. Domain records live at storage_key_for(domain) so remote workers
// can derive the key and fetch them with a raw state query.
namespace chaindns::tldreg {

Errc register_domain(ChainState& state, const AccountId& origin, const std::string& domain,
                     const ChainSpec& chain_spec, const std::vector<NodeId>& maintainers,
                     const std::string& network_tld, std::uint32_t min_maintainers);

// Worker-privileged. Marks the domain available, clears its connection
// information and unbinds all of its maintainers.
Errc revoke_domain(ChainState& state, const std::string& domain, bool worker_origin);

Errc amend_chainspec(ChainState& state, const AccountId& origin, const std::string& domain,
                     const ChainSpec& new_spec);

std::optional<DomainInformation> query_domain(const ChainState& state, const std::string& domain);

// Constant-time inverse lookup: which domain does this node maintain?
std::optional<std::string> maintainer_domain(const ChainState& state, const NodeId& node);

// All live (available == false) domain records, keyed by name. Test oracle
// and worker helper; walks the whole state.
std::map<std::string, DomainInformation> live_domains(const ChainState& state);

// Rebuilds the maintainer index from the domain records alone. The stored
// index must always equal this.
std::map<NodeId, std::string> rebuild_maintainer_index(const ChainState& state);
std::map<NodeId, std::string> stored_maintainer_index(const ChainState& state);

}  // namespace chaindns::tldreg
