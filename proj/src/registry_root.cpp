// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/registry/root.hpp"

#include <algorithm>

#include "chaindns/codec.hpp"
#include "chaindns/hash.hpp"

namespace chaindns::rootreg {

namespace {
// value at storage_key_for(tld): ChainSpec || registrant
Bytes encode_record(const ChainSpec& spec, const AccountId& registrant) {
    codec::Writer w;
    codec::write_chain_spec(w, spec);
    w.id(registrant);
    return std::move(w).take();
}

std::optional<TldRecord> decode_record(const std::string& tld, const Bytes& raw) {
    codec::Reader r(raw);
    TldRecord rec;
    rec.tld = tld;
    rec.chain_spec = codec::read_chain_spec(r);
    rec.registrant = r.id<AccountIdTag>();
    if (!r.complete()) return std::nullopt;
    return rec;
}
}  // namespace

Errc register_tld(ChainState& state, const AccountId& origin, const std::string& tld,
                  const ChainSpec& chain_spec) {
    if (!valid_label(tld)) return Errc::InvalidLabel;
    Bytes key = storage_key_for(tld);
    if (state.get(key)) return Errc::TldTaken;
    state.put(std::move(key), encode_record(chain_spec, origin));
    return Errc::Ok;
}

std::optional<ChainSpec> query_tld(const ChainState& state, const std::string& tld) {
    auto rec = query_tld_record(state, tld);
    if (!rec) return std::nullopt;
    return rec->chain_spec;
}

std::optional<TldRecord> query_tld_record(const ChainState& state, const std::string& tld) {
    const Bytes* raw = state.get(storage_key_for(tld));
    if (!raw) return std::nullopt;
    return decode_record(tld, *raw);
}

std::vector<std::pair<std::string, AccountId>> list_tlds(const ChainState& state) {
    std::vector<std::pair<std::string, AccountId>> out;
    for (const auto& [key, value] : state.entries) {
        auto name = parse_storage_key(key);
        if (!name) continue;
        auto rec = decode_record(*name, value);
        if (!rec) continue;
        out.emplace_back(rec->tld, rec->registrant);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace chaindns::rootreg
