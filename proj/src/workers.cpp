// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/workers.hpp"

#include <algorithm>

#include "chaindns/codec.hpp"
#include "chaindns/hash.hpp"
#include "chaindns/registry/asset.hpp"
#include "chaindns/registry/root.hpp"
#include "chaindns/registry/tld.hpp"

namespace chaindns::workers {

namespace {

// Cross-chain domain lookup shared by validation and re-verification.
struct RemoteDomain {
    bool transport_ok = false;
    bool found = false;
    bool malformed = false;
    DomainInformation info;
};

RemoteDomain fetch_remote_domain(const WorkerContext& ctx, const ChainSpec& tld_spec,
                                 const std::string& domain) {
    RemoteDomain out;
    Bytes key = storage_key_for(domain);
    Result<std::optional<Bytes>> reply = Errc::TransportError;
    for (int attempt = 0; attempt < std::max(1, ctx.settings.transport_attempts); ++attempt) {
        reply = ctx.transport.get_storage(tld_spec, key);
        if (reply.ok()) break;
    }
    if (!reply.ok()) return out;
    out.transport_ok = true;
    const std::optional<Bytes>& value = reply.value();
    if (!value) return out;
    auto decoded = decode_remote_domain_info(*value);
    if (!decoded.ok()) {
        out.malformed = true;
        return out;
    }
    out.found = true;
    out.info = std::move(decoded).take();
    return out;
}

}  // namespace

std::string_view validation_cause_name(ValidationCause cause) {
    switch (cause) {
        case ValidationCause::None: return "None";
        case ValidationCause::UnknownTld: return "UnknownTld";
        case ValidationCause::DomainNotFound: return "DomainNotFound";
        case ValidationCause::DomainAvailable: return "DomainAvailable";
        case ValidationCause::RequesterMismatch: return "RequesterMismatch";
        case ValidationCause::TransportTimeout: return "TransportTimeout";
        case ValidationCause::MalformedRecord: return "MalformedRecord";
    }
    return "Unknown";
}

std::vector<std::string> run_mandatory_participation(const WorkerContext& ctx, PeerCache& cache,
                                                     const std::set<NodeId>& current_participants) {
    std::vector<std::string> revoked;
    auto snapshot = ctx.chain.snapshot();
    for (const NodeId& node : cache) {
        if (current_participants.contains(node)) continue;
        auto domain = tldreg::maintainer_domain(*snapshot, node);
        if (!domain) continue;
        if (ctx.is_author) {
            ctx.chain.submit(call::RevokeDomain{*domain}, ctx.settings.tx_fee);
            revoked.push_back(*domain);
        }
    }
    cache = current_participants;
    return revoked;
}

std::vector<ValidationOutcome> run_asset_validation(const WorkerContext& ctx,
                                                    std::uint32_t max_requests) {
    std::vector<ValidationOutcome> outcomes;
    auto snapshot = ctx.chain.snapshot();
    auto pending = assetreg::pending_requests(*snapshot, max_requests);

    for (const auto& entry : pending) {
        ValidationOutcome outcome;
        outcome.seq = entry.seq;
        outcome.request = entry.request;

        auto reject = [&](ValidationCause cause) {
            outcome.status = ValidationStatus::Rejected;
            outcome.cause = cause;
            ctx.chain.submit(call::DiscardRequest{entry.seq}, ctx.settings.tx_fee);
        };

        auto parsed = parse_domain(entry.request.domain);
        if (!parsed) {
            reject(ValidationCause::UnknownTld);
            outcomes.push_back(std::move(outcome));
            continue;
        }
        auto tld_spec = rootreg::query_tld(*snapshot, parsed->tld);
        if (!tld_spec) {
            reject(ValidationCause::UnknownTld);
            outcomes.push_back(std::move(outcome));
            continue;
        }

        RemoteDomain remote = fetch_remote_domain(ctx, *tld_spec, entry.request.domain);
        if (!remote.transport_ok) {
            // leave the request queued; it is retried next cycle and pruned
            // at expiry if the network never answers
            outcome.status = ValidationStatus::Deferred;
            outcome.cause = ValidationCause::TransportTimeout;
            outcomes.push_back(std::move(outcome));
            continue;
        }
        if (remote.malformed) {
            reject(ValidationCause::MalformedRecord);
            outcomes.push_back(std::move(outcome));
            continue;
        }
        if (!remote.found) {
            reject(ValidationCause::DomainNotFound);
            outcomes.push_back(std::move(outcome));
            continue;
        }
        if (remote.info.available) {
            reject(ValidationCause::DomainAvailable);
            outcomes.push_back(std::move(outcome));
            continue;
        }
        if (remote.info.creator != entry.request.requester) {
            reject(ValidationCause::RequesterMismatch);
            outcomes.push_back(std::move(outcome));
            continue;
        }

        outcome.status = ValidationStatus::Verified;
        auto providers = assetreg::query_asset_providers(*snapshot, entry.request.asset_hash);
        bool already_listed = std::find(providers.begin(), providers.end(),
                                        entry.request.domain) != providers.end();
        if (already_listed) {
            // nothing to add on-chain; just consume the request
            ctx.chain.submit(call::DiscardRequest{entry.seq}, ctx.settings.tx_fee);
        } else {
            ctx.chain.submit(
                call::SubmitVerifiedDomain{entry.request.domain, entry.request.asset_hash,
                                           entry.seq},
                ctx.settings.tx_fee);
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

ReverificationOutcome run_provider_reverification(const WorkerContext& ctx,
                                                  std::uint64_t batch_size) {
    ReverificationOutcome out;
    auto snapshot = ctx.chain.snapshot();
    out.batch = assetreg::peek_cursor_batch(*snapshot, batch_size);
    if (out.batch.empty()) return out;

    // advance first so the cursor moves over the batch examined here before
    // any removal from this cycle shrinks the provider list
    ctx.chain.submit(call::AdvanceCursor{batch_size}, ctx.settings.tx_fee);

    for (const auto& domain : out.batch) {
        bool dead = false;
        auto parsed = parse_domain(domain);
        std::optional<ChainSpec> tld_spec;
        if (parsed) tld_spec = rootreg::query_tld(*snapshot, parsed->tld);
        if (!parsed || !tld_spec) {
            // no TLD network to ask; the domain cannot resolve either
            dead = true;
        } else {
            RemoteDomain remote = fetch_remote_domain(ctx, *tld_spec, domain);
            if (!remote.transport_ok) {
                out.skipped.push_back(domain);
                continue;
            }
            dead = !remote.found || remote.malformed || remote.info.available;
        }
        if (dead) {
            ctx.chain.submit(call::RemoveProvider{domain}, ctx.settings.tx_fee);
            out.removals.push_back(domain);
        }
    }
    return out;
}

Result<DomainInformation> decode_remote_domain_info(const Bytes& raw) {
    return codec::decode_domain_info(raw);
}

}  // namespace chaindns::workers
