// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "chaindns/chain.hpp"
#include "chaindns/hash.hpp"
#include "chaindns/registry/asset.hpp"
#include "chaindns/transaction.hpp"

using namespace chaindns;

namespace {

AssetHash asset(int i) { return asset_hash_of("asset-" + std::to_string(i)); }

// Dual-map equivalence: the stored inverse map must equal the one rebuilt
// from the asset->providers side (as sets).
void check_dual_maps(const ChainState& state) {
    auto rebuilt = assetreg::rebuild_provider_assets(state);
    std::map<std::string, std::vector<AssetHash>> stored;
    for (const auto& [domain, hashes] : rebuilt) {
        (void)hashes;
        stored[domain] = assetreg::provider_assets(state, domain);
    }
    // every stored provider entry must also be reachable from the rebuild
    for (const auto& domain : assetreg::provider_list(state)) {
        REQUIRE(rebuilt.contains(domain));
        stored[domain] = assetreg::provider_assets(state, domain);
    }
    REQUIRE(stored.size() == rebuilt.size());
    for (auto& [domain, hashes] : rebuilt) {
        auto lhs = hashes;
        auto rhs = stored[domain];
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
    }
}

}  // namespace

TEST_CASE("register_asset_for_domain: queued without validation, capped") {
    ChainState state;
    AccountId requester = derive_account("req");

    CHECK(assetreg::register_asset_for_domain(state, requester, "alpha.chain", asset(1), 7, 3) ==
          Errc::Ok);
    // a nonexistent domain is still queued; rejection happens at validation
    CHECK(assetreg::register_asset_for_domain(state, requester, "ghost.chain", asset(2), 7, 3) ==
          Errc::Ok);
    CHECK(assetreg::register_asset_for_domain(state, requester, "alpha.chain", asset(3), 8, 3) ==
          Errc::Ok);
    CHECK(assetreg::pending_count(state) == 3);
    CHECK(assetreg::register_asset_for_domain(state, requester, "alpha.chain", asset(4), 8, 3) ==
          Errc::QueueFull);

    auto pending = assetreg::pending_requests(state);
    REQUIRE(pending.size() == 3);
    CHECK(pending[0].request.domain == "alpha.chain");
    CHECK(pending[0].request.timestamp == 7);
    CHECK(pending[1].request.domain == "ghost.chain");
    CHECK(pending[2].request.timestamp == 8);
}

TEST_CASE("submit_verified_domain: dual maps updated symmetrically, duplicates refused") {
    ChainState state;
    assetreg::register_asset_for_domain(state, derive_account("req"), "alpha.chain", asset(1), 1,
                                        100);

    CHECK(assetreg::submit_verified_domain(state, "alpha.chain", asset(1), 0, false) ==
          Errc::NotAuthorized);
    CHECK(assetreg::submit_verified_domain(state, "alpha.chain", asset(1), 0, true) == Errc::Ok);
    CHECK(assetreg::query_asset_providers(state, asset(1)) ==
          std::vector<std::string>{"alpha.chain"});
    CHECK(assetreg::provider_assets(state, "alpha.chain") == std::vector<AssetHash>{asset(1)});
    CHECK(assetreg::pending_count(state) == 0);  // the request was consumed
    check_dual_maps(state);

    ChainState before = state;
    CHECK(assetreg::submit_verified_domain(state, "alpha.chain", asset(1), call::kNoSeqHint,
                                           true) == Errc::DuplicateProvider);
    CHECK(state == before);  // idempotent no-op
}

TEST_CASE("prune_expired_requests: strict-greater boundary") {
    ChainState state;
    assetreg::register_asset_for_domain(state, derive_account("req"), "a.chain", asset(1), 10,
                                        100);

    CHECK(assetreg::prune_expired_requests(state, 60, 50) == 0);  // 60 == 10+50: retained
    CHECK(assetreg::pending_count(state) == 1);
    CHECK(assetreg::prune_expired_requests(state, 61, 50) == 1);  // 61 > 10+50: pruned
    CHECK(assetreg::pending_count(state) == 0);
    CHECK(assetreg::prune_expired_requests(state, 62, 50) == 0);  // empty queue
}

TEST_CASE("prune only removes the expired prefix of the queue") {
    ChainState state;
    for (int i = 0; i < 5; ++i) {
        assetreg::register_asset_for_domain(state, derive_account("req"), "a.chain", asset(i),
                                            10 + static_cast<std::uint64_t>(i) * 10, 100);
    }
    // lifetime 15 at block 40: timestamps 10 and 20 expire, 30+ survive
    CHECK(assetreg::prune_expired_requests(state, 40, 15) == 2);
    auto pending = assetreg::pending_requests(state);
    REQUIRE(pending.size() == 3);
    CHECK(pending[0].request.timestamp == 30);
}

TEST_CASE("query_asset_providers: registration order, unknown hash empty") {
    ChainState state;
    CHECK(assetreg::query_asset_providers(state, asset(9)).empty());
    assetreg::submit_verified_domain(state, "beta.chain", asset(9), call::kNoSeqHint, true);
    assetreg::submit_verified_domain(state, "alpha.chain", asset(9), call::kNoSeqHint, true);
    CHECK(assetreg::query_asset_providers(state, asset(9)) ==
          std::vector<std::string>{"beta.chain", "alpha.chain"});
}

TEST_CASE("remove_provider: every asset list is cleansed and the inverse entry dropped") {
    ChainState state;
    for (int i = 0; i < 3; ++i) {
        assetreg::submit_verified_domain(state, "alpha.chain", asset(i), call::kNoSeqHint, true);
    }
    assetreg::submit_verified_domain(state, "beta.chain", asset(0), call::kNoSeqHint, true);

    CHECK(assetreg::remove_provider(state, "alpha.chain", false) == Errc::NotAuthorized);
    CHECK(assetreg::remove_provider(state, "ghost.chain", true) == Errc::UnknownProvider);

    std::uint64_t touched = 0;
    CHECK(assetreg::remove_provider(state, "alpha.chain", true, &touched) == Errc::Ok);
    CHECK(touched == 3);
    CHECK(assetreg::provider_assets(state, "alpha.chain").empty());
    CHECK(assetreg::query_asset_providers(state, asset(0)) ==
          std::vector<std::string>{"beta.chain"});
    CHECK(assetreg::query_asset_providers(state, asset(1)).empty());
    check_dual_maps(state);
}

TEST_CASE("advance_cursor: wrap arithmetic matches the worked example") {
    ChainState state;
    // five providers in lexicographic order: p0 < p1 < p2 < p3 < p4
    for (int i = 0; i < 5; ++i) {
        assetreg::submit_verified_domain(state, "p" + std::to_string(i) + ".chain", asset(i),
                                         call::kNoSeqHint, true);
    }
    // position the cursor at 3
    assetreg::advance_cursor(state, 3);
    CHECK(assetreg::cursor_position(state) == 3);

    auto batch = assetreg::advance_cursor(state, 4);
    CHECK(batch == std::vector<std::string>{"p3.chain", "p4.chain", "p0.chain", "p1.chain"});
    CHECK(assetreg::cursor_position(state) == 2);
}

TEST_CASE("advance_cursor: empty provider set") {
    ChainState state;
    CHECK(assetreg::advance_cursor(state, 4).empty());
    CHECK(assetreg::cursor_position(state) == 0);
}

TEST_CASE("cursor coverage: every provider visited within ceil(n/batch) calls") {
    ChainState state;
    const int n = 11;
    const std::uint64_t batch = 4;
    for (int i = 0; i < n; ++i) {
        assetreg::submit_verified_domain(state, "p" + std::to_string(i) + ".chain", asset(i),
                                         call::kNoSeqHint, true);
    }
    // start from an arbitrary cursor position
    assetreg::advance_cursor(state, 7);
    std::set<std::string> seen;
    std::uint64_t calls = (n + batch - 1) / batch;
    for (std::uint64_t c = 0; c < calls; ++c) {
        // peek must agree with the mutating call
        auto peeked = assetreg::peek_cursor_batch(state, batch);
        auto got = assetreg::advance_cursor(state, batch);
        CHECK(peeked == got);
        seen.insert(got.begin(), got.end());
    }
    CHECK(seen.size() == static_cast<std::size_t>(n));
}

TEST_CASE("discard_request removes one pending entry by sequence") {
    ChainState state;
    assetreg::register_asset_for_domain(state, derive_account("r"), "a.chain", asset(1), 1, 10);
    assetreg::register_asset_for_domain(state, derive_account("r"), "b.chain", asset(2), 1, 10);
    auto pending = assetreg::pending_requests(state);
    REQUIRE(pending.size() == 2);

    CHECK(assetreg::discard_request(state, pending[0].seq, false) == Errc::NotAuthorized);
    CHECK(assetreg::discard_request(state, pending[0].seq, true) == Errc::Ok);
    CHECK(assetreg::discard_request(state, pending[0].seq, true) == Errc::NotFound);
    pending = assetreg::pending_requests(state);
    REQUIRE(pending.size() == 1);
    CHECK(pending[0].request.domain == "b.chain");
}

TEST_CASE("the default queue cap admits 10,000 requests and refuses the 10,001st") {
    ChainState state;
    RuntimeConfig defaults;
    for (int i = 0; i < 10000; ++i) {
        REQUIRE(assetreg::register_asset_for_domain(state, derive_account("r"), "a.chain",
                                                    asset(i), 1,
                                                    defaults.queue_cap) == Errc::Ok);
    }
    CHECK(assetreg::register_asset_for_domain(state, derive_account("r"), "a.chain", asset(10000),
                                              1, defaults.queue_cap) == Errc::QueueFull);
    CHECK(assetreg::pending_count(state) == 10000);
}

TEST_CASE("privilege safety: no sequence of non-worker transactions touches the maps or cursor") {
    ChainState state;
    // a populated discovery state with a known privileged worker
    AccountId privileged = worker_account_for(derive_node_id(1, "auth", 0));
    for (int i = 0; i < 4; ++i) {
        assetreg::submit_verified_domain(state, "p" + std::to_string(i) + ".chain", asset(i),
                                         call::kNoSeqHint, true);
    }
    assetreg::advance_cursor(state, 2);
    auto providers_before = assetreg::stored_asset_providers(state);
    auto provider_list_before = assetreg::provider_list(state);
    auto cursor_before = assetreg::cursor_position(state);

    RuntimeConfig rt;
    rt.kind = ChainKind::Root;
    ApplyContext ctx{10, privileged, rt};
    std::mt19937_64 rng(31337);
    for (int step = 0; step < 400; ++step) {
        AccountId origin = derive_account("rogue" + std::to_string(rng() % 7));
        Call call;
        switch (rng() % 4) {
            case 0: call = call::SubmitVerifiedDomain{"evil.chain", asset(99), 0}; break;
            case 1: call = call::RemoveProvider{"p0.chain"}; break;
            case 2: call = call::AdvanceCursor{3}; break;
            default: call = call::DiscardRequest{0}; break;
        }
        Transaction tx{origin, expected_nonce(state, origin), call, 1};
        TxApply applied = apply_transaction(state, tx, ctx);
        CHECK(applied.included);
        CHECK(applied.result == Errc::NotAuthorized);
    }
    CHECK(assetreg::stored_asset_providers(state) == providers_before);
    CHECK(assetreg::provider_list(state) == provider_list_before);
    CHECK(assetreg::cursor_position(state) == cursor_before);
}

TEST_CASE("dual-map equivalence holds through randomized churn") {
    ChainState state;
    std::mt19937_64 rng(123);
    std::vector<std::string> domains;
    for (int i = 0; i < 8; ++i) domains.push_back("d" + std::to_string(i) + ".chain");

    for (int step = 0; step < 300; ++step) {
        const std::string& domain = domains[rng() % domains.size()];
        if (rng() % 4 == 0 && !assetreg::provider_assets(state, domain).empty()) {
            CHECK(assetreg::remove_provider(state, domain, true) == Errc::Ok);
        } else {
            assetreg::submit_verified_domain(state, domain, asset(static_cast<int>(rng() % 12)),
                                             call::kNoSeqHint, true);
        }
        check_dual_maps(state);
    }
}
