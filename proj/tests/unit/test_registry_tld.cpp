// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include <doctest.h>

#include <random>

#include "chaindns/hash.hpp"
#include "chaindns/registry/tld.hpp"
#include "chaindns/state.hpp"

using namespace chaindns;

namespace {

ChainSpec spec_of(const std::string& name) {
    return ChainSpec{name, name + "-id", to_bytes("payload:" + name)};
}

NodeId node(int i) { return derive_node_id(100, "nodes", static_cast<std::uint32_t>(i)); }

Errc register_simple(ChainState& state, const std::string& domain, const AccountId& owner,
                     std::vector<NodeId> maintainers, std::uint32_t min_maintainers = 1) {
    return tldreg::register_domain(state, owner, domain, spec_of(domain), maintainers, "chain",
                                   min_maintainers);
}

}  // namespace

TEST_CASE("register_domain: happy path and the documented refusals") {
    ChainState state;
    AccountId owner = derive_account("owner");

    CHECK(register_simple(state, "alpha.chain", owner, {node(1)}) == Errc::Ok);
    auto info = tldreg::query_domain(state, "alpha.chain");
    REQUIRE(info.has_value());
    CHECK(info->creator == owner);
    CHECK_FALSE(info->available);
    CHECK(info->maintainers == std::vector<NodeId>{node(1)});

    CHECK(register_simple(state, "alpha.chain", derive_account("rival"), {node(2)}) ==
          Errc::DomainTaken);
    CHECK(register_simple(state, "alpha.other", owner, {node(2)}) == Errc::WrongTld);
    CHECK(register_simple(state, "beta.chain", owner, {}, 1) == Errc::InsufficientMaintainers);
    CHECK(register_simple(state, "beta.chain", owner, {node(2)}, 2) ==
          Errc::InsufficientMaintainers);
    CHECK(register_simple(state, "bad..chain", owner, {node(2)}) == Errc::InvalidLabel);
    CHECK(register_simple(state, "UPPER.chain", owner, {node(2)}) == Errc::InvalidLabel);
}

TEST_CASE("register_domain: a node may maintain at most one live domain") {
    ChainState state;
    CHECK(register_simple(state, "alpha.chain", derive_account("a"), {node(1)}) == Errc::Ok);
    CHECK(register_simple(state, "beta.chain", derive_account("b"), {node(1)}) ==
          Errc::MaintainerConflict);
    // duplicates within one submission are refused too
    CHECK(register_simple(state, "beta.chain", derive_account("b"), {node(2), node(2)}) ==
          Errc::MaintainerConflict);
    CHECK(register_simple(state, "beta.chain", derive_account("b"), {node(2), node(3)}) ==
          Errc::Ok);
}

TEST_CASE("revoke_domain: worker-only, clears the record and unbinds maintainers") {
    ChainState state;
    register_simple(state, "alpha.chain", derive_account("a"), {node(1), node(2)}, 1);

    CHECK(tldreg::revoke_domain(state, "alpha.chain", false) == Errc::NotAuthorized);
    CHECK_FALSE(tldreg::query_domain(state, "alpha.chain")->available);

    CHECK(tldreg::revoke_domain(state, "missing.chain", true) == Errc::NotFound);
    CHECK(tldreg::revoke_domain(state, "alpha.chain", true) == Errc::Ok);

    auto info = tldreg::query_domain(state, "alpha.chain");
    REQUIRE(info.has_value());
    CHECK(info->available);
    CHECK_FALSE(info->chain_specifications.has_value());
    CHECK(info->maintainers.empty());
    CHECK_FALSE(tldreg::maintainer_domain(state, node(1)).has_value());
    CHECK_FALSE(tldreg::maintainer_domain(state, node(2)).has_value());

    CHECK(tldreg::revoke_domain(state, "alpha.chain", true) == Errc::AlreadyAvailable);
}

TEST_CASE("revoked domains can be claimed again by a new network") {
    ChainState state;
    register_simple(state, "alpha.chain", derive_account("a"), {node(1)});
    tldreg::revoke_domain(state, "alpha.chain", true);

    CHECK(register_simple(state, "alpha.chain", derive_account("b"), {node(3)}) == Errc::Ok);
    auto info = tldreg::query_domain(state, "alpha.chain");
    CHECK(info->creator == derive_account("b"));
    CHECK(tldreg::maintainer_domain(state, node(3)) == "alpha.chain");
    // the old maintainer is free to serve another domain now
    CHECK(register_simple(state, "beta.chain", derive_account("c"), {node(1)}) == Errc::Ok);
}

TEST_CASE("amend_chainspec: only the creator of a live domain may amend") {
    ChainState state;
    AccountId owner = derive_account("owner");
    register_simple(state, "alpha.chain", owner, {node(1)});

    CHECK(tldreg::amend_chainspec(state, owner, "alpha.chain", spec_of("v2")) == Errc::Ok);
    CHECK(*tldreg::query_domain(state, "alpha.chain")->chain_specifications == spec_of("v2"));

    ChainState before = state;
    CHECK(tldreg::amend_chainspec(state, derive_account("mallory"), "alpha.chain",
                                  spec_of("evil")) == Errc::NotOwner);
    CHECK(state == before);  // ownership safety: nothing changed

    CHECK(tldreg::amend_chainspec(state, owner, "missing.chain", spec_of("x")) == Errc::NotFound);
    tldreg::revoke_domain(state, "alpha.chain", true);
    CHECK(tldreg::amend_chainspec(state, owner, "alpha.chain", spec_of("x")) == Errc::Unavailable);
}

TEST_CASE("maintainer_domain matches a brute-force rebuild of the index") {
    ChainState state;
    CHECK_FALSE(tldreg::maintainer_domain(state, node(9)).has_value());

    // a randomized register/revoke churn, checking the stored index against
    // the reconstruction after every step
    std::mt19937_64 rng(77);
    std::vector<std::string> live;
    for (int step = 0; step < 200; ++step) {
        if (live.empty() || rng() % 3 != 0) {
            std::string domain = "d" + std::to_string(step) + ".chain";
            std::vector<NodeId> maintainers;
            int count = 1 + static_cast<int>(rng() % 3);
            for (int m = 0; m < count; ++m) {
                maintainers.push_back(derive_node_id(rng(), "maint", 0));
            }
            if (tldreg::register_domain(state, derive_account("o" + std::to_string(step)), domain,
                                        spec_of(domain), maintainers, "chain", 1) == Errc::Ok) {
                live.push_back(domain);
            }
        } else {
            std::size_t pick = rng() % live.size();
            REQUIRE(tldreg::revoke_domain(state, live[pick], true) == Errc::Ok);
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        CHECK(tldreg::stored_maintainer_index(state) == tldreg::rebuild_maintainer_index(state));
    }

    // point lookups agree with the rebuilt map
    auto rebuilt = tldreg::rebuild_maintainer_index(state);
    for (const auto& [maintainer, domain] : rebuilt) {
        CHECK(tldreg::maintainer_domain(state, maintainer) == domain);
    }
}

TEST_CASE("query_domain: live record, revoked record, missing record") {
    ChainState state;
    CHECK_FALSE(tldreg::query_domain(state, "ghost.chain").has_value());
    register_simple(state, "alpha.chain", derive_account("a"), {node(1)});
    CHECK_FALSE(tldreg::query_domain(state, "alpha.chain")->available);
    tldreg::revoke_domain(state, "alpha.chain", true);
    auto info = tldreg::query_domain(state, "alpha.chain");
    REQUIRE(info.has_value());
    CHECK(info->available);
}
