// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include <doctest.h>

#include <random>

#include "chaindns/hash.hpp"
#include "chaindns/netsim/netsim.hpp"
#include "chaindns/registry/asset.hpp"
#include "chaindns/registry/tld.hpp"
#include "chaindns/resolver.hpp"

using namespace chaindns;
using netsim::PeerEvent;
using netsim::Simulator;
using resolver::Resolver;
using resolver::ResolverConfig;

namespace {

// A root plus one "chain" TLD network with alpha.chain registered.
struct Fixture {
    Simulator sim{77};
    ChainSpec root_spec;
    std::shared_ptr<netsim::InprocTransport> transport;
    AccountId owner = derive_account("owner");

    Fixture() {
        netsim::NetworkConfig root;
        root.network_id = "root";
        root.kind = ChainKind::Root;
        REQUIRE(sim.spawn_network(root).ok());
        netsim::NetworkConfig tld;
        tld.network_id = "tld-chain";
        tld.kind = ChainKind::Tld;
        tld.tld = "chain";
        REQUIRE(sim.spawn_network(tld).ok());

        root_spec = ChainSpec{"root", "root", netsim::make_sim_payload("root")};
        ChainSpec tld_spec{"tld-chain", "tld-chain", netsim::make_sim_payload("tld-chain")};
        sim.find("root")->submit_next(derive_account("op"),
                                      Call{call::RegisterTld{"chain", tld_spec}}, 1);
        sim.find("tld-chain")
            ->submit_next(owner,
                          Call{call::RegisterDomain{"alpha.chain", domain_spec("alpha.chain"),
                                                    {derive_node_id(77, "m", 0)}}},
                          1);
        sim.advance(1);
        transport = std::make_shared<netsim::InprocTransport>(sim);
    }

    static ChainSpec domain_spec(const std::string& domain) {
        return ChainSpec{domain, domain, netsim::make_sim_payload("target:" + domain)};
    }

    Resolver make_resolver(std::size_t cache_capacity = 0, std::uint64_t ttl_ms = 60'000) {
        return Resolver(ResolverConfig{root_spec, cache_capacity, ttl_ms}, transport,
                        [this] { return sim.now_ms(); });
    }
};

}  // namespace

TEST_CASE("resolve: full hierarchy walk returns the registered spec") {
    Fixture f;
    auto r = f.make_resolver();
    auto resolved = r.resolve("alpha.chain");
    REQUIRE(resolved.ok());
    CHECK(resolved.value() == Fixture::domain_spec("alpha.chain"));

    // oracle: the spec stored on the TLD chain itself
    auto stored = tldreg::query_domain(*f.sim.find("tld-chain")->chain().snapshot(),
                                       "alpha.chain");
    CHECK(resolved.value() == *stored->chain_specifications);
}

TEST_CASE("resolve: each failure mode maps to its declared error") {
    Fixture f;
    auto r = f.make_resolver();
    CHECK(r.resolve("alpha.nosuchtld").error() == Errc::TldNotFound);
    CHECK(r.resolve("ghost.chain").error() == Errc::DomainNotFound);
    CHECK(r.resolve("not a domain").error() == Errc::InvalidDomain);
    CHECK(r.resolve("a.b.c").error() == Errc::InvalidDomain);

    f.sim.set_reachable("tld-chain", false);
    CHECK(r.resolve("alpha.chain").error() == Errc::TransportError);
    f.sim.set_reachable("root", false);
    CHECK(r.resolve("alpha.chain").error() == Errc::TransportError);
    f.sim.set_reachable("root", true);
    f.sim.set_reachable("tld-chain", true);

    // revoke alpha.chain: the privileged origin of the next block is the
    // worker of the block just sealed, so this lands first try
    netsim::Network* tld = f.sim.find("tld-chain");
    NodeId prev_author = tld->chain().blocks().back().block.author;
    tld->submit_next(worker_account_for(prev_author), Call{call::RevokeDomain{"alpha.chain"}}, 1);
    f.sim.advance(1);
    REQUIRE(tldreg::query_domain(*tld->chain().snapshot(), "alpha.chain")->available);
    CHECK(r.resolve("alpha.chain").error() == Errc::DomainRevoked);
}

TEST_CASE("error totality: every syntactically valid name yields exactly one declared outcome") {
    Fixture f;
    auto r = f.make_resolver();
    std::mt19937_64 rng(5);
    const char* tlds[] = {"chain", "nosuch", "x"};
    for (int i = 0; i < 200; ++i) {
        std::string name = (rng() % 2 ? "alpha" : "n" + std::to_string(rng() % 5));
        std::string domain = name + "." + tlds[rng() % 3];
        auto outcome = r.resolve(domain);
        if (outcome.ok()) {
            CHECK(domain == "alpha.chain");
        } else {
            bool declared = outcome.error() == Errc::InvalidDomain ||
                            outcome.error() == Errc::TldNotFound ||
                            outcome.error() == Errc::DomainNotFound ||
                            outcome.error() == Errc::DomainRevoked ||
                            outcome.error() == Errc::TransportError;
            CHECK(declared);
        }
    }
}

TEST_CASE("claim_domain: protocol outcomes") {
    Fixture f;
    auto r = f.make_resolver();
    AccountId newcomer = derive_account("newcomer");

    CHECK(r.claim_domain("gamma.chain", Fixture::domain_spec("gamma.chain"),
                         {derive_node_id(77, "m", 1)}, newcomer)
              .ok());
    f.sim.advance(1);
    auto resolved = r.resolve("gamma.chain");
    REQUIRE(resolved.ok());
    CHECK(resolved.value() == Fixture::domain_spec("gamma.chain"));

    CHECK(r.claim_domain("alpha.chain", Fixture::domain_spec("alpha.chain"),
                         {derive_node_id(77, "m", 2)}, newcomer)
              .error() == Errc::DomainTaken);
    CHECK(r.claim_domain("x.nosuchtld", Fixture::domain_spec("x.nosuchtld"),
                         {derive_node_id(77, "m", 3)}, newcomer)
              .error() == Errc::TldNotFound);
    CHECK(r.claim_domain("y.chain", Fixture::domain_spec("y.chain"), {}, newcomer).error() ==
          Errc::InsufficientMaintainers);
    CHECK(r.claim_domain("bad name", Fixture::domain_spec("z.chain"),
                         {derive_node_id(77, "m", 4)}, newcomer)
              .error() == Errc::InvalidDomain);
}

TEST_CASE("register_assets: one pending request per identifier, hashed client-side") {
    Fixture f;
    auto r = f.make_resolver();
    REQUIRE(r.register_assets("alpha.chain", {"token/gold", "token/silver", "token/tin"},
                              f.owner)
                .ok());
    netsim::Network* root = f.sim.find("root");
    CHECK(root->pool_size() == 3);
    REQUIRE(r.register_assets("alpha.chain", {}, f.owner).ok());
    CHECK(root->pool_size() == 3);

    // hash privacy: the serialized transactions never contain the raw id
    std::size_t checked = 0;
    f.sim.advance(1);
    const auto& sealed = root->chain().blocks().back();
    for (const auto& tx : sealed.block.transactions) {
        Bytes raw = encode_transaction(tx);
        for (const std::string& id : {"token/gold", "token/silver", "token/tin"}) {
            CHECK_FALSE(contains_subsequence(raw, to_bytes(id)));
        }
        ++checked;
    }
    CHECK(checked == 3);
    CHECK(assetreg::pending_count(*root->chain().snapshot()) == 3);
}

TEST_CASE("resolve_asset: live providers resolve, dead ones are omitted with a warning") {
    Fixture f;
    auto r = f.make_resolver();
    // alpha.chain provides the asset; validation runs over the next blocks
    REQUIRE(r.register_assets("alpha.chain", {"widget"}, f.owner).ok());
    f.sim.advance(2);

    auto found = r.resolve_asset("widget");
    REQUIRE(found.ok());
    REQUIRE(found.value().providers.size() == 1);
    CHECK(found.value().providers[0].first == "alpha.chain");
    CHECK(found.value().providers[0].second == Fixture::domain_spec("alpha.chain"));
    CHECK(found.value().warnings.empty());

    CHECK(r.resolve_asset("never-registered").value().providers.empty());

    // revoke the provider's domain on the TLD chain; the root seals before
    // the TLD chain within a tick, so for one tick the root's provider list
    // is stale and the resolver must omit the dead provider client-side
    netsim::Network* tld = f.sim.find("tld-chain");
    NodeId prev_author = tld->chain().blocks().back().block.author;
    tld->submit_next(worker_account_for(prev_author), Call{call::RevokeDomain{"alpha.chain"}}, 1);
    f.sim.advance(1);
    REQUIRE(tldreg::query_domain(*tld->chain().snapshot(), "alpha.chain")->available);
    REQUIRE_FALSE(assetreg::query_asset_providers(*f.sim.find("root")->chain().snapshot(),
                                                  asset_hash_of("widget"))
                      .empty());
    auto stale = r.resolve_asset("widget");
    REQUIRE(stale.ok());
    CHECK(stale.value().providers.empty());
    REQUIRE(stale.value().warnings.size() == 1);
    CHECK(stale.value().warnings[0].find("alpha.chain") != std::string::npos);

    // one re-verification sweep later the on-chain list catches up too
    f.sim.advance(2);
    CHECK(assetreg::query_asset_providers(*f.sim.find("root")->chain().snapshot(),
                                          asset_hash_of("widget"))
              .empty());
}

TEST_CASE("cache: transparency, ttl expiry and lru eviction") {
    Fixture f;
    auto cached = f.make_resolver(8, 5'000);
    auto uncached = f.make_resolver(0, 0);

    auto first = cached.resolve("alpha.chain");
    REQUIRE(first.ok());
    CHECK(cached.cache_size() == 1);
    // cached and uncached agree while nothing mutates
    CHECK(cached.resolve("alpha.chain").value() == uncached.resolve("alpha.chain").value());

    // a cache hit answers without touching the network
    f.sim.set_reachable("root", false);
    f.sim.set_reachable("tld-chain", false);
    CHECK(cached.resolve("alpha.chain").ok());
    CHECK(uncached.resolve("alpha.chain").error() == Errc::TransportError);

    // after ttl expiry the entry is dropped and the network is consulted again
    f.sim.advance(6);  // 6 ticks * 1000 ms > 5000 ms ttl
    CHECK(cached.resolve("alpha.chain").error() == Errc::TransportError);
    f.sim.set_reachable("root", true);
    f.sim.set_reachable("tld-chain", true);
    CHECK(cached.resolve("alpha.chain").ok());
}

TEST_CASE("cache transparency: cached and uncached resolvers agree on a static topology") {
    Fixture f;
    // a few more live domains to vary the query mix
    netsim::Network* tld = f.sim.find("tld-chain");
    for (int i = 0; i < 4; ++i) {
        std::string domain = "extra" + std::to_string(i) + ".chain";
        tld->submit_next(derive_account("o" + std::to_string(i)),
                         Call{call::RegisterDomain{domain, Fixture::domain_spec(domain),
                                                   {derive_node_id(177, "em", i)}}},
                         1);
    }
    f.sim.advance(1);

    auto cached = f.make_resolver(4, 1'000'000);  // capacity below the name-pool size
    auto uncached = f.make_resolver(0, 0);
    std::mt19937_64 rng(88);
    std::vector<std::string> pool = {"alpha.chain",  "extra0.chain", "extra1.chain",
                                     "extra2.chain", "extra3.chain", "ghost.chain",
                                     "x.unknown"};
    for (int i = 0; i < 300; ++i) {
        const std::string& domain = pool[rng() % pool.size()];
        auto with_cache = cached.resolve(domain);
        auto without = uncached.resolve(domain);
        CHECK(with_cache.ok() == without.ok());
        if (with_cache.ok()) {
            CHECK(with_cache.value() == without.value());
        } else {
            CHECK(with_cache.error() == without.error());
        }
    }
}

TEST_CASE("reads hit sealed snapshots: a submission is invisible until its block seals") {
    Fixture f;
    auto r = f.make_resolver();
    AccountId owner = derive_account("late-owner");
    REQUIRE(r.claim_domain("pending.chain", Fixture::domain_spec("pending.chain"),
                           {derive_node_id(77, "pm", 0)}, owner)
                .ok());
    // still queued: resolution reads the latest sealed state only
    CHECK(r.resolve("pending.chain").error() == Errc::DomainNotFound);
    f.sim.advance(1);
    CHECK(r.resolve("pending.chain").ok());
}

TEST_CASE("cache: capacity bound evicts least recently used entries") {
    resolver::SpecCache cache(2, 1'000'000);
    ChainSpec a{"a", "a", {}};
    ChainSpec b{"b", "b", {}};
    ChainSpec c{"c", "c", {}};
    cache.put("a.chain", a, 0);
    cache.put("b.chain", b, 1);
    CHECK(cache.get("a.chain", 2).has_value());  // refresh a
    cache.put("c.chain", c, 3);                  // evicts b
    CHECK(cache.size() == 2);
    CHECK(cache.get("a.chain", 4).has_value());
    CHECK_FALSE(cache.get("b.chain", 4).has_value());
    CHECK(cache.get("c.chain", 4).has_value());

    resolver::SpecCache disabled(0, 1'000);
    disabled.put("a.chain", a, 0);
    CHECK(disabled.size() == 0);
    CHECK_FALSE(disabled.get("a.chain", 0).has_value());
}
