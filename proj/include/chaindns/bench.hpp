// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "chaindns/netsim/netsim.hpp"
#include "chaindns/netsim/tcp.hpp"
#include "chaindns/resolver.hpp"
#include "chaindns/result.hpp"

namespace chaindns::bench {

struct TldPlan {
    std::string name;
    std::uint32_t nodes = 4;
    double weight = 1.0;
};

struct BenchPlan {
    std::uint64_t seed = 42;
    std::string mode = "inproc";     // inproc | tcp
    std::string timing = "virtual";  // virtual (deterministic) | wall (monotonic clock)
    std::uint64_t tick_ms = 1000;
    std::uint32_t root_nodes = 4;
    std::vector<TldPlan> tlds{{"chain", 4, 1.0}, {"asset", 4, 1.0}};
    std::uint32_t domain_count = 10;
    std::vector<std::string> explicit_domains;  // overrides domain_count when set
    std::string distribution = "uniform";       // uniform | weighted
    std::uint32_t min_maintainers = 1;
    double rps = 0;
    double duration_s = 0;
    std::uint64_t total_requests = 0;  // rps * duration_s when 0 and both given
    std::uint32_t concurrency = 8;
    std::size_t cache_capacity = 0;  // resolver cache during load; 0 = off
};

Result<BenchPlan> plan_from_json(const std::string& text);
Result<BenchPlan> plan_from_file(const std::string& path);

// The orchestrated topology: a running simulator populated per plan, with
// the transport and root spec a client needs to talk to it.
struct Topology {
    std::unique_ptr<netsim::Simulator> sim;
    std::unique_ptr<netsim::TcpGateway> gateway;  // tcp mode only
    std::shared_ptr<netsim::RpcTransport> transport;
    ChainSpec root_spec;
    std::vector<std::string> domains;  // claim manifest
    std::string mode;
    std::string timing;
};

// Spawns all networks, registers every TLD on the root and claims every
// domain. Fails fast: returns null with `error` naming the first failing
// step.
std::unique_ptr<Topology> orchestrate(const BenchPlan& plan, std::string* error);

struct LoadSample {
    std::uint64_t request_index = 0;
    std::uint64_t start_ns = 0;
    double latency_ms = 0;
    std::string outcome;  // "ok" or error name
};

struct LatencyReport {
    std::uint64_t count = 0;
    std::uint64_t success_count = 0;
    std::uint64_t error_count = 0;
    double median_ms = 0;
    double p95_ms = 0;
    double p99_ms = 0;
    double max_ms = 0;
    std::vector<std::uint64_t> per_second;  // requests issued per second of run
    std::vector<LoadSample> samples;        // ordered by request_index
    std::uint64_t seed = 0;
    std::string mode;
    std::string timing;
};

// Issues resolve calls for uniformly random registered domains. Per-request
// errors are counted, never thrown. In virtual timing mode latencies follow
// a deterministic per-hop cost model so seeded runs are byte-reproducible;
// in wall mode a monotonic clock times each request individually.
LatencyReport run_load(Topology& topology, const BenchPlan& plan);

// Nearest-rank percentile over the full sample (no interpolation).
double nearest_rank_percentile(std::vector<double> samples, double pct);

// CSV (request_index,start_ns,latency_ms,outcome) plus a JSON summary,
// both byte-stable for a fixed seed in virtual timing mode.
Result<void> report_emit(const LatencyReport& report, const std::string& out_dir);

struct StorageModel {
    double domain_growth_rate = 0;  // domains per day
    double string_size_mb = 0;      // megabytes per connection string
    double tld_share = 1.0;         // fraction handled by the busiest TLD
};

struct StorageGrowth {
    double single_network_mb_per_day = 0;
    double top_tld_mb_per_day = 0;
};

StorageGrowth storage_growth(const StorageModel& model);

// Scripted end-to-end walkthrough: orchestrate, claim, register assets,
// resolve, inject a maintainer disconnect and show the revocation ripple
// through to asset discovery. Returns false on any unexpected step.
bool run_demo(std::uint64_t seed, std::ostream& out);

}  // namespace chaindns::bench
