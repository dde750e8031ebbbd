// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "chaindns/bench.hpp"
#include "chaindns/hash.hpp"
#include "chaindns/resolver.hpp"

using namespace chaindns;
using bench::BenchPlan;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path temp_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("chaindns-test-" + tag);
    std::filesystem::remove_all(dir);
    return dir;
}

BenchPlan small_plan(std::uint64_t seed = 42) {
    BenchPlan plan;
    plan.seed = seed;
    plan.tlds = {{"chain", 4, 1.0}, {"asset", 4, 1.0}};
    plan.domain_count = 10;
    return plan;
}

}  // namespace

TEST_CASE("storage model: multiplicative formula reproduces the reference figures") {
    // 244,000 domains/day at 767 KiB each
    bench::StorageModel model{244000.0, 767.0 / 1024.0, 0.3648};
    auto growth = bench::storage_growth(model);
    CHECK(growth.single_network_mb_per_day ==
          doctest::Approx(182761.0).epsilon(0.001));  // within 0.1%
    CHECK(growth.top_tld_mb_per_day == doctest::Approx(66671.0).epsilon(0.001));

    // a 1000-byte kilobyte does not reproduce them
    bench::StorageModel metric{244000.0, 767.0 / 1000.0, 0.3648};
    CHECK(bench::storage_growth(metric).single_network_mb_per_day >
          182761.0 * 1.01);

    CHECK(bench::storage_growth({0, 5.0, 0.5}).single_network_mb_per_day == 0);
    CHECK(bench::storage_growth({0, 5.0, 0.5}).top_tld_mb_per_day == 0);
}

TEST_CASE("nearest-rank percentiles agree with a brute-force oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 200;
        std::vector<double> samples(n);
        for (auto& s : samples) s = static_cast<double>(rng() % 10000) / 10.0;
        std::vector<double> sorted = samples;
        std::sort(sorted.begin(), sorted.end());
        for (double pct : {1.0, 25.0, 50.0, 90.0, 95.0, 99.0, 100.0}) {
            // oracle: index ceil(p/100*n) in the 1-indexed sorted sample
            std::size_t rank = static_cast<std::size_t>(
                std::ceil(pct / 100.0 * static_cast<double>(n)));
            rank = std::max<std::size_t>(rank, 1);
            double expected = sorted[rank - 1];
            CHECK(bench::nearest_rank_percentile(samples, pct) == expected);
        }
    }
    CHECK(bench::nearest_rank_percentile({}, 50.0) == 0);
}

TEST_CASE("plan json: defaults, overrides, validation") {
    auto plan = bench::plan_from_json(R"({
        "seed": 7, "mode": "tcp", "timing": "wall",
        "tlds": [{"name": "chain", "nodes": 5, "weight": 2.0}],
        "domains": 4, "rps": 100, "duration_s": 2
    })");
    REQUIRE(plan.ok());
    CHECK(plan.value().seed == 7);
    CHECK(plan.value().mode == "tcp");
    CHECK(plan.value().tlds.size() == 1);
    CHECK(plan.value().tlds[0].nodes == 5);
    CHECK(plan.value().domain_count == 4);

    auto explicit_domains = bench::plan_from_json(R"({"domains": ["a.chain", "b.chain"]})");
    REQUIRE(explicit_domains.ok());
    CHECK(explicit_domains.value().explicit_domains.size() == 2);

    CHECK_FALSE(bench::plan_from_json("[]").ok());
    CHECK_FALSE(bench::plan_from_json(R"({"mode": "quantum"})").ok());
    CHECK_FALSE(bench::plan_from_json(R"({"timing": "sundial"})").ok());
}

TEST_CASE("orchestrate: topology up, every planned domain resolvable") {
    BenchPlan plan = small_plan();
    std::string error;
    auto topo = bench::orchestrate(plan, &error);
    REQUIRE_MESSAGE(topo != nullptr, error);
    CHECK(topo->domains.size() == 10);

    resolver::Resolver probe({topo->root_spec, 0, 0}, topo->transport);
    for (const auto& domain : topo->domains) {
        CHECK(probe.resolve(domain).ok());
    }
    // control names fail with the declared errors
    CHECK(probe.resolve("unplanned.chain").error() == Errc::DomainNotFound);
    CHECK(probe.resolve("x.unknown").error() == Errc::TldNotFound);
}

TEST_CASE("orchestrate: duplicate domains fail fast naming the offender") {
    BenchPlan plan = small_plan();
    plan.explicit_domains = {"dup.chain", "dup.chain"};
    std::string error;
    auto topo = bench::orchestrate(plan, &error);
    CHECK(topo == nullptr);
    CHECK(error.find("dup.chain") != std::string::npos);
}

TEST_CASE("orchestrate: a zero-domain plan is a valid topology") {
    BenchPlan plan = small_plan();
    plan.domain_count = 0;
    std::string error;
    auto topo = bench::orchestrate(plan, &error);
    REQUIRE_MESSAGE(topo != nullptr, error);
    resolver::Resolver probe({topo->root_spec, 0, 0}, topo->transport);
    CHECK(probe.resolve("anything.chain").error() == Errc::DomainNotFound);
}

TEST_CASE("orchestrate: inconsistent load arithmetic is refused") {
    BenchPlan plan = small_plan();
    plan.rps = 100;
    plan.duration_s = 10;
    plan.total_requests = 55;  // != 1000
    std::string error;
    CHECK(bench::orchestrate(plan, &error) == nullptr);
}

TEST_CASE("run_load: every request gets an outcome; all succeed on a live topology") {
    BenchPlan plan = small_plan();
    plan.rps = 1000;
    plan.total_requests = 500;
    std::string error;
    auto topo = bench::orchestrate(plan, &error);
    REQUIRE_MESSAGE(topo != nullptr, error);

    auto report = bench::run_load(*topo, plan);
    CHECK(report.count == 500);
    CHECK(report.success_count == 500);
    CHECK(report.error_count == 0);
    CHECK(report.samples.size() == 500);
    CHECK(report.success_count + report.error_count == report.count);
    // virtual timing: resolve is two transport hops
    CHECK(report.median_ms == doctest::Approx(0.55));

    // percentiles recomputed from the emitted samples match the report
    std::vector<double> latencies;
    for (const auto& s : report.samples) latencies.push_back(s.latency_ms);
    CHECK(report.median_ms == bench::nearest_rank_percentile(latencies, 50));
    CHECK(report.p95_ms == bench::nearest_rank_percentile(latencies, 95));
    CHECK(report.p99_ms == bench::nearest_rank_percentile(latencies, 99));
}

TEST_CASE("run_load: zero rps yields an empty report") {
    BenchPlan plan = small_plan();
    plan.rps = 0;
    plan.total_requests = 0;
    std::string error;
    auto topo = bench::orchestrate(plan, &error);
    REQUIRE(topo != nullptr);
    auto report = bench::run_load(*topo, plan);
    CHECK(report.count == 0);
    CHECK(report.samples.empty());
}

TEST_CASE("run_load: draws of a revoked domain are counted as errors, reproducibly") {
    BenchPlan plan = small_plan(1234);
    plan.rps = 1000;
    plan.total_requests = 300;
    std::string error;
    auto topo = bench::orchestrate(plan, &error);
    REQUIRE_MESSAGE(topo != nullptr, error);

    // revoke one planned domain directly with the privileged worker origin
    const std::string victim = topo->domains[3];
    auto parsed = parse_domain(victim);
    netsim::Network* tld = topo->sim->find("tld-" + parsed->tld);
    NodeId prev_author = tld->chain().blocks().back().block.author;
    tld->submit_next(worker_account_for(prev_author), Call{call::RevokeDomain{victim}}, 1);
    topo->sim->advance(1);

    auto report = bench::run_load(*topo, plan);
    // oracle: regenerate the seeded draw sequence
    std::mt19937_64 rng(plan.seed);
    std::uint64_t victim_draws = 0;
    for (std::uint64_t i = 0; i < plan.total_requests; ++i) {
        if (topo->domains[rng() % topo->domains.size()] == victim) ++victim_draws;
    }
    CHECK(report.error_count == victim_draws);
    for (const auto& s : report.samples) {
        if (s.outcome != "ok") CHECK(s.outcome == "DomainRevoked");
    }
}

TEST_CASE("report_emit: header-only for empty, one row per request, byte-stable") {
    auto dir = temp_dir("emit");
    bench::LatencyReport empty;
    REQUIRE(bench::report_emit(empty, dir.string()).ok());
    CHECK(slurp(dir / "load.csv") == "request_index,start_ns,latency_ms,outcome\n");

    bench::LatencyReport three;
    three.count = 3;
    three.success_count = 2;
    three.error_count = 1;
    three.samples = {{0, 0, 0.5, "ok"}, {1, 1000, 0.75, "ok"}, {2, 2000, 1.25, "TldNotFound"}};
    REQUIRE(bench::report_emit(three, dir.string()).ok());
    std::string csv = slurp(dir / "load.csv");
    CHECK(csv ==
          "request_index,start_ns,latency_ms,outcome\n"
          "0,0,0.500000,ok\n"
          "1,1000,0.750000,ok\n"
          "2,2000,1.250000,TldNotFound\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("seeded load runs emit byte-identical reports") {
    BenchPlan plan = small_plan(555);
    plan.rps = 2000;
    plan.total_requests = 400;

    auto run_once = [&](const std::string& tag) {
        std::string error;
        auto topo = bench::orchestrate(plan, &error);
        REQUIRE_MESSAGE(topo != nullptr, error);
        auto report = bench::run_load(*topo, plan);
        auto dir = temp_dir(tag);
        REQUIRE(bench::report_emit(report, dir.string()).ok());
        auto csv = slurp(dir / "load.csv");
        auto summary = slurp(dir / "summary.json");
        std::filesystem::remove_all(dir);
        return std::make_pair(csv, summary);
    };
    auto first = run_once("rep-a");
    auto second = run_once("rep-b");
    CHECK(first.first == second.first);
    CHECK(first.second == second.second);
}

TEST_CASE("wall timing mode: issue rate never exceeds 1.05x the target") {
    BenchPlan plan = small_plan(9);
    plan.timing = "wall";
    plan.rps = 400;
    plan.duration_s = 0.5;
    plan.total_requests = 200;
    plan.concurrency = 8;
    std::string error;
    auto topo = bench::orchestrate(plan, &error);
    REQUIRE_MESSAGE(topo != nullptr, error);

    auto report = bench::run_load(*topo, plan);
    CHECK(report.count == 200);
    // per_second buckets are issue counts per wall second of the run
    for (std::uint64_t issued : report.per_second) {
        CHECK(static_cast<double>(issued) <= 1.05 * plan.rps);
    }
    CHECK(report.max_ms >= report.median_ms);
}
