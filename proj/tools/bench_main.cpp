// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
//
// Command-line orchestrator and benchmark harness for the chaindns
// simulator: topology setup, load generation with latency percentiles, the
// storage-growth calculator and a scripted demo.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "chaindns/bench.hpp"
#include "chaindns/codec.hpp"

namespace {

// CHAINDNS_SEED overrides any --seed flag.
void apply_seed_env(std::uint64_t& seed) {
    if (const char* env = std::getenv("CHAINDNS_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') seed = v;
    }
}

chaindns::bench::BenchPlan load_plan_or_default(const std::string& scenario_path,
                                                bool* ok) {
    *ok = true;
    if (scenario_path.empty()) return {};
    auto plan = chaindns::bench::plan_from_file(scenario_path);
    if (!plan.ok()) {
        std::cerr << "error: cannot load scenario file " << scenario_path << " ("
                  << chaindns::errc_name(plan.error()) << ")\n";
        *ok = false;
        return {};
    }
    return std::move(plan).take();
}

int do_orchestrate(const std::string& scenario_path, const std::string& root_spec_out) {
    bool ok = false;
    auto plan = load_plan_or_default(scenario_path, &ok);
    if (!ok) return 1;
    apply_seed_env(plan.seed);

    std::string error;
    auto topo = chaindns::bench::orchestrate(plan, &error);
    if (!topo) {
        std::cerr << "setup failed: " << error << "\n";
        return 1;
    }
    std::cout << "topology ready: root + " << plan.tlds.size() << " TLD network(s), "
              << topo->domains.size() << " domain(s) registered and resolvable\n";
    for (const auto& domain : topo->domains) std::cout << "  " << domain << "\n";
    if (!root_spec_out.empty()) {
        if (!chaindns::codec::save_chain_spec_file(topo->root_spec, root_spec_out).ok()) {
            std::cerr << "error: cannot write root spec to " << root_spec_out << "\n";
            return 1;
        }
        std::cout << "root connection details written to " << root_spec_out << "\n";
    }
    return 0;
}

int do_load(chaindns::bench::BenchPlan plan, const std::string& out_dir) {
    apply_seed_env(plan.seed);
    std::string error;
    auto topo = chaindns::bench::orchestrate(plan, &error);
    if (!topo) {
        std::cerr << "setup failed: " << error << "\n";
        return 1;
    }
    auto report = chaindns::bench::run_load(*topo, plan);
    auto emitted = chaindns::bench::report_emit(report, out_dir);
    if (!emitted.ok()) {
        std::cerr << "error: cannot write report to " << out_dir << "\n";
        return 1;
    }
    std::cout << "requests: " << report.count << " (ok " << report.success_count << ", errors "
              << report.error_count << ")\n"
              << "latency ms: median " << report.median_ms << ", p95 " << report.p95_ms
              << ", p99 " << report.p99_ms << ", max " << report.max_ms << "\n"
              << "report written to " << out_dir << "/load.csv and " << out_dir
              << "/summary.json\n";
    return 0;
}

int do_storage(double domains_per_day, double string_kb, unsigned kb, double tld_share) {
    chaindns::bench::StorageModel model;
    model.domain_growth_rate = domains_per_day;
    model.string_size_mb = string_kb / static_cast<double>(kb);
    model.tld_share = tld_share;
    auto growth = chaindns::bench::storage_growth(model);
    std::cout << "single-network growth: " << growth.single_network_mb_per_day << " MB/day\n"
              << "top TLD (share " << tld_share << "): " << growth.top_tld_mb_per_day
              << " MB/day\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaindns benchmark and orchestration harness"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string root_spec_out;
    auto* orchestrate_cmd =
        app.add_subcommand("orchestrate", "spawn and populate a topology from a scenario file");
    orchestrate_cmd->add_option("--scenario", scenario_path, "plan JSON file")->required();
    orchestrate_cmd->add_option("--root-spec-out", root_spec_out,
                                "write the root network's ChainSpec JSON here");

    chaindns::bench::BenchPlan load_plan;
    std::string load_scenario_path;
    std::string out_dir = "bench-out";
    auto* load_cmd = app.add_subcommand("load", "run a resolution load test");
    load_cmd->add_option("--rps", load_plan.rps, "target requests per second")->required();
    load_cmd->add_option("--duration", load_plan.duration_s, "duration in seconds")->required();
    load_cmd->add_option("--total", load_plan.total_requests,
                         "request count (defaults to rps*duration)");
    load_cmd->add_option("--seed", load_plan.seed, "RNG seed (CHAINDNS_SEED overrides)");
    load_cmd->add_option("--mode", load_plan.mode, "inproc|tcp")
        ->check(CLI::IsMember({"inproc", "tcp"}));
    load_cmd->add_option("--timing", load_plan.timing,
                         "virtual (deterministic) | wall (monotonic clock)")
        ->check(CLI::IsMember({"virtual", "wall"}));
    load_cmd->add_option("--concurrency", load_plan.concurrency, "load generator threads");
    load_cmd->add_option("--domains", load_plan.domain_count, "domains to register");
    load_cmd->add_option("--scenario", load_scenario_path, "plan JSON file (flags override)");
    load_cmd->add_option("--out", out_dir, "output directory")->required();

    double domains_per_day = 0;
    double string_kb = 0;
    unsigned kb = 1024;
    double tld_share = 1.0;
    auto* storage_cmd = app.add_subcommand("storage", "storage-growth calculator");
    storage_cmd->add_option("--domains-per-day", domains_per_day, "domain growth rate")
        ->required();
    storage_cmd->add_option("--string-kb", string_kb, "connection string size in KB")->required();
    storage_cmd->add_option("--kb", kb, "bytes per KB for the conversion (1024 or 1000)")
        ->check(CLI::IsMember({1024u, 1000u}));
    storage_cmd->add_option("--tld-share", tld_share, "busiest TLD share, 0..1");

    std::uint64_t demo_seed = 42;
    auto* demo_cmd = app.add_subcommand("demo", "scripted end-to-end walkthrough");
    demo_cmd->add_option("--seed", demo_seed, "RNG seed (CHAINDNS_SEED overrides)");

    CLI11_PARSE(app, argc, argv);

    if (orchestrate_cmd->parsed()) return do_orchestrate(scenario_path, root_spec_out);
    if (load_cmd->parsed()) {
        if (!load_scenario_path.empty()) {
            auto file_plan = chaindns::bench::plan_from_file(load_scenario_path);
            if (!file_plan.ok()) {
                std::cerr << "error: cannot load scenario file " << load_scenario_path << "\n";
                return 1;
            }
            chaindns::bench::BenchPlan merged = std::move(file_plan).take();
            // command-line load parameters override the file's
            merged.rps = load_plan.rps;
            merged.duration_s = load_plan.duration_s;
            if (load_plan.total_requests != 0) merged.total_requests = load_plan.total_requests;
            if (load_cmd->count("--seed") != 0) merged.seed = load_plan.seed;
            if (load_cmd->count("--mode") != 0) merged.mode = load_plan.mode;
            if (load_cmd->count("--timing") != 0) merged.timing = load_plan.timing;
            if (load_cmd->count("--concurrency") != 0) merged.concurrency = load_plan.concurrency;
            if (load_cmd->count("--domains") != 0) merged.domain_count = load_plan.domain_count;
            load_plan = std::move(merged);
        }
        return do_load(std::move(load_plan), out_dir);
    }
    if (storage_cmd->parsed()) return do_storage(domains_per_day, string_kb, kb, tld_share);
    if (demo_cmd->parsed()) {
        apply_seed_env(demo_seed);
        return chaindns::bench::run_demo(demo_seed, std::cout) ? 0 : 1;
    }
    return 1;
}
