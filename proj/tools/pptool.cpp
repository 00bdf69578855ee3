// pptool: power propagation time toolkit.
//
// Subcommands: compute (per-graph invariant reports), verify (run one named
// characterization or bound over a corpus), ng-scan (sum of propagation
// times of a graph and its complement), families (emit named graphs as
// graph6 lines).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ppt/cli.hpp"

namespace {

std::pair<int, int> parse_range_arg(const std::string& s) {
    std::size_t dots = s.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power propagation time toolkit"};
    app.require_subcommand(1);

    ppt::RunConfig cfg;
    std::string format = "tsv";
    std::string n_range;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--workers", cfg.workers, "worker threads (default 1)");
        sub->add_option("--format", format, "output format: tsv | json-lines")
            ->check(CLI::IsMember({"tsv", "json-lines"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "invariant report per input graph");
    compute->add_option("--k", cfg.k, "force capacity (default 1)");
    compute->add_option("--g6", cfg.g6, "one graph6 string");
    compute->add_option("--file", cfg.file, "graph6 file, one graph per line");
    compute->add_option("--family", cfg.family, "family descriptor, e.g. path:6 or spider:1,1,4");
    compute->add_flag("--trace", cfg.with_trace, "include the efficient witness trace");
    compute->add_flag("--connected-only", cfg.connected_only, "drop disconnected input graphs");
    compute->add_flag("--skip-malformed", cfg.skip_malformed, "skip bad lines instead of aborting");
    add_common(compute);

    CLI::App* verify = app.add_subcommand("verify", "run one named verification");
    int vk = 0, vkmax = 0, vnmax = 0;
    verify->add_option("tag", cfg.theorem, "theorem tag, e.g. path-cycle-ppt")->required();
    verify->add_option("--k", vk, "smallest k to check");
    verify->add_option("--k-max", vkmax, "largest k to check");
    verify->add_option("--n-max", vnmax, "corpus size cap");
    verify->add_option("--n-range,--n", n_range, "parameter range for family tags, e.g. 9..15");
    add_common(verify);

    CLI::App* ng = app.add_subcommand("ng-scan", "scan ppt(G)+ppt(~G) against the order");
    ng->add_option("--n-max", cfg.n_max, "largest built-in order (<= 8)");
    ng->add_option("--n-min", cfg.n_min, "smallest built-in order");
    ng->add_option("--file", cfg.file, "external graph6 corpus instead of enumeration");
    ng->add_flag("--all-graphs", cfg.all_graphs, "include disconnected graphs");
    ng->add_flag("--connected-only", cfg.connected_only, "drop disconnected graphs from --file input");
    ng->add_flag("--list-extremal", cfg.list_extremal, "list every graph with sum = n");
    ng->add_flag("--skip-malformed", cfg.skip_malformed, "skip bad lines instead of aborting");
    add_common(ng);

    CLI::App* families = app.add_subcommand("families", "emit named families as graph6");
    families->add_option("descriptor", cfg.family,
                         "family descriptor, e.g. spider:1,1,4 or ng:9..11")
        ->required();
    families->add_flag("--subdivided", cfg.subdivided, "emit the subdivided gadget");

    CLI11_PARSE(app, argc, argv);

    cfg.format = format == "json-lines" ? ppt::RunConfig::Format::JsonLines
                                        : ppt::RunConfig::Format::Tsv;
    try {
        if (compute->parsed()) return ppt::run_compute(cfg, std::cout, std::cerr);
        if (verify->parsed()) {
            cfg.k_lo = vk;
            cfg.k_hi = vkmax;
            cfg.verify_n_max = vnmax;
            if (!n_range.empty()) {
                auto [lo, hi] = parse_range_arg(n_range);
                cfg.range_lo = lo;
                cfg.range_hi = hi;
            }
            return ppt::run_verify(cfg, std::cout, std::cerr);
        }
        if (ng->parsed()) return ppt::run_ng_scan(cfg, std::cout, std::cerr);
        if (families->parsed()) return ppt::run_families(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
