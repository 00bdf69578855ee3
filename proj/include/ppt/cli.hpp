#pragma once

#include <iosfwd>
#include <string>

namespace ppt {

// Configuration shared by the CLI subcommands. Exactly one input source
// (g6 / file / family) may be set where a command takes graphs.
struct RunConfig {
    int k = 1;
    std::string g6;
    std::string file;
    std::string family;
    int n_min = 1;
    int n_max = 8;
    bool all_graphs = false;      // ng-scan: include disconnected graphs
    bool connected_only = false;  // file inputs: drop disconnected graphs
    bool with_trace = false;
    int workers = 1;
    enum class Format { Tsv, JsonLines };
    Format format = Format::Tsv;
    bool list_extremal = false;
    bool skip_malformed = false;
    std::string theorem;   // verify
    int verify_n_max = 0;  // verify: 0 keeps the tag's default corpus size
    int k_lo = 0;          // verify: 0 keeps the tag's default k range
    int k_hi = 0;
    int range_lo = 0;  // verify/families parameter ranges
    int range_hi = 0;
    bool subdivided = false;  // families: emit the subdivided gadget
};

// Each command writes records to `out`, diagnostics to `err`, and returns
// the process exit code: 0 ok / all pass, 1 verification failure,
// 2 input error.
int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_ng_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_families(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ppt
