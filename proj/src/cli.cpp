#include "ppt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ppt/corpus.hpp"
#include "ppt/gadgets.hpp"
#include "ppt/graph6.hpp"
#include "ppt/parallel.hpp"
#include "ppt/process.hpp"
#include "ppt/solver.hpp"
#include "ppt/verify.hpp"

namespace ppt {

namespace {

using nlohmann::json;

std::string join_set(VertexSet s) {
    if (s.empty()) return "-";
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    });
    return out;
}

json set_json(VertexSet s) {
    json a = json::array();
    s.for_each([&](int v) { a.push_back(v); });
    return a;
}

json trace_json(const PropagationTrace& tr) {
    json steps = json::array();
    for (VertexSet s : tr.steps) steps.push_back(set_json(s));
    json forces = json::array();
    for (const ForceList& fl : tr.forces) {
        json step = json::array();
        for (const auto& [forcer, forced] : fl) step.push_back({forcer, set_json(forced)});
        forces.push_back(std::move(step));
    }
    return {{"steps", std::move(steps)}, {"forces", std::move(forces)}, {"complete", tr.complete}};
}

std::string trace_tsv(const PropagationTrace& tr) {
    std::string out;
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        if (i) out += "|";
        std::string cell = join_set(tr.steps[i]);
        out += cell == "-" ? "" : cell;
    }
    return out;
}

std::string compute_row(const Graph& g, const RunConfig& cfg) {
    InvariantReport r = analyze(g, cfg.k);
    if (cfg.format == RunConfig::Format::JsonLines) {
        json j{{"graph6", r.graph6},
               {"n", r.n},
               {"k", r.k},
               {"gamma", r.gamma},
               {"gamma_pk", r.gamma_pk},
               {"ppt", r.ppt},
               {"PPT", r.PPT},
               {"interval_full", r.interval_full},
               {"num_min_sets", r.num_min_sets},
               {"efficient_set", set_json(r.efficient_witness)},
               {"ppt_set", set_json(r.ppt_witness)}};
        if (cfg.with_trace) j["trace"] = trace_json(run_process(g, r.efficient_witness, cfg.k));
        return j.dump();
    }
    std::ostringstream os;
    os << r.graph6 << '\t' << r.n << '\t' << r.k << '\t' << r.gamma << '\t' << r.gamma_pk << '\t'
       << r.ppt << '\t' << r.PPT << '\t' << (r.interval_full ? 1 : 0) << '\t' << r.num_min_sets
       << '\t' << join_set(r.efficient_witness) << '\t' << join_set(r.ppt_witness);
    if (cfg.with_trace) os << '\t' << trace_tsv(run_process(g, r.efficient_witness, cfg.k));
    return os.str();
}

int count_inputs(const RunConfig& cfg) {
    return (cfg.g6.empty() ? 0 : 1) + (cfg.file.empty() ? 0 : 1) + (cfg.family.empty() ? 0 : 1);
}

// "-" selects stdin.
struct InputStream {
    std::ifstream file;
    std::istream& stream;
    bool ok;
    explicit InputStream(const std::string& path)
        : file(path == "-" ? std::ifstream() : std::ifstream(path)),
          stream(path == "-" ? std::cin : file),
          ok(path == "-" || static_cast<bool>(file)) {}
};

// Streams a graph6 file in bounded batches, analyzing each batch in
// parallel and emitting rows in input order.
int stream_file(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                const std::function<std::string(const Graph&)>& row) {
    InputStream src(cfg.file);
    if (!src.ok) {
        err << "cannot open " << cfg.file << "\n";
        return 2;
    }
    std::istream& in = src.stream;
    constexpr std::size_t kBatch = 4096;
    std::vector<Graph> batch;
    bool failed = false;
    auto flush = [&] {
        std::vector<std::string> rows(batch.size());
        parallel_for(batch.size(), cfg.workers, [&](std::size_t i) { rows[i] = row(batch[i]); });
        for (const std::string& s : rows) out << s << '\n';
        batch.clear();
    };
    try {
        for_each_graph6(
            in,
            [&](std::size_t, Graph&& g) {
                if (cfg.connected_only && !is_connected(g)) return;
                batch.push_back(std::move(g));
                if (batch.size() >= kBatch) flush();
            },
            cfg.skip_malformed,
            [&](std::size_t line_no, const std::string& msg) {
                err << cfg.file << ":" << line_no << ": " << msg << "\n";
            });
    } catch (const std::runtime_error& e) {
        err << cfg.file << ": " << e.what() << "\n";
        failed = true;
    }
    if (!failed) flush();
    return failed ? 2 : 0;
}

// "9..12" or "9"
std::pair<int, int> parse_range(const std::string& s) {
    std::size_t dots = s.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

}  // namespace

int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (count_inputs(cfg) != 1) {
        err << "compute: exactly one of --g6/--file/--family is required\n";
        return 2;
    }
    if (cfg.k < 1) {
        err << "compute: k >= 1 required\n";
        return 2;
    }
    if (cfg.format == RunConfig::Format::Tsv) {
        out << "#graph6\tn\tk\tgamma\tgamma_pk\tppt\tPPT\tinterval_full\tnum_min_sets"
               "\tefficient_set\tppt_set";
        if (cfg.with_trace) out << "\ttrace";
        out << '\n';
    }
    auto row = [&](const Graph& g) { return compute_row(g, cfg); };
    try {
        if (!cfg.g6.empty()) {
            out << row(graph6_decode(cfg.g6)) << '\n';
            return 0;
        }
        if (!cfg.family.empty()) {
            out << row(family_from_descriptor(cfg.family)) << '\n';
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
    return stream_file(cfg, out, err, row);
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    VerifyOptions opts;
    opts.n_max = cfg.verify_n_max;
    opts.k_min = cfg.k_lo;
    opts.k_max = std::max(cfg.k_lo, cfg.k_hi);
    opts.workers = cfg.workers;
    opts.range_lo = cfg.range_lo;
    opts.range_hi = cfg.range_hi;
    try {
        VerificationResult r = verify_theorem(cfg.theorem, opts);
        if (cfg.format == RunConfig::Format::JsonLines) {
            json ces = json::array();
            for (const Counterexample& c : r.counterexamples)
                ces.push_back({{"graph6", c.graph6}, {"observed", c.observed}, {"expected", c.expected}});
            json j{{"theorem_id", r.theorem_id}, {"corpus", r.corpus},   {"checked", r.checked},
                   {"passed", r.passed},         {"counterexamples", ces}};
            if (!r.summary.empty()) j["summary"] = r.summary;
            out << j.dump() << '\n';
        } else {
            out << r.to_tsv() << '\n';
        }
        return r.passed ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
}

namespace {

struct NgExtremal {
    std::string graph6;
    int ppt;
    int ppt_complement;
};

struct NgStats {
    std::size_t count = 0;
    int max_sum = -1;
    std::vector<NgExtremal> extremal;          // sum == n
    std::vector<std::string> counterexamples;  // g6, sum > n
};

void ng_record(std::ostream& out, const RunConfig& cfg, int n, const NgStats& st) {
    if (cfg.format == RunConfig::Format::JsonLines) {
        json j{{"type", "summary"},
               {"n", n},
               {"graphs", st.count},
               {"max_sum", st.max_sum},
               {"sum_eq_n", st.extremal.size()},
               {"counterexamples", st.counterexamples}};
        out << j.dump() << '\n';
        if (cfg.list_extremal)
            for (const NgExtremal& x : st.extremal)
                out << json{{"type", "extremal"},
                            {"n", n},
                            {"graph6", x.graph6},
                            {"ppt", x.ppt},
                            {"ppt_complement", x.ppt_complement}}
                           .dump()
                    << '\n';
        return;
    }
    out << n << '\t' << st.count << '\t' << st.max_sum << '\t' << st.extremal.size() << '\t';
    if (st.counterexamples.empty()) {
        out << '-';
    } else {
        for (std::size_t i = 0; i < st.counterexamples.size(); ++i)
            out << (i ? "," : "") << st.counterexamples[i];
    }
    out << '\n';
    if (cfg.list_extremal)
        for (const NgExtremal& x : st.extremal)
            out << "extremal\t" << n << '\t' << x.graph6 << '\t' << x.ppt << '\t'
                << x.ppt_complement << '\n';
}

void ng_scan_graphs(const std::vector<Graph>& graphs, int workers, NgStats& st) {
    std::vector<int> ppt_g(graphs.size()), ppt_c(graphs.size());
    parallel_for(graphs.size(), workers, [&](std::size_t i) {
        ppt_g[i] = ppt_k(graphs[i], 1);
        ppt_c[i] = ppt_k(complement(graphs[i]), 1);
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        int n = graphs[i].order();
        int sum = ppt_g[i] + ppt_c[i];
        ++st.count;
        st.max_sum = std::max(st.max_sum, sum);
        if (sum == n)
            st.extremal.push_back({graph6_encode(graphs[i]), ppt_g[i], ppt_c[i]});
        else if (sum > n)
            st.counterexamples.push_back(graph6_encode(graphs[i]));
    }
}

}  // namespace

int run_ng_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.format == RunConfig::Format::Tsv)
        out << "#n\tgraphs\tmax_sum\tsum_eq_n\tcounterexamples\n";
    bool any_counterexample = false;
    if (!cfg.file.empty()) {
        InputStream src(cfg.file);
        if (!src.ok) {
            err << "cannot open " << cfg.file << "\n";
            return 2;
        }
        std::map<int, std::vector<Graph>> by_n;
        try {
            for_each_graph6(
                src.stream,
                [&](std::size_t, Graph&& g) {
                    if (cfg.connected_only && !is_connected(g)) return;
                    by_n[g.order()].push_back(std::move(g));
                },
                cfg.skip_malformed,
                [&](std::size_t line_no, const std::string& msg) {
                    err << cfg.file << ":" << line_no << ": " << msg << "\n";
                });
        } catch (const std::runtime_error& e) {
            err << cfg.file << ": " << e.what() << "\n";
            return 2;
        }
        for (auto& [n, graphs] : by_n) {
            NgStats st;
            ng_scan_graphs(graphs, cfg.workers, st);
            ng_record(out, cfg, n, st);
            any_counterexample |= !st.counterexamples.empty();
        }
        return any_counterexample ? 1 : 0;
    }
    if (cfg.n_max < 1 || cfg.n_max > 8) {
        err << "ng-scan: built-in enumeration supports n <= 8 (use --file beyond)\n";
        return 2;
    }
    for (int n = std::max(1, cfg.n_min); n <= cfg.n_max; ++n) {
        NgStats st;
        ng_scan_graphs(enumerate_graphs(n, !cfg.all_graphs), cfg.workers, st);
        ng_record(out, cfg, n, st);
        any_counterexample |= !st.counterexamples.empty();
    }
    return any_counterexample ? 1 : 0;
}

int run_families(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.family.empty()) {
        err << "families: --family descriptor required\n";
        return 2;
    }
    try {
        std::size_t colon = cfg.family.find(':');
        std::string name = cfg.family.substr(0, colon);
        std::string args = colon == std::string::npos ? "" : cfg.family.substr(colon + 1);
        std::vector<Graph> emitted;

        bool gadget = name == "ng" || name == "subdiv-decrease" || name == "subdiv-increase" ||
                      name == "deg3-example";
        bool rangeable = gadget || name == "path" || name == "cycle" || name == "complete" ||
                         name == "star" || name == "empty";
        if (rangeable && args.find(',') == std::string::npos && !args.empty()) {
            auto [lo, hi] = parse_range(args);
            for (int v = lo; v <= hi; ++v) {
                if (name == "ng") {
                    emitted.push_back(ng_family(v));
                } else if (name == "subdiv-decrease") {
                    auto [g, e] = subdiv_decrease_gadget(v);
                    emitted.push_back(cfg.subdivided ? subdivide(g, e) : g);
                } else if (name == "subdiv-increase") {
                    auto [g, e] = subdiv_increase_gadget(v);
                    emitted.push_back(cfg.subdivided ? subdivide(g, e) : g);
                } else if (name == "deg3-example") {
                    emitted.push_back(deg3_example(v));
                } else {
                    emitted.push_back(family_from_descriptor(name + ":" + std::to_string(v)));
                }
            }
        } else {
            emitted.push_back(family_from_descriptor(cfg.family));
        }
        for (const Graph& g : emitted) out << graph6_encode(g) << '\n';
        return 0;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace ppt
