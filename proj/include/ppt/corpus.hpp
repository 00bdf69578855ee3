#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ppt/graph.hpp"

namespace ppt {

// Isomorph-free enumeration. One representative per class, canonically
// labeled, ordered by canonical form. Results are cached internally, so
// repeated calls are cheap.
//   graphs: 1 <= n <= 8,  trees: 1 <= n <= 12.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);
std::vector<Graph> enumerate_trees(int n);

// Streams a graph6 file, one graph per line. Blank lines and a leading
// ">>graph6<<" header are skipped. With skip_malformed, bad lines are
// reported through on_error and the stream continues; otherwise decoding
// errors abort with the line number.
void for_each_graph6(std::istream& in,
                     const std::function<void(std::size_t line_no, Graph&&)>& fn,
                     bool skip_malformed = false,
                     const std::function<void(std::size_t line_no, const std::string& msg)>& on_error = {});

std::vector<Graph> read_graph6_file(const std::string& path);

// Describes a corpus for the verification harness.
struct CorpusSpec {
    enum class Source { Graphs, Trees, File };
    Source source = Source::Graphs;
    int n_min = 1;
    int n_max = 6;
    bool connected_only = false;
    std::string path;  // Source::File

    // optional filters applied after generation
    std::optional<int> max_degree;
    bool require_leaf = false;
    std::optional<int> min_max_degree;  // keep graphs with Delta >= value

    std::vector<Graph> materialize() const;
    std::string describe() const;
};

}  // namespace ppt
