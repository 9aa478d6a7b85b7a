#ifndef EPGLAB_JSON_IO_HPP
#define EPGLAB_JSON_IO_HPP

#include <string>
#include <vector>

#include "epglab/graph.hpp"
#include "epglab/group.hpp"

namespace epglab {

// Group JSON: {"name": str, "n": int, "table": [int; n*n] row-major}.
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text);
FiniteGroup load_group(const std::string& path);
void save_group(const FiniteGroup& g, const std::string& path);

// Graph JSON: {"n": int, "edges": [[u,v],...]} with u < v, sorted.
// Digraphs carry "directed": true and arcs as ordered pairs.
std::string graph_to_json(const SimpleGraph& g);
std::string digraph_to_json(const DiGraph& g);
SimpleGraph graph_from_json(const std::string& text);
SimpleGraph load_graph(const std::string& path);
void save_graph(const SimpleGraph& g, const std::string& path);

// DOT export; labels (one per vertex) are optional.
std::string graph_to_dot(const SimpleGraph& g, const std::vector<std::string>& labels = {});
std::string digraph_to_dot(const DiGraph& g, const std::vector<std::string>& labels = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace epglab

#endif
