#include "epglab/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace epglab {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::InvalidInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::InvalidInput, "cannot write " + path);
    out << content;
}

std::string group_to_json(const FiniteGroup& g) {
    json j;
    j["name"] = g.name();
    j["n"] = g.order();
    std::vector<int> table;
    table.reserve(static_cast<size_t>(g.order()) * g.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            table.push_back(g.mul(a, b));
    j["table"] = table;
    return j.dump(2) + "\n";
}

FiniteGroup group_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidInput, std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("table"))
        throw Error(Errc::InvalidInput, "group JSON needs \"n\" and \"table\"");
    const int n = j["n"].get<int>();
    const auto flat = j["table"].get<std::vector<int>>();
    if (static_cast<long long>(flat.size()) != static_cast<long long>(n) * n)
        throw Error(Errc::InvalidInput, "table length must be n*n");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = flat[static_cast<size_t>(a) * n + b];
    return FiniteGroup::validate(table, j.value("name", ""));
}

FiniteGroup load_group(const std::string& path) { return group_from_json(read_file(path)); }

void save_group(const FiniteGroup& g, const std::string& path) {
    write_file(path, group_to_json(g));
}

std::string graph_to_json(const SimpleGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

std::string digraph_to_json(const DiGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["directed"] = true;
    json arcs = json::array();
    for (auto [u, v] : g.arcs())
        arcs.push_back({u, v});
    j["edges"] = arcs;
    return j.dump(2) + "\n";
}

SimpleGraph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidInput, std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges"))
        throw Error(Errc::InvalidInput, "graph JSON needs \"n\" and \"edges\"");
    if (j.value("directed", false))
        throw Error(Errc::InvalidInput, "expected an undirected graph");
    SimpleGraph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw Error(Errc::InvalidInput, "edges must be [u,v] pairs");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

SimpleGraph load_graph(const std::string& path) { return graph_from_json(read_file(path)); }

void save_graph(const SimpleGraph& g, const std::string& path) {
    write_file(path, graph_to_json(g));
}

std::string graph_to_dot(const SimpleGraph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (v < static_cast<int>(labels.size()))
            out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string digraph_to_dot(const DiGraph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "digraph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (v < static_cast<int>(labels.size()))
            out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.arcs())
        out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace epglab
