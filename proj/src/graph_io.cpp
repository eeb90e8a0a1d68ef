#include "perturb/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace perturb {

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    std::int64_t m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated input");
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(out, g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_edge_list(in);
}

void write_clusters(std::ostream& out, const ClusterFamily& fam) {
    for (int i = 0; i < fam.size(); ++i) {
        out << i;
        for (int v : fam.clusters[static_cast<size_t>(i)].members) out << ' ' << v;
        out << '\n';
    }
}

ClusterFamily read_clusters(std::istream& in, int host_n) {
    ClusterFamily fam;
    fam.host_n = host_n;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        int index;
        if (!(row >> index)) throw std::runtime_error("cluster list: bad row");
        std::vector<int> members;
        int v;
        while (row >> v) members.push_back(v);
        if (members.empty()) throw std::runtime_error("cluster list: empty cluster row");
        fam.clusters.push_back(VertexSet(std::move(members)));
    }
    return fam;
}

std::string clusters_to_string(const ClusterFamily& fam) {
    std::ostringstream out;
    write_clusters(out, fam);
    return out.str();
}

}  // namespace perturb
