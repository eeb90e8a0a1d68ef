#pragma once

#include <iosfwd>
#include <string>

#include "perturb/graph.hpp"

namespace perturb {

// Edge-list text format: first line "n m", then m lines "u v" with u < v,
// written in lexicographic order. Reading tolerates unsorted input and u > v.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

void write_edge_list_file(const std::string& path, const Graph& g);
Graph read_edge_list_file(const std::string& path);

// Cluster-list text format: one line per cluster, "c v1 v2 ..." where c is the
// cluster index.
void write_clusters(std::ostream& out, const ClusterFamily& fam);
ClusterFamily read_clusters(std::istream& in, int host_n);

std::string clusters_to_string(const ClusterFamily& fam);

}  // namespace perturb
