#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace hgco {

// Undirected graph over 0-indexed nodes. The edge list is kept canonical:
// u < v per edge, lexicographically sorted, no self-loops, no duplicates.
class Graph {
public:
    Graph() = default;
    Graph(int num_nodes, std::vector<std::pair<int, int>> edges);

    int num_nodes() const { return num_nodes_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;

    bool operator==(const Graph&) const = default;

private:
    int num_nodes_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

struct PerturbConfig {
    double edge_edit_rate = 0.0;  // must stay below 1
    std::uint64_t seed = 0;
};

// Erdos-Renyi G(n, p): each pair present independently with probability p.
Graph generate_er(int n, double p, std::uint64_t seed);

// Preferential attachment starting from an m-clique; each new node attaches
// to m distinct existing nodes with probability proportional to degree.
Graph generate_ba(int n, int m, std::uint64_t seed);

// Removes round(rate * |E|) random edges and inserts the same number of
// random non-edges of the input, so |E| is preserved. If fewer non-edges are
// available the edit count is reduced and a warning is reported.
Graph perturb(const Graph& g, const PerturbConfig& cfg,
              std::string* warning = nullptr);

Graph complement(const Graph& g);

// Text edge lists: first line is the node count, then one "u v" line per
// edge. save_edge_list writes the canonical ordering.
Graph load_edge_list(const std::string& path);
Graph parse_edge_list(std::istream& in, const std::string& name = "<stream>");
void save_edge_list(const Graph& g, const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

// Per-node rows: [degree/(n-1), betweenness, clustering, core/max_core].
// Betweenness uses Brandes with the 2/((n-1)(n-2)) normalization (factor 1
// for n <= 2); clustering is 0 for degree < 2; core index is 0 when the
// whole graph has max core 0.
Eigen::MatrixXd structural_features(const Graph& g);

Eigen::VectorXd betweenness_centrality(const Graph& g);
Eigen::VectorXd clustering_coefficients(const Graph& g);
std::vector<int> core_numbers(const Graph& g);

// Content hash over (num_nodes, canonical edges); used as oracle cache key.
std::uint64_t graph_hash(const Graph& g);

}  // namespace hgco
