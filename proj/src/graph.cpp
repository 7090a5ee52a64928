#include "hgco/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hgco {

Graph::Graph(int num_nodes, std::vector<std::pair<int, int>> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
    if (num_nodes_ < 1) {
        throw std::invalid_argument("Graph: num_nodes must be >= 1");
    }
    for (auto& [u, v] : edges_) {
        if (u == v) {
            throw std::invalid_argument("Graph: self-loop on node " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) {
            throw std::invalid_argument("Graph: edge endpoint out of range");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("Graph: duplicate edge");
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(num_nodes_);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(num_nodes_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Graph generate_er(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_er: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate_er: p must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (unif(rng) < p) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate_ba(int n, int m, std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("generate_ba: need 1 <= m < n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    std::vector<double> degree(n, 0.0);
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
            edges.emplace_back(u, v);
            degree[u] += 1.0;
            degree[v] += 1.0;
        }
    }
    for (int v = m; v < n; ++v) {
        // Attachment weights are frozen at the degrees seen when v arrives.
        std::vector<double> weight(degree.begin(), degree.begin() + v);
        std::vector<bool> used(v, false);
        for (int pick = 0; pick < m; ++pick) {
            double total = 0.0;
            for (int u = 0; u < v; ++u) {
                if (!used[u]) total += weight[u];
            }
            int target = -1;
            if (total <= 0.0) {
                // Every unused candidate has degree 0; fall back to uniform.
                std::vector<int> open;
                for (int u = 0; u < v; ++u) {
                    if (!used[u]) open.push_back(u);
                }
                int r = static_cast<int>(unif(rng) * static_cast<double>(open.size()));
                if (r >= static_cast<int>(open.size())) r = static_cast<int>(open.size()) - 1;
                target = open[r];
            } else {
                double r = unif(rng) * total;
                double acc = 0.0;
                for (int u = 0; u < v; ++u) {
                    if (used[u] || weight[u] <= 0.0) continue;
                    acc += weight[u];
                    if (r < acc) {
                        target = u;
                        break;
                    }
                }
                if (target < 0) {
                    for (int u = v - 1; u >= 0; --u) {
                        if (!used[u] && weight[u] > 0.0) {
                            target = u;
                            break;
                        }
                    }
                }
            }
            used[target] = true;
            edges.emplace_back(target, v);
            degree[target] += 1.0;
            degree[v] += 1.0;
        }
    }
    return Graph(n, std::move(edges));
}

namespace {

std::vector<std::pair<int, int>> non_edges_of(const Graph& g) {
    std::set<std::pair<int, int>> present(g.edges().begin(), g.edges().end());
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < g.num_nodes(); ++u) {
        for (int v = u + 1; v < g.num_nodes(); ++v) {
            if (!present.count({u, v})) result.emplace_back(u, v);
        }
    }
    return result;
}

// Draws k distinct indices from [0, n) by partial Fisher-Yates.
std::vector<int> sample_indices(int n, int k, std::mt19937_64& rng) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(unif(rng) * (n - i));
        if (j >= n) j = n - 1;
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace

Graph perturb(const Graph& g, const PerturbConfig& cfg, std::string* warning) {
    if (g.num_edges() < 1) throw std::invalid_argument("perturb: graph has no edges");
    if (cfg.edge_edit_rate < 0.0 || cfg.edge_edit_rate >= 1.0) {
        throw std::invalid_argument("perturb: edge_edit_rate must be in [0, 1)");
    }
    std::mt19937_64 rng(cfg.seed);
    int k = static_cast<int>(std::llround(cfg.edge_edit_rate * g.num_edges()));
    auto candidates = non_edges_of(g);
    if (k > static_cast<int>(candidates.size())) {
        k = static_cast<int>(candidates.size());
        if (warning) {
            *warning = "perturb: edit count reduced to " + std::to_string(k) +
                       " (not enough non-edges)";
        }
    }
    if (k == 0) return g;

    auto remove_idx = sample_indices(g.num_edges(), k, rng);
    std::vector<bool> removed(g.num_edges(), false);
    for (int i : remove_idx) removed[i] = true;

    auto insert_idx = sample_indices(static_cast<int>(candidates.size()), k, rng);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.num_edges());
    for (int i = 0; i < g.num_edges(); ++i) {
        if (!removed[i]) edges.push_back(g.edges()[i]);
    }
    for (int i : insert_idx) edges.push_back(candidates[i]);
    return Graph(g.num_nodes(), std::move(edges));
}

Graph complement(const Graph& g) {
    return Graph(g.num_nodes(), non_edges_of(g));
}

Graph parse_edge_list(std::istream& in, const std::string& name) {
    auto fail = [&](int line, const std::string& msg) -> void {
        throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
    };
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n) || n < 1) fail(lineno, "expected positive node count");
            std::string extra;
            if (ss >> extra) fail(lineno, "trailing tokens after node count");
            continue;
        }
        int u, v;
        if (!(ss >> u >> v)) fail(lineno, "expected edge 'u v'");
        std::string extra;
        if (ss >> extra) fail(lineno, "trailing tokens after edge");
        if (u == v) fail(lineno, "self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "node index out of range");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) fail(lineno, "duplicate edge");
        edges.emplace_back(u, v);
    }
    if (n < 0) fail(lineno, "empty file");
    return Graph(n, std::move(edges));
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in, path);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.num_nodes() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(g, out);
}

Eigen::VectorXd betweenness_centrality(const Graph& g) {
    const int n = g.num_nodes();
    Eigen::VectorXd bc = Eigen::VectorXd::Zero(n);
    auto adj = g.adjacency();
    std::vector<int> dist(n), order;
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<int>> pred(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : pred) p.clear();
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : pred[w]) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) bc[w] += delta[w];
        }
    }
    bc *= 0.5;  // each unordered pair was counted from both endpoints
    double scale = n > 2 ? 2.0 / (static_cast<double>(n - 1) * (n - 2)) : 1.0;
    return bc * scale;
}

Eigen::VectorXd clustering_coefficients(const Graph& g) {
    const int n = g.num_nodes();
    Eigen::VectorXd cc = Eigen::VectorXd::Zero(n);
    auto adj = g.adjacency();
    for (int v = 0; v < n; ++v) {
        int d = static_cast<int>(adj[v].size());
        if (d < 2) continue;
        int links = 0;
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(adj[v][i], adj[v][j])) ++links;
            }
        }
        cc[v] = 2.0 * links / (static_cast<double>(d) * (d - 1));
    }
    return cc;
}

std::vector<int> core_numbers(const Graph& g) {
    // Batagelj-Zaversnik peeling.
    const int n = g.num_nodes();
    auto adj = g.adjacency();
    std::vector<int> deg = g.degrees();
    int maxdeg = 0;
    for (int d : deg) maxdeg = std::max(maxdeg, d);
    std::vector<int> bin(maxdeg + 2, 0);
    for (int d : deg) ++bin[d];
    int start = 0;
    for (int d = 0; d <= maxdeg; ++d) {
        int count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<int> pos(n), vert(n);
    for (int v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]];
        vert[pos[v]] = v;
        ++bin[deg[v]];
    }
    for (int d = maxdeg; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;
    std::vector<int> core = deg;
    for (int i = 0; i < n; ++i) {
        int v = vert[i];
        for (int u : adj[v]) {
            if (core[u] > core[v]) {
                int du = core[u], pu = pos[u];
                int pw = bin[du], w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++bin[du];
                --core[u];
            }
        }
    }
    return core;
}

Eigen::MatrixXd structural_features(const Graph& g) {
    const int n = g.num_nodes();
    Eigen::MatrixXd f(n, 4);
    auto deg = g.degrees();
    for (int v = 0; v < n; ++v) {
        f(v, 0) = n > 1 ? static_cast<double>(deg[v]) / (n - 1) : 0.0;
    }
    f.col(1) = betweenness_centrality(g);
    f.col(2) = clustering_coefficients(g);
    auto core = core_numbers(g);
    int maxcore = 0;
    for (int c : core) maxcore = std::max(maxcore, c);
    for (int v = 0; v < n; ++v) {
        f(v, 3) = maxcore > 0 ? static_cast<double>(core[v]) / maxcore : 0.0;
    }
    return f;
}

std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (x >> (8 * byte)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.num_nodes()));
    for (const auto& [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

}  // namespace hgco
