#include "drgossip/graph.hpp"

#include "drgossip/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace drgossip {

namespace {
constexpr int kMaxAttempts = 1000;
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool edges_connected(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
    if (num_nodes <= 0) return false;
    std::vector<std::vector<int>> adj(num_nodes);
    for (const auto& [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(num_nodes, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.back();
        queue.pop_back();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == num_nodes;
}

Graph make_graph(int num_nodes, std::vector<std::pair<int, int>> edges) {
    if (num_nodes < 1) throw std::invalid_argument("graph needs at least one node");
    for (auto& [i, j] : edges) {
        if (i == j) throw std::invalid_argument("graph has a self-loop");
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= num_nodes) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    if (!edges_connected(num_nodes, edges))
        throw std::invalid_argument("graph is not connected");

    Graph g;
    g.num_nodes = num_nodes;
    g.edges = std::move(edges);
    g.adjacency.assign(num_nodes, {});
    for (const auto& [i, j] : g.edges) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    g.degrees.resize(num_nodes);
    for (int i = 0; i < num_nodes; ++i) g.degrees[i] = static_cast<int>(g.adjacency[i].size());
    return g;
}

Graph generate_erdos_renyi(int num_nodes, double p, std::uint64_t seed) {
    if (num_nodes < 2) throw std::invalid_argument("erdos_renyi needs K >= 2");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("erdos_renyi needs p in (0,1]");
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < num_nodes; ++i)
            for (int j = i + 1; j < num_nodes; ++j)
                if (uniform01(rng) < p) edges.emplace_back(i, j);
        if (edges_connected(num_nodes, edges)) return make_graph(num_nodes, std::move(edges));
    }
    throw std::invalid_argument(
        "erdos_renyi: no connected sample in 1000 attempts (p too small for K)");
}

Graph generate_ring(int num_nodes) {
    // K=2 is tolerated (degenerates to the single edge) so that minimal
    // two-node configs work.
    if (num_nodes < 2) throw std::invalid_argument("ring needs K >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < num_nodes; ++i) edges.emplace_back(i, i + 1);
    if (num_nodes >= 3) edges.emplace_back(0, num_nodes - 1);
    return make_graph(num_nodes, std::move(edges));
}

Graph generate_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
    if (rows * cols < 2) throw std::invalid_argument("grid needs at least 2 nodes");
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int id = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(id, id + 1);
            if (r + 1 < rows) edges.emplace_back(id, id + cols);
        }
    }
    return make_graph(rows * cols, std::move(edges));
}

Graph generate_geometric(int num_nodes, double radius, std::uint64_t seed) {
    if (num_nodes < 2) throw std::invalid_argument("geometric needs K >= 2");
    if (!(radius > 0.0)) throw std::invalid_argument("geometric needs radius > 0");
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<double> xs(num_nodes), ys(num_nodes);
        for (int i = 0; i < num_nodes; ++i) {
            xs[i] = uniform01(rng);
            ys[i] = uniform01(rng);
        }
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < num_nodes; ++i) {
            for (int j = i + 1; j < num_nodes; ++j) {
                const double dx = xs[i] - xs[j];
                const double dy = ys[i] - ys[j];
                if (std::sqrt(dx * dx + dy * dy) <= radius) edges.emplace_back(i, j);
            }
        }
        if (edges_connected(num_nodes, edges)) return make_graph(num_nodes, std::move(edges));
    }
    throw std::invalid_argument(
        "geometric: no connected sample in 1000 attempts (radius too small for K)");
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_nodes << "\n";
    for (const auto& [i, j] : g.edges) out << i << " " << j << "\n";
    return out.str();
}

Graph from_edge_list(std::istream& in) {
    int num_nodes = 0;
    if (!(in >> num_nodes)) throw std::invalid_argument("edge list: missing node count");
    std::vector<std::pair<int, int>> edges;
    int i = 0, j = 0;
    while (in >> i >> j) edges.emplace_back(i, j);
    return make_graph(num_nodes, std::move(edges));
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

} // namespace drgossip
