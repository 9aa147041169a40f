#pragma once

// Communication graphs: undirected, connected, no self-loops.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace drgossip {

struct Graph {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges; // i < j, sorted ascending
    std::vector<std::vector<int>> adjacency;
    std::vector<int> degrees;

    bool has_edge(int i, int j) const;
};

// Validates node range, no self-loops, no duplicates, connectivity
// (BFS from node 0 must reach every node); builds adjacency/degrees.
Graph make_graph(int num_nodes, std::vector<std::pair<int, int>> edges);

bool edges_connected(int num_nodes, const std::vector<std::pair<int, int>>& edges);

// Each unordered pair kept independently with probability p; resampled
// with an incremented sub-seed until connected (at most 1000 attempts).
Graph generate_erdos_renyi(int num_nodes, double p, std::uint64_t seed);

// Cycle i <-> (i+1 mod K). K=2 degenerates to the single edge {0,1}.
Graph generate_ring(int num_nodes);

// 4-neighborhood lattice without wraparound; node id = row*cols + col.
Graph generate_grid(int rows, int cols);

// Nodes placed uniformly in the unit square, edge iff Euclidean distance
// <= radius; positions resampled until connected (at most 1000 attempts).
Graph generate_geometric(int num_nodes, double radius, std::uint64_t seed);

// Edge-list text: first line "K", then one "i j" pair per line, ascending.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph from_edge_list(const std::string& text);

} // namespace drgossip
