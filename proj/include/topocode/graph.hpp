#pragma once
// Simple undirected graphs over dense 0-based vertex indices, plus the
// structural operations the rest of the toolkit builds on: vertex/edge
// split and coincide, leaf addition, edge swap, spanning-tree utilities.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace topocode {

using Edge = std::pair<int, int>;  // stored normalized: first < second

// normalizes endpoint order; rejects loops and negative indices
Edge make_edge(int u, int v);

struct Graph {
    int p = 0;                      // vertices are 0..p-1
    std::vector<Edge> edges;        // normalized, duplicate-free
    std::vector<std::string> names; // optional vertex tags (empty or size p)

    int q() const { return static_cast<int>(edges.size()); }

    bool has_vertex(int v) const { return v >= 0 && v < p; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);    // throws on loop, duplicate, bad endpoint
    void canonicalize();            // sorts the edge list

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::vector<int> component_ids() const;  // component index per vertex
    int component_count() const;
    bool connected() const;         // vacuously true for p <= 1
};

bool operator==(const Graph& a, const Graph& b);

// named constructions (paths/cycles use the vertex-count convention)
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);       // K_{1,leaves}, center at index 0
Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);

std::vector<int> degree_sequence(const Graph& g);  // non-increasing

// Operations that change the vertex count return the new graph together
// with a remap table so labelings can be migrated:
//   vertex_map[old] = new index, or -1 when the old vertex was consumed.
// new_vertices lists the indices the operation introduced or merged into:
//   vertex_split   -> {v', v''}
//   vertex_coincide-> {merged}
//   edge_split     -> {u', v', u'', v''}
//   edge_coincide  -> {merged_u, merged_v}
//   add_leaves     -> the appended leaves in plan order
struct GraphResult {
    Graph graph;
    std::vector<int> vertex_map;
    std::vector<int> new_vertices;
};

// split v into v' (keeps part_a) and v'' (keeps the rest); part_a must be a
// nonempty proper subset of N(v)
GraphResult vertex_split(const Graph& g, int v, const std::vector<int>& part_a);

// merge non-adjacent u,v with disjoint neighborhoods into one vertex
GraphResult vertex_coincide(const Graph& g, int u, int v);

// remove uv, split u (u' keeps part_u) and v (v' keeps part_v), then add
// u'v' and u''v''; part_u subset of N(u)\{v}, may be empty or full
GraphResult edge_split(const Graph& g, Edge uv,
                       const std::vector<int>& part_u,
                       const std::vector<int>& part_v);

// coincide e1=(u1,v1) with e2=(u2,v2) endpoint-wise (u1 with u2, v1 with v2)
// and merge the two edges into one
GraphResult edge_coincide(const Graph& g, Edge e1, Edge e2);

// plan is a list of (vertex, leaf count); leaves are appended in plan order
GraphResult add_leaves(const Graph& g, const std::vector<std::pair<int, int>>& plan);

// G - remove + add; add must not already be present and must differ from remove
Graph edge_swap(const Graph& g, Edge remove, Edge add);

struct TreeReport {
    bool tree = false;
    bool connected = false;
    bool acyclic = false;
    int leaf_count = 0;               // n_1
    long long leaf_identity_rhs = 0;  // 2 + sum_{d>=3} (d-2) n_d
    bool leaf_identity_holds = false;
    bool size_identity_holds = false; // q == p-1
};
TreeReport is_tree(const Graph& g);

// brute force; both graphs must have at most 10 vertices
bool isomorphic(const Graph& a, const Graph& b);

// Matrix-Tree theorem with exact integer arithmetic; g must be connected
long long spanning_tree_count(const Graph& g);

// all spanning trees as graphs on the same vertex set; at most 8 vertices
std::vector<Graph> spanning_tree_enumerate(const Graph& g);

// 2-coloring; (X, Y) with the lowest vertex of each component in X,
// both sides sorted; nullopt when an odd cycle exists
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

}  // namespace topocode
