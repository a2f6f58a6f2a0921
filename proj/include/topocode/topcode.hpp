#pragma once
// Topcode-matrices: 3 x q integer matrices (X, E, Y rows) encoding colored
// graphs, with the full column algebra (union-sum, subtract, intersect,
// union, coincide, split), exchanges, standard form, duals and merges.

#include "topocode/graph.hpp"
#include "topocode/labeling.hpp"

#include <array>
#include <vector>

namespace topocode {

using TopcodeColumn = std::array<long long, 3>;  // (x_i, e_i, y_i)

struct TopcodeMatrix {
    std::vector<long long> x, e, y;
    EdgeRule rule = EdgeRule::none;  // when set, e_i == rule(x_i, y_i)
    long long modulus = 0;           // mod-sum only

    TopcodeMatrix() = default;
    TopcodeMatrix(std::vector<long long> xr, std::vector<long long> er, std::vector<long long> yr);

    int q() const { return static_cast<int>(e.size()); }
    bool empty() const { return e.empty(); }
    bool valued() const { return rule != EdgeRule::none; }
    TopcodeColumn column(int i) const;
    void push_column(const TopcodeColumn& c);
    std::vector<TopcodeColumn> columns() const;

    // checks e_i == rule(x_i, y_i) for every column
    bool rule_consistent() const;
};

bool operator==(const TopcodeMatrix& a, const TopcodeMatrix& b);

TopcodeMatrix matrix_from_columns(const std::vector<TopcodeColumn>& cols);

// one column per edge in edge-list order, smaller color in the X row;
// rule (optional) is recorded and checked against the stored edge colors
TopcodeMatrix from_colored_graph(const Graph& g, const Labeling& L, EdgeRule rule = EdgeRule::none);

// occurrence count of each distinct value of X u Y, sorted non-increasing
std::vector<int> tm_degree_sequence(const TopcodeMatrix& m);
bool is_graphicable(const TopcodeMatrix& m);

struct Realization {
    Graph graph;
    std::vector<long long> vertex_value;  // value carried by each graph vertex
};
// vertices = distinct values of X u Y; rejects loops and repeated edges
Realization realize(const TopcodeMatrix& m);

// column algebra (columns compared as multisets; order stable)
TopcodeMatrix union_sum(const TopcodeMatrix& a, const TopcodeMatrix& b);       // concat
TopcodeMatrix subtract(const TopcodeMatrix& a, const TopcodeMatrix& sub);      // drop first matches
TopcodeMatrix intersect(const TopcodeMatrix& a, const TopcodeMatrix& b);       // largest common sub-multiset
TopcodeMatrix matrix_union(const TopcodeMatrix& a, const TopcodeMatrix& b);    // a + (b \ a∩b)
TopcodeMatrix coincide(const TopcodeMatrix& a, const TopcodeMatrix& b, const TopcodeMatrix& h);
// regards m as T1 + H + T2 (H located by its columns) and returns {T1+H, T2+H}
std::pair<TopcodeMatrix, TopcodeMatrix> split(const TopcodeMatrix& m, const TopcodeMatrix& h);

TopcodeMatrix column_exchange(const TopcodeMatrix& m, int i, int j);
TopcodeMatrix xy_exchange(const TopcodeMatrix& m, int i);
// x_j < y_j per column (x_j == y_j rejected), then columns sorted by (e, x, y)
TopcodeMatrix standard_form(const TopcodeMatrix& m);

enum class DualEdgeRule { recompute, complement };
TopcodeMatrix dual_matrix(const TopcodeMatrix& m, DualEdgeRule edge_rule);

TopcodeMatrix scale_add(long long a1, const TopcodeMatrix& m1, long long a2, const TopcodeMatrix& m2);
TopcodeMatrix merge(const std::vector<TopcodeMatrix>& parts);  // per-cell unique nonzero source

}  // namespace topocode
