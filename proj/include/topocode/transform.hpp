#pragma once
// Labeling transformations: dual/reciprocal rewrites, the set-dual family of a
// set-ordered graceful labeling, equivalent-kind constructions on trees, the
// graceful closure joins, and multi-dimensional layer composition.

#include "topocode/graph.hpp"
#include "topocode/labeling.hpp"
#include "topocode/verify.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topocode {

// every assigned color z becomes max+min-z over the labeling's whole domain
Labeling dual(const Labeling& L);

// Dual-1..4 rewrites of a set-ordered graceful labeling; variant is one of
// f_dual, f*_dual, g_setXY, g*_setXY, h_setX, h*_setX, h_setY, h*_setY.
// The result carries the kind the construction guarantees and is verified
// before being returned.
Labeling set_dual_transform(const Graph& g, const Labeling& L, const std::string& variant,
                            const std::optional<Bipartition>& parts = std::nullopt);

// Reciprocal-1..3: reverse the color order within part ("X", "Y" or "total"),
// with edge colors kept, complemented (maxE+minE-c) or recomputed as |diff|
Labeling reciprocal_transform(const Graph& g, const Labeling& L, const std::string& part,
                              const std::string& edge_rule,
                              const std::optional<Bipartition>& parts = std::nullopt);

// rebuild a set-ordered graceful labeling of a tree into one of the
// equivalent kinds: kd-graceful, odd-elegant, kd-elegant, kd-edge-magic-total,
// kd-graceful-difference, kd-felicitous-difference, super-edge-magic-total
Labeling equivalent_labeling(const Graph& t, const Labeling& f, const std::string& target,
                             const std::map<std::string, long long>& params = {});

struct JoinedGraph {
    Graph graph;        // G's vertices keep their ids; T's are appended
    Labeling labeling;  // graceful on the joined graph
};

// join a set-ordered graceful G with a graceful T; mode is one of
// bridge, coincide-x, coincide-y, edge-coincide
JoinedGraph graceful_join(const Graph& g, const Labeling& f, const Graph& t,
                          const Labeling& gt, const std::string& mode);

// totally (k,d)-sequential labeling of a tree from a graceful labeling
Labeling totally_kd_sequential(const Graph& t, const Labeling& f, long long k, long long d);

struct TupleColoring {
    std::map<int, std::vector<long long>> vertex;
    std::map<Edge, std::vector<long long>> edge;
};

// color every element with the tuple of its colors across the layers
TupleColoring multi_dimension_compose(const Graph& g, const std::vector<Labeling>& layers);

}  // namespace topocode
