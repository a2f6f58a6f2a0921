#pragma once
// Labeling values: partial integer assignments to vertices and edges with a
// declared kind tag and its parameters. Edge colors may be stored directly
// or induced from vertex colors by one of the standard rules.

#include "topocode/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace topocode {

enum class EdgeRule { none, abs_difference, mod_sum, plain_sum, gcd };

EdgeRule edge_rule_from_name(const std::string& name);
std::string edge_rule_name(EdgeRule rule);

struct Labeling {
    std::string kind;                        // tag from the documented catalog
    std::map<std::string, long long> params; // k, d, a, b, c, lambda, ...
    std::map<int, long long> vertex;         // vertex -> color
    std::map<Edge, long long> edge;          // normalized edge -> color

    bool vertex_total(const Graph& g) const;
    bool edge_total(const Graph& g) const;
    bool total(const Graph& g) const { return vertex_total(g) && edge_total(g); }

    long long vcolor(int v) const;           // throws when uncolored
    long long ecolor(int u, int v) const;    // throws when uncolored
    bool has_param(const std::string& name) const { return params.count(name) > 0; }
    long long param(const std::string& name) const;             // throws when missing
    long long param_or(const std::string& name, long long fallback) const;
};

// modulus 0 means "use q" for the mod-sum rule
std::map<Edge, long long> induce_edge_colors(const Graph& g,
                                             const std::map<int, long long>& vertex_colors,
                                             EdgeRule rule, long long modulus = 0);

// convenience: vertex colors given positionally for the dense vertex range
std::map<int, long long> vertex_colors_from_vector(const std::vector<long long>& colors);

Labeling make_vertex_labeling(const Graph& g, const std::vector<long long>& colors,
                              const std::string& kind, EdgeRule rule = EdgeRule::abs_difference,
                              long long modulus = 0);

}  // namespace topocode
