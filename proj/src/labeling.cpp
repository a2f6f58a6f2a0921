#include "topocode/labeling.hpp"

#include <numeric>
#include <stdexcept>

namespace topocode {

EdgeRule edge_rule_from_name(const std::string& name) {
    if (name == "abs-difference") return EdgeRule::abs_difference;
    if (name == "mod-sum") return EdgeRule::mod_sum;
    if (name == "plain-sum") return EdgeRule::plain_sum;
    if (name == "gcd") return EdgeRule::gcd;
    if (name == "none" || name.empty()) return EdgeRule::none;
    throw std::invalid_argument("unknown edge rule: " + name);
}

std::string edge_rule_name(EdgeRule rule) {
    switch (rule) {
        case EdgeRule::abs_difference: return "abs-difference";
        case EdgeRule::mod_sum: return "mod-sum";
        case EdgeRule::plain_sum: return "plain-sum";
        case EdgeRule::gcd: return "gcd";
        default: return "none";
    }
}

bool Labeling::vertex_total(const Graph& g) const {
    for (int v = 0; v < g.p; ++v)
        if (!vertex.count(v)) return false;
    return true;
}

bool Labeling::edge_total(const Graph& g) const {
    for (const Edge& e : g.edges)
        if (!edge.count(e)) return false;
    return true;
}

long long Labeling::vcolor(int v) const {
    auto it = vertex.find(v);
    if (it == vertex.end()) throw std::invalid_argument("vertex " + std::to_string(v) + " uncolored");
    return it->second;
}

long long Labeling::ecolor(int u, int v) const {
    auto it = edge.find(make_edge(u, v));
    if (it == edge.end()) throw std::invalid_argument("edge uncolored");
    return it->second;
}

long long Labeling::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("missing labeling param: " + name);
    return it->second;
}

long long Labeling::param_or(const std::string& name, long long fallback) const {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

std::map<Edge, long long> induce_edge_colors(const Graph& g,
                                             const std::map<int, long long>& vertex_colors,
                                             EdgeRule rule, long long modulus) {
    for (int v = 0; v < g.p; ++v)
        if (!vertex_colors.count(v)) throw std::invalid_argument("uncolored vertex");
    if (rule == EdgeRule::mod_sum && modulus <= 0) modulus = g.q();
    std::map<Edge, long long> out;
    for (const Edge& e : g.edges) {
        long long a = vertex_colors.at(e.first), b = vertex_colors.at(e.second);
        long long c = 0;
        switch (rule) {
            case EdgeRule::abs_difference: c = a > b ? a - b : b - a; break;
            case EdgeRule::mod_sum:
                if (modulus <= 0) throw std::invalid_argument("mod-sum needs a positive modulus");
                c = ((a + b) % modulus + modulus) % modulus;
                break;
            case EdgeRule::plain_sum: c = a + b; break;
            case EdgeRule::gcd: c = std::gcd(a, b); break;
            default: throw std::invalid_argument("no edge rule given");
        }
        out[e] = c;
    }
    return out;
}

std::map<int, long long> vertex_colors_from_vector(const std::vector<long long>& colors) {
    std::map<int, long long> out;
    for (size_t i = 0; i < colors.size(); ++i) out[static_cast<int>(i)] = colors[i];
    return out;
}

Labeling make_vertex_labeling(const Graph& g, const std::vector<long long>& colors,
                              const std::string& kind, EdgeRule rule, long long modulus) {
    if (static_cast<int>(colors.size()) != g.p)
        throw std::invalid_argument("vertex color count mismatch");
    Labeling L;
    L.kind = kind;
    L.vertex = vertex_colors_from_vector(colors);
    if (rule != EdgeRule::none) L.edge = induce_edge_colors(g, L.vertex, rule, modulus);
    return L;
}

}  // namespace topocode
