#include "topocode/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

using nlohmann::json;

namespace topocode {

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.p << ' ' << g.q() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    int p = 0, q = 0;
    if (!(in >> p >> q)) throw std::invalid_argument("graph text: expected header \"p q\"");
    Graph g;
    g.p = p;
    for (int i = 0; i < q; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("graph text: truncated edge list");
        g.add_edge(u, v);
    }
    return g;
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["p"] = g.p;
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    Graph g;
    g.p = j.at("p").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge is a [u,v] pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

std::string labeling_to_json(const Labeling& L) {
    json j;
    j["kind"] = L.kind;
    j["params"] = json::object();
    for (const auto& [name, value] : L.params) j["params"][name] = value;
    // the vertex row is an array indexed by vertex id; ids must be contiguous
    json vert = json::array();
    for (const auto& [v, color] : L.vertex) {
        if (v != static_cast<int>(vert.size()))
            throw std::invalid_argument("labeling json: vertex colors must cover 0..p-1");
        vert.push_back(color);
    }
    j["vertex"] = vert;
    j["edges"] = json::array();
    for (const auto& [e, color] : L.edge) j["edges"].push_back({e.first, e.second, color});
    return j.dump();
}

Labeling labeling_from_json(const std::string& text) {
    json j = json::parse(text);
    Labeling L;
    L.kind = j.value("kind", "");
    if (j.contains("params"))
        for (auto& [name, value] : j.at("params").items())
            L.params[name] = value.get<long long>();
    int v = 0;
    for (const auto& color : j.at("vertex")) L.vertex[v++] = color.get<long long>();
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw std::invalid_argument("labeling json: each edge is [u,v,color]");
            L.edge[make_edge(e[0].get<int>(), e[1].get<int>())] = e[2].get<long long>();
        }
    return L;
}

std::string matrix_to_text(const TopcodeMatrix& m) {
    std::ostringstream out;
    for (const auto* row : {&m.x, &m.e, &m.y}) {
        for (size_t i = 0; i < row->size(); ++i) out << (i ? " " : "") << (*row)[i];
        out << '\n';
    }
    return out.str();
}

TopcodeMatrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    std::array<std::vector<long long>, 3> rows;
    std::string line;
    size_t r = 0;
    while (r < 3 && std::getline(in, line)) {
        std::istringstream cells(line);
        long long v;
        while (cells >> v) rows[r].push_back(v);
        if (!rows[r].empty()) ++r;  // skip blank lines
    }
    if (r < 3) throw std::invalid_argument("matrix text: expected three rows");
    return {rows[0], rows[1], rows[2]};
}

std::string matrix_to_json(const TopcodeMatrix& m) {
    json j;
    j["x"] = m.x;
    j["e"] = m.e;
    j["y"] = m.y;
    return j.dump();
}

TopcodeMatrix matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    return {j.at("x").get<std::vector<long long>>(), j.at("e").get<std::vector<long long>>(),
            j.at("y").get<std::vector<long long>>()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

namespace {
bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}
}  // namespace

Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    return has_json_extension(path) ? graph_from_json(text) : graph_from_text(text);
}

Labeling load_labeling(const std::string& path) { return labeling_from_json(read_file(path)); }

TopcodeMatrix load_matrix(const std::string& path) {
    std::string text = read_file(path);
    return has_json_extension(path) ? matrix_from_json(text) : matrix_from_text(text);
}

std::string graph_to_dot(const Graph& g, const Labeling* L) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.p; ++v) {
        out << "  n" << v;
        if (L && L->vertex.count(v))
            out << " [label=\"" << v << ":" << L->vertex.at(v) << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges) {
        out << "  n" << u << " -- n" << v;
        if (L) {
            auto it = L->edge.find(make_edge(u, v));
            if (it != L->edge.end()) out << " [label=\"" << it->second << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace topocode
