#pragma once
// Serialization: graph / labeling / Topcode-matrix readers and writers in
// the text and JSON forms the CLI accepts, plus Graphviz export.

#include "topocode/labeling.hpp"
#include "topocode/topcode.hpp"

#include <string>

namespace topocode {

// text: first line "p q", then q lines "u v" (0-based endpoints)
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);
// JSON: {"p": int, "edges": [[u,v], ...]}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// JSON: {"kind": tag, "params": {...}, "vertex": [ints], "edges": [[u,v,color], ...]}
std::string labeling_to_json(const Labeling& L);
Labeling labeling_from_json(const std::string& text);

// text: three whitespace-separated rows (x, e, y), one per line
std::string matrix_to_text(const TopcodeMatrix& m);
TopcodeMatrix matrix_from_text(const std::string& text);
// JSON: {"x": [...], "e": [...], "y": [...]}
std::string matrix_to_json(const TopcodeMatrix& m);
TopcodeMatrix matrix_from_json(const std::string& text);

// extension dispatch: ".json" picks the JSON reader, anything else text
Graph load_graph(const std::string& path);
Labeling load_labeling(const std::string& path);
TopcodeMatrix load_matrix(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Graphviz dot output; vertex/edge colors appear as labels when present
std::string graph_to_dot(const Graph& g, const Labeling* L = nullptr);

}  // namespace topocode
