#pragma once
#include "graph.hpp"
#include "labeling.hpp"

#include <map>
#include <optional>
#include <string>

namespace topocode {

enum class SearchStatus { found, absent, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<Labeling> labeling;  // set iff status == found
    long long nodes = 0;               // assignment attempts spent
};

// lexicographically first labeling of the kind accepted by verify(), searching
// a kind-specific canonical color window; absent means the window is exhausted
SearchResult search_labeling(const Graph& g, const std::string& kind,
                             const std::map<std::string, long long>& params = {},
                             long long budget = 5'000'000);

// kinds search_labeling knows how to enumerate
bool searchable_kind(const std::string& kind);

}  // namespace topocode
