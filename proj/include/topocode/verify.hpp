#pragma once

#include "graph.hpp"
#include "labeling.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace topocode {

// one failed clause of a kind's definition, e.g. {"B-4 edge-color-set", "missing color 3"}
struct Violation {
    std::string condition;
    std::string witness;
};

struct VerificationReport {
    bool accepted = true;
    std::vector<Violation> violations;

    void fail(std::string condition, std::string witness) {
        accepted = false;
        violations.push_back({std::move(condition), std::move(witness)});
    }
};

using Bipartition = std::pair<std::vector<int>, std::vector<int>>;

// resolves user-facing spellings ("(k,d)-graceful", "set-ordered graceful") to the
// canonical kebab-case tag; throws std::invalid_argument on an unknown tag
std::string canonical_kind(const std::string& kind);

// the closed tag catalog, canonical spellings, sorted
std::vector<std::string> known_kinds();

// verifies L against the definition of `kind` (defaults to L.kind).  Set-ordered and
// frame-based kinds take the bipartition from `parts` when given; otherwise the unique
// 2-coloring of a connected bipartite graph is derived and both orientations are tried
// (the first orientation's report is returned when neither passes).
VerificationReport verify(const Graph& g, const Labeling& L);
VerificationReport verify(const Graph& g, const Labeling& L, const std::string& kind);
VerificationReport verify(const Graph& g, const Labeling& L, const std::string& kind,
                          const std::optional<Bipartition>& parts);

// pairwise matchings: twin-odd-graceful, v-image, e-image, kd-harmonious-image,
// 6c-complementary, reciprocal-inverse
VerificationReport verify_matching(const Graph& ga, const Labeling& la, const Graph& gb,
                                   const Labeling& lb, const std::string& kind);

}  // namespace topocode
