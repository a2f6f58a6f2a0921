#include "topocode/search.hpp"
#include "topocode/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace topocode {

namespace {

long long pmod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

std::set<long long> ladder(long long k, long long d, long long n) {
    std::set<long long> s;
    for (long long t = 0; t < n; ++t) s.insert(k + t * d);
    return s;
}

std::set<long long> odd_ladder(long long k, long long d, long long q) {
    std::set<long long> s;
    for (long long t = 1; t <= 2 * q - 1; t += 2) s.insert(k + t * d);
    return s;
}

std::vector<long long> range_vec(long long lo, long long hi) {
    std::vector<long long> out;
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

long long get(const std::map<std::string, long long>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("search needs param " + key);
    return it->second;
}

// ---------------------------------------------------------------------------
// engine 1: vertex assignment with rule-induced edge colors

struct InducedSpace {
    std::vector<std::vector<long long>> domains;  // ascending candidates per vertex
    bool vertex_distinct = true;
    bool shared_pool = false;  // vertex and edge colors may not collide
    std::set<long long> edge_target;
    // candidate edge colors from two endpoint colors (usually a single value)
    std::function<std::vector<long long>(long long, long long)> edge_candidates;
};

struct InducedSearch {
    const Graph& g;
    const InducedSpace& space;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    std::vector<long long> vcolor;
    std::map<Edge, long long> ecolor;
    std::set<long long> used_vertex, used_edge;
    std::vector<std::vector<Edge>> closing;  // edges completed when vertex v is colored

    std::function<bool(const std::vector<long long>&, const std::map<Edge, long long>&)> accept;
    std::optional<std::pair<std::vector<long long>, std::map<Edge, long long>>> hit;

    InducedSearch(const Graph& graph, const InducedSpace& s, long long b)
        : g(graph), space(s), budget(b), vcolor(graph.p, 0), closing(graph.p) {
        for (const auto& e : g.edges) closing[e.second].push_back(e);
        for (auto& list : closing) std::sort(list.begin(), list.end());
    }

    bool collides(long long color, bool as_vertex) const {
        if (space.shared_pool) return used_vertex.count(color) || used_edge.count(color);
        return as_vertex ? (space.vertex_distinct && used_vertex.count(color))
                         : used_edge.count(color) > 0;
    }

    bool place_edges(int v, size_t idx) {
        if (idx == closing[v].size()) return color_vertex(v + 1);
        const Edge& e = closing[v][idx];
        for (long long cand : space.edge_candidates(vcolor[e.first], vcolor[e.second])) {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (!space.edge_target.count(cand) || collides(cand, false)) continue;
            used_edge.insert(cand);
            ecolor[e] = cand;
            if (place_edges(v, idx + 1)) return true;
            used_edge.erase(cand);
            ecolor.erase(e);
            if (out_of_budget) return false;
        }
        return false;
    }

    bool color_vertex(int v) {
        if (v == g.p) {
            if (accept(vcolor, ecolor)) {
                hit = {vcolor, ecolor};
                return true;
            }
            return false;
        }
        bool track = space.vertex_distinct || space.shared_pool;
        for (long long cand : space.domains[v]) {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (collides(cand, true)) continue;
            vcolor[v] = cand;
            if (track) used_vertex.insert(cand);
            bool done = place_edges(v, 0);
            if (track) used_vertex.erase(cand);
            if (done) return true;
            if (out_of_budget) return false;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// engine 2: total bijections over [1, p+q] with independent edge colors

struct PoolSpace {
    long long vertex_hi;  // vertices drawn from [1, vertex_hi]
    // may edge j take `val` given the full vertex assignment and earlier edges?
    std::function<bool(size_t, long long, const std::vector<long long>&,
                       const std::vector<long long>&)>
        edge_ok;
};

struct PoolSearch {
    const Graph& g;
    const PoolSpace& space;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    long long pq;
    std::vector<long long> vcolor, ecolor;
    std::vector<char> used;

    std::function<bool(const std::vector<long long>&, const std::vector<long long>&)> accept;
    std::optional<std::pair<std::vector<long long>, std::vector<long long>>> hit;

    PoolSearch(const Graph& graph, const PoolSpace& s, long long b)
        : g(graph), space(s), budget(b), pq(graph.p + graph.q()), vcolor(graph.p, 0),
          ecolor(graph.edges.size(), 0), used(static_cast<size_t>(pq) + 1, 0) {}

    bool place_edge(size_t j) {
        if (j == g.edges.size()) {
            if (accept(vcolor, ecolor)) {
                hit = {vcolor, ecolor};
                return true;
            }
            return false;
        }
        for (long long val = 1; val <= pq; ++val) {
            if (used[val]) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (!space.edge_ok(j, val, vcolor, ecolor)) continue;
            used[val] = 1;
            ecolor[j] = val;
            if (place_edge(j + 1)) return true;
            used[val] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }

    bool place_vertex(int v) {
        if (v == g.p) return place_edge(0);
        for (long long val = 1; val <= space.vertex_hi; ++val) {
            if (used[val]) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            used[val] = 1;
            vcolor[v] = val;
            if (place_vertex(v + 1)) return true;
            used[val] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

std::function<std::vector<long long>(long long, long long)> single(
    std::function<long long(long long, long long)> rule) {
    return [rule = std::move(rule)](long long a, long long b) {
        return std::vector<long long>{rule(a, b)};
    };
}

struct KindPlan {
    bool induced = false;
    InducedSpace ind;
    bool pooled = false;
    PoolSpace pool;
};

const std::set<std::string>& induced_kinds() {
    static const std::set<std::string> s = {
        "graceful", "set-ordered-graceful", "strongly-graceful", "set-ordered-strongly-graceful",
        "odd-graceful", "set-ordered-odd-graceful", "strongly-odd-graceful", "pan-odd-graceful",
        "felicitous", "super-felicitous", "odd-elegant", "odd-elegant-coloring", "k-graceful",
        "kd-graceful", "kd-arithmetic", "kd-harmonious", "kd-elegant", "kd-odd-graceful",
        "kd-odd-elegant", "kd-odd-elegant-coloring", "totally-graceful", "super-totally-graceful",
        "set-ordered-totally-graceful", "super-set-ordered-totally-graceful",
        "gracefully-total-coloring", "set-ordered-gracefully-total-coloring",
        "kd-gracefully-total", "kd-strongly-gracefully-total", "kd-odd-gracefully-total",
        "kd-strongly-odd-gracefully-total", "kd-harmonious-total-coloring",
        "kd-odd-elegant-total-coloring", "gracefully-total-sequence-coloring",
        "proper-gracefully-total-sequence-coloring", "totally-kd-sequential",
    };
    return s;
}

const std::set<std::string>& pooled_kinds() {
    static const std::set<std::string> s = {
        "edge-magic-total", "super-edge-magic-total", "kl-magic-total", "super-kl-magic-total",
        "kl-edge-difference-magically", "super-kl-edge-difference-magically",
        "edge-magic-graceful", "edge-difference-total", "pan-edge-magic-graceful",
        "pan-edge-difference-total", "6c", "kd-edge-antimagic-total",
        "super-kd-edge-antimagic-total",
    };
    return s;
}

bool sided_kind(const std::string& tag) {
    return tag == "kd-elegant" || tag.rfind("kd-gracefully", 0) == 0 ||
           tag.rfind("kd-strongly", 0) == 0 || tag.rfind("kd-odd-gracefully", 0) == 0 ||
           tag == "kd-harmonious-total-coloring" || tag == "kd-odd-elegant-total-coloring";
}

std::vector<long long> sequence_values(const std::map<std::string, long long>& params,
                                       const std::string& prefix) {
    std::vector<long long> out;
    for (int i = 0;; ++i) {
        auto it = params.find(prefix + std::to_string(i));
        if (it == params.end()) break;
        out.push_back(it->second);
    }
    return out;
}

// candidate windows and induced rules per kind; sided kinds take the bipartition
InducedSpace induced_space(const Graph& g, const std::string& tag,
                           const std::map<std::string, long long>& params,
                           const std::vector<int>& X, const std::vector<int>& Y) {
    long long q = g.q(), p = g.p;
    InducedSpace s;
    auto abs_rule = single([](long long a, long long b) { return std::llabs(a - b); });
    auto common = [&](std::vector<long long> domain) {
        s.domains.assign(g.p, std::move(domain));
    };
    auto sided = [&](const std::vector<long long>& xs, const std::vector<long long>& ys) {
        s.domains.assign(g.p, {});
        for (int v : X) s.domains[v] = xs;
        for (int v : Y) s.domains[v] = ys;
    };

    if (tag == "graceful" || tag == "set-ordered-graceful" || tag == "strongly-graceful" ||
        tag == "set-ordered-strongly-graceful") {
        common(range_vec(0, q));
        s.edge_target = ladder(1, 1, q);
        s.edge_candidates = abs_rule;
    } else if (tag == "odd-graceful" || tag == "set-ordered-odd-graceful" ||
               tag == "strongly-odd-graceful" || tag == "pan-odd-graceful") {
        common(range_vec(0, 2 * q - 1));
        s.edge_target = odd_ladder(0, 1, q);
        if (tag == "pan-odd-graceful")
            s.edge_candidates = [q](long long a, long long b) {
                long long diff = std::llabs(a - b);
                std::vector<long long> out{diff};
                if (2 * q - 1 - diff != diff) out.push_back(2 * q - 1 - diff);
                std::sort(out.begin(), out.end());
                return out;
            };
        else
            s.edge_candidates = abs_rule;
    } else if (tag == "felicitous" || tag == "super-felicitous") {
        common(tag == "felicitous" ? range_vec(0, q) : range_vec(1, p));
        s.edge_target = ladder(0, 1, q);
        s.edge_candidates = single([q](long long a, long long b) { return q ? pmod(a + b, q) : 0; });
    } else if (tag == "odd-elegant" || tag == "odd-elegant-coloring") {
        common(range_vec(0, 2 * q - 1));
        s.vertex_distinct = tag == "odd-elegant";
        s.edge_target = odd_ladder(0, 1, q);
        s.edge_candidates =
            single([q](long long a, long long b) { return q ? pmod(a + b, 2 * q) : 0; });
    } else if (tag == "k-graceful") {
        long long k = get(params, "k");
        common(range_vec(0, q + k - 1));
        s.edge_target = ladder(k, 1, q);
        s.edge_candidates = abs_rule;
    } else if (tag == "kd-graceful" || tag == "kd-arithmetic" || tag == "kd-harmonious") {
        long long k = get(params, "k"), d = get(params, "d");
        common(range_vec(0, k + (q - 1) * d));
        s.edge_target = ladder(k, d, q);
        if (tag == "kd-graceful") s.edge_candidates = abs_rule;
        else if (tag == "kd-arithmetic")
            s.edge_candidates = single([](long long a, long long b) { return a + b; });
        else
            s.edge_candidates = single([k, d, q](long long a, long long b) {
                return q ? k + pmod(a + b - k, q * d) : k;
            });
    } else if (tag == "kd-elegant") {
        long long k = get(params, "k"), d = get(params, "d");
        std::vector<long long> xs, ys;
        for (long long t = 0; t < q; ++t) xs.push_back(t * d);
        for (long long t = 0; t < q; ++t) ys.push_back(k + t * d);
        sided(xs, ys);
        s.vertex_distinct = false;
        s.edge_target = ladder(0, d, q);
        s.edge_candidates =
            single([k, d, q](long long a, long long b) { return q ? pmod(a + b - k, q * d) : 0; });
    } else if (tag == "kd-odd-graceful" || tag == "kd-odd-elegant" ||
               tag == "kd-odd-elegant-coloring") {
        long long k = get(params, "k"), d = get(params, "d");
        common(range_vec(0, k + (2 * q - 1) * d));
        if (tag == "kd-odd-graceful") {
            s.edge_target = odd_ladder(k, d, q);
            s.edge_candidates = abs_rule;
        } else {
            s.vertex_distinct = tag == "kd-odd-elegant";
            if (tag == "kd-odd-elegant") {
                s.edge_target = odd_ladder(k, d, q);
            } else {
                s.edge_target = {k};
                for (long long t = 1; t <= 2 * q - 3; t += 2) s.edge_target.insert(k + t * d);
            }
            s.edge_candidates = single([k, d, q](long long a, long long b) {
                return q ? k + pmod(a + b - k, 2 * q * d) : k;
            });
        }
    } else if (tag == "totally-graceful" || tag == "super-totally-graceful" ||
               tag == "set-ordered-totally-graceful" || tag == "super-set-ordered-totally-graceful") {
        bool super = tag.rfind("super-", 0) == 0;
        common(super ? range_vec(q + 1, p + q) : range_vec(1, p + q));
        s.shared_pool = true;
        s.edge_target = super ? ladder(1, 1, q) : ladder(1, 1, p + q);
        s.edge_candidates = abs_rule;
    } else if (tag == "gracefully-total-coloring" || tag == "set-ordered-gracefully-total-coloring") {
        // any instance shifts to min vertex color 1, so [1, q+1] is a complete window
        common(range_vec(1, q + 1));
        s.vertex_distinct = false;
        s.edge_target = ladder(1, 1, q);
        s.edge_candidates = abs_rule;
    } else if (tag == "kd-gracefully-total" || tag == "kd-strongly-gracefully-total" ||
               tag == "kd-odd-gracefully-total" || tag == "kd-strongly-odd-gracefully-total" ||
               tag == "kd-harmonious-total-coloring" || tag == "kd-odd-elegant-total-coloring") {
        long long k = get(params, "k"), d = get(params, "d");
        bool odd = tag == "kd-odd-gracefully-total" || tag == "kd-strongly-odd-gracefully-total" ||
                   tag == "kd-odd-elegant-total-coloring";
        long long hi = k + (odd ? 2 * q - 1 : q - 1) * d;
        std::vector<long long> xs, ys;
        for (long long v = 0; v <= hi; v += d) xs.push_back(v);
        for (long long v = k; v <= hi; v += d) ys.push_back(v);
        sided(xs, ys);
        s.vertex_distinct = false;
        if (tag == "kd-harmonious-total-coloring") {
            s.edge_target = ladder(k, d, q);
            s.edge_candidates = single([k, d, q](long long a, long long b) {
                return q ? k + pmod(a + b - k, q * d) : k;
            });
        } else if (tag == "kd-odd-elegant-total-coloring") {
            s.edge_target = odd_ladder(k, d, q);
            s.edge_candidates = single([k, d, q](long long a, long long b) {
                return q ? k + pmod(a + b - k, 2 * q * d) : k;
            });
        } else {
            s.edge_target = odd ? odd_ladder(k, d, q) : ladder(k, d, q);
            s.edge_candidates = abs_rule;
        }
    } else if (tag == "gracefully-total-sequence-coloring" ||
               tag == "proper-gracefully-total-sequence-coloring") {
        auto A = sequence_values(params, "a");
        auto B = sequence_values(params, "b");
        if (A.empty() || B.empty())
            throw std::invalid_argument("search needs params a0,a1,... and b0,b1,...");
        std::set<long long> domain(A.begin(), A.end());
        domain.insert(B.begin(), B.end());
        common({domain.begin(), domain.end()});
        s.vertex_distinct = false;
        s.edge_target = {B.begin(), B.end()};
        s.edge_candidates = abs_rule;
    } else if (tag == "totally-kd-sequential") {
        long long k = get(params, "k"), d = get(params, "d");
        auto pool = ladder(k, d, p + q);
        common({pool.begin(), pool.end()});
        s.shared_pool = true;
        s.edge_target = pool;
        s.edge_candidates =
            single([k, d](long long a, long long b) { return k - d + std::llabs(a - b); });
    } else {
        throw std::logic_error("no induced space for " + tag);
    }
    return s;
}

PoolSpace pooled_space(const Graph& g, const std::string& tag,
                       const std::map<std::string, long long>& params) {
    long long p = g.p, q = g.q(), pq = p + q;
    PoolSpace s;
    bool super = tag.rfind("super-", 0) == 0 ||
                 (tag == "edge-magic-graceful" && params.count("super") &&
                  params.at("super") == 1);
    s.vertex_hi = super ? p : pq;
    auto vsum = [&g](size_t j, const std::vector<long long>& vc) {
        return vc[g.edges[j].first] + vc[g.edges[j].second];
    };
    auto vdiff = [&g](size_t j, const std::vector<long long>& vc) {
        return std::llabs(vc[g.edges[j].first] - vc[g.edges[j].second]);
    };

    if (tag == "edge-magic-total" || tag == "super-edge-magic-total") {
        auto want = params.count("c") ? std::optional<long long>(params.at("c")) : std::nullopt;
        s.edge_ok = [vsum, want](size_t j, long long val, const std::vector<long long>& vc,
                                 const std::vector<long long>& ec) {
            long long target = want ? *want : (j == 0 ? vsum(0, vc) + val : vsum(0, vc) + ec[0]);
            return vsum(j, vc) + val == target;
        };
    } else if (tag == "kl-magic-total" || tag == "super-kl-magic-total") {
        long long lambda = params.count("lambda") ? params.at("lambda") : 1;
        auto want = params.count("k") ? std::optional<long long>(params.at("k")) : std::nullopt;
        s.edge_ok = [vsum, lambda, want](size_t j, long long val, const std::vector<long long>& vc,
                                         const std::vector<long long>& ec) {
            long long target =
                want ? *want : (j == 0 ? vsum(0, vc) - lambda * val : vsum(0, vc) - lambda * ec[0]);
            return vsum(j, vc) - lambda * val == target;
        };
    } else if (tag == "kl-edge-difference-magically" || tag == "super-kl-edge-difference-magically") {
        long long lambda = params.count("lambda") ? params.at("lambda") : 1;
        if (lambda == 0) throw std::invalid_argument("lambda must be non-zero");
        auto want = params.count("k") ? std::optional<long long>(params.at("k")) : std::nullopt;
        s.edge_ok = [vdiff, lambda, want](size_t j, long long val, const std::vector<long long>& vc,
                                          const std::vector<long long>& ec) {
            long long target =
                want ? *want : (j == 0 ? vdiff(0, vc) - lambda * val : vdiff(0, vc) - lambda * ec[0]);
            return vdiff(j, vc) - lambda * val == target;
        };
    } else if (tag == "edge-magic-graceful") {
        auto want = params.count("k") ? std::optional<long long>(params.at("k")) : std::nullopt;
        s.edge_ok = [vsum, want](size_t j, long long val, const std::vector<long long>& vc,
                                 const std::vector<long long>& ec) {
            long long target = want ? *want
                                    : (j == 0 ? std::llabs(vsum(0, vc) - val)
                                              : std::llabs(vsum(0, vc) - ec[0]));
            return std::llabs(vsum(j, vc) - val) == target;
        };
    } else if (tag == "edge-difference-total") {
        auto want = params.count("k") ? std::optional<long long>(params.at("k")) : std::nullopt;
        s.edge_ok = [vdiff, want](size_t j, long long val, const std::vector<long long>& vc,
                                  const std::vector<long long>& ec) {
            long long target = want ? *want : (j == 0 ? val + vdiff(0, vc) : ec[0] + vdiff(0, vc));
            return val + vdiff(j, vc) == target;
        };
    } else if (tag == "pan-edge-magic-graceful") {
        s.edge_ok = [vsum, pq](size_t j, long long val, const std::vector<long long>& vc,
                               const std::vector<long long>& ec) {
            if (j == 0) return true;
            long long base0 = std::llabs(vsum(0, vc) - ec[0]);
            long long base = std::llabs(vsum(j, vc) - val);
            // some branch pair must share a constant with edge 0
            for (long long k0 : {base0, pq - base0})
                if (base == k0 || pq - base == k0) return true;
            return false;
        };
    } else if (tag == "pan-edge-difference-total") {
        s.edge_ok = [vdiff, pq](size_t j, long long val, const std::vector<long long>& vc,
                                const std::vector<long long>& ec) {
            if (j == 0) return true;
            long long d0 = vdiff(0, vc);
            long long dj = vdiff(j, vc);
            for (long long k0 : {ec[0] + d0, ec[0] + pq - d0})
                if (val + dj == k0 || val + pq - dj == k0) return true;
            return false;
        };
    } else if (tag == "6c") {
        auto want = params.count("k") ? std::optional<long long>(params.at("k")) : std::nullopt;
        s.edge_ok = [vdiff, want](size_t j, long long val, const std::vector<long long>& vc,
                                  const std::vector<long long>& ec) {
            long long target = want ? *want : (j == 0 ? val + vdiff(0, vc) : ec[0] + vdiff(0, vc));
            return val + vdiff(j, vc) == target;
        };
    } else if (tag == "kd-edge-antimagic-total" || tag == "super-kd-edge-antimagic-total") {
        long long k = get(params, "k"), d = get(params, "d");
        auto target = ladder(k, d, q);
        s.edge_ok = [vsum, target, &g](size_t j, long long val, const std::vector<long long>& vc,
                                       const std::vector<long long>& ec) {
            long long sum = vsum(j, vc) + val;
            if (!target.count(sum)) return false;
            for (size_t i = 0; i < j; ++i)
                if (vc[g.edges[i].first] + vc[g.edges[i].second] + ec[i] == sum) return false;
            return true;
        };
    } else {
        throw std::logic_error("no pooled space for " + tag);
    }
    return s;
}

Labeling assemble(const Graph& g, const std::string& tag,
                  const std::map<std::string, long long>& params,
                  const std::vector<long long>& vc, const std::map<Edge, long long>& ec) {
    Labeling L;
    L.kind = tag;
    L.params = params;
    L.vertex = vertex_colors_from_vector(vc);
    L.edge = ec;
    return L;
}

}  // namespace

bool searchable_kind(const std::string& kind) {
    std::string tag = canonical_kind(kind);
    return induced_kinds().count(tag) > 0 || pooled_kinds().count(tag) > 0;
}

SearchResult search_labeling(const Graph& g, const std::string& kind,
                             const std::map<std::string, long long>& params, long long budget) {
    std::string tag = canonical_kind(kind);
    SearchResult result;

    if (induced_kinds().count(tag)) {
        // sided kinds need a bipartition for their frames; try both orientations
        std::vector<std::pair<std::vector<int>, std::vector<int>>> orientations;
        if (sided_kind(tag)) {
            auto parts = bipartition(g);
            if (!parts) return result;  // nothing to enumerate: verify would reject everything
            orientations.push_back(*parts);
            orientations.emplace_back(parts->second, parts->first);
        } else {
            orientations.push_back({{}, {}});
        }
        for (const auto& [X, Y] : orientations) {
            InducedSpace space = induced_space(g, tag, params, X, Y);
            InducedSearch engine(g, space, budget - result.nodes);
            engine.accept = [&](const std::vector<long long>& vc,
                                const std::map<Edge, long long>& ec) {
                return verify(g, assemble(g, tag, params, vc, ec), tag).accepted;
            };
            engine.color_vertex(0);
            result.nodes += engine.nodes;
            if (engine.hit) {
                result.status = SearchStatus::found;
                result.labeling = assemble(g, tag, params, engine.hit->first, engine.hit->second);
                return result;
            }
            if (engine.out_of_budget) {
                result.status = SearchStatus::budget_exceeded;
                return result;
            }
        }
        result.status = SearchStatus::absent;
        return result;
    }

    if (pooled_kinds().count(tag)) {
        PoolSpace space = pooled_space(g, tag, params);
        PoolSearch engine(g, space, budget);
        engine.accept = [&](const std::vector<long long>& vc, const std::vector<long long>& ec) {
            std::map<Edge, long long> edges;
            for (size_t j = 0; j < g.edges.size(); ++j) edges[g.edges[j]] = ec[j];
            return verify(g, assemble(g, tag, params, vc, edges), tag).accepted;
        };
        engine.place_vertex(0);
        result.nodes = engine.nodes;
        if (engine.hit) {
            std::map<Edge, long long> edges;
            for (size_t j = 0; j < g.edges.size(); ++j) edges[g.edges[j]] = engine.hit->second[j];
            result.status = SearchStatus::found;
            result.labeling = assemble(g, tag, params, engine.hit->first, edges);
        } else {
            result.status =
                engine.out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::absent;
        }
        return result;
    }

    throw std::invalid_argument("search not supported for kind: " + tag);
}

}  // namespace topocode
