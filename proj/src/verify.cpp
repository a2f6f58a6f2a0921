#include "topocode/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace topocode {

namespace {

std::string num(long long v) { return std::to_string(v); }

std::string edge_name(const Edge& e) {
    return num(e.first) + "-" + num(e.second);
}

long long pmod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// kind catalog

std::string normalize(const std::string& kind) {
    std::string out;
    for (char ch : kind) {
        if (ch == '(' || ch == ')' || ch == ',' || ch == ' ' || ch == '_') ch = '-';
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    std::string collapsed;
    for (char ch : out) {
        if (ch == '-' && !collapsed.empty() && collapsed.back() == '-') continue;
        collapsed += ch;
    }
    while (!collapsed.empty() && collapsed.front() == '-') collapsed.erase(collapsed.begin());
    while (!collapsed.empty() && collapsed.back() == '-') collapsed.pop_back();
    return collapsed;
}

const std::vector<std::string>& catalog() {
    static const std::vector<std::string> kinds = {
        // basic W-type vertex labelings
        "graceful", "set-ordered-graceful", "strongly-graceful", "set-ordered-strongly-graceful",
        "odd-graceful", "set-ordered-odd-graceful", "strongly-odd-graceful",
        // classic labelings
        "edge-magic-total", "super-edge-magic-total", "felicitous", "super-felicitous",
        "odd-elegant", "k-graceful", "edge-magic-graceful", "edge-difference-total",
        "pan-edge-magic-graceful", "pan-edge-difference-total", "pan-odd-graceful", "6c",
        "totally-graceful", "super-totally-graceful", "set-ordered-totally-graceful",
        "super-set-ordered-totally-graceful",
        // (k,d)-parameterized labelings
        "kd-graceful", "kd-arithmetic", "kd-edge-antimagic-total", "super-kd-edge-antimagic-total",
        "kd-harmonious", "kd-elegant", "kd-odd-graceful", "kd-odd-elegant", "odd-elegant-coloring",
        "kd-odd-elegant-coloring", "kd-edge-magic-total", "kd-graceful-difference",
        "kd-felicitous-difference",
        // gracefully total colorings
        "gracefully-total-coloring", "set-ordered-gracefully-total-coloring",
        "kd-gracefully-total", "kd-strongly-gracefully-total", "kd-odd-gracefully-total",
        "kd-strongly-odd-gracefully-total", "kd-edge-antimagic-total-coloring",
        "kd-harmonious-total-coloring", "kd-odd-elegant-total-coloring",
        "kd-edge-magic-total-coloring", "kd-strongly-edge-magic-total-coloring",
        "kd-edge-difference-total-coloring", "kd-strongly-edge-difference-total-coloring",
        "kd-felicitous-difference-total-coloring", "kd-strongly-felicitous-difference-total-coloring",
        "kd-graceful-difference-total-coloring", "kd-strongly-graceful-difference-total-coloring",
        "gracefully-total-sequence-coloring", "proper-gracefully-total-sequence-coloring",
        // magic-family total colorings (constant condition only)
        "edge-magic-total-coloring", "graceful-difference-total-coloring",
        "edge-difference-total-coloring", "felicitous-difference-total-coloring",
        // parameterized (a,b,c) proper total colorings
        "parameterized-edge-magic-proper-total-coloring",
        "parameterized-edge-difference-proper-total-coloring",
        "parameterized-felicitous-difference-proper-total-coloring",
        "parameterized-graceful-difference-proper-total-coloring",
        // magically total labelings
        "kl-magic-total", "super-kl-magic-total", "kl-edge-difference-magically",
        "super-kl-edge-difference-magically", "kd-edge-difference-kl-magically",
        "totally-kd-sequential", "kd-gracefully-e-image",
    };
    return kinds;
}

const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> table = {
        {"k-d-graceful", "kd-graceful"},
        {"k-d-arithmetic", "kd-arithmetic"},
        {"k-d-edge-antimagic-total", "kd-edge-antimagic-total"},
        {"super-k-d-edge-antimagic-total", "super-kd-edge-antimagic-total"},
        {"k-d-harmonious", "kd-harmonious"},
        {"k-d-elegant", "kd-elegant"},
        {"k-d-odd-graceful", "kd-odd-graceful"},
        {"k-d-odd-elegant", "kd-odd-elegant"},
        {"k-d-odd-elegant-coloring", "kd-odd-elegant-coloring"},
        {"k-d-edge-magic-total", "kd-edge-magic-total"},
        {"k-d-graceful-difference", "kd-graceful-difference"},
        {"k-d-felicitous-difference", "kd-felicitous-difference"},
        {"k-d-gracefully-total", "kd-gracefully-total"},
        {"k-d-gracefully-total-coloring", "kd-gracefully-total"},
        {"kd-gracefully-total-coloring", "kd-gracefully-total"},
        {"strongly-kd-gracefully-total", "kd-strongly-gracefully-total"},
        {"k-d-odd-gracefully-total", "kd-odd-gracefully-total"},
        {"kd-odd-gracefully-total-coloring", "kd-odd-gracefully-total"},
        {"k-d-edge-antimagic-total-coloring", "kd-edge-antimagic-total-coloring"},
        {"k-d-harmonious-total-coloring", "kd-harmonious-total-coloring"},
        {"k-d-odd-elegant-total-coloring", "kd-odd-elegant-total-coloring"},
        {"strongly-edge-magic-kd-total-coloring", "kd-strongly-edge-magic-total-coloring"},
        {"strongly-edge-magic-k-d-total-coloring", "kd-strongly-edge-magic-total-coloring"},
        {"edge-magic-k-d-total-coloring", "kd-edge-magic-total-coloring"},
        {"edge-difference-k-d-total-coloring", "kd-edge-difference-total-coloring"},
        {"felicitous-difference-k-d-total-coloring", "kd-felicitous-difference-total-coloring"},
        {"graceful-difference-k-d-total-coloring", "kd-graceful-difference-total-coloring"},
        {"k-lambda-magic-total", "kl-magic-total"},
        {"k-l-magic-total", "kl-magic-total"},
        {"k-λ-magic-total", "kl-magic-total"},
        {"super-k-lambda-magic-total", "super-kl-magic-total"},
        {"super-k-λ-magic-total", "super-kl-magic-total"},
        {"k-lambda-edge-difference-magically", "kl-edge-difference-magically"},
        {"k-λ-edge-difference-magically", "kl-edge-difference-magically"},
        {"k-d-edge-difference-k*-λ-magically", "kd-edge-difference-kl-magically"},
        {"k-d-edge-difference-k*-lambda-magically", "kd-edge-difference-kl-magically"},
        {"k-d-edge-difference-k-lambda-magically", "kd-edge-difference-kl-magically"},
        {"kd-edge-difference-kstar-lambda-magically", "kd-edge-difference-kl-magically"},
        {"totally-k-d-sequential", "totally-kd-sequential"},
        {"k-d-gracefully-e-image", "kd-gracefully-e-image"},
        {"kd-gracefully-e-image-total-coloring", "kd-gracefully-e-image"},
        {"k-d-gracefully-e-image-total-coloring", "kd-gracefully-e-image"},
        {"6c-labeling", "6c"},
        {"six-c", "6c"},
        {"elegant-coloring", "odd-elegant-coloring"},
        {"proper-gracefully-total-sequence", "proper-gracefully-total-sequence-coloring"},
        {"gracefully-total-sequence", "gracefully-total-sequence-coloring"},
    };
    return table;
}

// kinds whose clauses read the bipartition (frames, set-ordered, sided rules)
bool uses_parts(const std::string& tag) {
    static const std::set<std::string> sensitive = {
        "set-ordered-graceful", "set-ordered-strongly-graceful", "set-ordered-odd-graceful",
        "6c", "set-ordered-totally-graceful", "super-set-ordered-totally-graceful",
        "kd-elegant", "kd-felicitous-difference",
        "set-ordered-gracefully-total-coloring",
        "kd-gracefully-total", "kd-strongly-gracefully-total", "kd-odd-gracefully-total",
        "kd-strongly-odd-gracefully-total", "kd-edge-antimagic-total-coloring",
        "kd-harmonious-total-coloring", "kd-odd-elegant-total-coloring",
        "kd-edge-magic-total-coloring", "kd-strongly-edge-magic-total-coloring",
        "kd-edge-difference-total-coloring", "kd-strongly-edge-difference-total-coloring",
        "kd-felicitous-difference-total-coloring", "kd-strongly-felicitous-difference-total-coloring",
        "kd-graceful-difference-total-coloring", "kd-strongly-graceful-difference-total-coloring",
        "parameterized-edge-magic-proper-total-coloring",
        "parameterized-edge-difference-proper-total-coloring",
        "parameterized-felicitous-difference-proper-total-coloring",
        "parameterized-graceful-difference-proper-total-coloring",
        "edge-magic-total-coloring", "graceful-difference-total-coloring",
        "edge-difference-total-coloring", "felicitous-difference-total-coloring",
        "kd-edge-difference-kl-magically", "kd-gracefully-e-image",
    };
    return sensitive.count(tag) > 0;
}

// ---------------------------------------------------------------------------
// shared checking context

struct Check {
    const Graph& g;
    const Labeling& L;
    std::vector<int> X, Y;          // bipartition, possibly empty
    std::vector<char> side;         // per vertex: 0 none, 1 X, 2 Y
    std::map<Edge, long long> E;    // effective edge colors
    VerificationReport rep;

    Check(const Graph& graph, const Labeling& lab) : g(graph), L(lab), side(graph.p, 0) {}

    void set_parts(const std::vector<int>& xs, const std::vector<int>& ys) {
        X = xs;
        Y = ys;
        side.assign(g.p, 0);
        for (int v : X) side[v] = 1;
        for (int v : Y) side[v] = 2;
    }

    long long vc(int v) const { return L.vcolor(v); }
    long long ec(const Edge& e) const { return E.at(e); }

    std::vector<long long> vertex_colors() const {
        std::vector<long long> out;
        out.reserve(g.p);
        for (int v = 0; v < g.p; ++v) out.push_back(vc(v));
        return out;
    }
    std::vector<long long> edge_colors() const {
        std::vector<long long> out;
        out.reserve(g.edges.size());
        for (const auto& e : g.edges) out.push_back(ec(e));
        return out;
    }

    void fail(const std::string& condition, const std::string& witness) {
        rep.fail(condition, witness);
    }

    // splits an edge into its (X-end, Y-end); falls back to (first, second)
    std::pair<int, int> sided(const Edge& e) const {
        if (side[e.first] == 2 || side[e.second] == 1) return {e.second, e.first};
        return {e.first, e.second};
    }
};

std::map<Edge, long long> stored_edges(const Graph& g, const Labeling& L) {
    if (!L.edge_total(g))
        throw std::invalid_argument("kind requires stored edge colors for every edge");
    std::map<Edge, long long> out;
    for (const auto& e : g.edges) out[e] = L.edge.at(e);
    return out;
}

// computes the induced edge colors and flags stored colors that disagree
std::map<Edge, long long> resolve_rule(Check& c, const std::string& clause,
                                       const std::function<long long(long long, long long)>& rule) {
    std::map<Edge, long long> out;
    for (const auto& e : c.g.edges) {
        long long want = rule(c.L.vcolor(e.first), c.L.vcolor(e.second));
        auto it = c.L.edge.find(e);
        if (it != c.L.edge.end() && it->second != want)
            c.fail(clause, "edge " + edge_name(e) + " stored " + num(it->second) +
                               " differs from induced " + num(want));
        out[e] = want;
    }
    return out;
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

std::string set_preview(const std::set<long long>& s) {
    std::ostringstream os;
    os << "{";
    int shown = 0;
    for (long long v : s) {
        if (shown++) os << ",";
        if (shown > 6) {
            os << "...";
            break;
        }
        os << v;
    }
    os << "}";
    return os.str();
}

// values must be pairwise distinct and exactly `want`
void check_exact_set(Check& c, const std::string& clause, const std::vector<long long>& values,
                     const std::set<long long>& want) {
    std::set<long long> seen;
    for (long long v : values) {
        if (!seen.insert(v).second) {
            c.fail(clause, "duplicate edge color " + num(v));
            return;
        }
        if (!want.count(v)) {
            c.fail(clause, "color " + num(v) + " outside " + set_preview(want));
            return;
        }
    }
    if (seen.size() != want.size())
        for (long long v : want)
            if (!seen.count(v)) {
                c.fail(clause, "missing color " + num(v));
                return;
            }
}

void check_vertex_injective(Check& c, const std::string& clause = "vertex-injective") {
    std::map<long long, int> seen;
    for (int v = 0; v < c.g.p; ++v) {
        auto [it, fresh] = seen.emplace(c.vc(v), v);
        if (!fresh) {
            c.fail(clause, "vertices " + num(it->second) + " and " + num(v) +
                               " share color " + num(c.vc(v)));
            return;
        }
    }
}

void check_vertex_range(Check& c, long long lo, long long hi,
                        const std::string& clause = "vertex-codomain") {
    for (int v = 0; v < c.g.p; ++v)
        if (c.vc(v) < lo || c.vc(v) > hi) {
            c.fail(clause, "vertex " + num(v) + " color " + num(c.vc(v)) + " outside [" +
                               num(lo) + "," + num(hi) + "]");
            return;
        }
}

void check_min_vertex_zero(Check& c, const std::string& clause) {
    if (c.g.p == 0) return;
    long long mn = c.vc(0);
    for (int v = 1; v < c.g.p; ++v) mn = std::min(mn, c.vc(v));
    if (mn != 0) c.fail(clause, "smallest vertex color is " + num(mn) + ", not 0");
}

// all p+q colors pairwise distinct and exactly [lo, hi]
void check_total_bijection(Check& c, long long lo, long long hi,
                           const std::string& clause = "total-bijection") {
    std::map<long long, std::string> seen;
    auto place = [&](long long color, const std::string& who) {
        if (color < lo || color > hi) {
            c.fail(clause, who + " color " + num(color) + " outside [" + num(lo) + "," + num(hi) + "]");
            return false;
        }
        auto [it, fresh] = seen.emplace(color, who);
        if (!fresh) {
            c.fail(clause, who + " repeats color " + num(color) + " of " + it->second);
            return false;
        }
        return true;
    };
    for (int v = 0; v < c.g.p; ++v)
        if (!place(c.vc(v), "vertex " + num(v))) return;
    for (const auto& e : c.g.edges)
        if (!place(c.ec(e), "edge " + edge_name(e))) return;
    if (static_cast<long long>(seen.size()) != hi - lo + 1)
        c.fail(clause, "colors do not cover [" + num(lo) + "," + num(hi) + "]");
}

void check_bipartite_needed(Check& c) {
    if (c.X.empty() && c.Y.empty() && c.g.p > 0)
        c.fail("bipartite", "kind needs a bipartition and none exists or was supplied");
}

void check_set_ordered(Check& c, const std::string& clause = "set-ordered") {
    if (c.X.empty() || c.Y.empty()) {
        c.fail(clause, "bipartition with two nonempty sides required");
        return;
    }
    long long mx = c.vc(c.X[0]), mn = c.vc(c.Y[0]);
    for (int v : c.X) mx = std::max(mx, c.vc(v));
    for (int v : c.Y) mn = std::min(mn, c.vc(v));
    if (mx >= mn)
        c.fail(clause, "max f(X)=" + num(mx) + " not below min f(Y)=" + num(mn));
}

// per-edge expression must be one constant; named param wins when present
void check_constant(Check& c, const std::string& clause,
                    const std::function<long long(const Edge&)>& expr,
                    std::optional<long long> want,
                    std::optional<long long> strictly_above = std::nullopt) {
    if (c.g.edges.empty()) return;
    long long target = want ? *want : expr(c.g.edges.front());
    for (const auto& e : c.g.edges) {
        long long got = expr(e);
        if (got != target) {
            c.fail(clause, "edge " + edge_name(e) + " gives " + num(got) + ", expected " + num(target));
            return;
        }
    }
    if (strictly_above && target <= *strictly_above)
        c.fail(clause, "constant " + num(target) + " not above " + num(*strictly_above));
}

// the unique perfect matching of a tree, grown from the leaves
std::optional<std::vector<Edge>> tree_perfect_matching(const Graph& g) {
    if (g.p % 2 != 0) return std::nullopt;
    auto adj = g.adjacency();
    std::vector<int> deg(g.p);
    std::vector<char> used(g.p, 0);
    std::vector<int> stack;
    for (int v = 0; v < g.p; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] == 1) stack.push_back(v);
    }
    std::vector<Edge> matching;
    int matched = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (used[u]) continue;
        int partner = -1;
        for (int w : adj[u])
            if (!used[w]) partner = w;
        if (partner < 0) return std::nullopt;  // an exposed leaf
        used[u] = used[partner] = 1;
        matched += 2;
        matching.push_back({std::min(u, partner), std::max(u, partner)});
        for (int w : adj[partner])
            if (!used[w] && --deg[w] == 1) stack.push_back(w);
    }
    if (matched != g.p) return std::nullopt;
    return matching;
}

// Kuhn's augmenting paths over the qualified edges only
bool perfect_matching_exists(Check& c, const std::function<bool(const Edge&)>& qualified) {
    if (c.g.p == 0) return true;
    if (c.g.p % 2 != 0 || c.X.size() != c.Y.size()) return false;
    std::map<int, std::vector<int>> adj;  // x -> qualified neighbours in Y
    for (const auto& e : c.g.edges) {
        if (!qualified(e)) continue;
        auto [x, y] = c.sided(e);
        adj[x].push_back(y);
    }
    std::map<int, int> match_y;  // y -> x
    std::function<bool(int, std::set<int>&)> try_x = [&](int x, std::set<int>& visited) {
        for (int y : adj[x]) {
            if (visited.count(y)) continue;
            visited.insert(y);
            auto it = match_y.find(y);
            if (it == match_y.end() || try_x(it->second, visited)) {
                match_y[y] = x;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int x : c.X) {
        std::set<int> visited;
        if (try_x(x, visited)) ++size;
    }
    return size == static_cast<int>(c.X.size());
}

// ---------------------------------------------------------------------------
// basic W-type family (B-1 .. B-8)

void basic_family(Check& c, bool odd, bool set_ordered, bool strongly) {
    long long q = c.g.q();
    c.E = resolve_rule(c, "edge-rule", [](long long a, long long b) { return std::llabs(a - b); });
    check_vertex_injective(c, "B-1 vertex-injective");
    if (!odd) {
        check_vertex_range(c, 0, q, "B-2 vertex-codomain");
        check_min_vertex_zero(c, "B-2 vertex-codomain");
    } else {
        check_vertex_range(c, 0, 2 * q - 1, "B-3 vertex-codomain");
        check_min_vertex_zero(c, "B-3 vertex-codomain");
    }
    if (!odd)
        check_exact_set(c, "B-4 edge-color-set", c.edge_colors(), ladder(1, 1, q));
    else
        check_exact_set(c, "B-5 edge-color-set", c.edge_colors(), odd_ladder(0, 1, q));
    if (set_ordered) check_set_ordered(c, "B-6 set-ordered");
    if (strongly) {
        std::string clause = odd ? "B-8 perfect-matching" : "B-7 perfect-matching";
        long long want = odd ? 2 * q - 1 : q;
        if (!is_tree(c.g).tree) {
            c.fail(clause, "graph is not a tree");
            return;
        }
        auto matching = tree_perfect_matching(c.g);
        if (!matching) {
            c.fail(clause, "tree has no perfect matching");
            return;
        }
        for (const auto& e : *matching)
            if (c.vc(e.first) + c.vc(e.second) != want) {
                c.fail(clause, "matching edge " + edge_name(e) + " sums to " +
                                   num(c.vc(e.first) + c.vc(e.second)) + ", expected " + num(want));
                return;
            }
    }
}

// ---------------------------------------------------------------------------
// classic labelings

void edge_magic_total_labeling(Check& c, bool super) {
    long long pq = c.g.p + c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_total_bijection(c, 1, pq);
    std::optional<long long> want;
    if (c.L.has_param("c")) want = c.L.param("c");
    check_constant(c, "edge-magic constant", [&](const Edge& e) {
        return c.vc(e.first) + c.ec(e) + c.vc(e.second);
    }, want);
    if (super) check_vertex_range(c, 1, c.g.p, "super vertex-color-set");
}

void felicitous_labeling(Check& c, bool super) {
    long long q = c.g.q();
    check_vertex_injective(c);
    check_vertex_range(c, 0, q);
    c.E = resolve_rule(c, "edge-rule", [q](long long a, long long b) {
        return q > 0 ? pmod(a + b, q) : 0;
    });
    check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(0, 1, q));
    if (super) check_vertex_range(c, 1, c.g.p, "super vertex-color-set");
}

void odd_elegant_labeling(Check& c, bool injective) {
    long long q = c.g.q();
    if (injective) check_vertex_injective(c);
    check_vertex_range(c, 0, 2 * q - 1);
    c.E = resolve_rule(c, "edge-rule", [q](long long a, long long b) {
        return q > 0 ? pmod(a + b, 2 * q) : 0;
    });
    check_exact_set(c, "edge-color-set", c.edge_colors(), odd_ladder(0, 1, q));
}

void k_graceful_labeling(Check& c) {
    long long q = c.g.q();
    long long k = c.L.param("k");
    if (k < 1) throw std::invalid_argument("k-graceful needs k >= 1");
    check_vertex_injective(c);
    check_vertex_range(c, 0, q + k - 1);
    c.E = resolve_rule(c, "edge-rule", [](long long a, long long b) { return std::llabs(a - b); });
    check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(k, 1, q));
}

void edge_magic_graceful_labeling(Check& c) {
    long long pq = c.g.p + c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_total_bijection(c, 1, pq);
    std::optional<long long> want;
    if (c.L.has_param("k")) want = c.L.param("k");
    check_constant(c, "edge-magic-graceful constant", [&](const Edge& e) {
        return std::llabs(c.vc(e.first) + c.vc(e.second) - c.ec(e));
    }, want);
    if (c.L.param_or("super", 0) == 1) check_vertex_range(c, 1, c.g.p, "super vertex-color-set");
}

void edge_difference_total_labeling(Check& c) {
    long long pq = c.g.p + c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_total_bijection(c, 1, pq);
    std::optional<long long> want;
    if (c.L.has_param("k")) want = c.L.param("k");
    check_constant(c, "edge-difference constant", [&](const Edge& e) {
        return c.ec(e) + std::llabs(c.vc(e.first) - c.vc(e.second));
    }, want);
    if (c.L.param_or("super", 0) == 1 && !c.g.edges.empty() && c.g.p > 0) {
        long long maxv = c.vc(0), minv = c.vc(0);
        for (int v = 0; v < c.g.p; ++v) {
            maxv = std::max(maxv, c.vc(v));
            minv = std::min(minv, c.vc(v));
        }
        long long maxe = c.ec(c.g.edges.front()), mine = maxe;
        for (const auto& e : c.g.edges) {
            maxe = std::max(maxe, c.ec(e));
            mine = std::min(mine, c.ec(e));
        }
        if (!(maxe < minv || maxv < mine))
            c.fail("super separation", "vertex and edge color ranges interleave");
    }
}

// pan kinds: a per-edge disjunction must resolve to one global constant
void check_pan_constant(Check& c, const std::string& clause,
                        const std::function<std::pair<long long, long long>(const Edge&)>& branches) {
    if (c.g.edges.empty()) return;
    std::set<long long> candidates;
    if (c.L.has_param("k")) {
        candidates.insert(c.L.param("k"));
    } else {
        auto [a, b] = branches(c.g.edges.front());
        candidates = {a, b};
    }
    for (long long k : candidates) {
        bool ok = true;
        for (const auto& e : c.g.edges) {
            auto [a, b] = branches(e);
            if (a != k && b != k) {
                ok = false;
                break;
            }
        }
        if (ok) return;
    }
    c.fail(clause, "no constant satisfies a branch on every edge");
}

void pan_edge_magic_graceful_labeling(Check& c) {
    long long pq = c.g.p + c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_total_bijection(c, 1, pq);
    check_pan_constant(c, "pan edge-magic-graceful constant", [&](const Edge& e) {
        long long base = std::llabs(c.vc(e.first) + c.vc(e.second) - c.ec(e));
        return std::make_pair(base, pq - base);
    });
}

void pan_edge_difference_total_labeling(Check& c) {
    long long pq = c.g.p + c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_total_bijection(c, 1, pq);
    check_pan_constant(c, "pan edge-difference constant", [&](const Edge& e) {
        long long diff = std::llabs(c.vc(e.first) - c.vc(e.second));
        return std::make_pair(c.ec(e) + diff, c.ec(e) + pq - diff);
    });
}

void pan_odd_graceful_labeling(Check& c) {
    long long q = c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_vertex_injective(c, "B-1 vertex-injective");
    check_vertex_range(c, 0, 2 * q - 1, "B-3 vertex-codomain");
    check_min_vertex_zero(c, "B-3 vertex-codomain");
    for (const auto& e : c.g.edges) {
        long long diff = std::llabs(c.vc(e.first) - c.vc(e.second));
        if (c.ec(e) != diff && c.ec(e) != 2 * q - 1 - diff) {
            c.fail("pan edge-rule", "edge " + edge_name(e) + " color " + num(c.ec(e)) +
                                        " matches neither branch");
            break;
        }
    }
    check_exact_set(c, "edge-color-set", c.edge_colors(), odd_ladder(0, 1, q));
}

void six_c_labeling(Check& c) {
    long long p = c.g.p, q = c.g.q(), pq = p + q;
    c.E = stored_edges(c.g, c.L);
    check_bipartite_needed(c);
    check_total_bijection(c, 1, pq);
    // (i) e-magic
    std::optional<long long> want;
    if (c.L.has_param("k")) want = c.L.param("k");
    check_constant(c, "6C-(i) e-magic", [&](const Edge& e) {
        return c.ec(e) + std::llabs(c.vc(e.first) - c.vc(e.second));
    }, want);
    // (ii) ee-difference: every edge finds another edge matching one branch
    for (const auto& e : c.g.edges) {
        bool matched = false;
        for (const auto& f : c.g.edges) {
            if (e == f) continue;
            long long diff = std::llabs(c.vc(f.first) - c.vc(f.second));
            if (c.ec(e) == diff || c.ec(e) == 2 * pq - diff) {
                matched = true;
                break;
            }
        }
        if (!matched) {
            c.fail("6C-(ii) ee-difference", "edge " + edge_name(e) + " has no partner edge");
            break;
        }
    }
    // (iii) ee-balanced
    {
        auto s = [&](const Edge& e) {
            return std::llabs(c.vc(e.first) - c.vc(e.second)) - c.ec(e);
        };
        std::set<long long> candidates;
        if (c.L.has_param("kee")) {
            candidates.insert(c.L.param("kee"));
        } else {
            for (const auto& e : c.g.edges)
                for (const auto& f : c.g.edges) {
                    if (e == f) continue;
                    candidates.insert(s(e) + s(f));
                    candidates.insert(2 * pq + s(e) + s(f));
                }
        }
        bool any = c.g.edges.size() < 2 && !c.L.has_param("kee");
        for (long long kp : candidates) {
            bool ok = true;
            for (const auto& e : c.g.edges) {
                bool matched = false;
                for (const auto& f : c.g.edges) {
                    if (e == f) continue;
                    if (s(e) + s(f) == kp || 2 * pq + s(e) + s(f) == kp) {
                        matched = true;
                        break;
                    }
                }
                if (!matched) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                any = true;
                break;
            }
        }
        if (!any) c.fail("6C-(iii) ee-balanced", "no constant k' pairs every edge");
    }
    // (iv) EV-ordered
    {
        std::set<long long> vs, es;
        for (int v = 0; v < p; ++v) vs.insert(c.vc(v));
        for (const auto& e : c.g.edges) es.insert(c.ec(e));
        bool ok = false;
        if (!vs.empty() && !es.empty()) {
            ok = ok || *vs.begin() > *es.rbegin();   // min f(V) > max f(E)
            ok = ok || *vs.rbegin() < *es.begin();   // max f(V) < min f(E)
        }
        ok = ok || std::includes(es.begin(), es.end(), vs.begin(), vs.end());
        ok = ok || std::includes(vs.begin(), vs.end(), es.begin(), es.end());
        bool v_odd = std::all_of(vs.begin(), vs.end(), [](long long v) { return v % 2 != 0; });
        bool e_even = std::all_of(es.begin(), es.end(), [](long long v) { return v % 2 == 0; });
        ok = ok || (v_odd && e_even);
        if (!ok) c.fail("6C-(iv) EV-ordered", "no ordering alternative holds");
    }
    // (v) ve-matching with the singularity exempt
    {
        long long z0 = (pq + 1) / 2;
        std::set<long long> candidates;
        if (c.L.has_param("kve")) {
            candidates.insert(c.L.param("kve"));
        } else {
            for (const auto& e : c.g.edges)
                for (int v = 0; v < p; ++v) candidates.insert(c.ec(e) + c.vc(v));
        }
        std::string best_witness;
        int best_unmatched = -1;
        bool any = false;
        for (long long kpp : candidates) {
            int unmatched = 0;
            std::string witness;
            for (const auto& e : c.g.edges) {
                bool ok = false;
                for (int v = 0; v < p && !ok; ++v) ok = c.ec(e) + c.vc(v) == kpp;
                if (!ok) {
                    ++unmatched;
                    if (witness.empty()) witness = "edge " + edge_name(e);
                }
            }
            for (int v = 0; v < p; ++v) {
                if (c.vc(v) == z0) continue;  // the singularity
                bool ok = false;
                for (const auto& e : c.g.edges)
                    if (c.vc(v) + c.ec(e) == kpp) {
                        ok = true;
                        break;
                    }
                if (!ok) {
                    ++unmatched;
                    if (witness.empty()) witness = "vertex " + num(v);
                }
            }
            if (unmatched == 0) {
                any = true;
                break;
            }
            if (best_unmatched < 0 || unmatched < best_unmatched) {
                best_unmatched = unmatched;
                best_witness = witness;
            }
        }
        if (!any && !(c.g.edges.empty() && p == 0))
            c.fail("6C-(v) ve-matching", best_witness.empty() ? "no constant k'' works"
                                                              : best_witness + " unmatched");
    }
    // (vi) set-ordered (the reversed orientation is retried by the wrapper)
    check_set_ordered(c, "6C-(vi) set-ordered");
}

void totally_graceful_labeling(Check& c, bool super, bool set_ordered) {
    long long pq = c.g.p + c.g.q();
    c.E = resolve_rule(c, "edge-rule", [](long long a, long long b) { return std::llabs(a - b); });
    check_total_bijection(c, 1, pq);
    if (super) check_exact_set(c, "super edge-color-set", c.edge_colors(), ladder(1, 1, c.g.q()));
    if (set_ordered) check_set_ordered(c);
}

// ---------------------------------------------------------------------------
// (k,d)-parameterized labelings

std::pair<long long, long long> kd_params(const Check& c) {
    long long k = c.L.param("k");
    long long d = c.L.param("d");
    if (d < 1) throw std::invalid_argument("parameter d must be >= 1");
    if (k < 0) throw std::invalid_argument("parameter k must be >= 0");
    return {k, d};
}

void kd_graceful_labeling(Check& c, bool arithmetic) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    check_vertex_injective(c);
    check_vertex_range(c, 0, k + (q - 1) * d);
    if (arithmetic)
        c.E = resolve_rule(c, "edge-rule", [](long long a, long long b) { return a + b; });
    else
        c.E = resolve_rule(c, "edge-rule", [](long long a, long long b) { return std::llabs(a - b); });
    check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(k, d, q));
}

void kd_edge_antimagic_total_labeling(Check& c, bool super) {
    auto [k, d] = kd_params(c);
    long long pq = c.g.p + c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_total_bijection(c, 1, pq);
    std::vector<long long> sums;
    for (const auto& e : c.g.edges) sums.push_back(c.vc(e.first) + c.ec(e) + c.vc(e.second));
    check_exact_set(c, "edge-magic sum-set", sums, ladder(k, d, c.g.q()));
    if (super) check_vertex_range(c, 1, c.g.p, "super vertex-color-set");
}

void kd_harmonious_labeling(Check& c) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    check_vertex_injective(c);
    check_vertex_range(c, 0, k + (q - 1) * d);
    c.E = resolve_rule(c, "edge-rule", [k = k, d = d, q](long long a, long long b) {
        return q > 0 ? k + pmod(a + b - k, q * d) : k;
    });
    check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(k, d, q));
}

void kd_elegant_labeling(Check& c) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    check_bipartite_needed(c);
    for (int x : c.X)
        if (c.vc(x) < 0 || c.vc(x) % d != 0 || c.vc(x) > (q - 1) * d) {
            c.fail("X-frame", "vertex " + num(x) + " color " + num(c.vc(x)));
            break;
        }
    for (int y : c.Y)
        if (c.vc(y) < k || (c.vc(y) - k) % d != 0 || c.vc(y) > k + (q - 1) * d) {
            c.fail("Y-frame", "vertex " + num(y) + " color " + num(c.vc(y)));
            break;
        }
    c.E = resolve_rule(c, "edge-rule", [k = k, d = d, q](long long a, long long b) {
        return q > 0 ? pmod(a + b - k, q * d) : 0;
    });
    check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(0, d, q));
}

void kd_odd_graceful_labeling(Check& c) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    check_vertex_injective(c);
    check_vertex_range(c, 0, k + (2 * q - 1) * d);
    c.E = resolve_rule(c, "edge-rule", [](long long a, long long b) { return std::llabs(a - b); });
    check_exact_set(c, "edge-color-set", c.edge_colors(), odd_ladder(k, d, q));
}

void kd_odd_elegant_labeling(Check& c, bool coloring) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    if (!coloring) check_vertex_injective(c);
    check_vertex_range(c, 0, k + (2 * q - 1) * d);
    c.E = resolve_rule(c, "edge-rule", [k = k, d = d, q](long long a, long long b) {
        return q > 0 ? k + pmod(a + b - k, 2 * q * d) : k;
    });
    if (!coloring) {
        check_exact_set(c, "edge-color-set", c.edge_colors(), odd_ladder(k, d, q));
    } else {
        // normalized color set is literally {0, d, 3d, ..., (2q-3)d}
        std::set<long long> want = {k};
        for (long long t = 1; t <= 2 * q - 3; t += 2) want.insert(k + t * d);
        check_exact_set(c, "edge-color-set", c.edge_colors(), want);
    }
}

void kd_edge_magic_total_labeling(Check& c) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_vertex_injective(c);
    check_vertex_range(c, 0, k + (2 * q - 1) * d, "codomain");
    for (const auto& e : c.g.edges)
        if (c.ec(e) < 0 || c.ec(e) > k + (2 * q - 1) * d) {
            c.fail("codomain", "edge " + edge_name(e) + " color " + num(c.ec(e)));
            break;
        }
    std::optional<long long> want;
    if (c.L.has_param("lambda")) want = c.L.param("lambda");
    else if (c.L.has_param("c")) want = c.L.param("c");
    check_constant(c, "edge-magic constant", [&](const Edge& e) {
        return c.vc(e.first) + c.ec(e) + c.vc(e.second);
    }, want);
}

void kd_difference_labeling(Check& c, bool felicitous) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    c.E = stored_edges(c.g, c.L);
    check_vertex_injective(c);
    check_vertex_range(c, 0, k + (2 * q - 1) * d, "codomain");
    check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(k, d, q));
    std::optional<long long> want;
    if (c.L.has_param("c")) want = c.L.param("c");
    if (felicitous) {
        check_bipartite_needed(c);
        check_constant(c, "felicitous-difference constant", [&](const Edge& e) {
            auto [x, y] = c.sided(e);
            return c.vc(x) + c.ec(e) - c.vc(y);
        }, want);
    } else {
        check_constant(c, "graceful-difference constant", [&](const Edge& e) {
            return std::llabs(std::llabs(c.vc(e.first) - c.vc(e.second)) - c.ec(e));
        }, want);
    }
}

// ---------------------------------------------------------------------------
// gracefully total colorings

void gracefully_total_coloring(Check& c, bool set_ordered) {
    long long p = c.g.p, q = c.g.q();
    if (!c.g.connected()) c.fail("connected", "graph is not connected");
    if (p > 1 && q == p * (p - 1) / 2) c.fail("not-complete", "graph is K_" + num(p));
    c.E = resolve_rule(c, "edge-rule", [](long long a, long long b) { return std::llabs(a - b); });
    for (int v = 0; v < p; ++v)
        if (c.vc(v) < 1) {
            c.fail("codomain", "vertex " + num(v) + " color " + num(c.vc(v)) + " below 1");
            break;
        }
    std::set<long long> vs;
    for (int v = 0; v < p; ++v) vs.insert(c.vc(v));
    if (static_cast<long long>(vs.size()) >= p && p > 0)
        c.fail("vertex-repeat", "all vertex colors distinct; |f(V)| < p required");
    check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(1, 1, q));
    if (set_ordered) check_set_ordered(c);
}

struct PtolFrame {
    long long k = 0, d = 1;
};

PtolFrame ptol_frames(Check& c) {
    auto [k, d] = kd_params(c);
    check_bipartite_needed(c);
    for (int x : c.X)
        if (c.vc(x) < 0 || c.vc(x) % d != 0) {
            c.fail("X-frame", "vertex " + num(x) + " color " + num(c.vc(x)) +
                                  " not a non-negative multiple of d");
            break;
        }
    for (int y : c.Y)
        if (c.vc(y) < k || (c.vc(y) - k) % d != 0) {
            c.fail("Y-frame", "vertex " + num(y) + " color " + num(c.vc(y)) +
                                  " not of the form k+td");
            break;
        }
    return {k, d};
}

void ptol_edge_frame(Check& c, const PtolFrame& fr) {
    for (const auto& e : c.g.edges)
        if (c.ec(e) < fr.k || (c.ec(e) - fr.k) % fr.d != 0) {
            c.fail("edge-frame", "edge " + edge_name(e) + " color " + num(c.ec(e)) +
                                     " not of the form k+td");
            break;
        }
}

// every color must sit in S_{m,0,0,d} or inside the named k-window
void ptol_codomain(Check& c, const PtolFrame& fr, long long lo, long long hi) {
    auto admissible = [&](long long v) {
        return (v >= 0 && v % fr.d == 0) || (v >= lo && v <= hi && (v - fr.k) % fr.d == 0);
    };
    for (int y : c.Y)
        if (!admissible(c.vc(y))) {
            c.fail("codomain", "vertex " + num(y) + " color " + num(c.vc(y)));
            return;
        }
    for (const auto& e : c.g.edges)
        if (!admissible(c.ec(e))) {
            c.fail("codomain", "edge " + edge_name(e) + " color " + num(c.ec(e)));
            return;
        }
}

void ptol_proper_clauses(Check& c) {
    if (c.L.param_or("proper", 0) != 1) return;
    for (const auto& e : c.g.edges)
        if (c.vc(e.first) == c.vc(e.second)) {
            c.fail("proper-vertex", "edge " + edge_name(e) + " endpoints share color " +
                                        num(c.vc(e.first)));
            break;
        }
    auto adj = c.g.adjacency();
    for (int v = 0; v < c.g.p; ++v) {
        std::map<long long, Edge> seen;
        for (int w : adj[v]) {
            Edge e{std::min(v, w), std::max(v, w)};
            auto [it, fresh] = seen.emplace(c.ec(e), e);
            if (!fresh) {
                c.fail("proper-edge", "edges " + edge_name(it->second) + " and " + edge_name(e) +
                                          " at vertex " + num(v) + " share color " + num(c.ec(e)));
                return;
            }
        }
    }
}

void ptol_matching_sum(Check& c, long long want) {
    bool ok = perfect_matching_exists(c, [&](const Edge& e) {
        return c.vc(e.first) + c.vc(e.second) == want;
    });
    if (!ok)
        c.fail("matching-sum", "no perfect matching with f(x)+f(y)=" + num(want));
}

// variant: 1 gracefully, 2 odd-gracefully, 3 edge-antimagic, 4 harmonious,
// 5 odd-elegant, 6 edge-magic, 7 edge-difference, 8 felicitous-difference,
// 9 graceful-difference
void ptol_coloring(Check& c, int variant, bool strongly) {
    long long q = c.g.q();
    PtolFrame fr;
    switch (variant) {
        case 1: {
            fr = ptol_frames(c);
            c.E = resolve_rule(c, "edge-rule",
                               [](long long a, long long b) { return std::llabs(a - b); });
            check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(fr.k, fr.d, q));
            ptol_codomain(c, fr, fr.k, fr.k + (q - 1) * fr.d);
            if (strongly) ptol_matching_sum(c, fr.k + (q - 1) * fr.d);
            break;
        }
        case 2: {
            fr = ptol_frames(c);
            c.E = resolve_rule(c, "edge-rule",
                               [](long long a, long long b) { return std::llabs(a - b); });
            check_exact_set(c, "edge-color-set", c.edge_colors(), odd_ladder(fr.k, fr.d, q));
            ptol_codomain(c, fr, fr.k, fr.k + (2 * q - 1) * fr.d);
            if (strongly) ptol_matching_sum(c, fr.k + (2 * q - 1) * fr.d);
            break;
        }
        case 3: {
            fr = ptol_frames(c);
            c.E = stored_edges(c.g, c.L);
            ptol_edge_frame(c, fr);
            if (q > 0) {
                long long min_sum = 0;
                bool first = true;
                for (const auto& e : c.g.edges) {
                    long long s = c.vc(e.first) + c.ec(e) + c.vc(e.second);
                    if (first || s < min_sum) min_sum = s;
                    first = false;
                }
                long long a;
                if (c.L.has_param("a")) {
                    a = c.L.param("a");
                } else if ((min_sum - 2 * fr.k) % (2 * fr.d) != 0 || min_sum < 2 * fr.k) {
                    c.fail("sum-set", "smallest sum " + num(min_sum) +
                                          " is not 2k+2ad for an integer a >= 0");
                    break;
                } else {
                    a = (min_sum - 2 * fr.k) / (2 * fr.d);
                }
                std::vector<long long> sums;
                for (const auto& e : c.g.edges)
                    sums.push_back(c.vc(e.first) + c.ec(e) + c.vc(e.second));
                check_exact_set(c, "sum-set", sums, ladder(2 * fr.k + 2 * a * fr.d, 2 * fr.d, q));
                ptol_codomain(c, fr, fr.k + a * fr.d, fr.k + (3 * a + 2 * q - 2) * fr.d);
            }
            break;
        }
        case 4: {
            fr = ptol_frames(c);
            c.E = resolve_rule(c, "edge-rule", [k = fr.k, d = fr.d, q](long long a, long long b) {
                return q > 0 ? k + pmod(a + b - k, q * d) : k;
            });
            check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(fr.k, fr.d, q));
            ptol_codomain(c, fr, fr.k, fr.k + (q - 1) * fr.d);
            break;
        }
        case 5: {
            fr = ptol_frames(c);
            c.E = resolve_rule(c, "edge-rule", [k = fr.k, d = fr.d, q](long long a, long long b) {
                return q > 0 ? k + pmod(a + b - k, 2 * q * d) : k;
            });
            check_exact_set(c, "edge-color-set", c.edge_colors(), odd_ladder(fr.k, fr.d, q));
            ptol_codomain(c, fr, fr.k, fr.k + (2 * q - 1) * fr.d);
            break;
        }
        case 6: case 7: case 8: case 9: {
            fr = ptol_frames(c);
            c.E = stored_edges(c.g, c.L);
            ptol_edge_frame(c, fr);
            std::optional<long long> want;
            if (c.L.has_param("c")) want = c.L.param("c");
            if (variant == 6)
                check_constant(c, "edge-magic constant", [&](const Edge& e) {
                    return c.vc(e.first) + c.ec(e) + c.vc(e.second);
                }, want);
            else if (variant == 7)
                check_constant(c, "edge-difference constant", [&](const Edge& e) {
                    return c.ec(e) + std::llabs(c.vc(e.first) - c.vc(e.second));
                }, want);
            else if (variant == 8)
                check_constant(c, "felicitous-difference constant", [&](const Edge& e) {
                    return std::llabs(c.vc(e.first) + c.vc(e.second) - c.ec(e));
                }, want);
            else
                check_constant(c, "graceful-difference constant", [&](const Edge& e) {
                    return std::llabs(std::llabs(c.vc(e.first) - c.vc(e.second)) - c.ec(e));
                }, want);
            if (strongly) {
                check_exact_set(c, "edge-color-set", c.edge_colors(), ladder(fr.k, fr.d, q));
                ptol_codomain(c, fr, fr.k, fr.k + (q - 1) * fr.d);
            }
            break;
        }
        default:
            throw std::logic_error("bad ptol variant");
    }
    ptol_proper_clauses(c);
}

// explicit A_M / B_q sequences arrive as indexed params a0,a1,...,b0,b1,...
std::vector<long long> sequence_param(const Labeling& L, const std::string& prefix) {
    std::vector<long long> out;
    for (int i = 0;; ++i) {
        std::string key = prefix + std::to_string(i);
        if (!L.has_param(key)) break;
        out.push_back(L.param(key));
    }
    return out;
}

void sequence_coloring(Check& c, bool proper) {
    auto A = sequence_param(c.L, "a");
    auto B = sequence_param(c.L, "b");
    long long q = c.g.q();
    if (A.empty() || B.empty())
        throw std::invalid_argument("sequence coloring needs params a0,a1,... and b0,b1,...");
    for (size_t i = 0; i + 1 < A.size(); ++i)
        if (A[i] >= A[i + 1]) throw std::invalid_argument("sequence A must be strictly increasing");
    for (size_t i = 0; i + 1 < B.size(); ++i)
        if (B[i] >= B[i + 1]) throw std::invalid_argument("sequence B must be strictly increasing");
    if (A.front() < 0) throw std::invalid_argument("sequence A starts below 0");
    if (B.front() < 1) throw std::invalid_argument("sequence B starts below 1");
    if (static_cast<long long>(A.size()) < c.g.p)
        throw std::invalid_argument("sequence A shorter than the vertex count");
    if (static_cast<long long>(B.size()) != q)
        throw std::invalid_argument("sequence B must have exactly q entries");
    std::set<long long> as(A.begin(), A.end()), bs(B.begin(), B.end());
    for (long long a : A)
        for (long long b : B)
            if (b - a > 0 && !bs.count(b - a))
                throw std::invalid_argument("not a sequence-ordered matching: " + num(b) + "-" +
                                            num(a) + " falls outside B");
    c.E = resolve_rule(c, "edge-rule", [](long long a, long long b) { return std::llabs(a - b); });
    for (int v = 0; v < c.g.p; ++v)
        if (!as.count(c.vc(v)) && !bs.count(c.vc(v))) {
            c.fail("codomain", "vertex " + num(v) + " color " + num(c.vc(v)) + " outside A union B");
            break;
        }
    for (const auto& e : c.g.edges)
        if (c.vc(e.first) == c.vc(e.second)) {
            c.fail("adjacent-vertices", "edge " + edge_name(e) + " endpoints share color " +
                                            num(c.vc(e.first)));
            break;
        }
    check_exact_set(c, "edge-color-set", c.edge_colors(), bs);
    if (proper)
        for (const auto& e : c.g.edges)
            if (c.ec(e) == c.vc(e.first) || c.ec(e) == c.vc(e.second)) {
                c.fail("proper-incidence", "edge " + edge_name(e) + " shares color " +
                                               num(c.ec(e)) + " with an endpoint");
                break;
            }
}

// ---------------------------------------------------------------------------
// magic-family total colorings (constant condition, colors >= 0)

void magic_family_coloring(Check& c, int which) {
    c.E = stored_edges(c.g, c.L);
    for (int v = 0; v < c.g.p; ++v)
        if (c.vc(v) < 0) {
            c.fail("codomain", "vertex " + num(v) + " color " + num(c.vc(v)) + " negative");
            break;
        }
    for (const auto& e : c.g.edges)
        if (c.ec(e) < 0) {
            c.fail("codomain", "edge " + edge_name(e) + " color " + num(c.ec(e)) + " negative");
            break;
        }
    std::optional<long long> want;
    if (c.L.has_param("k")) want = c.L.param("k");
    switch (which) {
        case 1:
            check_constant(c, "edge-magic constant", [&](const Edge& e) {
                return c.vc(e.first) + c.ec(e) + c.vc(e.second);
            }, want, 0);
            break;
        case 2:
            check_constant(c, "graceful-difference constant", [&](const Edge& e) {
                return std::llabs(std::llabs(c.vc(e.first) - c.vc(e.second)) - c.ec(e));
            }, want);
            break;
        case 3:
            check_constant(c, "edge-difference constant", [&](const Edge& e) {
                return c.ec(e) + std::llabs(c.vc(e.first) - c.vc(e.second));
            }, want, 0);
            break;
        case 4:
            check_constant(c, "felicitous-difference constant", [&](const Edge& e) {
                return std::llabs(c.vc(e.first) + c.vc(e.second) - c.ec(e));
            }, want);
            break;
    }
    if (c.L.param_or("set_ordered", 0) == 1) check_set_ordered(c);
}

// ---------------------------------------------------------------------------
// parameterized (a,b,c) proper total colorings

void abc_family_coloring(Check& c, int which) {
    if (!c.L.has_param("a") || !c.L.has_param("b") || !c.L.has_param("c"))
        throw std::invalid_argument("parameterized coloring needs params a, b, c");
    long long a = c.L.param("a"), b = c.L.param("b"), cc = c.L.param("c");
    if (a < 0 || b < 0 || cc < 0)
        throw std::invalid_argument("parameters a, b, c must be non-negative");
    check_bipartite_needed(c);
    c.E = stored_edges(c.g, c.L);
    for (int v = 0; v < c.g.p; ++v)
        if (c.vc(v) < 1) {
            c.fail("codomain", "vertex " + num(v) + " color " + num(c.vc(v)) + " below 1");
            break;
        }
    for (const auto& e : c.g.edges)
        if (c.ec(e) < 1) {
            c.fail("codomain", "edge " + edge_name(e) + " color " + num(c.ec(e)) + " below 1");
            break;
        }
    // proper total coloring clauses
    for (const auto& e : c.g.edges) {
        if (c.vc(e.first) == c.vc(e.second)) {
            c.fail("proper-vertex", "edge " + edge_name(e) + " endpoints share color " +
                                        num(c.vc(e.first)));
            break;
        }
        if (c.ec(e) == c.vc(e.first) || c.ec(e) == c.vc(e.second)) {
            c.fail("proper-incidence", "edge " + edge_name(e) + " shares color " + num(c.ec(e)) +
                                           " with an endpoint");
            break;
        }
    }
    {
        auto adj = c.g.adjacency();
        for (int v = 0; v < c.g.p; ++v) {
            std::map<long long, Edge> seen;
            bool stop = false;
            for (int w : adj[v]) {
                Edge e{std::min(v, w), std::max(v, w)};
                auto [it, fresh] = seen.emplace(c.ec(e), e);
                if (!fresh) {
                    c.fail("proper-edge", "edges " + edge_name(it->second) + " and " +
                                              edge_name(e) + " share color " + num(c.ec(e)));
                    stop = true;
                    break;
                }
            }
            if (stop) break;
        }
    }
    auto cf = [&](const Edge& e) {
        auto [x, y] = c.sided(e);
        long long fu = a * c.vc(x), fv = b * c.vc(y), fe = cc * c.ec(e);
        switch (which) {
            case 1: return fu + fv + fe;
            case 2: return fe + std::llabs(fu - fv);
            case 3: return std::llabs(fu + fv - fe);
            default: return std::llabs(std::llabs(fu - fv) - fe);
        }
    };
    // B* = max c_f - min c_f must vanish
    check_constant(c, "B*", cf, std::nullopt);
}

// ---------------------------------------------------------------------------
// magically total labelings

void kl_magic_total_labeling(Check& c, bool super) {
    long long pq = c.g.p + c.g.q();
    long long lambda = c.L.param_or("lambda", 1);
    c.E = stored_edges(c.g, c.L);
    check_total_bijection(c, 1, pq);
    std::optional<long long> want;
    if (c.L.has_param("k")) want = c.L.param("k");
    check_constant(c, "magic identity", [&](const Edge& e) {
        return c.vc(e.first) + c.vc(e.second) - lambda * c.ec(e);
    }, want);
    if (super) check_vertex_range(c, 1, c.g.p, "super vertex-color-set");
}

void kl_edge_difference_magically_labeling(Check& c, bool super) {
    long long pq = c.g.p + c.g.q();
    long long lambda = c.L.param_or("lambda", 1);
    if (lambda == 0) throw std::invalid_argument("lambda must be non-zero");
    c.E = stored_edges(c.g, c.L);
    check_total_bijection(c, 1, pq);
    std::optional<long long> want;
    if (c.L.has_param("k")) want = c.L.param("k");
    check_constant(c, "edge-difference magic identity", [&](const Edge& e) {
        return std::llabs(c.vc(e.first) - c.vc(e.second)) - lambda * c.ec(e);
    }, want);
    if (super) check_vertex_range(c, 1, c.g.p, "super vertex-color-set");
}

void kd_edge_difference_kl_magically_labeling(Check& c) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    long long lambda = c.L.param_or("lambda", 1);
    if (lambda == 0) throw std::invalid_argument("lambda must be non-zero");
    check_bipartite_needed(c);
    c.E = stored_edges(c.g, c.L);
    for (int x : c.X)
        if (c.vc(x) < 0 || c.vc(x) % d != 0) {
            c.fail("X-frame", "vertex " + num(x) + " color " + num(c.vc(x)));
            break;
        }
    for (int y : c.Y)
        if (c.vc(y) < k || c.vc(y) > k + (q - 1) * d || (c.vc(y) - k) % d != 0) {
            c.fail("Y-frame", "vertex " + num(y) + " color " + num(c.vc(y)));
            break;
        }
    for (const auto& e : c.g.edges) {
        long long v = c.ec(e);
        bool in_x_side = v >= 0 && v % d == 0;
        bool in_y_side = v >= k && v <= k + (q - 1) * d && (v - k) % d == 0;
        if (!in_x_side && !in_y_side) {
            c.fail("codomain", "edge " + edge_name(e) + " color " + num(v));
            break;
        }
    }
    std::optional<long long> want;
    if (c.L.has_param("kstar")) want = c.L.param("kstar");
    check_constant(c, "magic identity", [&](const Edge& e) {
        auto [x, y] = c.sided(e);
        return std::llabs(c.vc(y) - c.vc(x)) - lambda * c.ec(e);
    }, want);
    if (!c.g.edges.empty()) {
        const Edge& e0 = c.g.edges.front();
        auto [x0, y0] = c.sided(e0);
        long long kstar = std::llabs(c.vc(y0) - c.vc(x0)) - lambda * c.ec(e0);
        if (want) kstar = *want;
        if (kstar < 0) c.fail("magic identity", "constant k* is negative: " + num(kstar));
    }
}

void totally_kd_sequential_labeling(Check& c) {
    long long k = c.L.param("k");
    long long d = c.L.param("d");
    if (k < 1) throw std::invalid_argument("parameter k must be >= 1");
    if (d < 1) throw std::invalid_argument("parameter d must be >= 1");
    long long pq = c.g.p + c.g.q();
    c.E = resolve_rule(c, "edge-rule", [k, d](long long a, long long b) {
        return k - d + std::llabs(a - b);
    });
    // bijection onto {k, k+d, ..., k+(p+q-1)d}
    std::set<long long> want = ladder(k, d, pq);
    std::vector<long long> all = c.vertex_colors();
    for (const auto& e : c.g.edges) all.push_back(c.ec(e));
    check_exact_set(c, "total-color-set", all, want);
}

void kd_gracefully_e_image_coloring(Check& c) {
    auto [k, d] = kd_params(c);
    long long q = c.g.q();
    check_bipartite_needed(c);
    c.E = stored_edges(c.g, c.L);
    // the public key is pinned on the vertices: its induced edge colors must make a
    // (k,d)-gracefully total coloring
    std::map<Edge, long long> public_edges;
    {
        Labeling pub;
        pub.kind = "kd-gracefully-total";
        pub.params = {{"k", k}, {"d", d}};
        pub.vertex = c.L.vertex;
        Check inner(c.g, pub);
        inner.set_parts(c.X, c.Y);
        ptol_coloring(inner, 1, false);
        if (!inner.rep.accepted) {
            const auto& v = inner.rep.violations.front();
            c.fail("public-key " + v.condition, v.witness);
        }
        public_edges = inner.E;
    }
    // the e-image side: distinct edge colors inside S^{+-}_{q-1,k,d}
    std::set<long long> s_pm = ladder(k, d, q);
    for (long long t = 1; t < q; ++t) s_pm.insert(k - t * d);
    std::set<long long> seen;
    for (const auto& e : c.g.edges) {
        if (!seen.insert(c.ec(e)).second) {
            c.fail("edge-image-distinct", "duplicate edge color " + num(c.ec(e)));
            break;
        }
        if (!s_pm.count(c.ec(e))) {
            c.fail("edge-image-codomain", "edge " + edge_name(e) + " color " + num(c.ec(e)) +
                                              " outside " + set_preview(s_pm));
            break;
        }
    }
    // f(xy) + g(xy) must be one constant C(k,d)
    std::optional<long long> want;
    if (c.L.has_param("cc")) want = c.L.param("cc");
    check_constant(c, "image-constant", [&](const Edge& e) {
        return public_edges.at(e) + c.ec(e);
    }, want);
}

// ---------------------------------------------------------------------------
// dispatch

void run_checks(Check& c, const std::string& tag) {
    if (tag == "graceful") basic_family(c, false, false, false);
    else if (tag == "set-ordered-graceful") basic_family(c, false, true, false);
    else if (tag == "strongly-graceful") basic_family(c, false, false, true);
    else if (tag == "set-ordered-strongly-graceful") basic_family(c, false, true, true);
    else if (tag == "odd-graceful") basic_family(c, true, false, false);
    else if (tag == "set-ordered-odd-graceful") basic_family(c, true, true, false);
    else if (tag == "strongly-odd-graceful") basic_family(c, true, false, true);
    else if (tag == "edge-magic-total") edge_magic_total_labeling(c, false);
    else if (tag == "super-edge-magic-total") edge_magic_total_labeling(c, true);
    else if (tag == "felicitous") felicitous_labeling(c, false);
    else if (tag == "super-felicitous") felicitous_labeling(c, true);
    else if (tag == "odd-elegant") odd_elegant_labeling(c, true);
    else if (tag == "odd-elegant-coloring") odd_elegant_labeling(c, false);
    else if (tag == "k-graceful") k_graceful_labeling(c);
    else if (tag == "edge-magic-graceful") edge_magic_graceful_labeling(c);
    else if (tag == "edge-difference-total") edge_difference_total_labeling(c);
    else if (tag == "pan-edge-magic-graceful") pan_edge_magic_graceful_labeling(c);
    else if (tag == "pan-edge-difference-total") pan_edge_difference_total_labeling(c);
    else if (tag == "pan-odd-graceful") pan_odd_graceful_labeling(c);
    else if (tag == "6c") six_c_labeling(c);
    else if (tag == "totally-graceful") totally_graceful_labeling(c, false, false);
    else if (tag == "super-totally-graceful") totally_graceful_labeling(c, true, false);
    else if (tag == "set-ordered-totally-graceful") totally_graceful_labeling(c, false, true);
    else if (tag == "super-set-ordered-totally-graceful") totally_graceful_labeling(c, true, true);
    else if (tag == "kd-graceful") kd_graceful_labeling(c, false);
    else if (tag == "kd-arithmetic") kd_graceful_labeling(c, true);
    else if (tag == "kd-edge-antimagic-total") kd_edge_antimagic_total_labeling(c, false);
    else if (tag == "super-kd-edge-antimagic-total") kd_edge_antimagic_total_labeling(c, true);
    else if (tag == "kd-harmonious") kd_harmonious_labeling(c);
    else if (tag == "kd-elegant") kd_elegant_labeling(c);
    else if (tag == "kd-odd-graceful") kd_odd_graceful_labeling(c);
    else if (tag == "kd-odd-elegant") kd_odd_elegant_labeling(c, false);
    else if (tag == "kd-odd-elegant-coloring") kd_odd_elegant_labeling(c, true);
    else if (tag == "kd-edge-magic-total") kd_edge_magic_total_labeling(c);
    else if (tag == "kd-graceful-difference") kd_difference_labeling(c, false);
    else if (tag == "kd-felicitous-difference") kd_difference_labeling(c, true);
    else if (tag == "gracefully-total-coloring") gracefully_total_coloring(c, false);
    else if (tag == "set-ordered-gracefully-total-coloring") gracefully_total_coloring(c, true);
    else if (tag == "kd-gracefully-total") ptol_coloring(c, 1, false);
    else if (tag == "kd-strongly-gracefully-total") ptol_coloring(c, 1, true);
    else if (tag == "kd-odd-gracefully-total") ptol_coloring(c, 2, false);
    else if (tag == "kd-strongly-odd-gracefully-total") ptol_coloring(c, 2, true);
    else if (tag == "kd-edge-antimagic-total-coloring") ptol_coloring(c, 3, false);
    else if (tag == "kd-harmonious-total-coloring") ptol_coloring(c, 4, false);
    else if (tag == "kd-odd-elegant-total-coloring") ptol_coloring(c, 5, false);
    else if (tag == "kd-edge-magic-total-coloring") ptol_coloring(c, 6, false);
    else if (tag == "kd-strongly-edge-magic-total-coloring") ptol_coloring(c, 6, true);
    else if (tag == "kd-edge-difference-total-coloring") ptol_coloring(c, 7, false);
    else if (tag == "kd-strongly-edge-difference-total-coloring") ptol_coloring(c, 7, true);
    else if (tag == "kd-felicitous-difference-total-coloring") ptol_coloring(c, 8, false);
    else if (tag == "kd-strongly-felicitous-difference-total-coloring") ptol_coloring(c, 8, true);
    else if (tag == "kd-graceful-difference-total-coloring") ptol_coloring(c, 9, false);
    else if (tag == "kd-strongly-graceful-difference-total-coloring") ptol_coloring(c, 9, true);
    else if (tag == "gracefully-total-sequence-coloring") sequence_coloring(c, false);
    else if (tag == "proper-gracefully-total-sequence-coloring") sequence_coloring(c, true);
    else if (tag == "edge-magic-total-coloring") magic_family_coloring(c, 1);
    else if (tag == "graceful-difference-total-coloring") magic_family_coloring(c, 2);
    else if (tag == "edge-difference-total-coloring") magic_family_coloring(c, 3);
    else if (tag == "felicitous-difference-total-coloring") magic_family_coloring(c, 4);
    else if (tag == "parameterized-edge-magic-proper-total-coloring") abc_family_coloring(c, 1);
    else if (tag == "parameterized-edge-difference-proper-total-coloring") abc_family_coloring(c, 2);
    else if (tag == "parameterized-felicitous-difference-proper-total-coloring") abc_family_coloring(c, 3);
    else if (tag == "parameterized-graceful-difference-proper-total-coloring") abc_family_coloring(c, 4);
    else if (tag == "kl-magic-total") kl_magic_total_labeling(c, false);
    else if (tag == "super-kl-magic-total") kl_magic_total_labeling(c, true);
    else if (tag == "kl-edge-difference-magically") kl_edge_difference_magically_labeling(c, false);
    else if (tag == "super-kl-edge-difference-magically") kl_edge_difference_magically_labeling(c, true);
    else if (tag == "kd-edge-difference-kl-magically") kd_edge_difference_kl_magically_labeling(c);
    else if (tag == "totally-kd-sequential") totally_kd_sequential_labeling(c);
    else if (tag == "kd-gracefully-e-image") kd_gracefully_e_image_coloring(c);
    else throw std::invalid_argument("unknown labeling kind: " + tag);
}

VerificationReport run_once(const Graph& g, const Labeling& L, const std::string& tag,
                            const std::vector<int>& X, const std::vector<int>& Y) {
    Check c(g, L);
    c.set_parts(X, Y);
    run_checks(c, tag);
    return std::move(c.rep);
}

}  // namespace

std::string canonical_kind(const std::string& kind) {
    std::string tag = normalize(kind);
    auto alias = aliases().find(tag);
    if (alias != aliases().end()) tag = alias->second;
    const auto& kinds = catalog();
    if (std::find(kinds.begin(), kinds.end(), tag) == kinds.end())
        throw std::invalid_argument("unknown labeling kind: " + kind);
    return tag;
}

std::vector<std::string> known_kinds() {
    std::vector<std::string> kinds = catalog();
    std::sort(kinds.begin(), kinds.end());
    return kinds;
}

VerificationReport verify(const Graph& g, const Labeling& L) { return verify(g, L, L.kind); }

VerificationReport verify(const Graph& g, const Labeling& L, const std::string& kind) {
    return verify(g, L, kind, std::nullopt);
}

VerificationReport verify(const Graph& g, const Labeling& L, const std::string& kind,
                          const std::optional<Bipartition>& parts) {
    std::string tag = canonical_kind(kind.empty() ? L.kind : kind);
    if (!L.vertex_total(g))
        throw std::invalid_argument("every vertex must be colored");
    if (parts) return run_once(g, L, tag, parts->first, parts->second);
    auto derived = bipartition(g);
    if (!derived) return run_once(g, L, tag, {}, {});
    VerificationReport first = run_once(g, L, tag, derived->first, derived->second);
    if (first.accepted || !uses_parts(tag)) return first;
    VerificationReport flipped = run_once(g, L, tag, derived->second, derived->first);
    return flipped.accepted ? flipped : first;
}

// ---------------------------------------------------------------------------
// pairwise matchings

namespace {

std::map<Edge, long long> effective_total_edges(const Graph& g, const Labeling& L) {
    if (L.edge_total(g)) {
        std::map<Edge, long long> out;
        for (const auto& e : g.edges) out[e] = L.edge.at(e);
        return out;
    }
    return induce_edge_colors(g, L.vertex, EdgeRule::abs_difference);
}

std::set<long long> color_set(const std::map<int, long long>& m) {
    std::set<long long> s;
    for (const auto& [v, c] : m) s.insert(c);
    return s;
}

std::set<long long> color_set(const std::map<Edge, long long>& m) {
    std::set<long long> s;
    for (const auto& [e, c] : m) s.insert(c);
    return s;
}

}  // namespace

VerificationReport verify_matching(const Graph& ga, const Labeling& la, const Graph& gb,
                                   const Labeling& lb, const std::string& kind) {
    std::string tag = normalize(kind);
    if (tag == "twin-odd-graceful-labeling" || tag == "tog-labeling") tag = "twin-odd-graceful";
    if (tag == "k-d-harmonious-image") tag = "kd-harmonious-image";
    if (tag == "6c-complementary-matching") tag = "6c-complementary";
    VerificationReport rep;
    if (!la.vertex_total(ga) || !lb.vertex_total(gb))
        throw std::invalid_argument("every vertex must be colored");

    if (tag == "twin-odd-graceful") {
        if (ga.q() != gb.q())
            throw std::invalid_argument("twin odd-graceful needs two graphs with equal size");
        long long q = ga.q();
        VerificationReport inner = verify(ga, la, "odd-graceful");
        if (!inner.accepted)
            rep.fail("twin-(i) odd-graceful", "first labeling: " + inner.violations.front().condition);
        auto eb = induce_edge_colors(gb, lb.vertex, EdgeRule::abs_difference);
        std::set<long long> want = odd_ladder(0, 1, q), got = color_set(eb);
        if (got != want)
            rep.fail("twin-(ii) edge-color-set", "second edge colors differ from [1,2q-1] odd");
        for (const auto& [v, c] : la.vertex)
            if (c < 0 || c > 2 * q - 1) {
                rep.fail("twin-(iii) vertex-codomain", "first labeling vertex " + num(v));
                break;
            }
        for (const auto& [v, c] : lb.vertex)
            if (c < 0 || c > 2 * q - 1) {
                rep.fail("twin-(iii) vertex-codomain", "second labeling vertex " + num(v));
                break;
            }
        return rep;
    }

    if (tag == "v-image" || tag == "e-image") {
        if (ga.p != gb.p || ga.edges != gb.edges)
            throw std::invalid_argument("image matchings need the same underlying graph");
        std::optional<long long> want;
        if (la.has_param("k")) want = la.param("k");
        if (tag == "v-image") {
            if (ga.p == 0) return rep;
            long long target = want ? *want : la.vcolor(0) + lb.vcolor(0);
            for (int v = 0; v < ga.p; ++v)
                if (la.vcolor(v) + lb.vcolor(v) != target) {
                    rep.fail("v-image constant", "vertex " + num(v) + " sums to " +
                                                     num(la.vcolor(v) + lb.vcolor(v)) +
                                                     ", expected " + num(target));
                    return rep;
                }
            if (target <= 0) rep.fail("v-image constant", "coefficient not positive");
            return rep;
        }
        auto ea = effective_total_edges(ga, la);
        auto eb = effective_total_edges(gb, lb);
        if (ga.edges.empty()) return rep;
        long long target = want ? *want : ea.at(ga.edges.front()) + eb.at(ga.edges.front());
        for (const auto& e : ga.edges)
            if (ea.at(e) + eb.at(e) != target) {
                rep.fail("e-image constant", "edge " + edge_name(e) + " sums to " +
                                                 num(ea.at(e) + eb.at(e)) + ", expected " +
                                                 num(target));
                return rep;
            }
        if (target <= 0) rep.fail("e-image constant", "coefficient not positive");
        return rep;
    }

    if (tag == "kd-harmonious-image") {
        if (ga.p != gb.p || ga.edges != gb.edges)
            throw std::invalid_argument("image matchings need the same underlying graph");
        long long k = la.param("k"), d = la.param("d"), q = ga.q();
        VerificationReport ra = verify(ga, la, "kd-harmonious");
        VerificationReport rb = verify(gb, lb, "kd-harmonious");
        if (!ra.accepted)
            rep.fail("first kd-harmonious", ra.violations.front().condition);
        if (!rb.accepted)
            rep.fail("second kd-harmonious", rb.violations.front().condition);
        auto rule = [k, d, q](long long a, long long b) {
            return q > 0 ? k + pmod(a + b - k, q * d) : k;
        };
        // recompute with the harmonious rule regardless of storage
        std::map<Edge, long long> fa, fb;
        for (const auto& e : ga.edges) {
            fa[e] = rule(la.vcolor(e.first), la.vcolor(e.second));
            fb[e] = rule(lb.vcolor(e.first), lb.vcolor(e.second));
        }
        for (const auto& e : ga.edges)
            if (fa[e] + fb[e] != 2 * k + (q - 1) * d) {
                rep.fail("harmonious-image constant", "edge " + edge_name(e) + " sums to " +
                                                          num(fa[e] + fb[e]) + ", expected " +
                                                          num(2 * k + (q - 1) * d));
                break;
            }
        return rep;
    }

    if (tag == "6c-complementary") {
        long long pq = ga.p + ga.q();
        if (gb.p + gb.q() != pq)
            throw std::invalid_argument("6C-complementary needs graphs of equal order+size");
        VerificationReport ra = verify(ga, la, "6c");
        VerificationReport rb = verify(gb, lb, "6c");
        if (!ra.accepted) rep.fail("first 6C", ra.violations.front().condition);
        if (!rb.accepted) rep.fail("second 6C", rb.violations.front().condition);
        long long z0 = (pq + 1) / 2;
        auto fv = color_set(la.vertex), gv = color_set(lb.vertex);
        auto fe = color_set(effective_total_edges(ga, la));
        auto ge = color_set(effective_total_edges(gb, lb));
        std::set<long long> inter;
        std::set_intersection(fv.begin(), fv.end(), gv.begin(), gv.end(),
                              std::inserter(inter, inter.begin()));
        if (inter != std::set<long long>{z0})
            rep.fail("X* singleton", "f(V) and g(V) must meet exactly in {" + num(z0) + "}");
        auto minus = [&](const std::set<long long>& s) {
            std::set<long long> out = s;
            out.erase(z0);
            return out;
        };
        if (minus(fv) != ge) rep.fail("f(V)\\X* = g(E)", "vertex/edge color sets differ");
        if (minus(gv) != fe) rep.fail("g(V)\\X* = f(E)", "vertex/edge color sets differ");
        return rep;
    }

    if (tag == "reciprocal-inverse") {
        auto fv = color_set(la.vertex), gv = color_set(lb.vertex);
        auto fe = color_set(effective_total_edges(ga, la));
        auto ge = color_set(effective_total_edges(gb, lb));
        std::set<long long> inter;
        std::set_intersection(fv.begin(), fv.end(), gv.begin(), gv.end(),
                              std::inserter(inter, inter.begin()));
        if (inter.empty()) {
            rep.fail("X* non-empty", "f(V) and g(V) are disjoint");
            return rep;
        }
        auto minus = [&](const std::set<long long>& s) {
            std::set<long long> out;
            std::set_difference(s.begin(), s.end(), inter.begin(), inter.end(),
                                std::inserter(out, out.begin()));
            return out;
        };
        if (minus(fv) != ge) rep.fail("f(V)\\X* = g(E)", "color sets differ");
        if (fe != minus(gv)) rep.fail("f(E) = g(V)\\X*", "color sets differ");
        return rep;
    }

    throw std::invalid_argument("unknown matching kind: " + kind);
}

}  // namespace topocode
