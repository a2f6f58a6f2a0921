#include "topocode/transform.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>

namespace topocode {

namespace {

struct Extremes {
    long long lo = std::numeric_limits<long long>::max();
    long long hi = std::numeric_limits<long long>::min();
    void feed(long long v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool empty() const { return lo > hi; }
};

// the accepted orientation (max f(X) < min f(Y)) of a kind that needs parts
Bipartition oriented_parts(const Graph& g, const Labeling& L, const std::string& kind,
                           const std::optional<Bipartition>& parts) {
    std::vector<Bipartition> candidates;
    if (parts) {
        candidates.push_back(*parts);
    } else {
        auto derived = bipartition(g);
        if (!derived) throw std::invalid_argument("graph is not bipartite");
        candidates.push_back(*derived);
        candidates.emplace_back(derived->second, derived->first);
    }
    for (const auto& bp : candidates)
        if (verify(g, L, kind, bp).accepted) return bp;
    throw std::invalid_argument("labeling is not an accepted " + kind + " labeling");
}

Labeling with_induced(const Graph& g, Labeling L, EdgeRule rule, long long modulus = 0) {
    L.edge = induce_edge_colors(g, L.vertex, rule, modulus);
    return L;
}

int vertex_with_color(const std::vector<int>& side, const Labeling& L, long long color) {
    for (int v : side)
        if (L.vcolor(v) == color) return v;
    throw std::logic_error("no vertex carries color " + std::to_string(color));
}

Labeling checked(const Graph& g, Labeling L, const std::string& context) {
    VerificationReport rep = verify(g, L, L.kind);
    if (!rep.accepted) {
        std::string why = rep.violations.empty() ? "?" : rep.violations.front().condition;
        throw std::logic_error(context + " output failed verification: " + why);
    }
    return L;
}

}  // namespace

Labeling dual(const Labeling& L) {
    Extremes ex;
    for (const auto& [v, c] : L.vertex) ex.feed(c);
    for (const auto& [e, c] : L.edge) ex.feed(c);
    if (ex.empty()) throw std::invalid_argument("dual of an empty labeling");
    Labeling out = L;
    for (auto& [v, c] : out.vertex) c = ex.hi + ex.lo - c;
    for (auto& [e, c] : out.edge) c = ex.hi + ex.lo - c;
    return out;
}

Labeling set_dual_transform(const Graph& g, const Labeling& L, const std::string& variant,
                            const std::optional<Bipartition>& parts) {
    Bipartition bp = oriented_parts(g, L, "set-ordered-graceful", parts);
    const auto& [X, Y] = bp;

    Extremes vx, vy, ve;
    for (int v : X) vx.feed(L.vcolor(v));
    for (int v : Y) vy.feed(L.vcolor(v));
    for (const auto& e : g.edges) ve.feed(L.ecolor(e.first, e.second));
    long long mV = vx.lo + vy.hi;  // min f(V) + max f(V)
    long long mX = vx.lo + vx.hi, mY = vy.lo + vy.hi, mE = ve.lo + ve.hi;

    Labeling out;
    auto set_vertices = [&](bool flip_x, bool flip_y, bool flip_all) {
        for (int v : X)
            out.vertex[v] = flip_all ? mV - L.vcolor(v)
                                     : (flip_x ? mX - L.vcolor(v) : L.vcolor(v));
        for (int v : Y)
            out.vertex[v] = flip_all ? mV - L.vcolor(v)
                                     : (flip_y ? mY - L.vcolor(v) : L.vcolor(v));
    };
    auto complement_edges = [&] {
        for (const auto& e : g.edges) out.edge[e] = mE - L.ecolor(e.first, e.second);
    };
    auto keep_edges = [&] {
        for (const auto& e : g.edges) out.edge[e] = L.ecolor(e.first, e.second);
    };

    if (variant == "f_dual") {
        set_vertices(false, false, true);
        out.kind = "set-ordered-graceful";
        out.edge = induce_edge_colors(g, out.vertex, EdgeRule::abs_difference);
    } else if (variant == "f*_dual") {
        set_vertices(false, false, true);
        complement_edges();
        out.kind = "edge-difference-total-coloring";
        out.params = {{"k", mE}, {"set_ordered", 1}};
    } else if (variant == "g_setXY") {
        set_vertices(true, true, false);
        out.kind = "set-ordered-graceful";
        out.edge = induce_edge_colors(g, out.vertex, EdgeRule::abs_difference);
    } else if (variant == "g*_setXY") {
        set_vertices(true, true, false);
        complement_edges();
        out.kind = "graceful-difference-total-coloring";
        out.params = {{"k", std::llabs(mY - mX - mE)}, {"set_ordered", 1}};
    } else if (variant == "h_setX") {
        set_vertices(true, false, false);
        keep_edges();
        out.kind = "felicitous-difference-total-coloring";
        out.params = {{"k", std::llabs(mX)}, {"set_ordered", 1}};
    } else if (variant == "h*_setX") {
        set_vertices(true, false, false);
        complement_edges();
        out.kind = "edge-magic-total-coloring";
        out.params = {{"k", mX + mE}, {"set_ordered", 1}};
    } else if (variant == "h_setY") {
        set_vertices(false, true, false);
        keep_edges();
        out.kind = "edge-magic-total-coloring";
        out.params = {{"k", mY}, {"set_ordered", 1}};
    } else if (variant == "h*_setY") {
        set_vertices(false, true, false);
        complement_edges();
        out.kind = "felicitous-difference-total-coloring";
        out.params = {{"k", std::llabs(mY - mE)}, {"set_ordered", 1}};
    } else {
        throw std::invalid_argument(
            "unknown set-dual variant: " + variant +
            " (expected f_dual, f*_dual, g_setXY, g*_setXY, h_setX, h*_setX, h_setY, h*_setY)");
    }
    return checked(g, std::move(out), "set_dual_transform " + variant);
}

Labeling reciprocal_transform(const Graph& g, const Labeling& L, const std::string& part,
                              const std::string& edge_rule,
                              const std::optional<Bipartition>& parts) {
    if (part != "X" && part != "Y" && part != "total")
        throw std::invalid_argument("reciprocal part must be X, Y or total");
    if (edge_rule != "keep" && edge_rule != "complement" && edge_rule != "recompute")
        throw std::invalid_argument("reciprocal edge rule must be keep, complement or recompute");
    if (!L.vertex_total(g)) throw std::invalid_argument("every vertex must be colored");
    {
        std::set<long long> seen;
        for (int v = 0; v < g.p; ++v)
            if (!seen.insert(L.vcolor(v)).second)
                throw std::invalid_argument("reciprocal input must have distinct vertex colors");
    }

    // orient the bipartition so the labeling is set-ordered
    Bipartition bp;
    if (parts) bp = *parts;
    else {
        auto derived = bipartition(g);
        if (!derived) throw std::invalid_argument("graph is not bipartite");
        bp = *derived;
    }
    auto side_max = [&](const std::vector<int>& side) {
        long long m = std::numeric_limits<long long>::min();
        for (int v : side) m = std::max(m, L.vcolor(v));
        return m;
    };
    auto side_min = [&](const std::vector<int>& side) {
        long long m = std::numeric_limits<long long>::max();
        for (int v : side) m = std::min(m, L.vcolor(v));
        return m;
    };
    if (!(side_max(bp.first) < side_min(bp.second))) {
        // only derived parts may be flipped; a supplied orientation is taken literally
        if (parts)
            throw std::invalid_argument("labeling is not set-ordered on the given parts");
        std::swap(bp.first, bp.second);
        if (!(side_max(bp.first) < side_min(bp.second)))
            throw std::invalid_argument("labeling is not set-ordered on any orientation");
    }

    // reverse the color order within the chosen part
    std::vector<int> domain;
    if (part == "X") domain = bp.first;
    else if (part == "Y") domain = bp.second;
    else {
        domain.resize(g.p);
        for (int v = 0; v < g.p; ++v) domain[v] = v;
    }
    std::sort(domain.begin(), domain.end(),
              [&](int a, int b) { return L.vcolor(a) < L.vcolor(b); });

    Labeling out = L;
    for (size_t i = 0; i < domain.size(); ++i)
        out.vertex[domain[i]] = L.vcolor(domain[domain.size() - 1 - i]);

    if (edge_rule == "recompute") {
        out.edge = induce_edge_colors(g, out.vertex, EdgeRule::abs_difference);
    } else {
        if (!L.edge_total(g))
            throw std::invalid_argument("edge colors required for keep/complement rules");
        if (edge_rule == "complement") {
            Extremes ve;
            for (const auto& e : g.edges) ve.feed(L.ecolor(e.first, e.second));
            for (const auto& e : g.edges) out.edge[e] = ve.hi + ve.lo - L.ecolor(e.first, e.second);
        }
    }
    return out;
}

Labeling equivalent_labeling(const Graph& t, const Labeling& f, const std::string& target,
                             const std::map<std::string, long long>& params) {
    if (!t.connected() || t.q() != t.p - 1)
        throw std::invalid_argument("equivalent_labeling expects a tree");
    Bipartition bp = oriented_parts(t, f, "set-ordered-graceful", std::nullopt);
    const auto& [X, Y] = bp;
    long long s = static_cast<long long>(X.size());
    long long p = t.p, q = t.q();
    long long maxX = 0;
    for (int v : X) maxX = std::max(maxX, f.vcolor(v));

    std::string tag = canonical_kind(target);
    long long d = params.count("d") ? params.at("d") : 1;
    long long k = params.count("k") ? params.at("k") : 1;
    if (d < 1) throw std::invalid_argument("d must be positive");

    Labeling out;
    out.kind = tag;
    auto fill = [&](auto fx, auto fy) {
        for (int v : X) out.vertex[v] = fx(f.vcolor(v));
        for (int v : Y) out.vertex[v] = fy(f.vcolor(v));
    };
    auto edges_from = [&](auto fe) {
        for (const auto& e : t.edges) out.edge[e] = fe(f.ecolor(e.first, e.second));
    };

    if (tag == "kd-graceful") {
        fill([&](long long c) { return d * c; }, [&](long long c) { return k + d * (c - 1); });
        out.edge = induce_edge_colors(t, out.vertex, EdgeRule::abs_difference);
        out.params = {{"k", k}, {"d", d}};
    } else if (tag == "odd-elegant") {
        fill([&](long long c) { return 2 * (maxX - c); }, [&](long long c) { return 2 * c - 1; });
        out.edge = induce_edge_colors(t, out.vertex, EdgeRule::mod_sum, 2 * q);
    } else if (tag == "kd-elegant") {
        fill([&](long long c) { return d * (maxX - c); },
             [&](long long c) { return k + d * (c - 1); });
        for (const auto& e : t.edges) {
            long long sum = out.vertex[e.first] + out.vertex[e.second];
            long long m = ((sum - k) % (q * d) + q * d) % (q * d);
            out.edge[e] = m;
        }
        out.params = {{"k", k}, {"d", d}};
    } else if (tag == "kd-edge-magic-total") {
        fill([&](long long c) { return d * (maxX - c); }, [&](long long c) { return k + d * c; });
        edges_from([&](long long c) { return d * (q - c); });
        out.params = {{"k", k}, {"d", d}, {"lambda", k + (s + q - 1) * d}};
    } else if (tag == "kd-graceful-difference" || tag == "kd-felicitous-difference") {
        if (!params.count("k")) k = (s - 1) * d + 1;
        if (k <= (s - 1) * d)
            throw std::invalid_argument("construction needs k > (|X|-1)d");
        fill([&](long long c) { return d * c; }, [&](long long c) { return k + d * (c - s); });
        edges_from([&](long long c) { return k + d * (c - 1); });
        out.params = {{"k", k}, {"d", d}, {"c", (s - 1) * d}};
    } else if (tag == "super-edge-magic-total") {
        fill([&](long long c) { return s - c; }, [&](long long c) { return c + 1; });
        edges_from([&](long long c) { return p + q + 1 - c; });
        out.params = {{"c", s + p + q + 2}};
    } else {
        throw std::invalid_argument("unsupported equivalent-labeling target: " + tag);
    }
    return checked(t, std::move(out), "equivalent_labeling " + tag);
}

JoinedGraph graceful_join(const Graph& g, const Labeling& f, const Graph& t,
                          const Labeling& gt, const std::string& mode) {
    if (!g.connected() || !t.connected())
        throw std::invalid_argument("graceful_join expects connected operands");
    Bipartition bp = oriented_parts(g, f, "set-ordered-graceful", std::nullopt);
    if (!verify(t, gt, "graceful").accepted)
        throw std::invalid_argument("second operand is not gracefully labeled");

    long long n = g.q(), m = t.q();
    long long fxs = 0;
    for (int v : bp.first) fxs = std::max(fxs, f.vcolor(v));
    int xs = vertex_with_color(bp.first, f, fxs);
    long long fy1 = std::numeric_limits<long long>::max();
    for (int v : bp.second) fy1 = std::min(fy1, f.vcolor(v));
    int y1 = vertex_with_color(bp.second, f, fy1);
    int w1 = -1, wp = -1;
    for (int v = 0; v < t.p; ++v) {
        if (gt.vcolor(v) == 0) w1 = v;
        if (gt.vcolor(v) == m) wp = v;
    }
    if (w1 < 0 || wp < 0) throw std::logic_error("graceful labeling misses its 0 or max vertex");

    long long y_shift, t_shift;
    std::map<int, int> glue;  // T vertex -> G vertex it coincides with
    if (mode == "bridge") {
        y_shift = m + 1;
        t_shift = fxs + 1;
    } else if (mode == "coincide-x") {
        y_shift = m;
        t_shift = fxs;
        glue[w1] = xs;
    } else if (mode == "coincide-y") {
        y_shift = m;
        t_shift = fxs + 1;
        glue[wp] = y1;
    } else if (mode == "edge-coincide") {
        y_shift = m - 1;
        t_shift = fxs;
        glue[w1] = xs;
        glue[wp] = y1;
    } else {
        throw std::invalid_argument(
            "unknown join mode: " + mode +
            " (expected bridge, coincide-x, coincide-y, edge-coincide)");
    }

    // T's surviving vertices are appended after G's, in index order
    std::map<int, int> tmap;
    int next = g.p;
    for (int v = 0; v < t.p; ++v) tmap[v] = glue.count(v) ? glue[v] : next++;

    Graph joined;
    joined.p = next;
    joined.edges = g.edges;
    for (const auto& e : t.edges) {
        Edge mapped = make_edge(tmap[e.first], tmap[e.second]);
        if (!joined.has_edge(mapped.first, mapped.second)) joined.edges.push_back(mapped);
    }
    if (mode == "bridge") joined.edges.push_back(make_edge(xs, tmap[wp]));
    joined.canonicalize();

    Labeling out;
    out.kind = "graceful";
    for (int v : bp.first) out.vertex[v] = f.vcolor(v);
    for (int v : bp.second) out.vertex[v] = f.vcolor(v) + y_shift;
    for (int v = 0; v < t.p; ++v) out.vertex[tmap[v]] = gt.vcolor(v) + t_shift;
    out.edge = induce_edge_colors(joined, out.vertex, EdgeRule::abs_difference);

    long long expect = n + m + (mode == "bridge" ? 1 : mode == "edge-coincide" ? -1 : 0);
    if (joined.q() != expect) throw std::logic_error("joined graph has the wrong edge count");
    return {joined, checked(joined, std::move(out), "graceful_join " + mode)};
}

Labeling totally_kd_sequential(const Graph& t, const Labeling& f, long long k, long long d) {
    if (k < 1 || d < 1) throw std::invalid_argument("k and d must be positive");
    if (!t.connected() || t.q() != t.p - 1)
        throw std::invalid_argument("totally_kd_sequential expects a tree");
    if (!verify(t, f, "graceful").accepted)
        throw std::invalid_argument("input labeling is not graceful");

    Labeling out;
    out.kind = "totally-kd-sequential";
    out.params = {{"k", k}, {"d", d}};
    for (int v = 0; v < t.p; ++v) out.vertex[v] = k + 2 * f.vcolor(v) * d;
    for (const auto& e : t.edges)
        out.edge[e] = k + (2 * f.ecolor(e.first, e.second) - 1) * d;
    return checked(t, std::move(out), "totally_kd_sequential");
}

TupleColoring multi_dimension_compose(const Graph& g, const std::vector<Labeling>& layers) {
    if (layers.size() < 2) throw std::invalid_argument("need at least two layers");
    for (const auto& L : layers)
        if (!L.total(g)) throw std::invalid_argument("layer domain mismatch: not total on g");
    TupleColoring out;
    for (int v = 0; v < g.p; ++v)
        for (const auto& L : layers) out.vertex[v].push_back(L.vcolor(v));
    for (const auto& e : g.edges)
        for (const auto& L : layers) out.edge[e].push_back(L.ecolor(e.first, e.second));
    return out;
}

}  // namespace topocode
