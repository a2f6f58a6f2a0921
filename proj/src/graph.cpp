#include "topocode/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace topocode {

Edge make_edge(int u, int v) {
    if (u < 0 || v < 0) throw std::invalid_argument("negative vertex index");
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    return {std::min(u, v), std::max(u, v)};
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

void Graph::add_edge(int u, int v) {
    Edge e = make_edge(u, v);
    if (e.second >= p) throw std::invalid_argument("edge endpoint out of range");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    edges.push_back(e);
}

void Graph::canonicalize() { std::sort(edges.begin(), edges.end()); }

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(p);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<int> Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw std::invalid_argument("no such vertex");
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(p, -1);
    auto adj = adjacency();
    int next = 0;
    for (int s = 0; s < p; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = next;
                    bfs.push(w);
                }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = component_ids();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool Graph::connected() const { return p <= 1 || component_count() == 1; }

bool operator==(const Graph& a, const Graph& b) {
    if (a.p != b.p) return false;
    auto ea = a.edges, eb = b.edges;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs >= 1 vertex");
    Graph g;
    g.p = n;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    g.canonicalize();
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("negative leaf count");
    Graph g;
    g.p = leaves + 1;
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs >= 1 vertex");
    Graph g;
    g.p = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("parts must be nonempty");
    Graph g;
    g.p = s + t;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
    return g;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(g.p, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::sort(deg.rbegin(), deg.rend());
    return deg;
}

GraphResult vertex_split(const Graph& g, int v, const std::vector<int>& part_a) {
    if (!g.has_vertex(v)) throw std::invalid_argument("no such vertex");
    auto nbrs = g.neighbors(v);
    if (nbrs.size() < 2) throw std::invalid_argument("vertex_split needs degree >= 2");
    std::set<int> nbr_set(nbrs.begin(), nbrs.end());
    std::set<int> a_set(part_a.begin(), part_a.end());
    if (a_set.size() != part_a.size()) throw std::invalid_argument("part_a has duplicates");
    if (a_set.empty() || a_set.size() == nbr_set.size())
        throw std::invalid_argument("part_a must be a nonempty proper subset of N(v)");
    for (int w : a_set)
        if (!nbr_set.count(w)) throw std::invalid_argument("part_a member not a neighbor");

    GraphResult r;
    r.graph.p = g.p + 1;  // v' stays at v, v'' appended at old p
    for (auto [a, b] : g.edges) {
        if (a != v && b != v) {
            r.graph.add_edge(a, b);
            continue;
        }
        int w = (a == v) ? b : a;
        r.graph.add_edge(a_set.count(w) ? v : g.p, w);
    }
    r.graph.canonicalize();
    r.vertex_map.resize(g.p);
    std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
    r.new_vertices = {v, g.p};
    return r;
}

GraphResult vertex_coincide(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw std::invalid_argument("no such vertex");
    if (u == v) throw std::invalid_argument("cannot coincide a vertex with itself");
    if (g.has_edge(u, v)) throw std::invalid_argument("vertices are adjacent (loop)");
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    std::vector<int> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    if (!common.empty()) throw std::invalid_argument("shared neighbor (multi-edge)");

    int keep = std::min(u, v), drop = std::max(u, v);
    GraphResult r;
    r.graph.p = g.p - 1;
    r.vertex_map.resize(g.p);
    for (int i = 0; i < g.p; ++i)
        r.vertex_map[i] = (i == drop) ? keep : (i > drop ? i - 1 : i);
    for (auto [a, b] : g.edges) r.graph.add_edge(r.vertex_map[a], r.vertex_map[b]);
    r.graph.canonicalize();
    r.new_vertices = {keep};
    return r;
}

GraphResult edge_split(const Graph& g, Edge uv,
                       const std::vector<int>& part_u,
                       const std::vector<int>& part_v) {
    int u = uv.first, v = uv.second;
    if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
    if (g.degree(u) < 2 || g.degree(v) < 2)
        throw std::invalid_argument("edge_split endpoints need degree >= 2");

    auto check_part = [&](int end, int other, const std::vector<int>& part) {
        std::set<int> allowed;
        for (int w : g.neighbors(end))
            if (w != other) allowed.insert(w);
        std::set<int> ps(part.begin(), part.end());
        if (ps.size() != part.size()) throw std::invalid_argument("partition has duplicates");
        for (int w : ps)
            if (!allowed.count(w)) throw std::invalid_argument("partition member not a neighbor");
        return ps;
    };
    auto pu = check_part(u, v, part_u);
    auto pv = check_part(v, u, part_v);

    GraphResult r;
    r.graph.p = g.p + 2;  // u'' at old p, v'' at old p+1
    int u2 = g.p, v2 = g.p + 1;
    for (auto [a, b] : g.edges) {
        if ((a == u && b == v) || (a == v && b == u)) continue;  // uv removed
        int x = a, y = b;
        if (x == u || y == u) {
            int w = (x == u) ? y : x;
            r.graph.add_edge(pu.count(w) ? u : u2, w);
        } else if (x == v || y == v) {
            int w = (x == v) ? y : x;
            r.graph.add_edge(pv.count(w) ? v : v2, w);
        } else {
            r.graph.add_edge(x, y);
        }
    }
    r.graph.add_edge(u, v);    // u'v'
    r.graph.add_edge(u2, v2);  // u''v''
    r.graph.canonicalize();
    r.vertex_map.resize(g.p);
    std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
    r.new_vertices = {u, v, u2, v2};
    return r;
}

GraphResult edge_coincide(const Graph& g, Edge e1, Edge e2) {
    int u1 = e1.first, v1 = e1.second, u2 = e2.first, v2 = e2.second;
    if (!g.has_edge(u1, v1) || !g.has_edge(u2, v2)) throw std::invalid_argument("no such edge");
    std::set<int> ends{u1, v1, u2, v2};
    if (ends.size() != 4) throw std::invalid_argument("edges share an endpoint");

    Graph base = g;  // drop e2 so the merged edges collapse into one
    Edge drop = make_edge(u2, v2);
    base.edges.erase(std::find(base.edges.begin(), base.edges.end(), drop));

    auto first = vertex_coincide(base, u1, u2);
    auto second = vertex_coincide(first.graph, first.vertex_map[v1], first.vertex_map[v2]);

    GraphResult r;
    r.graph = second.graph;
    r.vertex_map.resize(g.p);
    for (int i = 0; i < g.p; ++i) r.vertex_map[i] = second.vertex_map[first.vertex_map[i]];
    r.new_vertices = {r.vertex_map[u1], r.vertex_map[v1]};
    return r;
}

GraphResult add_leaves(const Graph& g, const std::vector<std::pair<int, int>>& plan) {
    for (auto [v, cnt] : plan) {
        if (!g.has_vertex(v)) throw std::invalid_argument("plan names a missing vertex");
        if (cnt < 0) throw std::invalid_argument("negative leaf count");
    }
    GraphResult r;
    r.graph = g;
    r.vertex_map.resize(g.p);
    std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
    for (auto [v, cnt] : plan)
        for (int i = 0; i < cnt; ++i) {
            int leaf = r.graph.p++;
            r.graph.add_edge(v, leaf);
            r.new_vertices.push_back(leaf);
        }
    r.graph.canonicalize();
    return r;
}

Graph edge_swap(const Graph& g, Edge remove, Edge add) {
    Edge rm = make_edge(remove.first, remove.second);
    Edge ad = make_edge(add.first, add.second);
    if (!g.has_edge(rm.first, rm.second)) throw std::invalid_argument("edge to remove is absent");
    if (rm == ad) throw std::invalid_argument("added pair must differ from removed edge");
    if (g.has_edge(ad.first, ad.second)) throw std::invalid_argument("added edge already present");
    if (ad.second >= g.p) throw std::invalid_argument("edge endpoint out of range");
    Graph out = g;
    out.edges.erase(std::find(out.edges.begin(), out.edges.end(), rm));
    out.add_edge(ad.first, ad.second);
    out.canonicalize();
    return out;
}

TreeReport is_tree(const Graph& g) {
    TreeReport rep;
    rep.connected = g.connected();
    rep.acyclic = (g.q() == g.p - g.component_count());
    rep.tree = g.p >= 1 && rep.connected && rep.acyclic;
    auto deg = degree_sequence(g);
    long long rhs = 2;
    for (int d : deg) {
        if (d == 1) ++rep.leaf_count;
        if (d >= 3) rhs += d - 2;
    }
    rep.leaf_identity_rhs = rhs;
    rep.leaf_identity_holds = (rep.leaf_count == rhs);
    rep.size_identity_holds = (g.q() == g.p - 1);
    return rep;
}

namespace {

bool extend_mapping(const std::vector<std::vector<char>>& adj_a,
                    const std::vector<std::vector<char>>& adj_b,
                    std::vector<int>& map_ab, std::vector<char>& used, int next) {
    int n = static_cast<int>(adj_a.size());
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (adj_a[next][prev] != adj_b[cand][map_ab[prev]]) ok = false;
        if (!ok) continue;
        map_ab[next] = cand;
        used[cand] = 1;
        if (extend_mapping(adj_a, adj_b, map_ab, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.p > 10 || b.p > 10) throw std::invalid_argument("isomorphism check capped at 10 vertices");
    if (a.p != b.p || a.q() != b.q()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    int n = a.p;
    std::vector<std::vector<char>> ma(n, std::vector<char>(n, 0)), mb = ma;
    for (auto [u, v] : a.edges) ma[u][v] = ma[v][u] = 1;
    for (auto [u, v] : b.edges) mb[u][v] = mb[v][u] = 1;
    std::vector<int> map_ab(n, -1);
    std::vector<char> used(n, 0);
    return extend_mapping(ma, mb, map_ab, used, 0);
}

long long spanning_tree_count(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("spanning_tree_count needs a connected graph");
    int n = g.p;
    if (n <= 1) return 1;
    // Laplacian minor determinant, fraction-free Bareiss elimination
    int m = n - 1;
    std::vector<std::vector<__int128>> a(m, std::vector<__int128>(m, 0));
    for (auto [u, v] : g.edges) {
        if (u < m) ++a[u][u];
        if (v < m) ++a[v][v];
        if (u < m && v < m) {
            --a[u][v];
            --a[v][u];
        }
    }
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < m; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row == -1) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    __int128 det = sign * a[m - 1][m - 1];
    if (det > std::numeric_limits<long long>::max())
        throw std::overflow_error("spanning tree count exceeds 64 bits");
    return static_cast<long long>(det);
}

std::vector<Graph> spanning_tree_enumerate(const Graph& g) {
    if (g.p > 8) throw std::invalid_argument("spanning_tree_enumerate capped at 8 vertices");
    if (!g.connected()) throw std::invalid_argument("needs a connected graph");
    int n = g.p, q = g.q();
    std::vector<Graph> out;
    if (n <= 1) {
        out.push_back(g);
        return out;
    }
    std::vector<int> pick;
    std::vector<int> parent(n);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == n - 1) {
            Graph t;
            t.p = n;
            for (int idx : pick) t.edges.push_back(g.edges[idx]);
            t.canonicalize();
            out.push_back(t);
            return;
        }
        for (int i = start; i < q; ++i) {
            std::iota(parent.begin(), parent.end(), 0);
            bool cyclic = false;
            for (int idx : pick) {
                int ru = find(g.edges[idx].first), rv = find(g.edges[idx].second);
                parent[ru] = rv;
            }
            int ru = find(g.edges[i].first), rv = find(g.edges[i].second);
            if (ru == rv) cyclic = true;
            if (cyclic) continue;
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    std::vector<int> side(g.p, -1);
    auto adj = g.adjacency();
    for (int s = 0; s < g.p; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : adj[u]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    bfs.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.p; ++v) (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

}  // namespace topocode
