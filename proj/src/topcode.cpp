#include "topocode/topcode.hpp"

#include "topocode/degseq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace topocode {

namespace {

long long apply_rule(EdgeRule rule, long long a, long long b, long long modulus) {
    switch (rule) {
        case EdgeRule::abs_difference: return a > b ? a - b : b - a;
        case EdgeRule::mod_sum:
            if (modulus <= 0) throw std::invalid_argument("mod-sum needs a positive modulus");
            return ((a + b) % modulus + modulus) % modulus;
        case EdgeRule::plain_sum: return a + b;
        case EdgeRule::gcd: return std::gcd(a, b);
        default: throw std::invalid_argument("matrix has no valued rule");
    }
}

}  // namespace

TopcodeMatrix::TopcodeMatrix(std::vector<long long> xr, std::vector<long long> er,
                             std::vector<long long> yr)
    : x(std::move(xr)), e(std::move(er)), y(std::move(yr)) {
    if (x.size() != e.size() || e.size() != y.size())
        throw std::invalid_argument("rows must have equal length");
    if (e.empty()) throw std::invalid_argument("Topcode-matrix needs at least one column");
}

TopcodeColumn TopcodeMatrix::column(int i) const {
    if (i < 0 || i >= q()) throw std::invalid_argument("column index out of range");
    return {x[i], e[i], y[i]};
}

void TopcodeMatrix::push_column(const TopcodeColumn& c) {
    x.push_back(c[0]);
    e.push_back(c[1]);
    y.push_back(c[2]);
}

std::vector<TopcodeColumn> TopcodeMatrix::columns() const {
    std::vector<TopcodeColumn> out;
    out.reserve(e.size());
    for (int i = 0; i < q(); ++i) out.push_back(column(i));
    return out;
}

bool TopcodeMatrix::rule_consistent() const {
    if (!valued()) return true;
    for (int i = 0; i < q(); ++i)
        if (e[i] != apply_rule(rule, x[i], y[i], modulus)) return false;
    return true;
}

bool operator==(const TopcodeMatrix& a, const TopcodeMatrix& b) {
    return a.x == b.x && a.e == b.e && a.y == b.y;
}

TopcodeMatrix matrix_from_columns(const std::vector<TopcodeColumn>& cols) {
    TopcodeMatrix m;
    for (const auto& c : cols) m.push_column(c);
    return m;
}

TopcodeMatrix from_colored_graph(const Graph& g, const Labeling& L, EdgeRule rule) {
    if (g.q() < 1) throw std::invalid_argument("graph has no edges");
    if (!L.total(g)) throw std::invalid_argument("labeling must color every vertex and edge");
    TopcodeMatrix m;
    for (const Edge& uv : g.edges) {
        long long a = L.vcolor(uv.first), b = L.vcolor(uv.second);
        if (a > b) std::swap(a, b);  // smaller color in the X row
        m.push_column({a, L.ecolor(uv.first, uv.second), b});
    }
    if (rule != EdgeRule::none) {
        m.rule = rule;
        m.modulus = (rule == EdgeRule::mod_sum) ? g.q() : 0;
        if (!m.rule_consistent())
            throw std::invalid_argument("edge colors do not follow the declared rule");
    }
    return m;
}

std::vector<int> tm_degree_sequence(const TopcodeMatrix& m) {
    std::map<long long, int> count;
    for (int i = 0; i < m.q(); ++i) {
        ++count[m.x[i]];
        ++count[m.y[i]];
    }
    std::vector<int> deg;
    for (auto [value, c] : count) deg.push_back(c);
    std::sort(deg.rbegin(), deg.rend());
    return deg;
}

bool is_graphicable(const TopcodeMatrix& m) {
    // a property of the occurrence-count degree sequence alone; realize()
    // is the stricter check that the matrix's own columns form a simple graph
    return erdos_gallai(tm_degree_sequence(m));
}

Realization realize(const TopcodeMatrix& m) {
    std::set<long long> values;
    for (int i = 0; i < m.q(); ++i) {
        if (m.x[i] == m.y[i])
            throw std::invalid_argument("loop column (x_i = y_i) is not realizable");
        values.insert(m.x[i]);
        values.insert(m.y[i]);
    }
    Realization r;
    r.vertex_value.assign(values.begin(), values.end());
    std::map<long long, int> index;
    for (size_t i = 0; i < r.vertex_value.size(); ++i)
        index[r.vertex_value[i]] = static_cast<int>(i);
    r.graph.p = static_cast<int>(values.size());
    for (int i = 0; i < m.q(); ++i) {
        int u = index[m.x[i]], v = index[m.y[i]];
        if (r.graph.has_edge(u, v)) throw std::invalid_argument("repeated column makes a multi-edge");
        r.graph.add_edge(u, v);
    }
    r.graph.canonicalize();
    return r;
}

TopcodeMatrix union_sum(const TopcodeMatrix& a, const TopcodeMatrix& b) {
    TopcodeMatrix m = a;
    m.rule = EdgeRule::none;
    for (int i = 0; i < b.q(); ++i) m.push_column(b.column(i));
    return m;
}

TopcodeMatrix subtract(const TopcodeMatrix& a, const TopcodeMatrix& sub) {
    // drop the first match of each subtrahend column; absent columns are
    // skipped, so A \ B means A \ (A geq B) as in the worked example
    std::vector<TopcodeColumn> cols = a.columns();
    for (int i = 0; i < sub.q(); ++i) {
        auto it = std::find(cols.begin(), cols.end(), sub.column(i));
        if (it != cols.end()) cols.erase(it);
    }
    TopcodeMatrix m;
    for (const auto& c : cols) m.push_column(c);
    return m;
}

TopcodeMatrix intersect(const TopcodeMatrix& a, const TopcodeMatrix& b) {
    std::map<TopcodeColumn, int> avail;
    for (int i = 0; i < b.q(); ++i) ++avail[b.column(i)];
    TopcodeMatrix m;
    for (int i = 0; i < a.q(); ++i) {
        auto c = a.column(i);
        auto it = avail.find(c);
        if (it != avail.end() && it->second > 0) {
            --it->second;
            m.push_column(c);
        }
    }
    return m;
}

TopcodeMatrix matrix_union(const TopcodeMatrix& a, const TopcodeMatrix& b) {
    return union_sum(a, subtract(b, intersect(a, b)));
}

TopcodeMatrix coincide(const TopcodeMatrix& a, const TopcodeMatrix& b, const TopcodeMatrix& h) {
    // H must be a common sub-multiset of both operands
    if (intersect(h, a).q() != h.q() || intersect(h, b).q() != h.q())
        throw std::invalid_argument("H is not a common sub-matrix");
    return union_sum(union_sum(subtract(a, h), h), subtract(b, h));
}

std::pair<TopcodeMatrix, TopcodeMatrix> split(const TopcodeMatrix& m, const TopcodeMatrix& h) {
    if (intersect(h, m).q() != h.q()) throw std::invalid_argument("H is not a sub-matrix");
    // mark the first match of each H column, then cut the rest around the
    // last marked position: columns before it joined with H form T1+H, the
    // ones after form T2+H
    std::vector<TopcodeColumn> cols = m.columns();
    std::vector<bool> taken(cols.size(), false);
    int last = -1;
    for (int i = 0; i < h.q(); ++i) {
        auto target = h.column(i);
        for (size_t j = 0; j < cols.size(); ++j)
            if (!taken[j] && cols[j] == target) {
                taken[j] = true;
                last = std::max<int>(last, static_cast<int>(j));
                break;
            }
    }
    TopcodeMatrix t1, t2;
    for (size_t j = 0; j < cols.size(); ++j) {
        if (taken[j]) continue;
        if (static_cast<int>(j) < last)
            t1.push_column(cols[j]);
        else
            t2.push_column(cols[j]);
    }
    for (int i = 0; i < h.q(); ++i) {
        t1.push_column(h.column(i));
        t2.push_column(h.column(i));
    }
    return {t1, t2};
}

TopcodeMatrix column_exchange(const TopcodeMatrix& m, int i, int j) {
    if (i < 0 || j < 0 || i >= m.q() || j >= m.q())
        throw std::invalid_argument("column index out of range");
    TopcodeMatrix out = m;
    std::swap(out.x[i], out.x[j]);
    std::swap(out.e[i], out.e[j]);
    std::swap(out.y[i], out.y[j]);
    return out;
}

TopcodeMatrix xy_exchange(const TopcodeMatrix& m, int i) {
    if (i < 0 || i >= m.q()) throw std::invalid_argument("column index out of range");
    TopcodeMatrix out = m;
    std::swap(out.x[i], out.y[i]);
    return out;
}

TopcodeMatrix standard_form(const TopcodeMatrix& m) {
    std::vector<TopcodeColumn> cols = m.columns();
    for (auto& c : cols) {
        if (c[0] == c[2]) throw std::invalid_argument("standard form forbids x_j = y_j");
        if (c[0] > c[2]) std::swap(c[0], c[2]);
    }
    std::sort(cols.begin(), cols.end(), [](const TopcodeColumn& a, const TopcodeColumn& b) {
        return std::tie(a[1], a[0], a[2]) < std::tie(b[1], b[0], b[2]);
    });
    TopcodeMatrix out = matrix_from_columns(cols);
    out.rule = m.rule;
    out.modulus = m.modulus;
    return out;
}

TopcodeMatrix dual_matrix(const TopcodeMatrix& m, DualEdgeRule edge_rule) {
    long long mv = m.x[0], mxv = m.x[0];
    for (int i = 0; i < m.q(); ++i) {
        mv = std::min({mv, m.x[i], m.y[i]});
        mxv = std::max({mxv, m.x[i], m.y[i]});
    }
    TopcodeMatrix out = m;
    for (int i = 0; i < m.q(); ++i) {
        out.x[i] = mxv + mv - m.x[i];
        out.y[i] = mxv + mv - m.y[i];
    }
    if (edge_rule == DualEdgeRule::recompute) {
        if (!m.valued()) throw std::invalid_argument("recompute needs a valued matrix");
        for (int i = 0; i < m.q(); ++i)
            out.e[i] = apply_rule(m.rule, out.x[i], out.y[i], m.modulus);
    } else {
        auto [mn, mx] = std::minmax_element(m.e.begin(), m.e.end());
        for (int i = 0; i < m.q(); ++i) out.e[i] = *mx + *mn - m.e[i];
        out.rule = EdgeRule::none;
    }
    return out;
}

TopcodeMatrix scale_add(long long a1, const TopcodeMatrix& m1, long long a2,
                        const TopcodeMatrix& m2) {
    if (m1.q() != m2.q()) throw std::invalid_argument("shape mismatch");
    TopcodeMatrix out = m1;
    out.rule = EdgeRule::none;
    for (int i = 0; i < m1.q(); ++i) {
        out.x[i] = a1 * m1.x[i] + a2 * m2.x[i];
        out.e[i] = a1 * m1.e[i] + a2 * m2.e[i];
        out.y[i] = a1 * m1.y[i] + a2 * m2.y[i];
    }
    return out;
}

TopcodeMatrix merge(const std::vector<TopcodeMatrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge needs at least one matrix");
    int q = parts[0].q();
    for (const auto& m : parts)
        if (m.q() != q) throw std::invalid_argument("shape mismatch");
    TopcodeMatrix out;
    out.x.assign(q, 0);
    out.e.assign(q, 0);
    out.y.assign(q, 0);
    std::vector<std::array<bool, 3>> set(q, {false, false, false});
    auto fill = [&](std::vector<long long>& row, const std::vector<long long>& src, int which) {
        for (int i = 0; i < q; ++i) {
            if (src[i] == 0) continue;
            if (set[i][which])
                throw std::invalid_argument("merge conflict: two nonzero contributors");
            set[i][which] = true;
            row[i] = src[i];
        }
    };
    for (const auto& m : parts) {
        fill(out.x, m.x, 0);
        fill(out.e, m.e, 1);
        fill(out.y, m.y, 2);
    }
    return out;
}

}  // namespace topocode
