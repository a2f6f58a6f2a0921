#include "topocode/degseq.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace topocode {

bool erdos_gallai(const std::vector<int>& degrees) {
    std::vector<long long> d(degrees.begin(), degrees.end());
    std::sort(d.rbegin(), d.rend());
    long long n = static_cast<long long>(d.size());
    if (!d.empty() && (d.front() >= n || d.back() < 0)) return false;
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2 != 0) return false;
    long long prefix = 0;
    for (long long k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        long long tail = 0;
        for (long long i = k; i < n; ++i) tail += std::min(d[i], k);
        if (prefix > k * (k - 1) + tail) return false;
    }
    return true;
}

std::optional<Graph> realize_brute(const std::vector<int>& degrees) {
    int n = static_cast<int>(degrees.size());
    if (n > 8) throw std::invalid_argument("realize_brute capped at 8 vertices");
    for (int d : degrees)
        if (d < 0 || d >= n) return std::nullopt;
    long long want = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    if (want % 2 != 0) return std::nullopt;

    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    // the target is the multiset: try to match it under some vertex order, so
    // search for degrees exactly as given (any graph with this multiset can be
    // permuted into the given positions)
    std::vector<int> cur(n, 0);
    std::vector<char> used(slots.size(), 0);
    std::function<bool(size_t, long long)> rec = [&](size_t idx, long long placed) {
        if (placed * 2 == want) {
            for (int i = 0; i < n; ++i)
                if (cur[i] != degrees[i]) return false;
            return true;
        }
        if (idx == slots.size()) return false;
        if (placed + static_cast<long long>(slots.size() - idx) < want / 2) return false;
        auto [u, v] = slots[idx];
        if (cur[u] < degrees[u] && cur[v] < degrees[v]) {
            ++cur[u];
            ++cur[v];
            used[idx] = 1;
            if (rec(idx + 1, placed + 1)) return true;
            used[idx] = 0;
            --cur[u];
            --cur[v];
        }
        return rec(idx + 1, placed);
    };
    if (!rec(0, 0)) return std::nullopt;
    Graph g;
    g.p = n;
    for (size_t i = 0; i < slots.size(); ++i)
        if (used[i]) g.add_edge(slots[i].first, slots[i].second);
    g.canonicalize();
    return g;
}

namespace {

DsResult sorted_result(std::vector<int> raw) {
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return raw[a] > raw[b]; });
    DsResult r;
    for (int idx : order) {
        r.degrees.push_back(raw[idx]);
        r.position_map.push_back(idx);
    }
    return r;
}

void check_positions(const std::vector<int>& d, const std::vector<int>& positions) {
    std::vector<char> seen(d.size(), 0);
    for (int p : positions) {
        if (p < 0 || p >= static_cast<int>(d.size()))
            throw std::invalid_argument("position out of range");
        if (seen[p]) throw std::invalid_argument("repeated position");
        seen[p] = 1;
    }
}

}  // namespace

DsResult ds_increase(const std::vector<int>& d, const std::vector<int>& positions) {
    if (positions.empty() || positions.size() > d.size())
        throw std::invalid_argument("need 1..length positions");
    check_positions(d, positions);
    std::vector<int> raw = d;
    for (int p : positions) ++raw[p];
    raw.push_back(static_cast<int>(positions.size()));
    return sorted_result(std::move(raw));
}

DsResult ds_decrease(const std::vector<int>& d, const std::vector<int>& positions) {
    if (positions.empty()) throw std::invalid_argument("need at least one position");
    check_positions(d, positions);
    int k = static_cast<int>(positions.size());
    // the dropped component (the removed vertex) must be distinct from the
    // positions losing a degree (its former neighbours)
    std::vector<char> named(d.size(), 0);
    for (int p : positions) named[p] = 1;
    int drop = -1;
    for (size_t t = 0; t < d.size() && drop < 0; ++t)
        if (!named[t] && d[t] == k) drop = static_cast<int>(t);
    if (drop < 0) throw std::invalid_argument("no component equal to k to drop");
    std::vector<int> raw = d;
    for (int p : positions) {
        if (raw[p] < 1) throw std::invalid_argument("degree would go negative");
        --raw[p];
    }
    raw.erase(raw.begin() + drop);
    return sorted_result(std::move(raw));
}

DsResult ds_component_coincide(const std::vector<int>& d, const std::vector<int>& c, int s) {
    if (s < 1 || s > static_cast<int>(std::min(d.size(), c.size())))
        throw std::invalid_argument("s out of range");
    std::vector<int> raw;
    for (int i = 0; i < s; ++i) raw.push_back(d[i] + c[i]);
    for (size_t i = s; i < d.size(); ++i) raw.push_back(d[i]);
    for (size_t i = s; i < c.size(); ++i) raw.push_back(c[i]);
    return sorted_result(std::move(raw));
}

DsResult ds_degree_coincide(const std::vector<int>& d, const std::vector<int>& c, int i, int j) {
    if (i < 0 || i >= static_cast<int>(d.size()) || j < 0 || j >= static_cast<int>(c.size()))
        throw std::invalid_argument("position out of range");
    std::vector<int> raw;
    for (size_t t = 0; t < d.size(); ++t)
        if (static_cast<int>(t) != i) raw.push_back(d[t]);
    for (size_t t = 0; t < c.size(); ++t)
        if (static_cast<int>(t) != j) raw.push_back(c[t]);
    raw.push_back(d[i] + c[j]);
    return sorted_result(std::move(raw));
}

DsResult ds_degree_join(const std::vector<int>& d, const std::vector<int>& c, int i, int j) {
    if (i < 0 || i >= static_cast<int>(d.size()) || j < 0 || j >= static_cast<int>(c.size()))
        throw std::invalid_argument("position out of range");
    std::vector<int> raw = d;
    ++raw[i];
    for (size_t t = 0; t < c.size(); ++t) raw.push_back(c[t] + (static_cast<int>(t) == j ? 1 : 0));
    return sorted_result(std::move(raw));
}

DsResult ds_self_contract(const std::vector<int>& d, int i, int j) {
    if (d.size() < 2) throw std::invalid_argument("need length >= 2");
    if (i == j || i < 0 || j < 0 || i >= static_cast<int>(d.size()) ||
        j >= static_cast<int>(d.size()))
        throw std::invalid_argument("positions must be distinct and in range");
    std::vector<int> raw;
    raw.push_back(d[i] + d[j]);
    for (size_t t = 0; t < d.size(); ++t)
        if (static_cast<int>(t) != i && static_cast<int>(t) != j) raw.push_back(d[t]);
    return sorted_result(std::move(raw));
}

DsResult ds_transform(const std::string& op, const std::vector<int>& d,
                      const std::vector<int>& aux, const std::vector<int>& args) {
    if (op == "increase") return ds_increase(d, args);
    if (op == "decrease") return ds_decrease(d, args);
    if (op == "component-coincide") {
        if (args.size() != 1) throw std::invalid_argument("component-coincide needs s");
        return ds_component_coincide(d, aux, args[0]);
    }
    if (op == "degree-coincide") {
        if (args.size() != 2) throw std::invalid_argument("degree-coincide needs i,j");
        return ds_degree_coincide(d, aux, args[0], args[1]);
    }
    if (op == "degree-join") {
        if (args.size() != 2) throw std::invalid_argument("degree-join needs i,j");
        return ds_degree_join(d, aux, args[0], args[1]);
    }
    if (op == "contract") {
        if (args.size() != 2) throw std::invalid_argument("contract needs i,j");
        return ds_self_contract(d, args[0], args[1]);
    }
    throw std::invalid_argument("unknown degree-sequence op: " + op);
}

CdsGroup cds_group(const CdsMatrix& base) {
    if (base.degrees.empty() || base.degrees.size() != base.colors.size())
        throw std::invalid_argument("Cds-matrix rows must be nonempty and equal length");
    int m = *std::max_element(base.degrees.begin(), base.degrees.end());
    if (m < 1) throw std::invalid_argument("max degree must be >= 1");
    CdsGroup g;
    g.base = base;
    g.modulus = m;
    for (int r = 0; r < m; ++r) {
        std::vector<int> row;
        for (int c : base.colors) row.push_back((c - 1 + r) % m + 1);  // residues in [1, M]
        g.color_rows.push_back(std::move(row));
    }
    return g;
}

int cds_add(const CdsGroup& g, int i, int j, int zero) {
    int m = g.modulus;
    if (i < 0 || j < 0 || zero < 0 || i >= m || j >= m || zero >= m)
        throw std::invalid_argument("element index out of range");
    return ((i + j - zero) % m + m) % m;
}

DsLatticePoint ds_lattice_sample(const std::vector<std::vector<int>>& base,
                                 const std::vector<int>& coeffs, const std::string& op) {
    if (base.empty()) throw std::invalid_argument("empty base");
    if (coeffs.size() != base.size()) throw std::invalid_argument("one coefficient per base entry");
    long long total = 0;
    for (int c : coeffs) {
        if (c < 0) throw std::invalid_argument("coefficients must be non-negative");
        total += c;
    }
    if (total < 1) throw std::invalid_argument("coefficients sum to zero");

    DsLatticePoint out;
    if (op == "linear-sum") {
        size_t len = base[0].size();
        for (const auto& b : base)
            if (b.size() != len) throw std::invalid_argument("linear-sum needs equal lengths");
        out.degrees.assign(len, 0);
        for (size_t i = 0; i < base.size(); ++i)
            for (size_t t = 0; t < len; ++t) out.degrees[t] += coeffs[i] * base[i][t];
        std::sort(out.degrees.rbegin(), out.degrees.rend());
    } else if (op == "degree-coincide" || op == "degree-join") {
        std::vector<int> acc;
        bool first = true;
        for (size_t i = 0; i < base.size(); ++i)
            for (int c = 0; c < coeffs[i]; ++c) {
                if (first) {
                    acc = base[i];
                    std::sort(acc.rbegin(), acc.rend());
                    first = false;
                } else if (op == "degree-coincide") {
                    acc = ds_degree_coincide(acc, base[i], 0, 0).degrees;
                } else {
                    acc = ds_degree_join(acc, base[i], 0, 0).degrees;
                }
            }
        out.degrees = acc;
    } else {
        throw std::invalid_argument("unknown lattice op: " + op);
    }
    out.graphical = erdos_gallai(out.degrees);
    return out;
}

}  // namespace topocode
