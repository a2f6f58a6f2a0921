#include "topocode/nbstring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace topocode {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// 3 x q rows viewed 1-based, so the walks read like their formulas
struct Rows {
    std::vector<long long> xr, er, yr;
    int q() const { return static_cast<int>(er.size()); }
    long long x(int i) const { return xr[i - 1]; }
    long long e(int i) const { return er[i - 1]; }
    long long y(int i) const { return yr[i - 1]; }
};

std::vector<long long> vo_walk(const Rows& r, int k) {
    int q = r.q();
    std::vector<long long> out;
    out.reserve(3 * q);
    if (q == 0) return out;
    switch (k) {
        case 1:  // x_1..x_q  e_q..e_1  y_1..y_q
            for (int i = 1; i <= q; ++i) out.push_back(r.x(i));
            for (int i = q; i >= 1; --i) out.push_back(r.e(i));
            for (int i = 1; i <= q; ++i) out.push_back(r.y(i));
            break;
        case 2:  // down odd columns, up even columns
            for (int j = 1; j <= q; ++j) {
                if (j % 2 == 1) {
                    out.insert(out.end(), {r.x(j), r.e(j), r.y(j)});
                } else {
                    out.insert(out.end(), {r.y(j), r.e(j), r.x(j)});
                }
            }
            break;
        case 3:  // diagonal zigzag: prefix, 6-token blocks, parity tail
            if (q == 1) {
                out = {r.y(1), r.e(1), r.x(1)};
            } else if (q == 2) {
                out = {r.y(2), r.y(1), r.e(1), r.x(1), r.e(2), r.x(2)};
            } else {
                out = {r.y(2), r.y(1), r.e(1), r.x(1), r.e(2)};
                int blocks = (q % 2 == 0) ? (q - 4) / 2 : (q - 3) / 2;
                for (int j = 1; j <= blocks; ++j)
                    out.insert(out.end(), {r.y(2 * j + 1), r.y(2 * j + 2), r.e(2 * j + 1),
                                           r.x(2 * j), r.x(2 * j + 1), r.e(2 * j + 2)});
                if (q % 2 == 0)
                    out.insert(out.end(), {r.y(q - 1), r.y(q), r.e(q - 1), r.x(q - 2),
                                           r.x(q - 1), r.x(q), r.e(q)});
                else
                    out.insert(out.end(), {r.y(q), r.e(q), r.x(q), r.x(q - 1)});
            }
            break;
        case 4:  // column-major triples
            for (int j = 1; j <= q; ++j) out.insert(out.end(), {r.x(j), r.e(j), r.y(j)});
            break;
        default:
            throw std::logic_error("vo walk index out of range");
    }
    return out;
}

// parses "vo<k>" with optional "r"/"i" suffix (dash allowed); k in [1,4]
void parse_vo_algo(const std::string& algo, int& k, char& variant) {
    std::string s = lower(algo);
    if (s.rfind("vo", 0) != 0 || s.size() < 3 || s[2] < '1' || s[2] > '4')
        throw std::invalid_argument("unknown vo algorithm: " + algo);
    k = s[2] - '0';
    std::string rest = s.substr(3);
    if (!rest.empty() && rest[0] == '-') rest = rest.substr(1);
    if (rest.empty()) variant = 'p';
    else if (rest == "r" || rest == "i") variant = rest[0];
    else throw std::invalid_argument("unknown vo algorithm: " + algo);
}

long long checked_token(long long t) {
    if (t < 0) throw std::invalid_argument("tokens must be non-negative");
    return t;
}

std::vector<int> checked_perm(const std::vector<int>& perm, size_t n, const char* which) {
    if (perm.empty()) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }
    if (perm.size() != n)
        throw std::invalid_argument(std::string(which) + " permutation has the wrong length");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || static_cast<size_t>(v) >= n || seen[v])
            throw std::invalid_argument(std::string(which) + " permutation is not a permutation");
        seen[v] = true;
    }
    return perm;
}

bool matches_target(const TopcodeMatrix& m, const TopcodeMatrix& t) {
    if (m.q() != t.q()) return false;
    try {
        return standard_form(m) == standard_form(t);
    } catch (const std::invalid_argument&) {
        // loop columns have no standard form; fall back to column multisets
    }
    auto key = [](const TopcodeMatrix& mm) {
        std::vector<TopcodeColumn> cols = mm.columns();
        for (auto& c : cols)
            if (c[0] > c[2]) std::swap(c[0], c[2]);
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    return key(m) == key(t);
}

}  // namespace

bool NumberString::digit_form() const {
    return std::all_of(tokens.begin(), tokens.end(),
                       [](long long t) { return t >= 0 && t <= 9; });
}

std::string NumberString::digits() const {
    std::string out;
    for (long long t : tokens) out += std::to_string(t);
    return out;
}

std::string NumberString::delimited(char sep) const {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(tokens[i]);
    }
    return out;
}

bool operator==(const NumberString& a, const NumberString& b) { return a.tokens == b.tokens; }

NumberString string_from_digits(const std::string& s) {
    NumberString out;
    out.tokens.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("digit string may contain only 0-9");
        out.tokens.push_back(c - '0');
    }
    return out;
}

NumberString string_from_tokens(std::vector<long long> tokens) {
    for (long long t : tokens) checked_token(t);
    return NumberString{std::move(tokens)};
}

NumberString vo_string(const TopcodeMatrix& m, const std::string& algo) {
    int k = 0;
    char variant = 'p';
    parse_vo_algo(algo, k, variant);
    Rows r{m.x, m.e, m.y};
    if (variant == 'r') std::swap(r.xr, r.yr);
    if (variant == 'i') {
        std::reverse(r.xr.begin(), r.xr.end());
        std::reverse(r.er.begin(), r.er.end());
        std::reverse(r.yr.begin(), r.yr.end());
    }
    return NumberString{vo_walk(r, k)};
}

NumberString tb_string(const std::vector<std::vector<long long>>& a, const std::string& algo) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix rows differ in length");
    if (m < 2 || n < 2) throw std::invalid_argument("tb_string needs at least a 2 x 2 matrix");

    // parse vo + roman numeral + optional suffix; maximal-munch roman, so an
    // i suffix must be written with the dash ("voI-i")
    std::string s = lower(algo);
    if (s.rfind("vo", 0) != 0) throw std::invalid_argument("unknown tb algorithm: " + algo);
    std::string rest = s.substr(2);
    int k = 0;
    if (rest.rfind("iv", 0) == 0) {
        k = 4;
        rest = rest.substr(2);
    } else {
        size_t run = 0;
        while (run < rest.size() && rest[run] == 'i') ++run;
        if (run < 1 || run > 3) throw std::invalid_argument("unknown tb algorithm: " + algo);
        k = static_cast<int>(run);
        rest = rest.substr(run);
    }
    char variant = 'p';
    if (!rest.empty() && rest[0] == '-') rest = rest.substr(1);
    if (rest == "r" || rest == "i") variant = rest[0];
    else if (!rest.empty()) throw std::invalid_argument("unknown tb algorithm: " + algo);

    std::vector<std::vector<long long>> b = a;
    if (variant == 'r') std::reverse(b.begin(), b.end());  // upside-down
    if (variant == 'i')
        for (auto& row : b) std::reverse(row.begin(), row.end());  // right-to-left

    int mm = static_cast<int>(m), nn = static_cast<int>(n);
    auto cell = [&](int i, int j) { return b[i - 1][j - 1]; };  // 1-based
    NumberString out;
    out.tokens.reserve(m * n);
    switch (k) {
        case 1:  // row serpentine
            for (int i = 1; i <= mm; ++i) {
                if (i % 2 == 1)
                    for (int j = 1; j <= nn; ++j) out.tokens.push_back(cell(i, j));
                else
                    for (int j = nn; j >= 1; --j) out.tokens.push_back(cell(i, j));
            }
            break;
        case 2:  // column serpentine
            for (int j = 1; j <= nn; ++j) {
                if (j % 2 == 1)
                    for (int i = 1; i <= mm; ++i) out.tokens.push_back(cell(i, j));
                else
                    for (int i = mm; i >= 1; --i) out.tokens.push_back(cell(i, j));
            }
            break;
        case 3:  // anti-diagonal zigzag from the bottom-left to the top-right
            for (int d = 1 - mm; d <= nn - 1; ++d) {
                int t = d - (1 - mm);
                int lo = std::max(1, 1 - d), hi = std::min(mm, nn - d);
                if (t % 2 == 1)
                    for (int i = lo; i <= hi; ++i) out.tokens.push_back(cell(i, i + d));
                else
                    for (int i = hi; i >= lo; --i) out.tokens.push_back(cell(i, i + d));
            }
            break;
        case 4:  // column-major
            for (int j = 1; j <= nn; ++j)
                for (int i = 1; i <= mm; ++i) out.tokens.push_back(cell(i, j));
            break;
        default:
            throw std::logic_error("tb walk index out of range");
    }
    return out;
}

NumberString string_op(const NumberString& a, const NumberString& b, const std::string& op,
                       const std::vector<int>& perm_a, const std::vector<int>& perm_b) {
    if (a.tokens.size() != b.tokens.size())
        throw std::invalid_argument("string_op needs strings of equal length");
    size_t n = a.tokens.size();
    std::vector<int> pa = checked_perm(perm_a, n, "first");
    std::vector<int> pb = checked_perm(perm_b, n, "second");

    NumberString out;
    out.tokens.reserve(op == "interleave" ? 2 * n : n);
    for (size_t t = 0; t < n; ++t) {
        long long av = a.tokens[pa[t]], bv = b.tokens[pb[t]];
        if (op == "plus") out.tokens.push_back(av + bv);
        else if (op == "minus") out.tokens.push_back(std::llabs(av - bv));
        else if (op == "times") out.tokens.push_back(av * bv);
        else if (op == "interleave") out.tokens.insert(out.tokens.end(), {av, bv});
        else if (op == "mix") out.tokens.push_back(t % 2 == 0 ? av : bv);
        else throw std::invalid_argument("unknown string operation: " + op);
    }
    return out;
}

NumberString reciprocal_string(const NumberString& s) {
    if (!s.digit_form()) throw std::invalid_argument("reciprocal needs a digit-form string");
    NumberString out = s;
    std::reverse(out.tokens.begin(), out.tokens.end());
    return out;
}

NumberString digit_dual(const NumberString& s) {
    if (!s.digit_form()) throw std::invalid_argument("digit_dual needs a digit-form string");
    NumberString out = s;
    for (auto& t : out.tokens) t = 9 - t;
    return out;
}

std::vector<NumberString> every_zero_string_family(const NumberString& base, int modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    std::vector<NumberString> family;
    family.reserve(modulus);
    for (int r = 1; r <= modulus; ++r) {
        NumberString f = base;
        for (auto& t : f.tokens) t = (t + r) % modulus;
        family.push_back(std::move(f));
    }
    return family;
}

int string_group_add(const std::vector<NumberString>& family, int i, int j, int zero) {
    int m = static_cast<int>(family.size());
    if (m == 0) throw std::invalid_argument("empty string family");
    for (int idx : {i, j, zero})
        if (idx < 1 || idx > m) throw std::invalid_argument("family index out of range");
    size_t n = family[0].tokens.size();
    for (const auto& f : family)
        if (f.tokens.size() != n)
            throw std::invalid_argument("family strings differ in length");

    int lambda = ((i + j - zero - 1) % m + m) % m + 1;
    for (size_t t = 0; t < n; ++t) {
        long long lhs = family[i - 1].tokens[t] + family[j - 1].tokens[t] -
                        family[zero - 1].tokens[t] - family[lambda - 1].tokens[t];
        if (((lhs % m) + m) % m != 0)
            throw std::invalid_argument("family is not an every-zero string group");
    }
    return lambda;
}

std::vector<TopcodeMatrix> pnbspp_solve(const NumberString& s, int q, PnbsppMode mode,
                                        const TopcodeMatrix* target, long long max_cuts) {
    if (!s.digit_form()) throw std::invalid_argument("pnbspp needs a digit-form string");
    if (q < 1 || q > 5) throw std::invalid_argument("pnbspp supports q in [1, 5]");
    if (mode == PnbsppMode::match_target && !target)
        throw std::invalid_argument("match_target mode needs a target matrix");

    int n = static_cast<int>(s.tokens.size());
    int k = 3 * q;
    std::vector<TopcodeMatrix> found;
    if (n < k) return found;

    // composition count C(n-1, k-1), saturating against the bound
    long long count = 1;
    for (int t = 1; t <= k - 1; ++t) {
        count = count * (n - t) / t;  // exact: product of consecutive binomials
        if (count > max_cuts) throw std::runtime_error("pnbspp cut bound exceeded");
    }

    // cut positions 1 <= c_1 < ... < c_{k-1} <= n-1 in lexicographic order
    std::vector<int> cuts(k - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::set<std::vector<long long>> seen;
    while (true) {
        bool ok = true;
        std::vector<long long> segs(k);
        int lo = 0;
        for (int t = 0; t < k && ok; ++t) {
            int hi = (t < k - 1) ? cuts[t] : n;
            if (hi - lo > 18) ok = false;  // decimal value would overflow
            long long v = 0;
            for (int d = lo; d < hi; ++d) v = v * 10 + s.tokens[d];
            segs[t] = v;
            lo = hi;
        }
        if (ok) {
            TopcodeMatrix m;
            for (int c = 0; c < q; ++c)
                m.push_column({segs[3 * c], segs[3 * c + 1], segs[3 * c + 2]});
            bool graphic = true;
            try {
                realize(m);
            } catch (const std::invalid_argument&) {
                graphic = false;
            }
            if (graphic && (mode == PnbsppMode::graphicable_any || matches_target(m, *target))) {
                std::vector<long long> key = m.x;
                key.insert(key.end(), m.e.begin(), m.e.end());
                key.insert(key.end(), m.y.begin(), m.y.end());
                if (seen.insert(key).second) found.push_back(std::move(m));
            }
        }
        // next combination
        int t = k - 2;
        while (t >= 0 && cuts[t] == n - 1 - (k - 2 - t)) --t;
        if (t < 0) break;
        ++cuts[t];
        for (int u = t + 1; u < k - 1; ++u) cuts[u] = cuts[u - 1] + 1;
    }
    return found;
}

}  // namespace topocode
