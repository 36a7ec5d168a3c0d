#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "tutteframe/polynomial.hpp"

namespace tutteframe {

inline uint64_t full_mask(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }
inline int popcount(uint64_t m) { return __builtin_popcountll(m); }

// Pure rank function over element masks (element i lives at bit i-1).
struct RankOracle {
    virtual ~RankOracle() = default;
    virtual int rank(uint64_t mask) const = 0;
};

// Value-semantic matroid: ground set 1..n, rank oracle, memo over masks.
class Matroid {
public:
    Matroid() = default;
    Matroid(int n, int r, std::shared_ptr<const RankOracle> oracle, std::string provenance)
        : n_(n), r_(r), oracle_(std::move(oracle)), provenance_(std::move(provenance)),
          memo_(std::make_shared<Memo>()) {}

    int n() const { return n_; }
    int r() const { return r_; }
    const std::string& provenance() const { return provenance_; }
    uint64_t ground() const { return full_mask(n_); }

    // Memoized; safe under concurrent idempotent insertion.
    int rank(uint64_t mask) const {
        {
            std::lock_guard<std::mutex> lock(memo_->mutex);
            auto it = memo_->table.find(mask);
            if (it != memo_->table.end()) return it->second;
        }
        int r = oracle_->rank(mask);
        std::lock_guard<std::mutex> lock(memo_->mutex);
        memo_->table.emplace(mask, r);
        return r;
    }
    // Direct oracle call for bulk scans where memoization would only burn memory.
    int rank_nomemo(uint64_t mask) const { return oracle_->rank(mask); }

    bool has_loops() const { return rank_of_loops_probe() > 0; }
    int count_loops() const { return rank_of_loops_probe(); }

private:
    int rank_of_loops_probe() const {
        int loops = 0;
        for (int e = 1; e <= n_; ++e)
            if (rank(1ull << (e - 1)) == 0) ++loops;
        return loops;
    }

    struct Memo {
        mutable std::mutex mutex;
        std::unordered_map<uint64_t, int> table;
    };

    int n_ = 0;
    int r_ = 0;
    std::shared_ptr<const RankOracle> oracle_;
    std::string provenance_;
    std::shared_ptr<Memo> memo_;
};

struct Flat {
    uint64_t elements = 0;
    int rank = 0;
    int size = 0;
    friend bool operator<(const Flat& a, const Flat& b) { return a.elements < b.elements; }
    friend bool operator==(const Flat& a, const Flat& b) { return a.elements == b.elements; }
};

// --- concrete oracles ----------------------------------------------------

namespace oracles {

struct Uniform : RankOracle {
    int r;
    explicit Uniform(int r) : r(r) {}
    int rank(uint64_t mask) const override { return std::min(r, popcount(mask)); }
};

// Column vectors over GF(p), rank by Gaussian elimination mod p.
struct Linear : RankOracle {
    int p;
    int dim;
    std::vector<std::array<int, 8>> vecs;
    Linear(int p, int dim, std::vector<std::array<int, 8>> v) : p(p), dim(dim), vecs(std::move(v)) {}

    int rank(uint64_t mask) const override {
        std::array<std::array<int, 8>, 8> rows{};
        int nrows = 0;
        for (int e = 0; mask; ++e, mask >>= 1) {
            if (!(mask & 1)) continue;
            std::array<int, 8> v = vecs[e];
            for (int i = 0; i < nrows; ++i) {
                int lead = 0;
                while (lead < dim && rows[i][lead] == 0) ++lead;
                if (lead < dim && v[lead] != 0) {
                    // v -= (v[lead] / rows[i][lead]) * rows[i]
                    int inv = mod_inverse(rows[i][lead]);
                    int factor = v[lead] * inv % p;
                    for (int c = lead; c < dim; ++c) v[c] = ((v[c] - factor * rows[i][c]) % p + p) % p;
                }
            }
            bool zero = true;
            for (int c = 0; c < dim; ++c)
                if (v[c]) { zero = false; break; }
            if (!zero) {
                rows[nrows++] = v;
                // keep rows sorted by leading index for the elimination above
                std::sort(rows.begin(), rows.begin() + nrows, [&](const auto& a, const auto& b) {
                    int la = 0, lb = 0;
                    while (la < dim && a[la] == 0) ++la;
                    while (lb < dim && b[lb] == 0) ++lb;
                    return la < lb;
                });
                if (nrows == dim) return dim;
            }
        }
        return nrows;
    }

private:
    int mod_inverse(int a) const {
        int res = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) res = res * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return res;
    }
};

// Cycle matroid of an explicit edge list.
struct Graphic : RankOracle {
    int vertices;
    std::vector<std::pair<int, int>> edges;  // 1-based vertex labels
    Graphic(int vertices, std::vector<std::pair<int, int>> e) : vertices(vertices), edges(std::move(e)) {}

    int rank(uint64_t mask) const override {
        std::array<int, 64> parent;
        for (int i = 0; i < vertices; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        int r = 0;
        for (int e = 0; mask; ++e, mask >>= 1) {
            if (!(mask & 1)) continue;
            int a = find(edges[e].first - 1), b = find(edges[e].second - 1);
            if (a != b) {
                parent[a] = b;
                ++r;
            }
        }
        return r;
    }
};

// Nested (row-echelon) matroid: S independent iff every prefix count is
// within the prefix weight of the defining bit string.
struct Echelon : RankOracle {
    std::vector<int> prefix_weight;  // prefix_weight[j] = wt(b_1..b_j), index 0 unused
    explicit Echelon(const BitSequence& b) {
        prefix_weight.assign(b.n + 1, 0);
        for (int j = 1; j <= b.n; ++j) prefix_weight[j] = prefix_weight[j - 1] + b.bit(j);
    }
    int rank(uint64_t mask) const override {
        int c = 0;
        for (int e = 1; mask; ++e, mask >>= 1)
            if ((mask & 1) && c + 1 <= prefix_weight[e]) ++c;
        return c;
    }
};

// Rank-1 blocks plus loops: U_{0,l} + U_{1,m_1} + ... + U_{1,m_k}.
struct Multipoint : RankOracle {
    std::vector<uint64_t> class_masks;  // loop block excluded
    int rank(uint64_t mask) const override {
        int r = 0;
        for (uint64_t cm : class_masks)
            if (mask & cm) ++r;
        return r;
    }
};

// Rank-2 line whose points come in parallel classes.
struct Line : RankOracle {
    std::vector<uint64_t> class_masks;
    int rank(uint64_t mask) const override {
        int touched = 0;
        for (uint64_t cm : class_masks)
            if (mask & cm) ++touched;
        return std::min(touched, 2);
    }
};

struct DirectSum : RankOracle {
    std::vector<Matroid> parts;
    std::vector<int> offsets;  // bit offset of each part
    int rank(uint64_t mask) const override {
        int r = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            r += parts[i].rank_nomemo((mask >> offsets[i]) & full_mask(parts[i].n()));
        return r;
    }
};

struct BasesList : RankOracle {
    std::vector<uint64_t> bases;
    int rank(uint64_t mask) const override {
        int r = 0;
        for (uint64_t b : bases) r = std::max(r, popcount(mask & b));
        return r;
    }
};

struct Restriction : RankOracle {
    Matroid parent;
    std::vector<int> elements;  // minor element i -> parent element elements[i-1]
    int rank(uint64_t mask) const override {
        uint64_t pm = 0;
        for (int i = 0; mask; ++i, mask >>= 1)
            if (mask & 1) pm |= 1ull << (elements[i] - 1);
        return parent.rank(pm);
    }
};

struct Contraction : RankOracle {
    Matroid parent;
    uint64_t contracted;
    int contracted_rank;
    std::vector<int> elements;
    int rank(uint64_t mask) const override {
        uint64_t pm = contracted;
        for (int i = 0; mask; ++i, mask >>= 1)
            if (mask & 1) pm |= 1ull << (elements[i] - 1);
        return parent.rank(pm) - contracted_rank;
    }
};

struct Truncation : RankOracle {
    Matroid parent;
    int cap;
    int rank(uint64_t mask) const override { return std::min(parent.rank(mask), cap); }
};

}  // namespace oracles

// --- closure, flats, minors ----------------------------------------------

inline uint64_t closure(const Matroid& m, uint64_t subset) {
    int rk = m.rank(subset);
    uint64_t cl = subset;
    for (int e = 1; e <= m.n(); ++e) {
        uint64_t bit = 1ull << (e - 1);
        if ((subset & bit) == 0 && m.rank(subset | bit) == rk) cl |= bit;
    }
    return cl;
}

inline int default_flat_cap() { return 2000000; }

// Rank-incremental flat enumeration: rank-(k+1) flats are the deduplicated
// closures of (flat + point) over the rank-k flats.
inline std::vector<std::vector<Flat>> flats_by_rank(const Matroid& m, int cap = default_flat_cap()) {
    std::vector<std::vector<Flat>> levels(m.r() + 1);
    uint64_t bottom = closure(m, 0);
    levels[0].push_back({bottom, 0, popcount(bottom)});
    std::size_t total = 1;
    for (int k = 0; k < m.r(); ++k) {
        std::set<uint64_t> next;
        for (const Flat& f : levels[k]) {
            for (int e = 1; e <= m.n(); ++e) {
                uint64_t bit = 1ull << (e - 1);
                if (f.elements & bit) continue;
                next.insert(closure(m, f.elements | bit));
            }
        }
        total += next.size();
        if (total > static_cast<std::size_t>(cap))
            throw infeasible_error("flats_by_rank: flat count exceeds cap");
        for (uint64_t fl : next) levels[k + 1].push_back({fl, k + 1, popcount(fl)});
    }
    return levels;
}

inline Matroid restrict_to(const Matroid& m, uint64_t subset) {
    auto oracle = std::make_shared<oracles::Restriction>();
    oracle->parent = m;
    for (int e = 1; e <= m.n(); ++e)
        if (subset & (1ull << (e - 1))) oracle->elements.push_back(e);
    int n = static_cast<int>(oracle->elements.size());
    int r = m.rank(subset);
    return Matroid(n, r, oracle, m.provenance() + "|restrict");
}

inline Matroid contract_by(const Matroid& m, uint64_t subset) {
    auto oracle = std::make_shared<oracles::Contraction>();
    oracle->parent = m;
    oracle->contracted = subset;
    oracle->contracted_rank = m.rank(subset);
    for (int e = 1; e <= m.n(); ++e)
        if (!(subset & (1ull << (e - 1)))) oracle->elements.push_back(e);
    int n = static_cast<int>(oracle->elements.size());
    int r = m.r() - oracle->contracted_rank;
    return Matroid(n, r, oracle, m.provenance() + "|contract");
}

inline Matroid truncate(const Matroid& m, int steps) {
    if (steps < 0 || steps > m.r()) throw invalid_error("truncate: steps out of range");
    if (steps == 0) return m;
    auto oracle = std::make_shared<oracles::Truncation>();
    oracle->parent = m;
    oracle->cap = m.r() - steps;
    return Matroid(m.n(), m.r() - steps, oracle, m.provenance() + "|trunc");
}

// --- Tutte polynomial routes ----------------------------------------------

inline int default_direct_cap() { return 24; }

// Exact corank-nullity sum over all 2^n subsets; chunked for worker threads.
// Chunk boundaries cannot affect the result (integer counts commute).
inline Bivariate tutte_direct(const Matroid& m, int threads = 0, int cap = default_direct_cap()) {
    if (m.n() > cap)
        throw infeasible_error("tutte_direct: n = " + std::to_string(m.n()) +
                               " exceeds direct-enumeration cap " + std::to_string(cap) +
                               "; use the frame or ftensor route");
    int n = m.n(), r = m.r();
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    uint64_t count = 1ull << n;
    threads = static_cast<int>(std::min<uint64_t>(threads, 8));
    std::vector<std::vector<uint64_t>> partial(
        threads, std::vector<uint64_t>(static_cast<std::size_t>(r + 1) * (n - r + 1), 0));
    auto worker = [&](int t) {
        uint64_t begin = count / threads * t;
        uint64_t end = (t == threads - 1) ? count : count / threads * (t + 1);
        auto& acc = partial[t];
        for (uint64_t mask = begin; mask < end; ++mask) {
            int rk = m.rank_nomemo(mask);
            int corank = r - rk;
            int nullity = popcount(mask) - rk;
            acc[static_cast<std::size_t>(corank) * (n - r + 1) + nullity] += 1;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    Bivariate result;
    for (int corank = 0; corank <= r; ++corank)
        for (int nullity = 0; nullity <= n - r; ++nullity) {
            uint64_t c = 0;
            for (int t = 0; t < threads; ++t)
                c += partial[t][static_cast<std::size_t>(corank) * (n - r + 1) + nullity];
            if (c) result += xm1_ym1_expansion(corank, nullity, Rational(BigInt(c)));
        }
    return result;
}

inline std::size_t default_delcon_memo_cap() { return 1u << 22; }

// Standard deletion-contraction recurrence, memoized on (remaining, contracted)
// mask pairs. A performance alternative to the 2^n sum; must agree with it.
inline Bivariate tutte_deletion_contraction(const Matroid& m,
                                            std::size_t memo_cap = default_delcon_memo_cap()) {
    struct PairHash {
        std::size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
            return std::hash<uint64_t>()(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
        }
    };
    std::unordered_map<std::pair<uint64_t, uint64_t>, Bivariate, PairHash> memo;
    std::function<Bivariate(uint64_t, uint64_t)> rec = [&](uint64_t alive, uint64_t contracted) -> Bivariate {
        if (alive == 0) return Bivariate::constant(Rational(1));
        auto key = std::make_pair(alive, contracted);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        uint64_t ebit = 1ull << (63 - __builtin_clzll(alive));
        uint64_t rest = alive ^ ebit;
        int rk_c = m.rank(contracted);
        Bivariate value;
        if (m.rank(contracted | ebit) == rk_c) {
            value = Bivariate::y() * rec(rest, contracted);           // loop
        } else if (m.rank(rest | contracted) < m.rank(alive | contracted)) {
            value = Bivariate::x() * rec(rest, contracted | ebit);    // coloop
        } else {
            value = rec(rest, contracted) + rec(rest, contracted | ebit);
        }
        if (memo.size() >= memo_cap)
            throw infeasible_error("tutte_deletion_contraction: memo cap exceeded");
        memo.emplace(key, value);
        return value;
    };
    return rec(m.ground(), 0);
}

// T(M; 1, 0): zero for matroids with loops, else the alternating sum over
// spanning subsets (the corank-nullity sum collapsed at x = 1, y = 0).
inline BigInt mobius_invariant(const Matroid& m, int cap = default_direct_cap()) {
    for (int e = 1; e <= m.n(); ++e)
        if (m.rank(1ull << (e - 1)) == 0) return BigInt(0);
    if (m.n() > cap) throw infeasible_error("mobius_invariant: direct cap exceeded");
    long long acc = 0;
    uint64_t count = 1ull << m.n();
    for (uint64_t mask = 0; mask < count; ++mask) {
        int rk = m.rank_nomemo(mask);
        if (rk != m.r()) continue;
        acc += ((popcount(mask) - rk) % 2 == 0) ? 1 : -1;
    }
    return BigInt(acc);
}

// --- the construction DSL --------------------------------------------------
//
//   uniform:R,N | pg:D,Q | complete:M | graphic:[(u,v);...] | echelon:BITS |
//   multipoint:L;M1,M2,... | line:M1,M2,... | sum(SPEC|SPEC|...) |
//   bases:N,R,{e1 e2 ...; ...}

namespace detail {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[' || ch == '{') ++depth;
        if (ch == ')' || ch == ']' || ch == '}') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<int> parse_int_list(const std::string& s, char sep, const std::string& what) {
    std::vector<int> out;
    for (const std::string& tok : split_top_level(s, sep)) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error(what + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace detail

inline Matroid matroid_from_spec(const std::string& raw_spec);

namespace detail {

inline Matroid direct_sum(const std::vector<Matroid>& parts, const std::string& provenance) {
    auto oracle = std::make_shared<oracles::DirectSum>();
    int n = 0, r = 0;
    for (const Matroid& p : parts) {
        oracle->offsets.push_back(n);
        oracle->parts.push_back(p);
        n += p.n();
        r += p.r();
    }
    if (n > 64) throw invalid_error("direct sum: ground set exceeds 64 elements");
    return Matroid(n, r, oracle, provenance);
}

inline Matroid construct_term(const std::string& spec) {
    auto colon = spec.find(':');
    if (spec.rfind("sum(", 0) == 0 && spec.back() == ')') {
        std::string inner = spec.substr(4, spec.size() - 5);
        std::vector<Matroid> parts;
        std::vector<std::string> canon;
        for (const std::string& sub : split_top_level(inner, '|')) {
            Matroid p = matroid_from_spec(sub);
            canon.push_back(p.provenance());
            parts.push_back(std::move(p));
        }
        if (parts.empty()) throw parse_error("sum: needs at least one part");
        std::string prov = "sum(";
        for (std::size_t i = 0; i < canon.size(); ++i) prov += (i ? "|" : "") + canon[i];
        prov += ")";
        return direct_sum(parts, prov);
    }
    if (colon == std::string::npos) throw parse_error("matroid spec: missing ':' in '" + spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);

    if (kind == "uniform") {
        auto v = parse_int_list(args, ',', "uniform");
        if (v.size() != 2) throw parse_error("uniform: expected uniform:R,N");
        int r = v[0], n = v[1];
        if (r < 0 || n < 0 || r > n) throw parse_error("uniform: need 0 <= R <= N");
        if (n > 64) throw parse_error("uniform: N > 64 unsupported");
        return Matroid(n, r, std::make_shared<oracles::Uniform>(r),
                       "uniform:" + std::to_string(r) + "," + std::to_string(n));
    }
    if (kind == "pg") {
        auto v = parse_int_list(args, ',', "pg");
        if (v.size() != 2) throw parse_error("pg: expected pg:D,Q");
        int d = v[0], q = v[1];
        if (d < 1) throw parse_error("pg: dimension must be >= 1");
        if (!is_prime(q)) throw parse_error("pg: Q must be prime");
        int dim = d + 1;
        if (dim > 8) throw parse_error("pg: dimension too large");
        // Projective points: vectors with first nonzero coordinate 1, in
        // lexicographic order.
        std::vector<std::array<int, 8>> vecs;
        std::array<int, 8> v8{};
        std::function<void(int, bool)> gen = [&](int i, bool lead_seen) {
            if (i == dim) {
                if (lead_seen) vecs.push_back(v8);
                return;
            }
            int lo = 0, hi = lead_seen ? q - 1 : 1;
            for (int c = lo; c <= hi; ++c) {
                if (!lead_seen && c == 1) {
                    v8[i] = 1;
                    gen(i + 1, true);
                    v8[i] = 0;
                } else if (lead_seen || c == 0) {
                    v8[i] = c;
                    gen(i + 1, lead_seen);
                    v8[i] = 0;
                }
            }
        };
        gen(0, false);
        int n = static_cast<int>(vecs.size());
        if (n > 64) throw parse_error("pg: too many points (n > 64)");
        return Matroid(n, dim, std::make_shared<oracles::Linear>(q, dim, std::move(vecs)),
                       "pg:" + std::to_string(d) + "," + std::to_string(q));
    }
    if (kind == "complete") {
        auto v = parse_int_list(args, ',', "complete");
        if (v.size() != 1 || v[0] < 1) throw parse_error("complete: expected complete:M with M >= 1");
        int m = v[0];
        std::vector<std::pair<int, int>> edges;
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b) edges.emplace_back(a, b);
        int n = static_cast<int>(edges.size());
        if (n > 64) throw parse_error("complete: too many edges");
        return Matroid(n, m >= 1 ? m - 1 : 0, std::make_shared<oracles::Graphic>(m, std::move(edges)),
                       "complete:" + std::to_string(m));
    }
    if (kind == "graphic") {
        if (args.size() < 2 || args.front() != '[' || args.back() != ']')
            throw parse_error("graphic: expected graphic:[(u,v);(u,v);...]");
        std::vector<std::pair<int, int>> edges;
        int maxv = 0;
        for (const std::string& tok : split_top_level(args.substr(1, args.size() - 2), ';')) {
            if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
                throw parse_error("graphic: bad edge '" + tok + "'");
            auto uv = parse_int_list(tok.substr(1, tok.size() - 2), ',', "graphic edge");
            if (uv.size() != 2 || uv[0] < 1 || uv[1] < 1) throw parse_error("graphic: bad edge '" + tok + "'");
            edges.emplace_back(std::min(uv[0], uv[1]), std::max(uv[0], uv[1]));
            maxv = std::max({maxv, uv[0], uv[1]});
        }
        if (edges.empty()) throw parse_error("graphic: needs at least one edge");
        if (edges.size() > 64) throw parse_error("graphic: too many edges");
        if (maxv > 64) throw parse_error("graphic: vertex label too large");
        std::string prov = "graphic:[";
        for (std::size_t i = 0; i < edges.size(); ++i)
            prov += (i ? ";" : "") + ("(" + std::to_string(edges[i].first) + "," +
                                      std::to_string(edges[i].second) + ")");
        prov += "]";
        auto g = std::make_shared<oracles::Graphic>(maxv, edges);
        int r = g->rank(full_mask(static_cast<int>(edges.size())));
        return Matroid(static_cast<int>(edges.size()), r, g, prov);
    }
    if (kind == "echelon") {
        BitSequence b = BitSequence::from_string(args);
        int r = b.weight();
        return Matroid(b.n, r, std::make_shared<oracles::Echelon>(b), "echelon:" + b.to_string());
    }
    if (kind == "multipoint") {
        auto semi = args.find(';');
        if (semi == std::string::npos) throw parse_error("multipoint: expected multipoint:L;M1,M2,...");
        int loops;
        try {
            loops = std::stoi(args.substr(0, semi));
        } catch (const std::exception&) {
            throw parse_error("multipoint: bad loop count");
        }
        if (loops < 0) throw parse_error("multipoint: loop count must be >= 0");
        auto sizes = parse_int_list(args.substr(semi + 1), ',', "multipoint");
        auto oracle = std::make_shared<oracles::Multipoint>();
        int pos = loops;
        std::string prov = "multipoint:" + std::to_string(loops) + ";";
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (sizes[i] < 1) throw parse_error("multipoint: class sizes must be >= 1");
            uint64_t cm = 0;
            for (int k = 0; k < sizes[i]; ++k) cm |= 1ull << (pos + k);
            oracle->class_masks.push_back(cm);
            pos += sizes[i];
            prov += (i ? "," : "") + std::to_string(sizes[i]);
        }
        if (pos > 64) throw parse_error("multipoint: too many elements");
        return Matroid(pos, static_cast<int>(sizes.size()), oracle, prov);
    }
    if (kind == "line") {
        auto sizes = parse_int_list(args, ',', "line");
        if (sizes.size() < 2) throw parse_error("line: needs at least two parallel classes");
        auto oracle = std::make_shared<oracles::Line>();
        int pos = 0;
        std::string prov = "line:";
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (sizes[i] < 1) throw parse_error("line: class sizes must be >= 1");
            uint64_t cm = 0;
            for (int k = 0; k < sizes[i]; ++k) cm |= 1ull << (pos + k);
            oracle->class_masks.push_back(cm);
            pos += sizes[i];
            prov += (i ? "," : "") + std::to_string(sizes[i]);
        }
        if (pos > 64) throw parse_error("line: too many elements");
        return Matroid(pos, 2, oracle, prov);
    }
    if (kind == "bases") {
        auto brace = args.find('{');
        if (brace == std::string::npos || brace < 1 || args[brace - 1] != ',' || args.back() != '}')
            throw parse_error("bases: expected bases:N,R,{e1 e2 ...; ...}");
        auto head = parse_int_list(args.substr(0, brace - 1), ',', "bases");
        if (head.size() != 2) throw parse_error("bases: expected N,R before the base list");
        int n = head[0], r = head[1];
        if (n < 0 || n > 64 || r < 0 || r > n) throw parse_error("bases: bad N, R");
        auto oracle = std::make_shared<oracles::BasesList>();
        for (const std::string& tok : split_top_level(args.substr(brace + 1, args.size() - brace - 2), ';')) {
            uint64_t b = 0;
            std::istringstream is(tok);
            std::string el;
            int count = 0;
            while (is >> el) {
                int e;
                try {
                    e = std::stoi(el);
                } catch (const std::exception&) {
                    throw parse_error("bases: bad element '" + el + "'");
                }
                if (e < 1 || e > n) throw parse_error("bases: element out of range");
                if (b & (1ull << (e - 1))) throw parse_error("bases: repeated element in a base");
                b |= 1ull << (e - 1);
                ++count;
            }
            if (count != r) throw parse_error("bases: every base must have exactly R elements");
            oracle->bases.push_back(b);
        }
        if (oracle->bases.empty()) throw parse_error("bases: needs at least one base");
        std::sort(oracle->bases.begin(), oracle->bases.end());
        oracle->bases.erase(std::unique(oracle->bases.begin(), oracle->bases.end()), oracle->bases.end());
        // Base-exchange axiom; cheap at desk scale and catches inconsistent lists.
        for (uint64_t b1 : oracle->bases)
            for (uint64_t b2 : oracle->bases) {
                uint64_t only1 = b1 & ~b2;
                for (uint64_t x = only1; x; x &= x - 1) {
                    uint64_t xbit = x & -x;
                    bool ok = false;
                    for (uint64_t y = b2 & ~b1; y && !ok; y &= y - 1) {
                        uint64_t cand = (b1 ^ xbit) | (y & -y);
                        ok = std::binary_search(oracle->bases.begin(), oracle->bases.end(), cand);
                    }
                    if (!ok) throw parse_error("bases: list violates the base-exchange axiom");
                }
            }
        std::string prov = "bases:" + std::to_string(n) + "," + std::to_string(r) + ",{";
        for (std::size_t i = 0; i < oracle->bases.size(); ++i) {
            if (i) prov += ";";
            bool first = true;
            for (int e = 1; e <= n; ++e)
                if (oracle->bases[i] & (1ull << (e - 1))) {
                    if (!first) prov += " ";
                    prov += std::to_string(e);
                    first = false;
                }
        }
        prov += "}";
        return Matroid(n, r, oracle, prov);
    }
    throw parse_error("matroid spec: unknown constructor '" + kind + "'");
}

// Strips whitespace except inside { } blocks, where it separates elements.
inline std::string strip_spec(const std::string& raw) {
    std::string out;
    int brace = 0;
    for (char ch : raw) {
        if (ch == '{') ++brace;
        if (ch == '}') --brace;
        if (isspace(static_cast<unsigned char>(ch))) {
            if (brace > 0 && !out.empty() && out.back() != ' ' && out.back() != '{' && out.back() != ';')
                out += ' ';
            continue;
        }
        if (ch == ';' && brace > 0 && !out.empty() && out.back() == ' ') out.pop_back();
        if (ch == '}' && !out.empty() && out.back() == ' ') out.pop_back();
        out += ch;
    }
    return out;
}

}  // namespace detail

inline Matroid matroid_from_spec(const std::string& raw_spec) {
    return detail::construct_term(detail::strip_spec(raw_spec));
}

}  // namespace tutteframe
