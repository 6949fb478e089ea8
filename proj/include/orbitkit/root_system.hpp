#pragma once

// Reduced root systems of types A-G (rank <= 8) in exact integer arithmetic.
//
// Coordinates are stored doubled (2x the standard Euclidean realization) so
// that every root of every type, including F4 half-sums and E-series spinor
// roots, is an integer vector. Inner products are reported as inner4(): four
// times the conventional value, an exact integer. G2 uses the 3-dimensional
// hyperplane realization rescaled so that the short root has squared length 1,
// matching the normalization used for the other multiply laced families.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitkit/errors.hpp"

namespace orbitkit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemId {
    Family family;
    int rank;

    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

    // Unique small tag; used by Root handles to detect cross-system mixing.
    std::uint16_t tag() const {
        return static_cast<std::uint16_t>((static_cast<int>(family) << 8) | rank);
    }

    bool operator==(const RootSystemId&) const = default;

    // Accepts "B3", "E8", "a1" (case-insensitive family letter).
    static RootSystemId parse(std::string_view s) {
        if (s.size() < 2) throw ParseError("root system id too short: '" + std::string(s) + "'");
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (f < 'A' || f > 'G') throw ParseError("unknown family letter in '" + std::string(s) + "'");
        int rank = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("bad rank in '" + std::string(s) + "'");
            rank = rank * 10 + (s[i] - '0');
        }
        return RootSystemId{static_cast<Family>(f), rank};
    }
};

// Lightweight handle to a catalogued root. Positive roots are indexed by
// their position in the stable positive-root order; a negative root carries
// the index of its negative plus the sign flag.
struct Root {
    std::uint16_t tag = 0;
    std::int16_t index = -1;
    bool negative = false;

    friend bool operator==(const Root& a, const Root& b) {
        return a.tag == b.tag && a.index == b.index && a.negative == b.negative;
    }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    // Orders positives before negatives, then by index; total and stable.
    friend bool operator<(const Root& a, const Root& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        if (a.negative != b.negative) return !a.negative;
        return a.index < b.index;
    }

    Root operator-() const { return Root{tag, index, !negative}; }
    bool positive() const { return !negative; }
};

// An unordered decomposition beta = alpha + gamma into positive roots,
// reported with alpha before gamma in the positive-root order.
struct SingularPair {
    Root alpha;
    Root gamma;
    Root beta;
};

class RootSystem {
public:
    static RootSystem build(RootSystemId id);
    static RootSystem build(std::string_view name) { return build(RootSystemId::parse(name)); }

    const RootSystemId& id() const { return id_; }
    std::uint16_t tag() const { return id_.tag(); }
    int rank() const { return id_.rank; }
    int ambient_dim() const { return ambient_; }
    int num_positive() const { return static_cast<int>(dcoords_.size()); }
    int coxeter_number() const { return coxeter_; }
    bool simply_laced() const {
        return id_.family == Family::A || id_.family == Family::D || id_.family == Family::E;
    }

    Root positive(int index) const {
        check_index(index);
        return Root{tag(), static_cast<std::int16_t>(index), false};
    }
    std::vector<Root> positive_roots() const {
        std::vector<Root> out;
        out.reserve(dcoords_.size());
        for (int i = 0; i < num_positive(); ++i) out.push_back(positive(i));
        return out;
    }

    // k = 1..rank, conventional (Bourbaki) numbering of the fundamental roots.
    Root fundamental(int k) const {
        if (k < 1 || k > rank()) throw DomainError("fundamental index out of range: " + std::to_string(k));
        return positive(fundamental_idx_[static_cast<std::size_t>(k - 1)]);
    }
    std::vector<Root> fundamentals() const {
        std::vector<Root> out;
        for (int k = 1; k <= rank(); ++k) out.push_back(fundamental(k));
        return out;
    }
    bool is_fundamental(Root r) const {
        check(r);
        return !r.negative && height_[static_cast<std::size_t>(r.index)] == 1;
    }

    std::vector<int> dcoords(Root r) const {
        check(r);
        std::vector<int> v = dcoords_[static_cast<std::size_t>(r.index)];
        if (r.negative)
            for (int& x : v) x = -x;
        return v;
    }
    std::vector<int> fcoords(Root r) const {
        check(r);
        std::vector<int> v = fcoords_[static_cast<std::size_t>(r.index)];
        if (r.negative)
            for (int& x : v) x = -x;
        return v;
    }
    const std::vector<int>& dcoords_of_positive(int index) const {
        check_index(index);
        return dcoords_[static_cast<std::size_t>(index)];
    }
    const std::vector<int>& fcoords_of_positive(int index) const {
        check_index(index);
        return fcoords_[static_cast<std::size_t>(index)];
    }
    // Sum of fundamental coefficients; negative for negative roots.
    int height(Root r) const {
        check(r);
        int h = height_[static_cast<std::size_t>(r.index)];
        return r.negative ? -h : h;
    }

    // Four times the conventional inner product. Exact, symmetric; zero iff
    // the roots are orthogonal.
    int inner4(Root a, Root b) const {
        check(a);
        check(b);
        int g = gram_[static_cast<std::size_t>(a.index) * dcoords_.size() + static_cast<std::size_t>(b.index)];
        return (a.negative != b.negative) ? -g : g;
    }
    int norm4(Root r) const { return inner4(r, r); }
    bool is_long(Root r) const { return norm4(r) == max_norm4_; }

    // Catalog lookup by doubled coordinates; absence is a valid answer.
    std::optional<Root> find_root(std::span<const int> dc) const {
        if (static_cast<int>(dc.size()) != ambient_) return std::nullopt;
        std::vector<int> key(dc.begin(), dc.end());
        auto it = index_of_.find(key);
        if (it != index_of_.end()) return positive(it->second);
        for (int& x : key) x = -x;
        it = index_of_.find(key);
        if (it != index_of_.end()) return -positive(it->second);
        return std::nullopt;
    }

    // Sum of two roots as a catalogued root, if the sum is a root.
    std::optional<Root> root_sum(Root a, Root b) const {
        std::vector<int> v = dcoords(a);
        std::vector<int> w = dcoords(b);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
        return find_root(v);
    }

    // All decompositions beta = alpha + gamma with alpha, gamma positive;
    // each unordered pair reported once, alpha before gamma, sorted by alpha.
    std::vector<SingularPair> singular_set(Root beta) const {
        check(beta);
        if (beta.negative) throw DomainError("singular_set requires a positive root");
        std::vector<SingularPair> out;
        const auto& bd = dcoords_[static_cast<std::size_t>(beta.index)];
        std::vector<int> rest(bd.size());
        for (int i = 0; i < num_positive(); ++i) {
            const auto& ad = dcoords_[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < bd.size(); ++k) rest[k] = bd[k] - ad[k];
            auto it = index_of_.find(rest);
            if (it == index_of_.end()) continue;
            int j = it->second;
            if (i < j) out.push_back(SingularPair{positive(i), positive(j), beta});
        }
        return out;
    }
    // |S(beta)| counted as roots, i.e. twice the number of pairs.
    int singular_root_count(Root beta) const {
        return 2 * static_cast<int>(singular_set(beta).size());
    }

    // The partial order on roots: precedes(beta, alpha) means beta < alpha,
    // i.e. alpha - beta is a sum of positive roots. Tested as "nonzero with
    // all fundamental coefficients >= 0", which is equivalent here: a
    // difference of roots has integer fundamental coefficients, and any such
    // nonnegative vector is a sum of fundamental roots.
    bool precedes(Root beta, Root alpha) const {
        std::vector<int> fa = fcoords(alpha);
        std::vector<int> fb = fcoords(beta);
        bool nonzero = false;
        for (std::size_t k = 0; k < fa.size(); ++k) {
            int d = fa[k] - fb[k];
            if (d < 0) return false;
            if (d > 0) nonzero = true;
        }
        return nonzero;
    }

    // Elements of the input set not preceded by any other element of the set.
    std::vector<Root> maximal_elements(const std::vector<Root>& roots) const {
        std::vector<Root> out;
        for (const Root& r : roots) {
            check(r);
            bool dominated = false;
            for (const Root& s : roots) {
                if (s == r) continue;
                if (precedes(r, s)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) out.push_back(r);
        }
        return out;
    }

    void check(const Root& r) const {
        if (r.tag != tag()) throw ForeignRoot("root belongs to a different system");
        if (r.index < 0 || r.index >= num_positive()) throw ForeignRoot("root index out of range");
    }

private:
    RootSystemId id_{Family::A, 1};
    int ambient_ = 0;
    int coxeter_ = 0;
    int max_norm4_ = 0;
    std::vector<std::vector<int>> dcoords_;  // positive roots, stable order
    std::vector<std::vector<int>> fcoords_;
    std::vector<int> height_;
    std::vector<int> fundamental_idx_;       // conventional numbering -> index
    std::vector<int> gram_;                  // inner4 values, row-major
    std::map<std::vector<int>, int> index_of_;

    void check_index(int index) const {
        if (index < 0 || index >= num_positive()) throw ForeignRoot("root index out of range");
    }

    static void validate(RootSystemId id);
    static std::vector<std::vector<int>> generate_positives(RootSystemId id, int& ambient);
    static std::vector<std::vector<int>> conventional_fundamentals(RootSystemId id);
    static int coxeter_of(RootSystemId id);
};

namespace detail {

inline std::vector<int> unit2(int dim, int i, int sign = 1) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 2 * sign;
    return v;
}

inline std::vector<int> pair2(int dim, int i, int j, int si, int sj) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 2 * si;
    v[static_cast<std::size_t>(j)] = 2 * sj;
    return v;
}

inline int dot(const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// Positive roots of E8, doubled: 2(eps_j +- eps_i) for i<j, and the doubled
// half-sums (s1,...,s7,1) with an even number of -1 entries among s1..s7.
inline std::vector<std::vector<int>> e8_positives() {
    std::vector<std::vector<int>> out;
    for (int j = 1; j < 8; ++j)
        for (int i = 0; i < j; ++i)
            for (int si : {1, -1}) out.push_back(pair2(8, j, i, 1, si));
    for (int mask = 0; mask < 128; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<int> v(8, 1);
        for (int k = 0; k < 7; ++k)
            if (mask & (1 << k)) v[static_cast<std::size_t>(k)] = -1;
        out.push_back(v);
    }
    return out;
}

} // namespace detail

inline void RootSystem::validate(RootSystemId id) {
    const int n = id.rank;
    auto bad = [&](const char* why) {
        throw UnsupportedRank(id.name() + ": " + why);
    };
    switch (id.family) {
        case Family::A:
            if (n < 1 || n > 8) bad("A requires 1 <= rank <= 8");
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            if (n < 2 || n > 8) bad("rank must be between 2 and 8");
            break;
        case Family::E:
            if (n < 6 || n > 8) bad("E requires rank 6, 7 or 8");
            break;
        case Family::F:
            if (n != 4) bad("F requires rank 4");
            break;
        case Family::G:
            if (n != 2) bad("G requires rank 2");
            break;
        default:
            bad("unknown family");
    }
}

inline int RootSystem::coxeter_of(RootSystemId id) {
    const int n = id.rank;
    switch (id.family) {
        case Family::A: return n + 1;
        case Family::B:
        case Family::C: return 2 * n;
        case Family::D: return 2 * n - 2;
        case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
        case Family::F: return 12;
        case Family::G: return 6;
    }
    return 0;
}

inline std::vector<std::vector<int>> RootSystem::generate_positives(RootSystemId id, int& ambient) {
    using namespace detail;
    const int n = id.rank;
    std::vector<std::vector<int>> out;
    switch (id.family) {
        case Family::A: {
            ambient = n + 1;
            for (int i = 0; i < n + 1; ++i)
                for (int j = i + 1; j < n + 1; ++j) out.push_back(pair2(ambient, i, j, 1, -1));
            break;
        }
        case Family::B: {
            ambient = n;
            for (int i = 0; i < n; ++i) out.push_back(unit2(n, i));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int sj : {-1, 1}) out.push_back(pair2(n, i, j, 1, sj));
            break;
        }
        case Family::C: {
            ambient = n;
            for (int i = 0; i < n; ++i) out.push_back(unit2(n, i, 2));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int sj : {-1, 1}) out.push_back(pair2(n, i, j, 1, sj));
            break;
        }
        case Family::D: {
            ambient = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int sj : {-1, 1}) out.push_back(pair2(n, i, j, 1, sj));
            break;
        }
        case Family::G: {
            ambient = 3;
            // Hyperplane realization from the fundamentals a1 = eps1 - eps2,
            // a2 = -2 eps1 + eps2 + eps3 (doubled).
            const std::vector<int> a1 = {2, -2, 0}, a2 = {-4, 2, 2};
            auto comb = [&](int c1, int c2) {
                std::vector<int> v(3);
                for (int k = 0; k < 3; ++k)
                    v[static_cast<std::size_t>(k)] =
                        c1 * a1[static_cast<std::size_t>(k)] + c2 * a2[static_cast<std::size_t>(k)];
                return v;
            };
            out = {comb(1, 0), comb(0, 1), comb(1, 1), comb(2, 1), comb(3, 1), comb(3, 2)};
            break;
        }
        case Family::F: {
            ambient = 4;
            for (int i = 0; i < 4; ++i) out.push_back(unit2(4, i));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int sj : {-1, 1}) out.push_back(pair2(4, i, j, 1, sj));
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<int> v = {1, 1, 1, 1};
                for (int k = 0; k < 3; ++k)
                    if (mask & (1 << k)) v[static_cast<std::size_t>(k + 1)] = -1;
                out.push_back(v);
            }
            break;
        }
        case Family::E: {
            ambient = 8;
            std::vector<std::vector<int>> e8 = detail::e8_positives();
            if (n == 8) {
                out = std::move(e8);
            } else {
                // E7 and E6 live inside the E8 lattice, cut out by
                // orthogonality to eps7+eps8 (E7) and also eps6+eps8 (E6).
                const std::vector<int> w1 = {0, 0, 0, 0, 0, 0, 2, 2};
                const std::vector<int> w2 = {0, 0, 0, 0, 0, 2, 0, 2};
                for (auto& r : e8) {
                    if (dot(r, w1) != 0) continue;
                    if (n == 6 && dot(r, w2) != 0) continue;
                    out.push_back(std::move(r));
                }
            }
            break;
        }
    }
    return out;
}

inline std::vector<std::vector<int>> RootSystem::conventional_fundamentals(RootSystemId id) {
    using namespace detail;
    const int n = id.rank;
    std::vector<std::vector<int>> f;
    switch (id.family) {
        case Family::A: {
            for (int k = 0; k < n; ++k) f.push_back(pair2(n + 1, k, k + 1, 1, -1));
            break;
        }
        case Family::B: {
            for (int k = 0; k + 1 < n; ++k) f.push_back(pair2(n, k, k + 1, 1, -1));
            f.push_back(unit2(n, n - 1));
            break;
        }
        case Family::C: {
            for (int k = 0; k + 1 < n; ++k) f.push_back(pair2(n, k, k + 1, 1, -1));
            f.push_back(unit2(n, n - 1, 2));
            break;
        }
        case Family::D: {
            for (int k = 0; k + 1 < n; ++k) f.push_back(pair2(n, k, k + 1, 1, -1));
            f.push_back(pair2(n, n - 2, n - 1, 1, 1));
            break;
        }
        case Family::G: {
            f = {{2, -2, 0}, {-4, 2, 2}};
            break;
        }
        case Family::F: {
            f = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
            break;
        }
        case Family::E: {
            f.push_back({1, -1, -1, -1, -1, -1, -1, 1});
            f.push_back({2, 2, 0, 0, 0, 0, 0, 0});
            f.push_back({-2, 2, 0, 0, 0, 0, 0, 0});
            for (int k = 1; k + 1 < n; ++k) f.push_back(pair2(8, k + 1, k, 1, -1));
            break;
        }
    }
    return f;
}

inline RootSystem RootSystem::build(RootSystemId id) {
    validate(id);
    RootSystem rs;
    rs.id_ = id;
    rs.coxeter_ = coxeter_of(id);

    std::vector<std::vector<int>> roots = generate_positives(id, rs.ambient_);
    std::vector<std::vector<int>> funds = conventional_fundamentals(id);
    const int n = id.rank;
    const std::size_t count = roots.size();

    std::map<std::vector<int>, int> pos_of;
    for (std::size_t i = 0; i < count; ++i) pos_of[roots[i]] = static_cast<int>(i);

    // Fundamental coefficients by breadth-first closure: every positive
    // non-fundamental root is a fundamental plus a lower positive root.
    std::vector<std::vector<int>> fc(count);
    std::vector<int> pending;
    for (int k = 0; k < n; ++k) {
        auto it = pos_of.find(funds[static_cast<std::size_t>(k)]);
        if (it == pos_of.end()) throw NotARoot(id.name() + ": fundamental root missing from catalog");
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k)] = 1;
        fc[static_cast<std::size_t>(it->second)] = std::move(e);
        pending.push_back(it->second);
    }
    std::vector<int> sum(static_cast<std::size_t>(rs.ambient_));
    for (std::size_t head = 0; head < pending.size(); ++head) {
        const int cur = pending[head];
        for (int k = 0; k < n; ++k) {
            const auto& fd = funds[static_cast<std::size_t>(k)];
            const auto& cd = roots[static_cast<std::size_t>(cur)];
            for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = cd[t] + fd[t];
            auto it = pos_of.find(sum);
            if (it == pos_of.end()) continue;
            auto& slot = fc[static_cast<std::size_t>(it->second)];
            if (!slot.empty()) continue;
            slot = fc[static_cast<std::size_t>(cur)];
            slot[static_cast<std::size_t>(k)] += 1;
            pending.push_back(it->second);
        }
    }
    for (std::size_t i = 0; i < count; ++i)
        if (fc[i].empty()) throw NotARoot(id.name() + ": positive root unreachable from fundamentals");

    // Stable order: height, then lexicographic doubled coordinates.
    std::vector<int> perm(count);
    std::iota(perm.begin(), perm.end(), 0);
    auto height_of = [&](int i) {
        const auto& v = fc[static_cast<std::size_t>(i)];
        return std::accumulate(v.begin(), v.end(), 0);
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        int ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return roots[static_cast<std::size_t>(a)] < roots[static_cast<std::size_t>(b)];
    });

    rs.dcoords_.resize(count);
    rs.fcoords_.resize(count);
    rs.height_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        rs.dcoords_[i] = std::move(roots[static_cast<std::size_t>(perm[i])]);
        rs.fcoords_[i] = std::move(fc[static_cast<std::size_t>(perm[i])]);
        rs.height_[i] = std::accumulate(rs.fcoords_[i].begin(), rs.fcoords_[i].end(), 0);
        rs.index_of_[rs.dcoords_[i]] = static_cast<int>(i);
    }

    rs.fundamental_idx_.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        rs.fundamental_idx_[static_cast<std::size_t>(k)] = rs.index_of_.at(funds[static_cast<std::size_t>(k)]);

    // inner4 table; the G2 realization carries an extra factor of 2.
    const int scale = (id.family == Family::G) ? 2 : 1;
    rs.gram_.resize(count * count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            int g = detail::dot(rs.dcoords_[i], rs.dcoords_[j]) / scale;
            rs.gram_[i * count + j] = g;
            rs.gram_[j * count + i] = g;
        }
    rs.max_norm4_ = 0;
    for (std::size_t i = 0; i < count; ++i)
        rs.max_norm4_ = std::max(rs.max_norm4_, rs.gram_[i * count + i]);

    return rs;
}

// Classical positive-root counts, used as a construction cross-check.
inline int expected_positive_count(RootSystemId id) {
    const int n = id.rank;
    switch (id.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return -1;
}

} // namespace orbitkit
