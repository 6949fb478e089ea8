#pragma once

// Chevalley structure constants N_{ab} with [e_a, e_b] = N_{ab} e_{a+b}.
//
// Signs follow the extraspecial-pair convention: positive roots are taken in
// the stable (height, lex) order; for each non-simple positive root d the
// special pair (a, c), a + c = d with a minimal, gets N_{ac} = +(p+1), where
// p is the largest integer with c - p*a a root. Every other constant is
// propagated through the Jacobi identity and the zero-sum-triple relation
//   N_{xy} / |z|^2 = N_{yz} / |x|^2 = N_{zx} / |y|^2   (x + y + z = 0),
// so the whole table is determined and reproducible bit-for-bit.

#include <cstdint>
#include <vector>

#include "orbitkit/root_system.hpp"

namespace orbitkit {

class ChevalleyTable {
public:
    explicit ChevalleyTable(const RootSystem& rs) : rs_(rs) { build(); }

    const RootSystem& system() const { return rs_; }

    // Constant for positive roots by index; 0 when the sum is not a root.
    int n_pos(int i, int j) const {
        return n_[static_cast<std::size_t>(i) * n_count_ + static_cast<std::size_t>(j)];
    }

    // Index of the (positive) sum of positives i and j, or -1.
    int sum_index(int i, int j) const {
        return sum_[static_cast<std::size_t>(i) * n_count_ + static_cast<std::size_t>(j)];
    }

    // General constant for roots of either sign. Derived from the positive
    // table through the standard identities rather than stored.
    int n_const(Root a, Root b) const {
        rs_.check(a);
        rs_.check(b);
        if (a.index == b.index) return 0;  // sum is 0 or 2a, never a root
        if (!a.negative && !b.negative) return n_pos(a.index, b.index);
        if (a.negative && b.negative) return -n_pos(a.index, b.index);
        if (a.negative) return -n_const(b, a);
        // a positive, b negative; write beta = -b.
        const Root beta = -b;
        std::vector<int> diff = rs_.dcoords(a);
        const std::vector<int>& bd = rs_.dcoords_of_positive(beta.index);
        for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= bd[k];
        auto s = rs_.find_root(diff);
        if (!s) return 0;
        if (s->positive()) {
            // a - beta = s > 0: N_{a,-beta} = -(|s|^2 / |a|^2) N_{beta,s}
            long long num = -static_cast<long long>(rs_.norm4(*s)) * n_pos(beta.index, s->index);
            return exact_div(num, rs_.norm4(a));
        }
        // beta - a = t > 0: N_{a,-beta} = (|t|^2 / |beta|^2) N_{t,a}
        const Root t = -*s;
        long long num = static_cast<long long>(rs_.norm4(t)) * n_pos(t.index, a.index);
        return exact_div(num, rs_.norm4(beta));
    }

    // Largest p >= 0 with (root j) - p*(root i) a root; |N| = p + 1.
    int string_down(int i, int j) const {
        std::vector<int> v = rs_.dcoords_of_positive(j);
        const std::vector<int>& a = rs_.dcoords_of_positive(i);
        int p = 0;
        for (;;) {
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= a[k];
            if (!rs_.find_root(v)) break;
            ++p;
        }
        return p;
    }

private:
    RootSystem rs_;  // owned copy: tables are self-contained values
    std::size_t n_count_ = 0;
    std::vector<std::int8_t> n_;
    std::vector<std::int16_t> sum_;

    static int exact_div(long long num, long long den) {
        if (den == 0 || num % den != 0)
            throw NotARoot("structure constant propagation produced a non-integer");
        return static_cast<int>(num / den);
    }

    void set(int i, int j, int v) {
        n_[static_cast<std::size_t>(i) * n_count_ + static_cast<std::size_t>(j)] =
            static_cast<std::int8_t>(v);
        n_[static_cast<std::size_t>(j) * n_count_ + static_cast<std::size_t>(i)] =
            static_cast<std::int8_t>(-v);
    }

    void build() {
        const int count = rs_.num_positive();
        n_count_ = static_cast<std::size_t>(count);
        n_.assign(n_count_ * n_count_, 0);
        sum_.assign(n_count_ * n_count_, -1);

        // Pairs of positive roots grouped by their (positive) sum.
        std::vector<std::vector<std::pair<int, int>>> pairs_by_sum(n_count_);
        std::vector<int> v(static_cast<std::size_t>(rs_.ambient_dim()));
        for (int i = 0; i < count; ++i) {
            const auto& di = rs_.dcoords_of_positive(i);
            for (int j = i + 1; j < count; ++j) {
                const auto& dj = rs_.dcoords_of_positive(j);
                for (std::size_t k = 0; k < v.size(); ++k) v[k] = di[k] + dj[k];
                auto s = rs_.find_root(v);
                if (!s) continue;
                sum_[static_cast<std::size_t>(i) * n_count_ + static_cast<std::size_t>(j)] =
                    static_cast<std::int16_t>(s->index);
                sum_[static_cast<std::size_t>(j) * n_count_ + static_cast<std::size_t>(i)] =
                    static_cast<std::int16_t>(s->index);
                pairs_by_sum[static_cast<std::size_t>(s->index)].emplace_back(i, j);
            }
        }

        // Index order refines height, so all constants with lower sums are
        // available when a root is processed.
        for (int d = 0; d < count; ++d) {
            const auto& pairs = pairs_by_sum[static_cast<std::size_t>(d)];
            if (pairs.empty()) continue;
            const auto [a, c] = pairs.front();  // extraspecial: minimal first member
            set(a, c, string_down(a, c) + 1);

            const long long norm_d = rs_.norm4(rs_.positive(d));
            const long long norm_c = rs_.norm4(rs_.positive(c));
            const long long denom_base = norm_c * n_pos(a, c);
            for (std::size_t t = 1; t < pairs.size(); ++t) {
                const auto [x, y] = pairs[t];
                // Jacobi identity on (x, y, -a) around e_{d-a}:
                //   N_{xy} N_{d,-a} + N_{y,-a} N_{y-a,x} + N_{-a,x} N_{x-a,y} = 0
                long long num = 0, den = 1;
                accumulate_term(num, den, y, x, a, -1);
                accumulate_term(num, den, x, y, a, +1);
                long long value_num = num * norm_d;
                long long value_den = den * denom_base;
                set(x, y, exact_div(value_num, value_den));
            }
        }
    }

    // Adds sign * (|r-a|^2 / |r|^2) N_{a,r-a} N_{r-a,other} to num/den,
    // skipping the term when r - a is not a root.
    void accumulate_term(long long& num, long long& den, int r, int other, int a, int sign) {
        std::vector<int> diff = rs_.dcoords_of_positive(r);
        const auto& ad = rs_.dcoords_of_positive(a);
        for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= ad[k];
        auto s = rs_.find_root(diff);
        if (!s) return;
        if (!s->positive()) throw NotARoot("difference with a simple root left the positive cone");
        const long long term_num = static_cast<long long>(sign) *
                                   rs_.norm4(*s) * n_pos(a, s->index) * n_pos(s->index, other);
        const long long term_den = rs_.norm4(rs_.positive(r));
        num = num * term_den + term_num * den;
        den *= term_den;
    }
};

inline ChevalleyTable structure_constants(const RootSystem& rs) { return ChevalleyTable(rs); }

} // namespace orbitkit
