#pragma once

// Exact dense linear algebra: reduced row echelon over an arbitrary field,
// and fraction-free (Bareiss) rank over an exact integer type. The two rank
// routines are independent code paths on purpose; the verification suite
// cross-checks one against the other.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace orbitkit {

// Row-major dense matrix over a field's element type.
template <class F>
struct FieldMatrix {
    using Element = typename F::Element;
    int rows = 0, cols = 0;
    std::vector<Element> a;

    FieldMatrix() = default;
    FieldMatrix(int r, int c, Element fill = Element{})
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

    Element& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Element& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// In-place reduced row echelon form; returns the pivot columns. Pivot choice
// is the first nonzero entry scanning down each column, which keeps the
// result canonical for a given input.
template <class F>
std::vector<int> rref_in_place(FieldMatrix<F>& m, const F& f) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        const auto scale = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), scale);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            const auto factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int field_rank(FieldMatrix<F> m, const F& f) {
    return static_cast<int>(rref_in_place(m, f).size());
}

// Canonical kernel basis: one vector per free column, unit at that column,
// listed in increasing column order.
template <class F>
std::vector<std::vector<typename F::Element>> kernel_basis(FieldMatrix<F> m, const F& f) {
    const std::vector<int> pivots = rref_in_place(m, f);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<typename F::Element>> basis;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<typename F::Element> v(static_cast<std::size_t>(m.cols), f.zero());
        v[static_cast<std::size_t>(fc)] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = f.neg(m.at(static_cast<int>(r), fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Fraction-free Gaussian elimination over an exact integer type (int64,
// boost::multiprecision::cpp_int, ...). Every division is exact; a failed
// division means the scalar type overflowed and is reported loudly.
template <class Int>
int bareiss_rank(std::vector<Int> a, int rows, int cols) {
    auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * cols + j]; };
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int num = at(r, c) * at(i, j) - at(i, c) * at(r, j);
                Int q = num / prev;
                if (q * prev != num) throw std::overflow_error("bareiss: inexact division");
                at(i, j) = q;
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

} // namespace orbitkit
