#pragma once

// Reflections, involutions attached to orthogonal subsets, and the length
// statistics l(sigma), s(sigma) with the bound l - s.

#include <vector>

#include "orbitkit/root_system.hpp"

namespace orbitkit {

// Reflection of v in the hyperplane orthogonal to alpha, as a catalogued
// root. Exact: the Cartan integer 2(v,alpha)/(alpha,alpha) is integral.
inline Root reflect(const RootSystem& rs, Root alpha, Root v) {
    rs.check(alpha);
    rs.check(v);
    const int num = 2 * rs.inner4(v, alpha);
    const int den = rs.inner4(alpha, alpha);
    const int cartan = num / den;
    if (cartan * den != num) throw NotARoot("non-integral Cartan pairing");
    std::vector<int> w = rs.dcoords(v);
    const std::vector<int> a = rs.dcoords(alpha);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= cartan * a[k];
    auto r = rs.find_root(w);
    if (!r) throw NotARoot("reflection image is not a catalogued root");
    return *r;
}

// An orthogonal transformation of the root catalog, stored as a signed
// permutation of the positive-root indices.
class WeylElement {
public:
    static WeylElement identity(const RootSystem& rs) {
        WeylElement w;
        w.tag_ = rs.tag();
        w.image_.reserve(static_cast<std::size_t>(rs.num_positive()));
        for (int i = 0; i < rs.num_positive(); ++i) w.image_.push_back(rs.positive(i));
        return w;
    }

    static WeylElement reflection(const RootSystem& rs, Root alpha) {
        WeylElement w;
        w.tag_ = rs.tag();
        w.image_.reserve(static_cast<std::size_t>(rs.num_positive()));
        for (int i = 0; i < rs.num_positive(); ++i)
            w.image_.push_back(reflect(rs, alpha, rs.positive(i)));
        return w;
    }

    Root apply(Root r) const {
        Root img = image_[static_cast<std::size_t>(r.index)];
        return r.negative ? -img : img;
    }

    // Composition: (a.then_apply(b))(v) = a(b(v)).
    WeylElement after(const WeylElement& b) const {
        WeylElement out;
        out.tag_ = tag_;
        out.image_.reserve(image_.size());
        for (const Root& img : b.image_) out.image_.push_back(apply(img));
        return out;
    }

    bool operator==(const WeylElement& other) const {
        return tag_ == other.tag_ && image_ == other.image_;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i].negative || image_[i].index != static_cast<int>(i)) return false;
        return true;
    }

    bool is_involution() const { return after(*this).is_identity(); }

    // Positive roots sent to negative ones; |inversions| = l(w).
    std::vector<Root> inversions(const RootSystem& rs) const {
        std::vector<Root> out;
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i].negative) out.push_back(rs.positive(static_cast<int>(i)));
        return out;
    }

    int length() const {
        int l = 0;
        for (const Root& r : image_) l += r.negative ? 1 : 0;
        return l;
    }

private:
    std::uint16_t tag_ = 0;
    std::vector<Root> image_;
};

inline void require_orthogonal_positive(const RootSystem& rs, const std::vector<Root>& d) {
    for (const Root& r : d) {
        rs.check(r);
        if (r.negative) throw NotOrthogonal("orthogonal subsets consist of positive roots");
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[i] == d[j]) throw NotOrthogonal("repeated root in orthogonal subset");
            if (rs.inner4(d[i], d[j]) != 0) throw NotOrthogonal("subset is not pairwise orthogonal");
        }
}

// Product of the commuting reflections over an orthogonal subset.
inline WeylElement involution_of(const RootSystem& rs, const std::vector<Root>& d) {
    require_orthogonal_positive(rs, d);
    WeylElement w = WeylElement::identity(rs);
    WeylElement rev = WeylElement::identity(rs);
    for (const Root& beta : d) w = w.after(WeylElement::reflection(rs, beta));
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        rev = rev.after(WeylElement::reflection(rs, *it));
    if (!(w == rev)) throw NotOrthogonal("reflection product depends on order");
    return w;
}

struct InvolutionStats {
    WeylElement sigma;
    int l = 0;      // = |{a > 0 : sigma a < 0}|
    int s = 0;      // = |D|
    int bound = 0;  // l - s
    std::vector<Root> phi_sigma;
};

inline InvolutionStats involution_stats(const RootSystem& rs, const std::vector<Root>& d) {
    InvolutionStats st;
    st.sigma = involution_of(rs, d);
    st.phi_sigma = st.sigma.inversions(rs);
    st.l = static_cast<int>(st.phi_sigma.size());
    st.s = static_cast<int>(d.size());
    st.bound = st.l - st.s;
    return st;
}

// mu(n) = (n-2) + (n-4) + ... over the positive terms.
inline int mu(int n) {
    if (n < 2) throw DomainError("mu requires n >= 2");
    int total = 0;
    for (int t = n - 2; t > 0; t -= 2) total += t;
    return total;
}

} // namespace orbitkit
