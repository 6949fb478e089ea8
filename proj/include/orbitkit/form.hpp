#pragma once

// The canonical form attached to an orthogonal subset with scalars, its skew
// form matrix over F_p, rank/radical computations, the coadjoint action, and
// isotropic-subspace certificates. Orbit dimension is the rank of the form
// matrix (codimension of the radical).

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitkit/chevalley.hpp"
#include "orbitkit/linalg.hpp"
#include "orbitkit/prime_field.hpp"
#include "orbitkit/root_system.hpp"
#include "orbitkit/weyl.hpp"

namespace orbitkit {

// Smallest prime admissible for a system: not less than the Coxeter number.
inline PrimeField default_prime_for(const RootSystem& rs) {
    return PrimeField(next_prime_at_least(static_cast<std::uint32_t>(rs.coxeter_number())));
}

inline void require_coxeter_bound(const RootSystem& rs, const PrimeField& f) {
    if (static_cast<int>(f.p()) < rs.coxeter_number())
        throw FieldTooSmall("p = " + std::to_string(f.p()) + " is below the Coxeter number " +
                            std::to_string(rs.coxeter_number()) + " of " + rs.id().name());
}

// An orthogonal subset D of positive roots with nonzero scalars over F_p.
class OrthoSubset {
public:
    OrthoSubset(const RootSystem& rs, std::vector<Root> roots,
                std::vector<PrimeField::Element> xi, PrimeField field)
        : rs_(&rs), roots_(std::move(roots)), xi_(std::move(xi)), field_(field) {
        if (roots_.size() != xi_.size())
            throw DomainError("xi count does not match subset size");
        // Keep (root, xi) pairs sorted by root index.
        std::vector<std::size_t> perm(roots_.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t a, std::size_t b) { return roots_[a].index < roots_[b].index; });
        std::vector<Root> r2;
        std::vector<PrimeField::Element> x2;
        for (std::size_t i : perm) {
            r2.push_back(roots_[i]);
            x2.push_back(xi_[i]);
        }
        roots_ = std::move(r2);
        xi_ = std::move(x2);
        require_orthogonal_positive(rs, roots_);
        for (PrimeField::Element x : xi_)
            if (field_.is_zero(x)) throw DomainError("xi values must be nonzero");
        reduced_ = compute_reduced();
    }

    static OrthoSubset all_ones(const RootSystem& rs, std::vector<Root> roots, PrimeField field) {
        std::vector<PrimeField::Element> xi(roots.size(), field.one());
        return OrthoSubset(rs, std::move(roots), std::move(xi), field);
    }

    const RootSystem& system() const { return *rs_; }
    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<PrimeField::Element>& xi() const { return xi_; }
    const PrimeField& field() const { return field_; }
    std::size_t size() const { return roots_.size(); }
    bool reduced() const { return reduced_; }

    bool contains(Root r) const {
        for (const Root& b : roots_)
            if (b == r) return true;
        return false;
    }

private:
    const RootSystem* rs_;  // not owned; the system must outlive the subset
    std::vector<Root> roots_;
    std::vector<PrimeField::Element> xi_;
    PrimeField field_;
    bool reduced_ = true;

    bool compute_reduced() const {
        for (const Root& beta : roots_)
            for (const SingularPair& sp : rs_->singular_set(beta))
                if (contains(sp.alpha) || contains(sp.gamma)) return false;
        return true;
    }
};

// Root-level singular reduction: drop beta0 while some beta1 in the set has
// beta1 - beta0 a positive root. The first violating pair in ascending index
// order is removed, so the result is deterministic.
inline std::vector<Root> reduce_skeleton(const RootSystem& rs, std::vector<Root> roots) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < roots.size() && !changed; ++i) {
            for (const SingularPair& sp : rs.singular_set(roots[i])) {
                for (std::size_t j = 0; j < roots.size(); ++j) {
                    if (roots[j] == sp.alpha || roots[j] == sp.gamma) {
                        roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(j));
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
            }
        }
    }
    return roots;
}

// Same reduction on a subset with scalars; removed roots drop their scalar.
// The associated orbit is unchanged.
inline OrthoSubset reduce_singular(const OrthoSubset& d) {
    const std::vector<Root> kept = reduce_skeleton(d.system(), d.roots());
    std::vector<Root> roots;
    std::vector<PrimeField::Element> xi;
    for (std::size_t i = 0; i < d.size(); ++i) {
        bool keep = false;
        for (const Root& r : kept) keep = keep || r == d.roots()[i];
        if (keep) {
            roots.push_back(d.roots()[i]);
            xi.push_back(d.xi()[i]);
        }
    }
    return OrthoSubset(d.system(), std::move(roots), std::move(xi), d.field());
}

// A linear functional on u in dual-basis coordinates over the positive roots.
struct Functional {
    std::uint16_t tag = 0;
    PrimeField field{2};
    std::vector<PrimeField::Element> coeffs;

    PrimeField::Element at(int index) const { return coeffs[static_cast<std::size_t>(index)]; }
};

// f = sum over beta in D of xi_beta e*_beta.
inline Functional canonical_form(const OrthoSubset& d) {
    Functional f;
    f.tag = d.system().tag();
    f.field = d.field();
    f.coeffs.assign(static_cast<std::size_t>(d.system().num_positive()), 0);
    for (std::size_t i = 0; i < d.size(); ++i)
        f.coeffs[static_cast<std::size_t>(d.roots()[i].index)] = d.xi()[i];
    return f;
}

// Skew matrix B[a][c] = f([e_a, e_c]) over F_p, indexed by positive roots.
struct FormMatrix {
    std::uint16_t tag = 0;
    PrimeField field{2};
    FieldMatrix<PrimeField> m;

    int size() const { return m.rows; }
    PrimeField::Element at(int i, int j) const { return m.at(i, j); }
};

inline FormMatrix form_matrix(const ChevalleyTable& tbl, const Functional& f) {
    const RootSystem& rs = tbl.system();
    if (f.tag != rs.tag()) throw ForeignRoot("functional belongs to a different system");
    require_coxeter_bound(rs, f.field);
    const int n = rs.num_positive();
    FormMatrix b;
    b.tag = rs.tag();
    b.field = f.field;
    b.m = FieldMatrix<PrimeField>(n, n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int s = tbl.sum_index(i, j);
            if (s < 0) continue;
            const PrimeField::Element fv = f.at(s);
            if (f.field.is_zero(fv)) continue;
            const PrimeField::Element v = f.field.mul(f.field.from_int(tbl.n_pos(i, j)), fv);
            b.m.at(i, j) = v;
            b.m.at(j, i) = f.field.neg(v);
        }
    return b;
}

struct RankRadical {
    int rank = 0;
    std::vector<std::vector<PrimeField::Element>> radical_basis;
};

// Gaussian elimination over F_p; the radical basis is canonical (one vector
// per free column of the reduced echelon form, in stable root order).
inline RankRadical rank_and_radical(const FormMatrix& b) {
    RankRadical out;
    out.radical_basis = kernel_basis(b.m, b.field);
    out.rank = b.size() - static_cast<int>(out.radical_basis.size());
    return out;
}

inline int form_rank(const ChevalleyTable& tbl, const Functional& f) {
    FormMatrix b = form_matrix(tbl, f);
    return field_rank(b.m, b.field);
}

// dim Omega = rank of the form matrix of the canonical form. A non-reduced
// subset is reduced first (the orbit is unchanged); *reduced_applied reports
// whether that happened.
inline int orbit_dimension(const OrthoSubset& d, const ChevalleyTable& tbl,
                           bool* reduced_applied = nullptr) {
    if (reduced_applied) *reduced_applied = false;
    if (!d.reduced()) {
        if (reduced_applied) *reduced_applied = true;
        return form_rank(tbl, canonical_form(reduce_singular(d)));
    }
    return form_rank(tbl, canonical_form(d));
}

// f . exp(ad_{-y}) evaluated exactly; nilpotency bounds the iteration depth
// below p, so every 1/k! exists in F_p.
inline Functional coadjoint_act(const ChevalleyTable& tbl,
                                const std::vector<PrimeField::Element>& y, const Functional& f) {
    const RootSystem& rs = tbl.system();
    if (f.tag != rs.tag()) throw ForeignRoot("functional belongs to a different system");
    require_coxeter_bound(rs, f.field);
    const PrimeField& fld = f.field;
    const int n = rs.num_positive();
    if (static_cast<int>(y.size()) != n) throw DomainError("y must have one coordinate per positive root");

    std::vector<int> y_support;
    for (int j = 0; j < n; ++j)
        if (!fld.is_zero(y[static_cast<std::size_t>(j)])) y_support.push_back(j);

    Functional g;
    g.tag = f.tag;
    g.field = fld;
    g.coeffs.assign(static_cast<std::size_t>(n), 0);

    std::vector<PrimeField::Element> w(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // w holds (ad_{-y})^k e_i / k!; heights rise with every bracket, so
        // the loop ends well before k reaches p.
        std::fill(w.begin(), w.end(), 0);
        w[static_cast<std::size_t>(i)] = fld.one();
        PrimeField::Element acc = f.at(i);
        for (std::uint32_t k = 1;; ++k) {
            if (k >= fld.p()) throw FieldTooSmall("bracket depth reached the characteristic");
            std::fill(next.begin(), next.end(), 0);
            for (int j : y_support) {
                const PrimeField::Element yj = fld.neg(y[static_cast<std::size_t>(j)]);
                for (int t = 0; t < n; ++t) {
                    const PrimeField::Element wt = w[static_cast<std::size_t>(t)];
                    if (fld.is_zero(wt)) continue;
                    const int s = tbl.sum_index(j, t);
                    if (s < 0) continue;
                    const PrimeField::Element c =
                        fld.mul(fld.mul(yj, wt), fld.from_int(tbl.n_pos(j, t)));
                    auto& slot = next[static_cast<std::size_t>(s)];
                    slot = fld.add(slot, c);
                }
            }
            bool any = false;
            const PrimeField::Element invk = fld.inv(fld.from_int(k));
            for (int t = 0; t < n; ++t) {
                auto& v = next[static_cast<std::size_t>(t)];
                v = fld.mul(v, invk);
                any = any || !fld.is_zero(v);
            }
            if (!any) break;
            w.swap(next);
            for (int t = 0; t < n; ++t)
                acc = fld.add(acc, fld.mul(f.at(t), w[static_cast<std::size_t>(t)]));
        }
        g.coeffs[static_cast<std::size_t>(i)] = acc;
    }
    return g;
}

// True iff B[a][c] = 0 for all a, c in P.
inline bool check_isotropic(const ChevalleyTable& tbl, const Functional& f,
                            const std::vector<Root>& p_set) {
    const RootSystem& rs = tbl.system();
    for (const Root& r : p_set) {
        rs.check(r);
        if (r.negative) throw DomainError("isotropic subspaces are spanned by positive roots");
    }
    for (std::size_t i = 0; i < p_set.size(); ++i)
        for (std::size_t j = i + 1; j < p_set.size(); ++j) {
            const int s = tbl.sum_index(p_set[i].index, p_set[j].index);
            if (s < 0) continue;
            if (tbl.n_pos(p_set[i].index, p_set[j].index) == 0) continue;
            if (!f.field.is_zero(f.at(s))) return false;
        }
    return true;
}

// Maximality certified globally: a coordinate isotropic subspace spanned by P
// is maximal iff rank(B) = 2 (|Phi+| - |P|). Returns false when P is not
// isotropic at all.
inline bool check_maximal_isotropic(const ChevalleyTable& tbl, const Functional& f,
                                    const std::vector<Root>& p_set) {
    if (!check_isotropic(tbl, f, p_set)) return false;
    const int n = tbl.system().num_positive();
    return form_rank(tbl, f) == 2 * (n - static_cast<int>(p_set.size()));
}

} // namespace orbitkit
