#pragma once

// Prime fields F_p with canonical representatives in [0, p), and the
// quadratic extension F_{p^2} used by the optional extension-sampling mode.

#include <cstdint>
#include <string>
#include <utility>

#include "orbitkit/errors.hpp"

namespace orbitkit {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint32_t next_prime_at_least(std::uint32_t n) {
    std::uint32_t p = n < 2 ? 2 : n;
    while (!is_prime(p)) ++p;
    return p;
}

class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    }

    std::uint32_t p() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }
    bool is_zero(Element a) const { return a == 0; }

    Element from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Element>(s >= p_ ? s - p_ : s);
    }
    Element sub(Element a, Element b) const { return add(a, p_ == 0 ? 0 : (b == 0 ? 0 : p_ - b)); }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Element inv(Element a) const {
        if (a == 0) throw DomainError("division by zero in F_p");
        return pow(a, p_ - 2);
    }
    Element pow(Element a, std::uint64_t e) const {
        Element r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint32_t p_;
};

// F_{p^2} = F_p[t] / (t^2 - a) for a fixed non-residue a; odd p only.
class QuadExtField {
public:
    struct Element {
        std::uint32_t x = 0, y = 0;  // x + y t
        bool operator==(const Element&) const = default;
    };

    explicit QuadExtField(PrimeField base) : base_(base) {
        if (base_.p() == 2) throw DomainError("quadratic extension mode requires odd p");
        for (std::uint32_t c = 2; c < base_.p(); ++c) {
            if (base_.pow(c, (base_.p() - 1) / 2) != 1) {
                non_residue_ = c;
                break;
            }
        }
        if (non_residue_ == 0) throw DomainError("no quadratic non-residue found");
    }

    const PrimeField& base() const { return base_; }

    Element zero() const { return {}; }
    Element one() const { return {1, 0}; }
    bool is_zero(Element a) const { return a.x == 0 && a.y == 0; }
    Element embed(std::uint32_t v) const { return {v, 0}; }

    Element add(Element a, Element b) const { return {base_.add(a.x, b.x), base_.add(a.y, b.y)}; }
    Element sub(Element a, Element b) const { return {base_.sub(a.x, b.x), base_.sub(a.y, b.y)}; }
    Element neg(Element a) const { return {base_.neg(a.x), base_.neg(a.y)}; }
    Element mul(Element a, Element b) const {
        // (ax + ay t)(bx + by t) = ax bx + a ay by + (ax by + ay bx) t
        std::uint32_t xx = base_.mul(a.x, b.x);
        std::uint32_t yy = base_.mul(a.y, b.y);
        std::uint32_t cross = base_.add(base_.mul(a.x, b.y), base_.mul(a.y, b.x));
        return {base_.add(xx, base_.mul(non_residue_, yy)), cross};
    }
    Element inv(Element a) const {
        // 1 / (x + y t) = (x - y t) / (x^2 - a y^2)
        std::uint32_t norm = base_.sub(base_.mul(a.x, a.x), base_.mul(non_residue_, base_.mul(a.y, a.y)));
        std::uint32_t ni = base_.inv(norm);
        return {base_.mul(a.x, ni), base_.mul(base_.neg(a.y), ni)};
    }

private:
    PrimeField base_;
    std::uint32_t non_residue_ = 0;
};

} // namespace orbitkit
