/*
   Copyright 2026 The ffdyn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffdyn/errors.hpp"

namespace ffdyn {

namespace detail {

// --- polynomials over F_p, coefficients as raw integers mod p ---------------
//
// Only what the field layer itself needs: picking an irreducible modulus and
// inverting elements. Everything user-facing goes through Poly instead.

using PPoly = std::vector<std::uint64_t>;  // c[i] = coefficient of z^i, no trailing zeros

inline void pp_strip(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly pp_mul(const PPoly& a, const PPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    pp_strip(c);
    return c;
}

inline std::uint64_t pp_inv_scalar(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
                 nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw std::domain_error("pp_inv_scalar: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

inline PPoly pp_rem(PPoly a, const PPoly& m, std::uint64_t p) {
    pp_strip(a);
    if (m.empty()) throw std::domain_error("pp_rem: division by zero polynomial");
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = pp_inv_scalar(m.back(), p);
    while (a.size() > dm) {
        std::uint64_t c = (a.back() * lead_inv) % p;
        std::size_t shift = a.size() - 1 - dm;
        if (c != 0)
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t sub = (c * m[i]) % p;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        a.pop_back();
        pp_strip(a);
        if (a.size() <= dm) break;
    }
    pp_strip(a);
    return a;
}

inline PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint64_t p) {
    return pp_rem(pp_mul(a, b, p), m, p);
}

inline PPoly pp_powmod(PPoly base, std::uint64_t e, const PPoly& m, std::uint64_t p) {
    PPoly r{1};
    base = pp_rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = pp_mulmod(r, base, m, p);
        e >>= 1;
        if (e > 0) base = pp_mulmod(base, base, m, p);
    }
    return r;
}

inline PPoly pp_gcd(PPoly a, PPoly b, std::uint64_t p) {
    pp_strip(a);
    pp_strip(b);
    while (!b.empty()) {
        PPoly r = pp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t li = pp_inv_scalar(a.back(), p);
        for (auto& c : a) c = (c * li) % p;
    }
    return a;
}

/// Rabin irreducibility test for a monic polynomial of degree d over F_p.
/// For d <= 3 this reduces to "no roots in F_p", checked as
/// gcd(z^p - z, f) = 1 (the product of all linear factors).
inline bool pp_is_irreducible(const PPoly& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    PPoly z{0, 1};
    if (d <= 3) {
        PPoly zp = pp_powmod(z, p, f, p);
        // zp - z
        PPoly diff = zp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        pp_strip(diff);
        PPoly g = pp_gcd(diff, f, p);
        return g.size() == 1;  // constant gcd: no roots, hence irreducible for deg <= 3
    }
    // general case: z^{p^d} = z mod f, and gcd(z^{p^{d/l}} - z, f) = 1 for prime l | d
    std::vector<std::size_t> prime_divs;
    {
        std::size_t dd = d;
        for (std::size_t l = 2; l * l <= dd; ++l)
            if (dd % l == 0) {
                prime_divs.push_back(l);
                while (dd % l == 0) dd /= l;
            }
        if (dd > 1) prime_divs.push_back(dd);
    }
    auto frobenius_iterate = [&](std::size_t k) {
        // z^{p^k} mod f by k successive p-th powers
        PPoly h = z;
        for (std::size_t i = 0; i < k; ++i) h = pp_powmod(h, p, f, p);
        return h;
    };
    PPoly hd = frobenius_iterate(d);
    pp_strip(hd);
    if (hd != z) return false;
    for (std::size_t l : prime_divs) {
        PPoly h = frobenius_iterate(d / l);
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        pp_strip(h);
        if (pp_gcd(h, f, p).size() != 1) return false;
    }
    return true;
}

inline bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t i = 3; i * i <= n; i += 2)
        if (n % i == 0) return false;
    return true;
}

}  // namespace detail

/// One element of F_q, q = p^d: d coefficients in [0, p), little-endian in the
/// root of the field modulus. Immutable value with structural equality.
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(std::vector<std::uint32_t> coeffs) : c_(std::move(coeffs)) {}

    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto v : c_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    std::vector<std::uint32_t> c_;
};

/// The field F_q with q = p^d, holding the fixed irreducible modulus.
/// Immutable after construction; every operation is a pure function, so one
/// context can be shared freely across threads.
class FieldCtx {
public:
    /// Deterministic construction: the modulus is the monic irreducible of
    /// degree d over F_p whose non-leading coefficient tuple, read as the
    /// base-p number sum(c_i p^i), is smallest. For d = 1 the modulus is z.
    FieldCtx(std::uint64_t p, unsigned d) : p_(p), d_(d) {
        if (!detail::is_small_prime(p)) throw std::invalid_argument("FieldCtx: p = " + std::to_string(p) + " is not prime");
        if (d < 1) throw std::invalid_argument("FieldCtx: d must be >= 1");
        if (p >= (1ULL << 31)) throw std::invalid_argument("FieldCtx: p too large (must fit 31 bits)");
        q_ = 1;
        for (unsigned i = 0; i < d; ++i) {
            if (q_ > (1ULL << 62) / p) throw std::invalid_argument("FieldCtx: q = p^d does not fit 63 bits");
            q_ *= p;
        }
        if (d == 1) {
            modulus_ = {0, 1};  // the identity polynomial z
        } else {
            for (std::uint64_t v = 0;; ++v) {
                if (v >= q_) throw internal_error("FieldCtx: no irreducible of requested degree found");
                detail::PPoly f(d + 1, 0);
                std::uint64_t t = v;
                for (unsigned i = 0; i < d; ++i) {
                    f[i] = t % p;
                    t /= p;
                }
                f[d] = 1;
                if (detail::pp_is_irreducible(f, p)) {
                    modulus_ = std::move(f);
                    break;
                }
            }
        }
    }

    std::uint64_t p() const { return p_; }
    unsigned d() const { return d_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.p_ == b.p_ && a.d_ == b.d_;
    }

    FieldElement zero() const { return FieldElement(std::vector<std::uint32_t>(d_, 0)); }

    FieldElement one() const {
        std::vector<std::uint32_t> c(d_, 0);
        c[0] = 1;
        return FieldElement(std::move(c));
    }

    /// decode: integer in [0, q) -> element, base-p digits, coeffs[0] least significant.
    FieldElement from_int(std::uint64_t v) const {
        if (v >= q_) throw std::invalid_argument("FieldCtx::from_int: value " + std::to_string(v) + " out of range [0, q)");
        std::vector<std::uint32_t> c(d_, 0);
        for (unsigned i = 0; i < d_; ++i) {
            c[i] = static_cast<std::uint32_t>(v % p_);
            v /= p_;
        }
        return FieldElement(std::move(c));
    }

    /// encode: element -> integer in [0, q). Exact inverse of from_int.
    std::uint64_t to_int(const FieldElement& e) const {
        check(e);
        std::uint64_t v = 0;
        for (unsigned i = d_; i-- > 0;) v = v * p_ + e.coeffs()[i];
        return v;
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        std::vector<std::uint32_t> c(d_);
        for (unsigned i = 0; i < d_; ++i) {
            std::uint64_t s = static_cast<std::uint64_t>(a.coeffs()[i]) + b.coeffs()[i];
            c[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        }
        return FieldElement(std::move(c));
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        std::vector<std::uint32_t> c(d_);
        for (unsigned i = 0; i < d_; ++i) {
            std::uint64_t s = static_cast<std::uint64_t>(a.coeffs()[i]) + p_ - b.coeffs()[i];
            c[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        }
        return FieldElement(std::move(c));
    }

    FieldElement neg(const FieldElement& a) const { return sub(zero(), a); }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        if (d_ == 1) {
            std::uint64_t v = (static_cast<std::uint64_t>(a.coeffs()[0]) * b.coeffs()[0]) % p_;
            return FieldElement({static_cast<std::uint32_t>(v)});
        }
        // schoolbook product, then fold down by the monic modulus
        std::vector<std::uint64_t> t(2 * d_ - 1, 0);
        for (unsigned i = 0; i < d_; ++i) {
            if (a.coeffs()[i] == 0) continue;
            for (unsigned j = 0; j < d_; ++j)
                t[i + j] = (t[i + j] + static_cast<std::uint64_t>(a.coeffs()[i]) * b.coeffs()[j]) % p_;
        }
        for (unsigned i = 2 * d_ - 2; i >= d_; --i) {
            std::uint64_t c = t[i];
            if (c != 0)
                for (unsigned j = 0; j < d_; ++j) {
                    std::uint64_t sub_v = (c * modulus_[j]) % p_;
                    t[i - d_ + j] = (t[i - d_ + j] + p_ - sub_v) % p_;
                }
            t[i] = 0;
        }
        std::vector<std::uint32_t> c(d_);
        for (unsigned i = 0; i < d_; ++i) c[i] = static_cast<std::uint32_t>(t[i]);
        return FieldElement(std::move(c));
    }

    FieldElement inv(const FieldElement& a) const {
        check(a);
        if (a.is_zero()) throw std::domain_error("FieldCtx::inv: division by zero");
        if (d_ == 1)
            return FieldElement({static_cast<std::uint32_t>(detail::pp_inv_scalar(a.coeffs()[0], p_))});
        // extended Euclid in F_p[z] against the modulus
        detail::PPoly r0 = modulus_, r1(a.coeffs().begin(), a.coeffs().end());
        detail::pp_strip(r1);
        detail::PPoly s0{}, s1{1};
        while (!r1.empty() && r1.size() > 1) {
            // one long-division step: r0 = q*r1 + r
            detail::PPoly q_poly;
            {
                detail::PPoly rem = r0;
                std::uint64_t li = detail::pp_inv_scalar(r1.back(), p_);
                q_poly.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
                while (rem.size() >= r1.size() && !rem.empty()) {
                    std::uint64_t c = (rem.back() * li) % p_;
                    std::size_t shift = rem.size() - r1.size();
                    q_poly[shift] = c;
                    for (std::size_t i = 0; i < r1.size(); ++i) {
                        std::uint64_t sub_v = (c * r1[i]) % p_;
                        rem[shift + i] = (rem[shift + i] + p_ - sub_v) % p_;
                    }
                    detail::pp_strip(rem);
                }
                detail::pp_strip(q_poly);
                r0.swap(r1);
                r1 = std::move(rem);
            }
            // (s0, s1) = (s1, s0 - q*s1)
            detail::PPoly qs = detail::pp_mul(q_poly, s1, p_);
            detail::PPoly ns = s0;
            if (ns.size() < qs.size()) ns.resize(qs.size(), 0);
            for (std::size_t i = 0; i < qs.size(); ++i) ns[i] = (ns[i] + p_ - qs[i]) % p_;
            detail::pp_strip(ns);
            s0 = std::move(s1);
            s1 = std::move(ns);
        }
        if (r1.empty()) throw internal_error("FieldCtx::inv: gcd with modulus not 1");
        std::uint64_t li = detail::pp_inv_scalar(r1[0], p_);
        std::vector<std::uint32_t> c(d_, 0);
        for (std::size_t i = 0; i < s1.size(); ++i)
            c[i] = static_cast<std::uint32_t>((s1[i] * li) % p_);
        return FieldElement(std::move(c));
    }

    FieldElement pow(FieldElement base, std::uint64_t e) const {
        FieldElement r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return r;
    }

private:
    void check(const FieldElement& e) const {
        if (e.coeffs().size() != d_)
            throw std::invalid_argument("FieldElement arity does not match field context");
    }

    std::uint64_t p_;
    unsigned d_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
};

/// Split a prime power q = p^d; rejects anything that is not a prime power >= 2.
inline std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    std::uint64_t p = q;
    for (std::uint64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    unsigned d = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++d;
    }
    if (t != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, d};
}

}  // namespace ffdyn
