// Copyright 2026 The curvecensus authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small finite fields F_q, q = p^m, built for exhaustive enumeration.
//
// An element of F_{p^m} is an integer index in [0, q): its base-p digits
// (c_0, ..., c_{m-1}) are the coefficients of a residue polynomial
// c_0 + c_1 x + ... + c_{m-1} x^{m-1} modulo a fixed monic irreducible
// modulus of degree m.  The modulus is chosen canonically as the
// lexicographically least monic irreducible polynomial, comparing the
// coefficient tuple (c_{m-1}, ..., c_0); equivalently, the irreducible
// x^m + sum c_i x^i minimizing the integer sum c_i p^i.  This makes element
// indices reproducible across runs and machines, which the census cache
// format relies on.  Examples: F_4 uses x^2+x+1, F_8 uses x^3+x+1,
// F_9 uses x^2+1.
//
// Fields up to kTableMax elements precompute full multiplication/addition
// tables (they sit in the innermost loops of the censuses); larger fields
// fall back to digit arithmetic.  Contexts are cached in a registry and
// handed out by reference: FieldCtx::get(p, m).

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "curvecensus/errors.hpp"

namespace curvecensus {

using Fq = std::uint32_t;  // element index in [0, q)

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Factor a prime power q = p^m; rejects anything else.
inline std::pair<unsigned long, int> prime_power_decompose(unsigned long q) {
    require_arg(q >= 2, "prime_power_decompose: q must be >= 2");
    unsigned long p = q;
    for (unsigned long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int m = 0;
    unsigned long r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    require_arg(r == 1, "prime_power_decompose: " + std::to_string(q) +
                            " is not a prime power");
    return {p, m};
}

class FieldCtx {
  public:
    static constexpr std::uint32_t kTableMax = 512;   // full op tables below this
    static constexpr std::uint32_t kSizeMax = 65536;  // hard capacity bound

    // Registry access; contexts are built once and kept for the process.
    static const FieldCtx& get(unsigned long p, int m) {
        static std::map<std::pair<unsigned long, int>, std::unique_ptr<FieldCtx>> reg;
        auto key = std::make_pair(p, m);
        auto it = reg.find(key);
        if (it == reg.end())
            it = reg.emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, m))).first;
        return *it->second;
    }

    static const FieldCtx& get_q(unsigned long q) {
        auto [p, m] = prime_power_decompose(q);
        return get(p, m);
    }

    unsigned long p() const { return p_; }
    int m() const { return m_; }
    std::uint32_t q() const { return q_; }

    // Modulus coefficients c_0..c_{m-1} of x^m + ... (empty for prime fields).
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    Fq zero() const { return 0; }
    Fq one() const { return q_ > 1 ? 1 : 0; }

    // The constant element for an arbitrary machine integer (reduces mod p).
    Fq from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Fq>(r);
    }

    Fq add(Fq a, Fq b) const {
        if (tables_) return add_tab_[a * q_ + b];
        return add_generic(a, b);
    }

    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }

    Fq neg(Fq a) const {
        if (tables_) return neg_tab_[a];
        return neg_generic(a);
    }

    Fq mul(Fq a, Fq b) const {
        if (tables_) return mul_tab_[a * q_ + b];
        return mul_generic(a, b);
    }

    Fq inv(Fq a) const {
        require_arg(a != 0, "FieldCtx::inv: zero has no inverse");
        if (tables_) return inv_tab_[a];
        return pow(a, q_ - 2);
    }

    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    Fq pow(Fq a, unsigned long long e) const {
        Fq r = one();
        Fq base = a;
        while (e) {
            if (e & 1ULL) r = mul(r, base);
            base = mul(base, base);
            e >>= 1ULL;
        }
        return r;
    }

    // Arithmetic Frobenius a -> a^p.
    Fq frobenius(Fq a) const {
        if (tables_) return frob_tab_[a];
        return pow(a, p_);
    }

    // Absolute trace down to the prime field, returned as an integer in [0, p).
    std::uint32_t trace(Fq a) const {
        Fq s = a, t = a;
        for (int i = 1; i < m_; ++i) {
            t = frobenius(t);
            s = add(s, t);
        }
        check_internal(s < p_, "FieldCtx::trace: trace left the prime field");
        return s;
    }

    // Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    // Odd characteristic only.
    int chi(Fq a) const {
        require_arg(p_ != 2, "FieldCtx::chi: quadratic character needs odd q");
        if (a == 0) return 0;
        if (tables_) return chi_tab_[a];
        return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
    }

    // In characteristic 2, the unique square root a^(q/2).
    Fq sqrt_char2(Fq a) const {
        require_arg(p_ == 2, "FieldCtx::sqrt_char2: needs characteristic 2");
        Fq r = a;
        for (int i = 1; i < m_; ++i) r = mul(r, r);
        return r;
    }

    // Digits (c_0, ..., c_{m-1}) of an element.
    std::vector<std::uint32_t> digits(Fq a) const {
        std::vector<std::uint32_t> d(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            d[static_cast<std::size_t>(i)] = a % p_;
            a /= static_cast<Fq>(p_);
        }
        return d;
    }

    std::string element_str(Fq a) const { return std::to_string(a); }

  private:
    FieldCtx(unsigned long p, int m) : p_(p), m_(m) {
        require_arg(is_prime(p), "FieldCtx: characteristic must be prime, got " +
                                     std::to_string(p));
        require_arg(m >= 1, "FieldCtx: extension degree must be >= 1");
        unsigned long q = 1;
        for (int i = 0; i < m; ++i) {
            q *= p;
            require_capacity(q <= kSizeMax, "FieldCtx: field size " +
                                                std::to_string(p) + "^" +
                                                std::to_string(m) +
                                                " exceeds supported capacity");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (m_ > 1) mod_ = least_irreducible();
        // Precompute the reduction row -c_i used by generic multiplication.
        red_.assign(mod_.size(), 0);
        for (std::size_t i = 0; i < mod_.size(); ++i)
            red_[i] = (p_ - mod_[i]) % p_;
        tables_ = (q_ <= kTableMax);
        if (tables_) build_tables();
    }

    // --- polynomial scratch arithmetic over F_p (used for setup only) ---

    // Multiply two F_p[x] polynomials given by coefficient vectors.
    static std::vector<std::uint32_t> fppoly_mul(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b,
                                                 unsigned long p) {
        if (a.empty() || b.empty()) return {};
        std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = static_cast<std::uint32_t>(
                    (c[i + j] + 1ULL * a[i] * b[j]) % p);
        return c;
    }

    // Remainder of a modulo monic b over F_p.
    static std::vector<std::uint32_t> fppoly_rem(std::vector<std::uint32_t> a,
                                                 const std::vector<std::uint32_t>& b,
                                                 unsigned long p) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        const std::size_t db = b.size() - 1;
        while (a.size() > db) {
            const std::uint32_t lead = a.back();
            const std::size_t shift = a.size() - 1 - db;
            if (lead != 0)
                for (std::size_t i = 0; i <= db; ++i) {
                    std::uint64_t sub = 1ULL * lead * b[i] % p;
                    std::uint64_t cur = a[shift + i];
                    a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
                }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.size() <= db) break;
        }
        return a;
    }

    // Lexicographically least monic irreducible of degree m over F_p,
    // scanning tails in increasing base-p value with c_{m-1} most significant.
    std::vector<std::uint32_t> least_irreducible() const {
        const unsigned long p = p_;
        const int m = m_;
        unsigned long count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        for (unsigned long v = 0; v < count; ++v) {
            std::vector<std::uint32_t> tail(static_cast<std::size_t>(m));
            unsigned long t = v;
            for (int i = 0; i < m; ++i) {
                tail[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            std::vector<std::uint32_t> f = tail;
            f.push_back(1);  // monic x^m + ...
            if (fppoly_irreducible(f, p)) return tail;
        }
        throw InternalCheck("FieldCtx: no irreducible modulus found");
    }

    // Trial division by every monic polynomial of degree 1..deg/2.
    static bool fppoly_irreducible(const std::vector<std::uint32_t>& f,
                                   unsigned long p) {
        const std::size_t deg = f.size() - 1;
        for (std::size_t d = 1; 2 * d <= deg; ++d) {
            unsigned long count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= p;
            for (unsigned long v = 0; v < count; ++v) {
                std::vector<std::uint32_t> g(d + 1);
                unsigned long t = v;
                for (std::size_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                g[d] = 1;
                if (fppoly_rem(f, g, p).empty()) return false;
            }
        }
        return true;
    }

    // --- generic (table-free) element arithmetic ---

    Fq add_generic(Fq a, Fq b) const {
        Fq r = 0, mult = 1;
        for (int i = 0; i < m_; ++i) {
            std::uint32_t da = a % p_, db = b % p_;
            r += ((da + db) % p_) * mult;
            a /= static_cast<Fq>(p_);
            b /= static_cast<Fq>(p_);
            mult *= static_cast<Fq>(p_);
        }
        return r;
    }

    Fq neg_generic(Fq a) const {
        Fq r = 0, mult = 1;
        for (int i = 0; i < m_; ++i) {
            std::uint32_t da = a % p_;
            r += ((p_ - da) % p_) * mult;
            a /= static_cast<Fq>(p_);
            mult *= static_cast<Fq>(p_);
        }
        return r;
    }

    Fq mul_generic(Fq a, Fq b) const {
        if (m_ == 1) return static_cast<Fq>(1ULL * a * b % p_);
        // Schoolbook product of digit vectors, then reduce by the modulus.
        std::vector<std::uint64_t> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
        std::vector<std::uint32_t> da(static_cast<std::size_t>(m_)),
            db(static_cast<std::size_t>(m_));
        Fq ta = a, tb = b;
        for (int i = 0; i < m_; ++i) {
            da[static_cast<std::size_t>(i)] = ta % p_;
            ta /= static_cast<Fq>(p_);
            db[static_cast<std::size_t>(i)] = tb % p_;
            tb /= static_cast<Fq>(p_);
        }
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j)
                prod[static_cast<std::size_t>(i + j)] +=
                    1ULL * da[static_cast<std::size_t>(i)] *
                    db[static_cast<std::size_t>(j)];
        for (int k = 2 * m_ - 2; k >= m_; --k) {
            std::uint64_t top = prod[static_cast<std::size_t>(k)] % p_;
            if (top)
                for (int i = 0; i < m_; ++i)
                    prod[static_cast<std::size_t>(k - m_ + i)] +=
                        top * red_[static_cast<std::size_t>(i)];
        }
        Fq r = 0, mult = 1;
        for (int i = 0; i < m_; ++i) {
            r += static_cast<Fq>(prod[static_cast<std::size_t>(i)] % p_) * mult;
            mult *= static_cast<Fq>(p_);
        }
        return r;
    }

    void build_tables() {
        const std::size_t q = q_;
        add_tab_.resize(q * q);
        mul_tab_.resize(q * q);
        neg_tab_.resize(q);
        inv_tab_.assign(q, 0);
        frob_tab_.resize(q);
        for (std::size_t a = 0; a < q; ++a) {
            neg_tab_[a] = neg_generic(static_cast<Fq>(a));
            for (std::size_t b = 0; b < q; ++b) {
                add_tab_[a * q + b] = add_generic(static_cast<Fq>(a),
                                                  static_cast<Fq>(b));
                mul_tab_[a * q + b] = static_cast<std::uint16_t>(
                    mul_generic(static_cast<Fq>(a), static_cast<Fq>(b)));
            }
        }
        for (std::size_t a = 1; a < q; ++a)
            for (std::size_t b = 1; b < q; ++b)
                if (mul_tab_[a * q + b] == 1) {
                    inv_tab_[a] = static_cast<Fq>(b);
                    break;
                }
        for (std::size_t a = 0; a < q; ++a) {
            Fq r = static_cast<Fq>(a);
            Fq acc = one();
            // a^p by repeated squaring over the table
            unsigned long e = p_;
            while (e) {
                if (e & 1UL) acc = mul_tab_[acc * q + r];
                r = mul_tab_[r * q + r];
                e >>= 1UL;
            }
            frob_tab_[a] = acc;
        }
        if (p_ != 2) {
            chi_tab_.assign(q, -1);
            chi_tab_[0] = 0;
            for (std::size_t a = 1; a < q; ++a)
                chi_tab_[mul_tab_[a * q + a]] = 1;
        }
    }

    unsigned long p_;
    int m_;
    std::uint32_t q_ = 0;
    bool tables_ = false;
    std::vector<std::uint32_t> mod_;  // c_0..c_{m-1} of the monic modulus
    std::vector<std::uint32_t> red_;  // -c_i mod p, the reduction row
    std::vector<std::uint16_t> add_tab_, mul_tab_;
    std::vector<Fq> neg_tab_, inv_tab_, frob_tab_;
    std::vector<signed char> chi_tab_;
};

// A field homomorphism F_{p^m} -> F_{p^{km}}, realized as a lookup table.
// The subfield generator is sent to the least root of the subfield modulus
// in the big field, which again makes the map canonical and reproducible.
class Embedding {
  public:
    Embedding(const FieldCtx& sub, const FieldCtx& sup) : sub_(&sub), sup_(&sup) {
        require_arg(sub.p() == sup.p(),
                    "Embedding: fields have different characteristic");
        require_arg(sup.m() % sub.m() == 0,
                    "Embedding: no embedding when [sub:F_p] does not divide [sup:F_p]");
        map_.resize(sub.q());
        if (sub.m() == 1) {
            // Prime subfield: constants have identical indices in both fields.
            for (Fq a = 0; a < sub.q(); ++a) map_[a] = a;
            return;
        }
        // Find the least root of the subfield modulus inside the big field.
        const auto& mod = sub.modulus();
        Fq root = 0;
        bool found = false;
        for (Fq e = 0; e < sup.q() && !found; ++e) {
            // Horner for x^m + c_{m-1} x^{m-1} + ... + c_0 at x = e.
            Fq acc = sup.one();
            for (int i = sub.m() - 1; i >= 0; --i) {
                acc = sup.mul(acc, e);
                acc = sup.add(acc, sup.from_int(static_cast<long long>(
                                  mod[static_cast<std::size_t>(i)])));
            }
            if (acc == 0) {
                root = e;
                found = true;
            }
        }
        check_internal(found, "Embedding: subfield modulus has no root upstairs");
        for (Fq a = 0; a < sub.q(); ++a) {
            auto d = sub.digits(a);
            Fq acc = 0;
            for (int i = sub.m() - 1; i >= 0; --i) {
                acc = sup.mul(acc, root);
                acc = sup.add(acc, sup.from_int(static_cast<long long>(
                                  d[static_cast<std::size_t>(i)])));
            }
            map_[a] = acc;
        }
        // Spot-check the homomorphism property across all pairs for small
        // fields; embeddings are built rarely, so this is cheap insurance.
        if (sub.q() <= 64) {
            for (Fq a = 0; a < sub.q(); ++a)
                for (Fq b = 0; b < sub.q(); ++b) {
                    check_internal(map_[sub.add(a, b)] ==
                                       sup.add(map_[a], map_[b]),
                                   "Embedding: additivity failed");
                    check_internal(map_[sub.mul(a, b)] ==
                                       sup.mul(map_[a], map_[b]),
                                   "Embedding: multiplicativity failed");
                }
        }
    }

    Fq operator()(Fq a) const { return map_[a]; }
    const FieldCtx& sub() const { return *sub_; }
    const FieldCtx& sup() const { return *sup_; }

  private:
    const FieldCtx* sub_;
    const FieldCtx* sup_;
    std::vector<Fq> map_;
};

}  // namespace curvecensus
