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

// Exhaustive census of elliptic curves (pointed genus-1 curves) over a small
// finite field, up to F_q-isomorphism, with automorphism groups.
//
// Models are Weierstrass equations y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x
// + a6.  Two models are isomorphic exactly when a substitution
//   x = u^2 x' + r,   y = u^3 y' + s u^2 x' + t     (u != 0)
// carries one to the other, so isomorphism classes are orbits of the
// substitution group of order q^3 (q-1), and the automorphism group of a
// curve is the stabilizer of its model.  In characteristic >= 5 every curve
// has a short model y^2 = x^3 + Ax + B and the substitutions fixing the
// shape reduce to (A, B) -> (u^4 A, u^6 B); this cuts the orbit scan from
// q^5 models to q^2.  In characteristic 2 and 3 the full five-coefficient
// orbit scan is used.
//
// Each class records its canonical model (least model index in the orbit),
// the point count N_1 = #E(F_q) (found by brute enumeration of affine
// points plus the point at infinity), the Frobenius trace t = q + 1 - N_1,
// #Aut, and the j-invariant.  The key identity driving everything
// downstream is that the classes weighted by 1/#Aut sum to exactly q, and
// to exactly 1 within each j-invariant bucket.

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "curvecensus/algebra.hpp"
#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"
#include "curvecensus/field.hpp"

namespace curvecensus {

// A Weierstrass model (a1, a2, a3, a4, a6).
using WModel = std::array<Fq, 5>;

struct EllipticClass {
    WModel model;  // canonical (least-index) representative
    BigInt n1;     // #E(F_q)
    BigInt tr;     // Frobenius trace q + 1 - N_1
    long aut = 0;  // #Aut_{F_q}(E, O)
    Fq j = 0;      // j-invariant

    BigRat mass() const { return BigRat(1, aut); }
};

namespace detail_g1 {

// b-invariants, discriminant and j; written with integer constants mapped
// into the field so the same formulas serve every characteristic.
struct WInvariants {
    Fq b2, b4, b6, b8, delta, c4, j;
    bool smooth;
};

inline WInvariants winvariants(const FieldCtx& F, const WModel& w) {
    const Fq a1 = w[0], a2 = w[1], a3 = w[2], a4 = w[3], a6 = w[4];
    const auto C = [&](long long v) { return F.from_int(v); };
    const Fq b2 = F.add(F.mul(a1, a1), F.mul(C(4), a2));
    const Fq b4 = F.add(F.mul(C(2), a4), F.mul(a1, a3));
    const Fq b6 = F.add(F.mul(a3, a3), F.mul(C(4), a6));
    const Fq b8 = F.sub(
        F.add(F.add(F.mul(F.mul(a1, a1), a6), F.mul(C(4), F.mul(a2, a6))),
              F.mul(a2, F.mul(a3, a3))),
        F.add(F.mul(a1, F.mul(a3, a4)), F.mul(a4, a4)));
    const Fq delta =
        F.sub(F.add(F.mul(C(9), F.mul(b2, F.mul(b4, b6))),
                    F.neg(F.mul(F.mul(b2, b2), b8))),
              F.add(F.mul(C(8), F.mul(b4, F.mul(b4, b4))),
                    F.mul(C(27), F.mul(b6, b6))));
    const Fq c4 = F.sub(F.mul(b2, b2), F.mul(C(24), b4));
    WInvariants inv{b2, b4, b6, b8, delta, c4, 0, delta != 0};
    if (inv.smooth) inv.j = F.div(F.mul(c4, F.mul(c4, c4)), delta);
    return inv;
}

// Number of points on the model, counting the point at infinity.
inline BigInt wmodel_points(const FieldCtx& F, const WModel& w) {
    const Fq a1 = w[0], a2 = w[1], a3 = w[2], a4 = w[3], a6 = w[4];
    long count = 1;  // infinity
    for (Fq x = 0; x < F.q(); ++x) {
        const Fq x2 = F.mul(x, x);
        const Fq rhs = F.add(F.add(F.mul(x2, x), F.mul(a2, x2)),
                             F.add(F.mul(a4, x), a6));
        const Fq lin = F.add(F.mul(a1, x), a3);
        for (Fq y = 0; y < F.q(); ++y) {
            const Fq lhs = F.add(F.mul(y, y), F.mul(lin, y));
            if (lhs == rhs) ++count;
        }
    }
    return count;
}

// The coordinate change (u, r, s, t) applied to a model.
inline WModel apply_substitution(const FieldCtx& F, const WModel& w, Fq u, Fq r,
                                 Fq s, Fq t) {
    const Fq a1 = w[0], a2 = w[1], a3 = w[2], a4 = w[3], a6 = w[4];
    const auto C = [&](long long v) { return F.from_int(v); };
    const Fq ui = F.inv(u);
    const Fq ui2 = F.mul(ui, ui), ui3 = F.mul(ui2, ui);
    const Fq ui4 = F.mul(ui2, ui2), ui6 = F.mul(ui3, ui3);
    const Fq na1 = F.mul(F.add(a1, F.mul(C(2), s)), ui);
    const Fq na2 = F.mul(F.sub(F.add(a2, F.mul(C(3), r)),
                               F.add(F.mul(s, a1), F.mul(s, s))),
                         ui2);
    const Fq na3 = F.mul(F.add(a3, F.add(F.mul(r, a1), F.mul(C(2), t))), ui3);
    const Fq na4 =
        F.mul(F.sub(F.add(a4, F.add(F.mul(C(2), F.mul(r, a2)),
                                    F.mul(C(3), F.mul(r, r)))),
                    F.add(F.mul(s, a3),
                          F.add(F.mul(F.add(t, F.mul(r, s)), a1),
                                F.mul(C(2), F.mul(s, t))))),
              ui4);
    const Fq na6 =
        F.mul(F.sub(F.add(a6, F.add(F.mul(r, a4),
                                    F.add(F.mul(F.mul(r, r), a2),
                                          F.mul(r, F.mul(r, r))))),
                    F.add(F.mul(t, a3),
                          F.add(F.mul(t, t), F.mul(r, F.mul(t, a1))))),
              ui6);
    return WModel{na1, na2, na3, na4, na6};
}

inline std::uint64_t model_index(const FieldCtx& F, const WModel& w) {
    std::uint64_t idx = 0;
    for (Fq c : w) idx = idx * F.q() + c;
    return idx;
}

}  // namespace detail_g1

struct EllipticCensus {
    const FieldCtx* field = nullptr;
    std::vector<EllipticClass> classes;  // ordered by canonical model index

    const FieldCtx& F() const { return *field; }
    BigInt q() const { return BigInt(static_cast<unsigned long>(field->q())); }

    // Sum of 1/#Aut over all classes; equals q (the stacky point count of
    // the moduli space of pointed genus-1 curves).
    BigRat total_mass() const {
        BigRat s(0);
        for (const auto& c : classes) s += c.mass();
        return s;
    }

    std::map<BigInt, BigRat> mass_by_trace() const {
        std::map<BigInt, BigRat> m;
        for (const auto& c : classes) m[c.tr] += c.mass();
        return m;
    }

    std::map<Fq, BigRat> mass_by_j() const {
        std::map<Fq, BigRat> m;
        for (const auto& c : classes) m[c.j] += c.mass();
        return m;
    }

    // sigma_k = - sum over classes of mass * h_k(trace, q); an integer for
    // every k, zero for odd k, and -q for k = 0.
    BigInt sigma(unsigned k) const {
        BigRat acc(0);
        const BigInt qq = q();
        for (const auto& c : classes)
            acc += BigRat(sl2_power_trace(k, c.tr, qq)) * c.mass();
        BigRat s = -acc;
        check_internal(is_integer(s), "EllipticCensus::sigma: non-integer value");
        return rat_to_int(s);
    }

    // N_e = #E(F_{q^e}) derived from the trace by the Weil power sums.
    BigInt points_ext(const EllipticClass& c, unsigned e) const {
        return bi_pow(q(), e) + 1 - weil_power_sum(e, c.tr, q());
    }

    // Points of exact degree e on a class.
    BigInt exact_degree_points(const EllipticClass& c, unsigned e) const {
        std::vector<BigInt> N;
        for (unsigned i = 1; i <= e; ++i) N.push_back(points_ext(c, i));
        return exact_degree_count(e, N);
    }
};

// Build (or fetch from the per-process cache) the census over F_q.
inline const EllipticCensus& census_g1(const FieldCtx& F) {
    static std::map<std::pair<unsigned long, int>, std::unique_ptr<EllipticCensus>>
        cache;
    const auto key = std::make_pair(F.p(), F.m());
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    using namespace detail_g1;
    auto out = std::make_unique<EllipticCensus>();
    out->field = &F;
    const std::uint64_t q = F.q();

    if (F.p() >= 5) {
        require_capacity(q <= 361,
                         "census_g1: supported only for q <= 361 in odd "
                         "characteristic >= 5");
        // Short models y^2 = x^3 + Ax + B; orbits of (A,B) ~ (u^4 A, u^6 B).
        std::vector<char> visited(q * q, 0);
        for (Fq A = 0; A < q; ++A) {
            for (Fq B = 0; B < q; ++B) {
                if (visited[A * q + B]) continue;
                // Discriminant condition 4A^3 + 27B^2 != 0.
                const Fq disc = F.add(
                    F.mul(F.from_int(4), F.mul(A, F.mul(A, A))),
                    F.mul(F.from_int(27), F.mul(B, B)));
                if (disc == 0) {
                    visited[A * q + B] = 1;
                    continue;
                }
                // Walk the orbit and find the stabilizer order.
                long orbit = 0, aut = 0;
                Fq cA = A, cB = B;
                for (Fq u = 1; u < q; ++u) {
                    const Fq u2 = F.mul(u, u);
                    const Fq u4 = F.mul(u2, u2);
                    const Fq u6 = F.mul(u4, u2);
                    const Fq nA = F.mul(u4, A), nB = F.mul(u6, B);
                    if (!visited[nA * q + nB]) {
                        visited[nA * q + nB] = 1;
                        ++orbit;
                    }
                    if (nA == A && nB == B) ++aut;
                    if (nA < cA || (nA == cA && nB < cB)) {
                        cA = nA;
                        cB = nB;
                    }
                }
                check_internal(static_cast<long>(q - 1) == orbit * aut,
                               "census_g1: orbit-stabilizer mismatch");
                EllipticClass cls;
                cls.model = WModel{0, 0, 0, cA, cB};
                cls.aut = aut;
                auto inv = winvariants(F, cls.model);
                check_internal(inv.smooth, "census_g1: canonical model singular");
                cls.j = inv.j;
                cls.n1 = wmodel_points(F, cls.model);
                cls.tr = BigInt(static_cast<unsigned long>(q)) + 1 - cls.n1;
                out->classes.push_back(cls);
            }
        }
    } else {
        require_capacity(q <= 32,
                         "census_g1: supported only for q <= 32 in "
                         "characteristic 2 and 3");
        // Full five-coefficient orbit scan.
        const std::uint64_t models = q * q * q * q * q;
        std::vector<char> visited(models, 0);
        std::vector<WModel> stack;
        for (std::uint64_t start = 0; start < models; ++start) {
            if (visited[start]) continue;
            WModel w;
            {
                std::uint64_t t = start;
                for (int i = 4; i >= 0; --i) {
                    w[static_cast<std::size_t>(i)] = static_cast<Fq>(t % q);
                    t /= q;
                }
            }
            if (!winvariants(F, w).smooth) {
                visited[start] = 1;
                continue;
            }
            std::uint64_t canon = start;
            long orbit = 0, aut = 0;
            for (Fq u = 1; u < q; ++u)
                for (Fq r = 0; r < q; ++r)
                    for (Fq s = 0; s < q; ++s)
                        for (Fq t = 0; t < q; ++t) {
                            const WModel nw = apply_substitution(F, w, u, r, s, t);
                            const std::uint64_t idx = model_index(F, nw);
                            if (!visited[idx]) {
                                visited[idx] = 1;
                                ++orbit;
                            }
                            if (idx == start) ++aut;
                            if (idx < canon) canon = idx;
                        }
            const long group = static_cast<long>(q * q * q * (q - 1));
            check_internal(group == orbit * aut,
                           "census_g1: orbit-stabilizer mismatch");
            WModel cw;
            {
                std::uint64_t t = canon;
                for (int i = 4; i >= 0; --i) {
                    cw[static_cast<std::size_t>(i)] = static_cast<Fq>(t % q);
                    t /= q;
                }
            }
            EllipticClass cls;
            cls.model = cw;
            cls.aut = aut;
            auto inv = winvariants(F, cw);
            check_internal(inv.smooth, "census_g1: canonical model singular");
            cls.j = inv.j;
            cls.n1 = wmodel_points(F, cw);
            cls.tr = BigInt(static_cast<unsigned long>(q)) + 1 - cls.n1;
            out->classes.push_back(cls);
        }
    }

    std::sort(out->classes.begin(), out->classes.end(),
              [&](const EllipticClass& a, const EllipticClass& b) {
                  return model_index(F, a.model) < model_index(F, b.model);
              });
    // The masses must sum to exactly q; fail loudly right here if not.
    check_internal(out->total_mass() == BigRat(static_cast<unsigned long>(q)),
                   "census_g1: total mass != q");
    const EllipticCensus& ref = *out;
    cache.emplace(key, std::move(out));
    return ref;
}

// sigma_k over F_q, the automorphism-weighted power-trace sums that encode
// the cohomology of the moduli of pointed genus-1 curves.
inline BigInt sigma_k(const FieldCtx& F, unsigned k) {
    return census_g1(F).sigma(k);
}

}  // namespace curvecensus
