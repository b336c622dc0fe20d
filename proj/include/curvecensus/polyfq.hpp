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

// Dense univariate polynomials over a small finite field.
//
// Coefficient vectors are kept normalized (no trailing zeros); the zero
// polynomial is the empty vector and has degree -1.  These polynomials do
// setup and verification work (squarefreeness tests, Cartier matrices,
// Artin-Schreier traces); the census inner loops use raw arrays instead.

#include <initializer_list>
#include <string>
#include <vector>

#include "curvecensus/errors.hpp"
#include "curvecensus/field.hpp"

namespace curvecensus {

class PolyFq {
  public:
    PolyFq() : F_(nullptr) {}
    explicit PolyFq(const FieldCtx& F) : F_(&F) {}
    PolyFq(const FieldCtx& F, std::vector<Fq> coeffs) : F_(&F), c_(std::move(coeffs)) {
        normalize();
    }
    PolyFq(const FieldCtx& F, std::initializer_list<Fq> coeffs)
        : F_(&F), c_(coeffs) {
        normalize();
    }

    static PolyFq monomial(const FieldCtx& F, int degree, Fq coeff) {
        require_arg(degree >= 0, "PolyFq::monomial: negative degree");
        std::vector<Fq> c(static_cast<std::size_t>(degree) + 1, 0);
        c.back() = coeff;
        return PolyFq(F, std::move(c));
    }

    const FieldCtx& field() const {
        check_internal(F_ != nullptr, "PolyFq: empty context");
        return *F_;
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Fq>& coeffs() const { return c_; }

    Fq coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }

    Fq lead() const { return c_.empty() ? 0 : c_.back(); }

    PolyFq operator+(const PolyFq& o) const {
        const FieldCtx& F = field();
        std::vector<Fq> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = F.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
        return PolyFq(F, std::move(r));
    }

    PolyFq operator-(const PolyFq& o) const {
        const FieldCtx& F = field();
        std::vector<Fq> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = F.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
        return PolyFq(F, std::move(r));
    }

    PolyFq operator*(const PolyFq& o) const {
        const FieldCtx& F = field();
        if (is_zero() || o.is_zero()) return PolyFq(F);
        std::vector<Fq> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
        }
        return PolyFq(F, std::move(r));
    }

    PolyFq scaled(Fq s) const {
        const FieldCtx& F = field();
        std::vector<Fq> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F.mul(c_[i], s);
        return PolyFq(F, std::move(r));
    }

    bool operator==(const PolyFq& o) const { return c_ == o.c_; }
    bool operator!=(const PolyFq& o) const { return c_ != o.c_; }

    // Quotient and remainder by a nonzero divisor.
    std::pair<PolyFq, PolyFq> divrem(const PolyFq& d) const {
        const FieldCtx& F = field();
        require_arg(!d.is_zero(), "PolyFq::divrem: division by zero polynomial");
        std::vector<Fq> rem = c_;
        const int dd = d.deg();
        const Fq linv = F.inv(d.lead());
        std::vector<Fq> quo;
        if (deg() >= dd) quo.assign(static_cast<std::size_t>(deg() - dd) + 1, 0);
        for (int k = deg(); k >= dd; --k) {
            const Fq top = rem[static_cast<std::size_t>(k)];
            if (top == 0) continue;
            const Fq f = F.mul(top, linv);
            quo[static_cast<std::size_t>(k - dd)] = f;
            for (int i = 0; i <= dd; ++i) {
                auto& slot = rem[static_cast<std::size_t>(k - dd + i)];
                slot = F.sub(slot, F.mul(f, d.coeff(i)));
            }
        }
        return {PolyFq(F, std::move(quo)), PolyFq(F, std::move(rem))};
    }

    PolyFq operator%(const PolyFq& d) const { return divrem(d).second; }
    PolyFq operator/(const PolyFq& d) const { return divrem(d).first; }

    PolyFq derivative() const {
        const FieldCtx& F = field();
        if (c_.size() <= 1) return PolyFq(F);
        std::vector<Fq> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = F.mul(c_[i], F.from_int(static_cast<long long>(i)));
        return PolyFq(F, std::move(r));
    }

    Fq eval(Fq x) const {
        const FieldCtx& F = field();
        Fq acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c_[i]);
        return acc;
    }

    PolyFq monic() const {
        require_arg(!is_zero(), "PolyFq::monic: zero polynomial");
        return scaled(field().inv(lead()));
    }

    // Plain power by repeated multiplication (exponents here are tiny).
    PolyFq pow(unsigned e) const {
        const FieldCtx& F = field();
        PolyFq r(F, {F.one()});
        PolyFq b = *this;
        while (e) {
            if (e & 1U) r = r * b;
            b = b * b;
            e >>= 1U;
        }
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
            if (i > 0) {
                if (c_[i] != 1) s += "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const FieldCtx* F_;
    std::vector<Fq> c_;
};

// Monic greatest common divisor.
inline PolyFq poly_gcd(PolyFq a, PolyFq b) {
    const FieldCtx& F = a.is_zero() ? b.field() : a.field();
    while (!b.is_zero()) {
        PolyFq r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return PolyFq(F);
    return a.monic();
}

// True when the polynomial has no repeated roots over the algebraic closure
// AND no factor appearing with multiplicity; in characteristic p the
// derivative can vanish identically (p-th powers), which is never squarefree
// here because deg >= 1.
inline bool poly_squarefree(const PolyFq& f) {
    if (f.deg() <= 0) return !f.is_zero();
    PolyFq d = f.derivative();
    if (d.is_zero()) return false;  // f is a p-th power of something
    return poly_gcd(f, d).deg() == 0;
}

}  // namespace curvecensus
