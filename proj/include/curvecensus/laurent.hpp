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

// Finite Laurent polynomials over the rationals: sum c_e t^e over a finite
// exponent range, negative exponents allowed.  The genus-1 residue route
// multiplies a handful of these and extracts the coefficient of t^(-1), so
// exact finite support is all that is needed -- no truncation ever happens
// unless a window is requested explicitly.

#include <string>
#include <vector>

#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"

namespace curvecensus {

class LaurentSeries {
  public:
    LaurentSeries() = default;

    static LaurentSeries monomial(const BigRat& coeff, int exponent) {
        LaurentSeries s;
        if (coeff != 0) {
            s.lo_ = exponent;
            s.c_ = {coeff};
        }
        return s;
    }

    static LaurentSeries constant(const BigRat& v) { return monomial(v, 0); }

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }                                  // least exponent
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }  // greatest

    BigRat coeff(int e) const {
        if (c_.empty() || e < lo_ || e > hi()) return BigRat(0);
        return c_[static_cast<std::size_t>(e - lo_)];
    }

    // Coefficient of t^(-1).
    BigRat residue() const { return coeff(-1); }

    LaurentSeries operator+(const LaurentSeries& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const int nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
        LaurentSeries r;
        r.lo_ = nlo;
        r.c_.assign(static_cast<std::size_t>(nhi - nlo + 1), BigRat(0));
        for (int e = nlo; e <= nhi; ++e)
            r.c_[static_cast<std::size_t>(e - nlo)] = coeff(e) + o.coeff(e);
        r.normalize();
        return r;
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

    LaurentSeries operator*(const LaurentSeries& o) const {
        LaurentSeries r;
        if (is_zero() || o.is_zero()) return r;
        r.lo_ = lo_ + o.lo_;
        r.c_.assign(c_.size() + o.c_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.normalize();
        return r;
    }

    LaurentSeries scaled(const BigRat& s) const {
        if (s == 0) return LaurentSeries();
        LaurentSeries r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    LaurentSeries pow(unsigned e) const {
        LaurentSeries r = constant(BigRat(1));
        LaurentSeries b = *this;
        while (e) {
            if (e & 1U) r = r * b;
            b = b * b;
            e >>= 1U;
        }
        return r;
    }

    // Restriction to the exponent window [wlo, whi]; coefficients outside are
    // dropped.  Provided for callers that deliberately work with truncations.
    LaurentSeries window(int wlo, int whi) const {
        require_arg(wlo <= whi, "LaurentSeries::window: empty window");
        LaurentSeries r;
        for (int e = std::max(wlo, lo_); e <= std::min(whi, hi()); ++e) {
            BigRat v = coeff(e);
            if (v == 0) continue;
            if (r.c_.empty()) r.lo_ = e;
            r.c_.resize(static_cast<std::size_t>(e - r.lo_) + 1, BigRat(0));
            r.c_.back() = v;
        }
        return r;
    }

    bool operator==(const LaurentSeries& o) const {
        return lo_ == o.lo_ && c_ == o.c_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int e = hi(); e >= lo_; --e) {
            const BigRat v = coeff(e);
            if (v == 0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + rat_str(v) + ")";
            if (e != 0) s += "*t^" + std::to_string(e);
        }
        return s;
    }

  private:
    void normalize() {
        std::size_t front = 0;
        while (front < c_.size() && c_[front] == 0) ++front;
        if (front == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        std::size_t back = c_.size();
        while (back > front && c_[back - 1] == 0) --back;
        if (front > 0 || back < c_.size()) {
            c_ = std::vector<BigRat>(c_.begin() + static_cast<long>(front),
                                     c_.begin() + static_cast<long>(back));
            lo_ += static_cast<int>(front);
        }
    }

    int lo_ = 0;
    std::vector<BigRat> c_;
};

}  // namespace curvecensus
