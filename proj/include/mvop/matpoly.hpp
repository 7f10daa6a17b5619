/*
   Copyright 2026 The mvop Authors

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

#ifndef MVOP_MATPOLY_HPP
#define MVOP_MATPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace mvop {

/// N x N matrix whose entries are polynomials. Equivalently a polynomial with
/// RatMatrix coefficients; see `coefficient` and `from_coefficients`.
class MatPoly {
   public:
    MatPoly() = default;
    explicit MatPoly(std::size_t n) : n_(n), e_(n * n) {}
    MatPoly(std::initializer_list<std::initializer_list<Poly>> rows) {
        n_ = rows.size();
        for (const auto& r : rows) {
            if (r.size() != n_) throw Error(ErrorCode::SizeMismatch, "MatPoly literal must be square");
            e_.insert(e_.end(), r.begin(), r.end());
        }
    }
    explicit MatPoly(const RatMatrix& constant) : MatPoly(constant.rows()) {
        if (!constant.is_square()) throw Error(ErrorCode::SizeMismatch, "MatPoly from non-square matrix");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = Poly(constant(i, j));
    }

    static MatPoly identity(std::size_t n) { return MatPoly(RatMatrix::identity(n)); }

    static MatPoly from_coefficients(const std::vector<RatMatrix>& coeffs) {
        if (coeffs.empty()) return {};
        const std::size_t n = coeffs.front().rows();
        MatPoly out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Rational> c(coeffs.size());
                for (std::size_t d = 0; d < coeffs.size(); ++d) c[d] = coeffs[d](i, j);
                out(i, j) = Poly(std::move(c));
            }
        return out;
    }

    std::size_t size() const { return n_; }
    Poly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    /// Max entry degree (Poly::zero_degree for the zero matrix).
    int degree() const {
        int d = Poly::zero_degree;
        for (const auto& p : e_) d = std::max(d, p.degree());
        return d;
    }
    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
    }

    /// Matrix coefficient of x^d.
    RatMatrix coefficient(std::size_t d) const {
        RatMatrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j)[d];
        return m;
    }
    std::vector<RatMatrix> coefficients() const {
        std::vector<RatMatrix> out;
        for (int d = 0; d <= degree(); ++d) out.push_back(coefficient(static_cast<std::size_t>(d)));
        return out;
    }
    RatMatrix leading_coefficient() const { return coefficient(static_cast<std::size_t>(std::max(degree(), 0))); }

    RatMatrix operator()(const Rational& x0) const {
        RatMatrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j)(x0);
        return m;
    }

    MatPoly& operator+=(const MatPoly& o) {
        check_same(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    MatPoly& operator-=(const MatPoly& o) {
        check_same(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    MatPoly& operator*=(const Poly& s) {
        for (auto& p : e_) p *= s;
        return *this;
    }
    MatPoly operator-() const {
        MatPoly out(*this);
        for (auto& p : out.e_) p = -p;
        return out;
    }

    friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
    friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
    friend MatPoly operator*(MatPoly a, const Poly& s) { return a *= s; }
    friend MatPoly operator*(const Poly& s, MatPoly a) { return a *= s; }
    friend MatPoly operator*(const MatPoly& a, const MatPoly& b) {
        a.check_same(b);
        MatPoly out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }
    friend MatPoly operator*(const RatMatrix& a, const MatPoly& b) { return MatPoly(a) * b; }
    friend MatPoly operator*(const MatPoly& a, const RatMatrix& b) { return a * MatPoly(b); }
    friend bool operator==(const MatPoly&, const MatPoly&) = default;

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            out += i ? ", [" : "[";
            for (std::size_t j = 0; j < n_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
            out += "]";
        }
        return out + "]";
    }

   private:
    void check_same(const MatPoly& o) const {
        if (n_ != o.n_) throw Error(ErrorCode::SizeMismatch, "MatPoly size mismatch");
    }

    std::size_t n_ = 0;
    std::vector<Poly> e_;
};

inline MatPoly derivative(const MatPoly& p, unsigned k = 1) {
    MatPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) out(i, j) = derivative(p(i, j), k);
    return out;
}

}  // namespace mvop

#endif  // MVOP_MATPOLY_HPP
