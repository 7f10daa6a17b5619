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

#ifndef MVOP_POLY_HPP
#define MVOP_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mvop {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; trailing
/// zeros are always stripped so the zero polynomial has no coefficients.
class Poly {
   public:
    static constexpr int zero_degree = -1;  // stands in for -infinity

    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(int c) : Poly(Rational(c)) {}
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    static Poly monomial(const Rational& c, unsigned power) {
        std::vector<Rational> v(power + 1);
        v[power] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const Rational> coeffs() const { return c_; }

    /// Coefficient of x^i, zero beyond the degree.
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x0) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    Poly operator-() const {
        Poly out(*this);
        for (auto& c : out.c_) c = -c;
        return out;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        strip();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        strip();
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Long division by a nonzero divisor; returns (quotient, remainder).
    friend std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
        if (d.is_zero()) throw Error(ErrorCode::DegenerateParameters, "polynomial division by zero");
        std::vector<Rational> rem(p.c_);
        const int dd = d.degree();
        if (p.degree() < dd) return {Poly(), p};
        std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dd + 1));
        const Rational lead = d.leading();
        for (int k = p.degree() - dd; k >= 0; --k) {
            const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
            quot[static_cast<std::size_t>(k)] = q;
            if (q.is_zero()) continue;
            for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * d.c_[static_cast<std::size_t>(j)];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            std::string term = abs(c).to_string();
            if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) out += "-";
            if (i > 0) {
                if (abs(c) == Rational(1)) term.clear();
                else term += "*";
                term += i == 1 ? "x" : "x^" + std::to_string(i);
            }
            out += term;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

   private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// k-th derivative.
inline Poly derivative(const Poly& p, unsigned k = 1) {
    if (p.degree() < static_cast<int>(k)) return {};
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 1 - k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i + k] * falling(Rational(static_cast<unsigned long>(i + k)), k);
    return Poly(std::move(out));
}

/// q(x) = p(s x + c), by Horner's scheme.
inline Poly affine_subst(const Poly& p, const Rational& s, const Rational& c) {
    const Poly inner({c, s});
    Poly acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * inner + Poly(p[static_cast<std::size_t>(i)]);
    return acc;
}

/// Quotient of an exact division; a nonzero remainder is an error, never truncated.
inline Poly exact_div(const Poly& p, const Poly& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) {
        throw Error(ErrorCode::NotDivisible, "(" + p.to_string() + ") is not divisible by (" + d.to_string() +
                                                 "), remainder " + r.to_string());
    }
    return q;
}

/// Coefficients of p expanded in powers of (x - a), via repeated synthetic division.
inline std::vector<Rational> taylor_coefficients(const Poly& p, const Rational& a) {
    std::vector<Rational> work(p.coeffs().begin(), p.coeffs().end());
    const std::size_t n = work.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = n - 1; i > k; --i) work[i - 1] += a * work[i];
    }
    return work;
}

}  // namespace mvop

#endif  // MVOP_POLY_HPP
