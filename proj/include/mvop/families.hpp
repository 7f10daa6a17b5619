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

#ifndef MVOP_FAMILIES_HPP
#define MVOP_FAMILIES_HPP

#include <algorithm>
#include <cctype>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace mvop {

enum class FamilyKind { Laguerre, JacobiMonic, KrallLaguerre, KrallJacobi };

inline std::string_view family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Laguerre: return "laguerre";
        case FamilyKind::JacobiMonic: return "jacobi";
        case FamilyKind::KrallLaguerre: return "krall-laguerre";
        case FamilyKind::KrallJacobi: return "krall-jacobi";
    }
    return "?";
}

/// A scalar polynomial family with concrete rational parameters. `beta` is used by the
/// Jacobi kinds and `r` by the Krall kinds. `x_perturbation` is added to every x_n of
/// a Krall family; it exists only to build negative controls.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Laguerre;
    Rational alpha{0};
    Rational beta{0};
    Rational r{0};
    Rational x_perturbation{0};

    static FamilySpec laguerre(Rational alpha) { return {FamilyKind::Laguerre, alpha}; }
    static FamilySpec jacobi(Rational alpha, Rational beta) { return {FamilyKind::JacobiMonic, alpha, beta}; }
    static FamilySpec krall_laguerre(Rational alpha, Rational r) { return {FamilyKind::KrallLaguerre, alpha, 0, r}; }
    static FamilySpec krall_jacobi(Rational alpha, Rational beta, Rational r) {
        return {FamilyKind::KrallJacobi, alpha, beta, r};
    }

    bool uses_beta() const { return kind == FamilyKind::JacobiMonic || kind == FamilyKind::KrallJacobi; }
    bool uses_r() const { return kind == FamilyKind::KrallLaguerre || kind == FamilyKind::KrallJacobi; }

    void validate() const {
        if (alpha <= Rational(-1)) throw Error(ErrorCode::DegenerateParameters, "alpha must exceed -1");
        if (uses_beta() && beta <= Rational(-1)) throw Error(ErrorCode::DegenerateParameters, "beta must exceed -1");
    }

    /// Canonical text form, e.g. "krall-laguerre:alpha=1/3,R=5".
    std::string to_string() const {
        std::string out = std::string(family_kind_name(kind)) + ":alpha=" + alpha.to_string();
        if (uses_beta()) out += ",beta=" + beta.to_string();
        if (uses_r()) out += ",R=" + r.to_string();
        return out;
    }

    static FamilySpec parse(std::string_view text) {
        const auto colon = text.find(':');
        const std::string kind_name(text.substr(0, colon));
        FamilySpec spec;
        if (kind_name == "laguerre") spec.kind = FamilyKind::Laguerre;
        else if (kind_name == "jacobi") spec.kind = FamilyKind::JacobiMonic;
        else if (kind_name == "krall-laguerre") spec.kind = FamilyKind::KrallLaguerre;
        else if (kind_name == "krall-jacobi") spec.kind = FamilyKind::KrallJacobi;
        else throw Error(ErrorCode::ParseError, "unknown family kind '" + kind_name + "'");
        if (colon == std::string_view::npos) return spec;
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = rest.substr(0, comma);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected key=value in family spec");
            std::string key(item.substr(0, eq));
            std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
            const Rational value = Rational::parse(item.substr(eq + 1));
            if (key == "alpha") spec.alpha = value;
            else if (key == "beta") spec.beta = value;
            else if (key == "r") spec.r = value;
            else throw Error(ErrorCode::ParseError, "unknown family parameter '" + key + "'");
            rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
        }
        return spec;
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Closed-form recurrence data of a family. Which accessors are meaningful depends on
/// the kind: x, y, x_bar, y_bar for the Krall kinds; a, b for the Jacobi kinds
/// (the Krall-Jacobi family is built on monic Jacobi); theta for Krall-Jacobi.
class FamilyCoeffs {
   public:
    explicit FamilyCoeffs(FamilySpec spec) : s_(std::move(spec)) {}

    const FamilySpec& spec() const { return s_; }

    Rational x(unsigned n) const {
        const Rational nn(n), al = s_.alpha, R = s_.r;
        if (s_.kind == FamilyKind::KrallLaguerre) {
            return al + ratio(2 * nn * nn + 2 * (R - 1) * nn - R, nn - 1 + R, "x_n") + s_.x_perturbation;
        }
        require_kind(FamilyKind::KrallJacobi, "x_n");
        if (n == 0) throw Error(ErrorCode::DegenerateParameters, "x_0 is not defined for Krall-Jacobi");
        const Rational ab = al + s_.beta, be = s_.beta;
        const Rational first =
            ratio(2 * (ab + nn) * (al * be + be * be + 2 * nn * al + 2 * (nn - 1) * be + 2 * nn * (nn - 1)),
                  (ab + nn - 1) * (ab + 2 * nn - 2) * (ab + 2 * nn), "x_n");
        const Rational second = ratio(2 * (al + nn - 1) * R, (ab + nn - 1) * (ab + 2 * nn - 2) * theta(n - 1), "x_n");
        return first - second + s_.x_perturbation;
    }

    Rational y(unsigned n) const {
        const Rational nn(n), al = s_.alpha, R = s_.r;
        if (s_.kind == FamilyKind::KrallLaguerre) return ratio(nn * (nn + al) * (nn + 1 + R), nn + R, "y_n");
        require_kind(FamilyKind::KrallJacobi, "y_n");
        if (n == 0) return 0;
        return a(n) * ratio(theta(n + 1), theta(n), "y_n");
    }

    Rational x_bar(unsigned n) const {
        const Rational nn(n), al = s_.alpha, R = s_.r;
        if (s_.kind == FamilyKind::KrallLaguerre) return al + ratio(2 * nn * nn + 2 * (R - 1) * nn - R, nn + R, "x_bar_n");
        require_kind(FamilyKind::KrallJacobi, "x_bar_n");
        const Rational ab = al + s_.beta, be = s_.beta;
        const Rational first =
            ratio(2 * (ab + nn - 1) * (al * be + be * be + 2 * (nn - 1) * al + 2 * nn * be + 2 * nn * (nn - 1)),
                  (ab + nn) * (ab + 2 * nn - 2) * (ab + 2 * nn), "x_bar_n");
        const Rational second = ratio(2 * (al + nn) * R, (ab + nn) * (ab + 2 * nn) * theta(n), "x_bar_n");
        return first + second;
    }

    /// For Krall-Jacobi this is the corrected expression
    /// x_{n+1}(x_{n+2} - b_{n+1} - b_{n+2} - 2) - y_{n+1} + a_n + a_{n+1} + (b_{n+1} + 1)^2.
    Rational y_bar(unsigned n) const {
        const Rational nn(n), al = s_.alpha, R = s_.r;
        if (s_.kind == FamilyKind::KrallLaguerre) return ratio(nn * (nn + al) * (nn - 1 + R), nn + R, "y_bar_n");
        require_kind(FamilyKind::KrallJacobi, "y_bar_n");
        const Rational b1 = b(n + 1);
        return x(n + 1) * (x(n + 2) - b1 - b(n + 2) - 2) - y(n + 1) + a(n) + a(n + 1) + (b1 + 1) * (b1 + 1);
    }

    /// Monic Jacobi: x p_n = a_n p_{n-1} + b_{n+1} p_n + p_{n+1}.
    Rational a(unsigned n) const {
        require_jacobi("a_n");
        if (n == 0) return 0;
        const Rational nn(n), al = s_.alpha, be = s_.beta, ab = al + be;
        const Rational s = 2 * nn + ab;
        return ratio(4 * nn * (nn + ab) * (nn + al) * (nn + be), (s - 1) * s * s * (s + 1), "a_n");
    }
    Rational b(unsigned n) const {
        require_jacobi("b_n");
        const Rational nn(n), al = s_.alpha, be = s_.beta, ab = al + be;
        const Rational num = be * be - al * al;
        if (num.is_zero()) return 0;  // alpha == beta: symmetric family
        return ratio(num, (2 * nn + ab - 2) * (2 * nn + ab), "b_n");
    }

    Rational theta(unsigned n) const {
        require_kind(FamilyKind::KrallJacobi, "theta_n");
        const Rational nn(n);
        return nn * nn + (s_.alpha + s_.beta) * nn + s_.r;
    }

   private:

    static Rational ratio(const Rational& num, const Rational& den, const char* what) {
        if (den.is_zero()) throw Error(ErrorCode::DegenerateParameters, std::string("zero denominator in ") + what);
        return num / den;
    }
    void require_kind(FamilyKind k, const char* what) const {
        if (s_.kind != k) throw Error(ErrorCode::DegenerateParameters, std::string(what) + " undefined for this family");
    }
    void require_jacobi(const char* what) const {
        if (!s_.uses_beta()) throw Error(ErrorCode::DegenerateParameters, std::string(what) + " undefined for this family");
    }

    FamilySpec s_;
};

/// Monic Laguerre: L_n = (x - (2n - 1 + alpha)) L_{n-1} - (n - 1)(n - 1 + alpha) L_{n-2}.
inline std::vector<Poly> laguerre_sequence(const Rational& alpha, unsigned count) {
    std::vector<Poly> out;
    if (count == 0) return out;
    out.push_back(Poly(1));
    for (unsigned n = 1; n < count; ++n) {
        const Rational nn(n);
        Poly next = Poly({-(2 * nn - 1 + alpha), Rational(1)}) * out[n - 1];
        if (n >= 2) next -= out[n - 2] * ((nn - 1) * (nn - 1 + alpha));
        out.push_back(std::move(next));
    }
    return out;
}

inline std::vector<Poly> jacobi_monic_sequence(const Rational& alpha, const Rational& beta, unsigned count) {
    const FamilyCoeffs c(FamilySpec::jacobi(alpha, beta));
    std::vector<Poly> out;
    if (count == 0) return out;
    out.push_back(Poly(1));
    for (unsigned n = 0; n + 1 < count; ++n) {
        Poly next = Poly({-c.b(n + 1), Rational(1)}) * out[n];
        if (n >= 1) next -= out[n - 1] * c.a(n);
        out.push_back(std::move(next));
    }
    return out;
}

/// Extended Krall-Laguerre: p_n = (q_{n+1} + x_{n+1} q_n + y_n q_{n-1}) / x, q = Laguerre.
inline std::vector<Poly> krall_laguerre_sequence(const FamilySpec& spec, unsigned count) {
    const FamilyCoeffs c(spec);
    const auto q = laguerre_sequence(spec.alpha, count + 1);
    std::vector<Poly> out;
    for (unsigned n = 0; n < count; ++n) {
        Poly num = q[n + 1] + q[n] * c.x(n + 1);
        if (n >= 1) num += q[n - 1] * c.y(n);
        out.push_back(exact_div(num, Poly::x()));
    }
    return out;
}

/// Extended Krall-Jacobi: q_n = (y_n p_{n-1} + x_{n+1} p_n + p_{n+1}) / (x + 1), p = monic Jacobi.
inline std::vector<Poly> krall_jacobi_sequence(const FamilySpec& spec, unsigned count) {
    const FamilyCoeffs c(spec);
    const auto p = jacobi_monic_sequence(spec.alpha, spec.beta, count + 1);
    const Poly x_plus_1({Rational(1), Rational(1)});
    std::vector<Poly> out;
    for (unsigned n = 0; n < count; ++n) {
        Poly num = p[n + 1] + p[n] * c.x(n + 1);
        if (n >= 1) num += p[n - 1] * c.y(n);
        out.push_back(exact_div(num, x_plus_1));
    }
    return out;
}

inline Poly laguerre(const Rational& alpha, unsigned n) { return laguerre_sequence(alpha, n + 1).back(); }
inline Poly jacobi_monic(const Rational& alpha, const Rational& beta, unsigned n) {
    return jacobi_monic_sequence(alpha, beta, n + 1).back();
}
inline Poly krall_laguerre(const Rational& alpha, const Rational& r, unsigned n) {
    return krall_laguerre_sequence(FamilySpec::krall_laguerre(alpha, r), n + 1).back();
}
inline Poly krall_jacobi(const Rational& alpha, const Rational& beta, const Rational& r, unsigned n) {
    return krall_jacobi_sequence(FamilySpec::krall_jacobi(alpha, beta, r), n + 1).back();
}

inline std::vector<Poly> family_sequence(const FamilySpec& spec, unsigned count) {
    switch (spec.kind) {
        case FamilyKind::Laguerre: return laguerre_sequence(spec.alpha, count);
        case FamilyKind::JacobiMonic: return jacobi_monic_sequence(spec.alpha, spec.beta, count);
        case FamilyKind::KrallLaguerre: return krall_laguerre_sequence(spec, count);
        case FamilyKind::KrallJacobi: return krall_jacobi_sequence(spec, count);
    }
    return {};
}

/// Family with an append-only cache of generated polynomials. Reads may happen
/// concurrently; generation is serialized by the instance mutex.
class Family {
   public:
    explicit Family(FamilySpec spec) : spec_(std::move(spec)) { spec_.validate(); }
    Family(const Family& o) : spec_(o.spec_) {
        std::lock_guard lock(o.mu_);
        cache_ = o.cache_;
    }
    Family& operator=(const Family&) = delete;

    const FamilySpec& spec() const { return spec_; }
    FamilyCoeffs coeffs() const { return FamilyCoeffs(spec_); }

    Poly operator()(unsigned n) const {
        std::lock_guard lock(mu_);
        if (n >= cache_.size()) {
            // Grow geometrically so repeated single-index requests stay linear overall.
            const unsigned want = std::max<unsigned>(n + 1, static_cast<unsigned>(cache_.size() * 3 / 2));
            cache_ = family_sequence(spec_, want);
        }
        return cache_[n];
    }

    /// Ensures p_0 .. p_{count-1} are cached.
    void reserve(unsigned count) const {
        if (count) (void)(*this)(count - 1);
    }

   private:
    FamilySpec spec_;
    mutable std::mutex mu_;
    mutable std::vector<Poly> cache_;
};

}  // namespace mvop

#endif  // MVOP_FAMILIES_HPP
