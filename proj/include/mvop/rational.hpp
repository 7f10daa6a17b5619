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

#ifndef MVOP_RATIONAL_HPP
#define MVOP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace mvop {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
/// Thin value wrapper over GMP's mpq_class that hides its expression templates.
class Rational {
   public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(Integer(std::to_string(v))) {}
    Rational(unsigned v) : q_(v) {}
    Rational(unsigned long v) : q_(v) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw Error(ErrorCode::DegenerateParameters, "zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }

    /// Accepts "p", "-p" and "p/q" with arbitrary-size integers.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto trim = [](std::string& t) {
            const auto b = t.find_first_not_of(" \t");
            const auto e = t.find_last_not_of(" \t");
            t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
        };
        trim(s);
        if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
        const auto slash = s.find('/');
        Integer num, den(1);
        auto parse_int = [&](std::string part) {
            trim(part);
            if (!part.empty() && part.front() == '+') part.erase(part.begin());
            Integer z;
            if (part.empty() || z.set_str(part, 10) != 0) {
                throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
            }
            return z;
        };
        if (slash == std::string::npos) {
            num = parse_int(s);
        } else {
            num = parse_int(s.substr(0, slash));
            den = parse_int(s.substr(slash + 1));
            if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        }
        return Rational(num, den);
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::DegenerateParameters, "division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(Rational base, unsigned exp) {
    Rational out(1);
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// Falling factorial n (n-1) ... (n-k+1) as an exact rational.
inline Rational falling(const Rational& n, unsigned k) {
    Rational out(1);
    for (unsigned i = 0; i < k; ++i) out *= n - Rational(i);
    return out;
}

}  // namespace mvop

#endif  // MVOP_RATIONAL_HPP
