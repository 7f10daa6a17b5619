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

#ifndef MVOP_JSON_IO_HPP
#define MVOP_JSON_IO_HPP

// JSON encoding of exact values. Rationals are strings "p/q" (or "p"), polynomials are
// coefficient arrays from low to high degree, matrices are arrays of rows.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eigenalgebra.hpp"

namespace mvop {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Json to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

inline Json to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

inline Json to_json(const MatPoly& p) {
    Json out = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p.size(); ++j) row.push_back(to_json(p(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline Json to_json(const ScalarDiffOp& op) {
    Json out = Json::array();
    for (const auto& c : op.coeffs()) out.push_back(to_json(c));
    return out;
}

inline Json to_json(const MatDiffOp& op) {
    Json out = Json::array();
    for (const auto& c : op.coeffs()) out.push_back(to_json(c));
    return out;
}

inline Json to_json(const std::vector<Poly>& row) {
    Json out = Json::array();
    for (const auto& p : row) out.push_back(to_json(p));
    return out;
}

inline Json to_json(const EigenSolveResult& r) {
    Json basis = Json::array();
    for (const auto& pair : r.basis) {
        Json e;
        e["operator"] = to_json(pair.op);
        e["text"] = pair.op.to_string();
        Json table = Json::object();
        for (const auto& [n, g] : pair.eigenvalues) table[std::to_string(n)] = to_json(g);
        e["eigenvalues"] = std::move(table);
        if (pair.fit) {
            Json fit = Json::array();
            for (const auto& g : *pair.fit) fit.push_back(to_json(g));
            e["fit"] = std::move(fit);
        }
        basis.push_back(std::move(e));
    }
    Json history = Json::array();
    for (const auto& h : r.history) history.push_back({{"train_last", h.train_last}, {"dimension", h.dimension}});
    Json out;
    out["dimension"] = r.dimension;
    out["basis"] = std::move(basis);
    out["provenance"] = {{"train_last", r.train_last}, {"verified", r.verified}, {"history", std::move(history)}};
    return out;
}

/// "1,2,3/4" -> 1 + 2x + 3/4 x^2.
inline Poly parse_poly(std::string_view text) {
    std::vector<Rational> c;
    while (!text.empty()) {
        const auto comma = text.find(',');
        auto item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw Error(ErrorCode::ParseError, "empty coefficient");
        c.push_back(Rational::parse(item));
        text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    }
    return Poly(std::move(c));
}

/// Comma-separated coefficients, low degree first; "0" for the zero polynomial.
inline std::string poly_csv(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out += (i ? "," : "") + p.coeffs()[i].to_string();
    return out;
}

}  // namespace mvop

#endif  // MVOP_JSON_IO_HPP
