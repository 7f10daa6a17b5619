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

#ifndef MVOP_SCENARIOS_HPP
#define MVOP_SCENARIOS_HPP

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "closed_forms.hpp"
#include "json_io.hpp"
#include "recurrence.hpp"

namespace mvop {

struct Check {
    std::string name;
    std::string ref;
    bool pass = false;
    Json witness;
};

class Report {
   public:
    explicit Report(std::string scenario) : scenario_(std::move(scenario)) {}

    void add(std::string name, std::string ref, bool pass, Json witness = Json::object()) {
        checks_.push_back({std::move(name), std::move(ref), pass, std::move(witness)});
    }

    /// Runs `f`, recording its wall time under `label` (kept out of the comparable section).
    template <class F>
    void timed(const std::string& label, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        timings_.emplace_back(label, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }

    const std::string& scenario() const { return scenario_; }
    const std::vector<Check>& checks() const { return checks_; }
    bool pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return !checks_.empty();
    }

    Json to_json(bool with_timings = true) const {
        Json out;
        out["schema"] = 1;
        out["scenario"] = scenario_;
        out["pass"] = pass();
        Json checks = Json::array();
        for (const auto& c : checks_)
            checks.push_back({{"name", c.name}, {"paper_ref", c.ref}, {"pass", c.pass}, {"witness", c.witness}});
        out["checks"] = std::move(checks);
        if (with_timings) {
            Json t = Json::object();
            for (const auto& [k, v] : timings_) t[k] = v;
            out["timings"] = std::move(t);
        }
        return out;
    }

   private:
    std::string scenario_;
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, double>> timings_;
};

struct Scenario {
    std::string name;
    std::string summary;
    std::vector<std::string> criteria;
    std::optional<FamilySpec> family;  // used by solve-space --scenario
    FoldConfig fold;
    std::function<Report()> run;
};

namespace detail {

inline std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

inline MatFamily folded(const Family& fam, const FoldConfig& cfg) {
    return [fam, cfg](unsigned n) { return fold_family(fam, cfg, n); };
}

inline std::string label(const FamilySpec& s) { return s.to_string(); }

/// Krall-Jacobi validation grid without the degenerate alpha = beta = 0 point.
inline std::vector<FamilySpec> kj_grid(bool include_alpha0 = true) {
    std::vector<FamilySpec> out;
    for (const Rational& a : rats({0, Rational(1, 2), 1, Rational(3, 2)})) {
        if (a.is_zero() && !include_alpha0) continue;
        for (const Rational& b : rats({0, Rational(7, 8), a + 1}))
            for (const Rational& r : rats({2, 5, 7})) {
                if ((a + b).is_zero()) continue;
                out.push_back(FamilySpec::krall_jacobi(a, b, r));
            }
    }
    return out;
}

inline SolveConfig order(unsigned m) {
    SolveConfig c;
    c.max_order = m;
    return c;
}

/// First basis element of exactly the given order.
inline const EigenPair* element_of_order(const EigenSolveResult& r, int ord) {
    for (const auto& p : r.basis)
        if (p.op.order() == ord) return &p;
    return nullptr;
}

// ---------------------------------------------------------------------------

inline Report run_roundtrip() {
    Report rep("roundtrip");
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> deg(0, 40), num(-50, 50), den(1, 9);
    std::vector<Poly> polys;
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = Rational(num(rng), den(rng));
        polys.emplace_back(std::move(c));
    }
    rep.timed("roundtrip", [&] {
        for (unsigned n : {2u, 3u, 4u})
            for (const Rational& a : rats({0, -1, Rational(3, 2)})) {
                FoldConfig cfg;
                cfg.n = n;
                cfg.a = a;
                unsigned bad = 0;
                for (const auto& p : polys)
                    if (unfold(split_all(p, cfg), cfg) != p) ++bad;
                rep.add("unfold(split(p)) = p, N=" + std::to_string(n) + ", a=" + a.to_string(),
                        "residue split and its inverse", bad == 0, {{"polynomials", polys.size()}, {"failures", bad}});
            }
    });
    return rep;
}

inline Report run_laguerre_2x2() {
    Report rep("laguerre-2x2");
    rep.timed("fold", [&] {
        for (const Rational& a : rats({0, Rational(1, 2), 1, Rational(3, 2)})) {
            const MatDiffOp folded_op = fold_operator_2x2(laguerre_op(a));
            const bool same = folded_op == forms::laguerre_2x2(a);
            const bool general_same = fold_operator_general(laguerre_op(a), FoldConfig{}) == folded_op;
            rep.add("2x2 fold of Laguerre operator, alpha=" + a.to_string(),
                    "2x2 Laguerre matrix differential equation coefficients", same && general_same,
                    {{"operator", folded_op.to_string()}, {"general_fold_agrees", general_same}});

            Family fam(FamilySpec::laguerre(a));
            const auto f = folded(fam, FoldConfig{});
            std::vector<unsigned> bad;
            for (unsigned n = 0; n <= 20; ++n)
                if (compute_eigenvalue(folded_op, f(n)) != forms::laguerre_2x2_gamma(n)) bad.push_back(n);
            rep.add("eigenvalue diag(-2n, -2n-1) for n <= 20, alpha=" + a.to_string(),
                    "2x2 Laguerre eigenvalue matrix", bad.empty(), {{"failing", bad}});
        }
    });
    return rep;
}

inline Report run_laguerre_nxn() {
    Report rep("laguerre-nxn");
    rep.timed("fold", [&] {
        for (unsigned n : {3u, 4u})
            for (const Rational& a : rats({0, Rational(1, 2)})) {
                FoldConfig cfg;
                cfg.n = n;
                const MatDiffOp op = fold_operator_general(laguerre_op(a), cfg);
                const auto expect = forms::laguerre_nxn(n, a);
                const std::string tag = "N=" + std::to_string(n) + ", alpha=" + a.to_string();
                Family fam(FamilySpec::laguerre(a));
                const auto f = folded(fam, cfg);
                std::vector<unsigned> bad;
                for (unsigned k = 0; k <= 10; ++k) {
                    RatMatrix g(n, n);
                    for (unsigned j = 0; j < n; ++j) g(j, j) = Rational(-static_cast<long>(k * n + j));
                    if (compute_eigenvalue(op, f(k)) != g) bad.push_back(k);
                }
                rep.add("eigenvalue diag(gamma_{nN+j}) for n <= 10, " + tag, "N x N Laguerre eigenvalue matrix",
                        bad.empty(), {{"failing", bad}});
                rep.add("A_2: top-right N^2 x, subdiagonal N^2 x^2, zero elsewhere, " + tag,
                        "N x N Laguerre A_2 pattern", op.coeff(2) == expect.a2, {{"A_2", to_json(op.coeff(2))}});
                rep.add("A_1: diagonal -N x, subdiagonal N(N+2j+alpha) x, top-right N(N+alpha), " + tag,
                        "N x N Laguerre A_1 pattern", op.coeff(1) == expect.a1, {{"A_1", to_json(op.coeff(1))}});
                rep.add("A_0 (reported): diagonal -j, subdiagonal j(j+alpha), " + tag, "N x N Laguerre A_0",
                        op.coeff(0) == expect.a0, {{"A_0", to_json(op.coeff(0))}});
                rep.add("order of the fold is 2, " + tag, "second-order matrix equation", op.order() == 2,
                        {{"order", op.order()}});
            }
    });
    return rep;
}

inline Report run_krall_laguerre_scalar() {
    Report rep("krall-laguerre-scalar");
    rep.timed("grid", [&] {
        for (const Rational& a : rats({0, Rational(1, 2), 1}))
            for (const Rational& r : rats({2, 5, 7})) {
                const auto spec = FamilySpec::krall_laguerre(a, r);
                const FamilyCoeffs c(spec);
                const auto q = laguerre_sequence(a, 22);
                std::vector<unsigned> not_div;
                for (unsigned n = 0; n <= 20; ++n) {
                    Poly num = q[n + 1] + q[n] * c.x(n + 1);
                    if (n >= 1) num += q[n - 1] * c.y(n);
                    if (!divmod(num, Poly::x()).second.is_zero()) not_div.push_back(n);
                }
                rep.add("x divides q_{n+1} + x_{n+1} q_n + y_n q_{n-1}, n <= 20, " + label(spec),
                        "Krall-Laguerre definition", not_div.empty(), {{"failing", not_div}});

                Family fam(spec);
                const auto band = verify_banded(fam, krall_bands(spec), 12);
                rep.add("five-term recurrence x^2 p_n, n <= 12, " + label(spec), "five-term recurrence from T1 T2",
                        band.pass(), {{"failing", band.failing}});

                const ScalarDiffOp op = krall_laguerre_op(a, r);
                std::vector<unsigned> bad;
                for (unsigned n = 0; n <= 12; ++n)
                    if (apply_scalar(op, fam(n)) != fam(n) * ((r + n) * (r + n + 1))) bad.push_back(n);
                rep.add("fourth-order equation with eigenvalue (R+n)(R+n+1), n <= 12, " + label(spec),
                        "Krall-Laguerre fourth-order differential equation", bad.empty(), {{"failing", bad}});

                const auto f = folded(fam, FoldConfig{});
                const bool p01 = f(0) == forms::kl_p0(a, r) && f(1) == forms::kl_p1(a, r);
                rep.add("P_0 and P_1 closed forms, " + label(spec), "closed forms of P_0(x), P_1(x)", p01,
                        {{"P_0", to_json(f(0))}, {"P_1", to_json(f(1))}});
            }
    });
    return rep;
}

inline Report run_krall_laguerre_algebra() {
    Report rep("krall-laguerre-algebra");
    for (const Rational& a : rats({0, Rational(1, 2), 1}))
        for (const Rational& r : rats({2, 5, 7})) {
            const auto spec = FamilySpec::krall_laguerre(a, r);
            Family fam(spec);
            const auto f = folded(fam, FoldConfig{});
            const std::string tag = label(spec);
            rep.timed("solve " + tag, [&] {
                const auto s4 = solve_operator_space(f, 2, order(4));
                rep.add("order <= 4 space has dimension 2, " + tag, "matrix operator algebra of the fold",
                        s4.dimension == 2, {{"dimension", s4.dimension}, {"train_last", s4.train_last}});
                const auto s3 = solve_operator_space(f, 2, order(3));
                rep.add("order <= 3 space has dimension 1, " + tag, "no lower order operator",
                        s3.dimension == 1, {{"dimension", s3.dimension}});

                const MatDiffOp b = forms::kl_b(a, r);
                const auto* elem = element_of_order(s4, 4);
                const bool match = elem && normalize_modulo_identity(elem->op) == normalize_modulo_identity(b);
                rep.add("basis element equals B up to scale and identity shift, " + tag,
                        "fourth-order matrix operator B", match,
                        {{"basis_element", elem ? elem->op.to_string() : std::string("missing")}});

                const MatDiffOp fold4 = fold_operator_2x2(krall_laguerre_op(a, r));
                const bool fold_rel = 16 * b + Rational((r + 1) * (r + 2)) * MatDiffOp::identity(2) == fold4;
                rep.add("fold of the scalar operator = 16 B + (R+1)(R+2) I, " + tag,
                        "operator obtained from the scalar one", fold_rel, Json::object());

                bool fit_ok = false;
                Json wit;
                try {
                    const auto table = compute_eigenvalues(b, f, 0, 12);
                    const auto g = fit_eigenvalue_poly(table, 2);
                    const auto expect = forms::kl_b_gamma(r);
                    fit_ok = g[0] == expect[0] && g[1] == expect[1] && g[2] == expect[2];
                    wit = {{"G0", to_json(g[0])}, {"G1", to_json(g[1])}, {"G2", to_json(g[2])}};
                } catch (const Error& e) {
                    wit = {{"error", e.what()}};
                }
                rep.add("eigenvalues of B fit G0 + n G1 + n^2 G2 exactly, " + tag, "matrix valued eigenvalue of B",
                        fit_ok, wit);
            });
        }
    return rep;
}

inline Report run_symmetrization() {
    Report rep("symmetrization");
    rep.timed("krall-laguerre", [&] {
        for (const Rational& a : rats({0, Rational(1, 2), 1}))
            for (const Rational& r : rats({2, 5, 7})) {
                const auto spec = FamilySpec::krall_laguerre(a, r);
                const std::string tag = label(spec);
                const bool expect = a.is_zero();
                const auto rec = krall_bands(spec);
                const auto ss = scalar_symmetrize(rec, 14);
                rep.add(std::string("scalar symmetrization ") + (expect ? "succeeds" : "fails") + ", " + tag,
                        "scalar normalization r_n = tau_n p_n", ss.success == expect,
                        {{"success", ss.success}, {"first_failure", ss.first_failure ? Json(*ss.first_failure) : Json()},
                         {"reason", ss.reason}});

                const FamilyCoeffs c(spec);
                std::vector<unsigned> holds;
                for (unsigned n = 1; n <= 12; ++n)
                    if (darboux_symmetry_condition(c, n)) holds.push_back(n);
                rep.add(std::string("condition on x_n, y_n, xbar_n, ybar_n ") + (expect ? "holds" : "fails") +
                            " for n = 1..12, " + tag,
                        "necessary condition for a symmetric five-term recurrence",
                        expect ? holds.size() == 12 : holds.empty(), {{"holds_at", holds}});

                if (expect) {
                    std::vector<unsigned> bad;
                    for (unsigned n = 0; n <= 12; ++n) {
                        const bool ok = rec(n, 2) * rec(n + 2, -2) == forms::kl0_a_sq(n, r) &&
                                        rec(n, 1) * rec(n + 1, -1) == forms::kl0_b_sq(n, r) &&
                                        rec(n, 0) == forms::kl0_c(n, r);
                        if (!ok) bad.push_back(n);
                    }
                    rep.add("a_{n+2}^2, b_{n+1}^2, c_n closed forms for n <= 12, " + tag,
                            "symmetric five-term coefficients at alpha = 0", bad.empty(), {{"failing", bad}});
                }

                Family fam(spec);
                const FoldConfig cfg;
                std::vector<MatPoly> ps;
                for (unsigned n = 0; n < 11; ++n) ps.push_back(fold_family(fam, cfg, n));
                const auto mon = make_monic(ps);
                const auto blocks = blocks_from_banded(bands_for_fold(rec, cfg), 11);
                const auto ms = matrix_symmetrize(monic_blocks(blocks, mon.multipliers));
                Json w = {{"success", ms.success}, {"solution_dimension", ms.solution_dimension}, {"reason", ms.reason}};
                if (ms.success) w["S_0"] = to_json(ms.s.front()), w["S_10"] = to_json(ms.s.back());
                rep.add(std::string("matrix symmetrization ") + (expect ? "succeeds" : "fails") + " for n <= 10, " + tag,
                        "positive definite S_n with B_n S_n symmetric", ms.success == expect, w);
            }
    });
    rep.timed("krall-jacobi", [&] {
        for (const auto& spec : kj_grid()) {
            const std::string tag = label(spec);
            const bool expect = spec.beta.is_zero();
            const auto rec = krall_bands(spec);
            const auto ss = scalar_symmetrize(rec, 12);
            const FamilyCoeffs c(spec);
            bool cond_all = true, cond_none = true;
            for (unsigned n = 1; n <= 12; ++n) {
                const bool h = darboux_symmetry_condition(c, n);
                cond_all = cond_all && h;
                cond_none = cond_none && !h;
            }
            Family fam(spec);
            FoldConfig cfg;
            cfg.a = -1;
            std::vector<MatPoly> ps;
            for (unsigned n = 0; n < 11; ++n) ps.push_back(fold_family(fam, cfg, n));
            const auto mon = make_monic(ps);
            const auto ms = matrix_symmetrize(monic_blocks(blocks_from_banded(bands_for_fold(rec, cfg), 11), mon.multipliers));
            const bool ok = ss.success == expect && (expect ? cond_all : cond_none) && ms.success == expect;
            rep.add(std::string("scalar and matrix symmetrization ") + (expect ? "succeed" : "fail") + ", " + tag,
                    "symmetrization only for beta = 0", ok,
                    {{"scalar", ss.success}, {"condition_all_n", cond_all}, {"matrix", ms.success},
                     {"scalar_reason", ss.reason}, {"matrix_reason", ms.reason}});
        }
    });
    return rep;
}

inline Report run_orthogonality() {
    Report rep("orthogonality");
    rep.timed("gram", [&] {
        auto offdiag = [&](const Family& fam, const MomentFunctional& w, unsigned top) {
            std::vector<std::pair<unsigned, unsigned>> bad;
            std::vector<MatPoly> ps;
            for (unsigned n = 0; n <= top; ++n) ps.push_back(fold_family(fam, FoldConfig{}, n));
            for (unsigned m = 0; m <= top; ++m)
                for (unsigned n = 0; n <= top; ++n)
                    if (m != n && !moment_gram(ps[m], ps[n], w).is_zero()) bad.emplace_back(m, n);
            bool pd = true;
            for (unsigned n = 0; n <= top; ++n) pd = pd && is_positive_definite(moment_gram(ps[n], ps[n], w));
            return std::make_pair(bad, pd);
        };

        const Rational r(7);
        Family kl(FamilySpec::krall_laguerre(0, r));
        const auto wkl = folded_laguerre_weight(2, 0, r);
        const auto [bad_kl, pd_kl] = offdiag(kl, wkl, 8);
        rep.add("Krall-Laguerre alpha=0, R=7: Gram(m,n) = 0 for m != n <= 8", "weight with the (2/R) delta_0 term",
                bad_kl.empty(), {{"failing_pairs", bad_kl}, {"mu11_0", wkl.moment(0, 0, 0).to_string()}});
        rep.add("Krall-Laguerre alpha=0, R=7: diagonal Gram blocks positive definite", "weight matrix is positive",
                pd_kl, Json::object());

        Family lg(FamilySpec::laguerre(0));
        const auto w0 = folded_laguerre_weight(2, 0);
        const auto [bad_l, pd_l] = offdiag(lg, w0, 8);
        rep.add("Laguerre alpha=0: Gram(m,n) = 0 for m != n <= 8", "2x2 Laguerre weight", bad_l.empty() && pd_l,
                {{"failing_pairs", bad_l}, {"mu11_0", w0.moment(0, 0, 0).to_string()}});

        for (const Rational& a : rats({1, 2})) {
            Family la(FamilySpec::laguerre(a));
            const auto [bad, pd] = offdiag(la, folded_laguerre_weight(2, a), 6);
            rep.add("Laguerre alpha=" + a.to_string() + " with x^(alpha/2)-corrected weight: Gram(m,n) = 0, m != n <= 6",
                    "integer alpha extension (reported separately)", bad.empty() && pd, {{"failing_pairs", bad}});
        }

        // The symmetrizing S_n of the monic recurrence is the Gram block of the monic family.
        const auto rec = krall_bands(FamilySpec::krall_laguerre(0, r));
        std::vector<MatPoly> ps;
        for (unsigned n = 0; n < 9; ++n) ps.push_back(fold_family(kl, FoldConfig{}, n));
        const auto mon = make_monic(ps);
        const auto ms = matrix_symmetrize(monic_blocks(blocks_from_banded(bands_for_fold(rec, FoldConfig{}), 9), mon.multipliers));
        bool prop = ms.success;
        if (prop) {
            const RatMatrix g0 = moment_gram(mon.polys[0], mon.polys[0], wkl);
            const Rational scale = g0(0, 0) / ms.s[0](0, 0);
            for (unsigned n = 0; n < 9 && prop; ++n)
                prop = moment_gram(mon.polys[n], mon.polys[n], wkl) == ms.s[n] * scale;
        }
        rep.add("S_n from symmetrization equals the monic Gram block up to one scale, n <= 8",
                "orthogonality and symmetrization agree", prop, Json::object());
    });
    return rep;
}

inline Report run_kj_generic() {
    Report rep("kj-generic");
    rep.timed("grid", [&] {
        std::vector<std::string> dual_bad, pq_bad;
        for (const auto& spec : kj_grid()) {
            const FamilyCoeffs c(spec);
            const auto p = jacobi_monic_sequence(spec.alpha, spec.beta, 18);
            Family fam(spec);
            const Poly x1({Rational(1), Rational(1)});
            for (unsigned n = 0; n <= 15; ++n) {
                Poly rhs = fam(n + 1) + fam(n) * c.x_bar(n + 1);
                if (n >= 1) rhs += fam(n - 1) * c.y_bar(n);
                if (x1 * p[n] != rhs) {
                    dual_bad.push_back(label(spec) + ":n=" + std::to_string(n));
                    break;
                }
            }
            const ScalarDiffOp pq = kj_pq_op(spec.alpha, spec.beta, spec.r);
            for (unsigned n = 0; n <= 12; ++n)
                if (apply_scalar(pq, fam(n)) != fam(n) * forms::kj_lambda(n, spec.alpha, spec.beta, spec.r)) {
                    pq_bad.push_back(label(spec) + ":n=" + std::to_string(n));
                    break;
                }
        }
        rep.add("dual relation with corrected ybar_n, n <= 15, on the grid", "p_n from q_{n-1}, q_n, q_{n+1}",
                dual_bad.empty(), {{"failing", dual_bad}, {"grid_size", kj_grid().size()}});
        rep.add("P o Q has eigenvalues lambda_n, n <= 12, on the grid", "fourth-order operator PQ", pq_bad.empty(),
                {{"failing", pq_bad}});
    });

    const Rational a(3, 2), b(7, 8), r(7);
    const ScalarDiffOp diff = kj_pq_op(a, b, r) - forms::kj_generic_scalar();
    const Rational shift = r * (r + a + b + 1);
    rep.add("P o Q minus the closed-form operator is a constant at (3/2, 7/8, 7)",
            "fourth-order scalar operator at alpha = 3/2, beta = 7/8, R = 7",
            diff == ScalarDiffOp({Poly(shift)}), {{"difference", diff.to_string()}, {"constant", shift.to_string()}});

    Family fam(FamilySpec::krall_jacobi(a, b, r));
    const auto f = folded(fam, FoldConfig{});
    for (auto [m, dim] : std::vector<std::pair<unsigned, std::size_t>>{{3, 1}, {4, 2}, {6, 3}}) {
        rep.timed("solve order " + std::to_string(m), [&] {
            const auto s = solve_operator_space(f, 2, order(m));
            rep.add("order <= " + std::to_string(m) + " matrix space has dimension " + std::to_string(dim),
                    "algebra of the Krall-Jacobi fold", s.dimension == dim,
                    {{"dimension", s.dimension}, {"train_last", s.train_last}});
            if (m == 6) {
                const auto* e6 = element_of_order(s, 6);
                const bool lead = e6 && e6->op.coeff(6) == forms::kj_order6_d6() && e6->op.coeff(5) == forms::kj_order6_d5();
                rep.add("order-6 element: D^6 and D^5 coefficients equal the closed forms",
                        "highest order terms of the order six operator", lead,
                        {{"D6", e6 ? to_json(e6->op.coeff(6)) : Json()}, {"D5", e6 ? to_json(e6->op.coeff(5)) : Json()}});
            }
        });
    }
    return rep;
}

/// Row 2 of P_n replaced by row 2 + c_n row 1 so that entry (2,1) vanishes.
inline std::optional<std::pair<Rational, MatPoly>> clear_lower_left(const MatPoly& p) {
    const Poly& top = p(0, 0);
    const Poly& low = p(1, 0);
    if (top.is_zero()) return std::nullopt;
    const Rational c = -low.leading() / top.leading();
    RatMatrix u = RatMatrix::identity(2);
    u(1, 0) = c;
    MatPoly out = left_mul(u, p);
    if (!out(1, 0).is_zero()) return std::nullopt;
    return std::make_pair(c, out);
}

inline Report run_kj_shift_loworder() {
    Report rep("kj-shift-loworder");
    for (const Rational& a : rats({Rational(1, 2), 1}))
        for (const Rational& r : rats({2, 7})) {
            const auto spec = FamilySpec::krall_jacobi(a, a + 1, r);
            const std::string tag = label(spec);
            Family fam(spec);
            const auto f = folded(fam, FoldConfig{});
            rep.timed("solve " + tag, [&] {
                const auto cfg = order(3);
                const auto s = solve_operator_space(f, 2, cfg);
                rep.add("order <= 3 matrix space has dimension 5, " + tag, "five dimensional space at beta = alpha + 1",
                        s.dimension == 5, {{"dimension", s.dimension}});
                const MatDiffOp o1 = forms::kj_shift_order1(a, r), o2 = forms::kj_shift_order2(a, r);
                rep.add("first-order operator is in the space, " + tag, "first-order equation at beta = alpha + 1",
                        in_span(o1, s, cfg), {{"operator", o1.to_string()}});
                rep.add("second-order operator is in the space, " + tag, "second-order equation at beta = alpha + 1",
                        in_span(o2, s, cfg), {{"operator", o2.to_string()}});

                std::vector<unsigned> bad;
                Json cs = Json::array();
                for (unsigned n = 0; n <= 12; ++n) {
                    const auto cl = clear_lower_left(f(n));
                    if (!cl) {
                        bad.push_back(n);
                        continue;
                    }
                    cs.push_back(cl->first.to_string());
                    const MatPoly& pt = cl->second;
                    if (apply_matrix(pt, o1) != left_mul(forms::kj_shift_order1_gamma(n, a, r), pt) ||
                        apply_matrix(pt, o2) != left_mul(forms::kj_shift_order2_gamma(n, a, r), pt))
                        bad.push_back(n);
                }
                rep.add("closed-form eigenvalues hold for [[1,0],[c_n,1]] P_n, n <= 12, " + tag,
                        "eigenvalues of the first and second order operators", bad.empty(),
                        {{"failing", bad}, {"c_n", cs}});
            });
        }
    return rep;
}

inline Report run_kj_shift_scalar() {
    Report rep("kj-shift-scalar");
    for (const Rational& a : rats({Rational(1, 2), 1}))
        for (const Rational& r : rats({2, 7})) {
            const Rational b = a + 1;
            const auto spec = FamilySpec::krall_jacobi(a, b, r);
            const std::string tag = label(spec);
            Family fam(spec);
            rep.timed("solve " + tag, [&] {
                const auto cfg = order(4);
                const auto s = scalar_space([&](unsigned n) { return fam(n); }, cfg);
                const ScalarDiffOp shown = kj_shift_op(a);
                // The same operator with the D^3, D^2 and D terms negated.
                const ScalarDiffOp flipped({Poly(), -shown.coeff(1), -shown.coeff(2), -shown.coeff(3), shown.coeff(4)});
                const bool pq_in = in_span(as_matrix_op(kj_pq_op(a, b, r)), s, cfg);
                const bool shown_in = in_span(as_matrix_op(shown), s, cfg);
                const bool flipped_in = in_span(as_matrix_op(flipped), s, cfg);
                const ScalarDiffOp rel = kj_pq_op(a, b, r) - shown;
                rep.add("scalar order <= 4 space is {I, P o Q}, " + tag, "unique fourth-order scalar operator",
                        s.dimension == 2 && pq_in, {{"dimension", s.dimension}});
                rep.add("R-free operator: not in the space; with D^3, D^2, D negated it is in the space iff R = 7, " + tag,
                        "R-free fourth-order operator at beta = alpha + 1",
                        !shown_in && flipped_in == (r == Rational(7)),
                        {{"closed_form_in_space", shown_in}, {"negated_in_space", flipped_in},
                         {"PQ_minus_closed_form", rel.to_string()}});
            });
        }
    return rep;
}

inline Report run_one_way_street() {
    Report rep("one-way-street");
    auto check_members = [&](const std::string& tag, const std::function<Poly(unsigned)>& scalar,
                             const MatFamily& matrix, unsigned m, const std::function<MatDiffOp(const ScalarDiffOp&)>& fold) {
        const auto cfg = order(m);
        const auto ss = scalar_space(scalar, cfg);
        const auto ms = solve_operator_space(matrix, 2, cfg);
        std::vector<std::string> missing;
        for (const auto& e : ss.basis) {
            const auto& c = e.op.coeffs();
            std::vector<Poly> sc;
            for (const auto& mp : c) sc.push_back(mp(0, 0));
            const ScalarDiffOp op(sc);
            if (!in_span(fold(op), ms, cfg)) missing.push_back(op.to_string());
        }
        rep.add("folded scalar operators of order <= " + std::to_string(m) + " lie in the matrix space, " + tag,
                "scalar to matrix direction", missing.empty(),
                {{"scalar_dimension", ss.dimension}, {"matrix_dimension", ms.dimension}, {"missing", missing}});
        return std::make_pair(ss.dimension, ms.dimension);
    };
    auto fold2 = [](const ScalarDiffOp& op) { return fold_operator_general(op, FoldConfig{}); };

    rep.timed("krall-laguerre", [&] {
        Family fam(FamilySpec::krall_laguerre(Rational(1, 2), 5));
        check_members("krall-laguerre:alpha=1/2,R=5", [&](unsigned n) { return fam(n); }, folded(fam, FoldConfig{}), 4,
                      [](const ScalarDiffOp& op) { return fold_operator_2x2(op); });
    });
    rep.timed("krall-jacobi generic", [&] {
        Family fam(FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7));
        check_members("krall-jacobi:alpha=3/2,beta=7/8,R=7", [&](unsigned n) { return fam(n); },
                      folded(fam, FoldConfig{}), 4, fold2);
    });
    rep.timed("krall-jacobi beta=alpha+1", [&] {
        const auto spec = FamilySpec::krall_jacobi(Rational(1, 2), Rational(3, 2), 2);
        Family fam(spec);
        const auto dims4 = check_members(label(spec), [&](unsigned n) { return fam(n); }, folded(fam, FoldConfig{}), 4, fold2);
        const auto dims3 = check_members(label(spec), [&](unsigned n) { return fam(n); }, folded(fam, FoldConfig{}), 3, fold2);
        rep.add("matrix space strictly larger than the folded scalar space at orders 3 and 4, " + label(spec),
                "matrix to scalar direction fails", dims3.second > dims3.first && dims4.second > dims4.first,
                {{"order3", {{"scalar", dims3.first}, {"matrix", dims3.second}}},
                 {"order4", {{"scalar", dims4.first}, {"matrix", dims4.second}}}});
    });
    return rep;
}

inline Report run_negative_controls() {
    Report rep("negative-controls");
    const auto spec = FamilySpec::krall_laguerre(1, 2);
    Family fam(spec);
    const auto rec = krall_bands(spec);
    BandedRec bad = rec;
    bad.band = [rec](unsigned n, int k) { return rec(n, k) + ((n == 3 && k == 1) ? Rational(1) : Rational(0)); };
    const auto r1 = verify_banded(fam, bad, 12);
    rep.add("corrupted band c_{3,1} + 1 fails exactly at n = 3", "negative control",
            r1.failing == std::vector<unsigned>{3}, {{"failing", r1.failing}});

    auto expect_error = [&](const std::string& name, ErrorCode code, const std::function<void()>& f) {
        std::string got = "no error";
        bool ok = false;
        try {
            f();
        } catch (const Error& e) {
            got = e.what();
            ok = e.code() == code;
        }
        rep.add(name, "negative control", ok, {{"raised", got}});
    };
    expect_error("non-eigen operator raises NotAnEigenfunction", ErrorCode::NotAnEigenfunction, [&] {
        MatPoly d1(2);
        d1(0, 1) = Poly(1);
        (void)compute_eigenvalues(MatDiffOp(2, {MatPoly(2), d1}), folded(fam, FoldConfig{}), 0, 6);
    });
    expect_error("perturbed x_n raises NotDivisible", ErrorCode::NotDivisible, [&] {
        auto s = spec;
        s.x_perturbation = Rational(1, 1000);
        (void)family_sequence(s, 6);
    });
    expect_error("perturbed Krall-Jacobi x_n raises NotDivisible", ErrorCode::NotDivisible, [&] {
        auto s = FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7);
        s.x_perturbation = Rational(1, 1000);
        (void)family_sequence(s, 6);
    });
    expect_error("singular leading coefficient raises SingularLeadingCoefficient", ErrorCode::SingularLeadingCoefficient, [&] {
        MatPoly p(2);
        p(0, 0) = Poly::x();
        p(1, 0) = Poly::x();
        p(1, 1) = Poly(1);
        (void)make_monic({p});
    });
    expect_error("non-integer alpha weight raises IrrationalMoments", ErrorCode::IrrationalMoments,
                 [&] { (void)folded_laguerre_weight(2, Rational(1, 2)); });
    expect_error("too few training indices raise DidNotStabilize", ErrorCode::DidNotStabilize, [&] {
        auto cfg = order(4);
        cfg.max_train = 4;
        (void)solve_operator_space(folded(fam, FoldConfig{}), 2, cfg);
    });
    expect_error("fit of a non-polynomial table raises NotPolynomial", ErrorCode::NotPolynomial, [&] {
        std::map<unsigned, RatMatrix> table;
        for (unsigned n = 0; n < 6; ++n) table.emplace(n, RatMatrix{{Rational(1) / Rational(n + 1)}});
        (void)fit_eigenvalue_poly(table, 2);
    });
    return rep;
}

}  // namespace detail

inline const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> all = [] {
        std::vector<Scenario> v;
        FoldConfig at0;
        FoldConfig kj_rec;
        kj_rec.a = -1;
        v.push_back({"roundtrip", "unfold(split(p)) = p for random polynomials", {"A1"}, std::nullopt, at0,
                     detail::run_roundtrip});
        v.push_back({"laguerre-2x2", "2x2 fold of the Laguerre operator and its eigenvalues", {"A2"},
                     FamilySpec::laguerre(Rational(1, 2)), at0, detail::run_laguerre_2x2});
        v.push_back({"laguerre-nxn", "N x N fold of the Laguerre operator, N = 3, 4", {"A3"}, std::nullopt, at0,
                     detail::run_laguerre_nxn});
        v.push_back({"krall-laguerre-scalar", "Krall-Laguerre divisibility, five-term recurrence, fourth-order equation",
                     {"A4"}, FamilySpec::krall_laguerre(1, 2), at0, detail::run_krall_laguerre_scalar});
        v.push_back({"krall-laguerre-algebra", "matrix operator algebra of the Krall-Laguerre fold", {"A5"},
                     FamilySpec::krall_laguerre(Rational(1, 2), 5), at0, detail::run_krall_laguerre_algebra});
        v.push_back({"symmetrization", "scalar and matrix symmetrization of the five-term recurrences", {"A6"},
                     std::nullopt, at0, detail::run_symmetrization});
        v.push_back({"orthogonality", "exact Gram blocks from moments", {"A7"}, FamilySpec::krall_laguerre(0, 7), at0,
                     detail::run_orthogonality});
        v.push_back({"kj-generic", "Krall-Jacobi dual relation, PQ and operator dimensions 1/2/3", {"A8"},
                     FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7), at0, detail::run_kj_generic});
        v.push_back({"kj-shift-loworder", "beta = alpha + 1: five dimensional order <= 3 space", {"A8"},
                     FamilySpec::krall_jacobi(Rational(1, 2), Rational(3, 2), 2), at0, detail::run_kj_shift_loworder});
        v.push_back({"kj-shift-scalar", "beta = alpha + 1: scalar fourth-order operator", {"A8"},
                     FamilySpec::krall_jacobi(Rational(1, 2), Rational(3, 2), 7), at0, detail::run_kj_shift_scalar});
        v.push_back({"kj-recurrence", "Krall-Jacobi five-term recurrence folded at x = -1", {"A6"},
                     FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7), kj_rec, [] {
                         Report rep("kj-recurrence");
                         for (const auto& spec : detail::kj_grid()) {
                             Family fam(spec);
                             const auto rec = krall_bands(spec);
                             const auto band = verify_banded(fam, rec, 12);
                             FoldConfig cfg;
                             cfg.a = -1;
                             const auto blocks = blocks_from_banded(bands_for_fold(rec, cfg), 12);
                             const auto bad = verify_block_ttrr(detail::folded(fam, cfg), blocks);
                             rep.add("(x+1)^2 five-term recurrence and its blocks, n <= 12, " + spec.to_string(),
                                     "five-term recurrence of the Krall-Jacobi family", band.pass() && bad.empty(),
                                     {{"band_failing", band.failing}, {"block_failing", bad}});
                         }
                         return rep;
                     }});
        v.push_back({"one-way-street", "folded scalar operators lie in the matrix space, not conversely", {"A9"},
                     std::nullopt, at0, detail::run_one_way_street});
        v.push_back({"negative-controls", "corrupted inputs are rejected", {"A10"}, std::nullopt, at0,
                     detail::run_negative_controls});
        return v;
    }();
    return all;
}

inline const Scenario& find_scenario(std::string_view name) {
    for (const auto& s : scenarios())
        if (s.name == name) return s;
    throw Error(ErrorCode::UnknownScenario, "unknown scenario '" + std::string(name) + "'");
}

}  // namespace mvop

#endif  // MVOP_SCENARIOS_HPP
