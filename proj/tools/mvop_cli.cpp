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

// mvop command-line interface. Every subcommand prints JSON on stdout.
// Exit codes: 0 success, 1 failed check or computation error, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <mvop/mvop.hpp>

namespace {

using namespace mvop;

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct FamilyArgs {
    std::string spec;
    std::string kind;
    std::string alpha = "0", beta = "0", r = "0";

    void add(CLI::App* app) {
        app->add_option("--family", spec, "family spec, e.g. krall-laguerre:alpha=1/3,R=5");
        app->add_option("--kind", kind, "laguerre | jacobi | krall-laguerre | krall-jacobi");
        app->add_option("--alpha", alpha, "alpha (rational)");
        app->add_option("--beta", beta, "beta (rational)");
        app->add_option("--r", r, "R (rational)");
    }

    FamilySpec get() const {
        if (!spec.empty()) return FamilySpec::parse(spec);
        if (kind.empty()) throw Error(ErrorCode::ParseError, "one of --family or --kind is required");
        FamilySpec s = FamilySpec::parse(kind);
        s.alpha = Rational::parse(alpha);
        s.beta = Rational::parse(beta);
        s.r = Rational::parse(r);
        return s;
    }
};

struct FoldArgs {
    unsigned n = 2;
    std::string a = "0", pre_s = "1", pre_c = "0";

    void add(CLI::App* app) {
        app->add_option("--n", n, "fold size N")->check(CLI::PositiveNumber);
        app->add_option("--a", a, "expansion point");
        app->add_option("--pre-s", pre_s, "pre-substitution scale");
        app->add_option("--pre-c", pre_c, "pre-substitution shift");
    }

    FoldConfig get() const {
        FoldConfig cfg;
        cfg.n = n;
        cfg.a = Rational::parse(a);
        cfg.pre_s = Rational::parse(pre_s);
        cfg.pre_c = Rational::parse(pre_c);
        cfg.validate();
        return cfg;
    }
};

Json fold_json(const FoldConfig& cfg) {
    return {{"n", cfg.n}, {"a", to_json(cfg.a)}, {"pre_s", to_json(cfg.pre_s)}, {"pre_c", to_json(cfg.pre_c)}};
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact folding of scalar orthogonal polynomial families into matrix valued ones"};
    app.require_subcommand(1);

    // split
    auto* split = app.add_subcommand("split", "residue part m of a polynomial");
    std::string split_poly;
    unsigned split_m = 0;
    bool split_text = false;
    FoldArgs split_fold;
    split->add_option("--poly", split_poly, "coefficients low to high, e.g. \"1,2,3/4\"")->required();
    split->add_option("--m", split_m, "residue index");
    split->add_flag("--text", split_text, "print comma-separated coefficients instead of JSON");
    split_fold.add(split);

    // fold
    auto* fold = app.add_subcommand("fold", "folded matrix polynomial P_n of a family");
    FamilyArgs fold_fam;
    FoldArgs fold_cfg;
    unsigned fold_index = 0;
    fold_fam.add(fold);
    fold_cfg.add(fold);
    fold->add_option("--index", fold_index, "block index n");

    // family
    auto* family = app.add_subcommand("family", "scalar polynomials of a family");
    FamilyArgs fam_args;
    unsigned fam_index = 0;
    std::optional<unsigned> fam_count;
    fam_args.add(family);
    family->add_option("--index", fam_index, "degree n");
    family->add_option("--count", fam_count, "print p_0 .. p_{count-1} instead");

    // apply
    auto* apply = app.add_subcommand("apply", "apply a built-in scalar operator");
    std::string apply_op, apply_poly;
    FamilyArgs apply_fam;
    unsigned apply_index = 0;
    apply->add_option("--op", apply_op, "laguerre | krall-laguerre | kj-P | kj-Q | kj-PQ | kj-shift")->required();
    apply->add_option("--poly", apply_poly, "polynomial to apply to; defaults to p_index of the family");
    apply->add_option("--index", apply_index, "degree of the family polynomial");
    apply_fam.add(apply);

    // fold-op
    auto* fold_op = app.add_subcommand("fold-op", "fold a built-in scalar operator into a matrix operator");
    std::string fop_name;
    FamilyArgs fop_params;
    FoldArgs fop_cfg;
    fold_op->add_option("--op", fop_name, "built-in operator name")->required();
    fop_params.add(fold_op);
    fop_cfg.add(fold_op);

    // solve-space
    auto* solve = app.add_subcommand("solve-space", "basis of the matrix operators having the folded family as eigenfunctions");
    std::string solve_scenario;
    FamilyArgs solve_fam;
    FoldArgs solve_fold;
    unsigned max_order = 4;
    std::vector<unsigned> degree_bounds;
    solve->add_option("--scenario", solve_scenario, "take family and fold from a scenario");
    solve->add_option("--max-order", max_order, "largest operator order");
    solve->add_option("--degree-bounds", degree_bounds, "degree bound D_k per order k (default D_k = k)")->delimiter(',');
    solve_fam.add(solve);
    solve_fold.add(solve);

    // symmetrize
    auto* sym = app.add_subcommand("symmetrize", "scalar and matrix symmetrization of the five-term recurrence");
    FamilyArgs sym_fam;
    unsigned sym_nmax = 12;
    sym_fam.add(sym);
    sym->add_option("--n-max", sym_nmax, "largest index checked");

    // gram
    auto* gram = app.add_subcommand("gram", "exact Gram blocks of a folded family from moments");
    FamilyArgs gram_fam;
    unsigned gram_top = 6, gram_n = 2;
    gram_fam.add(gram);
    gram->add_option("--top", gram_top, "largest block index");
    gram->add_option("--n", gram_n, "fold size N")->check(CLI::PositiveNumber);

    // run
    auto* run = app.add_subcommand("run", "run a named scenario");
    std::string run_name;
    bool run_all = false, no_timings = false;
    run->add_option("name", run_name, "scenario name");
    run->add_flag("--all", run_all, "run every scenario");
    run->add_flag("--no-timings", no_timings, "omit the timings section");

    auto* list = app.add_subcommand("list", "list scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*split) {
            const FoldConfig cfg = split_fold.get();
            if (split_m >= cfg.n) throw Error(ErrorCode::ParseError, "--m must be below --n");
            const Poly part = split_all(parse_poly(split_poly), cfg)[split_m];
            if (split_text) std::cout << poly_csv(part) << "\n";
            else print(to_json(part));
        } else if (*fold) {
            const FamilySpec spec = fold_fam.get();
            const FoldConfig cfg = fold_cfg.get();
            Family fam(spec);
            print({{"family", spec.to_string()}, {"fold", fold_json(cfg)}, {"index", fold_index},
                   {"P", to_json(fold_family(fam, cfg, fold_index))}});
        } else if (*family) {
            const FamilySpec spec = fam_args.get();
            Json out = {{"family", spec.to_string()}};
            if (fam_count) {
                Json polys = Json::array();
                for (const auto& p : family_sequence(spec, *fam_count)) polys.push_back(to_json(p));
                out["polynomials"] = std::move(polys);
            } else {
                out["index"] = fam_index;
                out["p"] = to_json(Family(spec)(fam_index));
            }
            print(out);
        } else if (*apply) {
            const FamilySpec spec = apply_fam.get();
            const ScalarDiffOp op = builtin(apply_op, spec.alpha, spec.beta, spec.r);
            const Poly p = apply_poly.empty() ? Family(spec)(apply_index) : parse_poly(apply_poly);
            print({{"operator", op.to_string()}, {"input", to_json(p)}, {"result", to_json(apply_scalar(op, p))}});
        } else if (*fold_op) {
            FamilyArgs params = fop_params;
            if (params.spec.empty() && params.kind.empty()) params.kind = "krall-jacobi";
            const FamilySpec spec = params.get();
            const FoldConfig cfg = fop_cfg.get();
            const ScalarDiffOp op = builtin(fop_name, spec.alpha, spec.beta, spec.r);
            const bool plain = cfg.n == 2 && cfg.a.is_zero() && !cfg.has_pre_substitution();
            const MatDiffOp m = plain ? fold_operator_2x2(op) : fold_operator_general(op, cfg);
            print({{"scalar", op.to_string()}, {"fold", fold_json(cfg)}, {"operator", to_json(m)}, {"text", m.to_string()}});
        } else if (*solve) {
            FamilySpec spec;
            FoldConfig cfg;
            if (!solve_scenario.empty()) {
                const Scenario& sc = find_scenario(solve_scenario);
                if (!sc.family) throw Error(ErrorCode::ParseError, "scenario '" + sc.name + "' has no single family");
                spec = *sc.family;
                cfg = sc.fold;
            } else {
                spec = solve_fam.get();
                cfg = solve_fold.get();
            }
            SolveConfig sc;
            sc.max_order = max_order;
            sc.degree_bounds = degree_bounds;
            Family fam(spec);
            const auto res = solve_operator_space([&](unsigned n) { return fold_family(fam, cfg, n); }, cfg.n, sc);
            Json out = {{"family", spec.to_string()}, {"fold", fold_json(cfg)}, {"max_order", max_order}};
            out.update(to_json(res));
            print(out);
        } else if (*sym) {
            const FamilySpec spec = sym_fam.get();
            const BandedRec rec = krall_bands(spec);
            const auto ss = scalar_symmetrize(rec, sym_nmax);
            Json rho = Json::array();
            for (const auto& v : ss.rho) rho.push_back(to_json(v));
            FoldConfig cfg;
            cfg.a = rec.a;
            Family fam(spec);
            std::vector<MatPoly> ps;
            for (unsigned n = 0; n <= sym_nmax; ++n) ps.push_back(fold_family(fam, cfg, n));
            const auto mon = make_monic(ps);
            const auto ms = matrix_symmetrize(monic_blocks(blocks_from_banded(bands_for_fold(rec, cfg), sym_nmax + 1), mon.multipliers));
            Json s = Json::array();
            for (const auto& m : ms.s) s.push_back(to_json(m));
            print({{"family", spec.to_string()},
                   {"pivot", to_json(rec.a)},
                   {"scalar", {{"success", ss.success}, {"first_failure", ss.first_failure ? Json(*ss.first_failure) : Json()},
                               {"reason", ss.reason}, {"rho", rho}}},
                   {"matrix", {{"success", ms.success}, {"first_failure", ms.first_failure ? Json(*ms.first_failure) : Json()},
                               {"reason", ms.reason}, {"solution_dimension", ms.solution_dimension}, {"S", s}}}});
        } else if (*gram) {
            const FamilySpec spec = gram_fam.get();
            std::optional<Rational> r;
            if (spec.kind == FamilyKind::KrallLaguerre) r = spec.r;
            else if (spec.kind != FamilyKind::Laguerre)
                throw Error(ErrorCode::ParseError, "gram supports laguerre and krall-laguerre families");
            const auto w = folded_laguerre_weight(gram_n, spec.alpha, r);
            FoldConfig cfg;
            cfg.n = gram_n;
            Family fam(spec);
            std::vector<MatPoly> ps;
            for (unsigned n = 0; n <= gram_top; ++n) ps.push_back(fold_family(fam, cfg, n));
            Json blocks = Json::array();
            bool orthogonal = true;
            for (unsigned m = 0; m <= gram_top; ++m)
                for (unsigned n = 0; n <= gram_top; ++n) {
                    const RatMatrix g = moment_gram(ps[m], ps[n], w);
                    if (m != n && !g.is_zero()) orthogonal = false;
                    blocks.push_back({{"m", m}, {"n", n}, {"G", to_json(g)}});
                }
            print({{"family", spec.to_string()}, {"orthogonal", orthogonal}, {"blocks", blocks}});
        } else if (*run) {
            std::vector<const Scenario*> todo;
            if (run_all) {
                for (const auto& s : scenarios()) todo.push_back(&s);
            } else {
                if (run_name.empty()) throw Error(ErrorCode::ParseError, "give a scenario name or --all");
                todo.push_back(&find_scenario(run_name));
            }
            bool ok = true;
            Json out = Json::array();
            for (const auto* s : todo) {
                const Report rep = s->run();
                ok = ok && rep.pass();
                out.push_back(rep.to_json(!no_timings));
            }
            print(run_all ? out : out.front());
            return ok ? 0 : kFailure;
        } else if (*list) {
            Json out = Json::array();
            for (const auto& s : scenarios())
                out.push_back({{"name", s.name}, {"summary", s.summary}, {"criteria", s.criteria}});
            print(out);
        }
    } catch (const Error& e) {
        std::cerr << Json({{"error", error_name(e.code())}, {"message", e.what()}}).dump() << "\n";
        const bool usage = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownScenario;
        return usage ? kUsage : kFailure;
    }
    return 0;
}
