// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command implementations for the braidkit driver: structural checks
// on R-matrix input, rendered generator actions, and the verification
// suites.  Exit codes: 0 all pass, 1 verified failure, 2 usage or
// parse error.

#pragma once

#include "braidkit/golden.hpp"
#include "braidkit/hopf.hpp"
#include "braidkit/io.hpp"
#include "braidkit/presets.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace braidkit {

struct CliOptions {
    std::string preset = "su2-euclidean";
    std::string rmatrix_file;
    std::string metric_file;
    int degree = 3;
    bool json = false;
    bool conjugate = false;
    bool spinorial = false;
    bool q1 = false;
};

/// Loaded input: either a named preset or a single-matrix file.
struct CliInput {
    std::string source;
    PairData pair;
    std::optional<RMatrixData> small;
};

inline CliInput load_input(const CliOptions& o) {
    CliInput in;
    if (!o.rmatrix_file.empty()) {
        in.source = o.rmatrix_file;
        in.pair = load_pair(o.rmatrix_file);
    } else {
        Preset p = make_preset(o.preset);
        in.source = p.name;
        in.pair = p.pair;
        in.small = p.small;
    }
    if (!o.metric_file.empty()) in.pair.metric = load_metric(o.metric_file);
    return in;
}

namespace detail {

inline void emit(const ReportBundle& bundle, bool as_json, std::ostream& out) {
    if (as_json) {
        out << bundle_to_json(bundle).dump(2) << "\n";
        return;
    }
    for (const auto& r : bundle) out << render_report(r) << "\n";
}

inline bool reality_declared(const PairData& pair) {
    if (pair.reality == RealityType::TypeI) return true;
    return pair.reality == RealityType::TypeII && !pair.involution.empty();
}

inline ReportBundle structural_checks(const CliInput& in) {
    ReportBundle bundle;
    bundle.push_back(check_ybe(in.pair.r));
    bundle.push_back(check_hecke(in.small ? *in.small : in.pair.r));
    if (reality_declared(in.pair)) bundle.push_back(check_reality(in.pair));
    bundle.push_back(check_confluence(build_relations(in.pair.r_prime, Orientation::Space)));
    return bundle;
}

inline GeneratorAction parse_generator(const std::string& s) {
    auto bad = [&] { return std::runtime_error("bad generator spec: " + s + " (want p#, c#, l+#_#, l-#_#, sig, sig^-1)"); };
    GeneratorAction g;
    if (s == "sig") {
        g.kind = GeneratorAction::Kind::Varsigma;
        g.power = 1;
        return g;
    }
    if (s == "sig^-1") {
        g.kind = GeneratorAction::Kind::Varsigma;
        g.power = -1;
        return g;
    }
    try {
        if (s.size() >= 2 && (s[0] == 'p' || s[0] == 'c')) {
            g.kind = s[0] == 'p' ? GeneratorAction::Kind::P : GeneratorAction::Kind::C;
            std::size_t used = 0;
            g.i = std::stoi(s.substr(1), &used);
            if (used + 1 != s.size()) throw bad();
            return g;
        }
        if (s.size() >= 5 && s[0] == 'l' && (s[1] == '+' || s[1] == '-')) {
            g.kind = s[1] == '+' ? GeneratorAction::Kind::Lplus : GeneratorAction::Kind::Lminus;
            std::size_t sep = s.find('_', 2);
            if (sep == std::string::npos) throw bad();
            g.i = std::stoi(s.substr(2, sep - 2));
            g.j = std::stoi(s.substr(sep + 1));
            return g;
        }
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
    throw bad();
}

inline std::string classical_str(const std::map<Word, mpq_class, DeglexLess>& m) {
    if (m.empty()) return "0";
    std::string s;
    for (const auto& [w, co] : m) {
        if (!s.empty()) s += " + ";
        s += "(" + co.get_str() + ")*";
        if (w.empty()) {
            s += "1";
            continue;
        }
        for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "." : "") + ("x" + std::to_string(w[t]));
    }
    return s;
}

/// Representative generators covering every kind for the
/// module-algebra sweep.
inline std::vector<UGen> module_algebra_generators(int n) {
    std::vector<UGen> gs;
    for (int i = 1; i <= n; ++i) gs.push_back(u_p(i));
    for (int i = 1; i <= n; ++i) gs.push_back(u_c(i));
    gs.push_back(u_lp(1, 2));
    gs.push_back(u_lp(2, 2));
    gs.push_back(u_lm(2, 1));
    gs.push_back(u_lm(std::min(3, n), std::min(3, n)));
    gs.push_back(u_sig());
    gs.push_back(u_sig_inv());
    return gs;
}

} // namespace detail

inline int cmd_check(const CliOptions& o, std::ostream& out, std::ostream& err) {
    try {
        CliInput in = load_input(o);
        ReportBundle bundle = detail::structural_checks(in);
        detail::emit(bundle, o.json, out);
        return all_passed(bundle) ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_act(const CliOptions& o, const std::string& gen_spec, const std::string& monomial, std::ostream& out,
                   std::ostream& err) {
    try {
        CliInput in = load_input(o);
        if (o.conjugate && o.spinorial) throw std::runtime_error("--conjugate and --spinorial are exclusive");
        ActionContext ctx = make_context(in.pair, in.small);
        GeneratorAction g = detail::parse_generator(gen_spec);
        NCPoly m = reduce(parse_ncpoly(monomial), ctx.rels);
        NCPoly result;
        if (g.kind == GeneratorAction::Kind::C && o.conjugate) result = act_c_conjugate(ctx, g.i, m);
        else if (g.kind == GeneratorAction::Kind::C && o.spinorial) result = act_c_spinorial(ctx, g.i, m);
        else result = apply(ctx, g, m);
        if (o.q1) out << detail::classical_str(result.eval_q1()) << "\n";
        else out << result.str() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline ReportBundle run_verify_suite(const CliInput& in, const std::string& suite, int degree) {
    ActionContext ctx = make_context(in.pair, in.small);
    bool standard = in.source == "su2-euclidean";
    auto hopf = [&] { return make_hopf(ctx); };
    ReportBundle bundle;
    auto append = [&](ReportBundle more) {
        for (auto& r : more) bundle.push_back(std::move(r));
    };
    if (suite == "relations" || suite == "all") {
        bundle.push_back(check_confluence(ctx.rels));
        if (standard) bundle.push_back(verify_golden_relations(ctx));
        bundle.push_back(verify_cross_relations(ctx, degree));
        bundle.push_back(verify_algebra_relations(hopf(), degree));
        bundle.push_back(verify_conjugate_intertwining(ctx, degree));
        if (standard) bundle.push_back(verify_spinorial(ctx, std::min(degree, 2)));
    }
    if (suite == "module-algebra" || suite == "all") {
        HopfContext h = hopf();
        for (const UGen& g : detail::module_algebra_generators(ctx.n))
            bundle.push_back(verify_module_algebra(h, g, degree));
    }
    if (suite == "metric" || suite == "all") bundle.push_back(verify_metric_scaling(ctx, 3));
    if (suite == "gaussian" || suite == "all") bundle.push_back(verify_gaussian(ctx, 3));
    if (suite == "conjugation" || suite == "all")
        bundle.push_back(verify_conjugation_identity(hopf(), std::min(degree, 2)));
    if (suite == "classical-limit" || suite == "all") {
        if (standard) bundle.push_back(verify_golden_table(ctx));
        bundle.push_back(verify_classical_limit(ctx));
    }
    if (suite == "all") append(detail::structural_checks(in));
    if (bundle.empty()) throw std::runtime_error("unknown suite: " + suite);
    return bundle;
}

inline int cmd_verify(const CliOptions& o, const std::string& suite, std::ostream& out, std::ostream& err) {
    try {
        CliInput in = load_input(o);
        ReportBundle bundle = run_verify_suite(in, suite, o.degree);
        detail::emit(bundle, o.json, out);
        return all_passed(bundle) ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace braidkit
