#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "qheis/json_io.hpp"
#include "qheis/parser.hpp"
#include "qheis/render.hpp"
#include "qheis/rewrite.hpp"
#include "qheis/verify.hpp"

namespace {

using namespace qheis;

// exit statuses: 0 success, 1 nonzero verification verdict, 2 usage,
// 3 parse error, 4 computation error
int g_exit = 0;

struct CommonOpts {
    bool json = false;
    std::string preset;
    std::uint64_t budget = 1'000'000;
    int dim = 3;
    std::string qjk = "symbolic";
    std::string sign = "as-printed";
};

QjkBinding parse_qjk(const std::string& s) {
    if (s == "q") return QjkBinding::ToQ;
    if (s == "table") return QjkBinding::Table;
    if (s == "symbolic") return QjkBinding::Symbolic;
    throw NotFoundError("unknown --qjk value '" + s + "'");
}

SignConvention parse_sign(const std::string& s) {
    if (s == "as-printed") return SignConvention::AsPrinted;
    if (s == "unified") return SignConvention::Unified;
    throw NotFoundError("unknown --sign value '" + s + "'");
}

std::vector<std::string> gather_inputs(const std::vector<std::string>& args) {
    if (!args.empty()) return args;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

void emit_bp_note() {
    if (auto n = bp_degenerate_count(); n > 0)
        std::cerr << "note: " << n
                  << " Bp product(s) collapsed to zero (e_j e_k = 0 for j != k)\n";
}

void print_report(const VerificationReport& rep, bool json) {
    if (json) {
        std::cout << to_json(rep, 2) << "\n";
        return;
    }
    std::cout << "check: " << rep.check << "\n";
    std::cout << "config: " << rep.config << "\n";
    for (const RelationEntry& e : rep.entries) {
        std::cout << "relation: " << e.label << "\n";
        std::cout << "  substitutions:";
        for (size_t i = 0; i < e.substitutions.size(); ++i)
            std::cout << (i ? "; " : " ") << e.substitutions[i];
        std::cout << "\n";
        std::cout << "  residual: " << render(e.residual) << "\n";
        std::cout << "  verdict: " << (e.zero() ? "zero" : "nonzero") << "\n";
    }
}

void run_normalize(const CommonOpts& opt, const std::vector<std::string>& exprs) {
    Presentation p = with_binding(load_presentation(opt.preset), parse_qjk(opt.qjk));
    bp_reset_degenerate_count();
    for (const std::string& text : gather_inputs(exprs)) {
        Expression e = parse_expression(text, opt.dim);
        Expression nf = normalize(e, p, {opt.budget});
        std::cout << (opt.json ? to_json(nf) : render(nf)) << "\n";
    }
    emit_bp_note();
}

void run_check(const CommonOpts& opt, const std::string& lhs, const std::string& rhs) {
    Presentation p = with_binding(load_presentation(opt.preset), parse_qjk(opt.qjk));
    Expression residual = check_identity(parse_expression(lhs, opt.dim),
                                         parse_expression(rhs, opt.dim), p, {opt.budget});
    std::cout << (opt.json ? to_json(residual) : render(residual)) << "\n";
    if (!residual.is_zero()) g_exit = 1;
}

void run_dirac(const CommonOpts& opt, const std::string& side,
               const std::vector<std::string>& funcs, bool cauchy) {
    for (const std::string& text : gather_inputs(funcs)) {
        PolyFunction f = parse_polyfunction(text);
        PolyFunction g = cauchy ? f.cauchy_riemann()
                                : f.dirac(side == "right" ? Side::Right : Side::Left);
        std::cout << (opt.json ? to_json(g) : render(g)) << "\n";
    }
}

void run_diffop(const CommonOpts& opt, int j, int k, const std::vector<std::string>& funcs) {
    bp_reset_degenerate_count();
    for (const std::string& text : gather_inputs(funcs)) {
        PolyFunction f = parse_polyfunction(
            text, Algebra{AlgebraKind::Bp, std::max({opt.dim, j, k})});
        PolyFunction g = f.difference_op(j, k);
        std::cout << (opt.json ? to_json(g) : render(g)) << "\n";
    }
    emit_bp_note();
}

void run_monogenic(const CommonOpts& opt, const std::string& side,
                   const std::vector<std::string>& funcs) {
    for (const std::string& text : gather_inputs(funcs)) {
        PolyFunction f = parse_polyfunction(text);
        auto [mono, witness] = f.is_monogenic(side == "right" ? Side::Right : Side::Left);
        if (opt.json) {
            std::cout << "{\"monogenic\":" << (mono ? "true" : "false")
                      << ",\"witness\":" << to_json(witness) << "}\n";
        } else {
            std::cout << "monogenic: " << (mono ? "true" : "false")
                      << "  witness: " << render(witness) << "\n";
        }
    }
}

void run_detq(const CommonOpts& opt, const std::vector<std::string>& entries) {
    Expression det;
    if (entries.empty()) {
        det = quantum_det();
    } else if (entries.size() == 4) {
        det = quantum_det(parse_expression(entries[0], opt.dim),
                          parse_expression(entries[1], opt.dim),
                          parse_expression(entries[2], opt.dim),
                          parse_expression(entries[3], opt.dim));
    } else {
        throw NotFoundError("detq takes either no entries or exactly four");
    }
    std::cout << (opt.json ? to_json(det) : render(det)) << "\n";
}

void run_plane_relations(const CommonOpts& opt) {
    auto rels = derive_plane_relations();
    if (opt.json) {
        std::cout << "[";
        for (size_t i = 0; i < rels.size(); ++i) std::cout << (i ? "," : "") << to_json(rels[i]);
        std::cout << "]\n";
    } else {
        for (const Expression& r : rels) std::cout << render(r) << "\n";
    }
}

void run_verify(const CommonOpts& opt, const std::string& which) {
    VerifyConfig cfg{parse_qjk(opt.qjk), parse_sign(opt.sign)};
    std::vector<VerificationReport> reports;
    if (which == "lemma-f1") {
        reports.push_back(verify_lemma_f1(cfg));
    } else if (which == "prop-nonmonogenic") {
        reports.push_back(verify_prop_nonmonogenic());
    } else if (which == "theorem-monogenic") {
        reports.push_back(verify_theorem_monogenic());
    } else if (which == "prop-bold") {
        reports.push_back(verify_prop_bold());
    } else if (which == "all") {
        reports.push_back(verify_lemma_f1(cfg));
        reports.push_back(verify_prop_nonmonogenic());
        reports.push_back(verify_theorem_monogenic());
        reports.push_back(verify_prop_bold());
    } else {
        throw NotFoundError("unknown check '" + which +
                            "' (expected lemma-f1, prop-nonmonogenic, theorem-monogenic, "
                            "prop-bold, or all)");
    }
    for (size_t i = 0; i < reports.size(); ++i) {
        if (i && !opt.json) std::cout << "\n";
        print_report(reports[i], opt.json);
        if (!reports[i].all_zero()) g_exit = 1;
    }
}

void run_critical_pairs(const CommonOpts& opt, int max_index) {
    Presentation p = with_binding(load_presentation(opt.preset), parse_qjk(opt.qjk));
    auto pairs = critical_pairs(p, max_index, {opt.budget});
    bool nonzero = false;
    for (const CriticalPair& cp : pairs) {
        std::cout << "overlap: " << render(cp.overlap) << "\n";
        std::cout << "  rules: " << cp.rule_a << ", " << cp.rule_b << "\n";
        std::cout << "  residual: " << render(cp.residual) << "\n";
        nonzero = nonzero || !cp.residual.is_zero();
    }
    std::cout << "pairs: " << pairs.size() << "\n";
    if (nonzero) g_exit = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic kernel for deformed Heisenberg algebras on the twofold "
                 "tensor space, with Clifford calculus and relation verification"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::vector<std::string> exprs;
    std::string lhs, rhs, side = "left", which;
    int j = 1, k = 2, max_index = 3;

    auto add_common = [&](CLI::App* cmd, bool with_preset) {
        cmd->add_flag("--json", opt.json, "emit JSON instead of text");
        cmd->add_option("--budget", opt.budget, "rule-application budget");
        cmd->add_option("--dim", opt.dim, "blade dimension bound for parsing");
        cmd->add_option("--qjk", opt.qjk, "q_{jk} binding: q, table, or symbolic");
        if (with_preset)
            cmd->add_option("--preset", opt.preset, "builtin preset name or file path")
                ->required();
    };

    CLI::App* c_norm = app.add_subcommand("normalize", "rewrite expressions to normal form");
    add_common(c_norm, true);
    c_norm->add_option("expr", exprs, "expressions (or standard input, one per line)");
    c_norm->callback([&] { run_normalize(opt, exprs); });

    CLI::App* c_check = app.add_subcommand("check", "residual of a claimed identity");
    add_common(c_check, true);
    c_check->add_option("lhs", lhs, "left-hand side")->required();
    c_check->add_option("rhs", rhs, "right-hand side")->required();
    c_check->callback([&] { run_check(opt, lhs, rhs); });

    CLI::App* c_dirac = app.add_subcommand("dirac", "apply the Dirac operator");
    add_common(c_dirac, false);
    c_dirac->add_option("--side", side, "left or right");
    c_dirac->add_option("func", exprs, "polynomial functions");
    c_dirac->callback([&] { run_dirac(opt, side, exprs, false); });

    CLI::App* c_cr = app.add_subcommand("cr", "apply the Cauchy-Riemann operator");
    add_common(c_cr, false);
    c_cr->add_option("func", exprs, "polynomial functions");
    c_cr->callback([&] { run_dirac(opt, side, exprs, true); });

    CLI::App* c_diff = app.add_subcommand("diffop", "apply the difference operator over Bp");
    add_common(c_diff, false);
    c_diff->add_option("--j", j, "first index")->required();
    c_diff->add_option("--k", k, "second index")->required();
    c_diff->add_option("func", exprs, "polynomial functions");
    c_diff->callback([&] { run_diffop(opt, j, k, exprs); });

    CLI::App* c_mono = app.add_subcommand("monogenic", "test Df = 0");
    add_common(c_mono, false);
    c_mono->add_option("--side", side, "left or right");
    c_mono->add_option("func", exprs, "polynomial functions");
    c_mono->callback([&] { run_monogenic(opt, side, exprs); });

    CLI::App* c_det = app.add_subcommand("detq", "quantum determinant a d - q (c b)");
    add_common(c_det, false);
    c_det->add_option("entries", exprs, "optional entries a b c d");
    c_det->callback([&] { run_detq(opt, exprs); });

    CLI::App* c_plane = app.add_subcommand(
        "plane-relations", "entry relations forced by the plane condition");
    add_common(c_plane, false);
    c_plane->callback([&] { run_plane_relations(opt); });

    CLI::App* c_verify = app.add_subcommand("verify", "replay a derivation check");
    add_common(c_verify, false);
    c_verify->add_option("--sign", opt.sign, "as-printed or unified");
    c_verify
        ->add_option("check", which,
                     "lemma-f1, prop-nonmonogenic, theorem-monogenic, prop-bold, or all")
        ->required();
    c_verify->callback([&] { run_verify(opt, which); });

    CLI::App* c_cp = app.add_subcommand("critical-pairs", "local-confluence probe");
    add_common(c_cp, true);
    c_cp->add_option("--max-index", max_index, "index bound (<= 4)");
    c_cp->callback([&] { run_critical_pairs(opt, max_index); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const qheis::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const NotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return g_exit;
}
