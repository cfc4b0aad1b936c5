// Command-line front end: load a graded representation (builtin name or
// JSON document), validate it, run the mapping-torus recursion and/or the
// Koszul-complex engine, and print deterministic reports.
//
// Exit codes: 0 success (and crosscheck agreement), 1 I/O or parse failure,
// 2 validation failure (including non-unimodular / non-hyperbolic fuchsian
// input), 3 broken internal invariant (including engine disagreement).

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eqcohom/builtins.hpp"
#include "eqcohom/errors.hpp"
#include "eqcohom/graded_rep.hpp"
#include "eqcohom/json_io.hpp"
#include "eqcohom/koszul.hpp"
#include "eqcohom/mapping_torus.hpp"
#include "eqcohom/moebius.hpp"
#include "eqcohom/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

enum class Engine { recurse, koszul, both };

struct EngineOptions {
    std::string source;
    std::size_t degree = 0;
    bool has_degree = false;
    bool stages = false;
    std::size_t max_order = 24;
    std::string emit_json;
};

std::optional<std::size_t> only_degree(const EngineOptions& opts) {
    if (opts.has_degree) return opts.degree;
    return std::nullopt;
}

void emit_json_if_requested(const EngineOptions& opts,
                            const eqcohom::GradedRep& rep) {
    if (opts.emit_json.empty()) return;
    std::ofstream out(opts.emit_json, std::ios::binary);
    if (!out) {
        throw eqcohom::ParseError("cannot write file: " + opts.emit_json);
    }
    out << eqcohom::render_rep_document(rep);
    if (!out) {
        throw eqcohom::ParseError("cannot write file: " + opts.emit_json);
    }
}

// Load + validate; on violations print them and report exit 2 through rc.
std::optional<eqcohom::GradedRep> load_validated(const EngineOptions& opts,
                                                 int& rc) {
    eqcohom::GradedRep rep = eqcohom::load_rep(opts.source);
    const eqcohom::ValidationReport report =
        eqcohom::validate(rep, opts.max_order);
    if (!report.ok()) {
        std::cout << eqcohom::render_validation_report(opts.source, rep,
                                                       report);
        rc = kExitValidation;
        return std::nullopt;
    }
    for (const std::string& w : report.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    emit_json_if_requested(opts, rep);
    return rep;
}

int run_validate(const EngineOptions& opts) {
    eqcohom::GradedRep rep = eqcohom::load_rep(opts.source);
    const eqcohom::ValidationReport report =
        eqcohom::validate(rep, opts.max_order);
    std::cout << eqcohom::render_validation_report(opts.source, rep, report);
    if (!report.ok()) return kExitValidation;
    emit_json_if_requested(opts, rep);
    return kExitOk;
}

int run_engine(Engine engine, const EngineOptions& opts) {
    int rc = kExitOk;
    const auto rep = load_validated(opts, rc);
    if (!rep) return rc;

    switch (engine) {
        case Engine::recurse: {
            const eqcohom::RecursionResult result = eqcohom::recurse(*rep);
            std::cout << eqcohom::render_recurse_report(
                *rep, result, opts.stages, only_degree(opts));
            return kExitOk;
        }
        case Engine::koszul: {
            const eqcohom::BettiBreakdown breakdown =
                eqcohom::borel_total(*rep);
            std::cout << eqcohom::render_koszul_report(breakdown,
                                                       only_degree(opts));
            return kExitOk;
        }
        case Engine::both:
            break;
    }

    const eqcohom::RecursionResult result = eqcohom::recurse(*rep);
    const eqcohom::BettiBreakdown breakdown = eqcohom::borel_total(*rep);
    if (opts.stages) {
        std::cout << eqcohom::render_recurse_report(*rep, result,
                                                    /*show_stages=*/true,
                                                    only_degree(opts));
    }
    std::cout << eqcohom::render_crosscheck_report(result, breakdown,
                                                   only_degree(opts));
    return eqcohom::betti_totals_agree(result.betti, breakdown.totals)
               ? kExitOk
               : kExitInternal;
}

int run_fuchsian(const std::string& a, const std::string& b,
                 const std::string& c, const std::string& d) {
    const eqcohom::MoebiusMatrix m(
        eqcohom::parse_rational(a), eqcohom::parse_rational(b),
        eqcohom::parse_rational(c), eqcohom::parse_rational(d));
    if (!eqcohom::is_hyperbolic(m)) {
        throw eqcohom::NotHyperbolic("trace " + eqcohom::to_string(m.trace()) +
                                     " needs |trace| > 2");
    }
    std::cout << eqcohom::render_fuchsian_report(m);
    return kExitOk;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const eqcohom::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const eqcohom::NotUnimodular& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitValidation;
    } catch (const eqcohom::NotHyperbolic& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

void add_source_option(CLI::App* cmd, EngineOptions& opts) {
    cmd->add_option("source", opts.source,
                    "builtin name (f8-z3, point-zN, circle-rot) or path to a "
                    "JSON document")
        ->required();
}

void add_report_options(CLI::App* cmd, EngineOptions& opts) {
    auto* degree =
        cmd->add_option("--degree", opts.degree,
                        "restrict the report to one total degree");
    cmd->parse_complete_callback(
        [&opts, degree] { opts.has_degree = degree->count() > 0; });
    cmd->add_option("--emit-json", opts.emit_json,
                    "write the parsed document back out as canonical JSON");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact Betti numbers of spaces carrying commuting integer "
        "symmetries, computed two independent ways"};
    app.require_subcommand(1);

    EngineOptions opts;
    std::string engine_name = "both";
    std::string fa, fb, fc, fd;
    int rc = kExitOk;

    auto* validate_cmd = app.add_subcommand(
        "validate",
        "check operator count, shapes, invertibility, commutation, and the "
        "connected claim");
    add_source_option(validate_cmd, opts);
    validate_cmd->add_option("--max-order", opts.max_order,
                             "warn when an operator has no order up to N");
    validate_cmd->add_option("--emit-json", opts.emit_json,
                             "write the parsed document back out as "
                             "canonical JSON");
    validate_cmd->callback(
        [&] { rc = guarded([&] { return run_validate(opts); }); });

    auto* recurse_cmd = app.add_subcommand(
        "recurse",
        "Betti totals via the iterated mapping-torus splitting, one "
        "operator at a time");
    add_source_option(recurse_cmd, opts);
    add_report_options(recurse_cmd, opts);
    recurse_cmd->add_flag("--stages", opts.stages,
                          "print the dimensions of every intermediate stage");
    recurse_cmd->callback([&] {
        rc = guarded([&] { return run_engine(Engine::recurse, opts); });
    });

    auto* koszul_cmd = app.add_subcommand(
        "koszul",
        "Betti totals via the Koszul complex of the commuting operators, "
        "with the per-(p,q) breakdown");
    add_source_option(koszul_cmd, opts);
    add_report_options(koszul_cmd, opts);
    koszul_cmd->callback([&] {
        rc = guarded([&] { return run_engine(Engine::koszul, opts); });
    });

    auto* crosscheck_cmd = app.add_subcommand(
        "crosscheck",
        "run both engines and compare totals degree by degree (exit 0 only "
        "on agreement)");
    add_source_option(crosscheck_cmd, opts);
    add_report_options(crosscheck_cmd, opts);
    crosscheck_cmd->add_flag("--stages", opts.stages,
                             "also print the recursion stage dimensions");
    crosscheck_cmd->callback([&] {
        rc = guarded([&] { return run_engine(Engine::both, opts); });
    });

    auto* compute_cmd = app.add_subcommand(
        "compute", "run one or both engines, selected with --engine");
    add_source_option(compute_cmd, opts);
    add_report_options(compute_cmd, opts);
    compute_cmd
        ->add_option("--engine", engine_name,
                     "recurse, koszul, or both (both cross-checks)")
        ->check(CLI::IsMember({"recurse", "koszul", "both"}));
    compute_cmd->add_flag("--stages", opts.stages,
                          "print recursion stage dimensions (recurse/both)");
    compute_cmd->callback([&] {
        rc = guarded([&] {
            if (engine_name == "recurse") {
                return run_engine(Engine::recurse, opts);
            }
            if (engine_name == "koszul") {
                return run_engine(Engine::koszul, opts);
            }
            return run_engine(Engine::both, opts);
        });
    });

    auto* fuchsian_cmd = app.add_subcommand(
        "fuchsian",
        "fixed points and derivatives of the hyperbolic map z -> "
        "(az+b)/(cz+d), given rationals with ad-bc=1");
    fuchsian_cmd->add_option("a", fa, "rational")->required();
    fuchsian_cmd->add_option("b", fb, "rational")->required();
    fuchsian_cmd->add_option("c", fc, "rational")->required();
    fuchsian_cmd->add_option("d", fd, "rational")->required();
    fuchsian_cmd->callback([&] {
        rc = guarded([&] { return run_fuchsian(fa, fb, fc, fd); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }
    return rc;
}
