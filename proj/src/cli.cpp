#include "qlie/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qlie/duality.hpp"
#include "qlie/errors.hpp"
#include "qlie/hopf.hpp"
#include "qlie/specfile.hpp"

namespace qlie {

namespace {

struct Options {
    std::string input;
    std::string output;
    int order = 4;
    int hcap = 3;
    std::string show = "relations";
    std::string suite = "all";
    std::string left;
    std::string right;
    bool json = false;
};

class CommandError : public std::runtime_error {
public:
    CommandError(int code, const std::string &msg) : std::runtime_error(msg), code(code) {}
    int code;
};

void append_element(Report &rep, const std::string &head, const std::vector<std::string> &lines)
{
    rep.output.push_back(head);
    if (lines.empty())
        rep.output.push_back("  0");
    for (auto &l : lines)
        rep.output.push_back("  " + l);
}

void run_validate(const SpecFile &f, Report &rep)
{
    rep.add(validate_bialgebra(f.spec), "validate");
}

void run_quantize(const SpecFile &f, const Options &o, Report &rep)
{
    HopfContext ctx(build_algebra(f.spec, o.order));
    const auto &alg = *ctx.alg;
    const bool all = o.show == "all";
    if (all || o.show == "relations")
        for (auto &l : ctx.q->relation_lines())
            rep.output.push_back(l);
    if (all || o.show == "coproduct") {
        for (std::size_t mu = 0; mu < alg.dim_v(); ++mu)
            append_element(rep, "Delta(" + alg.names().x[mu] + ") =", ctx.delta_x[mu].lines());
        for (std::size_t i = 0; i < alg.dim_h(); ++i)
            append_element(rep, "Delta(" + alg.names().h[i] + ") =", ctx.delta_h[i].lines());
    }
    if (all || o.show == "antipode") {
        for (std::size_t mu = 0; mu < alg.dim_v(); ++mu)
            append_element(rep, "S(" + alg.names().x[mu] + ") =", ctx.antipode_x[mu].lines());
        for (std::size_t i = 0; i < alg.dim_h(); ++i)
            append_element(rep, "S(" + alg.names().h[i] + ") =", ctx.antipode_h[i].lines());
    }
}

// R-matrix checks for a context; CYBE refusal is reported as a failed check.
void r_checks(const HopfContext &ctx, const ClassicalRMatrix &r, const std::string &scope, Report &rep,
              TensorElement *R_out = nullptr)
{
    ValidationReport cybe = check_cybe(ctx.q->spec, r);
    rep.add(cybe, scope);
    if (!cybe.pass())
        return;
    TensorElement R = build_r_matrix(ctx, r);
    rep.add(check_qybe(ctx, R), scope);
    rep.add(check_quasitriangular(ctx, R), scope);
    if (R_out)
        *R_out = R;
}

void run_check(const SpecFile &f, const Options &o, Report &rep)
{
    const std::string &s = o.suite;
    static const char *suites[] = {"hopf", "double", "canonical", "rmatrix", "all"};
    if (std::find(std::begin(suites), std::end(suites), s) == std::end(suites))
        throw CommandError(kExitParse, "unknown suite '" + s + "'");
    ValidationReport valid = validate_bialgebra(f.spec);
    rep.add(valid, "validate");
    if (!valid.pass())
        return;
    const bool all = s == "all";
    const int cap = std::min(3, o.order);

    if (all || s == "hopf") {
        HopfContext ctx(build_algebra(f.spec, o.order));
        rep.add(check_hopf_suite(ctx, o.hcap), "hopf");
        rep.add(check_hopf_morphism(ctx, ctx, MorphismSpec::identity(f.spec.dim_h, f.spec.dim_v), o.hcap),
                "hopf");
    }
    if (all || s == "double") {
        HopfContext dbl = quantum_double(f.spec, o.order);
        rep.add(check_hopf_suite(dbl, o.hcap), "double");
        rep.add(verify_double_cross_relations(f.spec, o.order), "double");
    }
    if (all || s == "canonical") {
        PairingContext pc(f.spec, o.order);
        rep.add(verify_canonical(pc, cap), "canonical");
        rep.add(check_pairing_factorization(pc, cap), "canonical");
        rep.add(check_pairing_laws(pc, cap), "canonical");
    }
    if (all || s == "rmatrix") {
        if (f.r) {
            HopfContext ctx(build_algebra(f.spec, o.order));
            r_checks(ctx, *f.r, "rmatrix", rep);
        }
        HopfContext dbl = quantum_double(f.spec, o.order);
        r_checks(dbl, double_canonical_r(f.spec), "double-rmatrix", rep);
        rep.add(compare_double_r_with_t(f.spec, o.order), "double-rmatrix");
    }
}

void run_rmatrix(const SpecFile &f, const Options &o, Report &rep)
{
    if (!f.r)
        throw CommandError(kExitParse, "rmatrix needs an [r] section");
    HopfContext ctx(build_algebra(f.spec, o.order));
    TensorElement R;
    r_checks(ctx, *f.r, "rmatrix", rep, &R);
    if (R.arity() == 2)
        append_element(rep, "R =", R.lines());
}

std::vector<Generator> parse_word(const std::string &text, char x_letter, char h_letter)
{
    std::vector<Generator> word;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        long idx = -1;
        if (tok.size() >= 2 && std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
            tok.size() < 10)
            idx = std::stol(tok.substr(1));
        if (idx < 0 || (tok[0] != x_letter && tok[0] != h_letter))
            throw CommandError(kExitParse, "unknown generator symbol '" + tok + "'");
        word.push_back({tok[0] == x_letter ? Generator::Kind::X : Generator::Kind::H, static_cast<std::size_t>(idx)});
    }
    return word;
}

void run_pair(const SpecFile &f, const Options &o, Report &rep)
{
    auto left = parse_word(o.left, 'e', 'z');
    auto right = parse_word(o.right, 'X', 'H');
    const int order = std::max({o.order, static_cast<int>(left.size()), static_cast<int>(right.size())});
    rep.order = order;
    PairingContext pc(f.spec, order);
    auto check_range = [](const std::vector<Generator> &w, const PBWAlgebra &alg, char xl, char hl) {
        for (auto &g : w) {
            bool x = g.kind == Generator::Kind::X;
            if (g.index >= (x ? alg.dim_v() : alg.dim_h()))
                throw CommandError(kExitParse,
                                   std::string("unknown generator symbol '") + (x ? xl : hl) + std::to_string(g.index) + "'");
        }
    };
    check_range(left, *pc.dual.alg, 'e', 'z');
    check_range(right, *pc.primal.alg, 'X', 'H');
    PBWElement fl = normal_order(pc.dual.alg, left), ur = normal_order(pc.primal.alg, right);
    rep.output.push_back("<" + o.left + ", " + o.right + "> = " + to_string(pair(pc, fl, ur)));
}

} // namespace

CommandResult run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CommandResult res;
    Report &rep = res.report;
    Options o;

    CLI::App app{"Quantization of inhomogeneous Lie bialgebras", "qlie"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("-i,--input", o.input, "bialgebra file")->required();
        sub->add_flag("--json", o.json, "machine-readable report");
    };
    auto add_order = [&](CLI::App *sub) {
        sub->add_option("--order", o.order, "truncation order N")->check(CLI::Range(0, 12));
    };
    auto *validate = app.add_subcommand("validate", "check the bialgebra axioms");
    add_common(validate);
    auto *quantize = app.add_subcommand("quantize", "print relations, coproduct, antipode");
    add_common(quantize);
    add_order(quantize);
    quantize->add_option("--show", o.show)->check(CLI::IsMember({"relations", "coproduct", "antipode", "all"}));
    auto *check = app.add_subcommand("check", "run verification suites");
    add_common(check);
    add_order(check);
    check->add_option("--hcap", o.hcap, "H-degree cap of basis scans")->check(CLI::Range(0, 8));
    check->add_option("--suite", o.suite);
    auto *dualize_cmd = app.add_subcommand("dualize", "write the dual bialgebra");
    add_common(dualize_cmd);
    dualize_cmd->add_option("-o,--output", o.output)->required();
    auto *double_cmd = app.add_subcommand("double", "write the classical double");
    add_common(double_cmd);
    double_cmd->add_option("-o,--output", o.output)->required();
    auto *rmatrix = app.add_subcommand("rmatrix", "build R from the [r] section");
    add_common(rmatrix);
    add_order(rmatrix);
    auto *pair_cmd = app.add_subcommand("pair", "evaluate the Hopf pairing");
    add_common(pair_cmd);
    add_order(pair_cmd);
    pair_cmd->add_option("--left", o.left, "word in z<i>, e<i>")->required();
    pair_cmd->add_option("--right", o.right, "word in X<i>, H<i>")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        res.exit_code = app.exit(e, out, err) == 0 ? kExitPass : kExitParse;
        rep.status = res.exit_code == kExitPass ? "pass" : "error";
        rep.message = e.what();
        return res;
    }

    CLI::App *sub = app.get_subcommands().front();
    rep.command = sub->get_name();
    rep.order = o.order;
    rep.hcap = o.hcap;
    auto start = std::chrono::steady_clock::now();
    try {
        SpecFile f = parse_spec_file(o.input);
        if (rep.command == "validate")
            run_validate(f, rep);
        else if (rep.command == "quantize")
            run_quantize(f, o, rep);
        else if (rep.command == "check")
            run_check(f, o, rep);
        else if (rep.command == "dualize" || rep.command == "double") {
            SpecFile g;
            g.spec = rep.command == "dualize" ? dualize(f.spec) : classical_double(f.spec);
            write_spec_file(o.output, g);
            rep.output.push_back("wrote " + o.output);
        } else if (rep.command == "rmatrix")
            run_rmatrix(f, o, rep);
        else if (rep.command == "pair")
            run_pair(f, o, rep);
        res.exit_code = rep.pass() ? kExitPass : kExitFail;
        for (auto &c : rep.checks)
            if (!c.pass && c.name.ends_with("canonical-nondegenerate"))
                res.exit_code = kExitInternal;
    } catch (const SpecParseError &e) {
        res.exit_code = kExitParse;
        rep.message = e.what();
    } catch (const CommandError &e) {
        res.exit_code = e.code;
        rep.message = e.what();
    } catch (const ValidationError &e) {
        res.exit_code = kExitFail;
        rep.message = e.what();
    } catch (const StructuralError &e) {
        res.exit_code = kExitParse;
        rep.message = e.what();
    } catch (const std::exception &e) {
        res.exit_code = kExitInternal;
        rep.message = std::string("internal fault: ") + e.what();
    }
    if (!rep.message.empty()) {
        rep.status = res.exit_code == kExitFail ? "fail" : "error";
        err << "qlie " << rep.command << ": " << rep.message << "\n";
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (o.json ? rep.to_json() + "\n" : rep.to_text());
    return res;
}

} // namespace qlie
