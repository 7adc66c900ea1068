// detlink: exact determinantal-linkage and log-canonical-threshold toolkit.
//
//   detlink lct-det --spec 3 2 2
//   detlink lct-monomial --ideal "x1^2*x2, x3^3" --vars x1 x2 x3
//   detlink link --spec 3 2 2 --check-double
//   detlink ord --spec 4 3 3 --stage 1 --mode specialized
//   detlink gb --ideal "x*y - 1, y^2 - 1" --vars x y --order lex
//   detlink quotient --ideal "x^2, x*y" --by "x" --vars x y
//   detlink verify theorem1 --max 30 --format json
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource limit.
#include <CLI11.hpp>
#include <iostream>

#include "detlink/cli.hpp"

using namespace detlink;

int main(int argc, char** argv) {
    CLI::App app{"exact determinantal linkage / log canonical threshold toolkit"};
    app.require_subcommand(1);

    cli::CommandRequest req;
    std::string format = "text";
    std::string mode = "full";
    std::vector<int> spec_args;
    long long codim_arg = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: text | json");
        sub->add_option("--max-steps", req.max_steps, "basis engine reduction-step limit");
    };
    auto add_spec = [&](CLI::App* sub, bool required = false) {
        auto* o = sub->add_option("--spec", spec_args, "matrix spec: m n r")->expected(3);
        if (required) o->required();
    };
    auto add_ideal = [&](CLI::App* sub) {
        sub->add_option("--ideal", req.ideal_text, "inline comma-separated generators");
        sub->add_option("--vars", req.vars, "variable names for --ideal")->delimiter(',');
        sub->add_option("--ideal-file", req.ideal_file, "ideal file with a vars: header");
    };
    auto add_link_flags = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "link mode: full | specialized");
        sub->add_option("--seed", req.seeds, "specialized-mode seeds (default 0 1 2)");
        sub->add_option("--bound", req.coeff_bound, "specialized coefficient bound");
        sub->add_option("--budget-vars", req.budget_vars, "full-generic variable budget");
        sub->add_flag("--force", req.override_budget, "override the variable budget");
    };

    auto* lct_det = app.add_subcommand("lct-det", "closed-form determinantal threshold");
    add_spec(lct_det, true);
    add_common(lct_det);

    auto* lct_mon = app.add_subcommand("lct-monomial", "Newton-polyhedron LP threshold");
    add_ideal(lct_mon);
    add_common(lct_mon);

    auto* link = app.add_subcommand("link", "construct a generic link");
    add_spec(link);
    add_ideal(link);
    add_link_flags(link);
    link->add_option("--codim", codim_arg, "codimension override for --ideal input");
    link->add_flag("--check-double", req.check_double, "also verify the double-link symmetry");
    add_common(link);

    auto* ord = app.add_subcommand("ord", "orders along divisors");
    add_spec(ord);
    ord->add_option("--stage", [&req](const std::vector<std::string>& v) {
        req.stage = std::stoi(v[0]);
        return true;
    }, "resolution stage index")->type_name("INT");
    add_ideal(ord);
    ord->add_option("--block", req.block, "variable names of the block divisor")->delimiter(',');
    add_link_flags(ord);
    add_common(ord);

    auto* gb = app.add_subcommand("gb", "reduced basis of an ideal");
    add_ideal(gb);
    gb->add_option("--order", req.order_name, "monomial order: grevlex | lex");
    add_common(gb);

    auto* quot = app.add_subcommand("quotient", "colon ideal I : J");
    add_ideal(quot);
    quot->add_option("--by", req.by_text, "generators of the divisor ideal J")->required();
    add_common(quot);

    auto* verify = app.add_subcommand("verify", "run a verifier");
    verify->add_option("target", req.verify_target,
                       "qibound | theorem1 | gendegree | corollary | monomial-examples | worked-example")
        ->required();
    verify->add_option("--max", req.max_m, "sweep bound for m");
    add_spec(verify);
    add_link_flags(verify);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (lct_det->parsed())
            req.sub = cli::Subcommand::LctDet;
        else if (lct_mon->parsed())
            req.sub = cli::Subcommand::LctMonomial;
        else if (link->parsed())
            req.sub = cli::Subcommand::Link;
        else if (ord->parsed())
            req.sub = cli::Subcommand::Ord;
        else if (gb->parsed())
            req.sub = cli::Subcommand::Gb;
        else if (quot->parsed())
            req.sub = cli::Subcommand::Quotient;
        else
            req.sub = cli::Subcommand::Verify;

        if (!spec_args.empty()) {
            if (spec_args.size() != 3) throw cli::UsageError("--spec expects exactly m n r");
            req.spec = {spec_args[0], spec_args[1], spec_args[2]};
        }
        if (codim_arg > 0) req.codim = codim_arg;
        if (format == "text")
            req.format = cli::OutputFormat::Text;
        else if (format == "json")
            req.format = cli::OutputFormat::Json;
        else
            throw cli::UsageError("unknown --format \"" + format + "\"");
        if (mode == "full")
            req.mode = LinkMode::FullGeneric;
        else if (mode == "specialized")
            req.mode = LinkMode::Specialized;
        else
            throw cli::UsageError("unknown --mode \"" + mode + "\"");
        if (req.seeds.empty()) req.seeds = {0, 1, 2};

        cli::RunReport rep = cli::run(req);
        if (req.format == cli::OutputFormat::Json)
            std::cout << cli::report_to_json(rep).dump(2) << "\n";
        else
            std::cout << rep.text;
        return rep.exit_code;
    } catch (const cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
