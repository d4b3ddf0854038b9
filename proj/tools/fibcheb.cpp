// Command-line front end: table, verify, integrate, eval.

#include "fibcheb/runner.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

int main(int argc, char** argv) {
    using namespace fibcheb;

    CLI::App app{"Exact Fibonacci/Chebyshev connection coefficients and identity checks"};
    app.require_subcommand(1);

    RunConfig config;
    config.workers = default_workers();
    app.add_option("--jmax-cap", config.jmax_cap, "Upper bound accepted for any index")->capture_default_str();

    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};

    auto* table = app.add_subcommand("table", "Connection coefficient rows (j, m, target, coefficient)");
    std::string direction = "t-in-f";
    table->add_option("--direction", direction, "t-in-f | u-in-f | f-in-t | f-in-u")
        ->check(CLI::IsMember({"t-in-f", "u-in-f", "f-in-t", "f-in-u"}));
    table->add_option("--jmax", config.jmax, "Largest source index")->required();
    OutputFormat table_format = OutputFormat::Csv;
    table->add_option("--format", table_format, "json | csv")->transform(CLI::CheckedTransformer(formats));

    auto* verify = app.add_subcommand("verify", "Exact verification sweep; exit 1 on any Fail");
    std::vector<std::string> suites{"all"};
    verify->add_option("--suite", suites, "all | cor51 | cor52 | complex | chain | laurent | trig | integrals | connection | hypergeom")
        ->delimiter(',');
    verify->add_option("--jmax", config.jmax, "Largest j (or n) in the sweep")->capture_default_str();
    verify->add_option("--qmax", config.qmax, "Largest derivative order")->capture_default_str();
    OutputFormat verify_format = OutputFormat::Text;
    verify->add_option("--format", verify_format, "json | text")->transform(CLI::CheckedTransformer(formats));
    verify->add_option("--workers", config.workers, "Worker threads (default: FIBCHEB_WORKERS or hardware concurrency)");

    auto* integrate = app.add_subcommand("integrate", "One weighted integral as an exact multiple of pi");
    integrate->add_option("--kind", config.integral_kind, "ft | fu | ff1 | ff2")->required();
    integrate->add_option("--j", config.j)->required();
    integrate->add_option("--k", config.k)->required();
    bool interpret_dm = false;
    integrate->add_flag("--interpret-dm", interpret_dm, "Read the undefined d_m of the ff1 formula as c_{k-2m}");
    OutputFormat integrate_format = OutputFormat::Text;
    integrate->add_option("--format", integrate_format, "json | text")->transform(CLI::CheckedTransformer(formats));

    auto* eval = app.add_subcommand("eval", "Terminating 2F1(a, b; c; z) with rational arguments");
    std::vector<std::string> positional;
    eval->add_option("--a", config.eval_args[0]);
    eval->add_option("--b", config.eval_args[1]);
    eval->add_option("--c", config.eval_args[2]);
    eval->add_option("--z", config.eval_args[3]);
    eval->add_option("args", positional, "a b c z")->expected(0, 4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*table) {
        config.subcommand = Subcommand::Table;
        config.direction = parse_direction(direction);
        config.format = table_format;
    } else if (*verify) {
        config.subcommand = Subcommand::Verify;
        config.suites = suites;
        config.format = verify_format;
    } else if (*integrate) {
        config.subcommand = Subcommand::Integrate;
        config.format = integrate_format;
        if (interpret_dm) config.dm = DmInterpretation::NormalizerK;
    } else {
        config.subcommand = Subcommand::Eval;
        if (!positional.empty()) {
            if (positional.size() != 4) {
                std::cerr << "error: eval takes exactly four values a b c z\n";
                return 2;
            }
            std::copy(positional.begin(), positional.end(), config.eval_args.begin());
        }
        for (const auto& a : config.eval_args) {
            if (a.empty()) {
                std::cerr << "error: eval needs a, b, c and z\n";
                return 2;
            }
        }
    }
    return run(config, std::cout, std::cerr);
}
