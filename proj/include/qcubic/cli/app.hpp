#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcubic/cli/commands.hpp"

namespace qcubic::cli {

/// Parses arguments, runs one subcommand and maps failures to exit codes.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"qcubic: third moment of quadratic L-functions, verification and experiments"};
    app.name("qcubic");
    app.set_version_flag("--version", std::string(qcubic::version));
    app.require_subcommand(1);

    RunConfig flags;
    std::string config_path, fault;
    std::uint64_t lo = 0, hi = 0;

    auto* o_prec = app.add_option("--precision", flags.precision_digits, "working precision in decimal digits");
    auto* o_pl = app.add_option("--prime-limit", flags.prime_limit, "largest prime in the explicit Euler product");
    auto* o_to = app.add_option("--tail-order", flags.tail_order, "order J of the log-series tail");
    auto* o_xmin = app.add_option("--x-min", flags.x_min, "smallest x of the scan grid");
    auto* o_xmax = app.add_option("--x-max", flags.x_max, "largest x of the scan grid");
    auto* o_xpts = app.add_option("--x-points", flags.x_points, "number of geometric grid points");
    auto* o_sh = app.add_option("--shards", flags.shards, "shards / worker threads");
    auto* o_seed = app.add_option("--seed", flags.seed, "random seed");
    auto* o_out = app.add_option("--out", flags.output_dir, "output directory");
    auto* o_lp = app.add_option("--lemma-primes", flags.lemma_prime_max, "lemma bounds for odd primes up to this");
    auto* o_ls = app.add_option("--lemma-samples", flags.lemma_samples, "disk samples per prime");
    app.add_option("--config", config_path, "key=value config file; flags override it");

    auto* verify = app.add_subcommand("verify", "identity, lemma bound, functional equation and cross-scheme suites");
    verify->add_option("--inject-fault", fault, "test hook: euler_factor_identity or lemma_bounds");
    auto* consts = app.add_subcommand("constants", "leading cubic-moment residue and supporting constants");
    auto* lvals = app.add_subcommand("lvalues", "central values L(1/2, chi_8d) for odd squarefree d in [lo, hi]");
    lvals->add_option("lo", lo, "first d")->required();
    lvals->add_option("hi", hi, "last d")->required();
    auto* scan = app.add_subcommand("scan", "smoothed third-moment scan and main-term fit");
    for (auto* sub : {verify, consts, lvals, scan})
        sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << qcubic::version << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return usage_error;
    }

    try {
        RunConfig c;
        if (!config_path.empty())
            c = load_config_file(config_path, c);
        const std::pair<CLI::Option*, void (*)(RunConfig&, const RunConfig&)> overrides[] = {
            {o_prec, [](RunConfig& a, const RunConfig& b) { a.precision_digits = b.precision_digits; }},
            {o_pl, [](RunConfig& a, const RunConfig& b) { a.prime_limit = b.prime_limit; }},
            {o_to, [](RunConfig& a, const RunConfig& b) { a.tail_order = b.tail_order; }},
            {o_xmin, [](RunConfig& a, const RunConfig& b) { a.x_min = b.x_min; }},
            {o_xmax, [](RunConfig& a, const RunConfig& b) { a.x_max = b.x_max; }},
            {o_xpts, [](RunConfig& a, const RunConfig& b) { a.x_points = b.x_points; }},
            {o_sh, [](RunConfig& a, const RunConfig& b) { a.shards = b.shards; }},
            {o_seed, [](RunConfig& a, const RunConfig& b) { a.seed = b.seed; }},
            {o_out, [](RunConfig& a, const RunConfig& b) { a.output_dir = b.output_dir; }},
            {o_lp, [](RunConfig& a, const RunConfig& b) { a.lemma_prime_max = b.lemma_prime_max; }},
            {o_ls, [](RunConfig& a, const RunConfig& b) { a.lemma_samples = b.lemma_samples; }},
        };
        for (const auto& [opt, apply] : overrides)
            if (opt->count() > 0)
                apply(c, flags);
        c.validate();

        if (*verify)
            return cmd_verify(c, out, fault);
        if (*consts)
            return cmd_constants(c, out);
        if (*lvals)
            return cmd_lvalues(c, lo, hi, out);
        return cmd_scan(c, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return io_error;
    } catch (const lcentral::CacheError& e) {
        err << "i/o error: " << e.what() << "\n";
        return io_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    }
}

} // namespace qcubic::cli
