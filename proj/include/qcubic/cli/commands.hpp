#pragma once

#include <boost/version.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mpfr.h>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "qcubic/arith.hpp"
#include "qcubic/cli/config.hpp"
#include "qcubic/constants.hpp"
#include "qcubic/lcentral.hpp"
#include "qcubic/moments.hpp"
#include "qcubic/ratfun.hpp"
#include "qcubic/version.hpp"

namespace qcubic::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, io_error = 3 };

using nlohmann::json;

namespace detail {

inline std::filesystem::path out_dir(const RunConfig& c)
{
    std::error_code ec;
    std::filesystem::create_directories(c.output_dir, ec);
    if (ec || !std::filesystem::is_directory(c.output_dir))
        throw IoError("cannot create output directory " + c.output_dir +
                      (ec ? ": " + ec.message() : ""));
    return c.output_dir;
}

inline void write_file(const std::filesystem::path& p, const std::string& content)
{
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open " + p.string() + " for writing");
    os << content;
    os.flush();
    if (!os)
        throw IoError("write failed for " + p.string());
}

inline std::string g17(double v)
{
    return cli::detail::fmt_double(v);
}

inline json versions()
{
    return {{"qcubic", qcubic::version},
            {"kernel", lcentral::kernel_version},
            {"boost", BOOST_LIB_VERSION},
            {"mpfr", MPFR_VERSION_STRING},
            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                          std::to_string(EIGEN_MINOR_VERSION)}};
}

/// Everything needed to rerun: the canonical config, its hash, seeds, versions.
inline void write_manifest(const std::filesystem::path& dir, const std::string& command, const RunConfig& c,
                           const std::vector<std::string>& outputs, json extra = json::object())
{
    json m;
    m["command"] = command;
    m["config"] = kv_map(c);
    m["config_hash"] = config_hash(c);
    m["seed"] = c.seed;
    m["precision_digits"] = c.precision_digits;
    m["versions"] = versions();
    m["outputs"] = outputs;
    m["details"] = std::move(extra);
    write_file(dir / "manifest.json", m.dump(2) + "\n");
}

inline std::vector<std::int64_t> odd_primes_to(int n)
{
    std::vector<std::int64_t> out;
    for (auto p : arith::primes_up_to(static_cast<std::uint32_t>(n)))
        if (p > 2)
            out.push_back(p);
    return out;
}

} // namespace detail

struct SuiteResult {
    std::string name;
    bool pass = false;
    json detail;
};

/// Known fault names: euler_factor_identity, lemma_bounds.
inline std::vector<SuiteResult> verify_suites(const RunConfig& c, const std::string& fault = "")
{
    if (!fault.empty() && fault != "euler_factor_identity" && fault != "lemma_bounds")
        throw ConfigError("unknown fault '" + fault + "' (known: euler_factor_identity, lemma_bounds)");
    std::vector<SuiteResult> out;

    {
        ratfun::EulerLines lines = ratfun::standard_lines();
        if (fault == "euler_factor_identity")
            lines.u3 += ratfun::QPoly::monomial(ratfun::Q(1), 5);
        const auto r = ratfun::euler_factor_identity(lines);
        out.push_back({"euler_factor_identity", r.pass, ratfun::identity_certificate("euler_factor_identity", r, c.seed)});
    }
    {
        const auto P = ratfun::p_polynomial();
        const bool pass = P[0] == 1 && P[1] == 0 && P[2] == 0 && P[3] == -14;
        out.push_back({"p_expansion", pass, {{"polynomial", P.str("x")}}});
    }
    {
        ratfun::LemmaLimits lim;
        if (fault == "lemma_bounds")
            lim.odd = 100;
        const auto rep = ratfun::lemma_bound_suite(detail::odd_primes_to(c.lemma_prime_max),
                                                   static_cast<std::size_t>(c.lemma_samples), c.seed, lim);
        json table = json::array();
        for (const auto& p : rep.primes)
            table.push_back({{"p", p.p},
                             {"samples", p.samples},
                             {"max_odd_ratio", p.max_odd_ratio},
                             {"max_even_minus_ratio", p.max_even_minus_ratio},
                             {"max_inv_plus", p.max_inv_plus},
                             {"real_diameter_odd_max", p.real_diameter_odd_max}});
        json fails = json::array();
        for (std::size_t i = 0; i < rep.failures.size() && i < 20; ++i) {
            const auto& w = rep.failures[i];
            fails.push_back({{"p", w.p}, {"z_re", w.z.real()}, {"z_im", w.z.imag()}, {"bound", w.bound}, {"ratio", w.ratio}});
        }
        out.push_back({"lemma_bounds", rep.pass(),
                       {{"limits", {lim.odd, lim.even_minus, lim.inv_plus}},
                        {"seed", rep.seed},
                        {"table", table},
                        {"failures", rep.failures.size()},
                        {"witnesses", fails}}});
    }
    {
        double worst = 0;
        json per = json::object();
        for (std::uint64_t d0 : {1u, 5u, 15u, 21u}) {
            const double r = lcentral::fe_residual(d0, {0.5, 1.0, 2.0});
            per[std::to_string(d0)] = r;
            worst = std::max(worst, r);
        }
        out.push_back({"functional_equation", worst <= 1e-6, {{"max_residual", worst}, {"per_d0", per}}});
    }
    {
        std::mt19937_64 rng(c.seed);
        std::uniform_int_distribution<std::uint64_t> U(0, 4999);
        double worst = 0;
        json ds = json::array();
        for (int k = 0; k < 20;) {
            const std::uint64_t d0 = 2 * U(rng) + 1;
            if (!arith::is_squarefree(d0))
                continue;
            ++k;
            const double a = lcentral::l_central(d0, lcentral::Scheme::kernelA).value;
            const double b = lcentral::l_central(d0, lcentral::Scheme::kernelB).value;
            worst = std::max(worst, std::fabs(a - b));
            ds.push_back(d0);
        }
        out.push_back({"cross_scheme", worst <= 1e-8, {{"max_difference", worst}, {"d0", ds}}});
    }
    return out;
}

inline int cmd_verify(const RunConfig& c, std::ostream& log, const std::string& fault = "")
{
    c.validate();
    numeric::ScopedPrecision prec(static_cast<unsigned>(c.precision_digits));
    const auto dir = detail::out_dir(c);
    const auto suites = verify_suites(c, fault);

    json cert;
    cert["suites"] = json::array();
    bool all = true;
    for (const auto& s : suites) {
        cert["suites"].push_back({{"name", s.name}, {"status", s.pass ? "pass" : "fail"}, {"detail", s.detail}});
        log << (s.pass ? "pass  " : "FAIL  ") << s.name << "\n";
        all = all && s.pass;
    }
    for (const auto& s : suites) {
        if (s.name != "lemma_bounds")
            continue;
        log << "     p   max|f_odd|/|z|  max|f_even-|sqrt(p)  max 1/|f_even+|\n";
        for (const auto& row : s.detail["table"]) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%6lld %16.6f %20.6f %17.6f\n", row["p"].get<long long>(),
                          row["max_odd_ratio"].get<double>(), row["max_even_minus_ratio"].get<double>(),
                          row["max_inv_plus"].get<double>());
            log << buf;
        }
    }
    cert["status"] = all ? "pass" : "fail";
    cert["seed"] = c.seed;
    if (!fault.empty())
        cert["injected_fault"] = fault;
    detail::write_file(dir / "verify.json", cert.dump(2) + "\n");
    detail::write_manifest(dir, "verify", c, {"verify.json"}, {{"injected_fault", fault}});
    if (!all) {
        for (const auto& s : suites)
            if (!s.pass)
                log << "verification failed: " << s.name << "\n";
        return verification_failed;
    }
    return ok;
}

inline int cmd_constants(const RunConfig& c, std::ostream& log)
{
    c.validate();
    numeric::ScopedPrecision prec(static_cast<unsigned>(c.precision_digits));
    const auto dir = detail::out_dir(c);
    const unsigned workers = std::min(c.shards, numeric::hardware_workers());
    const auto br = constants::theorem_a_breakdown(c.prime_limit, c.tail_order, workers);

    json params = {{"prime_limit", c.prime_limit}, {"tail_order", c.tail_order}, {"precision_digits", c.precision_digits}};
    json main = constants::constant_json("theorem_a_residue", br.value, params);
    main["breakdown"] = {{"prefactor", br.prefactor.str()},
                         {"euler_product", br.product.str()},
                         {"log_tail", br.log_tail.value.str(20, std::ios_base::scientific)},
                         {"log_tail_err", br.log_tail.err.str(3, std::ios_base::scientific)},
                         {"truncation_bound", br.truncation_bound.str(3, std::ios_base::scientific)}};
    json doc;
    doc["constants"] = json::array({main,
                                    constants::constant_json("prefactor", br.prefactor),
                                    constants::constant_json("zeta(1/2)", constants::zeta_real(numeric::Real(0.5))),
                                    constants::constant_json("gamma(1/4)", constants::gamma_real(numeric::Real(0.25))),
                                    constants::constant_json("prop_residue(1,1,1)", constants::prop_residue({1, 1, 1}))});
    detail::write_file(dir / "constants.json", doc.dump(2) + "\n");
    detail::write_manifest(dir, "constants", c, {"constants.json"});
    log << "theorem_a_residue = " << br.value.str() << "  (err " << br.value.err.str(3, std::ios_base::scientific)
        << ", P = " << c.prime_limit << ", J = " << c.tail_order << ")\n";
    return ok;
}

inline int cmd_lvalues(const RunConfig& c, std::uint64_t lo, std::uint64_t hi, std::ostream& log)
{
    c.validate();
    if (lo == 0 || hi < lo)
        throw ConfigError("lvalues: need a nonempty range 1 <= lo <= hi");
    if (hi > 100'000'000)
        throw ConfigError("lvalues: hi above 1e8");
    const auto dir = detail::out_dir(c);
    const auto t = lcentral::l_central_batch(lo, hi, c.shards);
    std::ostringstream csv;
    lcentral::write_csv(csv, t);
    detail::write_file(dir / "lvalues.csv", csv.str());
    std::vector<std::string> outputs{"lvalues.csv"};
    if (!t.skipped.empty()) {
        std::ostringstream sk;
        sk << "d0,reason\n";
        for (const auto& s : t.skipped)
            sk << s.d0 << "," << s.reason << "\n";
        detail::write_file(dir / "lvalues_skipped.csv", sk.str());
        outputs.push_back("lvalues_skipped.csv");
    }
    detail::write_manifest(dir, "lvalues", c, outputs, {{"lo", lo}, {"hi", hi}, {"records", t.records.size()}, {"skipped", t.skipped.size()}});
    log << t.records.size() << " central values in [" << lo << ", " << hi << "]";
    if (!t.skipped.empty())
        log << ", " << t.skipped.size() << " skipped";
    log << "\n";
    return ok;
}

inline int cmd_scan(const RunConfig& c, std::ostream& log)
{
    c.validate();
    if (c.x_points < moments::main_degree + 2)
        throw ConfigError("scan: rank-deficient fit: " + std::to_string(c.x_points) + " grid points for " +
                          std::to_string(moments::main_degree + 2) + " unknowns");
    if (c.x_points < 10 || c.x_max < 100 * c.x_min)
        throw ConfigError("scan: need >= 10 grid points spanning >= 2 decades");
    numeric::ScopedPrecision prec(static_cast<unsigned>(c.precision_digits));
    const auto dir = detail::out_dir(c);
    const auto grid = moments::geometric_grid(c.x_min, c.x_max, static_cast<std::size_t>(c.x_points));
    const auto lo = static_cast<std::uint64_t>(std::ceil(c.x_min / 2));
    const auto hi = static_cast<std::uint64_t>(std::floor(c.x_max));
    const std::string cache = "lvalues_" + std::to_string(lo) + "_" + std::to_string(hi) + ".cache";
    const auto table = lcentral::cached_batch((dir / cache).string(), lo, hi, c.shards);

    const unsigned workers = std::min(c.shards, numeric::hardware_workers());
    moments::FitOptions opt;
    opt.seed = c.seed;
    opt.secondary_pred = moments::secondary_prediction(c.prime_limit, c.tail_order, workers);
    std::vector<moments::MomentSample> samples;
    moments::FitReport fit;
    try {
        fit = moments::scan_and_fit(grid, table, opt, workers, &samples);
    } catch (const std::out_of_range& e) {
        log << "scan: " << e.what() << "\n";
        return verification_failed;
    }

    std::ostringstream sc;
    sc << "x,sum,terms\n";
    for (const auto& s : samples)
        sc << detail::g17(s.x) << "," << detail::g17(s.sum) << "," << s.terms << "\n";
    detail::write_file(dir / "samples.csv", sc.str());

    std::ostringstream fc;
    fc << "key,value\n";
    for (std::size_t k = 0; k < fit.coefficients.size(); ++k)
        fc << "c" << k << "," << detail::g17(fit.coefficients[k]) << "\n";
    fc << "secondary_coeff," << detail::g17(fit.secondary_coeff) << "\n"
       << "secondary_uncertainty," << detail::g17(fit.secondary_uncertainty) << "\n"
       << "secondary_pred," << detail::g17(fit.secondary_pred) << "\n"
       << "r_squared," << detail::g17(fit.r_squared) << "\n";
    detail::write_file(dir / "fit.csv", fc.str());

    std::ostringstream rc;
    rc << "x,residual\n";
    for (const auto& [x, r] : fit.residuals)
        rc << detail::g17(x) << "," << detail::g17(r) << "\n";
    detail::write_file(dir / "residuals.csv", rc.str());

    std::int64_t ms = 0;
    for (const auto& s : samples)
        ms += s.runtime_ms;
    const double w34 = moments::mellin_w({0.75, 0.0}).real();
    detail::write_manifest(dir, "scan", c, {"samples.csv", "fit.csv", "residuals.csv", cache},
                           {{"weight_kappa", detail::g17(moments::default_weight().kappa())},
                            {"mellin_w_3_4", detail::g17(w34)},
                            {"bootstrap_rounds", fit.bootstrap_rounds},
                            {"table_records", table.records.size()},
                            {"moment_runtime_ms", ms}});
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "R^2 = %.8f   secondary_coeff = %.6e +- %.6e   secondary_pred = %.6e\n",
                  fit.r_squared, fit.secondary_coeff, fit.secondary_uncertainty, fit.secondary_pred);
    log << buf;
    return ok;
}

} // namespace qcubic::cli
