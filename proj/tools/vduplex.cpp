// vduplex: achievable-rate and capacity-bound calculator for virtual
// full-duplex (successive half-duplex) relay networks.
//
// Subcommands:
//   rates    closed-form rate sweeps over (snr, gamma, K) as CSV
//   ergodic  Monte Carlo ergodic rates over random gamma^2 as CSV
//   upper    cut-set LP upper bound and time-share optimizer as CSV
//   verify   property suites; exit 0 iff everything passes

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vduplex/ergodic.hpp"
#include "vduplex/sweep.hpp"
#include "vduplex/verify.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::vector<double> snr_db_list(const std::string& snr_db, const std::string& snr_linear) {
    if (!snr_db.empty() && !snr_linear.empty())
        throw std::invalid_argument("give either --snr-db or --snr, not both");
    if (!snr_db.empty()) return vduplex::parse_range(snr_db);
    if (snr_linear.empty()) throw std::invalid_argument("missing --snr-db or --snr");
    std::vector<double> out;
    for (double v : vduplex::parse_range(snr_linear)) out.push_back(vduplex::Snr(v).db());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual full-duplex relay rate toolkit"};
    app.require_subcommand(1);

    // ---- rates ----
    auto* rates = app.add_subcommand("rates", "closed-form rate sweep (CSV)");
    std::string r_snr_db, r_snr, r_gamma, r_gamma_sq, r_k = "1", r_schemes = "all";
    std::string r_out = "-", r_gnuplot;
    rates->add_option("--snr-db", r_snr_db, "snr in dB (value, list or start:step:stop)");
    rates->add_option("--snr", r_snr, "snr linear (value, list or start:step:stop)");
    rates->add_option("--gamma", r_gamma, "inter-relay gain (value, list or range)");
    rates->add_option("--gamma-sq", r_gamma_sq, "inter-relay gain squared (range)");
    rates->add_option("--k", r_k, "relay stages (int value, list or range)");
    rates->add_option("--schemes", r_schemes,
                      "'all' or comma list of DPC,DF,AF,QMF,QMF_N,CoF,CoF_PA,UPPER");
    rates->add_option("--out", r_out, "output file ('-' for stdout)");
    rates->add_option("--gnuplot", r_gnuplot, "also emit a companion gnuplot script");

    // ---- ergodic ----
    auto* ergodic = app.add_subcommand("ergodic", "Monte Carlo ergodic rates (CSV)");
    double e_snr_db = 20.0;
    std::vector<double> e_unif;
    std::string e_k = "1:6", e_out = "-";
    std::uint64_t e_seed = 1;
    std::size_t e_trials = 20000;
    int e_threads = 0;
    ergodic->add_option("--snr-db", e_snr_db, "snr in dB")->required();
    ergodic->add_option("--gamma-sq-unif", e_unif, "uniform interval for gamma^2: LO HI")
        ->expected(2)
        ->required();
    ergodic->add_option("--k", e_k, "relay stages (range)");
    ergodic->add_option("--trials", e_trials, "Monte Carlo trials");
    ergodic->add_option("--seed", e_seed, "rng seed");
    ergodic->add_option("--threads", e_threads, "worker threads (default VDUPLEX_THREADS)");
    ergodic->add_option("--out", e_out, "output file ('-' for stdout)");

    // ---- upper ----
    auto* upper = app.add_subcommand("upper", "cut-set LP upper bound (CSV)");
    std::string u_snr_db, u_snr, u_gamma = "1";
    int u_k = 1;
    std::string u_out = "-";
    upper->add_option("--snr-db", u_snr_db, "snr in dB (range)");
    upper->add_option("--snr", u_snr, "snr linear (range)");
    upper->add_option("--gamma", u_gamma, "inter-relay gain (range)");
    upper->add_option("--k", u_k, "relay stages for the multihop bound column");
    upper->add_option("--out", u_out, "output file ('-' for stdout)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run property suites");
    std::vector<std::string> v_suites;
    std::string v_snr_db, v_k, v_json;
    std::uint64_t v_seed = 1;
    std::size_t v_trials = 2000, v_lattice = 200;
    std::string suite_help = "suite to run (repeatable); one of:";
    for (const auto& s : vduplex::verify_suite_names()) suite_help += " " + s;
    verify->add_option("--suite", v_suites, suite_help);
    verify->add_option("--snr-db", v_snr_db, "snr grid override (range, dB)");
    verify->add_option("--k", v_k, "stage grid override (range)");
    verify->add_option("--seed", v_seed, "rng seed");
    verify->add_option("--trials", v_trials, "Monte Carlo trials for the afnoise suite");
    verify->add_option("--lattice-instances", v_lattice, "random instances for the lattice suite");
    verify->add_option("--json", v_json, "also write a JSON-lines report");

    try {
        app.parse(argc, argv);

        if (rates->parsed()) {
            vduplex::RatesQuery query;
            query.snr_db = snr_db_list(r_snr_db, r_snr);
            if (!r_gamma.empty() && !r_gamma_sq.empty())
                throw std::invalid_argument("give either --gamma or --gamma-sq, not both");
            if (!r_gamma.empty()) {
                query.gamma = vduplex::parse_range(r_gamma);
            } else if (!r_gamma_sq.empty()) {
                for (double v : vduplex::parse_range(r_gamma_sq)) {
                    if (v < 0.0) throw std::invalid_argument("--gamma-sq must be >= 0");
                    query.gamma.push_back(std::sqrt(v));
                }
            } else {
                throw std::invalid_argument("missing --gamma or --gamma-sq");
            }
            query.k_values = vduplex::parse_int_range(r_k);
            query.selection = vduplex::parse_schemes(r_schemes);
            const bool dpc_only = query.selection.schemes.size() == 1 &&
                                  query.selection.schemes[0] == vduplex::Scheme::Dpc &&
                                  !query.selection.include_upper;
            if (dpc_only &&
                std::find(query.k_values.begin(), query.k_values.end(), 1) ==
                    query.k_values.end())
                throw std::invalid_argument("DPC applies only to K=1");
            if (!r_gnuplot.empty() && (r_out.empty() || r_out == "-"))
                throw std::invalid_argument("--gnuplot needs --out to name the CSV file");
            write_output(r_out, vduplex::rates_csv(query));
            if (!r_gnuplot.empty())
                write_output(r_gnuplot, vduplex::rates_gnuplot(r_out));
            return 0;
        }

        if (ergodic->parsed()) {
            if (e_unif[0] > e_unif[1])
                throw std::invalid_argument("--gamma-sq-unif needs LO <= HI");
            vduplex::McConfig cfg{vduplex::Snr::from_db(e_snr_db)};
            cfg.gamma_sq_lo = e_unif[0];
            cfg.gamma_sq_hi = e_unif[1];
            cfg.k_values = vduplex::parse_int_range(e_k);
            cfg.trials = e_trials;
            cfg.seed = e_seed;
            cfg.threads = e_threads;
            write_output(e_out, vduplex::ergodic_csv(cfg));
            return 0;
        }

        if (upper->parsed()) {
            const auto dbs = snr_db_list(u_snr_db, u_snr);
            write_output(u_out,
                         vduplex::upper_csv(dbs, vduplex::parse_range(u_gamma), u_k));
            return 0;
        }

        if (verify->parsed()) {
            vduplex::VerifyOptions opt;
            for (const auto& s : v_suites) {
                const auto names = vduplex::verify_suite_names();
                if (std::find(names.begin(), names.end(), s) == names.end())
                    throw std::invalid_argument("unknown suite: '" + s + "'");
            }
            opt.suites = v_suites;
            if (!v_snr_db.empty()) opt.snr_db = vduplex::parse_range(v_snr_db);
            if (!v_k.empty()) opt.k_values = vduplex::parse_int_range(v_k);
            opt.seed = v_seed;
            opt.mc_trials = v_trials;
            opt.lattice_instances = v_lattice;

            const auto results = vduplex::run_verify(opt);
            std::size_t failed = 0;
            std::string json_report;
            for (const auto& r : results) {
                if (!r.pass) ++failed;
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.name;
                if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
                nlohmann::json line{{"suite", r.suite},
                                    {"check", r.name},
                                    {"pass", r.pass},
                                    {"witness", r.detail}};
                json_report += line.dump() + "\n";
            }
            if (failed == 0)
                std::cout << "all " << results.size() << " checks passed\n";
            else
                std::cout << failed << " of " << results.size() << " checks FAILED\n";
            if (!v_json.empty()) write_output(v_json, json_report);
            return failed == 0 ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
