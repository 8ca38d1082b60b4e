#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vduplex/af_mc.hpp"
#include "vduplex/cof.hpp"
#include "vduplex/core.hpp"
#include "vduplex/ergodic.hpp"
#include "vduplex/multihop.hpp"
#include "vduplex/pipeline.hpp"
#include "vduplex/rates.hpp"
#include "vduplex/upper.hpp"
#include "vduplex/verify.hpp"

namespace py = pybind11;
using namespace vduplex;

namespace {

ChannelConfig make_config(double snr_db, double gamma, int stages) {
    return ChannelConfig(Snr::from_db(snr_db), Gamma(gamma), stages);
}

py::dict scheme_rate_dict(const SchemeRate& r) {
    py::dict d;
    d["scheme"] = scheme_name(r.scheme);
    d["bits"] = r.rate.bits;
    d["unclamped_bits"] = r.unclamped_bits;
    d["binding"] = r.binding;
    return d;
}

py::dict cof_dict(const CofSolution& s) {
    py::dict d;
    d["b"] = py::make_tuple(py::make_tuple(s.b.b1.re, s.b.b1.im),
                            py::make_tuple(s.b.b2.re, s.b.b2.im));
    d["beta"] = py::make_tuple(s.beta.beta1, s.beta.beta2);
    d["alpha"] = s.alpha;
    d["computation_bits"] = s.computation_rate.bits;
    d["relay_link_bits"] = s.relay_link_rate.bits;
    d["bits"] = s.rate.bits;
    d["binding"] = s.binding;
    return d;
}

}  // namespace

PYBIND11_MODULE(vduplex, m) {
    m.doc() = "achievable rates and capacity bounds for virtual full-duplex relay networks";

    m.def("capacity_bits", [](double snr_linear) { return capacity(Snr(snr_linear)).bits; },
          py::arg("snr_linear"));
    m.def("snr_from_db", [](double db) { return Snr::from_db(db).value; }, py::arg("db"));
    m.def("log_plus", &log_plus, py::arg("x"));

    m.def(
        "rate",
        [](const std::string& scheme, double snr_db, double gamma, int stages) {
            const auto s = scheme_from_name(scheme);
            if (!s) throw std::invalid_argument("unknown scheme: " + scheme);
            return scheme_rate_multihop(*s, make_config(snr_db, gamma, stages));
        },
        py::arg("scheme"), py::arg("snr_db"), py::arg("gamma"), py::arg("stages") = 1,
        "rate in bits/channel use of one scheme (DPC only for stages=1)");

    m.def("rate_dpc",
          [](double snr_db, double gamma) { return scheme_rate_dict(rate_dpc(make_config(snr_db, gamma, 1))); });
    m.def("rate_df", [](double snr_db, double gamma, int stages) {
        return scheme_rate_dict(rate_df(make_config(snr_db, gamma, stages)));
    }, py::arg("snr_db"), py::arg("gamma"), py::arg("stages") = 1);
    m.def("rate_af", [](double snr_db, double gamma, int stages) {
        const auto cfg = make_config(snr_db, gamma, stages);
        return scheme_rate_dict(stages == 1 ? rate_af(cfg) : rate_af_multihop(cfg));
    }, py::arg("snr_db"), py::arg("gamma"), py::arg("stages") = 1);
    m.def("rate_qmf", [](double snr_db, double gamma, int stages) {
        const auto cfg = make_config(snr_db, gamma, stages);
        return scheme_rate_dict(stages == 1 ? rate_qmf(cfg).rate : rate_qmf_multihop(cfg));
    }, py::arg("snr_db"), py::arg("gamma"), py::arg("stages") = 1);
    m.def("rate_qmf_given_distortion", [](double snr_db, double gamma, double sigma_q_sq) {
        return scheme_rate_dict(rate_qmf_given_distortion(make_config(snr_db, gamma, 1), sigma_q_sq));
    });
    m.def("qmf_optimal_distortion",
          [](double snr_db) { return qmf_optimal_distortion(Snr::from_db(snr_db)); });
    m.def("rate_qmf_noise_level", [](double snr_db, double gamma, int stages) {
        return scheme_rate_dict(rate_qmf_noise_level_multihop(make_config(snr_db, gamma, stages)));
    }, py::arg("snr_db"), py::arg("gamma"), py::arg("stages") = 1);

    m.def("effective_noise_quadform",
          [](std::pair<std::int64_t, std::int64_t> b1, std::pair<std::int64_t, std::int64_t> b2,
             std::complex<double> h1, std::complex<double> h2, double snr_linear) {
              const GaussianIntVec2 b{GaussianInt{b1.first, b1.second},
                                      GaussianInt{b2.first, b2.second}};
              return effective_noise_quadform(b, ChannelVec2{h1, h2}, Snr(snr_linear));
          });
    m.def("best_integer_coeffs",
          [](std::complex<double> h1, std::complex<double> h2, double snr_linear) {
              const auto b = best_integer_coeffs(ChannelVec2{h1, h2}, Snr(snr_linear));
              return py::make_tuple(py::make_tuple(b.b1.re, b.b1.im),
                                    py::make_tuple(b.b2.re, b.b2.im));
          });
    m.def("rate_cof", [](double snr_db, double gamma, double beta1, double beta2) {
        return cof_dict(rate_cof(make_config(snr_db, gamma, 1), PaVector(beta1, beta2)));
    }, py::arg("snr_db"), py::arg("gamma"), py::arg("beta1") = 1.0, py::arg("beta2") = 1.0);
    m.def("rate_cof_pa", [](double snr_db, double gamma) {
        const auto pa = rate_cof_pa(make_config(snr_db, gamma, 1));
        py::dict d = cof_dict(pa.best);
        d["strategy"] = pa.strategy_id;
        d["pa_lower_bound_bits"] = pa.pa_lower_bound_bits;
        return d;
    });
    m.def("gamma_max", [](double gamma) { return gamma_max(Gamma(gamma)); });

    m.def("upper_bound", [](double snr_db, double gamma) {
        const auto sol = solve_upper_bound(Snr::from_db(snr_db), Gamma(gamma));
        py::dict d;
        d["bits"] = sol.value.bits;
        d["time_share"] = py::make_tuple(sol.optimizer.t1, sol.optimizer.t2, sol.optimizer.t3,
                                         sol.optimizer.t4);
        return d;
    });
    m.def("upper_bound_multihop", [](double snr_db, double gamma, int stages) {
        const auto ub = upper_bound_multihop(make_config(snr_db, gamma, stages));
        return py::make_tuple(ub.certified, ub.bound.bits);
    });

    m.def("degradation_gaps", [](double snr_db, double gamma, int stages) {
        const auto g = degradation_gaps(Snr::from_db(snr_db), Gamma(gamma), stages);
        py::dict d;
        d["DF"] = g.df;
        d["AF"] = g.af;
        d["QMF"] = g.qmf;
        d["CoF"] = g.cof;
        d["CoF_PA"] = g.cof_pa;
        return d;
    });

    m.def("run_pipeline_decode",
          [](int stages, std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& messages,
             std::size_t total_slots, std::uint32_t p) {
              const PrimeField field(p);
              const auto trace = run_pipeline(stages, q, messages, total_slots, field);
              py::dict d;
              d["destination"] = trace.destination;
              d["decoded"] = decode_forward_substitution(trace);
              return d;
          },
          py::arg("stages"), py::arg("q"), py::arg("messages"), py::arg("total_slots"),
          py::arg("p") = 251);

    m.def("simulate_af_noise",
          [](double snr_db, double gamma, int stages, std::size_t trials, std::uint64_t seed) {
              AfNoiseMcConfig cfg{Snr::from_db(snr_db), Gamma(gamma), stages};
              cfg.trials = trials;
              cfg.seed = seed;
              const auto mc = simulate_af_noise(cfg);
              py::dict d;
              d["estimate"] = mc.estimate;
              d["standard_error"] = mc.standard_error;
              d["closed_form"] = mc.closed_form;
              return d;
          },
          py::arg("snr_db"), py::arg("gamma"), py::arg("stages"), py::arg("trials") = 1000,
          py::arg("seed") = 1);

    m.def("ergodic_rates",
          [](double snr_db, double lo, double hi, const std::vector<int>& k_values,
             std::size_t trials, std::uint64_t seed) {
              McConfig cfg{Snr::from_db(snr_db)};
              cfg.gamma_sq_lo = lo;
              cfg.gamma_sq_hi = hi;
              cfg.k_values = k_values;
              cfg.trials = trials;
              cfg.seed = seed;
              const auto t = ergodic_rates(cfg);
              py::dict d;
              d["k_values"] = t.k_values;
              for (std::size_t c = 0; c < t.labels.size(); ++c) {
                  py::dict col;
                  col["mean"] = t.mean[c];
                  col["stderr"] = t.standard_error[c];
                  d[t.labels[c].c_str()] = col;
              }
              return d;
          },
          py::arg("snr_db"), py::arg("gamma_sq_lo"), py::arg("gamma_sq_hi"),
          py::arg("k_values"), py::arg("trials") = 1000, py::arg("seed") = 1);
}
