#include "vduplex/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "vduplex/cof.hpp"
#include "vduplex/multihop.hpp"
#include "vduplex/upper.hpp"

namespace vduplex {

namespace {

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty range");
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw std::invalid_argument("range must be start:step:stop");
        const double start = parse_double(parts[0]);
        const double step = parse_double(parts[1]);
        const double stop = parse_double(parts[2]);
        if (!(step > 0.0)) throw std::invalid_argument("range step must be > 0");
        if (stop < start) throw std::invalid_argument("range stop must be >= start");
        std::vector<double> out;
        for (int i = 0;; ++i) {
            const double v = start + step * i;
            if (v > stop + 0.5 * step) break;
            out.push_back(std::min(v, stop));
        }
        return out;
    }
    std::vector<double> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_double(tok));
    if (out.empty()) throw std::invalid_argument("empty range");
    return out;
}

std::vector<int> parse_int_range(const std::string& text) {
    std::vector<int> out;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        long start = 0, step = 1, stop = 0;
        if (parts.size() == 2) {
            start = std::stol(parts[0]);
            stop = std::stol(parts[1]);
        } else if (parts.size() == 3) {
            start = std::stol(parts[0]);
            step = std::stol(parts[1]);
            stop = std::stol(parts[2]);
        } else {
            throw std::invalid_argument("int range must be start:stop or start:step:stop");
        }
        if (step <= 0) throw std::invalid_argument("int range step must be > 0");
        for (long v = start; v <= stop; v += step) out.push_back(int(v));
    } else {
        for (const auto& tok : split(text, ',')) out.push_back(int(std::stol(tok)));
    }
    if (out.empty()) throw std::invalid_argument("empty int range");
    return out;
}

std::string format_g10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

SchemeSelection parse_schemes(const std::string& text) {
    SchemeSelection sel;
    if (text == "all") {
        sel.schemes = {Scheme::Dpc, Scheme::Df, Scheme::Af, Scheme::Qmf,
                       Scheme::QmfN, Scheme::Cof, Scheme::CofPa};
        sel.include_upper = true;
        return sel;
    }
    for (const auto& tok : split(text, ',')) {
        if (tok == "UPPER") {
            sel.include_upper = true;
            continue;
        }
        const auto s = scheme_from_name(tok);
        if (!s) throw std::invalid_argument("unknown scheme: '" + tok + "'");
        sel.schemes.push_back(*s);
    }
    if (sel.schemes.empty() && !sel.include_upper)
        throw std::invalid_argument("no schemes selected");
    return sel;
}

namespace {

struct RateCell {
    double bits = 0.0;
    std::string binding;
};

RateCell rate_cell(Scheme scheme, const ChannelConfig& cfg) {
    switch (scheme) {
        case Scheme::Dpc: {
            const auto r = rate_dpc(cfg);
            return {r.rate.bits, r.binding};
        }
        case Scheme::Df: {
            const auto r = rate_df(cfg);
            return {r.rate.bits, r.binding};
        }
        case Scheme::Af: {
            const auto r = cfg.stages == 1 ? rate_af(cfg) : rate_af_multihop(cfg);
            return {r.rate.bits, r.binding};
        }
        case Scheme::Qmf: {
            const auto r = cfg.stages == 1 ? rate_qmf(cfg).rate : rate_qmf_multihop(cfg);
            return {r.rate.bits, r.binding};
        }
        case Scheme::QmfN: {
            const auto r = rate_qmf_noise_level_multihop(cfg);
            return {r.rate.bits, r.binding};
        }
        case Scheme::Cof: {
            const auto r = rate_cof_multihop(cfg);
            return {r.rate.bits, r.binding};
        }
        case Scheme::CofPa: {
            if (cfg.gamma.value == 0.0) {
                const auto r = rate_cof_multihop(cfg);
                return {r.rate.bits, r.binding + " (no PA at gamma=0)"};
            }
            const auto r = rate_cof_pa_multihop(cfg);
            return {r.rate_bits, r.binding};
        }
    }
    throw std::logic_error("rate_cell: unknown scheme");
}

}  // namespace

std::string rates_csv(const RatesQuery& query) {
    if (query.snr_db.empty() || query.gamma.empty() || query.k_values.empty())
        throw std::invalid_argument("rates_csv: empty sweep axis");
    std::string out = "snr_db,gamma,K,scheme,rate_bits,binding,upper_bound_bits\n";
    for (double db : query.snr_db) {
        const Snr snr = Snr::from_db(db);
        for (double g : query.gamma) {
            const Gamma gamma(g);
            for (int k : query.k_values) {
                const ChannelConfig cfg(snr, gamma, k);
                const auto ub = upper_bound_multihop(cfg);
                const auto emit = [&](const std::string& name, double bits,
                                      const std::string& binding) {
                    out += format_g10(db);
                    out += ',';
                    out += format_g10(g);
                    out += ',';
                    out += std::to_string(k);
                    out += ',';
                    out += name;
                    out += ',';
                    out += format_g10(bits);
                    out += ',';
                    out += binding;
                    out += ',';
                    out += format_g10(ub.bound.bits);
                    out += '\n';
                };
                for (Scheme s : query.selection.schemes) {
                    if (s == Scheme::Dpc && k != 1) continue;
                    const RateCell cell = rate_cell(s, cfg);
                    emit(scheme_name(s), cell.bits, cell.binding);
                }
                if (query.selection.include_upper)
                    emit("UPPER", ub.bound.bits,
                         ub.certified ? "cut-set" : "lp-not-certified");
            }
        }
    }
    return out;
}

std::string ergodic_csv(const ErgodicTable& table) {
    std::string out = "K,scheme,mean_rate,stderr,trials,seed\n";
    for (std::size_t i = 0; i < table.k_values.size(); ++i) {
        for (std::size_t c = 0; c < table.labels.size(); ++c) {
            out += std::to_string(table.k_values[i]);
            out += ',';
            out += table.labels[c];
            out += ',';
            out += format_g10(table.mean[c][i]);
            out += ',';
            out += format_g10(table.standard_error[c][i]);
            out += ',';
            out += std::to_string(table.trials);
            out += ',';
            out += std::to_string(table.seed);
            out += '\n';
        }
    }
    return out;
}

std::string ergodic_csv(const McConfig& cfg) { return ergodic_csv(ergodic_rates(cfg)); }

std::string upper_csv(const std::vector<double>& snr_db, const std::vector<double>& gamma,
                      int stages) {
    if (snr_db.empty() || gamma.empty())
        throw std::invalid_argument("upper_csv: empty sweep axis");
    std::string out = "snr_db,gamma,lp_value_bits,t1,t2,t3,t4,certified,multihop_bound_bits\n";
    for (double db : snr_db) {
        const Snr snr = Snr::from_db(db);
        for (double g : gamma) {
            const Gamma gm(g);
            const auto lp = solve_upper_bound(snr, gm);
            const auto ub = upper_bound_multihop(ChannelConfig(snr, gm, stages));
            out += format_g10(db);
            out += ',';
            out += format_g10(g);
            out += ',';
            out += format_g10(lp.value.bits);
            out += ',';
            out += format_g10(lp.optimizer.t1);
            out += ',';
            out += format_g10(lp.optimizer.t2);
            out += ',';
            out += format_g10(lp.optimizer.t3);
            out += ',';
            out += format_g10(lp.optimizer.t4);
            out += ',';
            out += ub.certified ? "1" : "0";
            out += ',';
            out += format_g10(ub.bound.bits);
            out += '\n';
        }
    }
    return out;
}

std::string rates_gnuplot(const std::string& csv_path) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set key outside\n";
    s += "set xlabel 'gamma'\n";
    s += "set ylabel 'rate [bits/channel use]'\n";
    s += "schemes = 'DPC DF AF QMF QMF_N CoF CoF_PA UPPER'\n";
    s += "plot for [s in schemes] '" + csv_path +
         "' using (column('gamma')):(strcol('scheme') eq s ? column('rate_bits') : 1/0) "
         "with lines title s\n";
    return s;
}

}  // namespace vduplex
