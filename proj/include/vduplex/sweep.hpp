#pragma once

#include <string>
#include <vector>

#include "vduplex/core.hpp"
#include "vduplex/ergodic.hpp"
#include "vduplex/rates.hpp"

namespace vduplex {

/// Parses "start:step:stop" (stop included within half a step), a comma list,
/// or a single number. Throws std::invalid_argument on malformed input.
std::vector<double> parse_range(const std::string& text);
std::vector<int> parse_int_range(const std::string& text);

/// Fixed-width decimal formatting used for every CSV cell: 10 significant
/// digits, so identical inputs yield byte-identical files.
std::string format_g10(double v);

/// Scheme list: "all" or comma-separated names from
/// {DPC, DF, AF, QMF, QMF_N, CoF, CoF_PA, UPPER}. UPPER is carried as an
/// extra row tagged by `include_upper` below.
struct SchemeSelection {
    std::vector<Scheme> schemes;
    bool include_upper = false;
};
SchemeSelection parse_schemes(const std::string& text);

struct RatesQuery {
    std::vector<double> snr_db;
    std::vector<double> gamma;
    std::vector<int> k_values{1};
    SchemeSelection selection;
};

/// CSV: snr_db,gamma,K,scheme,rate_bits,binding,upper_bound_bits.
/// DPC rows appear only for K = 1.
std::string rates_csv(const RatesQuery& query);

/// CSV: K,scheme,mean_rate,stderr,trials,seed.
std::string ergodic_csv(const McConfig& cfg);
std::string ergodic_csv(const ErgodicTable& table);

/// CSV: snr_db,gamma,lp_value_bits,t1,t2,t3,t4,certified,multihop_bound_bits.
std::string upper_csv(const std::vector<double>& snr_db, const std::vector<double>& gamma,
                      int stages);

/// Companion gnuplot script for a rates CSV (rate vs gamma, one curve per scheme).
std::string rates_gnuplot(const std::string& csv_path);

}  // namespace vduplex
