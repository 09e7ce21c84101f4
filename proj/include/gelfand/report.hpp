#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gelfand/asymptotics.hpp"
#include "gelfand/sampling.hpp"

namespace gelfand {

struct VerdictRow {
    std::string observable;
    double empirical_mean = 0.0;
    double empirical_variance = 0.0;
    double target_mean = 0.0;
    double target_variance = 0.0;
    double se_mean = 0.0;       // under the limit law: sqrt(var/T)
    double se_variance = 0.0;   // under the limit law: var * sqrt(2/T)
    double z_mean = 0.0;
    double z_variance = 0.0;
    bool pass = false;
};

struct VerdictTable {
    std::vector<VerdictRow> rows;
    double z_gate = 4.0;
    bool all_pass = true;
};

/// Compares empirical means/variances against the limiting gaussian targets; a row
/// passes when both z-scores are within the gate (4 standard errors by default).
inline VerdictTable clt_report(const SampleStats& stats, const std::vector<CLTTarget>& targets,
                               double z_gate = 4.0) {
    if (stats.count() < 100) throw std::invalid_argument("clt_report: need at least 100 trials");
    VerdictTable table;
    table.z_gate = z_gate;
    const double t = static_cast<double>(stats.count());
    for (const auto& target : targets) {
        if (stats.column_index(target.observable) < 0) {
            throw std::invalid_argument("clt_report: no sampled observable named " + target.observable);
        }
        VerdictRow row;
        row.observable = target.observable;
        row.empirical_mean = stats.mean(target.observable);
        row.empirical_variance = stats.variance(target.observable);
        row.target_mean = target.mean;
        row.target_variance = target.variance;
        row.se_mean = std::sqrt(target.variance / t);
        row.se_variance = target.variance * std::sqrt(2.0 / t);
        row.z_mean = (row.empirical_mean - row.target_mean) / row.se_mean;
        row.z_variance = (row.empirical_variance - row.target_variance) / row.se_variance;
        row.pass = std::abs(row.z_mean) <= z_gate && std::abs(row.z_variance) <= z_gate;
        table.all_pass = table.all_pass && row.pass;
        table.rows.push_back(row);
    }
    return table;
}

/// var_gelfand / var_plancherel for one observable; the limit predicts 2.
inline double variance_ratio(const SampleStats& gelfand_stats, const SampleStats& plancherel_stats,
                             const std::string& observable) {
    const double vp = plancherel_stats.variance(observable);
    if (vp == 0.0) throw std::invalid_argument("variance_ratio: plancherel variance vanishes");
    return gelfand_stats.variance(observable) / vp;
}

inline void print_verdict_table(std::ostream& os, const VerdictTable& table) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-12s %12s %12s %12s %12s %8s %8s  %s", "observable", "mean", "target",
                  "variance", "target", "z_mean", "z_var", "verdict");
    os << buf << '\n';
    for (const auto& r : table.rows) {
        std::snprintf(buf, sizeof(buf), "%-12s %12.5f %12.5f %12.5f %12.5f %8.2f %8.2f  %s",
                      r.observable.c_str(), r.empirical_mean, r.target_mean, r.empirical_variance,
                      r.target_variance, r.z_mean, r.z_variance, r.pass ? "pass" : "FAIL");
        os << buf << '\n';
    }
}

}  // namespace gelfand
