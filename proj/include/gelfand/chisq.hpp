#pragma once

#include <boost/math/special_functions/gamma.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace gelfand {

/// Upper-tail p-value of a chi-squared statistic with the given degrees of freedom.
inline double chi_squared_upper_pvalue(double stat, double dof) {
    if (dof <= 0.0) throw std::invalid_argument("chi_squared_upper_pvalue: dof must be positive");
    return boost::math::gamma_q(0.5 * dof, 0.5 * stat);
}

/// Pearson statistic and p-value of observed counts against expected counts.
struct ChiSquared {
    double statistic = 0.0;
    double dof = 0.0;
    double pvalue = 1.0;
};

inline ChiSquared pearson_chi_squared(const std::vector<double>& observed, const std::vector<double>& expected) {
    if (observed.size() != expected.size() || observed.empty()) {
        throw std::invalid_argument("pearson_chi_squared: category mismatch");
    }
    ChiSquared r;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) throw std::invalid_argument("pearson_chi_squared: expected counts must be positive");
        const double d = observed[i] - expected[i];
        r.statistic += d * d / expected[i];
    }
    r.dof = static_cast<double>(observed.size() - 1);
    r.pvalue = chi_squared_upper_pvalue(r.statistic, r.dof);
    return r;
}

}  // namespace gelfand
