#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

/// Corners of the 45-degree-rotated profile of a partition: local minima x_1 < y_1 < x_2 < ...
/// Minima sit at contents of addable boxes, maxima at contents of removable boxes.
struct InterlacingCoordinates {
    std::vector<long long> minima;  // x_1 < x_2 < ... < x_s
    std::vector<long long> maxima;  // y_1 < ... < y_{s-1}, strictly interlacing with the minima
};

inline InterlacingCoordinates interlacing_of(const Partition& p) {
    InterlacingCoordinates ic;
    const int l = p.length();
    // rows are 1-indexed here; content of box (i,j) is j - i
    for (int i = 1; i <= l + 1; ++i) {
        const int above = (i == 1) ? INT32_MAX : p[i - 2];
        const int here = (i <= l) ? p[i - 1] : 0;
        if (above > here) ic.minima.push_back(static_cast<long long>(here) + 1 - i);
        if (i <= l && here > p.part_or_zero(i)) ic.maxima.push_back(static_cast<long long>(here) - i);
    }
    std::reverse(ic.minima.begin(), ic.minima.end());
    std::reverse(ic.maxima.begin(), ic.maxima.end());
    return ic;
}

/// p_k(lambda) = sum x_i^k - sum y_i^k; always an integer, p_1 = 0, p_2 = 2|lambda|.
inline Int moment_p(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("moment_p: k must be >= 1");
    const auto ic = interlacing_of(p);
    Int r = 0;
    for (long long x : ic.minima) r += pow_int(to_int(x), static_cast<unsigned long>(k));
    for (long long y : ic.maxima) r -= pow_int(to_int(y), static_cast<unsigned long>(k));
    return r;
}

/// Logan-Shepp-Kerov-Vershik limit curve.
inline double lskv_profile(double s) {
    if (std::abs(s) >= 2.0) return std::abs(s);
    return (2.0 / std::numbers::pi) * (s * std::asin(s / 2.0) + std::sqrt(4.0 - s * s));
}

/// p_k(Omega) = binom(k, k/2) for even k, zero for odd k.
inline Int lskv_moment(int k) {
    if (k < 1) throw std::invalid_argument("lskv_moment: k must be >= 1");
    if (k % 2 != 0) return Int(0);
    return binomial_int(static_cast<unsigned long>(k), static_cast<unsigned long>(k / 2));
}

/// A continuous Young diagram: 1-Lipschitz profile equal to |s| outside a compact support.
/// Either a piecewise linear profile (from a rescaled partition) or the LSKV curve Omega.
class ContinuousDiagram {
public:
    static ContinuousDiagram lskv() { return ContinuousDiagram(); }

    /// Breakpoint positions must be strictly increasing; values are the profile heights there.
    static ContinuousDiagram piecewise_linear(std::vector<double> s, std::vector<double> v) {
        if (s.size() != v.size()) throw std::invalid_argument("ContinuousDiagram: breakpoint arrays differ in length");
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!(s[i] > s[i - 1])) throw std::invalid_argument("ContinuousDiagram: breakpoints must increase");
        }
        ContinuousDiagram d;
        d.kind_ = Kind::PiecewiseLinear;
        d.s_ = std::move(s);
        d.v_ = std::move(v);
        return d;
    }

    bool is_lskv() const { return kind_ == Kind::Lskv; }
    const std::vector<double>& breakpoints() const { return s_; }
    const std::vector<double>& values() const { return v_; }

    double operator()(double s) const {
        if (kind_ == Kind::Lskv) return lskv_profile(s);
        if (s_.empty() || s <= s_.front() || s >= s_.back()) return std::abs(s);
        const auto it = std::upper_bound(s_.begin(), s_.end(), s);
        const std::size_t hi = static_cast<std::size_t>(it - s_.begin());
        const std::size_t lo = hi - 1;
        const double t = (s - s_[lo]) / (s_[hi] - s_[lo]);
        return v_[lo] + t * (v_[hi] - v_[lo]);
    }

    std::pair<double, double> support() const {
        if (kind_ == Kind::Lskv) return {-2.0, 2.0};
        if (s_.empty()) return {0.0, 0.0};
        return {s_.front(), s_.back()};
    }

    /// A(omega) = integral of omega(s) - |s|.
    double area() const {
        if (kind_ == Kind::Lskv) return 2.0;
        double a = 0.0;
        for (std::size_t i = 0; i + 1 < s_.size(); ++i) {
            a += segment_area(s_[i], v_[i], s_[i + 1], v_[i + 1]);
        }
        return a;
    }

private:
    enum class Kind { Lskv, PiecewiseLinear };

    static double segment_area(double s0, double v0, double s1, double v1) {
        if (s0 < 0.0 && s1 > 0.0) {
            const double vmid = v0 + (0.0 - s0) / (s1 - s0) * (v1 - v0);
            return segment_area(s0, v0, 0.0, vmid) + segment_area(0.0, vmid, s1, v1);
        }
        const double f0 = v0 - std::abs(s0);
        const double f1 = v1 - std::abs(s1);
        return 0.5 * (f0 + f1) * (s1 - s0);
    }

    Kind kind_ = Kind::Lskv;
    std::vector<double> s_;
    std::vector<double> v_;
};

/// omega^t(s) = omega(sqrt(t) s)/sqrt(t). For a partition the breakpoints are the
/// interlacing corners over sqrt(t); heights follow the +-1 slopes from |s| at the ends.
inline ContinuousDiagram rescale(const Partition& p, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("rescale: t must be positive");
    const auto ic = interlacing_of(p);
    const double rt = std::sqrt(t);
    std::vector<double> s, v;
    s.reserve(ic.minima.size() + ic.maxima.size());
    v.reserve(s.capacity());
    double height = std::abs(static_cast<double>(ic.minima.front()));
    double prev = static_cast<double>(ic.minima.front());
    for (std::size_t i = 0; i < ic.minima.size(); ++i) {
        const double x = static_cast<double>(ic.minima[i]);
        if (i > 0) height -= x - prev;  // descending into a valley
        s.push_back(x / rt);
        v.push_back(height / rt);
        prev = x;
        if (i < ic.maxima.size()) {
            const double y = static_cast<double>(ic.maxima[i]);
            height += y - x;
            s.push_back(y / rt);
            v.push_back(height / rt);
            prev = y;
        }
    }
    return ContinuousDiagram::piecewise_linear(std::move(s), std::move(v));
}

/// p_k of a continuous diagram, from the jumps of the profile slope:
/// p_k = sum over breakpoints of (delta slope / 2) * s^k.
inline double moment_p(const ContinuousDiagram& d, int k) {
    if (k < 1) throw std::invalid_argument("moment_p: k must be >= 1");
    if (d.is_lskv()) return lskv_moment(k).get_d();
    const auto& s = d.breakpoints();
    const auto& v = d.values();
    double r = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double left = (i == 0) ? -1.0 : (v[i] - v[i - 1]) / (s[i] - s[i - 1]);
        const double right = (i + 1 == s.size()) ? 1.0 : (v[i + 1] - v[i]) / (s[i + 1] - s[i]);
        r += 0.5 * (right - left) * std::pow(s[i], k);
    }
    return r;
}

/// CSV export of a profile: rows (s, omega_s) at the breakpoints plus a uniform grid
/// over the support padded by one unit.
inline void write_profile_csv(std::ostream& os, const ContinuousDiagram& d, double grid_step = 1e-2) {
    if (!(grid_step > 0.0)) throw std::invalid_argument("write_profile_csv: grid step must be positive");
    const auto [a, b] = d.support();
    std::vector<double> grid;
    for (double s = a - 1.0; s <= b + 1.0 + 1e-12; s += grid_step) grid.push_back(s);
    grid.insert(grid.end(), d.breakpoints().begin(), d.breakpoints().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    os << "s,omega_s\n";
    char buf[64];
    for (double s : grid) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", s, d(s));
        os << buf;
    }
}

struct SupDistance {
    double value = 0.0;
    double grid_error_bound = 0.0;  // the difference of two 1-Lipschitz profiles is 2-Lipschitz
};

/// Sup norm of d - reference over the union of breakpoints plus a uniform grid on the
/// joint support (padded by one grid step on each side).
inline SupDistance sup_distance(const ContinuousDiagram& d, const ContinuousDiagram& reference,
                                double grid_step = 1e-3) {
    if (!(grid_step > 0.0)) throw std::invalid_argument("sup_distance: grid step must be positive");
    const auto [a1, b1] = d.support();
    const auto [a2, b2] = reference.support();
    const double a = std::min(a1, a2) - grid_step;
    const double b = std::max(b1, b2) + grid_step;
    double m = 0.0;
    const long long steps = static_cast<long long>(std::ceil((b - a) / grid_step));
    for (long long i = 0; i <= steps; ++i) {
        const double s = a + static_cast<double>(i) * grid_step;
        m = std::max(m, std::abs(d(s) - reference(s)));
    }
    for (const auto* cd : {&d, &reference}) {
        for (double s : cd->breakpoints()) m = std::max(m, std::abs(d(s) - reference(s)));
    }
    return SupDistance{m, 2.0 * grid_step};
}

}  // namespace gelfand
