#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/diagram.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

/// Probability measure whose Cauchy transform is the diagram's generating function.
/// Atomic with rational data for a partition; the semicircle law for Omega.
class TransitionMeasure {
public:
    static TransitionMeasure semicircle() { return TransitionMeasure(); }

    static TransitionMeasure atomic(std::vector<std::pair<Rat, Rat>> atoms) {
        TransitionMeasure m;
        m.semicircle_ = false;
        m.atoms_ = std::move(atoms);
        return m;
    }

    bool is_semicircle() const { return semicircle_; }
    const std::vector<std::pair<Rat, Rat>>& atoms() const { return atoms_; }  // (location, weight)

    Rat total_mass() const {
        if (semicircle_) return Rat(1);
        Rat s = 0;
        for (const auto& [loc, w] : atoms_) s += w;
        return s;
    }

    /// Raw moments m_1..m_kmax. Semicircle moments are the aerated Catalan numbers.
    std::vector<Rat> moments(int kmax) const {
        std::vector<Rat> out(static_cast<std::size_t>(kmax));
        if (semicircle_) {
            for (int k = 2; k <= kmax; k += 2) {
                out[static_cast<std::size_t>(k - 1)] =
                    Rat(binomial_int(static_cast<unsigned long>(k), static_cast<unsigned long>(k / 2)) / Int(k / 2 + 1));
            }
            return out;
        }
        for (const auto& [loc, w] : atoms_) {
            Rat p = 1;
            for (int k = 1; k <= kmax; ++k) {
                p *= loc;
                out[static_cast<std::size_t>(k - 1)] += w * p;
            }
        }
        return out;
    }

private:
    TransitionMeasure() = default;

    bool semicircle_ = true;
    std::vector<std::pair<Rat, Rat>> atoms_;
};

/// Partial-fraction decomposition of G_lambda: atoms at the interlacing minima x_i with
/// weights w_i = prod_j (x_i - y_j) / prod_{j != i} (x_i - x_j); positive, summing to 1.
inline TransitionMeasure transition_measure(const Partition& p) {
    const auto ic = interlacing_of(p);
    std::vector<std::pair<Rat, Rat>> atoms;
    atoms.reserve(ic.minima.size());
    for (std::size_t i = 0; i < ic.minima.size(); ++i) {
        Rat w = 1;
        for (long long y : ic.maxima) w *= Rat(static_cast<long>(ic.minima[i] - y));
        for (std::size_t j = 0; j < ic.minima.size(); ++j) {
            if (j != i) w /= Rat(static_cast<long>(ic.minima[i] - ic.minima[j]));
        }
        if (w <= 0) throw std::logic_error("transition_measure: nonpositive weight");
        atoms.emplace_back(Rat(static_cast<long>(ic.minima[i])), w);
    }
    TransitionMeasure m = TransitionMeasure::atomic(std::move(atoms));
    if (m.total_mass() != 1) throw std::logic_error("transition_measure: weights do not sum to 1");
    return m;
}

}  // namespace gelfand
