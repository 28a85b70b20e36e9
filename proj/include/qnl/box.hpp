// Correlation boxes P(a,b|x,y): scenario metadata, invariant checks, quantum
// boxes from states + measurements, and the standard reference boxes.
#pragma once

#include <cstdint>
#include <vector>

#include "qnl/povm.hpp"
#include "qnl/states.hpp"

namespace qnl {

struct Scenario {
    int nX = 2; // settings, Alice
    int nY = 2; // settings, Bob
    int nA = 2; // outcomes per setting, Alice
    int nB = 2; // outcomes per setting, Bob

    int cells() const { return nA * nB * nX * nY; }
    // number of deterministic strategies nA^nX * nB^nY; throws TooLarge above
    // the enumeration bound of 1e6
    std::int64_t vertex_count() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Box {
    Scenario sc;
    std::vector<double> p; // row-major [a][b][x][y]

    Box() = default;
    explicit Box(Scenario s) : sc(s), p(static_cast<size_t>(s.cells()), 0.0) {}

    double& at(int a, int b, int x, int y) {
        return p[static_cast<size_t>(((a * sc.nB + b) * sc.nX + x) * sc.nY + y)];
    }
    double at(int a, int b, int x, int y) const {
        return p[static_cast<size_t>(((a * sc.nB + b) * sc.nX + x) * sc.nY + y)];
    }

    struct InvariantReport {
        double min_entry;        // >= -1e-12 required
        double norm_defect;      // max over (x,y) of |sum_ab p - 1|, <= 1e-9
        double signaling_defect; // max marginal drift across the other party's settings, <= 1e-9
        bool ok() const { return min_entry >= -1e-12 && norm_defect <= 1e-9 && signaling_defect <= 1e-9; }
    };
    InvariantReport check_invariants() const;
};

// p(a,b|x,y) = Tr[(A_{a|x} (x) B_{b|y}) rho]. Throws InvalidDims on any
// dimension mismatch; ScenarioMismatch is reserved for box/functional pairs.
Box box_from_state(const DensityOperator& rho, const std::vector<Povm>& alice,
                   const std::vector<Povm>& bob);

Box white_noise_box(const Scenario& sc);
// a (+) b = x.y with uniform marginals; CHSH value 4
Box pr_box();
// singlet measured with the CHSH-optimal settings (value 2*sqrt(2))
Box singlet_chsh_box();

DensityOperator singlet();
std::vector<Povm> chsh_optimal_alice();
std::vector<Povm> chsh_optimal_bob();

} // namespace qnl
