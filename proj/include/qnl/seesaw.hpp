// Bell-functional maximization over measurements for a fixed state.
//
// Two-outcome functionals use exact alternating half-steps: with the other
// party fixed, the optimal binary observable is the positive-part projector
// of the steered operator, so the objective is monotone by construction.
// For d >= 3 outcomes, measurements are projective bases parameterized by a
// unitary chart and improved by seeded finite-difference ascent.
#pragma once

#include <cstdint>
#include <vector>

#include "qnl/bell.hpp"
#include "qnl/rng.hpp"

namespace qnl {

struct SeeSawConfig {
    int restarts = 8;
    int maxIters = 400;
    double tol = 1e-10;
    SeededRng rng{1};
    double ascentStep = 0.2; // initial step for the d >= 3 parameterized ascent

    void validate() const; // tol > 0, restarts*maxIters within budget
};

struct MeasurementPair {
    std::vector<Povm> alice;
    std::vector<Povm> bob;
};

struct BellMaxResult {
    double value = -1e300;
    std::vector<Povm> alice;
    std::vector<Povm> bob;
    bool converged = false;
    bool monotone = true; // no objective decrease seen across any half-step
    int bestRestart = -1;
    int iterations = 0;
};

// Best value over restarts; optional `probes` are extra deterministic
// starting points (e.g. warm starts) evaluated alongside the seeded ones.
BellMaxResult maximize_bell(const BellFunctional& f, const DensityOperator& rho,
                            const SeeSawConfig& cfg,
                            const std::vector<MeasurementPair>& probes = {});

// Same maximization for a plain coefficient tensor (used by the enclosure
// test, whose search directions are floating point).
BellMaxResult maximize_bell(const Scenario& sc, const std::vector<double>& xi,
                            const DensityOperator& rho, const SeeSawConfig& cfg,
                            const std::vector<MeasurementPair>& probes = {});

// Closed-form CHSH maximum for a two-qubit state: 2 sqrt(u1+u2) with u1, u2
// the largest eigenvalues of T^T T, T_ij = Tr[rho (sigma_i x sigma_j)].
// Independent oracle for the see-saw path.
double horodecki_chsh(const DensityOperator& rho);

// Steered operators: S = Tr_B[(I x E) rho] on A, and the mirror on B.
Matrix steer_to_A(const DensityOperator& rho, const Matrix& effB);
Matrix steer_to_B(const DensityOperator& rho, const Matrix& effA);

} // namespace qnl
