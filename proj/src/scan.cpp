#include "qnl/scan.hpp"

#include <cmath>

#include "qnl/parallel.hpp"

namespace qnl {

StateFamily qubit_schmidt_family() {
    return {0.05, std::numbers::pi / 4.0, [](double g) { return two_qubit_schmidt(g); },
            "qubit-schmidt"};
}

StateFamily qutrit_schmidt_family() {
    return {0.5, 1.0, [](double g) { return schmidt_state({1.0, g, 1.0}); }, "qutrit-schmidt"};
}

ScanResult anomaly_scan(const BellFunctional& f, const StateFamily& family, int gridPoints,
                        const SeeSawConfig& cfg, double tieTol, int threads) {
    if (gridPoints < 3) throw Unsupported("anomaly_scan: gridPoints must be >= 3");
    ScanResult res;
    res.records.resize(static_cast<size_t>(gridPoints));

    parallel_for(gridPoints, threads, [&](int i) {
        const double g = family.lo + (family.hi - family.lo) * i / (gridPoints - 1);
        PureState psi = family.generator(g);
        DensityOperator rho = density_from_pure(psi);

        SeeSawConfig local = cfg;
        local.rng = cfg.rng.derive(0x5CA40000u + static_cast<std::uint64_t>(i));
        BellMaxResult mx = maximize_bell(f, rho, local);

        ScanRecord& rec = res.records[static_cast<size_t>(i)];
        rec.gamma = g;
        rec.entropyBits = entanglement_entropy(psi);
        rec.maxViolation = mx.value;
        rec.converged = mx.converged;
        rec.measurementSummary = "restart=" + std::to_string(mx.bestRestart) +
                                 " iters=" + std::to_string(mx.iterations);
    });

    double bestV = -1e300, maxEntropy = -1e300;
    for (int i = 0; i < gridPoints; ++i) {
        const auto& r = res.records[static_cast<size_t>(i)];
        if (!r.converged) res.diagnosticDegraded = true;
        if (r.maxViolation > bestV) {
            bestV = r.maxViolation;
            res.argmaxIndex = i;
        }
        maxEntropy = std::max(maxEntropy, r.entropyBits);
    }

    // conservative tie-breaking: if any near-argmax point already has the
    // family's maximal entropy, report no anomaly
    bool maxEntropyPointNearArgmax = false;
    for (const auto& r : res.records)
        if (r.maxViolation >= bestV - tieTol && r.entropyBits >= maxEntropy - 1e-9)
            maxEntropyPointNearArgmax = true;
    res.anomalyDetected = !maxEntropyPointNearArgmax;
    return res;
}

} // namespace qnl
