// Anomaly scans: sweep a Schmidt-coefficient state family, maximize a Bell
// functional at every grid point, and compare where the violation peaks
// against where the entanglement entropy peaks.
#pragma once

#include <functional>
#include <string>

#include "qnl/seesaw.hpp"

namespace qnl {

struct StateFamily {
    double lo = 0.0;
    double hi = 1.0;
    std::function<PureState(double)> generator;
    std::string label;
};

// cos(g)|00> + sin(g)|11>, g in [0.05, pi/4]
StateFamily qubit_schmidt_family();
// (|00> + g|11> + |22>) / sqrt(2 + g^2), g in [0.5, 1.0]
StateFamily qutrit_schmidt_family();

struct ScanRecord {
    double gamma = 0.0;
    double entropyBits = 0.0;
    double maxViolation = 0.0;
    std::string measurementSummary;
    bool converged = false;
};

struct ScanResult {
    std::vector<ScanRecord> records;
    bool anomalyDetected = false;
    bool diagnosticDegraded = false; // some grid point failed to converge
    int argmaxIndex = -1;
};

// anomalyDetected is TRUE iff no grid point within tieTol of the violation
// maximum has (close to) the family's maximal entropy; ties go to "no
// anomaly". Grid points use per-index derived seeds.
ScanResult anomaly_scan(const BellFunctional& f, const StateFamily& family, int gridPoints,
                        const SeeSawConfig& cfg, double tieTol = 1e-6, int threads = 1);

} // namespace qnl
