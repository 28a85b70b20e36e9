// Probability of violating a Bell inequality under Haar-random projective
// local measurements.
#pragma once

#include "qnl/bell.hpp"
#include "qnl/rng.hpp"

namespace qnl {

struct ViolationEstimate {
    double fraction = 0.0;
    double stderror = 0.0;
    long long violations = 0;
    long long samples = 0;
};

// Draws fresh Haar-random d-outcome projective settings for both parties per
// sample; a sample counts when bell_value exceeds the exact local bound by
// more than 1e-9. Per-sample derived seeds make the estimate independent of
// the thread count.
ViolationEstimate violation_probability(const BellFunctional& f, const DensityOperator& rho,
                                        long long samples, SeededRng rng, int threads = 1);

} // namespace qnl
