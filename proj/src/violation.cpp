#include "qnl/violation.hpp"

#include <cmath>

#include "qnl/parallel.hpp"
#include "qnl/polytope.hpp"

namespace qnl {

ViolationEstimate violation_probability(const BellFunctional& f, const DensityOperator& rho,
                                        long long samples, SeededRng rng, int threads) {
    if (samples < 1) throw Unsupported("violation_probability: samples must be >= 1");
    const Scenario& sc = f.sc;
    if (sc.nA != rho.dA || sc.nB != rho.dB)
        throw Unsupported("violation_probability: outcome counts must equal local dims");
    const double bound = local_bound(f).to_double();

    std::vector<char> hit(static_cast<size_t>(samples), 0);
    parallel_for(static_cast<int>(samples), threads, [&](int i) {
        SeededRng r = rng.derive(0xA10C0000u + static_cast<std::uint64_t>(i));
        std::vector<Povm> alice, bob;
        for (int x = 0; x < sc.nX; ++x) alice.push_back(random_projective_povm(rho.dA, r));
        for (int y = 0; y < sc.nY; ++y) bob.push_back(random_projective_povm(rho.dB, r));
        const double v = bell_value(f, box_from_state(rho, alice, bob));
        hit[static_cast<size_t>(i)] = v > bound + 1e-9 ? 1 : 0;
    });

    ViolationEstimate est;
    est.samples = samples;
    for (char h : hit) est.violations += h;
    est.fraction = static_cast<double>(est.violations) / static_cast<double>(samples);
    est.stderror = std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(samples));
    return est;
}

} // namespace qnl
