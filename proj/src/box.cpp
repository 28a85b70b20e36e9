#include "qnl/box.hpp"

#include <cmath>

namespace qnl {

std::int64_t Scenario::vertex_count() const {
    long double v = 1.0L;
    for (int x = 0; x < nX; ++x) v *= nA;
    for (int y = 0; y < nY; ++y) v *= nB;
    if (v > 1e6L) throw TooLarge("scenario: deterministic strategy count exceeds 1e6");
    return static_cast<std::int64_t>(v);
}

Box::InvariantReport Box::check_invariants() const {
    InvariantReport rep{1.0, 0.0, 0.0};
    for (double v : p) rep.min_entry = std::min(rep.min_entry, v);

    for (int x = 0; x < sc.nX; ++x)
        for (int y = 0; y < sc.nY; ++y) {
            double s = 0.0;
            for (int a = 0; a < sc.nA; ++a)
                for (int b = 0; b < sc.nB; ++b) s += at(a, b, x, y);
            rep.norm_defect = std::max(rep.norm_defect, std::abs(s - 1.0));
        }

    // Alice marginal independent of y
    for (int x = 0; x < sc.nX; ++x)
        for (int a = 0; a < sc.nA; ++a) {
            double ref = 0.0;
            for (int b = 0; b < sc.nB; ++b) ref += at(a, b, x, 0);
            for (int y = 1; y < sc.nY; ++y) {
                double m = 0.0;
                for (int b = 0; b < sc.nB; ++b) m += at(a, b, x, y);
                rep.signaling_defect = std::max(rep.signaling_defect, std::abs(m - ref));
            }
        }
    // Bob marginal independent of x
    for (int y = 0; y < sc.nY; ++y)
        for (int b = 0; b < sc.nB; ++b) {
            double ref = 0.0;
            for (int a = 0; a < sc.nA; ++a) ref += at(a, b, 0, y);
            for (int x = 1; x < sc.nX; ++x) {
                double m = 0.0;
                for (int a = 0; a < sc.nA; ++a) m += at(a, b, x, y);
                rep.signaling_defect = std::max(rep.signaling_defect, std::abs(m - ref));
            }
        }
    return rep;
}

Box box_from_state(const DensityOperator& rho, const std::vector<Povm>& alice,
                   const std::vector<Povm>& bob) {
    if (alice.empty() || bob.empty()) throw InvalidDims("box_from_state: no measurements");
    Scenario sc;
    sc.nX = static_cast<int>(alice.size());
    sc.nY = static_cast<int>(bob.size());
    sc.nA = alice.front().outcomes();
    sc.nB = bob.front().outcomes();
    for (const auto& m : alice) {
        if (m.dim != rho.dA) throw InvalidDims("box_from_state: Alice effect dim != dA");
        if (m.outcomes() != sc.nA) throw InvalidDims("box_from_state: ragged Alice outcome counts");
    }
    for (const auto& m : bob) {
        if (m.dim != rho.dB) throw InvalidDims("box_from_state: Bob effect dim != dB");
        if (m.outcomes() != sc.nB) throw InvalidDims("box_from_state: ragged Bob outcome counts");
    }

    // p(a,b|x,y) = Tr[A_{a|x} S_{b|y}] with the steered operator
    // S_{b|y} = Tr_B[(I (x) B_{b|y}) rho]
    Box box(sc);
    for (int y = 0; y < sc.nY; ++y)
        for (int b = 0; b < sc.nB; ++b) {
            Matrix steered(rho.dA, rho.dA);
            const Matrix& eff = bob[static_cast<size_t>(y)].effects[static_cast<size_t>(b)];
            for (int i = 0; i < rho.dA; ++i)
                for (int k = 0; k < rho.dA; ++k) {
                    cplx s = 0.0;
                    for (int j = 0; j < rho.dB; ++j)
                        for (int l = 0; l < rho.dB; ++l)
                            s += rho.rho(i * rho.dB + j, k * rho.dB + l) * eff(l, j);
                    steered(i, k) = s;
                }
            for (int x = 0; x < sc.nX; ++x)
                for (int a = 0; a < sc.nA; ++a)
                    box.at(a, b, x, y) =
                        trace_product_real(alice[static_cast<size_t>(x)].effects[static_cast<size_t>(a)], steered);
        }
    return box;
}

Box white_noise_box(const Scenario& sc) {
    Box box(sc);
    const double v = 1.0 / (sc.nA * sc.nB);
    for (auto& x : box.p) x = v;
    return box;
}

Box pr_box() {
    Box box{Scenario{2, 2, 2, 2}};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    box.at(a, b, x, y) = ((a ^ b) == (x & y)) ? 0.5 : 0.0;
    return box;
}

DensityOperator singlet() {
    const double r = 1.0 / std::sqrt(2.0);
    PureState psi(2, 2, {0.0, r, -r, 0.0});
    return density_from_pure(psi);
}

std::vector<Povm> chsh_optimal_alice() {
    // sigma_z and sigma_x
    return {bloch_povm(0.0, 0.0), bloch_povm(std::numbers::pi / 2.0, 0.0)};
}

std::vector<Povm> chsh_optimal_bob() {
    // -(z+x)/sqrt2 and (x-z)/sqrt2, which give CHSH = 2 sqrt 2 on the singlet
    const double pi = std::numbers::pi;
    return {bloch_povm(3.0 * pi / 4.0, pi), bloch_povm(3.0 * pi / 4.0, 0.0)};
}

Box singlet_chsh_box() {
    return box_from_state(singlet(), chsh_optimal_alice(), chsh_optimal_bob());
}

} // namespace qnl
