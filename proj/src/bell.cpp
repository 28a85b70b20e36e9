#include "qnl/bell.hpp"

namespace qnl {

std::vector<double> BellFunctional::coefficients_double() const {
    std::vector<double> out(xi.size());
    for (size_t i = 0; i < xi.size(); ++i) out[i] = xi[i].to_double();
    return out;
}

double bell_value(const BellFunctional& f, const Box& box) {
    if (!(f.sc == box.sc)) throw ScenarioMismatch("bell_value: functional and box scenarios differ");
    double v = 0.0;
    for (size_t i = 0; i < f.xi.size(); ++i) v += f.xi[i].to_double() * box.p[i];
    return v;
}

double bell_value(const std::vector<double>& xi, const Box& box) {
    if (xi.size() != box.p.size()) throw ScenarioMismatch("bell_value: coefficient length mismatch");
    double v = 0.0;
    for (size_t i = 0; i < xi.size(); ++i) v += xi[i] * box.p[i];
    return v;
}

namespace {

BellFunctional make_chsh() {
    BellFunctional f(Scenario{2, 2, 2, 2}, "CHSH");
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const int sxy = (x == 1 && y == 1) ? -1 : 1;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    f.at(a, b, x, y) = Rational(sxy * (((a + b) % 2 == 0) ? 1 : -1));
        }
    return f;
}

// CGLMP I_d in probability form:
//   I_d = sum_{k=0}^{floor(d/2)-1} (1 - 2k/(d-1)) *
//         { [P(A1=B1+k) + P(B1=A2+k+1) + P(A2=B2+k) + P(B2=A1+k)]
//         - [P(A1=B1-k-1) + P(B1=A2-k) + P(A2=B2-k-1) + P(B2=A1-k-1)] }
// with P(Ax = By + k) = sum_j p(a = j+k mod d, b = j | x, y) and settings
// numbered A1,A2 -> x=0,1; B1,B2 -> y=0,1. Local bound 2 for all d
// (re-derived here by exact vertex enumeration in the tests).
BellFunctional make_cglmp(int d) {
    BellFunctional f(Scenario{2, 2, d, d}, "CGLMP" + std::to_string(d));
    auto addAeqBplus = [&](int x, int y, int k, const Rational& w) {
        // P(A = B + k): a = (j + k) mod d, b = j
        for (int j = 0; j < d; ++j) f.at(((j + k) % d + d) % d, j, x, y) += w;
    };
    auto addBeqAplus = [&](int x, int y, int k, const Rational& w) {
        // P(B = A + k): a = j, b = (j + k) mod d
        for (int j = 0; j < d; ++j) f.at(j, ((j + k) % d + d) % d, x, y) += w;
    };
    for (int k = 0; k <= d / 2 - 1; ++k) {
        const Rational w = Rational(1) - Rational(2 * k, d - 1);
        const Rational mw = Rational(0) - w;
        addAeqBplus(0, 0, k, w);      // P(A1 = B1 + k)
        addBeqAplus(1, 0, k + 1, w);  // P(B1 = A2 + k + 1)
        addAeqBplus(1, 1, k, w);      // P(A2 = B2 + k)
        addBeqAplus(0, 1, k, w);      // P(B2 = A1 + k)
        addAeqBplus(0, 0, -k - 1, mw); // P(A1 = B1 - k - 1)
        addBeqAplus(1, 0, -k, mw);     // P(B1 = A2 - k)
        addAeqBplus(1, 1, -k - 1, mw); // P(A2 = B2 - k - 1)
        addBeqAplus(0, 1, -k - 1, mw); // P(B2 = A1 - k - 1)
    }
    return f;
}

} // namespace

BellFunctional canonical_functional(FunctionalKind kind, int d) {
    if (kind == FunctionalKind::CHSH) {
        if (d != 2) throw Unsupported("canonical_functional: CHSH requires d = 2");
        return make_chsh();
    }
    if (d < 3) throw Unsupported("canonical_functional: CGLMP requires d >= 3");
    return make_cglmp(d);
}

} // namespace qnl
