// Bell functionals: exact rational coefficient tensors, evaluation on boxes,
// and the canonical CHSH / CGLMP tables.
#pragma once

#include <string>
#include <vector>

#include "qnl/box.hpp"
#include "qnl/rational.hpp"

namespace qnl {

struct BellFunctional {
    Scenario sc;
    std::vector<Rational> xi; // row-major [a][b][x][y]
    std::string name;

    BellFunctional() = default;
    BellFunctional(Scenario s, std::string n)
        : sc(s), xi(static_cast<size_t>(s.cells())), name(std::move(n)) {}

    Rational& at(int a, int b, int x, int y) {
        return xi[static_cast<size_t>(((a * sc.nB + b) * sc.nX + x) * sc.nY + y)];
    }
    const Rational& at(int a, int b, int x, int y) const {
        return xi[static_cast<size_t>(((a * sc.nB + b) * sc.nX + x) * sc.nY + y)];
    }

    std::vector<double> coefficients_double() const;
};

// Linear contraction sum_abxy xi * p. Throws ScenarioMismatch.
double bell_value(const BellFunctional& f, const Box& box);
double bell_value(const std::vector<double>& xi, const Box& box);

enum class FunctionalKind { CHSH, CGLMP };

// CHSH in full probability form (xi_abxy = s_xy (-1)^(a+b), s = [[1,1],[1,-1]])
// and the CGLMP I_d table for d >= 3. Both have exact local bound 2.
BellFunctional canonical_functional(FunctionalKind kind, int d);

} // namespace qnl
