// The local polytope: deterministic-strategy vertices, exact local bounds,
// and LP membership with a primal model or a dual separating functional.
#pragma once

#include <vector>

#include "qnl/bell.hpp"

namespace qnl {

struct DeterministicStrategy {
    std::vector<int> alice; // setting -> outcome
    std::vector<int> bob;
};

struct Vertex {
    DeterministicStrategy strategy;
    Box box;
};

// All nA^nX * nB^nY deterministic vertex boxes, in a fixed enumeration order
// (Alice digits vary fastest). Throws TooLarge beyond the enumeration bound.
std::vector<Vertex> enumerate_deterministic(const Scenario& sc);

struct LocalModel {
    std::vector<double> weights; // over enumerate_deterministic order
};

Box mix_vertices(const Scenario& sc, const std::vector<Vertex>& verts, const LocalModel& model);

// Exact rational maximum of the functional over all deterministic vertices.
Rational local_bound(const BellFunctional& f);

struct LocalityVerdict {
    bool local = false;
    double distance = 0.0; // max-norm distance to the polytope (LP optimum)
    LocalModel model;      // on local == true
    // on local == false: separating functional with |coeff|_1 <= 1
    std::vector<double> witness;
    double witness_value = 0.0;       // functional on the tested box
    double witness_local_bound = 0.0; // exact max over vertices
    double margin = 0.0;              // value - bound > 0
};

// Linear feasibility over vertex weights: TRUE iff some mixture reproduces
// the box within tol in max-norm.
LocalityVerdict is_local(const Box& box, double tol);

} // namespace qnl
