#ifndef FORESTCC_JLT_HPP
#define FORESTCC_JLT_HPP

#include <cstdint>

#include "forestcc/forest_approx.hpp"
#include "forestcc/graph.hpp"

namespace forestcc {

struct JltConfig {
    double eps = 0.3; // in (0, 1); q = ceil(ln n / eps^2) linear systems
    std::uint64_t seed = 1;
    int workers = 0;
    double solver_tolerance = 1e-8;
    std::optional<count> q_override;
    void validate() const;
};

/// Number of sketched Laplacian solves for the projection baseline.
count compute_q(double eps, node n);

/// Random-projection estimate of diag(Omega): q Rademacher sketches of the
/// weighted incidence operator of the augmented graph, one Laplacian solve
/// each, then r(u_star, v) ~= sum_i (z_i[u_star] - z_i[v])^2.
DiagResult jlt_diag(const Graph &g, double alpha, const JltConfig &cfg);

} // namespace forestcc

#endif
