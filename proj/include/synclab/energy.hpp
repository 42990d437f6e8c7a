#pragma once

#include "synclab/graph.hpp"

namespace synclab {

// Angle vector in radians. Angles are kept as arbitrary reals; everything
// downstream is 2*pi-periodic and invariant under a global shift, and
// descent trajectories stay smoother unwrapped.
struct PhaseState {
  Vector theta;

  PhaseState() = default;
  explicit PhaseState(Vector t) : theta(std::move(t)) {}

  int size() const { return static_cast<int>(theta.size()); }
};

// The n x 2 factor Q = [x y] with rows (cos theta_i, sin theta_i);
// (Q Q^T)_ij = cos(theta_i - theta_j).
struct CircleEmbedding {
  Vector x;
  Vector y;

  // Materializes Q Q^T (the Gram matrix of the unit rows).
  Matrix gram() const;
};

// r = sum_j e^{i theta_j} as magnitude and angle. The angle is meaningful
// only when the magnitude is above the degeneracy threshold 1e-9 * n.
struct OrderParameter {
  double magnitude = 0.0;
  double angle = 0.0;
  bool degenerate = false;
};

// E(theta) = 1/2 sum_{i,j} a_ij (1 - cos(theta_i - theta_j)), evaluated as
// a single pass over the upper triangle (symmetry makes this exact).
double energy(const WeightedGraph& g, const PhaseState& s);

// Component i is sum_j a_ij sin(theta_i - theta_j); minus the homogeneous
// Kuramoto velocity field.
Vector gradient(const WeightedGraph& g, const PhaseState& s);

// ddiag(A Q Q^T) - A o Q Q^T: the graph Laplacian of the signed weights
// a_ij cos(theta_i - theta_j). Always annihilates the constant vector.
Matrix hessian(const WeightedGraph& g, const PhaseState& s);

CircleEmbedding embedding(const PhaseState& s);

OrderParameter order_parameter(const PhaseState& s);

// Phase-state text format: one angle (radians, decimal) per line;
// '#' starts a comment.
void save_phase_state(const PhaseState& s, const std::filesystem::path& path);
PhaseState load_phase_state(std::istream& in);
PhaseState load_phase_state(const std::filesystem::path& path);

}  // namespace synclab
