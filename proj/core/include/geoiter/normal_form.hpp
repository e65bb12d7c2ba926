#pragma once

// Data model for the symplectic normal form of a closed geodesic's linearized
// Poincare map: eigenvalue-1 blocks (p counts), eigenvalue -1 blocks
// (q counts), planar rotations, 4x4 rotation pairs split into nontrivial and
// trivial kinds, and hyperbolic blocks.  All index computations consume this.

#include <string>
#include <vector>

#include "geoiter/exact.hpp"

namespace geoiter {

struct NormalFormData {
    int p_minus = 0;
    int p_zero = 0;
    int p_plus = 0;
    int q_minus = 0;
    int q_zero = 0;
    int q_plus = 0;
    std::vector<AngleRatio> rotations;        // irrational entries first
    std::vector<AngleRatio> nontrivial_pairs; // irrational entries first
    std::vector<AngleRatio> trivial_pairs;    // irrational entries first
    int h_plus = 0;
    int h_minus = 0; // 0 or 1
    int half_dim = 0;

    int r() const { return static_cast<int>(rotations.size()); }
    int r_star() const { return static_cast<int>(nontrivial_pairs.size()); }
    int r_zero() const { return static_cast<int>(trivial_pairs.size()); }

    // Irrational entry counts (order-independent; the irrational-first
    // ordering itself is a validation concern).
    int k() const;
    int k_star() const;
    int k_zero() const;
};

struct GeodesicModel {
    int dim_M = 2;     // manifold dimension d
    Int initial_index; // i(c) >= 0
    NormalFormData nf; // with half_dim = dim_M - 1
};

// Returns the list of violated invariants; empty means valid.  Violations are
// data, not failures: nothing throws here.
std::vector<std::string> validate_model(const GeodesicModel& model);

bool is_valid(const GeodesicModel& model);

// nu(c) = p_minus + 2 p_zero + p_plus.
Int initial_nullity(const NormalFormData& nf);

enum class Parity { even, odd };

// Parity of the initial index forced by the block decomposition:
// odd iff p_minus + p_zero + q_minus + q_zero + q_plus + r + h_minus is odd.
Parity index_parity(const NormalFormData& nf);

} // namespace geoiter
