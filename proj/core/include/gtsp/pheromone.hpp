#pragma once

#include <cstddef>
#include <vector>

#include "gtsp/model.hpp"

namespace gtsp {

/// Visibility used for zero-cost edges in place of 1/0.
inline constexpr double kZeroCostVisibility = 1e9;

/// 1 / length, capped at kZeroCostVisibility for zero length.
double inverse_length(Cost length);

/// Symmetric per-edge trail intensities with the initial value tau0 and the
/// reset bound tau_max.
class PheromoneMatrix {
public:
    PheromoneMatrix(std::size_t n, double tau0, double tau_max);

    /// tau0 = 1 / (n * L_nn) and tau_max = 1 / ((1 - rho) * L_nn).
    static PheromoneMatrix from_nearest_neighbor(std::size_t n, Cost nn_length, double rho);

    std::size_t size() const noexcept { return n_; }
    double tau0() const noexcept { return tau0_; }
    double tau_max() const noexcept { return tau_max_; }

    double operator()(NodeId i, NodeId j) const noexcept { return tau_[i * n_ + j]; }

    /// Sets both directions of the edge.
    void set(NodeId i, NodeId j, double value) noexcept {
        tau_[i * n_ + j] = value;
        tau_[j * n_ + i] = value;
    }

    double max_value() const;
    double min_value() const;

private:
    std::size_t n_;
    double tau0_;
    double tau_max_;
    std::vector<double> tau_;
};

// Single-edge rules. Each returns the new trail value.

/// (1 - rho) * tau + rho * tau0.
double local_update_acs(double tau, double rho, double tau0);

/// (1 - rho) * tau + rho / (n * best_cost). Throws std::logic_error when
/// best_cost is negative or not finite (no best tour yet).
double local_update_racs(double tau, double rho, Cost best_cost, std::size_t n);

/// s^2 * tau + (1 - s)^2 * delta / n, with delta = tau0 in the solvers.
double local_update_sacs(double tau, double s, double delta, std::size_t n);

/// q0^2 * tau + (1 - q0)^2 * tau0.
double local_update_srm(double tau, double q0, double tau0);

// Matrix rules over the edges of the best tour (closing edge included).

/// tau := (1 - rho) * tau + rho / best.cost on best-tour edges only.
void global_update(PheromoneMatrix& pheromone, const Tour& best, double rho);

/// tau := q0^2 * tau + (1 - q0)^2 / best.cost on best-tour edges only.
void global_update_srm(PheromoneMatrix& pheromone, const Tour& best, double q0);

/// Resets every edge with tau > tau_max to tau0. Returns the number reset.
std::size_t clamp_pheromone(PheromoneMatrix& pheromone);

}  // namespace gtsp
