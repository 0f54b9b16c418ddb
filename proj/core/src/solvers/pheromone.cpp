#include "gtsp/pheromone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gtsp/error.hpp"

namespace gtsp {

double inverse_length(Cost length) {
    return length > 0.0 ? 1.0 / length : kZeroCostVisibility;
}

PheromoneMatrix::PheromoneMatrix(std::size_t n, double tau0, double tau_max)
    : n_(n), tau0_(tau0), tau_max_(tau_max), tau_(n * n, tau0) {
    if (!(tau0 > 0.0) || !std::isfinite(tau0)) throw InputError("tau0 must be positive and finite");
    if (!(tau_max >= tau0)) throw InputError("tau_max must not be below tau0");
}

PheromoneMatrix PheromoneMatrix::from_nearest_neighbor(std::size_t n, Cost nn_length, double rho) {
    const double inv = inverse_length(nn_length);
    return PheromoneMatrix(n, inv / static_cast<double>(n), inv / (1.0 - rho));
}

double PheromoneMatrix::max_value() const { return *std::max_element(tau_.begin(), tau_.end()); }

double PheromoneMatrix::min_value() const { return *std::min_element(tau_.begin(), tau_.end()); }

double local_update_acs(double tau, double rho, double tau0) {
    return (1.0 - rho) * tau + rho * tau0;
}

double local_update_racs(double tau, double rho, Cost best_cost, std::size_t n) {
    if (!(best_cost >= 0.0) || !std::isfinite(best_cost)) {
        throw std::logic_error("RACS local rule needs a best tour length, got " +
                               std::to_string(best_cost));
    }
    return (1.0 - rho) * tau + rho * inverse_length(best_cost) / static_cast<double>(n);
}

double local_update_sacs(double tau, double s, double delta, std::size_t n) {
    return s * s * tau + (1.0 - s) * (1.0 - s) * delta / static_cast<double>(n);
}

double local_update_srm(double tau, double q0, double tau0) {
    return q0 * q0 * tau + (1.0 - q0) * (1.0 - q0) * tau0;
}

namespace {

template <typename Rule>
void for_each_tour_edge(PheromoneMatrix& pheromone, const Tour& tour, Rule rule) {
    const auto& nodes = tour.nodes;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const NodeId i = nodes[k];
        const NodeId j = nodes[(k + 1) % nodes.size()];
        pheromone.set(i, j, rule(pheromone(i, j)));
    }
}

}  // namespace

void global_update(PheromoneMatrix& pheromone, const Tour& best, double rho) {
    const double deposit = inverse_length(best.cost);
    for_each_tour_edge(pheromone, best,
                       [&](double tau) { return (1.0 - rho) * tau + rho * deposit; });
}

void global_update_srm(PheromoneMatrix& pheromone, const Tour& best, double q0) {
    const double deposit = inverse_length(best.cost);
    const double keep = q0 * q0;
    const double add = (1.0 - q0) * (1.0 - q0);
    for_each_tour_edge(pheromone, best, [&](double tau) { return keep * tau + add * deposit; });
}

std::size_t clamp_pheromone(PheromoneMatrix& pheromone) {
    std::size_t reset = 0;
    const std::size_t n = pheromone.size();
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (pheromone(i, j) > pheromone.tau_max()) {
                pheromone.set(i, j, pheromone.tau0());
                ++reset;
            }
        }
    }
    return reset;
}

}  // namespace gtsp
