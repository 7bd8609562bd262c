#pragma once

#include "polya/graph.hpp"

#include <Eigen/Core>
#include <random>
#include <vector>

namespace polya {

/// Initial ball placement and the red-addition schedule. Red and black counts
/// must both be strictly positive per node; delta_r is the per-node red mass
/// added on a red draw (constant in time in the default configuration).
struct InitialCondition {
    Eigen::ArrayXd red;
    Eigen::ArrayXd black;
    Eigen::ArrayXd delta_r;
};

/// One step's draws: z[i] in {0,1}, drawn with P(z[i]=1) = s_prev[i]
/// independently across nodes given the history.
struct DrawOutcome {
    Eigen::ArrayXi z;
    Eigen::ArrayXd s_prev;
};

/// Per-node ball masses at time n plus cached super-urn sums over closed
/// neighborhoods. Masses are nonnegative reals (curing policies produce
/// fractional additions); the initial black mass is never removed, so
/// U and S stay strictly inside (0,1).
///
/// Caches are maintained by delta propagation to closed neighborhoods,
/// O(sum of closed-neighborhood sizes) per step; debug builds re-verify them
/// against a fresh sum every step.
class NetworkState {
public:
    NetworkState(const Graph& g, const InitialCondition& ic);

    int time() const { return time_; }
    const Graph& graph() const { return *graph_; }

    const Eigen::ArrayXd& red_mass() const { return red_; }
    const Eigen::ArrayXd& total_mass() const { return total_; }
    const Eigen::ArrayXd& super_red() const { return super_red_; }
    const Eigen::ArrayXd& super_total() const { return super_total_; }

    /// Individual-urn red proportions U_i.
    Eigen::ArrayXd u() const { return red_ / total_; }
    /// Super-urn red proportions S_i (the next draw probabilities).
    Eigen::ArrayXd s() const { return super_red_ / super_total_; }
    double u(int i) const { return red_[i] / total_[i]; }
    double super_urn_proportion(int i) const { return super_red_[i] / super_total_[i]; }

    /// Draws every node (one uniform per node, in node-id order), applies the
    /// mass additions, advances time. delta_r/delta_b must be elementwise >= 0.
    DrawOutcome step(const Eigen::ArrayXd& delta_r, const Eigen::ArrayXd& delta_b,
                     std::mt19937_64& rng);

    /// Deterministic step with the draws given; used by the replay oracles and
    /// by tests that force outcomes.
    void apply_draws(const Eigen::ArrayXd& delta_r, const Eigen::ArrayXd& delta_b,
                     const Eigen::ArrayXi& z);

    /// True when the cached super-urn sums match a fresh neighborhood sum to
    /// the given relative tolerance.
    bool caches_consistent(double rel_tol = 1e-12) const;

private:
    const Graph* graph_;
    int time_ = 0;
    Eigen::ArrayXd red_, total_, super_red_, super_total_;
};

/// Throws std::invalid_argument naming the offending field when ic violates
/// its invariants or does not match g's node count.
void validate_initial_condition(const Graph& g, const InitialCondition& ic);

NetworkState init_state(const Graph& g, const InitialCondition& ic);

/// Probability of an exact draw history under the process law, obtained by
/// replaying the state recursion. draws[t][i] and delta_b_schedule[t] describe
/// step t+1. Enumeration oracle: restricted to node_count <= 3 and horizon
/// <= 12.
double joint_probability(const Graph& g, const InitialCondition& ic,
                         const std::vector<Eigen::ArrayXi>& draws,
                         const std::vector<Eigen::ArrayXd>& delta_b_schedule);

/// Exact average infection rate per step (mean over nodes of P(Z_{i,n}=1)) by
/// full enumeration of draw histories; entry t is step t+1. Requires
/// node_count <= 3 and node_count*horizon <= 24.
Eigen::ArrayXd exact_infection_rate(const Graph& g, const InitialCondition& ic,
                                    const std::vector<Eigen::ArrayXd>& delta_b_schedule,
                                    int horizon);

/// Single classical urn with equal reinforcement for both colors, kept in the
/// normalized (rho, delta) parameterization.
struct ClassicalUrn {
    double rho;    // initial red proportion R/T
    double delta;  // correlation parameter Delta/T
    long draws = 0;
    long reds = 0;

    static ClassicalUrn from_counts(double red, double black, double reinforcement);

    /// Red proportion after `draws` draws.
    double proportion() const {
        return (rho + delta * static_cast<double>(reds)) /
               (1.0 + static_cast<double>(draws) * delta);
    }
};

/// One draw: returns 1 on red, updates the recursion. P(red) = proportion().
int classical_draw(ClassicalUrn& urn, std::mt19937_64& rng);

}  // namespace polya
