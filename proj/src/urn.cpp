#include "polya/urn.hpp"

#include "polya/rng.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polya {

void validate_initial_condition(const Graph& g, const InitialCondition& ic) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    if (ic.red.size() != n || ic.black.size() != n || ic.delta_r.size() != n)
        throw std::invalid_argument("initial condition: vector sizes do not match node count");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(ic.red[i] > 0.0))
            throw std::invalid_argument("initial condition: red[" + std::to_string(i) +
                                        "] must be > 0");
        if (!(ic.black[i] > 0.0))
            throw std::invalid_argument("initial condition: black[" + std::to_string(i) +
                                        "] must be > 0");
        if (ic.delta_r[i] < 0.0)
            throw std::invalid_argument("initial condition: delta_r[" + std::to_string(i) +
                                        "] must be >= 0");
    }
}

NetworkState::NetworkState(const Graph& g, const InitialCondition& ic) : graph_(&g) {
    validate_initial_condition(g, ic);
    red_ = ic.red;
    total_ = ic.red + ic.black;
    const int n = g.node_count();
    super_red_.setZero(n);
    super_total_.setZero(n);
    for (int i = 0; i < n; ++i) {
        for (int j : g.closed_neighborhood(i)) {
            super_red_[i] += red_[j];
            super_total_[i] += total_[j];
        }
    }
}

NetworkState init_state(const Graph& g, const InitialCondition& ic) {
    return NetworkState(g, ic);
}

DrawOutcome NetworkState::step(const Eigen::ArrayXd& delta_r, const Eigen::ArrayXd& delta_b,
                               std::mt19937_64& rng) {
    const int n = graph_->node_count();
    DrawOutcome out;
    out.s_prev = s();
    out.z.resize(n);
    // Node-id order; exactly one variate per node regardless of deltas.
    for (int i = 0; i < n; ++i) out.z[i] = uniform01(rng) <= out.s_prev[i] ? 1 : 0;
    apply_draws(delta_r, delta_b, out.z);
    return out;
}

void NetworkState::apply_draws(const Eigen::ArrayXd& delta_r, const Eigen::ArrayXd& delta_b,
                               const Eigen::ArrayXi& z) {
    const int n = graph_->node_count();
    if (delta_r.size() != n || delta_b.size() != n || z.size() != n)
        throw std::invalid_argument("step: vector sizes do not match node count");
    if ((delta_r < 0.0).any()) throw std::invalid_argument("step: delta_r must be >= 0");
    if ((delta_b < 0.0).any()) throw std::invalid_argument("step: delta_b must be >= 0");

    for (int i = 0; i < n; ++i) {
        const double dr = z[i] ? delta_r[i] : 0.0;
        const double db = z[i] ? 0.0 : delta_b[i];
        if (dr == 0.0 && db == 0.0) continue;  // sampling with replacement
        red_[i] += dr;
        total_[i] += dr + db;
        for (int j : graph_->closed_neighborhood(i)) {
            super_red_[j] += dr;
            super_total_[j] += dr + db;
        }
    }
    ++time_;
#ifndef NDEBUG
    assert(caches_consistent());
#endif
}

bool NetworkState::caches_consistent(double rel_tol) const {
    const int n = graph_->node_count();
    for (int i = 0; i < n; ++i) {
        double fresh_red = 0.0, fresh_total = 0.0;
        for (int j : graph_->closed_neighborhood(i)) {
            fresh_red += red_[j];
            fresh_total += total_[j];
        }
        if (std::abs(fresh_red - super_red_[i]) > rel_tol * fresh_red) return false;
        if (std::abs(fresh_total - super_total_[i]) > rel_tol * fresh_total) return false;
    }
    return true;
}

namespace {

void check_enumeration_limits(const Graph& g, std::size_t horizon, std::size_t max_horizon,
                              double max_bits) {
    if (g.node_count() > 3)
        throw std::invalid_argument("enumeration oracle: limited to 3 nodes");
    if (horizon > max_horizon)
        throw std::invalid_argument("enumeration oracle: horizon too large");
    if (static_cast<double>(g.node_count()) * static_cast<double>(horizon) > max_bits)
        throw std::invalid_argument("enumeration oracle: state space too large");
}

}  // namespace

double joint_probability(const Graph& g, const InitialCondition& ic,
                         const std::vector<Eigen::ArrayXi>& draws,
                         const std::vector<Eigen::ArrayXd>& delta_b_schedule) {
    check_enumeration_limits(g, draws.size(), 12, 36.0);
    if (delta_b_schedule.size() < draws.size())
        throw std::invalid_argument("joint_probability: delta_b schedule shorter than draws");
    NetworkState state(g, ic);
    double prob = 1.0;
    for (std::size_t t = 0; t < draws.size(); ++t) {
        const Eigen::ArrayXd s_prev = state.s();
        for (int i = 0; i < g.node_count(); ++i)
            prob *= draws[t][i] ? s_prev[i] : 1.0 - s_prev[i];
        state.apply_draws(ic.delta_r, delta_b_schedule[t], draws[t]);
    }
    return prob;
}

namespace {

// DFS over all draw histories, accumulating path probability into the
// per-step marginals P(Z_{i,t}=1).
void enumerate_paths(const Graph& g, const InitialCondition& ic,
                     const std::vector<Eigen::ArrayXd>& delta_b_schedule, int horizon,
                     NetworkState& state, int t, double path_prob, Eigen::ArrayXXd& marginal) {
    if (t == horizon) return;
    const int n = g.node_count();
    const Eigen::ArrayXd s_prev = state.s();
    const int combos = 1 << n;
    Eigen::ArrayXi z(n);
    for (int mask = 0; mask < combos; ++mask) {
        double p = path_prob;
        for (int i = 0; i < n; ++i) {
            z[i] = (mask >> i) & 1;
            p *= z[i] ? s_prev[i] : 1.0 - s_prev[i];
        }
        if (p == 0.0) continue;
        NetworkState next = state;
        next.apply_draws(ic.delta_r, delta_b_schedule[t], z);
        for (int i = 0; i < n; ++i)
            if (z[i]) marginal(t, i) += p;
        enumerate_paths(g, ic, delta_b_schedule, horizon, next, t + 1, p, marginal);
    }
}

}  // namespace

Eigen::ArrayXd exact_infection_rate(const Graph& g, const InitialCondition& ic,
                                    const std::vector<Eigen::ArrayXd>& delta_b_schedule,
                                    int horizon) {
    check_enumeration_limits(g, static_cast<std::size_t>(horizon), 24, 24.0);
    if (delta_b_schedule.size() < static_cast<std::size_t>(horizon))
        throw std::invalid_argument("exact_infection_rate: delta_b schedule shorter than horizon");
    Eigen::ArrayXXd marginal = Eigen::ArrayXXd::Zero(horizon, g.node_count());
    NetworkState state(g, ic);
    enumerate_paths(g, ic, delta_b_schedule, horizon, state, 0, 1.0, marginal);
    return marginal.rowwise().mean();
}

ClassicalUrn ClassicalUrn::from_counts(double red, double black, double reinforcement) {
    if (!(red > 0.0) || !(black > 0.0))
        throw std::invalid_argument("classical urn: red and black must be > 0");
    if (reinforcement <= 0.0)
        throw std::invalid_argument("classical urn: reinforcement must be > 0");
    const double total = red + black;
    return ClassicalUrn{red / total, reinforcement / total};
}

int classical_draw(ClassicalUrn& urn, std::mt19937_64& rng) {
    const int z = uniform01(rng) <= urn.proportion() ? 1 : 0;
    ++urn.draws;
    urn.reds += z;
    return z;
}

}  // namespace polya
