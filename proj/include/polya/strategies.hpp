#pragma once

#include "polya/graph.hpp"
#include "polya/urn.hpp"

#include <Eigen/Core>
#include <memory>
#include <string>

namespace polya {

/// Read-only view handed to a curing policy before the draw at step `time`.
/// delta_r is the red addition for that step (known one step ahead).
/// centrality may be null for policies that do not use it.
struct StrategyInput {
    const Graph& graph;
    const NetworkState& state;
    const Eigen::ArrayXd& delta_r;
    double budget = 0.0;
    const CentralityTable* centrality = nullptr;
    int time = 0;
};

/// Per-node black-ball additions chosen by a policy. budget_bound marks
/// policies whose allocation sums to the budget by construction.
struct CuringAllocation {
    Eigen::ArrayXd delta_b;
    bool budget_bound = false;
};

/// Smallest curing that keeps every individual-urn proportion from rising in
/// expected-mass terms; equality at the bound is the martingale case.
/// delta_b_i = delta_r_i * (1-U_i) S_i / (U_i (1-S_i)).
Eigen::ArrayXd susceptibility_bound_delta(const Eigen::ArrayXd& u, const Eigen::ArrayXd& s,
                                          const Eigen::ArrayXd& delta_r);

/// Lower bound that drives every super-urn proportion down in expected-mass
/// terms: delta_b_i = factor * delta_r_i * S_i/(1-S_i) * max_{k in N_i'}
/// (1-S_k)/S_k. factor 1 is the boundary (non-strict); factor > 1 strict.
Eigen::ArrayXd exposure_bound_delta(const Graph& g, const Eigen::ArrayXd& s,
                                    const Eigen::ArrayXd& delta_r, double factor = 1.0);

/// Mirror-image upper bound (min over the closed neighborhood) under which the
/// super-urn proportions rise in expectation. factor must lie in (0,1); test
/// oracle, not a curing policy.
Eigen::ArrayXd exposure_submartingale_delta(const Graph& g, const Eigen::ArrayXd& s,
                                            const Eigen::ArrayXd& delta_r, double factor);

/// Budget split proportional to degree * closeness * super-urn proportion.
/// Sums to the budget exactly; the last coordinate absorbs the rounding
/// residue.
Eigen::ArrayXd centrality_infection_allocation(const Eigen::ArrayXi& degree,
                                               const Eigen::ArrayXd& closeness,
                                               const Eigen::ArrayXd& s, double budget);

Eigen::ArrayXd uniform_allocation(int node_count, double budget);

/// One-step conditional expectations of U and S given the current state and
/// the additions for the next step, as proportions of expected ball mass
/// (expected red mass over expected total mass) — the quantities the curing
/// bounds above control exactly.
///
/// E[S] is evaluated by enumerating the 2^|N_i'| joint draw outcomes of each
/// closed neighborhood (independent given the past); neighborhoods larger
/// than 20 are rejected. Test oracle.
struct OneStepExpectation {
    Eigen::ArrayXd u;
    Eigen::ArrayXd s;
};
OneStepExpectation exact_one_step_expectation(const NetworkState& state,
                                              const Eigen::ArrayXd& delta_r,
                                              const Eigen::ArrayXd& delta_b);

/// A curing policy: maps observable state to per-node black-ball additions.
/// Implementations are pure functions of the input and safe to share across
/// concurrent trials.
class CuringStrategy {
public:
    virtual ~CuringStrategy() = default;
    virtual CuringAllocation allocate(const StrategyInput& in) const = 0;
    virtual std::string name() const = 0;
    /// True when allocate() always spends exactly the budget.
    virtual bool budget_bound() const = 0;
    /// True when the policy reads the centrality table.
    virtual bool needs_centrality() const { return false; }
};

/// Policy selection and tuning, mirroring the config keys. `id` is one of
/// "i".."v": i and ii are the unbudgeted bound policies (ii optionally strict
/// via (1+epsilon), optionally clamped to the budget), iii the simplex
/// gradient policy, iv the centrality-infection ratio, v uniform.
struct StrategyParams {
    std::string id;
    double epsilon = 1e-6;
    bool strict = false;
    bool clamp = false;
    int gradient_iterations = 50;
    int gradient_granularity = 100;
};

std::unique_ptr<CuringStrategy> make_strategy(const StrategyParams& params);

}  // namespace polya
