#include "polya/strategies.hpp"

#include "polya/gradient.hpp"

#include <algorithm>
#include <stdexcept>

namespace polya {

Eigen::ArrayXd susceptibility_bound_delta(const Eigen::ArrayXd& u, const Eigen::ArrayXd& s,
                                          const Eigen::ArrayXd& delta_r) {
    return delta_r * (1.0 - u) * s / (u * (1.0 - s));
}

Eigen::ArrayXd exposure_bound_delta(const Graph& g, const Eigen::ArrayXd& s,
                                    const Eigen::ArrayXd& delta_r, double factor) {
    const int n = g.node_count();
    Eigen::ArrayXd out(n);
    for (int i = 0; i < n; ++i) {
        // {k : i in N_k'} = N_i' on an undirected graph.
        double worst = 0.0;
        for (int k : g.closed_neighborhood(i))
            worst = std::max(worst, (1.0 - s[k]) / s[k]);
        out[i] = factor * delta_r[i] * s[i] / (1.0 - s[i]) * worst;
    }
    return out;
}

Eigen::ArrayXd exposure_submartingale_delta(const Graph& g, const Eigen::ArrayXd& s,
                                            const Eigen::ArrayXd& delta_r, double factor) {
    if (!(factor > 0.0 && factor < 1.0))
        throw std::invalid_argument("submartingale bound: factor must lie in (0,1)");
    const int n = g.node_count();
    Eigen::ArrayXd out(n);
    for (int i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int k : g.closed_neighborhood(i))
            best = std::min(best, (1.0 - s[k]) / s[k]);
        out[i] = factor * delta_r[i] * s[i] / (1.0 - s[i]) * best;
    }
    return out;
}

Eigen::ArrayXd centrality_infection_allocation(const Eigen::ArrayXi& degree,
                                               const Eigen::ArrayXd& closeness,
                                               const Eigen::ArrayXd& s, double budget) {
    const Eigen::ArrayXd weight = degree.cast<double>() * closeness * s;
    Eigen::ArrayXd out = budget * weight / weight.sum();
    // Pin the sum to the budget exactly; the residue is rounding noise.
    const auto n = out.size();
    if (n > 0) out[n - 1] = budget - out.head(n - 1).sum();
    return out;
}

Eigen::ArrayXd uniform_allocation(int node_count, double budget) {
    return Eigen::ArrayXd::Constant(node_count, budget / node_count);
}

OneStepExpectation exact_one_step_expectation(const NetworkState& state,
                                              const Eigen::ArrayXd& delta_r,
                                              const Eigen::ArrayXd& delta_b) {
    const Graph& g = state.graph();
    const int n = g.node_count();
    if (delta_r.size() != n || delta_b.size() != n)
        throw std::invalid_argument("one-step expectation: vector sizes do not match node count");
    if ((delta_r < 0.0).any() || (delta_b < 0.0).any())
        throw std::invalid_argument("one-step expectation: deltas must be >= 0");

    const Eigen::ArrayXd s = state.s();
    OneStepExpectation out;
    out.u = (state.red_mass() + s * delta_r) /
            (state.total_mass() + s * delta_r + (1.0 - s) * delta_b);

    out.s.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto& hood = g.closed_neighborhood(i);
        const int m = static_cast<int>(hood.size());
        if (m > 20)
            throw std::invalid_argument("one-step expectation: closed neighborhood larger than 20");
        double exp_red = 0.0, exp_total = 0.0;
        for (int mask = 0; mask < (1 << m); ++mask) {
            double p = 1.0;
            double added_red = 0.0, added_total = 0.0;
            for (int b = 0; b < m; ++b) {
                const int j = hood[b];
                if ((mask >> b) & 1) {
                    p *= s[j];
                    added_red += delta_r[j];
                    added_total += delta_r[j];
                } else {
                    p *= 1.0 - s[j];
                    added_total += delta_b[j];
                }
            }
            exp_red += p * (state.super_red()[i] + added_red);
            exp_total += p * (state.super_total()[i] + added_total);
        }
        out.s[i] = exp_red / exp_total;
    }
    return out;
}

namespace {

class SusceptibilityBoundStrategy final : public CuringStrategy {
public:
    explicit SusceptibilityBoundStrategy(bool clamp) : clamp_(clamp) {}
    CuringAllocation allocate(const StrategyInput& in) const override {
        Eigen::ArrayXd db = susceptibility_bound_delta(in.state.u(), in.state.s(), in.delta_r);
        if (clamp_) {
            const double spend = db.sum();
            if (spend > in.budget && spend > 0.0) db *= in.budget / spend;
        }
        return {std::move(db), false};
    }
    std::string name() const override { return "i"; }
    bool budget_bound() const override { return false; }

private:
    bool clamp_;
};

class ExposureBoundStrategy final : public CuringStrategy {
public:
    ExposureBoundStrategy(double factor, bool clamp) : factor_(factor), clamp_(clamp) {}
    CuringAllocation allocate(const StrategyInput& in) const override {
        Eigen::ArrayXd db = exposure_bound_delta(in.graph, in.state.s(), in.delta_r, factor_);
        if (clamp_) {
            const double spend = db.sum();
            if (spend > in.budget && spend > 0.0) db *= in.budget / spend;
        }
        return {std::move(db), false};
    }
    std::string name() const override { return "ii"; }
    bool budget_bound() const override { return false; }

private:
    double factor_;
    bool clamp_;
};

class GradientDescentStrategy final : public CuringStrategy {
public:
    GradientDescentStrategy(int iterations, int granularity)
        : iterations_(iterations), granularity_(granularity) {}
    CuringAllocation allocate(const StrategyInput& in) const override {
        const ExposureObjective obj = build_objective(in.state, in.delta_r);
        return {frank_wolfe(obj, in.budget, iterations_, granularity_), true};
    }
    std::string name() const override { return "iii"; }
    bool budget_bound() const override { return true; }

private:
    int iterations_;
    int granularity_;
};

class CentralityRatioStrategy final : public CuringStrategy {
public:
    CuringAllocation allocate(const StrategyInput& in) const override {
        if (in.centrality == nullptr)
            throw std::invalid_argument("strategy iv requires a centrality table");
        return {centrality_infection_allocation(in.centrality->degree, in.centrality->closeness,
                                                in.state.s(), in.budget),
                true};
    }
    std::string name() const override { return "iv"; }
    bool budget_bound() const override { return true; }
    bool needs_centrality() const override { return true; }
};

class UniformStrategy final : public CuringStrategy {
public:
    CuringAllocation allocate(const StrategyInput& in) const override {
        return {uniform_allocation(in.graph.node_count(), in.budget), true};
    }
    std::string name() const override { return "v"; }
    bool budget_bound() const override { return true; }
};

}  // namespace

std::unique_ptr<CuringStrategy> make_strategy(const StrategyParams& params) {
    if (params.id == "i") return std::make_unique<SusceptibilityBoundStrategy>(params.clamp);
    if (params.id == "ii")
        return std::make_unique<ExposureBoundStrategy>(
            params.strict ? 1.0 + params.epsilon : 1.0, params.clamp);
    if (params.id == "iii")
        return std::make_unique<GradientDescentStrategy>(params.gradient_iterations,
                                                         params.gradient_granularity);
    if (params.id == "iv") return std::make_unique<CentralityRatioStrategy>();
    if (params.id == "v") return std::make_unique<UniformStrategy>();
    throw std::invalid_argument("unknown strategy id '" + params.id + "' (expected i..v)");
}

}  // namespace polya
