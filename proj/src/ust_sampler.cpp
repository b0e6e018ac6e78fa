#include "forestcc/ust_sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace forestcc {

void SampleAccumulator::merge(const SampleAccumulator &other) {
    if (r.size() < other.r.size())
        r.resize(other.r.size(), 0);
    for (std::size_t i = 0; i < other.r.size(); ++i)
        r[i] += other.r[i];
    tau += other.tau;
    total_steps += other.total_steps;
}

UstSampler::UstSampler(const AugmentedGraph &ag) : ag_(&ag) {
    const node n = ag.base_vertices();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), node{0});
    const Graph &star = ag.graph();
    std::stable_sort(order_.begin(), order_.end(),
                     [&](node a, node b) { return star.degree(a) < star.degree(b); });
    next_.assign(n + 1, 0);
    in_tree_epoch_.assign(n + 1, 0);
}

node UstSampler::pick_neighbor(node v, RngStream &rng) const {
    const Graph &star = ag_->graph();
    const auto nbrs = star.neighbors(v);
    if (star.uniform_row(v)) {
        // covers u_star's n-way uniform choice and every unweighted vertex
        const auto idx = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(nbrs.size()));
        return nbrs[std::min(idx, nbrs.size() - 1)];
    }
    const auto cum = star.cumulative_weights(v);
    const double target = rng.uniform01() * cum.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), target);
    const auto idx = std::min(static_cast<std::size_t>(it - cum.begin()), nbrs.size() - 1);
    return nbrs[idx];
}

void UstSampler::sample(RngStream &rng, SampleAccumulator &acc) {
    const node n = ag_->base_vertices();
    const node root = ag_->u_star();
    if (acc.r.size() < n)
        acc.r.resize(n, 0);

    ++epoch_;
    in_tree_epoch_[root] = epoch_;
    auto in_tree = [&](node v) { return in_tree_epoch_[v] == epoch_; };

    count steps = 0;
    for (node start : order_) {
        node u = start;
        while (!in_tree(u)) {
            next_[u] = pick_neighbor(u, rng);
            u = next_[u];
            ++steps;
        }
        u = start;
        while (!in_tree(u)) {
            in_tree_epoch_[u] = epoch_;
            u = next_[u];
        }
    }
    for (node v = 0; v < n; ++v)
        if (next_[v] == root)
            ++acc.r[v];
    ++acc.tau;
    acc.total_steps += steps;
}

void sample_ust_once(const AugmentedGraph &ag, RngStream &rng, SampleAccumulator &acc) {
    UstSampler sampler(ag);
    sampler.sample(rng, acc);
}

SampleAccumulator sample_usts(const AugmentedGraph &ag, count tau, std::uint64_t seed, int workers) {
    if (tau == 0)
        throw std::invalid_argument("sample_usts: tau must be at least 1");

    int threads = 1;
#ifdef _OPENMP
    threads = workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
#endif

    std::vector<SampleAccumulator> partial(threads);

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
        UstSampler sampler(ag);
        SampleAccumulator &acc = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(tau); ++i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            sampler.sample(rng, acc);
        }
    }
#else
    UstSampler sampler(ag);
    for (count i = 0; i < tau; ++i) {
        RngStream rng(seed, i);
        sampler.sample(rng, partial[0]);
    }
#endif

    SampleAccumulator merged;
    merged.r.assign(ag.base_vertices(), 0);
    for (const SampleAccumulator &acc : partial)
        merged.merge(acc);
    return merged;
}

std::vector<double> estimate_resistances(const SampleAccumulator &acc) {
    if (acc.tau == 0)
        throw std::invalid_argument("estimate_resistances: no samples drawn");
    std::vector<double> est(acc.r.size());
    for (std::size_t v = 0; v < acc.r.size(); ++v)
        est[v] = static_cast<double>(acc.r[v]) / static_cast<double>(acc.tau);
    return est;
}

} // namespace forestcc
