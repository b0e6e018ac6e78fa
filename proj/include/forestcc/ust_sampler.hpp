#ifndef FORESTCC_UST_SAMPLER_HPP
#define FORESTCC_UST_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "forestcc/graph.hpp"
#include "forestcc/rng.hpp"

namespace forestcc {

struct SampleAccumulator {
    std::vector<count> r;    // per base vertex: #trees containing {u_star, v}
    count tau = 0;           // trees sampled
    count total_steps = 0;   // random-walk steps across all samples
    void merge(const SampleAccumulator &other);
};

/// Wilson sampler over a fixed augmented graph. The spanning tree is rooted
/// at u_star; loop erasure is realized by keeping each vertex's most recent
/// exit edge, so the surviving next-pointers form the loop-erased paths in
/// order of appearance. Reusable scratch state makes repeated sampling
/// allocation-free.
class UstSampler {
public:
    explicit UstSampler(const AugmentedGraph &ag);

    /// Draws one spanning tree with probability proportional to its weight
    /// and records every tree edge {w, u_star} as an increment of acc.r[w].
    void sample(RngStream &rng, SampleAccumulator &acc);

    /// Base vertices in the walk processing order (ascending degree).
    const std::vector<node> &processing_order() const { return order_; }

private:
    node pick_neighbor(node v, RngStream &rng) const;

    const AugmentedGraph *ag_;
    std::vector<node> order_;
    std::vector<node> next_;
    std::vector<std::uint64_t> in_tree_epoch_;
    std::uint64_t epoch_ = 0;
};

/// One tree into `acc` (convenience wrapper over UstSampler).
void sample_ust_once(const AugmentedGraph &ag, RngStream &rng, SampleAccumulator &acc);

/// tau independent trees; sample i always uses RngStream(seed, i), so the
/// result is bitwise identical for any worker count. workers = 0 selects
/// the OpenMP default.
SampleAccumulator sample_usts(const AugmentedGraph &ag, count tau, std::uint64_t seed,
                              int workers = 0);

/// R[v] / tau, the unbiased estimate of the effective resistance between
/// u_star and v (entries lie in [0, 1]).
std::vector<double> estimate_resistances(const SampleAccumulator &acc);

} // namespace forestcc

#endif
