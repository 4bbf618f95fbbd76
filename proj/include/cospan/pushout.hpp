#pragma once

#include <stdexcept>
#include <utility>

#include "cospan/monotone_map.hpp"
#include "cospan/partition.hpp"

namespace cospan {

/// Strict pushout of a span of surjections a <-f- m -g-> b.
/// Returns (p0: a -> q, p1: b -> q) with f;p0 = g;p1, q the block count of
/// the join of the two kernels. The diagonal m -> q is monotone.
inline std::pair<MonotoneMap, MonotoneMap> pushout_surjections(const MonotoneMap& f,
                                                               const MonotoneMap& g) {
    if (f.domain() != g.domain())
        throw std::invalid_argument("pushout_surjections: domain mismatch");
    if (!f.is_surjective() || !g.is_surjective())
        throw std::invalid_argument("pushout_surjections: legs must be surjective");
    IntervalPartition join = join_partitions(kernel_partition(f), kernel_partition(g));
    MonotoneMap diag = join.quotient_map();  // m -> q
    int q = join.block_count();
    // p0(k) = diag(i) for any i with f(i) = k; well defined since ker f refines join.
    std::vector<int> img0(f.codomain()), img1(g.codomain());
    for (int i = 0; i < f.domain(); ++i) {
        img0[f(i)] = diag(i);
        img1[g(i)] = diag(i);
    }
    return {MonotoneMap(f.codomain(), q, std::move(img0)),
            MonotoneMap(g.codomain(), q, std::move(img1))};
}

/// Strict pullback of a cospan of injections a -f-> n <-g- b.
/// Returns (q0: p -> a, q1: p -> b); the apex enumerates the common image.
inline std::pair<MonotoneMap, MonotoneMap> pullback_injections(const MonotoneMap& f,
                                                               const MonotoneMap& g) {
    if (f.codomain() != g.codomain())
        throw std::invalid_argument("pullback_injections: codomain mismatch");
    if (!f.is_injective() || !g.is_injective())
        throw std::invalid_argument("pullback_injections: legs must be injective");
    std::vector<int> img0, img1;
    int i = 0, j = 0;
    while (i < f.domain() && j < g.domain()) {
        if (f(i) == g(j)) {
            img0.push_back(i);
            img1.push_back(j);
            ++i; ++j;
        } else if (f(i) < g(j)) {
            ++i;
        } else {
            ++j;
        }
    }
    int p = static_cast<int>(img0.size());
    return {MonotoneMap(p, f.domain(), std::move(img0)),
            MonotoneMap(p, g.domain(), std::move(img1))};
}

}  // namespace cospan
