#pragma once

#include <stdexcept>
#include <vector>

#include "cospan/monotone_map.hpp"

namespace cospan {

/// Partition of <domain> into consecutive intervals, stored by block end
/// positions (exclusive, strictly increasing, last == domain).
class IntervalPartition {
public:
    IntervalPartition(int domain, std::vector<int> block_ends)
        : dom_(domain), ends_(std::move(block_ends)) {
        if (dom_ < 0) throw std::invalid_argument("IntervalPartition: negative domain");
        int prev = 0;
        for (int e : ends_) {
            if (e <= prev || e > dom_)
                throw std::invalid_argument("IntervalPartition: bad block ends");
            prev = e;
        }
        if (prev != dom_)
            throw std::invalid_argument("IntervalPartition: blocks do not cover domain");
    }

    static IntervalPartition singletons(int domain) {
        std::vector<int> ends(domain);
        for (int i = 0; i < domain; ++i) ends[i] = i + 1;
        return IntervalPartition(domain, std::move(ends));
    }

    int domain() const { return dom_; }
    int block_count() const { return static_cast<int>(ends_.size()); }
    const std::vector<int>& block_ends() const { return ends_; }

    /// Index of the block containing element i.
    int block_of(int i) const {
        for (int k = 0; k < block_count(); ++k)
            if (i < ends_[k]) return k;
        throw std::out_of_range("IntervalPartition::block_of");
    }

    /// The quotient surjection <domain> -> <block count>.
    MonotoneMap quotient_map() const {
        std::vector<int> img(dom_);
        int k = 0;
        for (int i = 0; i < dom_; ++i) {
            if (i >= ends_[k]) ++k;
            img[i] = k;
        }
        return MonotoneMap(dom_, block_count(), std::move(img));
    }

    friend bool operator==(const IntervalPartition& a, const IntervalPartition& b) {
        return a.dom_ == b.dom_ && a.ends_ == b.ends_;
    }
    friend bool operator!=(const IntervalPartition& a, const IntervalPartition& b) {
        return !(a == b);
    }

private:
    int dom_;
    std::vector<int> ends_;
};

/// Kernel of a monotone surjection: block k = preimage of k.
inline IntervalPartition kernel_partition(const MonotoneMap& f) {
    if (!f.is_surjective())
        throw std::invalid_argument("kernel_partition: map is not surjective");
    std::vector<int> ends;
    for (int i = 0; i < f.domain(); ++i)
        if (i + 1 == f.domain() || f(i + 1) != f(i)) ends.push_back(i + 1);
    return IntervalPartition(f.domain(), std::move(ends));
}

/// Coarsest interval partition refined by both p and q. For interval
/// partitions this is the intersection of the interior cut sets.
inline IntervalPartition join_partitions(const IntervalPartition& p,
                                         const IntervalPartition& q) {
    if (p.domain() != q.domain())
        throw std::invalid_argument("join_partitions: domain mismatch");
    std::vector<int> ends;
    std::size_t i = 0, j = 0;
    const auto& pe = p.block_ends();
    const auto& qe = q.block_ends();
    while (i < pe.size() && j < qe.size()) {
        if (pe[i] == qe[j]) {
            ends.push_back(pe[i]);
            ++i; ++j;
        } else if (pe[i] < qe[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalPartition(p.domain(), std::move(ends));
}

}  // namespace cospan
