#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpows/composition.hpp"

namespace qpows {

/// An ordered set partition of [n]: a list of pairwise disjoint nonempty
/// integer sets whose union is {1,...,n}.  Blocks store their elements in
/// ascending order.
class SetComposition {
public:
    SetComposition() = default;
    explicit SetComposition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const {
        return blocks_[static_cast<size_t>(i)];
    }
    int length() const { return static_cast<int>(blocks_.size()); }
    int ground() const { return ground_; }
    bool empty() const { return blocks_.empty(); }

    SetComposition reversed() const;
    /// Replace every element i by n+1-i, keeping the block order.
    SetComposition complemented() const;

    bool operator==(const SetComposition& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const SetComposition& o) const { return blocks_ != o.blocks_; }
    /// Canonical order: ground, then block count descending, then lex.
    bool operator<(const SetComposition& o) const;

    std::string str() const;

private:
    std::vector<std::vector<int>> blocks_;
    int ground_ = 0;
};

/// An (unordered) set partition of [n], stored canonically: block sizes
/// weakly decreasing, minima strictly decreasing among equal sizes.
class SetPartition {
public:
    SetPartition() = default;
    explicit SetPartition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int length() const { return static_cast<int>(blocks_.size()); }
    int ground() const { return ground_; }

    bool operator==(const SetPartition& o) const { return blocks_ == o.blocks_; }
    bool operator<(const SetPartition& o) const;

    std::string str() const;

private:
    std::vector<std::vector<int>> blocks_;
    int ground_ = 0;
};

/// Block sizes, in order.
Composition rho(const SetComposition& phi);
Composition rho(const SetPartition& phi);

/// Group positions of a word by value rank: position i joins block
/// #distinct-smaller-values + 1.
SetComposition varrho(const Composition& word);

/// Forget the order of the blocks.
SetPartition sorted(const SetComposition& phi);
/// All set compositions whose sorted blocks give phi.
std::vector<SetComposition> orderings_of(const SetPartition& phi);

/// Add k to every element of every block; the result no longer covers an
/// initial segment, so raw blocks are returned.
std::vector<std::vector<int>> shift_up(const SetComposition& phi, int k);

/// Relabel a list of disjoint nonempty blocks to [m] preserving the
/// relative order of elements.
SetComposition standardize(const std::vector<std::vector<int>>& blocks);

std::map<SetComposition, long long> shifted_shuffle(const SetComposition& a,
                                                    const SetComposition& b);
std::map<SetComposition, long long>
shifted_quasi_shuffle(const SetComposition& a, const SetComposition& b);

/// All images of phi under place permutations of equal-size blocks;
/// the list has prod_k m_k(rho(phi))! entries.
std::vector<SetComposition> block_orbit(const SetComposition& phi);

/// All set partitions obtained by merging blocks of phi (one per partition
/// of the block set).
std::vector<SetPartition> set_partition_coarsenings(const SetPartition& phi);

std::vector<SetComposition> set_compositions_of(int n);
std::vector<SetPartition> set_partitions_of(int n);

} // namespace qpows
