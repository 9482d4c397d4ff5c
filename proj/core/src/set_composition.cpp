#include "qpows/set_composition.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpows {

namespace {
void validate_blocks(std::vector<std::vector<int>>& blocks, int& ground) {
    std::vector<int> all;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
        std::sort(b.begin(), b.end());
        all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    for (size_t i = 0; i < all.size(); ++i) {
        if (all[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument(
                "blocks must be disjoint and cover {1,...,n}");
    }
    ground = static_cast<int>(all.size());
}
} // namespace

SetComposition::SetComposition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    validate_blocks(blocks_, ground_);
}

SetComposition SetComposition::reversed() const {
    return SetComposition(
        std::vector<std::vector<int>>(blocks_.rbegin(), blocks_.rend()));
}

SetComposition SetComposition::complemented() const {
    std::vector<std::vector<int>> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(ground_ + 1 - x);
        out.push_back(std::move(nb));
    }
    return SetComposition(std::move(out));
}

bool SetComposition::operator<(const SetComposition& o) const {
    if (ground_ != o.ground_) return ground_ < o.ground_;
    if (blocks_.size() != o.blocks_.size())
        return blocks_.size() > o.blocks_.size();
    return blocks_ < o.blocks_;
}

std::string SetComposition::str() const {
    std::string s;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += "|";
        for (size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(blocks_[i][j]);
        }
    }
    return s.empty() ? "()" : s;
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    validate_blocks(blocks_, ground_);
    // canonical: sizes weakly decreasing, minima decreasing among equal sizes
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() > b.front();
              });
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (ground_ != o.ground_) return ground_ < o.ground_;
    if (blocks_.size() != o.blocks_.size())
        return blocks_.size() > o.blocks_.size();
    return blocks_ < o.blocks_;
}

std::string SetPartition::str() const {
    std::string s;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += "/";
        for (size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(blocks_[i][j]);
        }
    }
    return s.empty() ? "()" : s;
}

Composition rho(const SetComposition& phi) {
    std::vector<int> sizes;
    sizes.reserve(phi.blocks().size());
    for (const auto& b : phi.blocks()) sizes.push_back(static_cast<int>(b.size()));
    return Composition(std::move(sizes));
}

Composition rho(const SetPartition& phi) {
    std::vector<int> sizes;
    for (const auto& b : phi.blocks()) sizes.push_back(static_cast<int>(b.size()));
    return Composition(std::move(sizes));
}

SetComposition varrho(const Composition& word) {
    std::set<int> values(word.parts().begin(), word.parts().end());
    std::vector<int> ranked(values.begin(), values.end());
    std::vector<std::vector<int>> blocks(ranked.size());
    for (int i = 0; i < word.length(); ++i) {
        auto it = std::lower_bound(ranked.begin(), ranked.end(), word[i]);
        blocks[static_cast<size_t>(it - ranked.begin())].push_back(i + 1);
    }
    return SetComposition(std::move(blocks));
}

SetPartition sorted(const SetComposition& phi) {
    return SetPartition(phi.blocks());
}

std::vector<SetComposition> orderings_of(const SetPartition& phi) {
    std::vector<std::vector<int>> blocks = phi.blocks();
    std::sort(blocks.begin(), blocks.end());
    std::vector<SetComposition> out;
    do {
        out.emplace_back(blocks);
    } while (std::next_permutation(blocks.begin(), blocks.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> shift_up(const SetComposition& phi, int k) {
    if (k < 0) throw std::invalid_argument("shift must be nonnegative");
    std::vector<std::vector<int>> out;
    out.reserve(phi.blocks().size());
    for (const auto& b : phi.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(x + k);
        out.push_back(std::move(nb));
    }
    return out;
}

SetComposition standardize(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> all;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
        all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("standardize: blocks must be disjoint");
    std::map<int, int> relabel;
    for (size_t i = 0; i < all.size(); ++i) relabel[all[i]] = static_cast<int>(i) + 1;
    std::vector<std::vector<int>> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(relabel.at(x));
        out.push_back(std::move(nb));
    }
    return SetComposition(std::move(out));
}

namespace {
void set_shuffle_rec(const std::vector<std::vector<int>>& a, size_t i,
                     const std::vector<std::vector<int>>& b, size_t j,
                     bool quasi, std::vector<std::vector<int>>& cur,
                     std::map<SetComposition, long long>& out) {
    if (i == a.size() && j == b.size()) {
        out[SetComposition(cur)] += 1;
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        set_shuffle_rec(a, i + 1, b, j, quasi, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        set_shuffle_rec(a, i, b, j + 1, quasi, cur, out);
        cur.pop_back();
    }
    if (quasi && i < a.size() && j < b.size()) {
        std::vector<int> merged = a[i];
        merged.insert(merged.end(), b[j].begin(), b[j].end());
        std::sort(merged.begin(), merged.end());
        cur.push_back(std::move(merged));
        set_shuffle_rec(a, i + 1, b, j + 1, quasi, cur, out);
        cur.pop_back();
    }
}

std::map<SetComposition, long long>
shifted_shuffle_impl(const SetComposition& a, const SetComposition& b,
                     bool quasi) {
    auto shifted = shift_up(b, a.ground());
    std::map<SetComposition, long long> out;
    std::vector<std::vector<int>> cur;
    set_shuffle_rec(a.blocks(), 0, shifted, 0, quasi, cur, out);
    return out;
}
} // namespace

std::map<SetComposition, long long> shifted_shuffle(const SetComposition& a,
                                                    const SetComposition& b) {
    return shifted_shuffle_impl(a, b, false);
}

std::map<SetComposition, long long>
shifted_quasi_shuffle(const SetComposition& a, const SetComposition& b) {
    return shifted_shuffle_impl(a, b, true);
}

std::vector<SetComposition> block_orbit(const SetComposition& phi) {
    // positions grouped by block size; permute each size class in place
    std::map<int, std::vector<int>> slots; // size -> positions
    for (int i = 0; i < phi.length(); ++i)
        slots[static_cast<int>(phi.block(i).size())].push_back(i);

    std::vector<SetComposition> out;
    std::vector<std::vector<int>> work = phi.blocks();

    // iterate over the product of permutations per size class
    std::vector<std::vector<int>> classes;
    for (auto& [size, pos] : slots) classes.push_back(pos);

    std::vector<std::vector<int>> perms(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
        perms[c].resize(classes[c].size());
        for (size_t k = 0; k < classes[c].size(); ++k)
            perms[c][k] = static_cast<int>(k);
    }

    while (true) {
        for (size_t c = 0; c < classes.size(); ++c)
            for (size_t k = 0; k < classes[c].size(); ++k)
                work[static_cast<size_t>(classes[c][k])] =
                    phi.block(classes[c][static_cast<size_t>(perms[c][k])]);
        out.emplace_back(work);
        // advance odometer of per-class permutations
        size_t c = 0;
        while (c < classes.size() &&
               !std::next_permutation(perms[c].begin(), perms[c].end()))
            ++c;
        if (c == classes.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
void block_groupings_rec(size_t i, size_t nblocks,
                         std::vector<std::vector<size_t>>& groups,
                         const std::vector<std::vector<int>>& blocks,
                         std::vector<SetPartition>& out) {
    if (i == nblocks) {
        std::vector<std::vector<int>> merged;
        for (const auto& g : groups) {
            std::vector<int> u;
            for (size_t bi : g)
                u.insert(u.end(), blocks[bi].begin(), blocks[bi].end());
            merged.push_back(std::move(u));
        }
        out.emplace_back(std::move(merged));
        return;
    }
    const size_t ngroups = groups.size();
    for (size_t g = 0; g < ngroups; ++g) {
        groups[g].push_back(i);
        block_groupings_rec(i + 1, nblocks, groups, blocks, out);
        groups[g].pop_back();
    }
    groups.push_back({i});
    block_groupings_rec(i + 1, nblocks, groups, blocks, out);
    groups.pop_back();
}
} // namespace

std::vector<SetPartition> set_partition_coarsenings(const SetPartition& phi) {
    std::vector<SetPartition> out;
    std::vector<std::vector<size_t>> groups;
    block_groupings_rec(0, phi.blocks().size(), groups, phi.blocks(), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetComposition> set_compositions_of(int n) {
    std::vector<SetComposition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (const auto& phi : set_partitions_of(n)) {
        auto ords = orderings_of(phi);
        out.insert(out.end(), ords.begin(), ords.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
void set_partitions_rec(int next, int n, std::vector<std::vector<int>>& cur,
                        std::vector<SetPartition>& out) {
    if (next > n) {
        out.emplace_back(cur);
        return;
    }
    const size_t nblocks = cur.size();
    for (size_t k = 0; k < nblocks; ++k) {
        cur[k].push_back(next);
        set_partitions_rec(next + 1, n, cur, out);
        cur[k].pop_back();
    }
    cur.push_back({next});
    set_partitions_rec(next + 1, n, cur, out);
    cur.pop_back();
}
} // namespace

std::vector<SetPartition> set_partitions_of(int n) {
    std::vector<SetPartition> out;
    if (n == 0) return out;
    std::vector<std::vector<int>> cur;
    set_partitions_rec(1, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qpows
