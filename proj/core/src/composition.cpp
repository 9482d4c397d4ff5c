#include "qpows/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qpows {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    }
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_subset(const std::set<int>& s, int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<int> parts;
    int prev = 0;
    for (int x : s) {
        if (x < 1 || x > n - 1)
            throw std::invalid_argument("subset element outside [n-1]");
        parts.push_back(x - prev);
        prev = x;
    }
    if (n > prev) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::set<int> Composition::to_subset() const {
    std::set<int> s;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        s.insert(acc);
    }
    return s;
}

bool Composition::refines(const Composition& coarser) const {
    if (degree_ != coarser.degree_) return false;
    auto coarse = coarser.to_subset();
    auto fine = to_subset();
    return std::includes(fine.begin(), fine.end(), coarse.begin(), coarse.end());
}

int Composition::multiplicity(int size) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), size));
}

Composition Composition::reversed() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::sorted_desc() const {
    auto v = parts_;
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Composition(std::move(v));
}

Composition Composition::transposed() const {
    const int n = degree_;
    std::set<int> image;
    for (int s : to_subset()) image.insert(n - s);
    std::set<int> t;
    for (int i = 1; i <= n - 1; ++i)
        if (!image.count(i)) t.insert(i);
    return from_subset(t, n);
}

Composition Composition::concat(const Composition& other) const {
    auto v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(v));
}

bool Composition::operator<(const Composition& o) const {
    if (degree_ != o.degree_) return degree_ < o.degree_;
    if (parts_.size() != o.parts_.size()) return parts_.size() > o.parts_.size();
    return parts_ < o.parts_;
}

std::string Composition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition::Partition(std::vector<int> parts) : comp_(std::move(parts)) {
    const auto& v = comp_.parts();
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
}

std::vector<int> part_count_per_block(const Composition& fine,
                                      const Composition& coarse, int size) {
    if (size < 1) throw std::invalid_argument("part size must be >= 1");
    if (!fine.refines(coarse))
        throw std::invalid_argument("part_count_per_block: first composition must refine second");
    std::vector<int> counts;
    counts.reserve(static_cast<size_t>(coarse.length()));
    size_t i = 0;
    for (int block : coarse.parts()) {
        int acc = 0, c = 0;
        while (acc < block) {
            acc += fine.parts()[i];
            if (fine.parts()[i] == size) ++c;
            ++i;
        }
        counts.push_back(c);
    }
    return counts;
}

Rational coarsening_coefficient(const Composition& fine,
                                const Composition& coarse) {
    if (!fine.refines(coarse))
        throw std::invalid_argument("coarsening_coefficient: first composition must refine second");
    // prod over distinct part sizes of m_i(fine)! / c_i(fine, coarse)!
    std::set<int> sizes(fine.parts().begin(), fine.parts().end());
    Integer num = 1, den = 1;
    for (int s : sizes) {
        num *= factorial(fine.multiplicity(s));
        for (int c : part_count_per_block(fine, coarse, s)) den *= factorial(c);
    }
    return Rational(num, den);
}

Rational z_scalar(const Composition& alpha) {
    std::set<int> sizes(alpha.parts().begin(), alpha.parts().end());
    Integer z = 1;
    for (int s : sizes) {
        int m = alpha.multiplicity(s);
        for (int j = 0; j < m; ++j) z *= s;
        z *= factorial(m);
    }
    return Rational(z);
}

Rational mobius_refinement(const Composition& fine, const Composition& coarse) {
    if (!fine.refines(coarse))
        throw std::invalid_argument("mobius_refinement: first composition must refine second");
    return (fine.length() - coarse.length()) % 2 == 0 ? Rational(1) : Rational(-1);
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        std::set<int> s;
        for (int i = 1; i <= n - 1; ++i)
            if (mask & (1ul << (i - 1))) s.insert(i);
        out.push_back(Composition::from_subset(s, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Composition> coarsenings_of(const Composition& alpha) {
    auto divisions = alpha.to_subset();
    std::vector<int> divs(divisions.begin(), divisions.end());
    std::vector<Composition> out;
    for (unsigned long mask = 0; mask < (1ul << divs.size()); ++mask) {
        std::set<int> s;
        for (size_t i = 0; i < divs.size(); ++i)
            if (mask & (1ul << i)) s.insert(divs[i]);
        out.push_back(Composition::from_subset(s, alpha.degree()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> refinements_of(const Composition& alpha) {
    auto divisions = alpha.to_subset();
    std::vector<int> rest;
    for (int i = 1; i <= alpha.degree() - 1; ++i)
        if (!divisions.count(i)) rest.push_back(i);
    std::vector<Composition> out;
    for (unsigned long mask = 0; mask < (1ul << rest.size()); ++mask) {
        std::set<int> s = divisions;
        for (size_t i = 0; i < rest.size(); ++i)
            if (mask & (1ul << i)) s.insert(rest[i]);
        out.push_back(Composition::from_subset(s, alpha.degree()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
void shuffle_rec(const std::vector<int>& a, size_t i, const std::vector<int>& b,
                 size_t j, bool quasi, std::vector<int>& cur,
                 std::map<Composition, long long>& out) {
    if (i == a.size() && j == b.size()) {
        out[Composition(cur)] += 1;
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        shuffle_rec(a, i + 1, b, j, quasi, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        shuffle_rec(a, i, b, j + 1, quasi, cur, out);
        cur.pop_back();
    }
    if (quasi && i < a.size() && j < b.size()) {
        cur.push_back(a[i] + b[j]);
        shuffle_rec(a, i + 1, b, j + 1, quasi, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::map<Composition, long long> shuffle(const Composition& a,
                                         const Composition& b) {
    std::map<Composition, long long> out;
    std::vector<int> cur;
    shuffle_rec(a.parts(), 0, b.parts(), 0, false, cur, out);
    return out;
}

std::map<Composition, long long> quasi_shuffle(const Composition& a,
                                               const Composition& b) {
    std::map<Composition, long long> out;
    std::vector<int> cur;
    shuffle_rec(a.parts(), 0, b.parts(), 0, true, cur, out);
    return out;
}

} // namespace qpows
