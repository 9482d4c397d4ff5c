#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qpows/rational.hpp"

namespace qpows {

/// An integer composition: a finite sequence of positive integers.  The
/// empty composition is the unit index of degree 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts)
        : Composition(std::vector<int>(parts)) {}

    /// Inverse of to_subset: S must be a subset of [n-1].
    static Composition from_subset(const std::set<int>& s, int n);

    const std::vector<int>& parts() const { return parts_; }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const { return degree_; }
    bool empty() const { return parts_.empty(); }

    /// Partial sums {a_1, a_1+a_2, ...} without the full sum.
    std::set<int> to_subset() const;

    /// True when every part of *this fits inside consecutive runs summing
    /// to the parts of `coarser` (subset containment of division points).
    bool refines(const Composition& coarser) const;

    int multiplicity(int size) const;

    Composition reversed() const;
    Composition sorted_desc() const;
    /// Ribbon transpose: set(t) = [n-1] \ { n - s : s in set }.
    Composition transposed() const;
    Composition concat(const Composition& other) const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return parts_ != o.parts_; }
    /// Canonical order: degree, then length descending, then lex on parts.
    bool operator<(const Composition& o) const;

    std::string str() const;

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// A partition: weakly decreasing composition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return comp_.parts(); }
    const Composition& as_composition() const { return comp_; }
    int length() const { return comp_.length(); }
    int degree() const { return comp_.degree(); }

    bool operator==(const Partition& o) const { return comp_ == o.comp_; }
    bool operator<(const Partition& o) const { return comp_ < o.comp_; }

    std::string str() const { return comp_.str(); }

private:
    Composition comp_;
};

/// c_L(fine, coarse): per coarse-block count of fine-parts equal to `size`.
/// Zero entries are retained; 0! = 1 keeps coefficient products unaffected.
std::vector<int> part_count_per_block(const Composition& fine,
                                      const Composition& coarse, int size);

/// C_{fine,coarse} = prod_i m_i(fine)! / c_i(fine,coarse)!.
Rational coarsening_coefficient(const Composition& fine,
                                const Composition& coarse);

/// z_alpha = prod_i i^{m_i} m_i!, computed on the sorted shape.
Rational z_scalar(const Composition& alpha);

/// Moebius function of the boolean refinement lattice:
/// (-1)^{len(fine)-len(coarse)}.
Rational mobius_refinement(const Composition& fine, const Composition& coarse);

/// All compositions of n (2^{n-1} of them; just the empty one for n = 0).
std::vector<Composition> compositions_of(int n);
std::vector<Partition> partitions_of(int n);

/// All compositions coarser-or-equal (subsets of the division set) and
/// finer-or-equal (supersets) than alpha.
std::vector<Composition> coarsenings_of(const Composition& alpha);
std::vector<Composition> refinements_of(const Composition& alpha);

/// Shuffle and quasi-shuffle multisets, as multiplicity maps.
std::map<Composition, long long> shuffle(const Composition& a,
                                         const Composition& b);
std::map<Composition, long long> quasi_shuffle(const Composition& a,
                                               const Composition& b);

} // namespace qpows
