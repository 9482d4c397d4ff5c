#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpows/int_order.hpp"
#include "qpows/set_composition.hpp"

namespace qpows {

/// A strict total order on pairwise disjoint finite integer sets.  The
/// comparator receives the ambient ground size n (needed by the complement
/// combinator).  Orders that compare different-size sets purely through a
/// total order on their sizes carry that order as `projection`.
class SetOrder {
public:
    using Cmp = std::function<bool(const std::vector<int>&,
                                   const std::vector<int>&, int)>;

    SetOrder(std::string name, Cmp gt) : base_name_(std::move(name)),
                                         base_gt_(std::move(gt)) {}

    /// A strictly dominates B (written A > B); blocks must be disjoint.
    bool gt(const std::vector<int>& a, const std::vector<int>& b, int n) const;

    std::string name() const;

    bool shift_invariant() const { return !bar_ && shift_invariant_; }
    bool standard_invariant() const { return !bar_ && standard_invariant_; }
    std::optional<IntOrder> projection() const;
    bool projective() const { return projection().has_value(); }

    SetOrder reversed() const;
    SetOrder complemented() const;

    /// Size first; among equal sizes the smaller minimum dominates.
    static SetOrder dtilde();
    /// Size first; among equal sizes the larger upper-middle element
    /// (median rounded up) dominates.
    static SetOrder med();
    /// The larger minimum dominates, regardless of size; not projective.
    static SetOrder min_order();
    static std::vector<SetOrder> builtins();

private:
    std::string base_name_;
    Cmp base_gt_;
    bool rev_ = false;
    bool bar_ = false;
    bool shift_invariant_ = false;
    bool standard_invariant_ = false;
    std::optional<IntOrder> projection_;
};

/// Positions i (1-based) with B_i > B_{i+1}.
std::vector<int> set_order_descents(const SetComposition& phi,
                                    const SetOrder& ord);

/// Merge every maximal descent run of phi.
SetComposition c_max_set(const SetComposition& phi, const SetOrder& ord);

/// Sizes of the maximal descent runs (ascent partial sums in subset form).
Composition rho_c(const SetComposition& phi, const SetOrder& ord);

/// rho_c union complement-of-descent partial sums, in subset form.
Composition rho_t(const SetComposition& phi, const SetOrder& ord);

} // namespace qpows
