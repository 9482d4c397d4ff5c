#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qpows/composition.hpp"

namespace qpows {

/// A strict total order on positive integers, used to parameterize the
/// powersum families.  Identity for caching purposes is the name.
class IntOrder {
public:
    IntOrder(std::string name, std::function<bool(int, int)> less)
        : base_name_(std::move(name)), base_less_(std::move(less)) {}

    /// a strictly precedes b.
    bool less(int a, int b) const {
        return rev_ ? base_less_(b, a) : base_less_(a, b);
    }
    /// Weak descent test used when merging adjacent parts: NOT a < b.
    bool weak_ge(int a, int b) const { return !less(a, b); }

    std::string name() const {
        return rev_ ? "reverse:" + base_name_ : base_name_;
    }

    IntOrder reversed() const {
        IntOrder o = *this;
        o.rev_ = !o.rev_;
        return o;
    }

    static IntOrder natural();
    /// Evens before odds when read descending: a >= b iff a even and b odd,
    /// or same parity and a >= b numerically.
    static IntOrder even_odd();
    static std::vector<IntOrder> builtins();

private:
    std::string base_name_;
    std::function<bool(int, int)> base_less_;
    bool rev_ = false;
};

/// Positions i (1-based, between parts i and i+1) where adjacent parts may
/// merge: NOT a_i < a_{i+1}.
std::vector<int> merge_positions(const Composition& alpha, const IntOrder& ord);

/// Greatest composition reachable by merging all weak descents of alpha.
Composition c_max(const Composition& alpha, const IntOrder& ord);

/// Bottom of the fundamental-basis support interval: in subset form the
/// complement of the strict-descent partial sums (equal adjacent parts
/// divide, strict descents do not).
Composition t_min(const Composition& alpha, const IntOrder& ord);

/// Partial sums at positions with equal adjacent parts.  Together with
/// set(c_max) and the strict descents this partitions [n-1].
std::set<int> equal_adjacent_sums(const Composition& alpha);

/// The interval [alpha, c_max(alpha)] with coarsening coefficients:
/// beta obtained by merging any subset of merge_positions.
std::vector<std::pair<Composition, Rational>>
order_interval(const Composition& alpha, const IntOrder& ord);

} // namespace qpows
