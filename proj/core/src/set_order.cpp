#include "qpows/set_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpows {

namespace {
std::vector<int> complement_in(const std::vector<int>& a, int n) {
    std::vector<int> out;
    out.reserve(a.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(n + 1 - *it);
    return out;
}
} // namespace

bool SetOrder::gt(const std::vector<int>& a, const std::vector<int>& b,
                  int n) const {
    if (bar_) {
        auto ca = complement_in(a, n), cb = complement_in(b, n);
        return rev_ ? base_gt_(cb, ca, n) : base_gt_(ca, cb, n);
    }
    return rev_ ? base_gt_(b, a, n) : base_gt_(a, b, n);
}

std::string SetOrder::name() const {
    std::string s = base_name_;
    if (bar_) s = "bar:" + s;
    if (rev_) s = "reverse:" + s;
    return s;
}

std::optional<IntOrder> SetOrder::projection() const {
    if (!projection_) return std::nullopt;
    return rev_ ? projection_->reversed() : *projection_;
}

SetOrder SetOrder::reversed() const {
    SetOrder o = *this;
    o.rev_ = !o.rev_;
    return o;
}

SetOrder SetOrder::complemented() const {
    SetOrder o = *this;
    o.bar_ = !o.bar_;
    return o;
}

SetOrder SetOrder::dtilde() {
    SetOrder o("dtilde", [](const std::vector<int>& a,
                            const std::vector<int>& b, int) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    o.shift_invariant_ = true;
    o.standard_invariant_ = true;
    o.projection_ = IntOrder::natural();
    return o;
}

SetOrder SetOrder::med() {
    SetOrder o("med", [](const std::vector<int>& a,
                         const std::vector<int>& b, int) {
        if (a.size() != b.size()) return a.size() > b.size();
        // upper-middle element: median of the set, rounded up
        return a[a.size() / 2] > b[b.size() / 2];
    });
    o.shift_invariant_ = true;
    o.standard_invariant_ = true;
    o.projection_ = IntOrder::natural();
    return o;
}

SetOrder SetOrder::min_order() {
    SetOrder o("min", [](const std::vector<int>& a,
                         const std::vector<int>& b, int) {
        return a.front() > b.front();
    });
    o.shift_invariant_ = true;
    o.standard_invariant_ = true;
    return o;
}

std::vector<SetOrder> SetOrder::builtins() {
    return {dtilde(), med(), min_order()};
}

std::vector<int> set_order_descents(const SetComposition& phi,
                                    const SetOrder& ord) {
    std::vector<int> pos;
    for (int i = 0; i + 1 < phi.length(); ++i)
        if (ord.gt(phi.block(i), phi.block(i + 1), phi.ground()))
            pos.push_back(i + 1);
    return pos;
}

namespace {
std::set<int> descent_sums(const SetComposition& phi, const SetOrder& ord) {
    auto pos = set_order_descents(phi, ord);
    std::set<int> s;
    int acc = 0;
    size_t pi = 0;
    for (int i = 0; i < phi.length(); ++i) {
        acc += static_cast<int>(phi.block(i).size());
        if (pi < pos.size() && pos[pi] == i + 1) {
            s.insert(acc);
            ++pi;
        }
    }
    return s;
}
} // namespace

SetComposition c_max_set(const SetComposition& phi, const SetOrder& ord) {
    auto pos = set_order_descents(phi, ord);
    std::set<int> mergeable(pos.begin(), pos.end());
    std::vector<std::vector<int>> out;
    for (int i = 0; i < phi.length(); ++i) {
        if (i == 0 || !mergeable.count(i)) {
            out.push_back(phi.block(i));
        } else {
            auto& last = out.back();
            last.insert(last.end(), phi.block(i).begin(), phi.block(i).end());
        }
    }
    return SetComposition(std::move(out));
}

Composition rho_c(const SetComposition& phi, const SetOrder& ord) {
    return rho(c_max_set(phi, ord));
}

Composition rho_t(const SetComposition& phi, const SetOrder& ord) {
    auto d = descent_sums(phi, ord);
    auto rc = rho_c(phi, ord).to_subset();
    std::set<int> t = rc;
    for (int i = 1; i <= phi.ground() - 1; ++i)
        if (!d.count(i)) t.insert(i);
    return Composition::from_subset(t, phi.ground());
}

} // namespace qpows
