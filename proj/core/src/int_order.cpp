#include "qpows/int_order.hpp"

#include <algorithm>

namespace qpows {

IntOrder IntOrder::natural() {
    return IntOrder("desc", [](int a, int b) { return a < b; });
}

IntOrder IntOrder::even_odd() {
    return IntOrder("evenodd", [](int a, int b) {
        bool ae = a % 2 == 0, be = b % 2 == 0;
        if (ae != be) return be; // odd < even
        return a < b;
    });
}

std::vector<IntOrder> IntOrder::builtins() {
    return {natural(), even_odd(), natural().reversed(), even_odd().reversed()};
}

std::vector<int> merge_positions(const Composition& alpha, const IntOrder& ord) {
    std::vector<int> pos;
    for (int i = 0; i + 1 < alpha.length(); ++i)
        if (ord.weak_ge(alpha[i], alpha[i + 1])) pos.push_back(i + 1);
    return pos;
}

namespace {
std::set<int> partial_sums_at(const Composition& alpha,
                              const std::vector<int>& positions) {
    std::vector<int> acc(static_cast<size_t>(alpha.length()) + 1, 0);
    for (int i = 0; i < alpha.length(); ++i) acc[i + 1] = acc[i] + alpha[i];
    std::set<int> s;
    for (int p : positions) s.insert(acc[p]);
    return s;
}
} // namespace

Composition c_max(const Composition& alpha, const IntOrder& ord) {
    std::vector<int> ascents;
    for (int i = 0; i + 1 < alpha.length(); ++i)
        if (ord.less(alpha[i], alpha[i + 1])) ascents.push_back(i + 1);
    return Composition::from_subset(partial_sums_at(alpha, ascents),
                                    alpha.degree());
}

Composition t_min(const Composition& alpha, const IntOrder& ord) {
    std::vector<int> strict_desc;
    for (int i = 0; i + 1 < alpha.length(); ++i)
        if (alpha[i] != alpha[i + 1] && ord.less(alpha[i + 1], alpha[i]))
            strict_desc.push_back(i + 1);
    auto d = partial_sums_at(alpha, strict_desc);
    std::set<int> t;
    for (int i = 1; i <= alpha.degree() - 1; ++i)
        if (!d.count(i)) t.insert(i);
    return Composition::from_subset(t, alpha.degree());
}

std::set<int> equal_adjacent_sums(const Composition& alpha) {
    std::vector<int> eq;
    for (int i = 0; i + 1 < alpha.length(); ++i)
        if (alpha[i] == alpha[i + 1]) eq.push_back(i + 1);
    return partial_sums_at(alpha, eq);
}

std::vector<std::pair<Composition, Rational>>
order_interval(const Composition& alpha, const IntOrder& ord) {
    auto mp = merge_positions(alpha, ord);
    auto divisions = alpha.to_subset();
    auto mergeable = partial_sums_at(alpha, mp);
    std::vector<int> mg(mergeable.begin(), mergeable.end());

    std::vector<std::pair<Composition, Rational>> out;
    for (unsigned long mask = 0; mask < (1ul << mg.size()); ++mask) {
        std::set<int> s = divisions;
        for (size_t i = 0; i < mg.size(); ++i)
            if (mask & (1ul << i)) s.erase(mg[i]);
        auto beta = Composition::from_subset(s, alpha.degree());
        out.emplace_back(beta, coarsening_coefficient(alpha, beta));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace qpows
