#include "qpows/ribbon.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qpows {

Ribbon::Ribbon(std::vector<RibbonRow> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].length < 1)
            throw std::invalid_argument("ribbon rows need length >= 1");
        if (i > 0 && rows_[i].start != rows_[i - 1].end() &&
            rows_[i].start != rows_[i - 1].end() + 1)
            throw std::invalid_argument(
                "ribbon rows must share an edge or a corner");
    }
}

int Ribbon::cell_count() const {
    int c = 0;
    for (const auto& r : rows_) c += r.length;
    return c;
}

std::vector<std::pair<int, int>> Ribbon::cells() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < rows_.size(); ++i)
        for (int c = rows_[i].start; c <= rows_[i].end(); ++c)
            out.emplace_back(static_cast<int>(i) + 1, c);
    return out;
}

void Ribbon::extend_corner() {
    if (rows_.empty())
        rows_.push_back({1, 1});
    else
        rows_.push_back({rows_.back().end() + 1, 1});
}

void Ribbon::extend_edge() {
    if (rows_.empty())
        rows_.push_back({1, 1});
    else
        rows_.push_back({rows_.back().end(), 1});
}

void Ribbon::extend_east() {
    if (rows_.empty())
        rows_.push_back({1, 1});
    else
        rows_.back().length += 1;
}

Ribbon ribbon_of(const Composition& alpha) {
    if (alpha.empty()) return Ribbon();
    std::vector<RibbonRow> rows;
    int start = 1;
    for (int p : alpha.parts()) {
        rows.push_back({start, p});
        start = rows.back().end();
    }
    return Ribbon(std::move(rows));
}

const Ribbon& RibbonTuple::ribbon(int size) const {
    static const Ribbon empty;
    auto it = ribbons.find(size);
    return it == ribbons.end() ? empty : it->second;
}

int RibbonTuple::total_cells() const {
    int c = 0;
    for (const auto& [size, r] : ribbons) c += r.cell_count();
    return c;
}

RibbonTuple descent_ribbons(const Composition& beta, const Composition& alpha) {
    if (beta.degree() != alpha.degree())
        throw std::invalid_argument("descent_ribbons: degrees must match");

    // row index of every box of R(beta), in reading order
    std::vector<int> box_row;
    {
        int row = 0;
        for (int p : beta.parts()) {
            ++row;
            for (int j = 0; j < p; ++j) box_row.push_back(row);
        }
    }
    auto prefix = beta.to_subset();

    RibbonTuple out;
    int consumed = 0;
    for (int i = 0; i < alpha.length(); ++i) {
        int s = alpha[i];
        Ribbon& r = out.ribbons[s];
        if (i == 0 || alpha[i - 1] != s) {
            r.extend_corner();
        } else if (consumed == 0 || prefix.count(consumed)) {
            // the consumed boxes fill whole leading rows of R(beta), so the
            // remainder is the ribbon of a suffix of beta
            r.extend_edge();
        } else {
            r.extend_east();
        }
        std::set<int> rows_spanned(box_row.begin() + consumed,
                                   box_row.begin() + consumed + s);
        out.height += static_cast<int>(rows_spanned.size()) - 1;
        consumed += s;
    }
    return out;
}

long long standard_filling_count(const Ribbon& r) {
    if (r.empty()) return 1;
    auto cells = r.cells();
    const int n = static_cast<int>(cells.size());
    if (n > 22) throw std::invalid_argument("ribbon too large to count");

    // precedence: u must be placed before v (u gets the smaller value)
    // rows increase left to right; vertically adjacent cells decrease
    // downward, so the lower cell is placed first
    std::vector<unsigned long long> preds(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (cells[static_cast<size_t>(u)].first == cells[static_cast<size_t>(v)].first &&
                cells[static_cast<size_t>(u)].second + 1 == cells[static_cast<size_t>(v)].second)
                preds[static_cast<size_t>(v)] |= 1ull << u; // u left of v
            if (cells[static_cast<size_t>(u)].first == cells[static_cast<size_t>(v)].first + 1 &&
                cells[static_cast<size_t>(u)].second == cells[static_cast<size_t>(v)].second)
                preds[static_cast<size_t>(v)] |= 1ull << u; // u below v
        }

    // linear extensions by subset dynamic programming
    std::vector<long long> ways(1ull << n, 0);
    ways[0] = 1;
    for (unsigned long long mask = 0; mask + 1 < (1ull << n); ++mask) {
        if (!ways[mask]) continue;
        for (int v = 0; v < n; ++v) {
            if (mask & (1ull << v)) continue;
            if ((preds[static_cast<size_t>(v)] & mask) ==
                preds[static_cast<size_t>(v)])
                ways[mask | (1ull << v)] += ways[mask];
        }
    }
    return ways[(1ull << n) - 1];
}

long long sdr_count(const Composition& beta, const Composition& alpha) {
    auto tuple = descent_ribbons(beta, alpha);
    long long total = 1;
    for (const auto& [size, r] : tuple.ribbons)
        total *= standard_filling_count(r);
    return total;
}

} // namespace qpows
