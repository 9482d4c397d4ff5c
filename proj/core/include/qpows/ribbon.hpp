#pragma once

#include <map>
#include <vector>

#include "qpows/composition.hpp"

namespace qpows {

struct RibbonRow {
    int start = 1;
    int length = 0;

    int end() const { return start + length - 1; }
    bool operator==(const RibbonRow& o) const {
        return start == o.start && length == o.length;
    }
};

/// A (possibly empty, possibly disconnected-by-corner) ribbon: rows top to
/// bottom, each starting at the previous row's end column (edge share) or
/// one past it (corner share).
class Ribbon {
public:
    Ribbon() = default;
    explicit Ribbon(std::vector<RibbonRow> rows);

    const std::vector<RibbonRow>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int cell_count() const;
    /// Cells as (row, column), in reading order.
    std::vector<std::pair<int, int>> cells() const;

    /// New row one column past the current end (corner share).
    void extend_corner();
    /// New row directly below the current end (edge share).
    void extend_edge();
    /// One more box at the right end of the last row.
    void extend_east();

    bool operator==(const Ribbon& o) const { return rows_ == o.rows_; }

private:
    std::vector<RibbonRow> rows_;
};

/// The ribbon of a composition: row i has length a_i and row i+1 starts at
/// row i's end column.
Ribbon ribbon_of(const Composition& alpha);

/// Output of the descent-ribbons construction: one ribbon per part size
/// (empty when the size does not occur in alpha) plus the height counter.
struct RibbonTuple {
    std::map<int, Ribbon> ribbons;
    int height = 0;

    const Ribbon& ribbon(int size) const;
    int total_cells() const;
};

/// Walk the parts of alpha through the ribbon of beta, extending the
/// per-size ribbons and accumulating the height; degrees must match.
RibbonTuple descent_ribbons(const Composition& beta, const Composition& alpha);

/// Number of bijective fillings with 1..cells increasing along rows and
/// decreasing down vertically adjacent cells; 1 for the empty ribbon.
long long standard_filling_count(const Ribbon& r);

/// Product of standard filling counts over the tuple of descent ribbons.
long long sdr_count(const Composition& beta, const Composition& alpha);

} // namespace qpows
