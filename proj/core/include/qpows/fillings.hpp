#pragma once

#include <vector>

#include "qpows/composition.hpp"
#include "qpows/int_order.hpp"
#include "qpows/set_composition.hpp"
#include "qpows/set_order.hpp"

namespace qpows {

/// A filling stored as the vector of column indices of each row's entry.
/// Used column indices form a contiguous range starting at 1.
struct IntFilling {
    Composition rows;
    std::vector<int> columns;

    bool operator==(const IntFilling& o) const {
        return rows == o.rows && columns == o.columns;
    }
};

struct SetFilling {
    SetComposition rows;
    std::vector<int> columns;

    bool operator==(const SetFilling& o) const {
        return rows == o.rows && columns == o.columns;
    }
};

/// Per-column sum of the row parts.
Composition column_reading(const IntFilling& f);
/// Per-column union of the row blocks.
SetComposition column_reading(const SetFilling& f);

/// All distinct fillings of a partition whose column sums are again
/// weakly decreasing: the p -> m change of basis.
std::vector<IntFilling> enumerate_A(const Partition& lambda);

/// Strict diagonal fillings: c_1 = 1, c_i in {c_{i-1}, c_{i-1}+1}, staying
/// in the same column allowed only on weak descents of the order.
std::vector<IntFilling> enumerate_SD(const Composition& alpha,
                                     const IntOrder& ord);

/// Diagonal descending fillings: every distinct matrix obtained from an SD
/// filling by redistributing equal-size rows across its columns.
std::vector<IntFilling> enumerate_DD(const Composition& alpha,
                                     const IntOrder& ord);

/// |S_F| for an SD filling with the given row and column reading; equals
/// coarsening_coefficient and is cross-checked against enumerate_DD.
Rational sf_count(const Composition& row, const Composition& col,
                  const IntOrder& ord = IntOrder::natural());

/// Labelled diagonal descending fillings of a set composition.
std::vector<SetFilling> enumerate_LDD(const SetComposition& phi,
                                      const SetOrder& ord);

/// Equal-size blocks appear in strictly decreasing order of the set order.
bool is_strict(const SetComposition& phi, const SetOrder& ord);

/// LDD relaxed to size comparison; requires a strict row reading.
std::vector<SetFilling> enumerate_SLD(const SetComposition& phi,
                                      const SetOrder& ord);

/// Single-entry-per-row fillings of a set partition with contiguous
/// columns; column readings are exactly the block-union set compositions.
std::vector<SetFilling> enumerate_LSR(const SetPartition& phi);

} // namespace qpows
