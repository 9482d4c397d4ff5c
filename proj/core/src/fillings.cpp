#include "qpows/fillings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qpows {

Composition column_reading(const IntFilling& f) {
    int ncols = f.columns.empty()
                    ? 0
                    : *std::max_element(f.columns.begin(), f.columns.end());
    std::vector<int> sums(static_cast<size_t>(ncols), 0);
    for (int i = 0; i < f.rows.length(); ++i)
        sums[static_cast<size_t>(f.columns[static_cast<size_t>(i)] - 1)] +=
            f.rows[i];
    return Composition(std::move(sums));
}

SetComposition column_reading(const SetFilling& f) {
    int ncols = f.columns.empty()
                    ? 0
                    : *std::max_element(f.columns.begin(), f.columns.end());
    std::vector<std::vector<int>> cols(static_cast<size_t>(ncols));
    for (int i = 0; i < f.rows.length(); ++i) {
        auto& c = cols[static_cast<size_t>(f.columns[static_cast<size_t>(i)] - 1)];
        c.insert(c.end(), f.rows.block(i).begin(), f.rows.block(i).end());
    }
    return SetComposition(std::move(cols));
}

namespace {
// All column vectors whose support is a contiguous range {1..m}.  Rows are
// distinguishable, so (1,2) and (2,1) are different fillings.
void free_columns_rec(int row, int nrows, unsigned used, std::vector<int>& cols,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (row == nrows) {
        unsigned m = used;
        // support must be {1..max}: used+1 is a power of two
        if ((m & (m + 1)) == 0) emit(cols);
        return;
    }
    for (int c = 1; c <= nrows; ++c) {
        cols[static_cast<size_t>(row)] = c;
        free_columns_rec(row + 1, nrows, used | (1u << (c - 1)), cols, emit);
    }
}
} // namespace

std::vector<IntFilling> enumerate_A(const Partition& lambda) {
    std::vector<IntFilling> out;
    const Composition& rows = lambda.as_composition();
    if (rows.empty()) {
        out.push_back({rows, {}});
        return out;
    }
    std::vector<int> cols(static_cast<size_t>(rows.length()));
    // the recursion only ever opens column used+1, so supports are
    // contiguous by construction; keep vectors whose sums weakly decrease
    free_columns_rec(0, rows.length(), 0, cols, [&](const std::vector<int>& cv) {
        int m = *std::max_element(cv.begin(), cv.end());
        std::vector<int> sums(static_cast<size_t>(m), 0);
        for (int i = 0; i < rows.length(); ++i)
            sums[static_cast<size_t>(cv[static_cast<size_t>(i)] - 1)] += rows[i];
        for (size_t j = 0; j + 1 < sums.size(); ++j)
            if (sums[j] < sums[j + 1]) return;
        out.push_back({rows, cv});
    });
    return out;
}

namespace {
template <class AllowSame>
std::vector<std::vector<int>> diagonal_columns(int nrows, AllowSame&& allow) {
    // c_1 = 1, c_i in {c_{i-1}, c_{i-1}+1}; same column gated by allow(i)
    std::vector<std::vector<int>> out;
    if (nrows == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cols(static_cast<size_t>(nrows));
    cols[0] = 1;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == nrows) {
            out.push_back(cols);
            return;
        }
        if (allow(i)) {
            cols[static_cast<size_t>(i)] = cols[static_cast<size_t>(i - 1)];
            self(self, i + 1);
        }
        cols[static_cast<size_t>(i)] = cols[static_cast<size_t>(i - 1)] + 1;
        self(self, i + 1);
    };
    rec(rec, 1);
    return out;
}
} // namespace

std::vector<IntFilling> enumerate_SD(const Composition& alpha,
                                     const IntOrder& ord) {
    std::vector<IntFilling> out;
    for (auto& cv : diagonal_columns(alpha.length(), [&](int i) {
             return ord.weak_ge(alpha[i - 1], alpha[i]);
         }))
        out.push_back({alpha, cv});
    return out;
}

std::vector<IntFilling> enumerate_DD(const Composition& alpha,
                                     const IntOrder& ord) {
    std::vector<IntFilling> out;
    for (const auto& sd : enumerate_SD(alpha, ord)) {
        // rows with equal parts may be redistributed across columns as long
        // as each column keeps its per-size count
        std::set<int> sizes(alpha.parts().begin(), alpha.parts().end());
        std::vector<std::vector<int>> per_size_vectors; // column list per size
        std::vector<int> size_list;
        for (int s : sizes) {
            std::vector<int> cols_of_s;
            for (int i = 0; i < alpha.length(); ++i)
                if (alpha[i] == s)
                    cols_of_s.push_back(sd.columns[static_cast<size_t>(i)]);
            std::sort(cols_of_s.begin(), cols_of_s.end());
            per_size_vectors.push_back(std::move(cols_of_s));
            size_list.push_back(s);
        }
        // odometer over multiset permutations of each size's column list
        std::vector<std::vector<int>> assignment = per_size_vectors;
        while (true) {
            std::vector<int> cv(static_cast<size_t>(alpha.length()));
            std::vector<size_t> next(size_list.size(), 0);
            for (int i = 0; i < alpha.length(); ++i) {
                size_t si = static_cast<size_t>(
                    std::find(size_list.begin(), size_list.end(), alpha[i]) -
                    size_list.begin());
                cv[static_cast<size_t>(i)] = assignment[si][next[si]++];
            }
            out.push_back({alpha, cv});
            size_t c = 0;
            while (c < assignment.size() &&
                   !std::next_permutation(assignment[c].begin(),
                                          assignment[c].end()))
                ++c;
            if (c == assignment.size()) break;
        }
    }
    return out;
}

Rational sf_count(const Composition& row, const Composition& col,
                  const IntOrder& ord) {
    for (const auto& [beta, coeff] : order_interval(row, ord))
        if (beta == col) return coeff;
    throw std::invalid_argument("sf_count: column reading outside the order interval of the row reading");
}

std::vector<SetFilling> enumerate_LDD(const SetComposition& phi,
                                      const SetOrder& ord) {
    std::vector<SetFilling> out;
    for (auto& cv : diagonal_columns(phi.length(), [&](int i) {
             return ord.gt(phi.block(i - 1), phi.block(i), phi.ground());
         }))
        out.push_back({phi, cv});
    return out;
}

bool is_strict(const SetComposition& phi, const SetOrder& ord) {
    for (int i = 0; i < phi.length(); ++i)
        for (int j = i + 1; j < phi.length(); ++j)
            if (phi.block(i).size() == phi.block(j).size() &&
                !ord.gt(phi.block(i), phi.block(j), phi.ground()))
                return false;
    return true;
}

std::vector<SetFilling> enumerate_SLD(const SetComposition& phi,
                                      const SetOrder& ord) {
    if (!is_strict(phi, ord))
        throw std::invalid_argument("enumerate_SLD: row reading must be strict");
    std::vector<SetFilling> out;
    for (auto& cv : diagonal_columns(phi.length(), [&](int i) {
             return phi.block(i - 1).size() >= phi.block(i).size();
         }))
        out.push_back({phi, cv});
    return out;
}

std::vector<SetFilling> enumerate_LSR(const SetPartition& phi) {
    // canonical row order; all contiguous column vectors are admissible
    std::vector<SetFilling> out;
    if (phi.blocks().empty()) {
        out.push_back({SetComposition(), {}});
        return out;
    }
    SetComposition rows(phi.blocks());
    int k = rows.length();
    std::vector<int> cols(static_cast<size_t>(k));
    free_columns_rec(0, k, 0, cols, [&](const std::vector<int>& cv) {
        out.push_back({rows, cv});
    });
    return out;
}

} // namespace qpows
