#include "qpows/ncqsym.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "qpows/fillings.hpp"

namespace qpows {

void NcqElement::add(const SetComposition& idx, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational NcqElement::coeff(const SetComposition& idx) const {
    auto it = terms.find(idx);
    return it == terms.end() ? Rational(0) : it->second;
}

NcqElement& NcqElement::operator+=(const NcqElement& o) {
    if (basis != o.basis)
        throw std::invalid_argument("ncqsym: basis mismatch in addition");
    for (const auto& [idx, c] : o.terms) add(idx, c);
    return *this;
}

NcqElement& NcqElement::operator-=(const NcqElement& o) {
    if (basis != o.basis)
        throw std::invalid_argument("ncqsym: basis mismatch in subtraction");
    for (const auto& [idx, c] : o.terms) add(idx, -c);
    return *this;
}

NcqElement& NcqElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [idx, v] : terms) v *= c;
    return *this;
}

void NcqTensor::add(const SetComposition& l, const SetComposition& r,
                    const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(l, r);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

void NcsymElement::add(const SetPartition& idx, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

NcqElement expand_P_in_M(const SetComposition& phi, const SetOrder& ord) {
    NcqElement out(NcqBasis::M());
    auto pos = set_order_descents(phi, ord);
    for (unsigned long mask = 0; mask < (1ul << pos.size()); ++mask) {
        std::set<int> merge;
        for (size_t i = 0; i < pos.size(); ++i)
            if (mask & (1ul << i)) merge.insert(pos[i]);
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < phi.length(); ++i) {
            if (i == 0 || !merge.count(i)) {
                blocks.push_back(phi.block(i));
            } else {
                auto& last = blocks.back();
                last.insert(last.end(), phi.block(i).begin(),
                            phi.block(i).end());
            }
        }
        out.add(SetComposition(std::move(blocks)), 1);
    }
    return out;
}

NcqElement to_M(const NcqElement& x) {
    if (x.basis.kind() == NcqBasis::Kind::M) return x;
    NcqElement out(NcqBasis::M());
    for (const auto& [phi, c] : x.terms) {
        auto e = expand_P_in_M(phi, x.basis.order());
        e *= c;
        out += e;
    }
    return out;
}

namespace {

const std::map<SetComposition, Rational>&
m_index_in_P(const SetComposition& phi, const SetOrder& ord) {
    using Cache = std::map<std::pair<std::string, SetComposition>,
                           std::map<SetComposition, Rational>>;
    static Cache cache;
    static std::mutex mtx;
    auto key = std::make_pair(ord.name(), phi);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::map<SetComposition, Rational> result;
    result[phi] = 1;
    for (const auto& [psi, coeff] : expand_P_in_M(phi, ord).terms) {
        if (psi == phi) continue;
        for (const auto& [gamma, c] : m_index_in_P(psi, ord)) {
            auto& v = result[gamma];
            v -= coeff * c;
            if (v == 0) result.erase(gamma);
        }
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(result)).first->second;
}

} // namespace

NcqElement to_P(const NcqElement& x, const SetOrder& ord) {
    if (x.basis.kind() == NcqBasis::Kind::P && x.basis.order().name() == ord.name())
        return x;
    NcqElement m = to_M(x);
    NcqElement out(NcqBasis::P(ord));
    for (const auto& [phi, c] : m.terms)
        for (const auto& [gamma, v] : m_index_in_P(phi, ord))
            out.add(gamma, c * v);
    return out;
}

NcqElement product(const NcqElement& x, const NcqElement& y) {
    const NcqBasis& b = x.basis;
    NcqElement rhs = y;
    if (y.basis != b) {
        rhs = b.kind() == NcqBasis::Kind::M ? to_M(y) : to_P(y, b.order());
    }
    NcqElement out(b);
    for (const auto& [a, ca] : x.terms)
        for (const auto& [bb, cb] : rhs.terms) {
            auto terms = b.kind() == NcqBasis::Kind::M
                             ? shifted_quasi_shuffle(a, bb)
                             : shifted_shuffle(a, bb);
            for (const auto& [gamma, mult] : terms)
                out.add(gamma, ca * cb * mult);
        }
    return out;
}

NcqTensor coproduct(const NcqElement& x) {
    NcqTensor out(x.basis);
    for (const auto& [phi, c] : x.terms) {
        const auto& blocks = phi.blocks();
        for (size_t i = 0; i <= blocks.size(); ++i) {
            std::vector<std::vector<int>> left(blocks.begin(),
                                               blocks.begin() + i);
            std::vector<std::vector<int>> right(blocks.begin() + i,
                                                blocks.end());
            out.add(standardize(left), standardize(right), c);
        }
    }
    return out;
}

NcqElement ncsym_m_to_M(const SetPartition& phi) {
    NcqElement out(NcqBasis::M());
    for (const auto& ordering : orderings_of(phi)) out.add(ordering, 1);
    return out;
}

NcqElement ncsym_p_expand(const SetPartition& phi) {
    NcqElement out(NcqBasis::M());
    for (const auto& psi : set_partition_coarsenings(phi)) out += ncsym_m_to_M(psi);
    return out;
}

NcqElement ncsym_p_expand_lsr(const SetPartition& phi) {
    NcqElement out(NcqBasis::M());
    for (const auto& f : enumerate_LSR(phi)) out.add(column_reading(f), 1);
    return out;
}

NcqElement ncsym_p_to_P(const SetPartition& phi, const SetOrder& ord) {
    NcqElement out(NcqBasis::P(ord));
    for (const auto& ordering : orderings_of(phi)) out.add(ordering, 1);
    return out;
}

QsymElement project_rho(const NcqElement& x) {
    if (x.basis.kind() != NcqBasis::Kind::M)
        throw std::invalid_argument("project_rho expects a monomial-basis element");
    QsymElement out(QsymBasis::M());
    for (const auto& [phi, c] : x.terms) out.add(rho(phi), c);
    return out;
}

QsymElement project_P_to_F(const SetComposition& phi, const SetOrder& ord) {
    if (!ord.projective())
        throw std::invalid_argument(
            "project_P_to_F requires an order that projects under rho");
    QsymElement out(QsymBasis::F());
    if (phi.empty()) {
        out.add(Composition(), 1);
        return out;
    }
    auto rc = rho_c(phi, ord);
    auto top = rc.to_subset();
    auto bottom = rho_t(phi, ord).to_subset();
    std::vector<int> extra;
    for (int s : bottom)
        if (!top.count(s)) extra.push_back(s);
    for (unsigned long mask = 0; mask < (1ul << extra.size()); ++mask) {
        std::set<int> s = top;
        for (size_t i = 0; i < extra.size(); ++i)
            if (mask & (1ul << i)) s.insert(extra[i]);
        auto beta = Composition::from_subset(s, phi.ground());
        out.add(beta, mobius_refinement(beta, rc));
    }
    return out;
}

QsymElement orbit_project_sum(const SetComposition& phi, const SetOrder& ord) {
    if (!ord.projective())
        throw std::invalid_argument(
            "orbit_project_sum requires an order that projects under rho");
    QsymElement out(QsymBasis::M());
    for (const auto& sigma_phi : block_orbit(phi))
        out += project_rho(expand_P_in_M(sigma_phi, ord));
    return out;
}

Rational orbit_count(const SetComposition& row, const SetComposition& col,
                     const SetOrder& ord) {
    for (const auto& f : enumerate_SLD(row, ord)) {
        if (column_reading(f) == col)
            return coarsening_coefficient(rho(row), rho(col));
    }
    throw std::invalid_argument(
        "orbit_count: column reading is not an SLD reading of the row");
}

NcqElement algebraic_complement(const NcqElement& x) {
    if (x.basis.kind() == NcqBasis::Kind::M) {
        NcqElement out(x.basis);
        for (const auto& [phi, c] : x.terms) out.add(phi.reversed(), c);
        return out;
    }
    NcqElement m = algebraic_complement(to_M(x));
    return to_P(m, x.basis.order().reversed());
}

NcqElement coalgebraic_complement(const NcqElement& x) {
    if (x.basis.kind() == NcqBasis::Kind::M) {
        NcqElement out(x.basis);
        for (const auto& [phi, c] : x.terms) out.add(phi.complemented(), c);
        return out;
    }
    NcqElement m = coalgebraic_complement(to_M(x));
    return to_P(m, x.basis.order().complemented());
}

NcqElement fqsym_G(const std::vector<int>& perm) {
    std::vector<int> check = perm;
    std::sort(check.begin(), check.end());
    for (size_t i = 0; i < check.size(); ++i)
        if (check[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("fqsym_G expects a permutation of [n]");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(perm.size());
    for (int v : perm) blocks.push_back({v});
    return NcqElement(NcqBasis::P(SetOrder::dtilde()),
                      SetComposition(std::move(blocks)));
}

} // namespace qpows
