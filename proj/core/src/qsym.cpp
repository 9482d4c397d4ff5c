#include "qpows/qsym.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "qpows/fillings.hpp"
#include "qpows/ribbon.hpp"

namespace qpows {

std::string QsymBasis::display_name() const {
    switch (kind_) {
        case Kind::M: return "M";
        case Kind::F: return "F";
        case Kind::E: return "E";
        case Kind::P: return "P";
        case Kind::Pt: return "Pt";
    }
    return {};
}

std::string QsymBasis::key() const {
    if (has_order()) return display_name() + "(" + ord_.name() + ")";
    return display_name();
}

void QsymElement::add(const Composition& idx, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational QsymElement::coeff(const Composition& idx) const {
    auto it = terms.find(idx);
    return it == terms.end() ? Rational(0) : it->second;
}

QsymElement& QsymElement::operator+=(const QsymElement& o) {
    if (basis != o.basis)
        throw std::invalid_argument("qsym: basis mismatch in addition");
    for (const auto& [idx, c] : o.terms) add(idx, c);
    return *this;
}

QsymElement& QsymElement::operator-=(const QsymElement& o) {
    if (basis != o.basis)
        throw std::invalid_argument("qsym: basis mismatch in subtraction");
    for (const auto& [idx, c] : o.terms) add(idx, -c);
    return *this;
}

QsymElement& QsymElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [idx, v] : terms) v *= c;
    return *this;
}

QsymElement operator+(QsymElement a, const QsymElement& b) { return a += b; }
QsymElement operator-(QsymElement a, const QsymElement& b) { return a -= b; }
QsymElement operator*(const Rational& c, QsymElement a) { return a *= c; }

void QsymTensor::add(const Composition& l, const Composition& r,
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

QsymTensor& QsymTensor::operator+=(const QsymTensor& o) {
    if (basis != o.basis)
        throw std::invalid_argument("qsym: basis mismatch in tensor addition");
    for (const auto& [key, c] : o.terms) add(key.first, key.second, c);
    return *this;
}

QsymTensor& QsymTensor::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [key, v] : terms) v *= c;
    return *this;
}

QsymElement expand_P_in_M(const Composition& alpha, const IntOrder& ord) {
    QsymElement out(QsymBasis::M());
    for (const auto& [beta, coeff] : order_interval(alpha, ord))
        out.add(beta, coeff);
    return out;
}

QsymElement expand_P_in_F(const Composition& alpha, const IntOrder& ord) {
    QsymElement out(QsymBasis::F());
    if (alpha.empty()) {
        out.add(alpha, 1);
        return out;
    }
    auto top = c_max(alpha, ord).to_subset();
    auto bottom = t_min(alpha, ord).to_subset();
    std::vector<int> extra;
    for (int s : bottom)
        if (!top.count(s)) extra.push_back(s);
    for (unsigned long mask = 0; mask < (1ul << extra.size()); ++mask) {
        std::set<int> s = top;
        for (size_t i = 0; i < extra.size(); ++i)
            if (mask & (1ul << i)) s.insert(extra[i]);
        auto beta = Composition::from_subset(s, alpha.degree());
        auto tuple = descent_ribbons(beta, alpha);
        Rational sign = tuple.height % 2 == 0 ? 1 : -1;
        out.add(beta, sign * Rational(sdr_count(beta, alpha)));
    }
    return out;
}

namespace {

// single-index expansions into the monomial basis
QsymElement index_to_M(const QsymBasis& b, const Composition& idx) {
    QsymElement out(QsymBasis::M());
    switch (b.kind()) {
        case QsymBasis::Kind::M:
            out.add(idx, 1);
            break;
        case QsymBasis::Kind::F:
            for (const auto& beta : refinements_of(idx)) out.add(beta, 1);
            break;
        case QsymBasis::Kind::E:
            for (const auto& beta : coarsenings_of(idx)) out.add(beta, 1);
            break;
        case QsymBasis::Kind::P:
            out = expand_P_in_M(idx, b.order());
            break;
        case QsymBasis::Kind::Pt: {
            out = expand_P_in_M(idx, b.order());
            out *= Rational(1) / z_scalar(idx);
            break;
        }
    }
    return out;
}

// M_alpha written in the P(ord) basis, memoized; triangular recursion on
// the coarsening interval
const std::map<Composition, Rational>& m_index_in_P(const Composition& alpha,
                                                    const IntOrder& ord) {
    using Cache = std::map<std::pair<std::string, Composition>,
                           std::map<Composition, Rational>>;
    static Cache cache;
    static std::mutex mtx;
    auto key = std::make_pair(ord.name(), alpha);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::map<Composition, Rational> result;
    result[alpha] = 1;
    Rational diag;
    for (const auto& [beta, coeff] : order_interval(alpha, ord)) {
        if (beta == alpha) {
            diag = coeff;
            continue;
        }
        const auto& rec = m_index_in_P(beta, ord);
        for (const auto& [gamma, c] : rec) {
            auto& v = result[gamma];
            v -= coeff * c;
            if (v == 0) result.erase(gamma);
        }
    }
    for (auto& [gamma, c] : result) c /= diag;
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(result)).first->second;
}

QsymElement m_element_to(const QsymElement& x, const QsymBasis& target) {
    QsymElement out(target);
    for (const auto& [alpha, c] : x.terms) {
        switch (target.kind()) {
            case QsymBasis::Kind::M:
                out.add(alpha, c);
                break;
            case QsymBasis::Kind::F:
                for (const auto& beta : refinements_of(alpha))
                    out.add(beta, c * mobius_refinement(beta, alpha));
                break;
            case QsymBasis::Kind::E:
                for (const auto& beta : coarsenings_of(alpha))
                    out.add(beta, c * mobius_refinement(alpha, beta));
                break;
            case QsymBasis::Kind::P:
                for (const auto& [gamma, v] : m_index_in_P(alpha, target.order()))
                    out.add(gamma, c * v);
                break;
            case QsymBasis::Kind::Pt:
                for (const auto& [gamma, v] : m_index_in_P(alpha, target.order()))
                    out.add(gamma, c * v * z_scalar(gamma));
                break;
        }
    }
    return out;
}

QsymElement to_M(const QsymElement& x) {
    QsymElement out(QsymBasis::M());
    for (const auto& [idx, c] : x.terms) {
        auto e = index_to_M(x.basis, idx);
        e *= c;
        out += e;
    }
    return out;
}

Rational multiplicity_product_factorial(const Composition& a) {
    std::set<int> sizes(a.parts().begin(), a.parts().end());
    Integer v = 1;
    for (int s : sizes) v *= factorial(a.multiplicity(s));
    return Rational(v);
}

} // namespace

QsymElement convert(const QsymElement& x, const QsymBasis& target) {
    if (x.basis == target) return x;
    return m_element_to(to_M(x), target);
}

QsymElement product(const QsymElement& x, const QsymElement& y) {
    const QsymBasis& b = x.basis;
    QsymElement rhs = convert(y, b);
    QsymElement out(b);
    switch (b.kind()) {
        case QsymBasis::Kind::M:
            for (const auto& [a, ca] : x.terms)
                for (const auto& [bb, cb] : rhs.terms)
                    for (const auto& [gamma, mult] : quasi_shuffle(a, bb))
                        out.add(gamma, ca * cb * mult);
            break;
        case QsymBasis::Kind::P:
            for (const auto& [a, ca] : x.terms)
                for (const auto& [bb, cb] : rhs.terms) {
                    // the shuffle preserves multiplicities, so the theorem's
                    // coefficient depends only on the pair (a, bb)
                    Rational coeff = multiplicity_product_factorial(a) *
                                     multiplicity_product_factorial(bb) /
                                     multiplicity_product_factorial(a.concat(bb));
                    for (const auto& [gamma, mult] : shuffle(a, bb))
                        out.add(gamma, ca * cb * coeff * mult);
                }
            break;
        case QsymBasis::Kind::Pt:
            for (const auto& [a, ca] : x.terms)
                for (const auto& [bb, cb] : rhs.terms)
                    for (const auto& [gamma, mult] : shuffle(a, bb))
                        out.add(gamma, ca * cb * mult);
            break;
        case QsymBasis::Kind::F:
        case QsymBasis::Kind::E: {
            auto m = product(to_M(x), to_M(rhs));
            out = m_element_to(m, b);
            break;
        }
    }
    return out;
}

namespace {

QsymTensor coproduct_M(const QsymElement& x) {
    QsymTensor out(QsymBasis::M());
    for (const auto& [gamma, c] : x.terms) {
        const auto& p = gamma.parts();
        for (int i = 0; i <= gamma.length(); ++i) {
            Composition left(std::vector<int>(p.begin(), p.begin() + i));
            Composition right(std::vector<int>(p.begin() + i, p.end()));
            out.add(left, right, c);
        }
    }
    out.basis = x.basis;
    return out;
}

QsymTensor convert_tensor(const QsymTensor& t, const QsymBasis& target) {
    QsymTensor out(target);
    for (const auto& [key, c] : t.terms) {
        QsymElement l = m_element_to(QsymElement(QsymBasis::M(), key.first), target);
        QsymElement r = m_element_to(QsymElement(QsymBasis::M(), key.second), target);
        for (const auto& [li, lc] : l.terms)
            for (const auto& [ri, rc] : r.terms)
                out.add(li, ri, c * lc * rc);
    }
    return out;
}

} // namespace

QsymTensor coproduct(const QsymElement& x) {
    switch (x.basis.kind()) {
        case QsymBasis::Kind::M:
            return coproduct_M(x);
        case QsymBasis::Kind::P: {
            QsymTensor out(x.basis);
            for (const auto& [gamma, c] : x.terms) {
                const auto& p = gamma.parts();
                Rational mg = multiplicity_product_factorial(gamma);
                for (int i = 0; i <= gamma.length(); ++i) {
                    Composition left(std::vector<int>(p.begin(), p.begin() + i));
                    Composition right(std::vector<int>(p.begin() + i, p.end()));
                    Rational coeff = mg / (multiplicity_product_factorial(left) *
                                           multiplicity_product_factorial(right));
                    out.add(left, right, c * coeff);
                }
            }
            return out;
        }
        case QsymBasis::Kind::Pt: {
            QsymTensor out(x.basis);
            for (const auto& [gamma, c] : x.terms) {
                const auto& p = gamma.parts();
                for (int i = 0; i <= gamma.length(); ++i) {
                    Composition left(std::vector<int>(p.begin(), p.begin() + i));
                    Composition right(std::vector<int>(p.begin() + i, p.end()));
                    out.add(left, right, c);
                }
            }
            return out;
        }
        case QsymBasis::Kind::F:
        case QsymBasis::Kind::E: {
            auto t = coproduct_M(to_M(x));
            t.basis = QsymBasis::M();
            return convert_tensor(t, x.basis);
        }
    }
    return QsymTensor(x.basis);
}

QsymTensor tensor_product(const QsymTensor& a, const QsymTensor& b) {
    if (a.basis != b.basis)
        throw std::invalid_argument("qsym: basis mismatch in tensor product");
    QsymTensor out(a.basis);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            QsymElement l = product(QsymElement(a.basis, ka.first),
                                    QsymElement(b.basis, kb.first));
            QsymElement r = product(QsymElement(a.basis, ka.second),
                                    QsymElement(b.basis, kb.second));
            for (const auto& [li, lc] : l.terms)
                for (const auto& [ri, rc] : r.terms)
                    out.add(li, ri, ca * cb * lc * rc);
        }
    return out;
}

QsymElement antipode(const QsymElement& x) {
    auto flip = [](const QsymElement& e) {
        QsymElement out(e.basis);
        for (const auto& [alpha, c] : e.terms) {
            Rational sign = alpha.length() % 2 == 0 ? 1 : -1;
            out.add(alpha.reversed(), sign * c);
        }
        return out;
    };
    if (x.basis.kind() == QsymBasis::Kind::P ||
        x.basis.kind() == QsymBasis::Kind::Pt)
        return flip(x);
    auto pt = QsymBasis::Pt();
    return convert(flip(convert(x, pt)), x.basis);
}

QsymElement involution(const QsymElement& x, Involution kind) {
    if (kind == Involution::psi)
        return involution(involution(x, Involution::omega), Involution::star);

    QsymBasis result_basis = x.basis;
    if (x.basis.has_order() && kind == Involution::star) {
        result_basis = x.basis.kind() == QsymBasis::Kind::P
                           ? QsymBasis::P(x.basis.order().reversed())
                           : QsymBasis::Pt(x.basis.order().reversed());
    }

    if (kind == Involution::star) {
        auto m = to_M(x);
        QsymElement rev(QsymBasis::M());
        for (const auto& [alpha, c] : m.terms) rev.add(alpha.reversed(), c);
        return m_element_to(rev, result_basis);
    }
    // omega: transpose on the fundamental basis
    auto f = convert(x, QsymBasis::F());
    QsymElement tr(QsymBasis::F());
    for (const auto& [alpha, c] : f.terms) tr.add(alpha.transposed(), c);
    return convert(tr, result_basis);
}

void SymElement::add(const Partition& idx, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SymElement sym_p_to_m(const Partition& lambda) {
    SymElement out;
    out.basis = SymElement::Basis::m;
    for (const auto& f : enumerate_A(lambda))
        out.add(Partition(column_reading(f).parts()), 1);
    return out;
}

QsymElement sym_m_to_M(const Partition& lambda) {
    QsymElement out(QsymBasis::M());
    auto parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    do {
        out.add(Composition(parts), 1);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

QsymElement sym_m_to_M(const SymElement& x) {
    if (x.basis != SymElement::Basis::m)
        throw std::invalid_argument("sym_m_to_M expects an m-basis element");
    QsymElement out(QsymBasis::M());
    for (const auto& [lambda, c] : x.terms) {
        auto e = sym_m_to_M(lambda);
        e *= c;
        out += e;
    }
    return out;
}

QsymElement sym_p_to_P(const Partition& lambda, const IntOrder& ord) {
    QsymElement out(QsymBasis::P(ord));
    auto parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    do {
        out.add(Composition(parts), 1);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

} // namespace qpows
