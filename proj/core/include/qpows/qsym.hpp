#pragma once

#include <map>
#include <string>
#include <utility>

#include "qpows/composition.hpp"
#include "qpows/int_order.hpp"

namespace qpows {

/// Basis tag for QSym elements.  P and Pt carry the total order that
/// parameterizes them; the default is the natural (descending) family.
class QsymBasis {
public:
    enum class Kind { M, F, E, P, Pt };

    static QsymBasis M() { return QsymBasis(Kind::M); }
    static QsymBasis F() { return QsymBasis(Kind::F); }
    static QsymBasis E() { return QsymBasis(Kind::E); }
    static QsymBasis P(IntOrder ord = IntOrder::natural()) {
        return QsymBasis(Kind::P, std::move(ord));
    }
    static QsymBasis Pt(IntOrder ord = IntOrder::natural()) {
        return QsymBasis(Kind::Pt, std::move(ord));
    }

    Kind kind() const { return kind_; }
    const IntOrder& order() const { return ord_; }
    bool has_order() const { return kind_ == Kind::P || kind_ == Kind::Pt; }

    std::string display_name() const;
    /// Identity string, including the order for P/Pt.
    std::string key() const;

    bool operator==(const QsymBasis& o) const { return key() == o.key(); }
    bool operator!=(const QsymBasis& o) const { return !(*this == o); }

private:
    explicit QsymBasis(Kind k, IntOrder ord = IntOrder::natural())
        : kind_(k), ord_(std::move(ord)) {}

    Kind kind_;
    IntOrder ord_;
};

struct QsymElement {
    QsymBasis basis = QsymBasis::M();
    std::map<Composition, Rational> terms;

    QsymElement() = default;
    explicit QsymElement(QsymBasis b) : basis(std::move(b)) {}
    QsymElement(QsymBasis b, const Composition& idx, const Rational& c = 1)
        : basis(std::move(b)) {
        add(idx, c);
    }

    void add(const Composition& idx, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    Rational coeff(const Composition& idx) const;

    QsymElement& operator+=(const QsymElement& o);
    QsymElement& operator-=(const QsymElement& o);
    QsymElement& operator*=(const Rational& c);
    bool operator==(const QsymElement& o) const {
        return basis == o.basis && terms == o.terms;
    }
};

QsymElement operator+(QsymElement a, const QsymElement& b);
QsymElement operator-(QsymElement a, const QsymElement& b);
QsymElement operator*(const Rational& c, QsymElement a);

struct QsymTensor {
    QsymBasis basis = QsymBasis::M(); // both legs
    std::map<std::pair<Composition, Composition>, Rational> terms;

    QsymTensor() = default;
    explicit QsymTensor(QsymBasis b) : basis(std::move(b)) {}

    void add(const Composition& l, const Composition& r, const Rational& c);
    QsymTensor& operator+=(const QsymTensor& o);
    QsymTensor& operator*=(const Rational& c);
    bool operator==(const QsymTensor& o) const {
        return basis == o.basis && terms == o.terms;
    }
};

/// P_alpha = sum over the order interval of C_{alpha,beta} M_beta.
QsymElement expand_P_in_M(const Composition& alpha, const IntOrder& ord);

/// P_alpha = sum over [t_min, c_max] of (-1)^height |SDR| F_beta.
QsymElement expand_P_in_F(const Composition& alpha, const IntOrder& ord);

/// Exact linear change of basis; round trips are identities.
QsymElement convert(const QsymElement& x, const QsymBasis& target);

QsymElement product(const QsymElement& x, const QsymElement& y);
QsymTensor coproduct(const QsymElement& x);
/// Componentwise product of tensors (both in the same basis).
QsymTensor tensor_product(const QsymTensor& a, const QsymTensor& b);
/// Gradewise application of the antipode (through the scaled powersums).
QsymElement antipode(const QsymElement& x);

enum class Involution { star, omega, psi };
/// star reverses monomial indices, omega transposes fundamental indices,
/// psi is their composition.  P/Pt inputs come back tagged with the order
/// the image family lives in (reversed for star and psi).
QsymElement involution(const QsymElement& x, Involution kind);

/// The Sym layer: elements supported on partitions.
struct SymElement {
    enum class Basis { p, m };
    Basis basis = Basis::m;
    std::map<Partition, Rational> terms;

    void add(const Partition& idx, const Rational& c);
    bool operator==(const SymElement& o) const {
        return basis == o.basis && terms == o.terms;
    }
};

/// p_lambda expanded over monomial symmetric functions by fillings.
SymElement sym_p_to_m(const Partition& lambda);
/// m_lambda = sum of M_alpha over rearrangements alpha of lambda.
QsymElement sym_m_to_M(const Partition& lambda);
QsymElement sym_m_to_M(const SymElement& x);
/// p_lambda = sum of P_alpha over rearrangements, any order.
QsymElement sym_p_to_P(const Partition& lambda, const IntOrder& ord);

} // namespace qpows
