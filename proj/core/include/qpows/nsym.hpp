#pragma once

#include <map>
#include <string>

#include "qpows/composition.hpp"
#include "qpows/int_order.hpp"

namespace qpows {

/// Basis tag for NSym elements: the complete basis S or the Zassenhaus
/// family Z, the latter parameterized by a total order.
class NsymBasis {
public:
    enum class Kind { S, Z };

    static NsymBasis S() { return NsymBasis(Kind::S); }
    static NsymBasis Z(IntOrder ord = IntOrder::natural()) {
        return NsymBasis(Kind::Z, std::move(ord));
    }

    Kind kind() const { return kind_; }
    const IntOrder& order() const { return ord_; }
    std::string display_name() const { return kind_ == Kind::S ? "S" : "Z"; }
    std::string key() const {
        return kind_ == Kind::S ? "S" : "Z(" + ord_.name() + ")";
    }
    bool operator==(const NsymBasis& o) const { return key() == o.key(); }
    bool operator!=(const NsymBasis& o) const { return !(*this == o); }

private:
    explicit NsymBasis(Kind k, IntOrder ord = IntOrder::natural())
        : kind_(k), ord_(std::move(ord)) {}

    Kind kind_;
    IntOrder ord_;
};

struct NsymElement {
    NsymBasis basis = NsymBasis::S();
    std::map<Composition, Rational> terms;

    NsymElement() = default;
    explicit NsymElement(NsymBasis b) : basis(std::move(b)) {}
    NsymElement(NsymBasis b, const Composition& idx, const Rational& c = 1)
        : basis(std::move(b)) {
        add(idx, c);
    }

    void add(const Composition& idx, const Rational& c);
    Rational coeff(const Composition& idx) const;
    NsymElement& operator+=(const NsymElement& o);
    NsymElement& operator*=(const Rational& c);
    bool operator==(const NsymElement& o) const {
        return basis == o.basis && terms == o.terms;
    }
};

/// S_alpha = sum over refinements whose blocks are weakly order-decreasing
/// within each part, with coefficient prod_i 1/(i^{m_i(beta)} c_i(beta,alpha)!).
NsymElement s_to_z(const Composition& alpha, const IntOrder& ord);

/// Triangular inversion of s_to_z, per degree.
NsymElement z_to_s(const NsymElement& x);

/// Exact change of basis between S and Z families.
NsymElement convert(const NsymElement& x, const NsymBasis& target);

/// Concatenation product (both bases are multiplicative).
NsymElement product(const NsymElement& x, const NsymElement& y);

/// A[beta][gamma] = coefficient of M_gamma in Pt_beta must equal
/// B[gamma][beta] = coefficient of Z_beta in S_gamma, over all
/// compositions of n.
bool duality_check(int n, const IntOrder& ord);

} // namespace qpows
