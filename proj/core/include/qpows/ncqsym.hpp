#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpows/qsym.hpp"
#include "qpows/set_composition.hpp"
#include "qpows/set_order.hpp"

namespace qpows {

class NcqBasis {
public:
    enum class Kind { M, P };

    static NcqBasis M() { return NcqBasis(Kind::M); }
    static NcqBasis P(SetOrder ord = SetOrder::dtilde()) {
        return NcqBasis(Kind::P, std::move(ord));
    }

    Kind kind() const { return kind_; }
    const SetOrder& order() const { return ord_; }
    std::string display_name() const { return kind_ == Kind::M ? "Mn" : "Pn"; }
    std::string key() const {
        return kind_ == Kind::M ? "Mn" : "Pn(" + ord_.name() + ")";
    }
    bool operator==(const NcqBasis& o) const { return key() == o.key(); }
    bool operator!=(const NcqBasis& o) const { return !(*this == o); }

private:
    explicit NcqBasis(Kind k, SetOrder ord = SetOrder::dtilde())
        : kind_(k), ord_(std::move(ord)) {}

    Kind kind_;
    SetOrder ord_;
};

struct NcqElement {
    NcqBasis basis = NcqBasis::M();
    std::map<SetComposition, Rational> terms;

    NcqElement() = default;
    explicit NcqElement(NcqBasis b) : basis(std::move(b)) {}
    NcqElement(NcqBasis b, const SetComposition& idx, const Rational& c = 1)
        : basis(std::move(b)) {
        add(idx, c);
    }

    void add(const SetComposition& idx, const Rational& c);
    Rational coeff(const SetComposition& idx) const;
    NcqElement& operator+=(const NcqElement& o);
    NcqElement& operator-=(const NcqElement& o);
    NcqElement& operator*=(const Rational& c);
    bool operator==(const NcqElement& o) const {
        return basis == o.basis && terms == o.terms;
    }
};

struct NcqTensor {
    NcqBasis basis = NcqBasis::M(); // both legs, keys standardized
    std::map<std::pair<SetComposition, SetComposition>, Rational> terms;

    NcqTensor() = default;
    explicit NcqTensor(NcqBasis b) : basis(std::move(b)) {}

    void add(const SetComposition& l, const SetComposition& r,
             const Rational& c);
    bool operator==(const NcqTensor& o) const {
        return basis == o.basis && terms == o.terms;
    }
};

struct NcsymElement {
    enum class Basis { p, m };
    Basis basis = Basis::m;
    std::map<SetPartition, Rational> terms;

    void add(const SetPartition& idx, const Rational& c);
};

/// P_Phi = sum of M_Psi over the interval [Phi, c_max_set(Phi)], all
/// coefficients 1.
NcqElement expand_P_in_M(const SetComposition& phi, const SetOrder& ord);

NcqElement to_M(const NcqElement& x);
/// Unitriangular inversion of expand_P_in_M (integer coefficients).
NcqElement to_P(const NcqElement& x, const SetOrder& ord);

/// M: shifted quasi-shuffle; P: shifted shuffle, coefficient 1.
NcqElement product(const NcqElement& x, const NcqElement& y);
/// Standardized deconcatenation, coefficient 1 in both bases.
NcqTensor coproduct(const NcqElement& x);

/// m_phi = sum of M_Phi over orderings of phi.
NcqElement ncsym_m_to_M(const SetPartition& phi);
/// p_phi in the monomial basis, via set-partition coarsenings.
NcqElement ncsym_p_expand(const SetPartition& phi);
/// The same expansion via labelled single-row fillings (independent route).
NcqElement ncsym_p_expand_lsr(const SetPartition& phi);
/// p_phi = sum of P_Phi over orderings of phi.
NcqElement ncsym_p_to_P(const SetPartition& phi, const SetOrder& ord);

/// M_Phi -> M_{rho(Phi)}, linear; requires the monomial basis.
QsymElement project_rho(const NcqElement& x);

/// rho(P_Phi) = sum over [rho_t, rho_c] of mu(beta, rho_c) F_beta;
/// requires a projective order.
QsymElement project_P_to_F(const SetComposition& phi, const SetOrder& ord);

/// Sum of rho(P_{sigma Phi}) over the block orbit; equals the integer
/// powersum expansion of rho(Phi) under the projected order.
QsymElement orbit_project_sum(const SetComposition& phi, const SetOrder& ord);

/// |S_Fbar| for a strict row with an admissible SLD column reading.
Rational orbit_count(const SetComposition& row, const SetComposition& col,
                     const SetOrder& ord = SetOrder::dtilde());

/// Reverse the block order (algebraic complement involution).
NcqElement algebraic_complement(const NcqElement& x);
/// Complement every block within [n] (coalgebraic complement involution).
NcqElement coalgebraic_complement(const NcqElement& x);

/// Image of the dual fundamental basis of FQSym: the powersum at the
/// singleton set composition ordered by the permutation word.
NcqElement fqsym_G(const std::vector<int>& perm);

} // namespace qpows
