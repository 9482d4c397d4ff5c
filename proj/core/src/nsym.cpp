#include "qpows/nsym.hpp"

#include <mutex>
#include <stdexcept>

#include "qpows/qsym.hpp"

namespace qpows {

void NsymElement::add(const Composition& idx, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational NsymElement::coeff(const Composition& idx) const {
    auto it = terms.find(idx);
    return it == terms.end() ? Rational(0) : it->second;
}

NsymElement& NsymElement::operator+=(const NsymElement& o) {
    if (basis != o.basis)
        throw std::invalid_argument("nsym: basis mismatch in addition");
    for (const auto& [idx, c] : o.terms) add(idx, c);
    return *this;
}

NsymElement& NsymElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [idx, v] : terms) v *= c;
    return *this;
}

namespace {

// compositions of n that are weakly decreasing under ord
void sorted_blocks_rec(int n, int prev, bool first, const IntOrder& ord,
                       std::vector<int>& cur,
                       std::vector<Composition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = 1; p <= n; ++p) {
        if (!first && ord.less(prev, p)) continue;
        cur.push_back(p);
        sorted_blocks_rec(n - p, p, false, ord, cur, out);
        cur.pop_back();
    }
}

std::vector<Composition> ord_sorted_compositions(int n, const IntOrder& ord) {
    std::vector<Composition> out;
    std::vector<int> cur;
    sorted_blocks_rec(n, 0, true, ord, cur, out);
    return out;
}

Rational z_fraction(const Composition& beta, const Composition& alpha) {
    // 1 / (prod_i i^{m_i(beta)} c_i(beta, alpha)!)
    std::set<int> sizes(beta.parts().begin(), beta.parts().end());
    Integer den = 1;
    for (int s : sizes) {
        for (int j = 0; j < beta.multiplicity(s); ++j) den *= s;
        for (int c : part_count_per_block(beta, alpha, s)) den *= factorial(c);
    }
    return Rational(1, den);
}

} // namespace

NsymElement s_to_z(const Composition& alpha, const IntOrder& ord) {
    NsymElement out(NsymBasis::Z(ord));
    // per part, any weakly ord-decreasing block; concatenate the choices
    std::vector<std::vector<Composition>> per_part;
    for (int p : alpha.parts()) per_part.push_back(ord_sorted_compositions(p, ord));

    std::vector<size_t> pick(per_part.size(), 0);
    while (true) {
        Composition beta;
        for (size_t i = 0; i < per_part.size(); ++i)
            beta = beta.concat(per_part[i][pick[i]]);
        out.add(beta, z_fraction(beta, alpha));
        size_t i = 0;
        while (i < per_part.size() && ++pick[i] == per_part[i].size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == per_part.size()) break;
    }
    return out;
}

namespace {

// Z_alpha written in the S basis, memoized; recursion over strictly finer
// entries of the s_to_z support
const std::map<Composition, Rational>& z_index_in_S(const Composition& alpha,
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
    auto expansion = s_to_z(alpha, ord);
    for (const auto& [beta, coeff] : expansion.terms) {
        if (beta == alpha) {
            diag = coeff;
            continue;
        }
        const auto& rec = z_index_in_S(beta, ord);
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

} // namespace

NsymElement z_to_s(const NsymElement& x) {
    if (x.basis.kind() == NsymBasis::Kind::S) return x;
    NsymElement out(NsymBasis::S());
    for (const auto& [alpha, c] : x.terms)
        for (const auto& [gamma, v] : z_index_in_S(alpha, x.basis.order()))
            out.add(gamma, c * v);
    return out;
}

NsymElement convert(const NsymElement& x, const NsymBasis& target) {
    if (x.basis == target) return x;
    NsymElement s = z_to_s(x);
    if (target.kind() == NsymBasis::Kind::S) return s;
    NsymElement out(target);
    for (const auto& [alpha, c] : s.terms) {
        auto e = s_to_z(alpha, target.order());
        e *= c;
        out += e;
    }
    return out;
}

NsymElement product(const NsymElement& x, const NsymElement& y) {
    if (x.basis != y.basis)
        throw std::invalid_argument("nsym: product requires matching bases");
    NsymElement out(x.basis);
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) out.add(a.concat(b), ca * cb);
    return out;
}

bool duality_check(int n, const IntOrder& ord) {
    if (n < 1) throw std::invalid_argument("duality_check needs n >= 1");
    auto comps = compositions_of(n);
    // A[beta][gamma]: coefficient of M_gamma in Pt_beta
    std::map<Composition, QsymElement> pt;
    for (const auto& beta : comps)
        pt.emplace(beta, convert(QsymElement(QsymBasis::Pt(ord), beta),
                                 QsymBasis::M()));
    for (const auto& gamma : comps) {
        auto sz = s_to_z(gamma, ord);
        for (const auto& beta : comps) {
            if (pt.at(beta).coeff(gamma) != sz.coeff(beta)) return false;
        }
    }
    return true;
}

} // namespace qpows
