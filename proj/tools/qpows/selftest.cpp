#include "cli.hpp"

#include <chrono>
#include <iostream>

#include "qpows/fillings.hpp"
#include "qpows/ribbon.hpp"

namespace qpows::cli {

namespace {

struct Runner {
    bool all_ok = true;

    template <class F>
    void suite(const std::string& name, F&& body) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = body();
        auto dt = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << (ok ? "ok   " : "FAIL ") << name << "  ("
                  << static_cast<int>(dt * 1000) << " ms)\n";
        all_ok = all_ok && ok;
    }
};

QsymTensor expand_tensor_to_M(const QsymTensor& t, const QsymBasis& basis) {
    QsymTensor out(QsymBasis::M());
    for (const auto& [key, c] : t.terms) {
        auto l = convert(QsymElement(basis, key.first), QsymBasis::M());
        auto r = convert(QsymElement(basis, key.second), QsymBasis::M());
        for (const auto& [li, lc] : l.terms)
            for (const auto& [ri, rc] : r.terms) out.add(li, ri, c * lc * rc);
    }
    return out;
}

NcqTensor expand_ncq_tensor_to_M(const NcqTensor& t, const NcqBasis& basis) {
    NcqTensor out(NcqBasis::M());
    for (const auto& [key, c] : t.terms) {
        auto l = to_M(NcqElement(basis, key.first));
        auto r = to_M(NcqElement(basis, key.second));
        for (const auto& [li, lc] : l.terms)
            for (const auto& [ri, rc] : r.terms) out.add(li, ri, c * lc * rc);
    }
    return out;
}

} // namespace

bool selftest(int max_degree) {
    const int d = max_degree;
    const auto int_orders = IntOrder::builtins();
    const auto nat = IntOrder::natural();
    const auto set_orders = std::vector<SetOrder>{SetOrder::dtilde(),
                                                  SetOrder::med()};
    Runner run;

    run.suite("fillings: DD multiset = coefficient-weighted interval", [&] {
        for (int n = 0; n <= std::min(d, 6); ++n)
            for (const auto& ord : {IntOrder::natural(), IntOrder::even_odd()})
                for (const auto& a : compositions_of(n)) {
                    std::map<Composition, long long> got;
                    for (const auto& f : enumerate_DD(a, ord))
                        got[column_reading(f)]++;
                    std::map<Composition, long long> want;
                    for (const auto& [b, c] : order_interval(a, ord))
                        want[b] = static_cast<long long>(numerator(c));
                    if (got != want) return false;
                }
        return true;
    });

    run.suite("change of basis: ribbon route = Moebius route", [&] {
        for (int n = 0; n <= d; ++n)
            for (const auto& ord : int_orders)
                for (const auto& a : compositions_of(n)) {
                    if (!(expand_P_in_F(a, ord) ==
                          convert(expand_P_in_M(a, ord), QsymBasis::F())))
                        return false;
                }
        return true;
    });

    run.suite("qsym: P/Pt product and coproduct vs monomial oracle", [&] {
        for (int n1 = 0; n1 <= d; ++n1)
            for (int n2 = 0; n1 + n2 <= d; ++n2)
                for (const auto& a : compositions_of(n1))
                    for (const auto& b : compositions_of(n2))
                        for (const auto& basis :
                             {QsymBasis::P(nat), QsymBasis::Pt(nat)}) {
                            auto lhs = convert(product(QsymElement(basis, a),
                                                       QsymElement(basis, b)),
                                               QsymBasis::M());
                            auto rhs = product(
                                convert(QsymElement(basis, a), QsymBasis::M()),
                                convert(QsymElement(basis, b), QsymBasis::M()));
                            if (!(lhs == rhs)) return false;
                        }
        for (int n = 0; n <= d; ++n)
            for (const auto& a : compositions_of(n))
                for (const auto& basis : {QsymBasis::P(nat), QsymBasis::Pt(nat)}) {
                    auto lhs = expand_tensor_to_M(
                        coproduct(QsymElement(basis, a)), basis);
                    auto rhs =
                        coproduct(convert(QsymElement(basis, a), QsymBasis::M()));
                    if (!(lhs == rhs)) return false;
                }
        return true;
    });

    run.suite("qsym: antipode axiom on the scaled powersums", [&] {
        auto basis = QsymBasis::Pt(nat);
        for (int n = 0; n <= d; ++n)
            for (const auto& a : compositions_of(n)) {
                auto t = coproduct(QsymElement(basis, a));
                QsymElement acc(basis);
                for (const auto& [key, c] : t.terms) {
                    auto s = antipode(QsymElement(basis, key.first));
                    auto prod = product(s, QsymElement(basis, key.second));
                    prod *= c;
                    acc += prod;
                }
                QsymElement want(basis);
                if (a.empty()) want.add(a, 1);
                if (!(acc == want)) return false;
            }
        return true;
    });

    run.suite("nsym: duality transpose per degree", [&] {
        for (int n = 1; n <= d; ++n) {
            if (!duality_check(n, nat)) return false;
            if (n <= d - 1 && !duality_check(n, IntOrder::even_odd()))
                return false;
        }
        return true;
    });

    run.suite("sym: powersum refinement", [&] {
        for (int n = 1; n <= d; ++n)
            for (const auto& lam : partitions_of(n)) {
                QsymElement lhs(QsymBasis::M());
                for (const auto& [a, c] :
                     convert(sym_p_to_P(lam, nat), QsymBasis::M()).terms)
                    lhs.add(a, c);
                if (!(lhs == sym_m_to_M(sym_p_to_m(lam)))) return false;
            }
        return true;
    });

    run.suite("ncqsym: product and coproduct vs monomial oracle", [&] {
        int cap = std::min(d, 5);
        for (int n1 = 1; n1 < cap; ++n1)
            for (int n2 = 1; n1 + n2 <= cap; ++n2)
                for (const auto& A : set_compositions_of(n1))
                    for (const auto& B : set_compositions_of(n2))
                        for (const auto& so : set_orders) {
                            auto basis = NcqBasis::P(so);
                            auto lhs = to_M(product(NcqElement(basis, A),
                                                    NcqElement(basis, B)));
                            auto rhs = product(to_M(NcqElement(basis, A)),
                                               to_M(NcqElement(basis, B)));
                            if (!(lhs == rhs)) return false;
                        }
        for (int n = 1; n <= cap; ++n)
            for (const auto& A : set_compositions_of(n))
                for (const auto& so : set_orders) {
                    auto basis = NcqBasis::P(so);
                    auto lhs = expand_ncq_tensor_to_M(
                        coproduct(NcqElement(basis, A)), basis);
                    auto rhs = coproduct(to_M(NcqElement(basis, A)));
                    if (!(lhs == rhs)) return false;
                }
        return true;
    });

    run.suite("ncsym: powersum refinement, both routes", [&] {
        for (int n = 1; n <= std::min(d, 5); ++n)
            for (const auto& phi : set_partitions_of(n)) {
                auto a = ncsym_p_expand(phi);
                if (!(a == ncsym_p_expand_lsr(phi))) return false;
                if (!(a == to_M(ncsym_p_to_P(phi, SetOrder::dtilde()))))
                    return false;
            }
        return true;
    });

    run.suite("projection: orbit sums and fundamental images", [&] {
        for (int n = 1; n <= std::min(d, 5); ++n)
            for (const auto& A : set_compositions_of(n))
                for (const auto& so : set_orders) {
                    if (!(orbit_project_sum(A, so) ==
                          expand_P_in_M(rho(A), *so.projection())))
                        return false;
                    if (!(project_P_to_F(A, so) ==
                          convert(project_rho(expand_P_in_M(A, so)),
                                  QsymBasis::F())))
                        return false;
                }
        return true;
    });

    run.suite("involutions: star/omega/psi laws", [&] {
        for (int n = 0; n <= std::min(d, 6); ++n)
            for (const auto& a : compositions_of(n)) {
                QsymElement x(QsymBasis::M(), a, Rational(2, 3));
                for (auto kind :
                     {Involution::star, Involution::omega, Involution::psi}) {
                    if (!(involution(involution(x, kind), kind) == x))
                        return false;
                }
                Rational eps =
                    (a.degree() - a.length()) % 2 == 0 ? 1 : -1;
                auto omega_p = convert(
                    involution(QsymElement(QsymBasis::P(nat), a),
                               Involution::omega),
                    QsymBasis::M());
                QsymElement want = expand_P_in_M(a.reversed(), nat);
                want *= eps;
                if (!(omega_p == want)) return false;
            }
        return true;
    });

    run.suite("fqsym: products are shifted word shuffles", [&] {
        int cap = std::min(d, 4);
        std::vector<std::vector<int>> perms;
        for (int n = 1; n <= cap; ++n) {
            std::vector<int> p(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
            do {
                perms.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
        }
        for (const auto& s : perms)
            for (const auto& t : perms) {
                if (s.size() + t.size() > static_cast<size_t>(cap)) continue;
                auto lhs = to_M(product(fqsym_G(s), fqsym_G(t)));
                // word-level shifted shuffle oracle
                NcqElement rhs_p(NcqBasis::P(SetOrder::dtilde()));
                std::vector<int> shifted = t;
                for (auto& v : shifted) v += static_cast<int>(s.size());
                std::vector<int> word;
                auto rec = [&](auto&& self, size_t i, size_t j) -> void {
                    if (i == s.size() && j == shifted.size()) {
                        std::vector<std::vector<int>> blocks;
                        for (int v : word) blocks.push_back({v});
                        rhs_p.add(SetComposition(blocks), 1);
                        return;
                    }
                    if (i < s.size()) {
                        word.push_back(s[i]);
                        self(self, i + 1, j);
                        word.pop_back();
                    }
                    if (j < shifted.size()) {
                        word.push_back(shifted[j]);
                        self(self, i, j + 1);
                        word.pop_back();
                    }
                };
                rec(rec, 0, 0);
                if (!(lhs == to_M(rhs_p))) return false;
            }
        return true;
    });

    std::cout << (run.all_ok ? "selftest: all suites passed"
                             : "selftest: FAILURES above")
              << "\n";
    return run.all_ok;
}

} // namespace qpows::cli
