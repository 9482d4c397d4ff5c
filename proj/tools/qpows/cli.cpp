#include "cli.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace qpows::cli {

namespace {

// ---------------------------------------------------------------- lexing

struct Token {
    enum class Kind { Ident, Int, Punct, SetLit, End };
    Kind kind = Kind::End;
    std::string text;
    long long value = 0;
    size_t pos = 0;
};

[[noreturn]] void syntax_error(size_t pos, const std::string& what) {
    throw CliError("syntax error at position " + std::to_string(pos + 1) +
                   ": " + what);
}

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() &&
                   std::isalnum(static_cast<unsigned char>(s[j])))
                ++j;
            t.kind = Token::Kind::Ident;
            t.text = s.substr(i, j - i);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            t.kind = Token::Kind::Int;
            t.text = s.substr(i, j - i);
            t.value = std::stoll(t.text);
            i = j;
        } else if (c == '{') {
            size_t j = s.find('}', i);
            if (j == std::string::npos)
                syntax_error(i, "unterminated set composition literal");
            t.kind = Token::Kind::SetLit;
            t.text = s.substr(i + 1, j - i - 1);
            i = j + 1;
        } else if (std::string("[](),|+-*/").find(c) != std::string::npos) {
            t.kind = Token::Kind::Punct;
            t.text = std::string(1, c);
            ++i;
        } else {
            syntax_error(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

// --------------------------------------------------- set literal parsing

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int parse_int(const std::string& s, size_t pos) {
    if (s.empty()) syntax_error(pos, "expected an integer");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            syntax_error(pos, "expected an integer, got '" + s + "'");
    return std::stoi(s);
}

/// Blocks are '|'-separated with comma-separated elements.  A literal with
/// no commas at all first tries one integer per block and falls back to
/// the compressed single-digit reading.
SetComposition parse_set_literal(const std::string& body, size_t pos) {
    std::string text = strip(body);
    if (text.empty()) return SetComposition();
    auto block_texts = split(text, '|');

    auto strict = [&]() -> SetComposition {
        std::vector<std::vector<int>> blocks;
        for (const auto& bt : block_texts) {
            std::vector<int> block;
            for (const auto& el : split(bt, ','))
                block.push_back(parse_int(strip(el), pos));
            blocks.push_back(std::move(block));
        }
        return SetComposition(std::move(blocks));
    };
    if (text.find(',') != std::string::npos) {
        try {
            return strict();
        } catch (const std::invalid_argument& e) {
            throw CliError("invalid set composition literal {" + body +
                           "}: " + e.what());
        }
    }
    try {
        return strict();
    } catch (const std::invalid_argument&) {
        // compressed digits, one element per character
        try {
            std::vector<std::vector<int>> blocks;
            for (const auto& bt : block_texts) {
                std::vector<int> block;
                for (char c : strip(bt)) {
                    if (c < '1' || c > '9')
                        throw std::invalid_argument(
                            "compressed blocks use digits 1-9");
                    block.push_back(c - '0');
                }
                blocks.push_back(std::move(block));
            }
            return SetComposition(std::move(blocks));
        } catch (const std::invalid_argument& e) {
            throw CliError("invalid set composition literal {" + body +
                           "}: " + e.what());
        }
    }
}

// --------------------------------------------------------------- parsing

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    enum class Kind { Scalar, QsymAtom, NsymAtom, NcqAtom, GAtom, Add, Sub,
                      Mul, Call };
    Kind kind;
    size_t pos = 0;
    Rational scalar;
    std::string name;            // atom basis, call name, convert target
    Composition comp;
    SetComposition setcomp;
    std::vector<int> perm;
    std::vector<NodePtr> args;
    long long intarg = 0;        // dualcheck degree
};

const char* kQsymBases[] = {"M", "F", "E", "P", "Pt"};
const char* kNsymBases[] = {"S", "Z"};
const char* kNcqBases[] = {"Mn", "Pn"};
const char* kCalls[] = {"convert", "coproduct", "antipode", "project",
                        "star", "omega", "psi", "dualcheck", "orbitsum"};

bool is_in(const std::string& s, const char* const* arr, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (s == arr[i]) return true;
    return false;
}

class Parser {
public:
    explicit Parser(const std::string& input) : toks_(tokenize(input)) {}

    NodePtr parse() {
        auto e = parse_expr();
        expect_end();
        return e;
    }

private:
    std::vector<Token> toks_;
    size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }
    bool accept_punct(const std::string& p) {
        if (peek().kind == Token::Kind::Punct && peek().text == p) {
            ++at_;
            return true;
        }
        return false;
    }
    void expect_punct(const std::string& p) {
        if (!accept_punct(p))
            syntax_error(peek().pos, "expected '" + p + "'");
    }
    void expect_end() {
        if (peek().kind != Token::Kind::End)
            syntax_error(peek().pos, "unexpected trailing input");
    }

    NodePtr parse_expr() {
        auto lhs = parse_term();
        while (true) {
            if (accept_punct("+")) {
                auto n = std::make_unique<Node>();
                n->kind = Node::Kind::Add;
                n->args.push_back(std::move(lhs));
                n->args.push_back(parse_term());
                lhs = std::move(n);
            } else if (accept_punct("-")) {
                auto n = std::make_unique<Node>();
                n->kind = Node::Kind::Sub;
                n->args.push_back(std::move(lhs));
                n->args.push_back(parse_term());
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        auto lhs = parse_factor();
        while (accept_punct("*")) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::Mul;
            n->args.push_back(std::move(lhs));
            n->args.push_back(parse_factor());
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr parse_factor() {
        if (accept_punct("-")) {
            auto minus = std::make_unique<Node>();
            minus->kind = Node::Kind::Scalar;
            minus->scalar = -1;
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::Mul;
            n->args.push_back(std::move(minus));
            n->args.push_back(parse_factor());
            return n;
        }
        if (accept_punct("(")) {
            auto e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (peek().kind == Token::Kind::Int) {
            Token t = next();
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::Scalar;
            n->pos = t.pos;
            Integer num(t.text);
            if (accept_punct("/")) {
                if (peek().kind != Token::Kind::Int)
                    syntax_error(peek().pos, "expected denominator");
                Token d = next();
                Integer den(d.text);
                if (den == 0) syntax_error(d.pos, "zero denominator");
                n->scalar = Rational(num, den);
            } else {
                n->scalar = Rational(num);
            }
            return n;
        }
        if (peek().kind == Token::Kind::Ident) return parse_atom_or_call();
        syntax_error(peek().pos, "expected an expression");
    }

    Composition parse_comp_literal() {
        expect_punct("[");
        std::vector<int> parts;
        if (!accept_punct("]")) {
            while (true) {
                if (peek().kind != Token::Kind::Int)
                    syntax_error(peek().pos, "expected a part");
                parts.push_back(static_cast<int>(next().value));
                if (accept_punct("]")) break;
                expect_punct(",");
            }
        }
        try {
            return Composition(parts);
        } catch (const std::invalid_argument& e) {
            throw CliError(std::string("invalid composition: ") + e.what());
        }
    }

    NodePtr parse_atom_or_call() {
        Token t = next();
        const std::string& name = t.text;

        if (is_in(name, kQsymBases, 5)) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::QsymAtom;
            n->pos = t.pos;
            n->name = name;
            n->comp = parse_comp_literal();
            return n;
        }
        if (is_in(name, kNsymBases, 2)) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::NsymAtom;
            n->pos = t.pos;
            n->name = name;
            n->comp = parse_comp_literal();
            return n;
        }
        if (is_in(name, kNcqBases, 2)) {
            if (peek().kind != Token::Kind::SetLit)
                syntax_error(peek().pos, "expected a set composition literal");
            Token lit = next();
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::NcqAtom;
            n->pos = t.pos;
            n->name = name;
            n->setcomp = parse_set_literal(lit.text, lit.pos);
            return n;
        }
        if (name == "G") {
            expect_punct("(");
            std::vector<int> perm;
            if (!accept_punct(")")) {
                while (true) {
                    if (peek().kind != Token::Kind::Int)
                        syntax_error(peek().pos, "expected a permutation entry");
                    perm.push_back(static_cast<int>(next().value));
                    if (accept_punct(")")) break;
                    expect_punct(",");
                }
            }
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::GAtom;
            n->pos = t.pos;
            n->perm = std::move(perm);
            return n;
        }
        if (is_in(name, kCalls, 9)) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::Call;
            n->pos = t.pos;
            n->name = name;
            expect_punct("(");
            if (name == "dualcheck") {
                if (peek().kind != Token::Kind::Int)
                    syntax_error(peek().pos, "expected a degree");
                n->intarg = next().value;
            } else if (name == "orbitsum") {
                if (peek().kind != Token::Kind::SetLit)
                    syntax_error(peek().pos,
                                 "expected a set composition literal");
                Token lit = next();
                n->setcomp = parse_set_literal(lit.text, lit.pos);
            } else {
                n->args.push_back(parse_expr());
                if (name == "convert") {
                    expect_punct(",");
                    if (peek().kind != Token::Kind::Ident)
                        syntax_error(peek().pos, "expected a basis name");
                    Token b = next();
                    if (!is_in(b.text, kQsymBases, 5) &&
                        !is_in(b.text, kNsymBases, 2) &&
                        !is_in(b.text, kNcqBases, 2))
                        syntax_error(b.pos, "unknown basis '" + b.text + "'");
                    n->name = "convert:" + b.text;
                }
            }
            expect_punct(")");
            return n;
        }
        syntax_error(t.pos, "unknown name '" + name + "'");
    }
};

// ------------------------------------------------------------ evaluation

QsymBasis qsym_basis_for(const std::string& name, const OrderContext& ctx) {
    if (name == "M") return QsymBasis::M();
    if (name == "F") return QsymBasis::F();
    if (name == "E") return QsymBasis::E();
    if (name == "P") return QsymBasis::P(ctx.int_order);
    return QsymBasis::Pt(ctx.int_order);
}

int element_degree(const QsymElement& e) {
    int d = 0;
    for (const auto& [k, c] : e.terms) d = std::max(d, k.degree());
    return d;
}

int element_degree(const NsymElement& e) {
    int d = 0;
    for (const auto& [k, c] : e.terms) d = std::max(d, k.degree());
    return d;
}

int element_degree(const NcqElement& e) {
    int d = 0;
    for (const auto& [k, c] : e.terms) d = std::max(d, k.ground());
    return d;
}

void check_cap(int degree, const OrderContext& ctx, const std::string& what) {
    if (degree > ctx.max_degree)
        throw CliError(what + ": degree " + std::to_string(degree) +
                       " exceeds QPOWS_MAX_DEGREE (" +
                       std::to_string(ctx.max_degree) + ")");
}

struct Evaluator {
    const OrderContext& ctx;

    Value eval(const Node& n) {
        switch (n.kind) {
            case Node::Kind::Scalar:
                return ScalarValue{n.scalar};
            case Node::Kind::QsymAtom:
                return QsymElement(qsym_basis_for(n.name, ctx), n.comp);
            case Node::Kind::NsymAtom:
                return NsymElement(n.name == "S"
                                       ? NsymBasis::S()
                                       : NsymBasis::Z(ctx.int_order),
                                   n.comp);
            case Node::Kind::NcqAtom:
                return NcqElement(n.name == "Mn"
                                      ? NcqBasis::M()
                                      : NcqBasis::P(ctx.set_order),
                                  n.setcomp);
            case Node::Kind::GAtom:
                return wrap([&] { return Value(fqsym_G(n.perm)); });
            case Node::Kind::Add:
                return add(eval(*n.args[0]), eval(*n.args[1]), false);
            case Node::Kind::Sub:
                return add(eval(*n.args[0]), eval(*n.args[1]), true);
            case Node::Kind::Mul:
                return mul(eval(*n.args[0]), eval(*n.args[1]));
            case Node::Kind::Call:
                return call(n);
        }
        throw CliError("internal: bad node");
    }

    template <class F> Value wrap(F&& f) {
        try {
            return f();
        } catch (const std::invalid_argument& e) {
            throw CliError(e.what());
        }
    }

    Value scale(const Rational& c, Value v) {
        if (auto* s = std::get_if<ScalarValue>(&v))
            return ScalarValue{c * s->value};
        if (auto* q = std::get_if<QsymElement>(&v)) {
            *q *= c;
            return v;
        }
        if (auto* ns = std::get_if<NsymElement>(&v)) {
            *ns *= c;
            return v;
        }
        if (auto* nc = std::get_if<NcqElement>(&v)) {
            *nc *= c;
            return v;
        }
        if (auto* t = std::get_if<QsymTensor>(&v)) {
            *t *= c;
            return v;
        }
        if (auto* nt = std::get_if<NcqTensor>(&v)) {
            NcqTensor out(nt->basis);
            for (auto& [k, w] : nt->terms) out.add(k.first, k.second, c * w);
            return out;
        }
        throw CliError("cannot scale a check result");
    }

    // a bare scalar is a multiple of the unit of whichever space it meets
    QsymElement as_qsym_unit(const Rational& c) {
        return QsymElement(QsymBasis::M(), Composition(), c);
    }

    Value add(Value a, Value b, bool negate) {
        if (negate) b = scale(Rational(-1), std::move(b));
        if (auto* sa = std::get_if<ScalarValue>(&a)) {
            if (auto* sb = std::get_if<ScalarValue>(&b))
                return ScalarValue{sa->value + sb->value};
            return add(Value(as_unit_like(b, sa->value)), std::move(b), false);
        }
        if (std::get_if<ScalarValue>(&b))
            return add(std::move(b), std::move(a), false);

        if (auto* qa = std::get_if<QsymElement>(&a)) {
            auto* qb = std::get_if<QsymElement>(&b);
            if (!qb) throw CliError("space mismatch in addition");
            return wrap([&] {
                auto r = *qa;
                r += convert(*qb, qa->basis);
                return Value(r);
            });
        }
        if (auto* na = std::get_if<NsymElement>(&a)) {
            auto* nb = std::get_if<NsymElement>(&b);
            if (!nb) throw CliError("space mismatch in addition");
            return wrap([&] {
                auto r = *na;
                r += qpows::convert(*nb, na->basis);
                return Value(r);
            });
        }
        if (auto* ca = std::get_if<NcqElement>(&a)) {
            auto* cb = std::get_if<NcqElement>(&b);
            if (!cb) throw CliError("space mismatch in addition");
            return wrap([&] {
                auto r = *ca;
                auto rhs = *cb;
                if (rhs.basis != r.basis)
                    rhs = r.basis.kind() == NcqBasis::Kind::M
                              ? to_M(rhs)
                              : to_P(rhs, r.basis.order());
                r += rhs;
                return Value(r);
            });
        }
        if (auto* ta = std::get_if<QsymTensor>(&a)) {
            auto* tb = std::get_if<QsymTensor>(&b);
            if (!tb || !(ta->basis == tb->basis))
                throw CliError("tensor addition requires matching bases");
            auto r = *ta;
            r += *tb;
            return r;
        }
        throw CliError("unsupported operands in addition");
    }

    Value as_unit_like(const Value& shape, const Rational& c) {
        if (std::holds_alternative<QsymElement>(shape))
            return QsymElement(std::get<QsymElement>(shape).basis,
                               Composition(), c);
        if (std::holds_alternative<NsymElement>(shape))
            return NsymElement(std::get<NsymElement>(shape).basis,
                               Composition(), c);
        if (std::holds_alternative<NcqElement>(shape))
            return NcqElement(std::get<NcqElement>(shape).basis,
                              SetComposition(), c);
        throw CliError("cannot add a scalar to this value");
    }

    Value mul(Value a, Value b) {
        if (auto* sa = std::get_if<ScalarValue>(&a))
            if (std::get_if<ScalarValue>(&b))
                return ScalarValue{sa->value *
                                   std::get<ScalarValue>(b).value};
        if (auto* sa = std::get_if<ScalarValue>(&a))
            return scale(sa->value, std::move(b));
        if (auto* sb = std::get_if<ScalarValue>(&b))
            return scale(sb->value, std::move(a));

        if (auto* qa = std::get_if<QsymElement>(&a)) {
            auto* qb = std::get_if<QsymElement>(&b);
            if (!qb) throw CliError("space mismatch in product");
            return wrap([&] { return Value(product(*qa, *qb)); });
        }
        if (auto* na = std::get_if<NsymElement>(&a)) {
            auto* nb = std::get_if<NsymElement>(&b);
            if (!nb) throw CliError("space mismatch in product");
            return wrap([&] {
                return Value(product(*na, qpows::convert(*nb, na->basis)));
            });
        }
        if (auto* ca = std::get_if<NcqElement>(&a)) {
            auto* cb = std::get_if<NcqElement>(&b);
            if (!cb) throw CliError("space mismatch in product");
            return wrap([&] { return Value(product(*ca, *cb)); });
        }
        throw CliError("unsupported operands in product");
    }

    Value call(const Node& n) {
        if (n.name == "dualcheck") {
            int deg = static_cast<int>(n.intarg);
            if (deg < 1) throw CliError("dualcheck needs a degree >= 1");
            check_cap(deg, ctx, "dualcheck");
            bool ok = duality_check(deg, ctx.int_order);
            return DualCheckResult{deg, ctx.int_order.name(), ok};
        }
        if (n.name == "orbitsum") {
            check_cap(n.setcomp.ground(), ctx, "orbitsum");
            return wrap(
                [&] { return Value(orbit_project_sum(n.setcomp, ctx.set_order)); });
        }

        Value arg = eval(*n.args[0]);

        if (n.name.rfind("convert:", 0) == 0) {
            std::string target = n.name.substr(8);
            if (is_in(target, kQsymBases, 5)) {
                auto* q = std::get_if<QsymElement>(&arg);
                if (!q) throw CliError("convert: expected a qsym expression for basis " + target);
                auto basis = qsym_basis_for(target, ctx);
                if (basis.kind() == QsymBasis::Kind::P ||
                    basis.kind() == QsymBasis::Kind::Pt)
                    check_cap(element_degree(*q), ctx, "convert");
                return wrap([&] { return Value(convert(*q, basis)); });
            }
            if (is_in(target, kNsymBases, 2)) {
                auto* e = std::get_if<NsymElement>(&arg);
                if (!e) throw CliError("convert: expected an nsym expression for basis " + target);
                auto basis = target == "S" ? NsymBasis::S()
                                           : NsymBasis::Z(ctx.int_order);
                check_cap(element_degree(*e), ctx, "convert");
                return wrap([&] { return Value(qpows::convert(*e, basis)); });
            }
            auto* e = std::get_if<NcqElement>(&arg);
            if (!e) throw CliError("convert: expected an ncqsym expression for basis " + target);
            if (target == "Mn") return wrap([&] { return Value(to_M(*e)); });
            check_cap(element_degree(*e), ctx, "convert");
            return wrap([&] { return Value(to_P(*e, ctx.set_order)); });
        }
        if (n.name == "coproduct") {
            if (auto* q = std::get_if<QsymElement>(&arg))
                return wrap([&] { return Value(coproduct(*q)); });
            if (auto* e = std::get_if<NcqElement>(&arg))
                return wrap([&] { return Value(coproduct(*e)); });
            throw CliError("coproduct: expected a qsym or ncqsym expression");
        }
        if (n.name == "antipode") {
            auto* q = std::get_if<QsymElement>(&arg);
            if (!q) throw CliError("antipode: expected a qsym expression");
            return wrap([&] { return Value(antipode(*q)); });
        }
        if (n.name == "project") {
            auto* e = std::get_if<NcqElement>(&arg);
            if (!e) throw CliError("project: expected an ncqsym expression");
            return wrap([&] { return Value(project_rho(to_M(*e))); });
        }
        if (n.name == "star" || n.name == "omega" || n.name == "psi") {
            auto* q = std::get_if<QsymElement>(&arg);
            if (!q) throw CliError(n.name + ": expected a qsym expression");
            Involution kind = n.name == "star"
                                  ? Involution::star
                                  : n.name == "omega" ? Involution::omega
                                                      : Involution::psi;
            return wrap([&] { return Value(involution(*q, kind)); });
        }
        throw CliError("unknown function '" + n.name + "'");
    }
};

// ------------------------------------------------------------ formatting

std::string rational_magnitude(const Rational& q) {
    Rational a = q < 0 ? Rational(-q) : q;
    std::string s = numerator(a).str();
    if (denominator(a) != 1) s += "/" + denominator(a).str();
    return s;
}

std::string comp_atom(const std::string& basis, const Composition& c) {
    std::string s = basis + "[";
    const auto& p = c.parts();
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

std::string setcomp_atom(const std::string& basis, const SetComposition& sc) {
    std::string s = basis + "{";
    for (int i = 0; i < sc.length(); ++i) {
        if (i) s += "|";
        const auto& b = sc.block(i);
        for (size_t j = 0; j < b.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(b[j]);
        }
    }
    return s + "}";
}

std::string join_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [atom, coeff] : terms) {
        bool neg = coeff < 0;
        Rational mag = neg ? Rational(-coeff) : coeff;
        std::string head = mag == 1 ? atom : rational_magnitude(mag) + "*" + atom;
        if (first) {
            out += (neg ? "-" : "") + head;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + head;
        }
    }
    return out;
}

using ojson = nlohmann::ordered_json;

ojson json_int(const Integer& v) {
    // coefficients stay tiny here, but keep arbitrary precision honest
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

ojson comp_json(const Composition& c) {
    ojson a = ojson::array();
    for (int p : c.parts()) a.push_back(p);
    return a;
}

ojson setcomp_json(const SetComposition& sc) {
    ojson a = ojson::array();
    for (const auto& b : sc.blocks()) {
        ojson block = ojson::array();
        for (int x : b) block.push_back(x);
        a.push_back(block);
    }
    return a;
}

template <class Key>
ojson terms_json(const std::map<Key, Rational>& terms,
                 ojson (*key_json)(const Key&)) {
    ojson a = ojson::array();
    for (const auto& [k, c] : terms) {
        ojson t;
        t["index"] = key_json(k);
        t["num"] = json_int(numerator(c));
        t["den"] = json_int(denominator(c));
        a.push_back(t);
    }
    return a;
}

struct TextFormatter {
    std::string operator()(const ScalarValue& s) const {
        if (s.value < 0) return "-" + rational_magnitude(s.value);
        return rational_magnitude(s.value);
    }
    std::string operator()(const QsymElement& e) const {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& [k, c] : e.terms)
            terms.emplace_back(comp_atom(e.basis.display_name(), k), c);
        return join_terms(terms);
    }
    std::string operator()(const NsymElement& e) const {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& [k, c] : e.terms)
            terms.emplace_back(comp_atom(e.basis.display_name(), k), c);
        return join_terms(terms);
    }
    std::string operator()(const NcqElement& e) const {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& [k, c] : e.terms)
            terms.emplace_back(setcomp_atom(e.basis.display_name(), k), c);
        return join_terms(terms);
    }
    std::string operator()(const QsymTensor& t) const {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& [k, c] : t.terms)
            terms.emplace_back(comp_atom(t.basis.display_name(), k.first) +
                                   " (x) " +
                                   comp_atom(t.basis.display_name(), k.second),
                               c);
        return join_terms(terms);
    }
    std::string operator()(const NcqTensor& t) const {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& [k, c] : t.terms)
            terms.emplace_back(
                setcomp_atom(t.basis.display_name(), k.first) + " (x) " +
                    setcomp_atom(t.basis.display_name(), k.second),
                c);
        return join_terms(terms);
    }
    std::string operator()(const DualCheckResult& r) const {
        return r.ok ? "ok" : "mismatch";
    }
};

struct JsonFormatter {
    ojson operator()(const ScalarValue& s) const {
        ojson j;
        j["space"] = "scalar";
        j["num"] = json_int(numerator(s.value));
        j["den"] = json_int(denominator(s.value));
        return j;
    }
    ojson operator()(const QsymElement& e) const {
        ojson j;
        j["space"] = "qsym";
        j["basis"] = e.basis.display_name();
        j["terms"] = terms_json<Composition>(e.terms, comp_json);
        return j;
    }
    ojson operator()(const NsymElement& e) const {
        ojson j;
        j["space"] = "nsym";
        j["basis"] = e.basis.display_name();
        j["terms"] = terms_json<Composition>(e.terms, comp_json);
        return j;
    }
    ojson operator()(const NcqElement& e) const {
        ojson j;
        j["space"] = "ncqsym";
        j["basis"] = e.basis.display_name();
        j["terms"] = terms_json<SetComposition>(e.terms, setcomp_json);
        return j;
    }
    ojson operator()(const QsymTensor& t) const {
        ojson j;
        j["space"] = "qsym";
        j["basis"] = t.basis.display_name();
        ojson pairs = ojson::array();
        for (const auto& [k, c] : t.terms) {
            ojson p;
            p["left"] = comp_json(k.first);
            p["right"] = comp_json(k.second);
            p["num"] = json_int(numerator(c));
            p["den"] = json_int(denominator(c));
            pairs.push_back(p);
        }
        j["pairs"] = pairs;
        return j;
    }
    ojson operator()(const NcqTensor& t) const {
        ojson j;
        j["space"] = "ncqsym";
        j["basis"] = t.basis.display_name();
        ojson pairs = ojson::array();
        for (const auto& [k, c] : t.terms) {
            ojson p;
            p["left"] = setcomp_json(k.first);
            p["right"] = setcomp_json(k.second);
            p["num"] = json_int(numerator(c));
            p["den"] = json_int(denominator(c));
            pairs.push_back(p);
        }
        j["pairs"] = pairs;
        return j;
    }
    ojson operator()(const DualCheckResult& r) const {
        ojson j;
        j["check"] = "dualcheck";
        j["degree"] = r.degree;
        j["order"] = r.order;
        j["ok"] = r.ok;
        return j;
    }
};

} // namespace

int env_max_degree() {
    const char* env = std::getenv("QPOWS_MAX_DEGREE");
    if (!env || !*env) return 8;
    try {
        int v = std::stoi(env);
        if (v < 0) throw std::invalid_argument("negative");
        return v;
    } catch (...) {
        throw CliError("QPOWS_MAX_DEGREE must be a nonnegative integer");
    }
}

OrderContext OrderContext::from_flag(const std::optional<std::string>& name) {
    OrderContext ctx;
    ctx.max_degree = env_max_degree();
    if (!name || name->empty()) return ctx;

    // resolve recursively through reverse:/bar: wrappers
    std::function<std::variant<IntOrder, SetOrder>(const std::string&)> resolve =
        [&](const std::string& s) -> std::variant<IntOrder, SetOrder> {
        if (s == "desc") return IntOrder::natural();
        if (s == "evenodd") return IntOrder::even_odd();
        if (s == "dtilde") return SetOrder::dtilde();
        if (s == "med") return SetOrder::med();
        if (s == "min") return SetOrder::min_order();
        if (s.rfind("reverse:", 0) == 0) {
            auto inner = resolve(s.substr(8));
            if (auto* io = std::get_if<IntOrder>(&inner))
                return io->reversed();
            return std::get<SetOrder>(inner).reversed();
        }
        if (s.rfind("bar:", 0) == 0) {
            auto inner = resolve(s.substr(4));
            if (std::holds_alternative<IntOrder>(inner))
                throw CliError("bar: applies to set orders only");
            return std::get<SetOrder>(inner).complemented();
        }
        throw CliError("unknown order name '" + s + "'");
    };
    auto resolved = resolve(*name);
    if (auto* io = std::get_if<IntOrder>(&resolved))
        ctx.int_order = *io;
    else
        ctx.set_order = std::get<SetOrder>(resolved);
    return ctx;
}

Value evaluate(const std::string& input, const OrderContext& ctx) {
    Parser parser(input);
    auto ast = parser.parse();
    Evaluator ev{ctx};
    return ev.eval(*ast);
}

std::string format_text(const Value& v) {
    return std::visit(TextFormatter{}, v);
}

std::string format_json(const Value& v) {
    return std::visit(JsonFormatter{}, v).dump();
}

} // namespace qpows::cli
