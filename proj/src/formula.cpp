#include "wordauto/formula.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wordauto {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

FormulaPtr rel(std::string name, std::vector<std::string> args) {
    Formula f;
    f.kind = Formula::Kind::Rel;
    f.relName = std::move(name);
    f.args = std::move(args);
    if (f.args.empty()) throw std::invalid_argument("relation atom needs arguments");
    return make(std::move(f));
}

FormulaPtr eq(std::string a, std::string b) {
    Formula f;
    f.kind = Formula::Kind::Eq;
    f.args = {std::move(a), std::move(b)};
    return make(std::move(f));
}

FormulaPtr fnot(FormulaPtr x) {
    Formula f;
    f.kind = Formula::Kind::Not;
    f.children = {std::move(x)};
    return make(std::move(f));
}

FormulaPtr fand(std::vector<FormulaPtr> fs) {
    if (fs.empty()) throw std::invalid_argument("and needs children");
    if (fs.size() == 1) return fs[0];
    Formula f;
    f.kind = Formula::Kind::And;
    f.children = std::move(fs);
    return make(std::move(f));
}

FormulaPtr forr(std::vector<FormulaPtr> fs) {
    if (fs.empty()) throw std::invalid_argument("or needs children");
    if (fs.size() == 1) return fs[0];
    Formula f;
    f.kind = Formula::Kind::Or;
    f.children = std::move(fs);
    return make(std::move(f));
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
    Formula f;
    f.kind = Formula::Kind::Implies;
    f.children = {std::move(a), std::move(b)};
    return make(std::move(f));
}

FormulaPtr exists(std::string var, FormulaPtr body) {
    Formula f;
    f.kind = Formula::Kind::Exists;
    f.var = std::move(var);
    f.children = {std::move(body)};
    return make(std::move(f));
}

FormulaPtr forall(std::string var, FormulaPtr body) {
    Formula f;
    f.kind = Formula::Kind::Forall;
    f.var = std::move(var);
    f.children = {std::move(body)};
    return make(std::move(f));
}

FormulaPtr existsAll(const std::vector<std::string>& vars, FormulaPtr body) {
    FormulaPtr out = std::move(body);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = exists(*it, std::move(out));
    return out;
}

FormulaPtr forallAll(const std::vector<std::string>& vars, FormulaPtr body) {
    FormulaPtr out = std::move(body);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = forall(*it, std::move(out));
    return out;
}

namespace {

struct SexprParser {
    const std::string& text;
    size_t pos = 0;

    void skipWs() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string token() {
        skipWs();
        size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (start == pos) throw std::invalid_argument("formula parse error at offset " + std::to_string(pos));
        return text.substr(start, pos - start);
    }

    FormulaPtr parse() {
        skipWs();
        if (pos >= text.size() || text[pos] != '(')
            throw std::invalid_argument("formula parse error: expected '(' at offset " + std::to_string(pos));
        ++pos;
        std::string head = token();
        FormulaPtr result;
        if (head == "forall" || head == "exists") {
            std::string var = token();
            FormulaPtr body = parse();
            result = head == "forall" ? forall(var, body) : exists(var, body);
        } else if (head == "and" || head == "or") {
            std::vector<FormulaPtr> children;
            while (peekIsOpen()) children.push_back(parse());
            result = head == "and" ? fand(std::move(children)) : forr(std::move(children));
        } else if (head == "not") {
            result = fnot(parse());
        } else if (head == "implies" || head == "->" || head == "=>") {
            FormulaPtr a = parse();
            FormulaPtr b = parse();
            result = implies(std::move(a), std::move(b));
        } else if (head == "=") {
            std::string a = token();
            std::string b = token();
            result = eq(std::move(a), std::move(b));
        } else {
            std::vector<std::string> args;
            while (true) {
                skipWs();
                if (pos >= text.size()) throw std::invalid_argument("formula parse error: unterminated atom");
                if (text[pos] == ')') break;
                args.push_back(token());
            }
            result = rel(std::move(head), std::move(args));
        }
        skipWs();
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("formula parse error: expected ')' at offset " + std::to_string(pos));
        ++pos;
        return result;
    }

    bool peekIsOpen() {
        skipWs();
        return pos < text.size() && text[pos] == '(';
    }
};

}  // namespace

FormulaPtr parseFormula(const std::string& text) {
    SexprParser p{text};
    FormulaPtr f = p.parse();
    p.skipWs();
    if (p.pos != text.size())
        throw std::invalid_argument("formula parse error: trailing input at offset " + std::to_string(p.pos));
    return f;
}

std::string formulaToString(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Rel: {
            std::string s = "(" + f->relName;
            for (const auto& a : f->args) s += " " + a;
            return s + ")";
        }
        case Formula::Kind::Eq:
            return "(= " + f->args[0] + " " + f->args[1] + ")";
        case Formula::Kind::Not:
            return "(not " + formulaToString(f->children[0]) + ")";
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::string s = f->kind == Formula::Kind::And ? "(and" : "(or";
            for (const auto& c : f->children) s += " " + formulaToString(c);
            return s + ")";
        }
        case Formula::Kind::Implies:
            return "(implies " + formulaToString(f->children[0]) + " " + formulaToString(f->children[1]) + ")";
        case Formula::Kind::Exists:
            return "(exists " + f->var + " " + formulaToString(f->children[0]) + ")";
        case Formula::Kind::Forall:
            return "(forall " + f->var + " " + formulaToString(f->children[0]) + ")";
    }
    throw std::logic_error("unreachable");
}

namespace {

void collectFree(const FormulaPtr& f, std::set<std::string>& bound, std::vector<std::string>& order,
                 std::set<std::string>& seen) {
    switch (f->kind) {
        case Formula::Kind::Rel:
        case Formula::Kind::Eq:
            for (const auto& v : f->args)
                if (!bound.count(v) && seen.insert(v).second) order.push_back(v);
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            bool inserted = bound.insert(f->var).second;
            collectFree(f->children[0], bound, order, seen);
            if (inserted) bound.erase(f->var);
            break;
        }
        default:
            for (const auto& c : f->children) collectFree(c, bound, order, seen);
    }
}

}  // namespace

std::vector<std::string> freeVariables(const FormulaPtr& f) {
    std::set<std::string> bound, seen;
    std::vector<std::string> order;
    collectFree(f, bound, order, seen);
    return order;
}

// [a,b] = c  iff  a.b = (b.a).c
static FormulaPtr commAtom(const std::string& a, const std::string& b, const std::string& c,
                           const std::string& u, const std::string& v) {
    return exists(u, exists(v, fand({rel("Op", {b, a, u}), rel("Op", {a, b, v}), rel("Op", {u, c, v})})));
}

FormulaPtr assocSentence() {
    return forallAll({"x", "y", "z", "u", "v", "w"},
                  implies(fand({rel("Op", {"x", "y", "u"}), rel("Op", {"u", "z", "v"}),
                                rel("Op", {"y", "z", "w"})}),
                          rel("Op", {"x", "w", "v"})));
}

FormulaPtr identitySentence() {
    return forallAll({"x", "n"},
                  implies(rel("is_e", {"n"}),
                          fand({rel("Op", {"x", "n", "x"}), rel("Op", {"n", "x", "x"})})));
}

FormulaPtr inverseSentence() {
    return forall("x", existsAll({"y", "n"},
                              fand({rel("is_e", {"n"}), rel("Op", {"x", "y", "n"}),
                                    rel("Op", {"y", "x", "n"})})));
}

FormulaPtr commutativitySentence() {
    return forallAll({"x", "y", "z"}, implies(rel("Op", {"x", "y", "z"}), rel("Op", {"y", "x", "z"})));
}

FormulaPtr totalitySentence() {
    return forallAll({"x", "y"}, exists("z", rel("Op", {"x", "y", "z"})));
}

FormulaPtr functionalitySentence() {
    return forallAll({"x", "y", "z", "w"},
                  implies(fand({rel("Op", {"x", "y", "z"}), rel("Op", {"x", "y", "w"})}), eq("z", "w")));
}

FormulaPtr exponentSentence(int p) {
    if (p < 2) throw std::invalid_argument("exponentSentence: p must be >= 2");
    std::vector<FormulaPtr> conj;
    std::vector<std::string> chain;
    std::string prev = "x";
    for (int i = 1; i < p; ++i) {
        std::string cur = "p" + std::to_string(i);
        conj.push_back(rel("Op", {prev, "x", cur}));
        chain.push_back(cur);
        prev = cur;
    }
    conj.push_back(rel("is_e", {prev}));
    return forall("x", existsAll(chain, fand(std::move(conj))));
}

FormulaPtr classTwoSentence() {
    return forallAll({"x", "y", "z", "c", "d"},
                  implies(fand({commAtom("x", "y", "c", "u1", "v1"), commAtom("c", "z", "d", "u2", "v2")}),
                          rel("is_e", {"d"})));
}

FormulaPtr commutatorEqualsSentence(int i, int k, const std::string& targetConstant) {
    std::string xi = "is_x" + std::to_string(i);
    std::string xk = "is_x" + std::to_string(k);
    return existsAll({"a", "b", "c"},
                  fand({rel(xi, {"a"}), rel(xk, {"b"}), rel(targetConstant, {"c"}),
                        commAtom("a", "b", "c", "u", "v")}));
}

FormulaPtr centreFormula() {
    return forallAll({"y", "u", "v"},
                  implies(fand({rel("Op", {"x", "y", "u"}), rel("Op", {"y", "x", "v"})}), eq("u", "v")));
}

}  // namespace wordauto
