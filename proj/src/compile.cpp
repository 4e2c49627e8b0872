#include "wordauto/compile.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace wordauto {

namespace {

// Negation normal form with Not only directly above atoms or Exists nodes;
// Forall and Implies are rewritten away. Pushing negations into the matrix
// keeps conjunctive structure visible to the quantifier planner.
FormulaPtr toNNF(const FormulaPtr& f, bool neg) {
    switch (f->kind) {
        case Formula::Kind::Rel:
        case Formula::Kind::Eq:
            return neg ? fnot(f) : f;
        case Formula::Kind::Not:
            return toNNF(f->children[0], !neg);
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            bool isAnd = (f->kind == Formula::Kind::And) != neg;
            std::vector<FormulaPtr> children;
            children.reserve(f->children.size());
            for (const auto& c : f->children) children.push_back(toNNF(c, neg));
            return isAnd ? fand(std::move(children)) : forr(std::move(children));
        }
        case Formula::Kind::Implies: {
            // a -> b  ==  (not a) or b
            if (neg) return fand({toNNF(f->children[0], false), toNNF(f->children[1], true)});
            return forr({toNNF(f->children[0], true), toNNF(f->children[1], false)});
        }
        case Formula::Kind::Exists:
            if (neg) return fnot(exists(f->var, toNNF(f->children[0], false)));
            return exists(f->var, toNNF(f->children[0], false));
        case Formula::Kind::Forall:
            if (neg) return exists(f->var, toNNF(f->children[0], true));
            return fnot(exists(f->var, toNNF(f->children[0], true)));
    }
    throw std::logic_error("unreachable");
}

void checkHygiene(const FormulaPtr& f, std::set<std::string>& inScope,
                  std::set<std::string>& binders) {
    switch (f->kind) {
        case Formula::Kind::Rel:
        case Formula::Kind::Eq:
            return;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            if (!inScope.insert(f->var).second)
                throw std::invalid_argument("variable rebound in nested quantifier: " + f->var);
            binders.insert(f->var);
            checkHygiene(f->children[0], inScope, binders);
            inScope.erase(f->var);
            return;
        default:
            for (const auto& c : f->children) checkHygiene(c, inScope, binders);
    }
}

struct CRes {
    std::vector<std::string> vars;
    std::optional<RelationAutomaton> rel;  // nullopt <=> closed formula
    bool truth = false;

    bool closed() const { return !rel.has_value(); }
    bool mentions(const std::string& v) const {
        return std::find(vars.begin(), vars.end(), v) != vars.end();
    }
};

class Compiler {
public:
    explicit Compiler(const Presentation& p) : P(p) {}

    CRes compileNode(const FormulaPtr& f) {
        switch (f->kind) {
            case Formula::Kind::Rel:
                return atomRel(f->relName, f->args);
            case Formula::Kind::Eq:
                return atomEq(f->args[0], f->args[1]);
            case Formula::Kind::Not:
                return negate(compileNode(f->children[0]));
            case Formula::Kind::And: {
                std::vector<CRes> parts;
                for (const auto& c : f->children) parts.push_back(compileNode(c));
                return joinAll(std::move(parts));
            }
            case Formula::Kind::Or: {
                std::vector<CRes> parts;
                for (const auto& c : f->children) parts.push_back(compileNode(c));
                CRes acc = std::move(parts[0]);
                for (size_t i = 1; i < parts.size(); ++i) acc = united(std::move(acc), std::move(parts[i]));
                return acc;
            }
            case Formula::Kind::Exists:
                return compileExists(f);
            case Formula::Kind::Forall:
                throw std::logic_error("forall survived NNF");
        }
        throw std::logic_error("unreachable");
    }

    CRes materialize(CRes r, const std::vector<std::string>& targetVars) {
        if (!r.closed()) return r;
        CRes out;
        out.vars = targetVars;
        int k = static_cast<int>(targetVars.size());
        if (k == 0) return r;
        if (r.truth) {
            RelationAutomaton full = P.domainCylinder(0, k);
            for (int t = 1; t < k; ++t) full = intersectRel(full, P.domainCylinder(t, k));
            out.rel = std::move(full);
        } else {
            PaddedAlphabet pa(P.base, k);
            out.rel = RelationAutomaton::wrapWellFormed(
                k, P.base, emptyLanguageDfa(Alphabet(pa.packedSize())));
        }
        return out;
    }

    CRes reorderToCanonical(CRes r, const std::vector<std::string>& canonical) {
        if (r.closed()) return r;
        if (r.vars == canonical) return r;
        if (r.vars.size() != canonical.size())
            throw std::logic_error("compiled variable set mismatch");
        std::vector<int> perm(canonical.size());
        for (size_t j = 0; j < canonical.size(); ++j) {
            auto it = std::find(r.vars.begin(), r.vars.end(), canonical[j]);
            if (it == r.vars.end()) throw std::logic_error("compiled variable set mismatch");
            perm[j] = static_cast<int>(it - r.vars.begin());
        }
        r.rel = reorderTracks(*r.rel, perm);
        r.vars = canonical;
        return r;
    }

private:
    const Presentation& P;
    std::map<std::pair<int, int>, RelationAutomaton> cylCache;
    int freshCounter = 0;

    const RelationAutomaton& domainCyl(int arity, int track) {
        auto key = std::make_pair(arity, track);
        auto it = cylCache.find(key);
        if (it == cylCache.end()) it = cylCache.emplace(key, P.domainCylinder(track, arity)).first;
        return it->second;
    }

    CRes domainize(CRes r) {
        if (r.closed()) return r;
        int k = r.rel->arity();
        for (int t = 0; t < k; ++t) r.rel = intersectRel(*r.rel, domainCyl(k, t));
        return r;
    }

    CRes negate(CRes r) {
        if (r.closed()) {
            r.truth = !r.truth;
            return r;
        }
        r.rel = complementRel(*r.rel);
        return domainize(std::move(r));
    }

    // Make r's tracks follow `target` (a superset of r.vars): permute the
    // existing tracks into target's relative order, then cylindrify the
    // missing ones into place.
    CRes alignTo(CRes r, const std::vector<std::string>& target) {
        if (r.closed()) throw std::logic_error("alignTo: closed operand");
        std::vector<std::string> restricted;
        for (const auto& v : target)
            if (r.mentions(v)) restricted.push_back(v);
        if (restricted != r.vars) {
            std::vector<int> perm(restricted.size());
            for (size_t j = 0; j < restricted.size(); ++j) {
                auto it = std::find(r.vars.begin(), r.vars.end(), restricted[j]);
                perm[j] = static_cast<int>(it - r.vars.begin());
            }
            r.rel = reorderTracks(*r.rel, perm);
            r.vars = std::move(restricted);
        }
        for (size_t pos = 0; pos < target.size(); ++pos) {
            if (pos < r.vars.size() && r.vars[pos] == target[pos]) continue;
            r.rel = cylindrify(*r.rel, static_cast<int>(pos));
            r.vars.insert(r.vars.begin() + pos, target[pos]);
        }
        return r;
    }

    static std::vector<std::string> mergedVars(const CRes& a, const CRes& b) {
        std::vector<std::string> merged = a.vars;
        for (const auto& v : b.vars)
            if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
        return merged;
    }

    CRes join(CRes a, CRes b) {
        if (a.closed()) return a.truth ? std::move(b) : std::move(a);
        if (b.closed()) return b.truth ? std::move(a) : std::move(b);
        std::vector<std::string> merged = mergedVars(a, b);
        CRes la = alignTo(std::move(a), merged);
        CRes lb = alignTo(std::move(b), merged);
        CRes out;
        out.vars = std::move(merged);
        out.rel = intersectRel(*la.rel, *lb.rel);
        return out;
    }

    CRes united(CRes a, CRes b) {
        if (a.closed()) return a.truth ? std::move(a) : std::move(b);
        if (b.closed()) return b.truth ? std::move(b) : std::move(a);
        std::vector<std::string> merged = mergedVars(a, b);
        CRes la = alignTo(std::move(a), merged);
        CRes lb = alignTo(std::move(b), merged);
        CRes out;
        out.vars = std::move(merged);
        out.rel = uniteRel(*la.rel, *lb.rel);
        // cylindrified tracks are unconstrained on the weaker side
        return domainize(std::move(out));
    }

    // Fold a conjunction, repeatedly joining the pair with the smallest
    // variable union.
    CRes joinAll(std::vector<CRes> parts) {
        if (parts.empty()) throw std::logic_error("joinAll: no operands");
        for (const auto& p : parts)
            if (p.closed() && !p.truth) return p;
        parts.erase(std::remove_if(parts.begin(), parts.end(),
                                   [](const CRes& r) { return r.closed(); }),
                    parts.end());
        if (parts.empty()) {
            CRes t;
            t.truth = true;
            return t;
        }
        while (parts.size() > 1) {
            size_t bi = 0, bj = 1;
            size_t best = SIZE_MAX;
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t j = i + 1; j < parts.size(); ++j) {
                    size_t u = mergedVars(parts[i], parts[j]).size();
                    if (u < best) {
                        best = u;
                        bi = i;
                        bj = j;
                    }
                }
            CRes combined = join(std::move(parts[bi]), std::move(parts[bj]));
            parts.erase(parts.begin() + bj);
            parts[bi] = std::move(combined);
        }
        return std::move(parts[0]);
    }

    CRes projectVar(CRes r, const std::string& v) {
        if (r.closed()) return r;
        auto it = std::find(r.vars.begin(), r.vars.end(), v);
        if (it == r.vars.end()) return r;  // vacuous: domain is nonempty
        int idx = static_cast<int>(it - r.vars.begin());
        if (r.vars.size() == 1) {
            CRes out;
            out.truth = !isEmpty(r.rel->dfa());
            return out;
        }
        r.rel = project(*r.rel, idx);
        r.vars.erase(it);
        return r;
    }

    // Eliminate each variable by joining only the conjuncts that mention it,
    // cheapest variable first. Keeps intermediate arity far below the naive
    // full-matrix product.
    CRes planExists(std::vector<std::string> vars, std::vector<CRes> conjuncts) {
        for (const auto& c : conjuncts)
            if (c.closed() && !c.truth) {
                CRes f;
                f.truth = false;
                return f;
            }
        while (!vars.empty()) {
            size_t bestVar = 0;
            size_t bestCost = SIZE_MAX;
            for (size_t vi = 0; vi < vars.size(); ++vi) {
                std::set<std::string> uni;
                bool used = false;
                for (const auto& c : conjuncts)
                    if (c.mentions(vars[vi])) {
                        used = true;
                        uni.insert(c.vars.begin(), c.vars.end());
                    }
                size_t cost = used ? uni.size() : 0;
                if (cost < bestCost) {
                    bestCost = cost;
                    bestVar = vi;
                }
            }
            std::string x = vars[bestVar];
            vars.erase(vars.begin() + bestVar);
            bool mentioned = std::any_of(conjuncts.begin(), conjuncts.end(),
                                         [&](const CRes& c) { return c.mentions(x); });
            if (!mentioned) continue;  // vacuous quantifier, domain nonempty
            std::vector<CRes> with, without;
            for (auto& c : conjuncts)
                (c.mentions(x) ? with : without).push_back(std::move(c));
            CRes joined = joinAll(std::move(with));
            without.push_back(projectVar(std::move(joined), x));
            conjuncts = std::move(without);
        }
        return joinAll(std::move(conjuncts));
    }

    static void flattenAnd(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
        if (f->kind == Formula::Kind::And)
            for (const auto& c : f->children) flattenAnd(c, out);
        else
            out.push_back(f);
    }

    CRes compileExists(const FormulaPtr& f) {
        std::vector<std::string> vars;
        FormulaPtr body = f;
        while (body->kind == Formula::Kind::Exists) {
            vars.push_back(body->var);
            body = body->children[0];
        }
        if (body->kind == Formula::Kind::Or) {
            // distribute the existential block over the disjunction
            CRes acc;
            bool first = true;
            for (const auto& c : body->children) {
                CRes part = compileExists(existsAll(vars, c));
                acc = first ? std::move(part) : united(std::move(acc), std::move(part));
                first = false;
            }
            return acc;
        }
        std::vector<FormulaPtr> conjunctAsts;
        flattenAnd(body, conjunctAsts);
        std::vector<CRes> conjuncts;
        conjuncts.reserve(conjunctAsts.size());
        for (const auto& c : conjunctAsts) conjuncts.push_back(compileNode(c));
        return planExists(std::move(vars), std::move(conjuncts));
    }

    std::string freshVar(const std::string& base) { return base + "$" + std::to_string(freshCounter++); }

    CRes atomRel(const std::string& name, const std::vector<std::string>& args) {
        const RelationAutomaton* raw;
        std::optional<RelationAutomaton> leq;
        if (P.hasRelation(name)) {
            raw = &P.relation(name);
        } else if (name == "Leq") {
            leq = restrictToDomain(lexLenOrder(P.base), P.domain);
            raw = &*leq;
        } else {
            throw std::invalid_argument("unknown relation: " + name);
        }
        if (raw->arity() != static_cast<int>(args.size()))
            throw std::invalid_argument("arity mismatch for relation " + name + ": expected " +
                                        std::to_string(raw->arity()) + ", got " +
                                        std::to_string(args.size()));
        // Repeated variables: rename later occurrences and constrain equal.
        std::vector<std::string> trackVars = args;
        std::vector<CRes> extra;
        std::set<std::string> seen;
        std::vector<std::string> dups;
        for (auto& v : trackVars) {
            if (!seen.insert(v).second) {
                std::string fresh = freshVar(v);
                extra.push_back(atomEqWords(v, fresh));
                v = fresh;
                dups.push_back(v);
            }
        }
        CRes atom;
        atom.vars = trackVars;
        atom.rel = *raw;
        if (extra.empty()) return atom;
        std::vector<CRes> conjuncts;
        conjuncts.push_back(std::move(atom));
        for (auto& e : extra) conjuncts.push_back(std::move(e));
        return planExists(dups, std::move(conjuncts));
    }

    // Word-level identity, used to stitch duplicated atom positions.
    CRes atomEqWords(const std::string& a, const std::string& b) {
        CRes r;
        r.vars = {a, b};
        r.rel = restrictToDomain(equalityRelation(P.base), P.domain);
        return r;
    }

    CRes atomEq(const std::string& a, const std::string& b) {
        if (P.equality) {
            if (a == b) {
                // diagonal {w : E(w,w)}; with an honest equivalence this is
                // the domain, but reflexivity is the caller's claim to check
                CRes r;
                r.vars = {a};
                r.rel = project(intersectRel(*P.equality, atomEqWords("l", "r").rel.value()), 1);
                return r;
            }
            CRes r;
            r.vars = {a, b};
            r.rel = restrictToDomain(*P.equality, P.domain);
            return r;
        }
        if (a == b) {
            CRes r;
            r.vars = {a};
            r.rel = P.domainRelation();
            return r;
        }
        return atomEqWords(a, b);
    }
};

}  // namespace

CompiledRelation compile(const FormulaPtr& f, const Presentation& P) {
    std::set<std::string> scope, binders;
    checkHygiene(f, scope, binders);
    std::vector<std::string> canonical = freeVariables(f);
    for (const auto& v : canonical)
        if (binders.count(v))
            throw std::invalid_argument("variable both free and quantified: " + v);
    if (canonical.empty()) throw std::invalid_argument("compile: formula has no free variables");
    Compiler c(P);
    CRes r = c.compileNode(toNNF(f, false));
    r = c.materialize(std::move(r), canonical);
    r = c.reorderToCanonical(std::move(r), canonical);
    return CompiledRelation{std::move(r.vars), std::move(*r.rel)};
}

bool decide(const FormulaPtr& f, const Presentation& P) {
    std::set<std::string> scope, binders;
    checkHygiene(f, scope, binders);
    if (!freeVariables(f).empty())
        throw std::invalid_argument("decide: formula has free variables");
    Compiler c(P);
    CRes r = c.compileNode(toNNF(f, false));
    if (!r.closed()) throw std::logic_error("decide: compilation left free tracks");
    return r.truth;
}

bool decide(const std::string& text, const Presentation& P) { return decide(parseFormula(text), P); }

Dfa defineSet(const FormulaPtr& f, const Presentation& P) {
    std::vector<std::string> canonical = freeVariables(f);
    if (canonical.size() != 1)
        throw std::invalid_argument("defineSet: formula must have exactly one free variable");
    CompiledRelation r = compile(f, P);
    return unwrapUnary(r.rel);
}

}  // namespace wordauto
