#include "wordauto/commands.hpp"

#include <stdexcept>

#include "wordauto/cocycle.hpp"
#include "wordauto/compile.hpp"
#include "wordauto/presentations.hpp"

namespace wordauto {

Presentation buildPresentation(const BuildOptions& opt) {
    if (opt.kind == "nat-add") return natAdd();
    if (opt.kind == "int-add") return intAdd();
    if (opt.kind == "ep") return epPresentation(opt.p);
    if (opt.kind == "hp") return hpPresentation(opt.p);
    if (opt.kind == "ut3")
        return finitePower(ut3(opt.p), "ut3-power-" + std::to_string(opt.p));
    if (opt.kind == "power") {
        if (opt.table == "cyclic")
            return finitePower(cyclicGroup(opt.order), "power-z" + std::to_string(opt.order));
        if (opt.table == "ut3")
            return finitePower(ut3(opt.p), "ut3-power-" + std::to_string(opt.p));
        throw std::invalid_argument("power: unknown table kind '" + opt.table + "'");
    }
    if (opt.kind == "example12") return example12();
    throw std::invalid_argument("unknown presentation kind '" + opt.kind + "'");
}

CrosscheckResult crosscheckPresentation(const Presentation& P, int maxLen) {
    if (P.kind != "nat-add" && P.kind != "ep" && P.kind != "hp")
        throw std::invalid_argument("crosscheck supports the oracle-backed kinds nat-add, ep and hp");
    CrosscheckResult result;
    OpEvaluator eval(P);
    auto words = enumerateWords(P.domain, maxLen);
    int rank = maxLen + 2;
    auto describe = [&](const Word& x, const Word& y, const std::string& what) {
        std::string sx = wordToString(P.base, x);
        std::string sy = wordToString(P.base, y);
        return "(" + (sx.empty() ? "eps" : sx) + ", " + (sy.empty() ? "eps" : sy) + "): " + what;
    };
    for (const Word& x : words) {
        for (const Word& y : words) {
            ++result.pairsChecked;
            Word expected;
            if (P.kind == "nat-add") {
                expected = natEncode(natDecode(x) + natDecode(y));
            } else {
                NilKind kind = P.kind == "ep" ? NilKind::E : NilKind::H;
                expected = encodeWord(
                    multiply(decodeWord(kind, P.p, rank, x), decodeWord(kind, P.p, rank, y)));
            }
            Word got;
            try {
                got = eval.product(x, y);
            } catch (const std::exception& e) {
                result.pass = false;
                result.counterexample = describe(x, y, e.what());
                return result;
            }
            if (got != expected) {
                result.pass = false;
                result.counterexample =
                    describe(x, y,
                             "automaton gives " + wordToString(P.base, got) + ", oracle gives " +
                                 wordToString(P.base, expected));
                return result;
            }
        }
    }
    return result;
}

FormulaPtr namedSentence(const std::string& name, const Presentation& P) {
    if (name == "assoc") return assocSentence();
    if (name == "identity") return identitySentence();
    if (name == "inverse") return inverseSentence();
    if (name == "commutative") return commutativitySentence();
    if (name == "totality") return totalitySentence();
    if (name == "functionality") return functionalitySentence();
    if (name == "class2") return classTwoSentence();
    if (name == "exponent") {
        if (P.p < 2) throw std::invalid_argument("exponent sentence needs a presentation with p set");
        return exponentSentence(P.p);
    }
    throw std::invalid_argument("unknown sentence name '" + name + "'");
}

}  // namespace wordauto
