#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wordauto/census.hpp"
#include "wordauto/formula.hpp"
#include "wordauto/presentation.hpp"

namespace wordauto {

/// Shared implementation of the CLI verbs, kept callable from tests.

struct BuildOptions {
    std::string kind;              // nat-add | int-add | ep | hp | power | ut3 | example12
    int p = 3;                     // ep, hp, ut3
    int order = 2;                 // power with a cyclic table
    std::string table = "cyclic";  // power: cyclic | ut3
};

Presentation buildPresentation(const BuildOptions& opt);

struct CrosscheckResult {
    bool pass = true;
    uint64_t pairsChecked = 0;
    std::string counterexample;  // first failing pair in length-lex order
};

/// Exhaustively compares the Op automaton against the symbolic oracle on all
/// domain-word pairs up to the given length. Supports the oracle-backed
/// kinds nat-add, ep and hp.
CrosscheckResult crosscheckPresentation(const Presentation& P, int maxLen);

/// Resolve one of the named group-law sentences ("assoc", "identity",
/// "inverse", "commutative", "exponent", "class2", "totality",
/// "functionality") against a presentation's parameters.
FormulaPtr namedSentence(const std::string& name, const Presentation& P);

}  // namespace wordauto
