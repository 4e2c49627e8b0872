#pragma once

#include "wordauto/formula.hpp"
#include "wordauto/presentation.hpp"

namespace wordauto {

/// A compiled formula: one track per free variable, ordered by first
/// occurrence in a left-to-right traversal of the original formula.
struct CompiledRelation {
    std::vector<std::string> vars;
    RelationAutomaton rel;
};

/// Compile an open formula to the relation it defines on the presentation.
/// Every track is restricted to the domain; negation is interpreted relative
/// to domain-restricted well-formed convolutions.
CompiledRelation compile(const FormulaPtr& f, const Presentation& P);

/// Truth value of a sentence.
bool decide(const FormulaPtr& f, const Presentation& P);
bool decide(const std::string& text, const Presentation& P);

/// Formula with exactly one free variable, unwrapped to a DFA over the base.
Dfa defineSet(const FormulaPtr& f, const Presentation& P);

}  // namespace wordauto
