#pragma once

#include <map>
#include <optional>
#include <string>

#include "wordauto/relation.hpp"

namespace wordauto {

/// An FA presentation: a regular domain plus named relation automata.
/// Group presentations carry at least Op/3 (the graph of the binary
/// operation) and the constant is_e; an explicit equality relation is
/// present only when words represent elements ambiguously.
struct Presentation {
    std::string name;
    std::string kind;  // nat-add | ep | hp | power | int-add | extension | ...
    int p = 0;         // prime parameter, 0 when not applicable

    Alphabet base;
    Dfa domain;  // over base
    Word neutralWord;
    std::map<std::string, RelationAutomaton> relations;
    std::optional<RelationAutomaton> equality;
    std::map<std::string, std::string> notes;

    Presentation(std::string name_, std::string kind_, Alphabet base_, Dfa domain_, Word neutral);

    bool hasRelation(const std::string& relName) const { return relations.count(relName) > 0; }
    const RelationAutomaton& relation(const std::string& relName) const;

    /// Adds a relation after restricting every track to the domain.
    void addRelation(const std::string& relName, const RelationAutomaton& r);
    /// Adds a singleton unary relation for a designated domain word.
    void addConstant(const std::string& relName, const Word& w);

    /// Domain as an arity-1 relation.
    RelationAutomaton domainRelation() const;
    /// k-ary relation constraining one track to the domain.
    RelationAutomaton domainCylinder(int track, int arity) const;
};

/// Intersect every track of r with the domain language.
RelationAutomaton restrictToDomain(const RelationAutomaton& r, const Dfa& domain);

}  // namespace wordauto
