#pragma once

#include <filesystem>

#include "wordauto/cocycle.hpp"
#include "wordauto/group_table.hpp"
#include "wordauto/presentation.hpp"

namespace wordauto {

/// Relation interchange: the automaton JSON wrapped with
/// {"arity": k, "baseAlphabet": m, ...}.
std::string relationToJson(const RelationAutomaton& r, int indent = 2);
RelationAutomaton relationFromJson(const std::string& text);

/// DOT rendering with packed symbols shown as tuples like (1,◇,0).
std::string relationToDot(const RelationAutomaton& r, const std::string& name);

/// Presentation bundle: manifest.json naming the domain and one file per
/// relation, plus the neutral word and metadata. Output is deterministic:
/// rebuilding the same presentation yields byte-identical files.
void saveBundle(const Presentation& P, const std::filesystem::path& dir);
Presentation loadBundle(const std::filesystem::path& dir);

/// Cocycle manifest: file references for the Q and A bundles and the cocycle
/// automaton.
void saveCocycleSpec(const CocycleSpec& s, const std::filesystem::path& dir);
CocycleSpec loadCocycleSpec(const std::filesystem::path& dir);

void saveGroupTable(const FiniteGroupTable& t, const std::filesystem::path& file);
FiniteGroupTable loadGroupTable(const std::filesystem::path& file);

}  // namespace wordauto
