#pragma once

#include <iosfwd>
#include <string>

#include "wordauto/automaton.hpp"

namespace wordauto {

/// JSON interchange:
///   { "alphabet": size, "labels": [...], "states": N, "start": s,
///     "accepting": [..], "transitions": [[state, symbol, state], ...] }
/// Output is canonical: keys sorted, transitions sorted by (state, symbol),
/// states numbered BFS from the start. Two builds of the same machine are
/// byte-identical.
std::string dfaToJson(const Dfa& d, int indent = 2);
Dfa dfaFromJson(const std::string& text);

/// Graphviz rendering; one node per state, edges grouped by target with
/// comma-joined symbol labels.
std::string dfaToDot(const Dfa& d, const std::string& name = "automaton");

}  // namespace wordauto
