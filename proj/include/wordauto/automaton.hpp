#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <span>
#include <tuple>
#include <vector>

#include "wordauto/alphabet.hpp"

namespace wordauto {

class Nfa;

/// Complete deterministic finite automaton over an integer-coded alphabet.
///
/// Transitions are stored per symbol *class*: symbols with identical behaviour
/// in every state share one column of the transition table. Packed tuple
/// alphabets reach ~10^5 symbols but only a handful of behavioural classes,
/// so every algorithm here runs on classes and touches the full alphabet only
/// through the symbol->class map.
///
/// Instances are immutable and kept in a canonical form (reachable states,
/// BFS numbering, classes ordered by least symbol), so structurally equal
/// languages built the same way compare and serialize identically.
class Dfa {
public:
    /// From a dense (state, symbol) -> state table; delta[q*size + s].
    Dfa(Alphabet alphabet, int stateCount, int start, const std::vector<int>& accepting,
        const std::vector<int>& denseDelta);

    /// From explicit transition triples; every (state, symbol) must be covered.
    static Dfa fromTransitions(Alphabet alphabet, int stateCount, int start,
                               const std::vector<int>& accepting,
                               const std::vector<std::tuple<int, int, int>>& transitions);

    /// From run-length transitions: (state, firstSymbol, target) means the
    /// target applies from firstSymbol up to the next run of that state.
    /// Builds the class structure directly, so huge packed alphabets with few
    /// behavioural classes never materialize a dense table.
    static Dfa fromRuns(Alphabet alphabet, int stateCount, int start,
                        const std::vector<int>& accepting,
                        const std::vector<std::tuple<int, int, int>>& runs);

    /// Transitions as maximal constant runs, per state: (state, firstSymbol,
    /// target), ordered by (state, symbol).
    std::vector<std::tuple<int, int, int>> transitionRuns() const;

    /// From a pre-computed class structure; table is stateCount x numClasses.
    static Dfa fromClassified(Alphabet alphabet, std::vector<int> classOf, int numClasses,
                              std::vector<int> table, int start, std::vector<bool> accepting);

    const Alphabet& alphabet() const { return alphabet_; }
    int stateCount() const { return stateCount_; }
    int start() const { return start_; }
    bool isAccepting(int q) const { return accepting_[q]; }
    const std::vector<bool>& accepting() const { return accepting_; }

    int numClasses() const { return numClasses_; }
    int classOf(int symbol) const { return classOf_[symbol]; }
    const std::vector<int>& classMap() const { return classOf_; }
    int nextByClass(int q, int c) const { return table_[static_cast<size_t>(q) * numClasses_ + c]; }
    int next(int q, int symbol) const { return nextByClass(q, classOf_[symbol]); }

    /// Number of symbols in class c.
    int64_t classSize(int c) const { return classSize_[c]; }
    /// Least symbol of class c (classes are ordered by this).
    int classMinSymbol(int c) const { return classMinSym_[c]; }

    bool accepts(std::span<const int> word) const;
    bool accepts(const Word& word) const { return accepts(std::span<const int>(word)); }

    /// States from which no accepting state is reachable.
    std::vector<bool> deadStates() const;

private:
    Dfa() = default;
    void validate() const;
    void normalize();

    Alphabet alphabet_;
    int stateCount_ = 0;
    int start_ = 0;
    int numClasses_ = 0;
    std::vector<int> classOf_;    // |alphabet| -> class
    std::vector<int> table_;      // stateCount x numClasses
    std::vector<bool> accepting_;
    std::vector<int64_t> classSize_;
    std::vector<int> classMinSym_;
};

/// Nondeterministic finite automaton (no epsilon transitions), same
/// class-compressed representation as Dfa. Missing transitions are empty.
class Nfa {
public:
    Nfa(Alphabet alphabet, int stateCount, std::vector<int> startSet, std::vector<int> accepting,
        const std::vector<std::tuple<int, int, int>>& transitions);

    static Nfa fromClassified(Alphabet alphabet, std::vector<int> classOf, int numClasses,
                              std::vector<std::vector<std::vector<int>>> moves,
                              std::vector<int> startSet, std::vector<bool> accepting);

    const Alphabet& alphabet() const { return alphabet_; }
    int stateCount() const { return stateCount_; }
    const std::vector<int>& startSet() const { return startSet_; }
    bool isAccepting(int q) const { return accepting_[q]; }

    int numClasses() const { return numClasses_; }
    int classOf(int symbol) const { return classOf_[symbol]; }
    const std::vector<int>& movesByClass(int q, int c) const { return moves_[q][c]; }

    /// Direct subset simulation; the reference semantics for determinize.
    bool accepts(std::span<const int> word) const;
    bool accepts(const Word& word) const { return accepts(std::span<const int>(word)); }

private:
    Nfa() = default;

    Alphabet alphabet_;
    int stateCount_ = 0;
    int numClasses_ = 0;
    std::vector<int> classOf_;
    std::vector<std::vector<std::vector<int>>> moves_;  // state -> class -> sorted targets
    std::vector<int> startSet_;
    std::vector<bool> accepting_;
};

/// Subset construction; the result is complete and language-equal.
Dfa determinize(const Nfa& n);

/// Language-preserving state minimization (partition refinement).
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);

bool isEmpty(const Dfa& d);
bool equivalent(const Dfa& a, const Dfa& b);

/// |L(d) ∩ Σ^n|, exact.
mpz_class countWords(const Dfa& d, int n);

/// All accepted words of length <= maxLen in length-lexicographic order.
std::vector<Word> enumerateWords(const Dfa& d, int maxLen);

/// Accepts every word over the alphabet.
Dfa allWordsDfa(const Alphabet& a);
/// Accepts nothing.
Dfa emptyLanguageDfa(const Alphabet& a);
/// Accepts exactly w.
Dfa singletonDfa(const Alphabet& a, const Word& w);

}  // namespace wordauto
