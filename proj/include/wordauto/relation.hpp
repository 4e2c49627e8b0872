#pragma once

#include <vector>

#include "wordauto/automaton.hpp"

namespace wordauto {

/// Tuple alphabet for k-track convolutions. A column holds one symbol per
/// track, where a track that has already ended carries the pad symbol ◇
/// (encoded as base.size). Packed code of a column = sum of column[i] *
/// (base.size+1)^i; the all-pad column is excluded, so valid codes are
/// 0 .. (base.size+1)^k - 2.
struct PaddedAlphabet {
    Alphabet base;
    int arity;

    PaddedAlphabet(Alphabet b, int k);

    int padCode() const { return base.size; }
    int radix() const { return base.size + 1; }
    int packedSize() const { return packedSize_; }

    int pack(const std::vector<int>& column) const;
    std::vector<int> unpack(int code) const;

    /// The packed alphabet as a plain Alphabet; tuple labels like "(1,◇,0)"
    /// are attached only while the alphabet stays small enough to print.
    Alphabet packedAlphabet() const;

private:
    int packedSize_;
};

/// Stack k words into one padded word of length max |w_i|.
Word convolve(const Alphabet& base, const std::vector<Word>& words);

/// Split a packed word back into its tracks; rejects ill-formed input
/// (a track resuming after padding, or an all-pad column).
std::vector<Word> deconvolve(const Alphabet& base, const Word& packed, int k);

/// k-ary relation over base words, represented by a DFA on the packed
/// alphabet. The language is kept inside the set of well-formed convolutions.
class RelationAutomaton {
public:
    /// Wraps a dfa over the packed alphabet, intersecting it with the
    /// well-formedness language.
    RelationAutomaton(int arity, Alphabet base, Dfa dfa);

    /// Trusted wrap for callers that guarantee well-formedness already.
    static RelationAutomaton wrapWellFormed(int arity, Alphabet base, Dfa dfa);

    int arity() const { return arity_; }
    const Alphabet& base() const { return base_; }
    const Dfa& dfa() const { return dfa_; }
    PaddedAlphabet padded() const { return PaddedAlphabet(base_, arity_); }

    bool contains(const std::vector<Word>& tuple) const;

private:
    explicit RelationAutomaton(Dfa d);

    int arity_;
    Alphabet base_;
    Dfa dfa_;
};

/// Language of all well-formed k-track convolutions.
RelationAutomaton wellFormed(const Alphabet& base, int k);

RelationAutomaton intersectRel(const RelationAutomaton& a, const RelationAutomaton& b);
RelationAutomaton uniteRel(const RelationAutomaton& a, const RelationAutomaton& b);
/// Complement relative to the well-formed convolutions.
RelationAutomaton complementRel(const RelationAutomaton& r);

/// Existential projection: drop the given track. Requires arity >= 2.
RelationAutomaton project(const RelationAutomaton& r, int track);

/// Insert an unconstrained track at the given position.
RelationAutomaton cylindrify(const RelationAutomaton& r, int position);

/// Track permutation: result holds (w_0..w_{k-1}) iff r holds
/// (w_{perm[0]}, ..., w_{perm[k-1]}).
RelationAutomaton reorderTracks(const RelationAutomaton& r, const std::vector<int>& perm);

/// {(w, w)} over the base alphabet.
RelationAutomaton equalityRelation(const Alphabet& base);

/// Length-lexicographic order: shorter first, then lexicographic by symbol
/// code; reflexive.
RelationAutomaton lexLenOrder(const Alphabet& base);

/// Constrain one track of a k-ary relation to L(d), other tracks free.
RelationAutomaton liftUnary(const Dfa& d, int track, int arity);

/// Arity-1 wrap/unwrap; the arity-1 packed alphabet coincides with the base.
RelationAutomaton unaryRelation(const Dfa& d);
Dfa unwrapUnary(const RelationAutomaton& r);

}  // namespace wordauto
