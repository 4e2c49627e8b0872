#pragma once

#include <cstdint>

#include "wordauto/group_table.hpp"
#include "wordauto/nilpotent.hpp"
#include "wordauto/presentation.hpp"

namespace wordauto {

/// (N, +) with LSB-first binary words: the domain is the empty word plus
/// strings ending in 1; Op checks the carry-bit sum.
Presentation natAdd();

/// (Z, +), LSB-first sign-magnitude: a sign symbol ('+' or '-') followed by a
/// natAdd word; "-0" is excluded. Infrastructure for cocycle extensions.
Presentation intAdd();

/// The extra-special group E_p: z^v alpha is the word v then alpha, alpha not
/// ending in 0. Op stores the running sum of beta and the correction
/// accumulator in its state. p must be an odd prime.
Presentation epPresentation(int p);

/// The group H_p: two tracks alpha over v packed as alpha_k + p*v_k, equal
/// length, v_0 = 0, last column not (0,0). p must be an odd prime.
Presentation hpPresentation(int p);

/// Direct power S^(omega) of a finite group: words over the element alphabet
/// not ending in the identity; Op multiplies positionwise, pads read as the
/// identity.
Presentation finitePower(const FiniteGroupTable& t, const std::string& name = "power");

/// Replace an ambiguous presentation by length-lexicographically least
/// representatives: the new domain is {x : forall y (y = x -> x <=_L y)}.
/// Requires P.equality to be an FA-recognizable equivalence relation.
Presentation canonicalize(const Presentation& P);

/// LSB-first binary encodings for the adder.
Word natEncode(uint64_t n);
uint64_t natDecode(const Word& w);

/// Sign-magnitude encodings for intAdd.
Word intEncode(int64_t n);
int64_t intDecode(const Word& w);

/// Word <-> oracle element for the ep/hp presentations.
Word encodeElement(const NilElement& a, const Presentation& P);
NilElement decodeElement(const Word& w, const Presentation& P, int rank);

/// Evaluates the group operation by walking the Op automaton over candidate
/// result words with dead-state pruning.
class OpEvaluator {
public:
    explicit OpEvaluator(const Presentation& P, int growBound = 8);

    /// The unique z with (x,y,z) in Op; throws unless exactly one exists.
    Word product(const Word& x, const Word& y) const;
    /// All z with (x,y,z) in Op and |z| <= max(|x|,|y|) + growBound, up to
    /// `limit` of them, in length-lex order.
    std::vector<Word> products(const Word& x, const Word& y, size_t limit) const;

private:
    Dfa domain_;
    RelationAutomaton op_;
    PaddedAlphabet pa_;
    std::vector<bool> dead_;
    int growBound_;
};

}  // namespace wordauto
