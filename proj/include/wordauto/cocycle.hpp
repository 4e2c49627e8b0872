#pragma once

#include <utility>

#include "wordauto/group_table.hpp"
#include "wordauto/presentation.hpp"

namespace wordauto {

/// A central-extension description: abelian word-automatic groups Q and A
/// plus an FA-recognizable cocycle f : Q x Q -> A. The cocycle automaton
/// lives over the combined two-sorted alphabet (Q's symbols first, A's
/// shifted up), with tracks (u, v, f(u,v)).
struct CocycleSpec {
    std::string name;
    Presentation Q;
    Presentation A;
    RelationAutomaton f;

    CocycleSpec(std::string name, Presentation q, Presentation a, RelationAutomaton graph);

    Alphabet combined() const;
};

/// Two-sorted union alphabet; A labels get an "A" prefix.
Alphabet combinedAlphabet(const Alphabet& q, const Alphabet& a);

/// Shift a word over A's alphabet into the combined alphabet.
Word shiftAWord(int qSize, const Word& w);

/// Embed a DFA over a sub-alphabet into a larger one at the given symbol
/// offset; out-of-range symbols reject.
Dfa embedDfa(const Dfa& d, const Alphabet& combined, int offset);

/// Same for a relation automaton, shifting every track uniformly.
RelationAutomaton embedRelation(const RelationAutomaton& r, const Alphabet& combined, int offset);

/// The one-sorted structure (Q ⊔ A, +_Q, +_A, f): relations AddQ/3, AddA/3,
/// F/3, sort guards isQ/1 and isA/1.
Presentation combinedStructure(const CocycleSpec& s);

/// Decides the cocycle identity f(u,v) + f(u+v,w) = f(v,w) + f(u,v+w) as an
/// FO sentence. Throws (with a witness) unless f is a total function on Q^2
/// and Q, A are commutative.
bool verifyCocycle(const CocycleSpec& s);

/// The group L_f on pairs (u,a) with (u,a)(v,b) = (u+v, a+b+f(u,v)). Elements
/// are two-track convolutions packed into one symbol per column. Requires
/// verifyCocycle(s).
Presentation buildExtension(const CocycleSpec& s);

/// Pair-word helpers for extension elements.
Word extensionWord(const CocycleSpec& s, const Word& qWord, const Word& aWord);
std::pair<Word, Word> extensionParts(const CocycleSpec& s, const Word& w);

/// (Z/p)^(omega) as words over digit symbols (last digit nonzero), and Z/p as
/// single-digit words: the building blocks of the shipped cocycles.
Presentation vectorGroup(int p, const std::string& name);
Presentation zpDigits(int p);

/// f == 0: the split extension (direct sum).
CocycleSpec zeroCocycle(const Presentation& Q, const Presentation& A, const std::string& name);

/// E_p as an extension of (Z/p)^(omega) by Z/p: the correction-sum cocycle.
CocycleSpec epCocycle(int p);

/// H_p as an extension of (Z/p)^(omega) by the central vector group: the
/// positionwise correction cocycle.
CocycleSpec hpCocycle(int p);

// A 2-group without abelian finite-index subgroup: generators x, y_i, z_k
// with y_i^2 = z_k^2 = 1, y central, z's commuting, and z_i x = x z_i y_i.
// Centre A = <x^2, y_i>; the quotient Q = <v> + <w_i> is elementary abelian.
//
// Normal form x^m prod z^gamma prod y^delta, multiplied by collecting x's
// past z's.
struct Ex12Element {
    int64_t xExp = 0;
    std::vector<int> z, y;  // bit vectors

    bool operator==(const Ex12Element&) const = default;
};
Ex12Element ex12Multiply(const Ex12Element& a, const Ex12Element& b);
Ex12Element ex12Inverse(const Ex12Element& a);

/// Value of the transversal cocycle bar(q1) bar(q2) bar(q1+q2)^-1 computed
/// symbolically; the result lies in A = <x^2, {y_i}> and is returned in
/// A-coordinates (m with x^(2m), y bit vector).
struct Ex12AValue {
    int64_t m = 0;
    std::vector<int> y;
};
Ex12AValue ex12CocycleValue(int s, const std::vector<int>& alpha, int t, const std::vector<int>& beta);

/// Q and A presentations for Example 12: Q-words are s then alpha over bits;
/// A-words are a sign followed by interleaved (binary-of-m, y) pairs.
Presentation ex12Q();
Presentation ex12A();
Word ex12AEncode(const Ex12AValue& v);

/// The derived Example-12 cocycle (f(q_{s,a}, q_{t,b}) = (st, t*a)); its
/// automaton is checked against the symbolic derivation at construction.
CocycleSpec example12Cocycle();

/// The built Example-12 presentation with constants is_e, is_x, is_z0, is_y0.
Presentation example12();

/// Extension of a word-automatic normal subgroup by a finite quotient.
/// Elements are a coset tag symbol followed by an N-word; the operation is
/// (g,n)(h,m) = (gh, n phi_g(m) c_{g,h}) for the supplied action graphs and
/// correction table.
struct FiniteIndexData {
    std::vector<RelationAutomaton> action;  // per quotient element, arity 2 over N's base
    std::vector<Word> correction;           // |T|^2 N-words, row-major
};
Presentation finiteIndexExtension(const Presentation& N, const FiniteGroupTable& T,
                                  const FiniteIndexData& data);

}  // namespace wordauto
