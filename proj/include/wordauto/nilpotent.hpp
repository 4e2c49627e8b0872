#pragma once

#include <string>
#include <vector>

#include "wordauto/alphabet.hpp"

namespace wordauto {

/// Element kinds for the class-2 exponent-p oracle groups: the truncated
/// free group F_r, the extra-special quotient E_p ([x_i,x_k] = z), and the
/// quotient H_p ([x_i,x_k] = z_k).
enum class NilKind { Free, E, H };

/// Symbolic normal form: a generator-exponent vector alpha modulo p together
/// with central coordinates. All arithmetic is exact modular arithmetic; the
/// collection rule is
///     alpha . beta = (alpha+beta) . prod_{i<k} [x_i,x_k]^(-alpha_k beta_i)
/// which specializes to the E and H product formulas.
struct NilElement {
    NilKind kind;
    int p;
    int rank;
    std::vector<int> alpha;    // size rank
    std::vector<int> central;  // Free: rank*(rank-1)/2 entries v_{i,k} (i<k);
                               // E: single entry; H: size rank, index 0 unused

    static NilElement identity(NilKind kind, int p, int rank);
    /// x_i
    static NilElement generator(NilKind kind, int p, int rank, int i);
    /// z^v (E), z_k^v (H), [x_i,x_k]^v (Free)
    static NilElement centralE(int p, int rank, int v);
    static NilElement centralH(int p, int rank, int k, int v);
    static NilElement commutatorGenerator(int p, int rank, int i, int k, int v);

    bool isIdentity() const;
    bool isCentral() const;
    bool operator==(const NilElement& o) const = default;

    /// Index of v_{i,k} in a Free central vector.
    static int freeIndex(int i, int k) { return k * (k - 1) / 2 + i; }
};

NilElement multiply(const NilElement& a, const NilElement& b);
NilElement inverse(const NilElement& a);
NilElement power(const NilElement& a, int m);
/// [a,b] = a^-1 b^-1 a b
NilElement commutator(const NilElement& a, const NilElement& b);

/// Quotient homomorphisms: collapse all commutators to z, or [x_i,x_k] to z_k.
NilElement freeToE(const NilElement& a);
NilElement freeToH(const NilElement& a);

/// Text form: "z^2 x0 x1" (E), "z1^2 x0 x1" (H), "x0^2 x1 [x0,x1]^2" (Free),
/// "e" for the identity. The parser multiplies tokens left to right, so any
/// product expression is accepted, not only normal forms.
std::string toText(const NilElement& a);
NilElement parseElement(NilKind kind, int p, int rank, const std::string& text);

/// Word encodings used by the FA presentations: E words are v then alpha with
/// trailing zeros trimmed; H words are columns (alpha_k, v_k) packed as
/// alpha_k + p*v_k, trimmed so the last column is not (0,0).
Word encodeWord(const NilElement& a);
NilElement decodeWord(NilKind kind, int p, int rank, const Word& w);

}  // namespace wordauto
