#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wordauto/nilpotent.hpp"

using namespace wordauto;

namespace {

constexpr int R = 8;

NilElement x(NilKind kind, int p, int i) { return NilElement::generator(kind, p, R, i); }

// every rank-3 element of the given kind (remaining coordinates zero)
std::vector<NilElement> allRank3(NilKind kind, int p) {
    std::vector<NilElement> out;
    int centralCoords = kind == NilKind::Free ? 3 : (kind == NilKind::E ? 1 : 2);
    int total = 1;
    for (int i = 0; i < 3 + centralCoords; ++i) total *= p;
    for (int code = 0; code < total; ++code) {
        int c = code;
        NilElement a = NilElement::identity(kind, p, R);
        for (int i = 0; i < 3; ++i) {
            a.alpha[i] = c % p;
            c /= p;
        }
        for (int j = 0; j < centralCoords; ++j) {
            int v = c % p;
            c /= p;
            switch (kind) {
                case NilKind::Free: a.central[j] = v; break;      // (0,1) (0,2) (1,2)
                case NilKind::E: a.central[0] = v; break;
                case NilKind::H: a.central[j + 1] = v; break;     // z_1, z_2
            }
        }
        out.push_back(std::move(a));
    }
    return out;
}

NilElement randomElement(std::mt19937& rng, NilKind kind, int p) {
    NilElement a = NilElement::identity(kind, p, R);
    for (int i = 0; i < R; ++i) a.alpha[i] = static_cast<int>(rng() % p);
    for (size_t j = 0; j < a.central.size(); ++j) a.central[j] = static_cast<int>(rng() % p);
    if (kind == NilKind::H) a.central[0] = 0;
    return a;
}

}  // namespace

TEST_CASE("collection rule: one-step moves") {
    // E_3: x1 . x0 = z^2 x0 x1 (one move past one generator, -1 = 2 mod 3)
    NilElement e3 = multiply(x(NilKind::E, 3, 1), x(NilKind::E, 3, 0));
    NilElement expectE = NilElement::centralE(3, R, 2);
    expectE.alpha[0] = expectE.alpha[1] = 1;
    CHECK(e3 == expectE);
    CHECK(toText(e3) == "z^2 x0 x1");

    // H_3: x1 . x0 = z1^2 x0 x1
    NilElement h3 = multiply(x(NilKind::H, 3, 1), x(NilKind::H, 3, 0));
    NilElement expectH = NilElement::centralH(3, R, 1, 2);
    expectH.alpha[0] = expectH.alpha[1] = 1;
    CHECK(h3 == expectH);

    // identity is neutral
    for (NilKind kind : {NilKind::Free, NilKind::E, NilKind::H}) {
        NilElement a = multiply(x(kind, 3, 1), x(kind, 3, 2));
        NilElement id = NilElement::identity(kind, 3, R);
        CHECK(multiply(a, id) == a);
        CHECK(multiply(id, a) == a);
    }
}

TEST_CASE("inverse and power") {
    for (NilKind kind : {NilKind::Free, NilKind::E, NilKind::H}) {
        CHECK(inverse(NilElement::identity(kind, 3, R)) == NilElement::identity(kind, 3, R));
        NilElement x0 = x(kind, 3, 0);
        NilElement inv = inverse(x0);
        CHECK(inv.alpha[0] == 2);  // x0^{p-1}
        CHECK(multiply(x0, inv).isIdentity());
        CHECK(multiply(inv, x0).isIdentity());
    }
    // exponent law for a sample product
    NilElement a = multiply(x(NilKind::E, 3, 0), x(NilKind::E, 3, 1));
    CHECK(power(a, 3).isIdentity());
}

TEST_CASE("commutators hit the paper's defining relations") {
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) {
            CHECK(commutator(x(NilKind::E, 3, i), x(NilKind::E, 3, k)) == NilElement::centralE(3, R, 1));
            CHECK(commutator(x(NilKind::H, 3, i), x(NilKind::H, 3, k)) ==
                  NilElement::centralH(3, R, k, 1));
        }
    // free kind: [x_i, x_k] is the commutator generator itself
    CHECK(commutator(x(NilKind::Free, 3, 0), x(NilKind::Free, 3, 2)) ==
          NilElement::commutatorGenerator(3, R, 0, 2, 1));

    // the subgroup witness from the indecomposability argument:
    // [x_r x_k^-1, x_s x_k^-1] = z for k < r < s
    int k = 0, r = 1, s = 2;
    NilElement xkInv = inverse(x(NilKind::E, 3, k));
    NilElement left = multiply(x(NilKind::E, 3, r), xkInv);
    NilElement right = multiply(x(NilKind::E, 3, s), xkInv);
    CHECK(commutator(left, right) == NilElement::centralE(3, R, 1));
}

TEST_CASE("bilinear form value of the commutator") {
    std::mt19937 rng(99);
    for (NilKind kind : {NilKind::Free, NilKind::E, NilKind::H}) {
        for (int p : {3, 5}) {
            for (int trial = 0; trial < 300; ++trial) {
                NilElement a = randomElement(rng, kind, p);
                NilElement b = randomElement(rng, kind, p);
                NilElement c = commutator(a, b);
                CHECK(c.isCentral());
                // prod над [x_i,x_k]^(a_i b_k - a_k b_i) computed in Free, then mapped
                NilElement freeVal = NilElement::identity(NilKind::Free, p, R);
                for (int kk = 1; kk < R; ++kk)
                    for (int ii = 0; ii < kk; ++ii)
                        freeVal.central[NilElement::freeIndex(ii, kk)] =
                            ((a.alpha[ii] * b.alpha[kk] - a.alpha[kk] * b.alpha[ii]) % p + p) % p;
                NilElement expect = kind == NilKind::Free ? freeVal
                                    : kind == NilKind::E  ? freeToE(freeVal)
                                                          : freeToH(freeVal);
                CHECK(c == expect);
            }
        }
    }
}

TEST_CASE("bilinearity of the commutator") {
    std::mt19937 rng(7);
    for (NilKind kind : {NilKind::Free, NilKind::E, NilKind::H}) {
        for (int trial = 0; trial < 200; ++trial) {
            NilElement a = randomElement(rng, kind, 3);
            NilElement a2 = randomElement(rng, kind, 3);
            NilElement b = randomElement(rng, kind, 3);
            CHECK(commutator(multiply(a, a2), b) ==
                  multiply(commutator(a, b), commutator(a2, b)));
        }
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937 rng(2718);
    for (NilKind kind : {NilKind::Free, NilKind::E, NilKind::H})
        for (int p : {3, 5})
            for (int trial = 0; trial < 10000; ++trial) {
                NilElement a = randomElement(rng, kind, p);
                NilElement b = randomElement(rng, kind, p);
                NilElement c = randomElement(rng, kind, p);
                CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            }
}

TEST_CASE("exponent and class-2 laws, exhaustive at rank 3") {
    for (NilKind kind : {NilKind::Free, NilKind::E, NilKind::H}) {
        auto elems = allRank3(kind, 3);
        for (const auto& a : elems) CHECK(power(a, 3).isIdentity());
        // [[a,b],c] = e on a sample grid (full cube is 729^3)
        for (size_t i = 0; i < elems.size(); i += 31)
            for (size_t j = 0; j < elems.size(); j += 37)
                for (size_t k = 0; k < elems.size(); k += 41)
                    CHECK(commutator(commutator(elems[i], elems[j]), elems[k]).isIdentity());
    }
}

TEST_CASE("quotient maps are homomorphisms") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 500; ++trial) {
        NilElement a = randomElement(rng, NilKind::Free, 3);
        NilElement b = randomElement(rng, NilKind::Free, 3);
        CHECK(freeToE(multiply(a, b)) == multiply(freeToE(a), freeToE(b)));
        CHECK(freeToH(multiply(a, b)) == multiply(freeToH(a), freeToH(b)));
    }
}

TEST_CASE("text form round trips") {
    CHECK(toText(NilElement::identity(NilKind::E, 3, R)) == "e");
    NilElement sample = parseElement(NilKind::E, 3, R, "z^2 x0 x1");
    CHECK(sample.central[0] == 2);
    CHECK(sample.alpha[0] == 1);
    CHECK(sample.alpha[1] == 1);
    CHECK(parseElement(NilKind::E, 3, R, toText(sample)) == sample);

    NilElement h = parseElement(NilKind::H, 3, R, "z1^2 x0 x1");
    CHECK(parseElement(NilKind::H, 3, R, toText(h)) == h);
    NilElement f = parseElement(NilKind::Free, 3, R, "x0^2 x1 [x0,x1]^2");
    CHECK(toText(f) == "x0^2 x1 [x0,x1]^2");

    // the parser multiplies tokens, so non-normal-form input collects
    CHECK(parseElement(NilKind::E, 3, R, "x1 x0") == parseElement(NilKind::E, 3, R, "z^2 x0 x1"));

    std::mt19937 rng(31);
    for (NilKind kind : {NilKind::Free, NilKind::E, NilKind::H})
        for (int trial = 0; trial < 100; ++trial) {
            NilElement a = randomElement(rng, kind, 5);
            CHECK(parseElement(kind, 5, R, toText(a)) == a);
        }
}

TEST_CASE("word encodings") {
    CHECK(encodeWord(NilElement::identity(NilKind::E, 3, R)) == Word{0});
    NilElement z2x0x1 = parseElement(NilKind::E, 3, R, "z^2 x0 x1");
    CHECK(encodeWord(z2x0x1) == Word{2, 1, 1});
    CHECK(decodeWord(NilKind::E, 3, R, Word{2, 1, 1}) == z2x0x1);

    CHECK(encodeWord(NilElement::identity(NilKind::H, 3, R)) == Word{});
    // x1: columns (0,0)(1,0) -> codes 0, 1
    CHECK(encodeWord(x(NilKind::H, 3, 1)) == Word{0, 1});
    // z1: columns (0,0)(0,1) -> codes 0, 3
    CHECK(encodeWord(NilElement::centralH(3, R, 1, 1)) == Word{0, 3});

    CHECK_THROWS_AS(decodeWord(NilKind::E, 3, R, Word{0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(decodeWord(NilKind::H, 3, R, Word{3}), std::invalid_argument);  // v0 != 0
    CHECK_THROWS_AS(decodeWord(NilKind::E, 3, 2, Word{0, 1, 1, 1}), std::invalid_argument);

    // round trip across all E_3 words of length <= 4
    for (int code = 0; code < 3 * 3 * 3 * 3; ++code) {
        int c = code;
        Word w;
        for (int i = 0; i < 4; ++i) {
            w.push_back(c % 3);
            c /= 3;
        }
        if (w.back() == 0) continue;  // not a domain word
        CHECK(encodeWord(decodeWord(NilKind::E, 3, R, w)) == w);
    }
}
