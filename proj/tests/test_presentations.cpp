#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>

#include "wordauto/compile.hpp"
#include "wordauto/presentations.hpp"

using namespace wordauto;

TEST_CASE("nat-add: the paper's worked sum and small cases") {
    Presentation P = natAdd();
    const RelationAutomaton& op = P.relation("Op");
    // 5 + 19 = 24
    CHECK(op.contains({Word{1, 0, 1}, Word{1, 1, 0, 0, 1}, Word{0, 0, 0, 1, 1}}));
    CHECK(op.contains({Word{}, Word{}, Word{}}));
    CHECK(op.contains({Word{1}, Word{1}, Word{0, 1}}));
    CHECK_FALSE(op.contains({Word{1}, Word{1}, Word{1}}));

    OpEvaluator eval(P);
    for (uint64_t a = 0; a < 48; ++a)
        for (uint64_t b = 0; b < 48; ++b) CHECK(natDecode(eval.product(natEncode(a), natEncode(b))) == a + b);
    CHECK(eval.product(natEncode(5), natEncode(19)) == natEncode(24));
    CHECK_THROWS_AS(eval.product(Word{0}, Word{1}), std::invalid_argument);  // "0" not a domain word
}

TEST_CASE("ep: rejects p = 2 and non-primes") {
    CHECK_THROWS_AS(epPresentation(2), std::invalid_argument);
    CHECK_THROWS_AS(epPresentation(9), std::invalid_argument);
    CHECK_THROWS_AS(hpPresentation(2), std::invalid_argument);
    CHECK_THROWS_AS(ut3(4), std::invalid_argument);
}

TEST_CASE("ep(3): the frozen examples") {
    Presentation P = epPresentation(3);
    const RelationAutomaton& op = P.relation("Op");
    CHECK(op.contains({Word{0}, Word{0}, Word{0}}));
    CHECK(op.contains({Word{0, 1}, Word{0, 0, 1}, Word{0, 1, 1}}));   // x0.x1 = x0x1
    CHECK(op.contains({Word{0, 0, 1}, Word{0, 1}, Word{2, 1, 1}}));   // x1.x0 = z^2 x0x1
    CHECK_FALSE(op.contains({Word{0, 0, 1}, Word{0, 1}, Word{0, 1, 1}}));
    CHECK(P.domain.accepts(Word{2, 1, 1}));
    CHECK_FALSE(P.domain.accepts(Word{2, 1, 0}));  // alpha may not end in 0
    CHECK_FALSE(P.domain.accepts(Word{}));
}

TEST_CASE("ep: exhaustive oracle agreement on short words") {
    for (int p : {3, 5}) {
        Presentation P = epPresentation(p);
        OpEvaluator eval(P);
        auto words = enumerateWords(P.domain, 2);
        for (const auto& u : words)
            for (const auto& v : words) {
                NilElement expect = multiply(decodeElement(u, P, 8), decodeElement(v, P, 8));
                CHECK(eval.product(u, v) == encodeElement(expect, P));
            }
    }
}

TEST_CASE("ep: domain census telescopes to p^m") {
    for (int p : {3, 5}) {
        Presentation P = epPresentation(p);
        mpz_class cumulative = 0;
        mpz_class expected = 1;
        for (int m = 1; m <= 8; ++m) {
            cumulative += countWords(P.domain, m);
            expected *= p;
            CHECK(cumulative == expected);
        }
    }
}

TEST_CASE("ep(3): enumerate domain words of length <= 2") {
    Presentation P = epPresentation(3);
    auto words = enumerateWords(P.domain, 2);
    CHECK(words.size() == 9);  // 3 of length 1, 6 of length 2 (second symbol nonzero)
}

TEST_CASE("hp(3): the frozen examples") {
    Presentation P = hpPresentation(3);
    const RelationAutomaton& op = P.relation("Op");
    Word x0{1};        // (1,0)
    Word x1{0, 1};     // (0,0)(1,0)
    Word z1{0, 3};     // (0,0)(0,1)
    CHECK(P.domain.accepts(Word{}));
    CHECK(P.domain.accepts(x0));
    CHECK(P.domain.accepts(x1));
    CHECK(P.domain.accepts(z1));
    CHECK_FALSE(P.domain.accepts(Word{3}));     // v_0 must be 0
    CHECK_FALSE(P.domain.accepts(Word{1, 0}));  // trailing (0,0) column

    CHECK(op.contains({Word{}, Word{}, Word{}}));
    CHECK(op.contains({x0, x1, Word{1, 1}}));          // x0.x1 = x0x1
    CHECK(op.contains({x1, x0, Word{1, 1 + 3 * 2}}));  // x1.x0 = z1^2 x0x1
    CHECK_FALSE(op.contains({x1, x0, Word{1, 1}}));
}

TEST_CASE("hp(3): exhaustive oracle agreement on short words") {
    Presentation P = hpPresentation(3);
    OpEvaluator eval(P);
    auto words = enumerateWords(P.domain, 2);
    CHECK(words.size() == 27);  // p^(2m-1) elements of length <= m
    for (const auto& u : words)
        for (const auto& v : words) {
            NilElement expect = multiply(decodeElement(u, P, 8), decodeElement(v, P, 8));
            CHECK(eval.product(u, v) == encodeElement(expect, P));
        }
}

TEST_CASE("finite power of Z/2") {
    Presentation P = finitePower(cyclicGroup(2), "power-z2");
    const RelationAutomaton& op = P.relation("Op");
    CHECK(op.contains({Word{1, 1}, Word{0, 1}, Word{1}}));  // trailing identity trimmed
    CHECK(op.contains({Word{1}, Word{1}, Word{}}));
    for (const auto& w : enumerateWords(P.domain, 3)) CHECK(op.contains({Word{}, w, w}));

    OpEvaluator eval(P);
    auto words = enumerateWords(P.domain, 3);
    for (const auto& u : words)
        for (const auto& v : words) {
            // componentwise oracle
            Word expect(std::max(u.size(), v.size()), 0);
            for (size_t i = 0; i < expect.size(); ++i) {
                int a = i < u.size() ? u[i] : 0;
                int b = i < v.size() ? v[i] : 0;
                expect[i] = a ^ b;
            }
            while (!expect.empty() && expect.back() == 0) expect.pop_back();
            CHECK(eval.product(u, v) == expect);
        }
}

TEST_CASE("ut3 group table") {
    FiniteGroupTable t = ut3(3);
    CHECK(t.order == 27);
    int x0 = ut3Index(3, 1, 0, 0);
    int x1 = ut3Index(3, 0, 1, 0);
    int z = ut3Index(3, 0, 0, 1);
    CHECK(t.mul(x0, x1) != t.mul(x1, x0));
    CHECK(t.mul(t.mul(x1, x0), z) == t.mul(x0, x1));  // they differ by exactly z
    for (int a = 0; a < t.order; ++a) CHECK((t.elementOrder(a) == 1 || t.elementOrder(a) == 3));
}

TEST_CASE("finite power of ut3 contains the table") {
    FiniteGroupTable t = ut3(3);
    Presentation P = finitePower(t, "power-ut3");
    OpEvaluator eval(P);
    for (int a = 0; a < t.order; a += 5)
        for (int b = 0; b < t.order; b += 7) {
            Word u = a == t.identity ? Word{} : Word{a};
            Word v = b == t.identity ? Word{} : Word{b};
            int c = t.mul(a, b);
            Word expect = c == t.identity ? Word{} : Word{c};
            CHECK(eval.product(u, v) == expect);
        }
}

TEST_CASE("int-add against integer arithmetic") {
    Presentation P = intAdd();
    OpEvaluator eval(P);
    CHECK(P.domain.accepts(intEncode(0)));
    CHECK_FALSE(P.domain.accepts(Word{3}));  // "-0" excluded
    for (int64_t a = -40; a <= 40; ++a) {
        CHECK(intDecode(intEncode(a)) == a);
        for (int64_t b = -40; b <= 40; b += 3)
            CHECK(intDecode(eval.product(intEncode(a), intEncode(b))) == a + b);
    }
}

TEST_CASE("canonicalize the adder with duplicate representations") {
    // domain2 allows one extra trailing zero; equality is value equality
    Alphabet bin(2, {"0", "1"});
    Dfa domain2 = Dfa::fromTransitions(
        bin, 4, 0, {0, 1, 2},
        {{0, 1, 1}, {0, 0, 2}, {1, 1, 1}, {1, 0, 2}, {2, 1, 1}, {2, 0, 3}, {3, 1, 1}, {3, 0, 3}});
    Presentation P2("nat-add-dup", "nat-add", bin, domain2, Word{});

    Presentation ref = natAdd();
    // value-equal words: positionwise equal after zero extension
    PaddedAlphabet pa2(bin, 2);
    std::vector<int> eqDense(static_cast<size_t>(2) * pa2.packedSize());
    for (int code = 0; code < pa2.packedSize(); ++code) {
        auto col = pa2.unpack(code);
        int a = col[0] == pa2.padCode() ? 0 : col[0];
        int b = col[1] == pa2.padCode() ? 0 : col[1];
        eqDense[code] = a == b ? 0 : 1;
        eqDense[pa2.packedSize() + code] = 1;
    }
    Dfa eqDfa(Alphabet(pa2.packedSize()), 2, 0, {0}, eqDense);
    P2.equality = restrictToDomain(RelationAutomaton(2, bin, eqDfa), domain2);

    // same raw adder, restricted to the wider domain
    P2.addRelation("Op", ref.relation("Op"));
    P2.addConstant("is_e", Word{});

    // the equality is compatible with Op (decidable sentence)
    CHECK(decide(
        "(forall x (forall x2 (forall y (forall y2 (forall z (forall z2 (implies "
        "(and (= x x2) (= y y2) (Op x y z) (Op x2 y2 z2)) (= z z2))))))))",
        P2));

    Presentation canon = canonicalize(P2);
    CHECK_FALSE(canon.equality.has_value());
    CHECK(equivalent(canon.domain, ref.domain));
    CHECK(canon.neutralWord == Word{});

    // class counts preserved: distinct values among short words
    auto dupWords = enumerateWords(domain2, 4);
    std::set<uint64_t> values;
    for (const auto& w : dupWords) values.insert(natDecode(w));
    mpz_class canonCount = 0;
    for (int len = 0; len <= 4; ++len) canonCount += countWords(canon.domain, len);
    CHECK(canonCount == static_cast<long>(values.size()));

    // products still work on canonical representatives
    OpEvaluator eval(canon);
    for (uint64_t a = 0; a < 12; ++a)
        for (uint64_t b = 0; b < 12; ++b)
            CHECK(natDecode(eval.product(natEncode(a), natEncode(b))) == a + b);

    // a non-equivalence "equality" is rejected
    Presentation bad = P2;
    // reuse Op as a nonsense binary relation: reflexivity fails
    PaddedAlphabet paBad(bin, 2);
    Dfa never = emptyLanguageDfa(Alphabet(paBad.packedSize()));
    bad.equality = RelationAutomaton::wrapWellFormed(2, bin, never);
    CHECK_THROWS_AS(canonicalize(bad), std::invalid_argument);
}

TEST_CASE("adder projection is total") {
    Presentation P = natAdd();
    // project away the sum track: every domain pair is related (all values < 2^8)
    RelationAutomaton pairs = project(P.relation("Op"), 2);
    auto words = enumerateWords(P.domain, 8);
    REQUIRE(words.size() == 256);
    for (const auto& u : words)
        for (const auto& v : words) CHECK(pairs.contains({u, v}));
    // and nothing outside well-formed pairs sneaks in
    CHECK(equivalent(pairs.dfa(),
                     intersectRel(liftUnary(P.domain, 0, 2), liftUnary(P.domain, 1, 2)).dfa()));
}
