#include "wordauto/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

#include "wordauto/compile.hpp"
#include "wordauto/presentations.hpp"

namespace wordauto {

Alphabet combinedAlphabet(const Alphabet& q, const Alphabet& a) {
    std::vector<std::string> labels;
    labels.reserve(q.size + a.size);
    for (int s = 0; s < q.size; ++s) labels.push_back(q.labelOf(s));
    for (int s = 0; s < a.size; ++s) labels.push_back("A" + a.labelOf(s));
    return Alphabet(q.size + a.size, std::move(labels));
}

Word shiftAWord(int qSize, const Word& w) {
    Word out = w;
    for (int& s : out) s += qSize;
    return out;
}

Dfa embedDfa(const Dfa& d, const Alphabet& combined, int offset) {
    int n = d.stateCount();
    int sink = n;
    std::vector<int> dense(static_cast<size_t>(n + 1) * combined.size, sink);
    for (int q = 0; q < n; ++q)
        for (int s = 0; s < d.alphabet().size; ++s)
            dense[static_cast<size_t>(q) * combined.size + offset + s] = d.next(q, s);
    std::vector<int> acc;
    for (int q = 0; q < n; ++q)
        if (d.isAccepting(q)) acc.push_back(q);
    return Dfa(combined, n + 1, d.start(), acc, dense);
}

RelationAutomaton embedRelation(const RelationAutomaton& r, const Alphabet& combined, int offset) {
    int k = r.arity();
    PaddedAlphabet srcPa(r.base(), k);
    PaddedAlphabet dstPa(combined, k);
    const Dfa& d = r.dfa();
    int srcSize = r.base().size;

    std::vector<int> classOf(dstPa.packedSize());
    const int DEAD = -1;
    std::map<int, int> keyId;
    std::vector<int> keyList;
    std::vector<int> srcCol(k);
    for (int code = 0; code < dstPa.packedSize(); ++code) {
        auto col = dstPa.unpack(code);
        bool ok = true;
        for (int t = 0; t < k && ok; ++t) {
            if (col[t] == dstPa.padCode())
                srcCol[t] = srcPa.padCode();
            else if (col[t] >= offset && col[t] < offset + srcSize)
                srcCol[t] = col[t] - offset;
            else
                ok = false;
        }
        int key = ok ? d.classOf(srcPa.pack(srcCol)) : DEAD;
        auto it = keyId.find(key);
        if (it == keyId.end()) {
            it = keyId.emplace(key, static_cast<int>(keyList.size())).first;
            keyList.push_back(key);
        }
        classOf[code] = it->second;
    }
    int numClasses = static_cast<int>(keyList.size());
    int n = d.stateCount();
    int sink = n;
    std::vector<int> table(static_cast<size_t>(n + 1) * numClasses, sink);
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < numClasses; ++c)
            if (keyList[c] != DEAD)
                table[static_cast<size_t>(q) * numClasses + c] = d.nextByClass(q, keyList[c]);
    std::vector<bool> acc(n + 1, false);
    for (int q = 0; q < n; ++q) acc[q] = d.isAccepting(q);
    Dfa lifted = Dfa::fromClassified(Alphabet(dstPa.packedSize()), std::move(classOf), numClasses,
                                     std::move(table), d.start(), std::move(acc));
    return RelationAutomaton(k, combined, std::move(lifted));
}

namespace {

RelationAutomaton restrictCocycleGraph(const Presentation& Q, const Presentation& A,
                                       RelationAutomaton graph) {
    Alphabet C = combinedAlphabet(Q.base, A.base);
    if (graph.arity() != 3 || graph.base().size != C.size)
        throw std::invalid_argument("cocycle graph must be a 3-ary relation over the combined alphabet");
    Dfa qDom = embedDfa(Q.domain, C, 0);
    Dfa aDom = embedDfa(A.domain, C, Q.base.size);
    RelationAutomaton out = intersectRel(graph, liftUnary(qDom, 0, 3));
    out = intersectRel(out, liftUnary(qDom, 1, 3));
    out = intersectRel(out, liftUnary(aDom, 2, 3));
    return out;
}

}  // namespace

CocycleSpec::CocycleSpec(std::string name_, Presentation q, Presentation a, RelationAutomaton graph)
    : name(std::move(name_)), Q(std::move(q)), A(std::move(a)),
      f(restrictCocycleGraph(Q, A, std::move(graph))) {}

Alphabet CocycleSpec::combined() const { return combinedAlphabet(Q.base, A.base); }

Presentation combinedStructure(const CocycleSpec& s) {
    Alphabet C = s.combined();
    Dfa qDom = embedDfa(s.Q.domain, C, 0);
    Dfa aDom = embedDfa(s.A.domain, C, s.Q.base.size);
    Dfa unionDom = minimize(unite(qDom, aDom));
    Presentation P(s.name + "-two-sorted", "combined", C, unionDom, s.Q.neutralWord);
    P.addRelation("AddQ", embedRelation(s.Q.relation("Op"), C, 0));
    P.addRelation("AddA", embedRelation(s.A.relation("Op"), C, s.Q.base.size));
    P.addRelation("F", s.f);
    P.addRelation("isQ", unaryRelation(qDom));
    P.addRelation("isA", unaryRelation(aDom));
    return P;
}

namespace {

std::string describeTuple(const RelationAutomaton& r, const Alphabet& display) {
    // shortest packed witness, rendered track by track
    auto words = enumerateWords(r.dfa(), r.dfa().stateCount());
    if (words.empty()) return "(no witness)";
    auto tracks = deconvolve(r.base(), words.front(), r.arity());
    std::string out = "(";
    for (size_t t = 0; t < tracks.size(); ++t) {
        if (t) out += ", ";
        std::string w = wordToString(display, tracks[t]);
        out += w.empty() ? "eps" : w;
    }
    return out + ")";
}

}  // namespace

bool verifyCocycle(const CocycleSpec& s) {
    if (!decide(commutativitySentence(), s.Q))
        throw std::invalid_argument("cocycle: Q is not commutative");
    if (!decide(commutativitySentence(), s.A))
        throw std::invalid_argument("cocycle: A is not commutative");

    Presentation P = combinedStructure(s);
    Alphabet C = s.combined();

    CompiledRelation notTotal = compile(
        parseFormula("(and (isQ u) (isQ v) (not (exists a (F u v a))))"), P);
    if (!isEmpty(notTotal.rel.dfa()))
        throw std::invalid_argument("cocycle is not total at " + describeTuple(notTotal.rel, C));
    CompiledRelation notFunctional = compile(
        parseFormula("(and (F u v a) (F u v b) (not (= a b)))"), P);
    if (!isEmpty(notFunctional.rel.dfa()))
        throw std::invalid_argument("cocycle is not functional at " +
                                    describeTuple(notFunctional.rel, C));

    FormulaPtr identity = forallAll(
        {"u", "v", "w"},
        implies(fand({rel("isQ", {"u"}), rel("isQ", {"v"}), rel("isQ", {"w"})}),
                existsAll({"x1", "s1", "x2", "y1", "s2", "y2", "l", "r"},
                          fand({rel("F", {"u", "v", "x1"}), rel("AddQ", {"u", "v", "s1"}),
                                rel("F", {"s1", "w", "x2"}), rel("F", {"v", "w", "y1"}),
                                rel("AddQ", {"v", "w", "s2"}), rel("F", {"u", "s2", "y2"}),
                                rel("AddA", {"x1", "x2", "l"}), rel("AddA", {"y1", "y2", "r"}),
                                eq("l", "r")}))));
    return decide(identity, P);
}

Presentation buildExtension(const CocycleSpec& s) {
    if (!verifyCocycle(s))
        throw std::invalid_argument("cocycle identity fails; cannot build an extension");

    Presentation P = combinedStructure(s);
    Alphabet C = s.combined();

    // (u,a).(v,b) = (w,c)  iff  w = u+v and c = a+b+f(u,v)
    FormulaPtr op6 = fand(
        {rel("AddQ", {"u", "v", "w"}),
         existsAll({"t", "s"}, fand({rel("F", {"u", "v", "t"}), rel("AddA", {"a", "b", "s"}),
                                     rel("AddA", {"s", "t", "c"})}))});
    CompiledRelation c6 = compile(op6, P);
    // canonical order is (u,v,w,a,b,c); extension tracks pair as (u,a,v,b,w,c)
    RelationAutomaton r6 = reorderTracks(c6.rel, {0, 3, 1, 4, 2, 5});

    // pull the 6-track automaton back along pair packing
    PaddedAlphabet pairPa(C, 2);
    Alphabet extBase = pairPa.packedAlphabet();
    PaddedAlphabet extPa(extBase, 3);
    int r2 = pairPa.radix();
    const Dfa& d6 = r6.dfa();
    std::vector<int> classOf(extPa.packedSize());
    for (int code = 0; code < extPa.packedSize(); ++code) {
        auto col = extPa.unpack(code);
        int64_t sixCode = 0;
        int64_t mult = 1;
        for (int t = 0; t < 3; ++t) {
            int lo, hi;
            if (col[t] == extPa.padCode()) {
                lo = C.size;
                hi = C.size;
            } else {
                lo = col[t] % r2;
                hi = col[t] / r2;
            }
            sixCode += (lo + static_cast<int64_t>(r2) * hi) * mult;
            mult *= static_cast<int64_t>(r2) * r2;
        }
        classOf[code] = d6.classOf(static_cast<int>(sixCode));
    }
    std::vector<int> table(static_cast<size_t>(d6.stateCount()) * d6.numClasses());
    for (int q = 0; q < d6.stateCount(); ++q)
        for (int c = 0; c < d6.numClasses(); ++c)
            table[static_cast<size_t>(q) * d6.numClasses() + c] = d6.nextByClass(q, c);
    std::vector<bool> acc(d6.stateCount());
    for (int q = 0; q < d6.stateCount(); ++q) acc[q] = d6.isAccepting(q);
    Dfa extOpDfa = Dfa::fromClassified(Alphabet(extPa.packedSize()), std::move(classOf),
                                       d6.numClasses(), std::move(table), d6.start(), std::move(acc));

    // domain: pairs of a Q-domain word and an A-domain word
    Dfa qDom = embedDfa(s.Q.domain, C, 0);
    Dfa aDom = embedDfa(s.A.domain, C, s.Q.base.size);
    RelationAutomaton d2 = intersectRel(liftUnary(qDom, 0, 2), liftUnary(aDom, 1, 2));
    const Dfa& dd = d2.dfa();
    std::vector<int> domClassOf = dd.classMap();
    std::vector<int> domTable(static_cast<size_t>(dd.stateCount()) * dd.numClasses());
    for (int q = 0; q < dd.stateCount(); ++q)
        for (int c = 0; c < dd.numClasses(); ++c)
            domTable[static_cast<size_t>(q) * dd.numClasses() + c] = dd.nextByClass(q, c);
    std::vector<bool> domAcc(dd.stateCount());
    for (int q = 0; q < dd.stateCount(); ++q) domAcc[q] = dd.isAccepting(q);
    Dfa extDomain = Dfa::fromClassified(extBase, std::move(domClassOf), dd.numClasses(),
                                        std::move(domTable), dd.start(), std::move(domAcc));

    Word neutral = extensionWord(s, s.Q.neutralWord, s.A.neutralWord);
    Presentation ext(s.name + "-extension", "extension", extBase, extDomain, neutral);
    ext.addRelation("Op", RelationAutomaton(3, extBase, std::move(extOpDfa)));
    ext.addConstant("is_e", neutral);
    ext.notes["pairing"] = "column = (Q symbol | pad, A symbol | pad) packed over the two-sorted alphabet";
    return ext;
}

Word extensionWord(const CocycleSpec& s, const Word& qWord, const Word& aWord) {
    return convolve(s.combined(), {qWord, shiftAWord(s.Q.base.size, aWord)});
}

std::pair<Word, Word> extensionParts(const CocycleSpec& s, const Word& w) {
    auto tracks = deconvolve(s.combined(), w, 2);
    Word a = tracks[1];
    for (int& sym : a) sym -= s.Q.base.size;
    for (int sym : a)
        if (sym < 0 || sym >= s.A.base.size)
            throw std::invalid_argument("extensionParts: second track is not an A-word");
    return {tracks[0], a};
}

Presentation vectorGroup(int p, const std::string& name) { return finitePower(cyclicGroup(p), name); }

Presentation zpDigits(int p) {
    Alphabet digits(p);
    {
        std::vector<std::string> labels(p);
        for (int i = 0; i < p; ++i) labels[i] = std::to_string(i);
        digits.labels = std::move(labels);
    }
    // domain: exactly one symbol
    std::vector<std::tuple<int, int, int>> trans;
    for (int s = 0; s < p; ++s) {
        trans.emplace_back(0, s, 1);
        trans.emplace_back(1, s, 2);
        trans.emplace_back(2, s, 2);
    }
    Dfa domain = Dfa::fromTransitions(digits, 3, 0, {1}, trans);
    Presentation P("z" + std::to_string(p), "zp", digits, domain, Word{0});
    P.p = p;

    PaddedAlphabet pa(digits, 3);
    std::vector<int> dense(static_cast<size_t>(3) * pa.packedSize(), 2);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        bool allReal = col[0] != pa.padCode() && col[1] != pa.padCode() && col[2] != pa.padCode();
        if (allReal && (col[0] + col[1] - col[2]) % p == 0)
            dense[code] = 1;  // from state 0
    }
    Dfa op(Alphabet(pa.packedSize()), 3, 0, {1}, dense);
    P.addRelation("Op", RelationAutomaton(3, digits, std::move(op)));
    P.addConstant("is_e", Word{0});
    return P;
}

CocycleSpec zeroCocycle(const Presentation& Q, const Presentation& A, const std::string& name) {
    Alphabet C = combinedAlphabet(Q.base, A.base);
    Dfa neutralOnly = singletonDfa(C, shiftAWord(Q.base.size, A.neutralWord));
    return CocycleSpec(name, Q, A, liftUnary(neutralOnly, 2, 3));
}

CocycleSpec epCocycle(int p) {
    requireOddPrime(p);
    Presentation Q = vectorGroup(p, "q-vectors");
    Presentation A = zpDigits(p);
    Alphabet C = combinedAlphabet(Q.base, A.base);
    PaddedAlphabet pa(C, 3);

    // tracks (alpha, beta, value); the value is one digit read in column 0,
    // checked at the end against -sum_k alpha_k (sum_{i<k} beta_i).
    const int INIT = 0, REJ = 1;
    auto stateOf = [&](int val, int b, int x) { return 2 + (val * p + b) * p + x; };
    int states = 2 + p * p * p;
    std::vector<int> dense(static_cast<size_t>(states) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        auto qDigit = [&](int sym, int& out) {
            if (sym == pa.padCode()) out = 0;
            else if (sym < p) out = sym;
            else return false;
            return true;
        };
        int a0, b0;
        bool qOk = qDigit(col[0], a0) && qDigit(col[1], b0);
        if (qOk && col[2] >= p && col[2] < 2 * p)
            dense[static_cast<size_t>(INIT) * pa.packedSize() + code] = stateOf(col[2] - p, b0, 0);
        if (qOk && col[2] == pa.padCode())
            for (int val = 0; val < p; ++val)
                for (int b = 0; b < p; ++b)
                    for (int x = 0; x < p; ++x)
                        dense[static_cast<size_t>(stateOf(val, b, x)) * pa.packedSize() + code] =
                            stateOf(val, (b + b0) % p, (x + a0 * b) % p);
    }
    std::vector<int> accepting;
    for (int val = 0; val < p; ++val)
        for (int b = 0; b < p; ++b)
            for (int x = 0; x < p; ++x)
                if ((val + x) % p == 0) accepting.push_back(stateOf(val, b, x));
    Dfa f(Alphabet(pa.packedSize()), states, INIT, accepting, dense);
    return CocycleSpec("ep" + std::to_string(p), Q, A,
                       RelationAutomaton(3, C, std::move(f)));
}

CocycleSpec hpCocycle(int p) {
    requireOddPrime(p);
    Presentation Q = vectorGroup(p, "q-vectors");
    Presentation A = vectorGroup(p, "z-vectors");
    Alphabet C = combinedAlphabet(Q.base, A.base);
    PaddedAlphabet pa(C, 3);

    // tracks (alpha, beta, r): the value digit at position j is the exponent
    // of z_{j+1}, checked one column later when alpha_{j+1} is visible.
    const int INIT = 0, REJ = 1;
    auto stateOf = [&](int b, int pending) { return 2 + b * p + pending; };
    int states = 2 + p * p;
    std::vector<int> dense(static_cast<size_t>(states) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        int alpha, beta, val;
        auto digitIn = [&](int sym, int lo, int hi, int& out) {
            if (sym == pa.padCode()) out = 0;
            else if (sym >= lo && sym < hi) out = sym - lo;
            else return false;
            return true;
        };
        if (!digitIn(col[0], 0, p, alpha) || !digitIn(col[1], 0, p, beta) ||
            !digitIn(col[2], p, 2 * p, val))
            continue;
        dense[static_cast<size_t>(INIT) * pa.packedSize() + code] = stateOf(beta, val);
        for (int b = 0; b < p; ++b)
            for (int pending = 0; pending < p; ++pending)
                if ((pending + alpha * b) % p == 0)
                    dense[static_cast<size_t>(stateOf(b, pending)) * pa.packedSize() + code] =
                        stateOf((b + beta) % p, val);
    }
    std::vector<int> accepting = {INIT};
    for (int b = 0; b < p; ++b) accepting.push_back(stateOf(b, 0));
    Dfa f(Alphabet(pa.packedSize()), states, INIT, accepting, dense);
    return CocycleSpec("hp" + std::to_string(p), Q, A,
                       RelationAutomaton(3, C, std::move(f)));
}

namespace {

void alignBits(std::vector<int>& v, size_t n) {
    if (v.size() < n) v.resize(n, 0);
}

}  // namespace

Ex12Element ex12Multiply(const Ex12Element& a, const Ex12Element& b) {
    Ex12Element out;
    out.xExp = a.xExp + b.xExp;
    size_t n = std::max({a.z.size(), b.z.size(), a.y.size(), b.y.size()});
    out.z = a.z;
    out.y = a.y;
    alignBits(out.z, n);
    alignBits(out.y, n);
    for (size_t i = 0; i < b.z.size(); ++i) out.z[i] ^= b.z[i];
    for (size_t i = 0; i < b.y.size(); ++i) out.y[i] ^= b.y[i];
    // moving x^bx left past z^az creates y^(bx*az)
    if (b.xExp % 2 != 0)
        for (size_t i = 0; i < a.z.size(); ++i) out.y[i] ^= a.z[i];
    return out;
}

Ex12Element ex12Inverse(const Ex12Element& a) {
    Ex12Element out;
    out.xExp = -a.xExp;
    out.z = a.z;
    out.y = a.y;
    alignBits(out.y, a.z.size());
    if (a.xExp % 2 != 0)
        for (size_t i = 0; i < a.z.size(); ++i) out.y[i] ^= a.z[i];
    return out;
}

Ex12AValue ex12CocycleValue(int s, const std::vector<int>& alpha, int t,
                            const std::vector<int>& beta) {
    auto lift = [](int sign, const std::vector<int>& vec) {
        Ex12Element e;
        e.xExp = sign;
        e.z = vec;
        return e;
    };
    std::vector<int> sum = alpha;
    alignBits(sum, beta.size());
    for (size_t i = 0; i < beta.size(); ++i) sum[i] ^= beta[i];
    Ex12Element c = ex12Multiply(ex12Multiply(lift(s, alpha), lift(t, beta)),
                                 ex12Inverse(lift((s + t) % 2, sum)));
    for (int bit : c.z)
        if (bit) throw std::logic_error("ex12 cocycle value left the centre");
    if (c.xExp % 2 != 0) throw std::logic_error("ex12 cocycle value has odd x exponent");
    Ex12AValue v;
    v.m = c.xExp / 2;
    v.y = c.y;
    while (!v.y.empty() && v.y.back() == 0) v.y.pop_back();
    return v;
}

Presentation ex12Q() {
    Alphabet bits(2, {"0", "1"});
    // words s alpha: nonempty, and alpha (everything after the first symbol)
    // does not end in 0
    std::vector<std::tuple<int, int, int>> trans;
    for (int s = 0; s < 2; ++s) {
        trans.emplace_back(0, s, 1);
        trans.emplace_back(1, s, s == 0 ? 2 : 3);
        trans.emplace_back(2, s, s == 0 ? 2 : 3);
        trans.emplace_back(3, s, s == 0 ? 2 : 3);
    }
    Dfa domain = Dfa::fromTransitions(bits, 4, 0, {1, 3}, trans);
    Presentation P("ex12-q", "ex12-q", bits, domain, Word{0});

    // componentwise addition mod 2 on every position
    PaddedAlphabet pa(bits, 3);
    std::vector<int> dense(static_cast<size_t>(2) * pa.packedSize(), 1);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        int a = col[0] == pa.padCode() ? 0 : col[0];
        int b = col[1] == pa.padCode() ? 0 : col[1];
        int c = col[2] == pa.padCode() ? 0 : col[2];
        if ((a ^ b) == c) dense[code] = 0;
    }
    Dfa op(Alphabet(pa.packedSize()), 2, 0, {0}, dense);
    P.addRelation("Op", RelationAutomaton(3, bits, std::move(op)));
    P.addConstant("is_e", Word{0});
    return P;
}

namespace {

// ex12 A-alphabet: pair codes 0..3 = (b, y) with code b + 2y, then '+' = 4,
// '-' = 5
constexpr int EXA_PLUS = 4;
constexpr int EXA_MINUS = 5;

}  // namespace

Presentation ex12A() {
    Alphabet sig(6, {"(0,0)", "(1,0)", "(0,1)", "(1,1)", "+", "-"});
    // domain: sign, then (m-bit, y-bit) pairs; last pair nonzero; a negative
    // sign requires a nonzero m-part
    const int START = 0, POK = 1, PZERO = 2, N0OK = 3, N0ZERO = 4, N1OK = 5, N1ZERO = 6, SINK = 7;
    std::vector<std::tuple<int, int, int>> trans;
    auto pairArc = [&](int from, int c, int to) { trans.emplace_back(from, c, to); };
    for (int c = 0; c < 6; ++c) {
        if (c == EXA_PLUS) pairArc(START, c, POK);
        else if (c == EXA_MINUS) pairArc(START, c, N0ZERO);
        else pairArc(START, c, SINK);
        pairArc(SINK, c, SINK);
    }
    for (int c = 0; c < 6; ++c) {
        bool sign = c >= EXA_PLUS;
        bool zero = c == 0;
        int b = sign ? 0 : (c & 1);
        for (int st : {POK, PZERO}) pairArc(st, c, sign ? SINK : (zero ? PZERO : POK));
        for (int st : {N0OK, N0ZERO})
            pairArc(st, c, sign ? SINK : (b ? (zero ? N1ZERO : N1OK) : (zero ? N0ZERO : N0OK)));
        for (int st : {N1OK, N1ZERO}) pairArc(st, c, sign ? SINK : (zero ? N1ZERO : N1OK));
    }
    Dfa domain = Dfa::fromTransitions(sig, 8, START, {POK, N1OK}, trans);
    Presentation P("ex12-a", "ex12-a", sig, domain, Word{EXA_PLUS});

    // addition: sign pattern fixes which two m-parts sum to the third (as in
    // the Z adder); y-parts xor positionwise
    PaddedAlphabet pa(sig, 3);
    const int INIT = 0, REJ = 1;
    auto stateOf = [](int pattern, int carry) { return 2 + pattern * 2 + carry; };
    std::vector<int> dense(static_cast<size_t>(8) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        bool allSigns = true;
        for (int t = 0; t < 3; ++t) allSigns = allSigns && col[t] >= EXA_PLUS && col[t] <= EXA_MINUS;
        if (allSigns) {
            bool nx = col[0] == EXA_MINUS, ny = col[1] == EXA_MINUS, nz = col[2] == EXA_MINUS;
            int pattern;
            if (nx == ny) pattern = nz == nx ? 0 : -1;
            else pattern = nz == nx ? 1 : 2;
            if (pattern >= 0)
                dense[static_cast<size_t>(INIT) * pa.packedSize() + code] = stateOf(pattern, 0);
        }
        int b[3], y[3];
        bool pairsOk = true;
        for (int t = 0; t < 3; ++t) {
            if (col[t] == pa.padCode()) b[t] = y[t] = 0;
            else if (col[t] < EXA_PLUS) {
                b[t] = col[t] & 1;
                y[t] = col[t] >> 1;
            } else pairsOk = false;
        }
        if (!pairsOk) continue;
        if ((y[0] ^ y[1]) != y[2]) continue;
        for (int pattern = 0; pattern < 3; ++pattern)
            for (int carry = 0; carry < 2; ++carry) {
                int lhs1, lhs2, rhs;
                if (pattern == 0) lhs1 = b[0], lhs2 = b[1], rhs = b[2];
                else if (pattern == 1) lhs1 = b[1], lhs2 = b[2], rhs = b[0];
                else lhs1 = b[0], lhs2 = b[2], rhs = b[1];
                int sum = lhs1 + lhs2 + carry;
                if (sum % 2 == rhs)
                    dense[static_cast<size_t>(stateOf(pattern, carry)) * pa.packedSize() + code] =
                        stateOf(pattern, sum / 2);
            }
    }
    std::vector<int> accepting = {stateOf(0, 0), stateOf(1, 0), stateOf(2, 0)};
    Dfa op(Alphabet(pa.packedSize()), 8, INIT, accepting, dense);
    P.addRelation("Op", RelationAutomaton(3, sig, std::move(op)));
    P.addConstant("is_e", Word{EXA_PLUS});
    return P;
}

Word ex12AEncode(const Ex12AValue& v) {
    Word w{v.m < 0 ? EXA_MINUS : EXA_PLUS};
    Word mBits = natEncode(static_cast<uint64_t>(v.m < 0 ? -v.m : v.m));
    size_t n = std::max(mBits.size(), v.y.size());
    for (size_t i = 0; i < n; ++i) {
        int b = i < mBits.size() ? mBits[i] : 0;
        int y = i < v.y.size() ? v.y[i] : 0;
        w.push_back(b + 2 * y);
    }
    while (w.size() > 1 && w.back() == 0) w.pop_back();
    return w;
}

CocycleSpec example12Cocycle() {
    Presentation Q = ex12Q();
    Presentation A = ex12A();
    Alphabet C = combinedAlphabet(Q.base, A.base);
    PaddedAlphabet pa(C, 3);
    const int qSize = 2;

    // f(q_{s,alpha}, q_{t,beta}) = x^(2 s t) prod y_i^(t alpha_i):
    // column 0 reads the pair (s,t) and requires a '+' sign on the value
    // track; column j >= 1 checks y = t*alpha_{j-1} and the m-bit (s*t at the
    // first pair, 0 afterwards).
    const int INIT = 0, REJ = 1;
    auto stPair = [](int s, int t) { return 2 + 2 * s + t; };
    auto stTail = [](int t) { return 6 + t; };
    std::vector<int> dense(static_cast<size_t>(8) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        // INIT: two Q bits and the shifted '+' sign
        if (col[0] < qSize && col[1] < qSize && col[2] == qSize + EXA_PLUS)
            dense[static_cast<size_t>(INIT) * pa.packedSize() + code] = stPair(col[0], col[1]);
        // later columns: Q bit or pad on tracks 0-1, pair code or pad on track 2
        int alpha;
        if (col[0] == pa.padCode()) alpha = 0;
        else if (col[0] < qSize) alpha = col[0];
        else continue;
        if (!(col[1] == pa.padCode() || col[1] < qSize)) continue;
        int b, y;
        if (col[2] == pa.padCode()) b = y = 0;
        else if (col[2] >= qSize && col[2] < qSize + EXA_PLUS) {
            b = (col[2] - qSize) & 1;
            y = (col[2] - qSize) >> 1;
        } else continue;
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
                if (y == (t & alpha) && b == (s & t))
                    dense[static_cast<size_t>(stPair(s, t)) * pa.packedSize() + code] = stTail(t);
        for (int t = 0; t < 2; ++t)
            if (y == (t & alpha) && b == 0)
                dense[static_cast<size_t>(stTail(t)) * pa.packedSize() + code] = stTail(t);
    }
    std::vector<int> accepting = {stPair(0, 0), stPair(0, 1), stPair(1, 0), stTail(0), stTail(1)};
    Dfa f(Alphabet(pa.packedSize()), 8, INIT, accepting, dense);
    CocycleSpec spec("example12", Q, A, RelationAutomaton(3, C, std::move(f)));

    // the closed form is only trusted after it reproduces the transversal
    // computation bar(q1) bar(q2) bar(q1+q2)^-1 on a grid of arguments
    auto qWords = enumerateWords(spec.Q.domain, 4);
    for (const Word& u : qWords)
        for (const Word& v : qWords) {
            std::vector<int> alpha(u.begin() + 1, u.end());
            std::vector<int> beta(v.begin() + 1, v.end());
            Ex12AValue expect = ex12CocycleValue(u[0], alpha, v[0], beta);
            if (!spec.f.contains({u, v, shiftAWord(qSize, ex12AEncode(expect))}))
                throw std::logic_error("example12 cocycle automaton disagrees with the transversal");
        }
    return spec;
}

Presentation example12() {
    CocycleSpec spec = example12Cocycle();
    Presentation ext = buildExtension(spec);
    Word aNeutral = spec.A.neutralWord;
    ext.addConstant("is_x", extensionWord(spec, Word{1}, aNeutral));
    ext.addConstant("is_z0", extensionWord(spec, Word{0, 1}, aNeutral));
    ext.addConstant("is_y0", extensionWord(spec, spec.Q.neutralWord, Word{EXA_PLUS, 2}));
    ext.name = "example12";
    return ext;
}

Presentation finiteIndexExtension(const Presentation& N, const FiniteGroupTable& T,
                                  const FiniteIndexData& data) {
    int tn = T.order;
    if (static_cast<int>(data.action.size()) != tn)
        throw std::invalid_argument("finiteIndexExtension: need one action graph per quotient element");
    if (static_cast<int>(data.correction.size()) != tn * tn)
        throw std::invalid_argument("finiteIndexExtension: need a full correction table");

    // enrich N with the action graphs and correction constants
    Presentation N2 = N;
    for (int g = 0; g < tn; ++g) N2.addRelation("phi" + std::to_string(g), data.action[g]);
    for (int g = 0; g < tn; ++g)
        for (int h = 0; h < tn; ++h) {
            const Word& w = data.correction[static_cast<size_t>(g) * tn + h];
            if (!N.domain.accepts(w))
                throw std::invalid_argument("finiteIndexExtension: correction word outside N");
            N2.addConstant("c_" + std::to_string(g) + "_" + std::to_string(h), w);
        }

    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("finiteIndexExtension: supplied data fails the " + what);
    };
    auto phi = [&](int g) { return "phi" + std::to_string(g); };
    auto corr = [&](int g, int h) { return "c_" + std::to_string(g) + "_" + std::to_string(h); };

    // normalization: r_e = e
    for (int g = 0; g < tn; ++g) {
        if (data.correction[static_cast<size_t>(T.identity) * tn + g] != N.neutralWord ||
            data.correction[static_cast<size_t>(g) * tn + T.identity] != N.neutralWord)
            fail("normalization (corrections at the identity must be trivial)");
    }
    if (!decide(parseFormula("(forall m (" + phi(T.identity) + " m m))"), N2))
        fail("identity action (phi_e must be the identity)");
    for (int g = 0; g < tn; ++g) {
        std::string pg = phi(g);
        if (!decide(parseFormula("(forall m (exists t (" + pg + " m t)))"), N2))
            fail("totality of the action " + pg);
        if (!decide(parseFormula("(forall m (forall t (forall u (implies (and (" + pg + " m t) (" +
                                     pg + " m u)) (= t u)))))"),
                    N2))
            fail("functionality of the action " + pg);
        if (!decide(parseFormula("(forall a (forall b (forall c (forall ta (forall tb (forall tc "
                                 "(implies (and (Op a b c) (" +
                                     pg + " a ta) (" + pg + " b tb) (" + pg +
                                     " c tc)) (Op ta tb tc))))))))"),
                    N2))
            fail("homomorphism property of the action " + pg);
    }
    // phi_g . phi_h = inn(c_{g,h}) . phi_{gh}
    for (int g = 0; g < tn; ++g)
        for (int h = 0; h < tn; ++h) {
            int gh = T.mul(g, h);
            std::string sentence =
                "(forall m (forall t (forall u (forall v (implies (and (" + phi(h) + " m t) (" +
                phi(g) + " t u) (" + phi(gh) + " m v)) (exists c (exists w (and (" + corr(g, h) +
                " c) (Op u c w) (Op c v w)))))))))";
            if (!decide(parseFormula(sentence), N2)) fail("compatibility of action and corrections");
        }
    // c_{g,h} c_{gh,k} = phi_g(c_{h,k}) c_{g,hk}
    for (int g = 0; g < tn; ++g)
        for (int h = 0; h < tn; ++h)
            for (int k = 0; k < tn; ++k) {
                int gh = T.mul(g, h), hk = T.mul(h, k);
                std::string sentence = "(exists a (exists b (exists l (exists cc (exists t (exists d "
                                       "(exists r (and (" +
                                       corr(g, h) + " a) (" + corr(gh, k) + " b) (Op a b l) (" +
                                       corr(h, k) + " cc) (" + phi(g) + " cc t) (" + corr(g, hk) +
                                       " d) (Op t d r) (= l r)))))))))";
                if (!decide(parseFormula(sentence), N2)) fail("factor-set cocycle condition");
            }

    // per-(g,h) component relations R(n, m, res) <=> res = n phi_g(m) c_{g,h}
    std::vector<RelationAutomaton> blocks;
    blocks.reserve(static_cast<size_t>(tn) * tn);
    for (int g = 0; g < tn; ++g)
        for (int h = 0; h < tn; ++h) {
            std::string formula = "(exists t (exists u (exists c (and (" + phi(g) +
                                  " m t) (Op n t u) (" + corr(g, h) + " c) (Op u c res)))))";
            CompiledRelation cr = compile(parseFormula(formula), N2);
            // canonical order (m, n, res) -> tracks (n, m, res)
            blocks.push_back(reorderTracks(cr.rel, {1, 0, 2}));
        }

    // assemble: tag symbols first, then N's alphabet
    std::vector<std::string> labels;
    for (int g = 0; g < tn; ++g) labels.push_back("g" + std::to_string(g));
    for (int s = 0; s < N.base.size; ++s) labels.push_back(N.base.labelOf(s));
    Alphabet L(tn + N.base.size, std::move(labels));
    PaddedAlphabet lpa(L, 3);
    PaddedAlphabet npa(N.base, 3);

    int states = 2;
    std::vector<int> blockOffset(blocks.size());
    for (size_t i = 0; i < blocks.size(); ++i) {
        blockOffset[i] = states;
        states += blocks[i].dfa().stateCount();
    }
    const int INIT = 0, REJ = 1;
    std::vector<int> dense(static_cast<size_t>(states) * lpa.packedSize(), REJ);
    std::vector<bool> acc(states, false);
    for (int code = 0; code < lpa.packedSize(); ++code) {
        auto col = lpa.unpack(code);
        if (col[0] < tn && col[1] < tn && col[2] < tn) {
            int g = col[0], h = col[1];
            if (T.mul(g, h) == col[2]) {
                size_t idx = static_cast<size_t>(g) * tn + h;
                dense[static_cast<size_t>(INIT) * lpa.packedSize() + code] =
                    blockOffset[idx] + blocks[idx].dfa().start();
            }
        }
        // N-columns: translate each track, rejecting stray tags
        std::vector<int> nCol(3);
        bool ok = true;
        for (int t = 0; t < 3 && ok; ++t) {
            if (col[t] == lpa.padCode()) nCol[t] = npa.padCode();
            else if (col[t] >= tn) nCol[t] = col[t] - tn;
            else ok = false;
        }
        if (!ok) continue;
        int nCode = npa.pack(nCol);
        for (size_t i = 0; i < blocks.size(); ++i) {
            const Dfa& bd = blocks[i].dfa();
            for (int q = 0; q < bd.stateCount(); ++q)
                dense[static_cast<size_t>(blockOffset[i] + q) * lpa.packedSize() + code] =
                    blockOffset[i] + bd.next(q, nCode);
        }
    }
    for (size_t i = 0; i < blocks.size(); ++i) {
        const Dfa& bd = blocks[i].dfa();
        for (int q = 0; q < bd.stateCount(); ++q) acc[blockOffset[i] + q] = bd.isAccepting(q);
    }
    std::vector<int> accList;
    for (int q = 0; q < states; ++q)
        if (acc[q]) accList.push_back(q);
    Dfa op(Alphabet(lpa.packedSize()), states, INIT, accList, dense);

    // domain: a tag, then an N-domain word
    Dfa nDom = embedDfa(N.domain, L, tn);
    int dn = nDom.stateCount();
    std::vector<int> domDense(static_cast<size_t>(dn + 2) * L.size);
    int dStart = dn, dSink = dn + 1;
    for (int q = 0; q < dn; ++q)
        for (int s = 0; s < L.size; ++s)
            domDense[static_cast<size_t>(q) * L.size + s] = s < tn ? dSink : nDom.next(q, s);
    for (int s = 0; s < L.size; ++s) {
        domDense[static_cast<size_t>(dStart) * L.size + s] = s < tn ? nDom.start() : dSink;
        domDense[static_cast<size_t>(dSink) * L.size + s] = dSink;
    }
    std::vector<int> domAcc;
    for (int q = 0; q < dn; ++q)
        if (nDom.isAccepting(q)) domAcc.push_back(q);
    Dfa domain(L, dn + 2, dStart, domAcc, domDense);

    Word neutral{T.identity};
    for (int s : N.neutralWord) neutral.push_back(s + tn);
    Presentation ext(N.name + "-by-" + std::to_string(tn), "finite-index-extension", L, domain,
                     neutral);
    ext.p = N.p;
    ext.addRelation("Op", RelationAutomaton(3, L, std::move(op)));
    ext.addConstant("is_e", neutral);
    ext.notes["layout"] = "word = coset tag symbol, then a subgroup word";
    return ext;
}

}  // namespace wordauto
