#include "wordauto/presentations.hpp"

#include <stdexcept>

#include "wordauto/compile.hpp"

namespace wordauto {

namespace {

std::vector<std::string> digitLabels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

}  // namespace

Presentation natAdd() {
    Alphabet bin(2, {"0", "1"});
    // domain: empty word or ending in 1
    Dfa domain = Dfa::fromTransitions(bin, 3, 0, {0, 2},
                                      {{0, 0, 1}, {0, 1, 2}, {1, 0, 1}, {1, 1, 2}, {2, 0, 1}, {2, 1, 2}});
    Presentation P("nat-add", "nat-add", bin, domain, Word{});

    // Op: carry-bit adder over 3 tracks; state = carry, plus a reject state.
    PaddedAlphabet pa(bin, 3);
    const int REJ = 2;
    std::vector<int> dense(static_cast<size_t>(3) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        int a = col[0] == pa.padCode() ? 0 : col[0];
        int b = col[1] == pa.padCode() ? 0 : col[1];
        int c = col[2] == pa.padCode() ? 0 : col[2];
        for (int carry = 0; carry < 2; ++carry) {
            int s = a + b + carry;
            dense[static_cast<size_t>(carry) * pa.packedSize() + code] = (s % 2 == c) ? s / 2 : REJ;
        }
    }
    Dfa op(Alphabet(pa.packedSize()), 3, 0, {0}, dense);
    P.addRelation("Op", RelationAutomaton(3, bin, std::move(op)));
    P.addConstant("is_e", Word{});
    return P;
}

Presentation intAdd() {
    // symbols: 0, 1, '+' = 2, '-' = 3
    Alphabet sig(4, {"0", "1", "+", "-"});
    const int PLUS = 2, MINUS = 3;
    // domain: sign then a natAdd word; "-" requires a nonempty magnitude
    const int START = 0, SP = 1, SN = 2, D0 = 3, D1 = 4, SINK = 5;
    std::vector<std::tuple<int, int, int>> trans;
    auto arc = [&](int q, int s, int t) { trans.emplace_back(q, s, t); };
    arc(START, PLUS, SP);
    arc(START, MINUS, SN);
    arc(START, 0, SINK);
    arc(START, 1, SINK);
    for (int q : {SP, SN, D0, D1}) {
        arc(q, 0, D0);
        arc(q, 1, D1);
        arc(q, PLUS, SINK);
        arc(q, MINUS, SINK);
    }
    for (int s = 0; s < 4; ++s) arc(SINK, s, SINK);
    Dfa domain = Dfa::fromTransitions(sig, 6, START, {SP, D1}, trans);
    Presentation P("int-add", "int-add", sig, domain, Word{PLUS});

    // Op: the first column fixes the sign pattern, which determines which two
    // magnitudes must sum to the third; then a carry-bit scan.
    PaddedAlphabet pa(sig, 3);
    const int INIT = 0, REJ = 1;  // plus pattern*2 + carry + 2
    auto stateOf = [](int pattern, int carry) { return 2 + pattern * 2 + carry; };
    std::vector<int> dense(static_cast<size_t>(8) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        // INIT: expect three sign symbols
        if (col[0] >= PLUS && col[0] <= MINUS && col[1] >= PLUS && col[1] <= MINUS && col[2] >= PLUS &&
            col[2] <= MINUS) {
            bool nx = col[0] == MINUS, ny = col[1] == MINUS, nz = col[2] == MINUS;
            int pattern = -1;
            if (nx == ny)
                pattern = nz == nx ? 0 : -1;  // x + y = z
            else
                pattern = nz == nx ? 1 : 2;  // y + z = x, or x + z = y
            dense[static_cast<size_t>(INIT) * pa.packedSize() + code] =
                pattern < 0 ? REJ : stateOf(pattern, 0);
        }
        // digit columns
        bool digitsOk = true;
        int d[3];
        for (int t = 0; t < 3; ++t) {
            if (col[t] == pa.padCode())
                d[t] = 0;
            else if (col[t] == 0 || col[t] == 1)
                d[t] = col[t];
            else
                digitsOk = false;
        }
        if (!digitsOk) continue;
        for (int pattern = 0; pattern < 3; ++pattern)
            for (int carry = 0; carry < 2; ++carry) {
                int lhs1, lhs2, rhs;
                if (pattern == 0) lhs1 = d[0], lhs2 = d[1], rhs = d[2];
                else if (pattern == 1) lhs1 = d[1], lhs2 = d[2], rhs = d[0];
                else lhs1 = d[0], lhs2 = d[2], rhs = d[1];
                int s = lhs1 + lhs2 + carry;
                dense[static_cast<size_t>(stateOf(pattern, carry)) * pa.packedSize() + code] =
                    (s % 2 == rhs) ? stateOf(pattern, s / 2) : REJ;
            }
    }
    std::vector<int> accepting = {stateOf(0, 0), stateOf(1, 0), stateOf(2, 0)};
    Dfa op(Alphabet(pa.packedSize()), 8, INIT, accepting, dense);
    P.addRelation("Op", RelationAutomaton(3, sig, std::move(op)));
    P.addConstant("is_e", Word{PLUS});
    return P;
}

Presentation epPresentation(int p) {
    requireOddPrime(p);
    Alphabet sigma(p, digitLabels(p));
    // domain: v alpha with alpha empty or not ending in 0
    std::vector<std::tuple<int, int, int>> trans;
    for (int s = 0; s < p; ++s) {
        trans.emplace_back(0, s, 1);
        trans.emplace_back(1, s, s == 0 ? 2 : 3);
        trans.emplace_back(2, s, s == 0 ? 2 : 3);
        trans.emplace_back(3, s, s == 0 ? 2 : 3);
    }
    Dfa domain = Dfa::fromTransitions(sigma, 4, 0, {1, 3}, trans);
    Presentation P("ep(" + std::to_string(p) + ")", "ep", sigma, domain, Word{0});
    P.p = p;

    // Op automaton for z^v alpha . z^w beta = z^r gamma per the product rule:
    // the first column fixes t = v + w - r; the scan keeps the running sum b
    // of beta and the accumulator x of alpha_k * (sum of earlier beta), and
    // accepts when x = t at the end.
    PaddedAlphabet pa(sigma, 3);
    const int INIT = 0, REJ = 1;
    auto stateOf = [&](int t, int b, int x) { return 2 + (t * p + b) * p + x; };
    int states = 2 + p * p * p;
    std::vector<int> dense(static_cast<size_t>(states) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        bool firstOk = col[0] != pa.padCode() && col[1] != pa.padCode() && col[2] != pa.padCode();
        if (firstOk) {
            int t = ((col[0] + col[1] - col[2]) % p + p) % p;
            dense[static_cast<size_t>(INIT) * pa.packedSize() + code] = stateOf(t, 0, 0);
        }
        int a = col[0] == pa.padCode() ? 0 : col[0];
        int bb = col[1] == pa.padCode() ? 0 : col[1];
        int c = col[2] == pa.padCode() ? 0 : col[2];
        bool sumOk = (a + bb - c) % p == 0;
        for (int t = 0; t < p; ++t)
            for (int b = 0; b < p; ++b)
                for (int x = 0; x < p; ++x)
                    dense[static_cast<size_t>(stateOf(t, b, x)) * pa.packedSize() + code] =
                        sumOk ? stateOf(t, (b + bb) % p, (x + a * b) % p) : REJ;
    }
    std::vector<int> accepting;
    for (int t = 0; t < p; ++t)
        for (int b = 0; b < p; ++b) accepting.push_back(stateOf(t, b, t));
    Dfa op(Alphabet(pa.packedSize()), states, INIT, accepting, dense);
    P.addRelation("Op", RelationAutomaton(3, sigma, std::move(op)));

    P.addConstant("is_e", Word{0});
    P.addConstant("is_z", Word{1});
    for (int i = 0; i <= 3; ++i) {
        Word xi(static_cast<size_t>(i) + 2, 0);
        xi.back() = 1;
        P.addConstant("is_x" + std::to_string(i), xi);
    }
    P.notes["representation"] = "word v alpha encodes z^v x^alpha, least index first";
    return P;
}

Presentation hpPresentation(int p) {
    requireOddPrime(p);
    std::vector<std::string> labels(static_cast<size_t>(p) * p);
    for (int v = 0; v < p; ++v)
        for (int a = 0; a < p; ++a) labels[a + p * v] = "(" + std::to_string(a) + "," + std::to_string(v) + ")";
    Alphabet sigma(p * p, std::move(labels));
    auto alphaOf = [&](int code) { return code % p; };
    auto vOf = [&](int code) { return code / p; };

    // domain: equal-length alpha/v tracks, v_0 = 0, last column not (0,0)
    const int DSTART = 0, DBAD = 1, DGOOD = 2, DSINK = 3;
    std::vector<std::tuple<int, int, int>> trans;
    for (int code = 0; code < p * p; ++code) {
        bool zero = code == 0;
        trans.emplace_back(DSTART, code, vOf(code) != 0 ? DSINK : (zero ? DBAD : DGOOD));
        trans.emplace_back(DBAD, code, zero ? DBAD : DGOOD);
        trans.emplace_back(DGOOD, code, zero ? DBAD : DGOOD);
        trans.emplace_back(DSINK, code, DSINK);
    }
    Dfa domain = Dfa::fromTransitions(sigma, 4, DSTART, {DSTART, DGOOD}, trans);
    Presentation P("hp(" + std::to_string(p) + ")", "hp", sigma, domain, Word{});
    P.p = p;

    // Op: positionwise checks alpha_x + alpha_y = alpha_z and
    // v_x + v_y - alpha_x * (sum of earlier alpha_y) = v_z, all mod p.
    PaddedAlphabet pa(sigma, 3);
    const int REJ = p;  // states 0..p-1 hold the running beta sum
    int states = p + 1;
    std::vector<int> dense(static_cast<size_t>(states) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        int ax = col[0] == pa.padCode() ? 0 : alphaOf(col[0]);
        int vx = col[0] == pa.padCode() ? 0 : vOf(col[0]);
        int ay = col[1] == pa.padCode() ? 0 : alphaOf(col[1]);
        int vy = col[1] == pa.padCode() ? 0 : vOf(col[1]);
        int az = col[2] == pa.padCode() ? 0 : alphaOf(col[2]);
        int vz = col[2] == pa.padCode() ? 0 : vOf(col[2]);
        bool alphaOk = (ax + ay - az) % p == 0;
        for (int b = 0; b < p; ++b) {
            bool vOk = ((vx + vy - ax * b - vz) % p + p) % p == 0;
            dense[static_cast<size_t>(b) * pa.packedSize() + code] =
                alphaOk && vOk ? (b + ay) % p : REJ;
        }
    }
    std::vector<int> accepting;
    for (int b = 0; b < p; ++b) accepting.push_back(b);
    Dfa op(Alphabet(pa.packedSize()), states, 0, accepting, dense);
    P.addRelation("Op", RelationAutomaton(3, sigma, std::move(op)));

    P.addConstant("is_e", Word{});
    for (int i = 0; i <= 3; ++i) {
        NilElement xi = NilElement::generator(NilKind::H, p, 8, i);
        P.addConstant("is_x" + std::to_string(i), encodeWord(xi));
    }
    for (int k = 1; k <= 3; ++k) {
        NilElement zk = NilElement::centralH(p, 8, k, 1);
        P.addConstant("is_z" + std::to_string(k), encodeWord(zk));
    }
    P.notes["tracks"] = "column code = alpha + p*v: track 0 = alpha, track 1 = v";
    return P;
}

Presentation finitePower(const FiniteGroupTable& t, const std::string& name) {
    Alphabet sigma(t.order, t.labels.empty() ? digitLabels(t.order) : t.labels);
    int id = t.identity;
    std::vector<std::tuple<int, int, int>> trans;
    for (int s = 0; s < t.order; ++s) {
        trans.emplace_back(0, s, s == id ? 1 : 2);
        trans.emplace_back(1, s, s == id ? 1 : 2);
        trans.emplace_back(2, s, s == id ? 1 : 2);
    }
    Dfa domain = Dfa::fromTransitions(sigma, 3, 0, {0, 2}, trans);
    Presentation P(name, "power", sigma, domain, Word{});

    PaddedAlphabet pa(sigma, 3);
    const int OK = 0, REJ = 1;
    std::vector<int> dense(static_cast<size_t>(2) * pa.packedSize(), REJ);
    for (int code = 0; code < pa.packedSize(); ++code) {
        auto col = pa.unpack(code);
        int a = col[0] == pa.padCode() ? id : col[0];
        int b = col[1] == pa.padCode() ? id : col[1];
        int c = col[2] == pa.padCode() ? id : col[2];
        dense[static_cast<size_t>(OK) * pa.packedSize() + code] = t.mul(a, b) == c ? OK : REJ;
    }
    Dfa op(Alphabet(pa.packedSize()), 2, OK, {OK}, dense);
    P.addRelation("Op", RelationAutomaton(3, sigma, std::move(op)));
    P.addConstant("is_e", Word{});
    return P;
}

Presentation canonicalize(const Presentation& P) {
    if (!P.equality) {
        Presentation out = P;
        return out;
    }
    // the equality automaton must be an equivalence relation
    if (!decide(parseFormula("(forall x (= x x))"), P))
        throw std::invalid_argument("canonicalize: equality is not reflexive");
    if (!decide(parseFormula("(forall x (forall y (implies (= x y) (= y x))))"), P))
        throw std::invalid_argument("canonicalize: equality is not symmetric");
    if (!decide(parseFormula("(forall x (forall y (forall z (implies (and (= x y) (= y z)) (= x z)))))"),
                P))
        throw std::invalid_argument("canonicalize: equality is not transitive");

    // keep the <=_L-least word of every class
    Dfa newDomain = defineSet(parseFormula("(forall y (implies (= y x) (Leq x y)))"), P);

    // the least representative of the neutral class is no longer than the
    // neutral word itself
    Word neutral;
    bool found = false;
    for (const Word& w : enumerateWords(newDomain, static_cast<int>(P.neutralWord.size()))) {
        if (P.equality->contains({w, P.neutralWord})) {
            neutral = w;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("canonicalize: lost the neutral element");

    Presentation out(P.name + "/canonical", P.kind, P.base, newDomain, neutral);
    out.p = P.p;
    out.notes = P.notes;
    for (const auto& [relName, r] : P.relations) out.addRelation(relName, r);
    return out;
}

Word natEncode(uint64_t n) {
    Word w;
    while (n) {
        w.push_back(static_cast<int>(n & 1));
        n >>= 1;
    }
    return w;
}

uint64_t natDecode(const Word& w) {
    uint64_t n = 0;
    for (size_t i = w.size(); i-- > 0;) {
        if (w[i] != 0 && w[i] != 1) throw std::invalid_argument("natDecode: not a binary word");
        n = (n << 1) | static_cast<uint64_t>(w[i]);
    }
    return n;
}

Word intEncode(int64_t n) {
    Word w{n < 0 ? 3 : 2};
    Word mag = natEncode(static_cast<uint64_t>(n < 0 ? -n : n));
    w.insert(w.end(), mag.begin(), mag.end());
    return w;
}

int64_t intDecode(const Word& w) {
    if (w.empty() || (w[0] != 2 && w[0] != 3)) throw std::invalid_argument("intDecode: missing sign");
    Word mag(w.begin() + 1, w.end());
    int64_t v = static_cast<int64_t>(natDecode(mag));
    return w[0] == 3 ? -v : v;
}

Word encodeElement(const NilElement& a, const Presentation& P) {
    if ((P.kind == "ep" && a.kind != NilKind::E) || (P.kind == "hp" && a.kind != NilKind::H))
        throw std::invalid_argument("encodeElement: element kind does not match presentation");
    if (P.kind != "ep" && P.kind != "hp")
        throw std::invalid_argument("encodeElement: presentation has no oracle encoding");
    if (a.p != P.p) throw std::invalid_argument("encodeElement: p mismatch");
    return encodeWord(a);
}

NilElement decodeElement(const Word& w, const Presentation& P, int rank) {
    if (P.kind == "ep") return decodeWord(NilKind::E, P.p, rank, w);
    if (P.kind == "hp") return decodeWord(NilKind::H, P.p, rank, w);
    throw std::invalid_argument("decodeElement: presentation has no oracle encoding");
}

OpEvaluator::OpEvaluator(const Presentation& P, int growBound)
    : domain_(P.domain), op_(P.relation("Op")), pa_(P.base, 3), growBound_(growBound) {
    dead_ = op_.dfa().deadStates();
}

std::vector<Word> OpEvaluator::products(const Word& x, const Word& y, size_t limit) const {
    if (!domain_.accepts(x)) throw std::invalid_argument("operand not in domain: first argument");
    if (!domain_.accepts(y)) throw std::invalid_argument("operand not in domain: second argument");
    const Dfa& d = op_.dfa();
    int n = static_cast<int>(std::max(x.size(), y.size()));
    int radix = pa_.radix();
    std::vector<Word> results;
    Word z;
    auto symAt = [&](const Word& w, int j) {
        return j < static_cast<int>(w.size()) ? w[j] : pa_.padCode();
    };
    for (int zLen = 0; zLen <= n + growBound_ && results.size() < limit; ++zLen) {
        int total = std::max(n, zLen);
        auto dfs = [&](auto&& self, int j, int q) -> void {
            if (results.size() >= limit || dead_[q]) return;
            if (j == total) {
                if (d.isAccepting(q)) results.push_back(z);
                return;
            }
            int lowDigits = symAt(x, j) + radix * symAt(y, j);
            if (j < zLen) {
                for (int s = 0; s < pa_.base.size; ++s) {
                    z.push_back(s);
                    self(self, j + 1, d.next(q, lowDigits + radix * radix * s));
                    z.pop_back();
                }
            } else {
                self(self, j + 1, d.next(q, lowDigits + radix * radix * pa_.padCode()));
            }
        };
        dfs(dfs, 0, d.start());
    }
    return results;
}

Word OpEvaluator::product(const Word& x, const Word& y) const {
    std::vector<Word> zs = products(x, y, 2);
    if (zs.empty()) throw std::runtime_error("Op has no result for the given operands");
    if (zs.size() > 1) throw std::runtime_error("Op is not functional at the given operands");
    return zs[0];
}

}  // namespace wordauto
