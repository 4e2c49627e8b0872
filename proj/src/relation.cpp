#include "wordauto/relation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace wordauto {

PaddedAlphabet::PaddedAlphabet(Alphabet b, int k) : base(std::move(b)), arity(k) {
    if (k < 1) throw std::invalid_argument("PaddedAlphabet: arity must be >= 1");
    int64_t size = 1;
    for (int i = 0; i < k; ++i) {
        size *= radix();
        if (size > std::numeric_limits<int>::max())
            throw std::invalid_argument("PaddedAlphabet: packed alphabet too large");
    }
    packedSize_ = static_cast<int>(size - 1);
}

int PaddedAlphabet::pack(const std::vector<int>& column) const {
    if (static_cast<int>(column.size()) != arity) throw std::invalid_argument("pack: wrong column size");
    int code = 0;
    int mult = 1;
    bool allPad = true;
    for (int i = 0; i < arity; ++i) {
        if (column[i] < 0 || column[i] > padCode()) throw std::invalid_argument("pack: symbol out of range");
        if (column[i] != padCode()) allPad = false;
        code += column[i] * mult;
        mult *= radix();
    }
    if (allPad) throw std::invalid_argument("pack: all-pad column has no code");
    return code;
}

std::vector<int> PaddedAlphabet::unpack(int code) const {
    if (code < 0 || code >= packedSize_) throw std::invalid_argument("unpack: code out of range");
    std::vector<int> column(arity);
    for (int i = 0; i < arity; ++i) {
        column[i] = code % radix();
        code /= radix();
    }
    return column;
}

Alphabet PaddedAlphabet::packedAlphabet() const {
    if (packedSize_ > 4096) return Alphabet(packedSize_);
    std::vector<std::string> labels(packedSize_);
    for (int c = 0; c < packedSize_; ++c) {
        auto col = unpack(c);
        std::string l = "(";
        for (int i = 0; i < arity; ++i) {
            if (i) l += ",";
            l += col[i] == padCode() ? std::string("◇") : base.labelOf(col[i]);
        }
        l += ")";
        labels[c] = std::move(l);
    }
    return Alphabet(packedSize_, std::move(labels));
}

Word convolve(const Alphabet& base, const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("convolve: need at least one track");
    PaddedAlphabet pa(base, static_cast<int>(words.size()));
    size_t len = 0;
    for (const auto& w : words) len = std::max(len, w.size());
    Word out;
    out.reserve(len);
    std::vector<int> column(words.size());
    for (size_t j = 0; j < len; ++j) {
        for (size_t t = 0; t < words.size(); ++t) {
            int s = j < words[t].size() ? words[t][j] : pa.padCode();
            if (s < 0 || s >= base.size + (j < words[t].size() ? 0 : 1))
                throw std::invalid_argument("convolve: symbol out of range");
            column[t] = s;
        }
        out.push_back(pa.pack(column));
    }
    return out;
}

std::vector<Word> deconvolve(const Alphabet& base, const Word& packed, int k) {
    PaddedAlphabet pa(base, k);
    std::vector<Word> tracks(k);
    std::vector<bool> ended(k, false);
    for (int code : packed) {
        auto column = pa.unpack(code);
        for (int t = 0; t < k; ++t) {
            if (column[t] == pa.padCode()) {
                ended[t] = true;
            } else {
                if (ended[t]) throw std::invalid_argument("deconvolve: track resumes after padding");
                tracks[t].push_back(column[t]);
            }
        }
    }
    return tracks;
}

namespace {

Dfa restrictToWellFormed(const Alphabet& base, int arity, Dfa dfa) {
    PaddedAlphabet pa(base, arity);
    if (dfa.alphabet().size != pa.packedSize())
        throw std::invalid_argument("RelationAutomaton: dfa alphabet does not match packed size");
    return minimize(intersect(dfa, wellFormed(base, arity).dfa()));
}

}  // namespace

RelationAutomaton::RelationAutomaton(int arity, Alphabet base, Dfa dfa)
    : arity_(arity), base_(std::move(base)), dfa_(restrictToWellFormed(base_, arity_, std::move(dfa))) {}

RelationAutomaton RelationAutomaton::wrapWellFormed(int arity, Alphabet base, Dfa dfa) {
    PaddedAlphabet pa(base, arity);
    if (dfa.alphabet().size != pa.packedSize())
        throw std::invalid_argument("RelationAutomaton: dfa alphabet does not match packed size");
    RelationAutomaton r(std::move(dfa));
    r.arity_ = arity;
    r.base_ = std::move(base);
    return r;
}

bool RelationAutomaton::contains(const std::vector<Word>& tuple) const {
    if (static_cast<int>(tuple.size()) != arity_) throw std::invalid_argument("contains: wrong tuple size");
    return dfa_.accepts(convolve(base_, tuple));
}

RelationAutomaton wellFormed(const Alphabet& base, int k) {
    PaddedAlphabet pa(base, k);
    int sz = pa.packedSize();
    // Symbols fall into classes by their pad pattern.
    std::vector<int> classOf(sz);
    std::vector<int> maskOf;  // class -> pad bitmask
    std::map<int, int> maskId;
    for (int code = 0; code < sz; ++code) {
        auto col = pa.unpack(code);
        int mask = 0;
        for (int t = 0; t < k; ++t)
            if (col[t] == pa.padCode()) mask |= 1 << t;
        auto it = maskId.find(mask);
        if (it == maskId.end()) {
            it = maskId.emplace(mask, static_cast<int>(maskOf.size())).first;
            maskOf.push_back(mask);
        }
        classOf[code] = it->second;
    }
    int numClasses = static_cast<int>(maskOf.size());
    // State: bitmask of tracks that have started padding; plus a sink.
    int states = (1 << k) + 1;
    int sink = 1 << k;
    std::vector<int> table(static_cast<size_t>(states) * numClasses);
    for (int m = 0; m < (1 << k); ++m)
        for (int c = 0; c < numClasses; ++c)
            table[static_cast<size_t>(m) * numClasses + c] = (m & ~maskOf[c]) ? sink : (m | maskOf[c]);
    for (int c = 0; c < numClasses; ++c) table[static_cast<size_t>(sink) * numClasses + c] = sink;
    std::vector<bool> acc(states, true);
    acc[sink] = false;
    Dfa d = Dfa::fromClassified(Alphabet(sz), std::move(classOf), numClasses, std::move(table), 0,
                                std::move(acc));
    return RelationAutomaton::wrapWellFormed(k, base, std::move(d));
}

namespace {

void requireCompatible(const RelationAutomaton& a, const RelationAutomaton& b) {
    if (a.arity() != b.arity() || a.base().size != b.base().size)
        throw std::invalid_argument("relation operands have different arity or base alphabet");
}

}  // namespace

RelationAutomaton intersectRel(const RelationAutomaton& a, const RelationAutomaton& b) {
    requireCompatible(a, b);
    return RelationAutomaton::wrapWellFormed(a.arity(), a.base(), minimize(intersect(a.dfa(), b.dfa())));
}

RelationAutomaton uniteRel(const RelationAutomaton& a, const RelationAutomaton& b) {
    requireCompatible(a, b);
    return RelationAutomaton::wrapWellFormed(a.arity(), a.base(), minimize(unite(a.dfa(), b.dfa())));
}

RelationAutomaton complementRel(const RelationAutomaton& r) {
    Dfa c = intersect(complement(r.dfa()), wellFormed(r.base(), r.arity()).dfa());
    return RelationAutomaton::wrapWellFormed(r.arity(), r.base(), minimize(std::move(c)));
}

RelationAutomaton project(const RelationAutomaton& r, int track) {
    int k = r.arity();
    if (k < 2) throw std::invalid_argument("project: arity must be >= 2");
    if (track < 0 || track >= k) throw std::invalid_argument("project: track out of range");
    PaddedAlphabet oldPa(r.base(), k);
    PaddedAlphabet newPa(r.base(), k - 1);
    int radix = oldPa.radix();
    int64_t insMult = 1;
    for (int i = 0; i < track; ++i) insMult *= radix;

    // New-symbol classes: group by the vector of old classes over all
    // possible symbols inserted on the dropped track.
    const Dfa& d = r.dfa();
    int newSz = newPa.packedSize();
    std::vector<int> classOf(newSz);
    std::map<std::vector<int>, int> keyId;
    std::vector<std::vector<int>> keyOldClasses;
    std::vector<int> key(radix);
    for (int ns = 0; ns < newSz; ++ns) {
        // old code = low digits kept, inserted digit, high digits shifted
        int low = static_cast<int>(ns % insMult);
        int high = static_cast<int>(ns / insMult);
        for (int s = 0; s < radix; ++s) {
            int64_t oldCode = low + insMult * (s + static_cast<int64_t>(radix) * high);
            key[s] = d.classOf(static_cast<int>(oldCode));
        }
        auto it = keyId.find(key);
        if (it == keyId.end()) {
            it = keyId.emplace(key, static_cast<int>(keyOldClasses.size())).first;
            keyOldClasses.push_back(key);
        }
        classOf[ns] = it->second;
    }
    int numClasses = static_cast<int>(keyOldClasses.size());

    // Accepting closure: states that can still reach acceptance while only
    // the dropped track carries real symbols.
    std::vector<int> onlyTrackClasses;
    {
        std::vector<int> col(k, oldPa.padCode());
        for (int s = 0; s < r.base().size; ++s) {
            col[track] = s;
            onlyTrackClasses.push_back(d.classOf(oldPa.pack(col)));
        }
        std::sort(onlyTrackClasses.begin(), onlyTrackClasses.end());
        onlyTrackClasses.erase(std::unique(onlyTrackClasses.begin(), onlyTrackClasses.end()),
                               onlyTrackClasses.end());
    }
    std::vector<std::vector<int>> rev(d.stateCount());
    for (int q = 0; q < d.stateCount(); ++q)
        for (int c : onlyTrackClasses) rev[d.nextByClass(q, c)].push_back(q);
    std::vector<bool> closure(d.stateCount(), false);
    std::queue<int> bfs;
    for (int q = 0; q < d.stateCount(); ++q)
        if (d.isAccepting(q)) {
            closure[q] = true;
            bfs.push(q);
        }
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop();
        for (int pstate : rev[q])
            if (!closure[pstate]) {
                closure[pstate] = true;
                bfs.push(pstate);
            }
    }

    std::vector<std::vector<std::vector<int>>> moves(
        d.stateCount(), std::vector<std::vector<int>>(numClasses));
    for (int q = 0; q < d.stateCount(); ++q)
        for (int c = 0; c < numClasses; ++c) {
            std::vector<int> targets;
            for (int oc : keyOldClasses[c]) targets.push_back(d.nextByClass(q, oc));
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            moves[q][c] = std::move(targets);
        }
    Nfa nfa = Nfa::fromClassified(Alphabet(newSz), std::move(classOf), numClasses, std::move(moves),
                                  {d.start()}, closure);
    Dfa det = determinize(nfa);
    return RelationAutomaton(k - 1, r.base(), std::move(det));
}

RelationAutomaton cylindrify(const RelationAutomaton& r, int position) {
    int k = r.arity();
    if (position < 0 || position > k) throw std::invalid_argument("cylindrify: position out of range");
    PaddedAlphabet newPa(r.base(), k + 1);
    int radix = newPa.radix();
    int64_t posMult = 1;
    for (int i = 0; i < position; ++i) posMult *= radix;

    const Dfa& d = r.dfa();
    PaddedAlphabet oldPa(r.base(), k);
    int newSz = newPa.packedSize();
    int oldAllPad = -1;  // marker key for "all old tracks padded"
    std::vector<int> classOf(newSz);
    std::map<int, int> keyId;
    std::vector<int> keyList;
    for (int ns = 0; ns < newSz; ++ns) {
        int low = static_cast<int>(ns % posMult);
        int64_t rest = ns / posMult;
        int high = static_cast<int>(rest / radix);
        int64_t oldCode = low + posMult * high;
        // oldPa.packedSize() is exactly the all-pad column's would-be code.
        int key = oldCode == oldPa.packedSize() ? oldAllPad : d.classOf(static_cast<int>(oldCode));
        auto it = keyId.find(key);
        if (it == keyId.end()) {
            it = keyId.emplace(key, static_cast<int>(keyList.size())).first;
            keyList.push_back(key);
        }
        classOf[ns] = it->second;
    }
    int numClasses = static_cast<int>(keyList.size());
    int n = d.stateCount();
    int ended = n;
    int sink = n + 1;
    std::vector<int> table(static_cast<size_t>(n + 2) * numClasses);
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < numClasses; ++c)
            table[static_cast<size_t>(q) * numClasses + c] =
                keyList[c] == oldAllPad ? (d.isAccepting(q) ? ended : sink) : d.nextByClass(q, keyList[c]);
    for (int c = 0; c < numClasses; ++c) {
        table[static_cast<size_t>(ended) * numClasses + c] = keyList[c] == oldAllPad ? ended : sink;
        table[static_cast<size_t>(sink) * numClasses + c] = sink;
    }
    std::vector<bool> acc(n + 2, false);
    for (int q = 0; q < n; ++q) acc[q] = d.isAccepting(q);
    acc[ended] = true;
    Dfa lifted = Dfa::fromClassified(Alphabet(newSz), std::move(classOf), numClasses, std::move(table),
                                     d.start(), std::move(acc));
    return RelationAutomaton(k + 1, r.base(), std::move(lifted));
}

RelationAutomaton reorderTracks(const RelationAutomaton& r, const std::vector<int>& perm) {
    int k = r.arity();
    if (static_cast<int>(perm.size()) != k) throw std::invalid_argument("reorderTracks: bad permutation size");
    std::vector<bool> seen(k, false);
    for (int p : perm) {
        if (p < 0 || p >= k || seen[p]) throw std::invalid_argument("reorderTracks: not a permutation");
        seen[p] = true;
    }
    PaddedAlphabet pa(r.base(), k);
    const Dfa& d = r.dfa();
    std::vector<int> classOf(pa.packedSize());
    std::vector<int> oldCol(k);
    for (int ns = 0; ns < pa.packedSize(); ++ns) {
        auto newCol = pa.unpack(ns);
        for (int j = 0; j < k; ++j) oldCol[perm[j]] = newCol[j];
        classOf[ns] = d.classOf(pa.pack(oldCol));
    }
    std::vector<int> table(static_cast<size_t>(d.stateCount()) * d.numClasses());
    for (int q = 0; q < d.stateCount(); ++q)
        for (int c = 0; c < d.numClasses(); ++c)
            table[static_cast<size_t>(q) * d.numClasses() + c] = d.nextByClass(q, c);
    std::vector<bool> acc(d.stateCount());
    for (int q = 0; q < d.stateCount(); ++q) acc[q] = d.isAccepting(q);
    Dfa out = Dfa::fromClassified(Alphabet(pa.packedSize()), std::move(classOf), d.numClasses(),
                                  std::move(table), d.start(), std::move(acc));
    return RelationAutomaton::wrapWellFormed(k, r.base(), std::move(out));
}

RelationAutomaton equalityRelation(const Alphabet& base) {
    PaddedAlphabet pa(base, 2);
    int sz = pa.packedSize();
    std::vector<int> dense(static_cast<size_t>(2) * sz);
    for (int code = 0; code < sz; ++code) {
        auto col = pa.unpack(code);
        bool eq = col[0] == col[1] && col[0] != pa.padCode();
        dense[code] = eq ? 0 : 1;          // from state 0
        dense[sz + code] = 1;              // sink
    }
    Dfa d(Alphabet(sz), 2, 0, {0}, dense);
    return RelationAutomaton::wrapWellFormed(2, base, std::move(d));
}

RelationAutomaton lexLenOrder(const Alphabet& base) {
    PaddedAlphabet pa(base, 2);
    int sz = pa.packedSize();
    // states: 0 equal-so-far, 1 first-is-less, 2 first-is-greater,
    // 3 first-ended (accept), 4 reject/absorb
    const int E = 0, LT = 1, GT = 2, A = 3, R = 4;
    std::vector<int> dense(static_cast<size_t>(5) * sz);
    for (int code = 0; code < sz; ++code) {
        auto col = pa.unpack(code);
        int a = col[0], b = col[1];
        int fromCompare;  // for states E/LT/GT where both words are still running
        if (a != pa.padCode() && b != pa.padCode())
            fromCompare = 0;  // defer: depends on state
        else if (a == pa.padCode())
            fromCompare = A;  // first word ended first: shorter, hence <=_L
        else
            fromCompare = R;  // second ended first: first is longer
        for (int st : {E, LT, GT}) {
            int target;
            if (fromCompare == 0) {
                if (st == E) target = a == b ? E : (a < b ? LT : GT);
                else target = st;
            } else {
                target = fromCompare;
            }
            dense[static_cast<size_t>(st) * sz + code] = target;
        }
        dense[static_cast<size_t>(A) * sz + code] = a == pa.padCode() ? A : R;
        dense[static_cast<size_t>(R) * sz + code] = R;
    }
    Dfa d(Alphabet(sz), 5, 0, {E, LT, A}, dense);
    return RelationAutomaton(2, base, std::move(d));
}

RelationAutomaton liftUnary(const Dfa& d, int track, int arity) {
    if (track < 0 || track >= arity) throw std::invalid_argument("liftUnary: track out of range");
    PaddedAlphabet pa(d.alphabet(), arity);
    int radix = pa.radix();
    int64_t mult = 1;
    for (int i = 0; i < track; ++i) mult *= radix;
    int sz = pa.packedSize();
    std::vector<int> classOf(sz);
    std::map<int, int> keyId;  // track digit -> class
    std::vector<int> digits;
    for (int ns = 0; ns < sz; ++ns) {
        int digit = static_cast<int>((ns / mult) % radix);
        auto it = keyId.find(digit);
        if (it == keyId.end()) {
            it = keyId.emplace(digit, static_cast<int>(digits.size())).first;
            digits.push_back(digit);
        }
        classOf[ns] = it->second;
    }
    int numClasses = static_cast<int>(digits.size());
    int n = d.stateCount();
    int ended = n, sink = n + 1;
    std::vector<int> table(static_cast<size_t>(n + 2) * numClasses);
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < numClasses; ++c)
            table[static_cast<size_t>(q) * numClasses + c] =
                digits[c] == pa.padCode() ? (d.isAccepting(q) ? ended : sink) : d.next(q, digits[c]);
    for (int c = 0; c < numClasses; ++c) {
        table[static_cast<size_t>(ended) * numClasses + c] = digits[c] == pa.padCode() ? ended : sink;
        table[static_cast<size_t>(sink) * numClasses + c] = sink;
    }
    std::vector<bool> acc(n + 2, false);
    for (int q = 0; q < n; ++q) acc[q] = d.isAccepting(q);
    acc[ended] = true;
    Dfa lifted = Dfa::fromClassified(Alphabet(sz), std::move(classOf), numClasses, std::move(table),
                                     d.start(), std::move(acc));
    return RelationAutomaton(arity, d.alphabet(), std::move(lifted));
}

RelationAutomaton unaryRelation(const Dfa& d) {
    std::vector<int> classOf = d.classMap();
    std::vector<int> table(static_cast<size_t>(d.stateCount()) * d.numClasses());
    for (int q = 0; q < d.stateCount(); ++q)
        for (int c = 0; c < d.numClasses(); ++c)
            table[static_cast<size_t>(q) * d.numClasses() + c] = d.nextByClass(q, c);
    std::vector<bool> acc(d.stateCount());
    for (int q = 0; q < d.stateCount(); ++q) acc[q] = d.isAccepting(q);
    Dfa plain = Dfa::fromClassified(Alphabet(d.alphabet().size), std::move(classOf), d.numClasses(),
                                    std::move(table), d.start(), std::move(acc));
    return RelationAutomaton::wrapWellFormed(1, d.alphabet(), std::move(plain));
}

Dfa unwrapUnary(const RelationAutomaton& r) {
    if (r.arity() != 1) throw std::invalid_argument("unwrapUnary: relation is not unary");
    const Dfa& d = r.dfa();
    std::vector<int> classOf = d.classMap();
    std::vector<int> table(static_cast<size_t>(d.stateCount()) * d.numClasses());
    for (int q = 0; q < d.stateCount(); ++q)
        for (int c = 0; c < d.numClasses(); ++c)
            table[static_cast<size_t>(q) * d.numClasses() + c] = d.nextByClass(q, c);
    std::vector<bool> acc(d.stateCount());
    for (int q = 0; q < d.stateCount(); ++q) acc[q] = d.isAccepting(q);
    return Dfa::fromClassified(r.base(), std::move(classOf), d.numClasses(), std::move(table), d.start(),
                               std::move(acc));
}

RelationAutomaton::RelationAutomaton(Dfa d) : arity_(0), dfa_(std::move(d)) {}

}  // namespace wordauto
