#include "wordauto/automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace wordauto {

namespace {

uint64_t hashColumn(const std::vector<int>& col) {
    uint64_t h = 1469598103934665603ull;
    for (int v : col) {
        h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

// Groups equal columns; returns (remap old->group, group count). Group ids are
// assigned in first-occurrence order of the input sequence.
std::pair<std::vector<int>, int> groupColumns(const std::vector<std::vector<int>>& cols) {
    std::unordered_map<uint64_t, std::vector<int>> byHash;
    std::vector<int> remap(cols.size(), -1);
    int next = 0;
    for (size_t i = 0; i < cols.size(); ++i) {
        uint64_t h = hashColumn(cols[i]);
        auto& bucket = byHash[h];
        for (int j : bucket) {
            if (cols[j] == cols[i]) {
                remap[i] = remap[j];
                break;
            }
        }
        if (remap[i] < 0) {
            remap[i] = next++;
            bucket.push_back(static_cast<int>(i));
        }
    }
    return {remap, next};
}

}  // namespace

Dfa::Dfa(Alphabet alphabet, int stateCount, int start, const std::vector<int>& accepting,
         const std::vector<int>& denseDelta) {
    if (stateCount < 1) throw std::invalid_argument("Dfa: stateCount must be >= 1");
    if (denseDelta.size() != static_cast<size_t>(stateCount) * alphabet.size)
        throw std::invalid_argument("Dfa: dense delta has wrong size");
    // Compress symbols into behavioural classes.
    std::vector<std::vector<int>> cols(alphabet.size, std::vector<int>(stateCount));
    for (int s = 0; s < alphabet.size; ++s)
        for (int q = 0; q < stateCount; ++q) cols[s][q] = denseDelta[static_cast<size_t>(q) * alphabet.size + s];
    auto [remap, n] = groupColumns(cols);
    std::vector<int> table(static_cast<size_t>(stateCount) * n);
    std::vector<int> firstSym(n, -1);
    for (int s = 0; s < alphabet.size; ++s)
        if (firstSym[remap[s]] < 0) firstSym[remap[s]] = s;
    for (int c = 0; c < n; ++c)
        for (int q = 0; q < stateCount; ++q) table[static_cast<size_t>(q) * n + c] = cols[firstSym[c]][q];

    alphabet_ = std::move(alphabet);
    stateCount_ = stateCount;
    start_ = start;
    numClasses_ = n;
    classOf_ = std::move(remap);
    table_ = std::move(table);
    accepting_.assign(stateCount, false);
    for (int q : accepting) {
        if (q < 0 || q >= stateCount) throw std::invalid_argument("Dfa: accepting state out of range");
        accepting_[q] = true;
    }
    validate();
    normalize();
}

Dfa Dfa::fromTransitions(Alphabet alphabet, int stateCount, int start,
                         const std::vector<int>& accepting,
                         const std::vector<std::tuple<int, int, int>>& transitions) {
    std::vector<int> dense(static_cast<size_t>(stateCount) * alphabet.size, -1);
    for (auto [q, s, t] : transitions) {
        if (q < 0 || q >= stateCount || t < 0 || t >= stateCount || s < 0 || s >= alphabet.size)
            throw std::invalid_argument("Dfa: transition out of range");
        int& cell = dense[static_cast<size_t>(q) * alphabet.size + s];
        if (cell >= 0 && cell != t) throw std::invalid_argument("Dfa: conflicting transitions");
        cell = t;
    }
    for (int v : dense)
        if (v < 0) throw std::invalid_argument("Dfa: transition function must be total");
    return Dfa(std::move(alphabet), stateCount, start, accepting, dense);
}

Dfa Dfa::fromRuns(Alphabet alphabet, int stateCount, int start, const std::vector<int>& accepting,
                  const std::vector<std::tuple<int, int, int>>& runs) {
    if (stateCount < 1) throw std::invalid_argument("Dfa: stateCount must be >= 1");
    // per-state run lists, validated to start at symbol 0 and stay sorted
    std::vector<std::vector<std::pair<int, int>>> byState(stateCount);
    for (auto [q, s, t] : runs) {
        if (q < 0 || q >= stateCount || t < 0 || t >= stateCount || s < 0 || s >= alphabet.size)
            throw std::invalid_argument("Dfa: run out of range");
        auto& row = byState[q];
        if (!row.empty() && row.back().first >= s)
            throw std::invalid_argument("Dfa: runs must be sorted by symbol per state");
        row.push_back({s, t});
    }
    for (const auto& row : byState)
        if (row.empty() || row.front().first != 0)
            throw std::invalid_argument("Dfa: every state needs a run starting at symbol 0");

    // sweep symbols; the current transition column changes only at run starts
    std::vector<std::vector<std::pair<int, int>>> events(alphabet.size);  // symbol -> (state, target)
    std::vector<int> cur(stateCount);
    for (int q = 0; q < stateCount; ++q) {
        cur[q] = byState[q][0].second;
        for (size_t i = 1; i < byState[q].size(); ++i)
            events[byState[q][i].first].push_back({q, byState[q][i].second});
    }
    std::vector<int> classOf(alphabet.size);
    std::vector<std::vector<int>> columns;  // representative column per class
    std::unordered_map<uint64_t, std::vector<int>> byHash;
    auto mix = [](int q, int t) {
        uint64_t x = (static_cast<uint64_t>(q) << 32) ^ static_cast<uint32_t>(t);
        x *= 0x9e3779b97f4a7c15ull;
        x ^= x >> 29;
        x *= 0xbf58476d1ce4e5b9ull;
        return x ^ (x >> 32);
    };
    uint64_t hash = 0;
    for (int q = 0; q < stateCount; ++q) hash ^= mix(q, cur[q]);
    int currentClass = -1;
    for (int s = 0; s < alphabet.size; ++s) {
        bool changed = s == 0 || !events[s].empty();
        for (auto [q, t] : events[s]) {
            hash ^= mix(q, cur[q]);
            cur[q] = t;
            hash ^= mix(q, cur[q]);
        }
        if (changed) {
            currentClass = -1;
            auto& bucket = byHash[hash];
            for (int c : bucket)
                if (columns[c] == cur) {
                    currentClass = c;
                    break;
                }
            if (currentClass < 0) {
                currentClass = static_cast<int>(columns.size());
                columns.push_back(cur);
                bucket.push_back(currentClass);
            }
        }
        classOf[s] = currentClass;
    }
    int numClasses = static_cast<int>(columns.size());
    std::vector<int> table(static_cast<size_t>(stateCount) * numClasses);
    for (int c = 0; c < numClasses; ++c)
        for (int q = 0; q < stateCount; ++q) table[static_cast<size_t>(q) * numClasses + c] = columns[c][q];
    std::vector<bool> acc(stateCount, false);
    for (int q : accepting) {
        if (q < 0 || q >= stateCount) throw std::invalid_argument("Dfa: accepting state out of range");
        acc[q] = true;
    }
    return fromClassified(std::move(alphabet), std::move(classOf), numClasses, std::move(table), start,
                          std::move(acc));
}

std::vector<std::tuple<int, int, int>> Dfa::transitionRuns() const {
    std::vector<std::tuple<int, int, int>> runs;
    for (int q = 0; q < stateCount_; ++q) {
        int prev = -1;
        for (int s = 0; s < alphabet_.size; ++s) {
            int t = next(q, s);
            if (t != prev) {
                runs.emplace_back(q, s, t);
                prev = t;
            }
        }
    }
    return runs;
}

Dfa Dfa::fromClassified(Alphabet alphabet, std::vector<int> classOf, int numClasses,
                        std::vector<int> table, int start, std::vector<bool> accepting) {
    Dfa d;
    d.alphabet_ = std::move(alphabet);
    d.stateCount_ = static_cast<int>(accepting.size());
    d.start_ = start;
    d.numClasses_ = numClasses;
    d.classOf_ = std::move(classOf);
    d.table_ = std::move(table);
    d.accepting_ = std::move(accepting);
    d.validate();
    d.normalize();
    return d;
}

void Dfa::validate() const {
    if (stateCount_ < 1) throw std::invalid_argument("Dfa: empty state set");
    if (start_ < 0 || start_ >= stateCount_) throw std::invalid_argument("Dfa: start out of range");
    if (classOf_.size() != static_cast<size_t>(alphabet_.size))
        throw std::invalid_argument("Dfa: class map size mismatch");
    if (table_.size() != static_cast<size_t>(stateCount_) * numClasses_)
        throw std::invalid_argument("Dfa: table size mismatch");
    for (int c : classOf_)
        if (c < 0 || c >= numClasses_) throw std::invalid_argument("Dfa: class id out of range");
    for (int t : table_)
        if (t < 0 || t >= stateCount_) throw std::invalid_argument("Dfa: table target out of range");
}

void Dfa::normalize() {
    // Trim unreachable states.
    std::vector<int> order;
    std::vector<int> newId(stateCount_, -1);
    order.reserve(stateCount_);
    newId[start_] = 0;
    order.push_back(start_);
    for (size_t head = 0; head < order.size(); ++head) {
        int q = order[head];
        for (int c = 0; c < numClasses_; ++c) {
            int t = table_[static_cast<size_t>(q) * numClasses_ + c];
            if (newId[t] < 0) {
                newId[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    int n = static_cast<int>(order.size());

    // Merge classes that act identically on the reachable part.
    std::vector<std::vector<int>> cols(numClasses_, std::vector<int>(n));
    for (int c = 0; c < numClasses_; ++c)
        for (int i = 0; i < n; ++i) cols[c][i] = newId[table_[static_cast<size_t>(order[i]) * numClasses_ + c]];
    auto [classRemap, mergedCount] = groupColumns(cols);

    // Canonical class order: ascending least symbol.
    std::vector<int> minSym(mergedCount, alphabet_.size);
    for (int s = 0; s < alphabet_.size; ++s) minSym[classRemap[classOf_[s]]] = std::min(minSym[classRemap[classOf_[s]]], s);
    std::vector<int> byMin(mergedCount);
    for (int c = 0; c < mergedCount; ++c) byMin[c] = c;
    std::sort(byMin.begin(), byMin.end(), [&](int a, int b) { return minSym[a] < minSym[b]; });
    std::vector<int> classRank(mergedCount);
    for (int r = 0; r < mergedCount; ++r) classRank[byMin[r]] = r;

    std::vector<int> newClassOf(alphabet_.size);
    for (int s = 0; s < alphabet_.size; ++s) newClassOf[s] = classRank[classRemap[classOf_[s]]];

    // Re-run BFS with canonical class order for a canonical state numbering.
    std::vector<int> tmpTable(static_cast<size_t>(n) * mergedCount);
    {
        std::vector<int> repOldClass(mergedCount, -1);
        for (int oc = 0; oc < numClasses_; ++oc)
            if (repOldClass[classRemap[oc]] < 0) repOldClass[classRemap[oc]] = oc;
        for (int m = 0; m < mergedCount; ++m) {
            int rank = classRank[m];
            const std::vector<int>& col = cols[repOldClass[m]];
            for (int i = 0; i < n; ++i) tmpTable[static_cast<size_t>(i) * mergedCount + rank] = col[i];
        }
    }
    std::vector<int> order2;
    std::vector<int> newId2(n, -1);
    order2.reserve(n);
    newId2[0] = 0;  // state 0 is the (renumbered) start
    order2.push_back(0);
    for (size_t head = 0; head < order2.size(); ++head) {
        int q = order2[head];
        for (int c = 0; c < mergedCount; ++c) {
            int t = tmpTable[static_cast<size_t>(q) * mergedCount + c];
            if (newId2[t] < 0) {
                newId2[t] = static_cast<int>(order2.size());
                order2.push_back(t);
            }
        }
    }
    // All n states remain reachable (they were reached in pass one).
    std::vector<int> finalTable(static_cast<size_t>(n) * mergedCount);
    std::vector<bool> finalAcc(n, false);
    for (int i = 0; i < n; ++i) {
        int q = order2[i];
        for (int c = 0; c < mergedCount; ++c)
            finalTable[static_cast<size_t>(i) * mergedCount + c] = newId2[tmpTable[static_cast<size_t>(q) * mergedCount + c]];
        finalAcc[i] = accepting_[order[q]];
    }

    stateCount_ = n;
    start_ = 0;
    numClasses_ = mergedCount;
    classOf_ = std::move(newClassOf);
    table_ = std::move(finalTable);
    accepting_ = std::move(finalAcc);

    classSize_.assign(numClasses_, 0);
    classMinSym_.assign(numClasses_, alphabet_.size);
    for (int s = 0; s < alphabet_.size; ++s) {
        classSize_[classOf_[s]]++;
        classMinSym_[classOf_[s]] = std::min(classMinSym_[classOf_[s]], s);
    }
}

bool Dfa::accepts(std::span<const int> word) const {
    int q = start_;
    for (int s : word) {
        if (s < 0 || s >= alphabet_.size) throw std::invalid_argument("accepts: symbol out of range");
        q = next(q, s);
    }
    return accepting_[q];
}

std::vector<bool> Dfa::deadStates() const {
    // Reverse reachability from accepting states.
    std::vector<std::vector<int>> rev(stateCount_);
    for (int q = 0; q < stateCount_; ++q)
        for (int c = 0; c < numClasses_; ++c) rev[nextByClass(q, c)].push_back(q);
    std::vector<bool> alive(stateCount_, false);
    std::queue<int> bfs;
    for (int q = 0; q < stateCount_; ++q)
        if (accepting_[q]) {
            alive[q] = true;
            bfs.push(q);
        }
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop();
        for (int pIdx : rev[q])
            if (!alive[pIdx]) {
                alive[pIdx] = true;
                bfs.push(pIdx);
            }
    }
    std::vector<bool> dead(stateCount_);
    for (int q = 0; q < stateCount_; ++q) dead[q] = !alive[q];
    return dead;
}

Nfa::Nfa(Alphabet alphabet, int stateCount, std::vector<int> startSet, std::vector<int> accepting,
         const std::vector<std::tuple<int, int, int>>& transitions) {
    if (stateCount < 1) throw std::invalid_argument("Nfa: stateCount must be >= 1");
    alphabet_ = std::move(alphabet);
    stateCount_ = stateCount;
    // Start with identity classes; grouping happens via the symbol columns.
    std::vector<std::vector<std::vector<int>>> bySymbol(
        stateCount, std::vector<std::vector<int>>(alphabet_.size));
    for (auto [q, s, t] : transitions) {
        if (q < 0 || q >= stateCount || t < 0 || t >= stateCount || s < 0 || s >= alphabet_.size)
            throw std::invalid_argument("Nfa: transition out of range");
        bySymbol[q][s].push_back(t);
    }
    for (auto& row : bySymbol)
        for (auto& set : row) {
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
        }
    // Group symbols whose move columns coincide across all states.
    std::vector<std::vector<int>> cols(alphabet_.size);
    for (int s = 0; s < alphabet_.size; ++s) {
        auto& col = cols[s];
        for (int q = 0; q < stateCount; ++q) {
            col.push_back(static_cast<int>(bySymbol[q][s].size()));
            col.insert(col.end(), bySymbol[q][s].begin(), bySymbol[q][s].end());
        }
    }
    auto [remap, n] = groupColumns(cols);
    numClasses_ = n;
    classOf_ = std::move(remap);
    std::vector<int> firstSym(n, -1);
    for (int s = 0; s < alphabet_.size; ++s)
        if (firstSym[classOf_[s]] < 0) firstSym[classOf_[s]] = s;
    moves_.assign(stateCount, std::vector<std::vector<int>>(n));
    for (int q = 0; q < stateCount; ++q)
        for (int c = 0; c < n; ++c) moves_[q][c] = bySymbol[q][firstSym[c]];

    std::sort(startSet.begin(), startSet.end());
    startSet.erase(std::unique(startSet.begin(), startSet.end()), startSet.end());
    for (int q : startSet)
        if (q < 0 || q >= stateCount) throw std::invalid_argument("Nfa: start state out of range");
    startSet_ = std::move(startSet);
    accepting_.assign(stateCount, false);
    for (int q : accepting) {
        if (q < 0 || q >= stateCount) throw std::invalid_argument("Nfa: accepting state out of range");
        accepting_[q] = true;
    }
}

Nfa Nfa::fromClassified(Alphabet alphabet, std::vector<int> classOf, int numClasses,
                        std::vector<std::vector<std::vector<int>>> moves, std::vector<int> startSet,
                        std::vector<bool> accepting) {
    Nfa n;
    n.alphabet_ = std::move(alphabet);
    n.stateCount_ = static_cast<int>(accepting.size());
    n.numClasses_ = numClasses;
    n.classOf_ = std::move(classOf);
    n.moves_ = std::move(moves);
    std::sort(startSet.begin(), startSet.end());
    n.startSet_ = std::move(startSet);
    n.accepting_ = std::move(accepting);
    return n;
}

bool Nfa::accepts(std::span<const int> word) const {
    std::vector<int> cur = startSet_;
    for (int s : word) {
        if (s < 0 || s >= alphabet_.size) throw std::invalid_argument("accepts: symbol out of range");
        int c = classOf_[s];
        std::vector<int> nxt;
        for (int q : cur) {
            const auto& m = moves_[q][c];
            nxt.insert(nxt.end(), m.begin(), m.end());
        }
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        cur = std::move(nxt);
    }
    for (int q : cur)
        if (accepting_[q]) return true;
    return false;
}

Dfa determinize(const Nfa& n) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    auto intern = [&](std::vector<int> s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(subsets.size());
        ids.emplace(s, id);
        subsets.push_back(std::move(s));
        return id;
    };
    intern(n.startSet());
    std::vector<int> table;
    for (size_t head = 0; head < subsets.size(); ++head) {
        for (int c = 0; c < n.numClasses(); ++c) {
            std::vector<int> nxt;
            for (int q : subsets[head]) {
                const auto& m = n.movesByClass(q, c);
                nxt.insert(nxt.end(), m.begin(), m.end());
            }
            std::sort(nxt.begin(), nxt.end());
            nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
            table.push_back(intern(std::move(nxt)));
        }
    }
    int count = static_cast<int>(subsets.size());
    std::vector<bool> acc(count, false);
    for (int i = 0; i < count; ++i)
        for (int q : subsets[i])
            if (n.isAccepting(q)) {
                acc[i] = true;
                break;
            }
    std::vector<int> classOf(n.alphabet().size);
    for (int s = 0; s < n.alphabet().size; ++s) classOf[s] = n.classOf(s);
    return Dfa::fromClassified(n.alphabet(), std::move(classOf), n.numClasses(), std::move(table), 0,
                               std::move(acc));
}

Dfa minimize(const Dfa& d) {
    int n = d.stateCount();
    int C = d.numClasses();
    std::vector<int> part(n);
    for (int q = 0; q < n; ++q) part[q] = d.isAccepting(q) ? 1 : 0;
    int parts = 2;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int q = 0; q < n; ++q) {
            auto& s = sig[q];
            s.reserve(C + 1);
            s.push_back(part[q]);
            for (int c = 0; c < C; ++c) s.push_back(part[d.nextByClass(q, c)]);
        }
        auto [remap, count] = groupColumns(sig);
        if (count == parts) {
            part = std::move(remap);
            break;
        }
        part = std::move(remap);
        parts = count;
    }
    std::vector<int> table(static_cast<size_t>(parts) * C, -1);
    std::vector<bool> acc(parts, false);
    for (int q = 0; q < n; ++q) {
        int p = part[q];
        acc[p] = d.isAccepting(q);
        for (int c = 0; c < C; ++c) table[static_cast<size_t>(p) * C + c] = part[d.nextByClass(q, c)];
    }
    std::vector<int> classOf = d.classMap();
    return Dfa::fromClassified(d.alphabet(), std::move(classOf), C, std::move(table), part[d.start()],
                               std::move(acc));
}

Dfa complement(const Dfa& d) {
    std::vector<bool> acc(d.stateCount());
    for (int q = 0; q < d.stateCount(); ++q) acc[q] = !d.isAccepting(q);
    std::vector<int> classOf = d.classMap();
    std::vector<int> table(static_cast<size_t>(d.stateCount()) * d.numClasses());
    for (int q = 0; q < d.stateCount(); ++q)
        for (int c = 0; c < d.numClasses(); ++c) table[static_cast<size_t>(q) * d.numClasses() + c] = d.nextByClass(q, c);
    return Dfa::fromClassified(d.alphabet(), std::move(classOf), d.numClasses(), std::move(table),
                               d.start(), std::move(acc));
}

namespace {

Dfa product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool)) {
    if (a.alphabet().size != b.alphabet().size)
        throw std::invalid_argument("product: alphabet mismatch");
    int sz = a.alphabet().size;
    // Refine the two class partitions into a common one.
    std::map<std::pair<int, int>, int> pairId;
    std::vector<int> classOf(sz);
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < sz; ++s) {
        auto key = std::make_pair(a.classOf(s), b.classOf(s));
        auto it = pairId.find(key);
        if (it == pairId.end()) {
            it = pairId.emplace(key, static_cast<int>(pairs.size())).first;
            pairs.push_back(key);
        }
        classOf[s] = it->second;
    }
    int C = static_cast<int>(pairs.size());

    std::map<std::pair<int, int>, int> stateId;
    std::vector<std::pair<int, int>> states;
    auto intern = [&](int qa, int qb) {
        auto key = std::make_pair(qa, qb);
        auto it = stateId.find(key);
        if (it != stateId.end()) return it->second;
        int id = static_cast<int>(states.size());
        stateId.emplace(key, id);
        states.push_back(key);
        return id;
    };
    intern(a.start(), b.start());
    std::vector<int> table;
    for (size_t head = 0; head < states.size(); ++head) {
        auto [qa, qb] = states[head];
        for (int c = 0; c < C; ++c)
            table.push_back(intern(a.nextByClass(qa, pairs[c].first), b.nextByClass(qb, pairs[c].second)));
    }
    int n = static_cast<int>(states.size());
    std::vector<bool> acc(n);
    for (int i = 0; i < n; ++i) acc[i] = combine(a.isAccepting(states[i].first), b.isAccepting(states[i].second));
    return Dfa::fromClassified(a.alphabet(), std::move(classOf), C, std::move(table), 0, std::move(acc));
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa unite(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x || y; });
}

bool isEmpty(const Dfa& d) {
    // States are reachable by construction, so scan for an accepting one.
    for (int q = 0; q < d.stateCount(); ++q)
        if (d.isAccepting(q)) return false;
    return true;
}

bool equivalent(const Dfa& a, const Dfa& b) {
    return isEmpty(product(a, b, [](bool x, bool y) { return x != y; }));
}

mpz_class countWords(const Dfa& d, int n) {
    if (n < 0) throw std::invalid_argument("countWords: negative length");
    std::vector<mpz_class> cur(d.stateCount(), 0);
    cur[d.start()] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<mpz_class> nxt(d.stateCount(), 0);
        for (int q = 0; q < d.stateCount(); ++q) {
            if (cur[q] == 0) continue;
            for (int c = 0; c < d.numClasses(); ++c)
                nxt[d.nextByClass(q, c)] += cur[q] * static_cast<long>(d.classSize(c));
        }
        cur = std::move(nxt);
    }
    mpz_class total = 0;
    for (int q = 0; q < d.stateCount(); ++q)
        if (d.isAccepting(q)) total += cur[q];
    return total;
}

std::vector<Word> enumerateWords(const Dfa& d, int maxLen) {
    if (maxLen < 0) throw std::invalid_argument("enumerateWords: negative length");
    // canAccept[k][q]: some length-k word leads from q to acceptance.
    std::vector<std::vector<bool>> canAccept(maxLen + 1, std::vector<bool>(d.stateCount(), false));
    for (int q = 0; q < d.stateCount(); ++q) canAccept[0][q] = d.isAccepting(q);
    for (int k = 1; k <= maxLen; ++k)
        for (int q = 0; q < d.stateCount(); ++q)
            for (int c = 0; c < d.numClasses() && !canAccept[k][q]; ++c)
                if (canAccept[k - 1][d.nextByClass(q, c)]) canAccept[k][q] = true;

    std::vector<Word> out;
    Word word;
    auto dfs = [&](auto&& self, int q, int remaining) -> void {
        if (remaining == 0) {
            if (d.isAccepting(q)) out.push_back(word);
            return;
        }
        for (int s = 0; s < d.alphabet().size; ++s) {
            int t = d.next(q, s);
            if (!canAccept[remaining - 1][t]) continue;
            word.push_back(s);
            self(self, t, remaining - 1);
            word.pop_back();
        }
    };
    for (int len = 0; len <= maxLen; ++len)
        if (canAccept[len][d.start()]) dfs(dfs, d.start(), len);
    return out;
}

Dfa allWordsDfa(const Alphabet& a) {
    std::vector<int> dense(a.size, 0);
    return Dfa(a, 1, 0, {0}, dense);
}

Dfa emptyLanguageDfa(const Alphabet& a) {
    std::vector<int> dense(a.size, 0);
    return Dfa(a, 1, 0, {}, dense);
}

Dfa singletonDfa(const Alphabet& a, const Word& w) {
    int n = static_cast<int>(w.size());
    int sink = n + 1;
    std::vector<int> dense(static_cast<size_t>(n + 2) * a.size, sink);
    for (int i = 0; i < n; ++i) {
        if (w[i] < 0 || w[i] >= a.size) throw std::invalid_argument("singletonDfa: symbol out of range");
        dense[static_cast<size_t>(i) * a.size + w[i]] = i + 1;
    }
    return Dfa(a, n + 2, 0, {n}, dense);
}

std::string wordToString(const Alphabet& a, const Word& w) {
    std::string out;
    bool singleChar = true;
    if (a.labels.empty()) {
        singleChar = a.size <= 10;
    } else {
        for (const auto& l : a.labels)
            if (l.size() != 1) singleChar = false;
    }
    for (size_t i = 0; i < w.size(); ++i) {
        if (a.labels.empty()) {
            if (!singleChar && i > 0) out += ',';
            out += std::to_string(w[i]);
        } else {
            out += a.labels[w[i]];
        }
    }
    return out;
}

Word wordFromString(const Alphabet& a, const std::string& s) {
    Word w;
    if (s.empty() || s == "eps" || s == "ε") return w;
    if (s.find(',') != std::string::npos && s.find('(') == std::string::npos) {
        // comma-separated numeric codes
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            w.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else if (!a.labels.empty()) {
        // greedy longest label match
        size_t pos = 0;
        while (pos < s.size()) {
            int best = -1;
            size_t bestLen = 0;
            for (int sym = 0; sym < a.size; ++sym) {
                const std::string& l = a.labels[sym];
                if (l.size() > bestLen && s.compare(pos, l.size(), l) == 0) {
                    best = sym;
                    bestLen = l.size();
                }
            }
            if (best < 0) throw std::invalid_argument("cannot parse word: '" + s + "' at offset " + std::to_string(pos));
            w.push_back(best);
            pos += bestLen;
        }
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("cannot parse word: '" + s + "'");
            w.push_back(ch - '0');
        }
    }
    for (int sym : w)
        if (sym < 0 || sym >= a.size) throw std::invalid_argument("word symbol out of range: '" + s + "'");
    return w;
}

}  // namespace wordauto
