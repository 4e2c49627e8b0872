// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "wordauto/bundle.hpp"
#include "wordauto/cocycle.hpp"
#include "wordauto/commands.hpp"
#include "wordauto/compile.hpp"
#include "wordauto/presentations.hpp"
#include "wordauto/serialization.hpp"

using namespace wordauto;
namespace fs = std::filesystem;

namespace {

struct Harness {
    int failures = 0;

    void run(int number, const std::string& title, double budgetSeconds,
             const std::function<std::string()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = true;
        try {
            detail = body();
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (pass && budgetSeconds > 0 && dt > budgetSeconds) {
            pass = false;
            detail += " [exceeded time budget]";
        }
        std::ostringstream line;
        line << "[criterion " << number << "] " << (pass ? "PASS" : "FAIL") << " " << title << ": "
             << detail << " (" << std::fixed;
        line.precision(2);
        line << dt << " s";
        if (budgetSeconds > 0) line << ", budget " << static_cast<int>(budgetSeconds) << " s";
        line << ")";
        std::cout << line.str() << std::endl;
        if (!pass) ++failures;
    }
};

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

std::string readFile(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ----- criterion 1: adder fidelity ------------------------------------------

std::string adderFidelity(const fs::path& tmp) {
    Presentation built = natAdd();
    saveBundle(built, tmp / "nat-add");
    Presentation P = loadBundle(tmp / "nat-add");

    // eval is forced to agree with a+b on every pair once (i) Op is a partial
    // function and (ii) Op accepts every true sum; both are checked.
    require(decide(functionalitySentence(), P), "Op is not functional");

    const Dfa& op = P.relation("Op").dfa();
    const int RADIX = 3, PAD = 2;
    auto bitLen = [](uint32_t v) { return v == 0 ? 0 : 32 - __builtin_clz(v); };
    for (uint32_t a = 0; a < 4096; ++a) {
        int la = bitLen(a);
        for (uint32_t b = 0; b < 4096; ++b) {
            uint32_t c = a + b;
            int len = std::max(la, std::max(bitLen(b), bitLen(c)));
            int q = op.start();
            for (int j = 0; j < len; ++j) {
                int dx = j < la ? static_cast<int>((a >> j) & 1) : PAD;
                int dy = j < bitLen(b) ? static_cast<int>((b >> j) & 1) : PAD;
                int dz = j < bitLen(c) ? static_cast<int>((c >> j) & 1) : PAD;
                q = op.next(q, dx + RADIX * dy + RADIX * RADIX * dz);
            }
            if (!op.isAccepting(q))
                throw std::runtime_error("Op rejects " + std::to_string(a) + "+" + std::to_string(b));
        }
    }

    OpEvaluator eval(P);
    require(eval.product(natEncode(5), natEncode(19)) == natEncode(24), "5+19 != 24");
    for (uint64_t a = 0; a < 256; ++a)
        for (uint64_t b = 0; b < 256; ++b)
            if (natDecode(eval.product(natEncode(a), natEncode(b))) != a + b)
                throw std::runtime_error("eval mismatch at " + std::to_string(a) + "+" +
                                         std::to_string(b));
    return "4096^2 sums affirmed, functionality decided, 256^2 full evaluations";
}

// ----- criteria 2 and 3: crosschecks -----------------------------------------

std::string crosscheckCriterion(const std::string& kind, int p, int maxLen, uint64_t expectPairs) {
    Presentation P = kind == "ep" ? epPresentation(p) : hpPresentation(p);
    CrosscheckResult r = crosscheckPresentation(P, maxLen);
    require(r.pass, "counterexample at " + r.counterexample);
    require(r.pairsChecked == expectPairs,
            "expected " + std::to_string(expectPairs) + " pairs, checked " +
                std::to_string(r.pairsChecked));
    return std::to_string(r.pairsChecked) + " pairs agree with the oracle";
}

// ----- criterion 4: axiom suite ----------------------------------------------

std::string axiomSuite(Harness& h) {
    struct Case {
        const char* name;
        FormulaPtr sentence;
        bool expected;
    };
    int decided = 0;
    for (const auto& [label, P] : {std::pair<std::string, Presentation>{"E_3", epPresentation(3)},
                                   {"H_3", hpPresentation(3)}}) {
        std::vector<Case> cases = {
            {"associativity", assocSentence(), true},
            {"two-sided identity", identitySentence(), true},
            {"inverses", inverseSentence(), true},
            {"exponent 3", exponentSentence(3), true},
            {"class-2 law", classTwoSentence(), true},
            {"commutativity", commutativitySentence(), false},
        };
        for (const auto& c : cases) {
            auto t0 = std::chrono::steady_clock::now();
            bool result = decide(c.sentence, P);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            require(result == c.expected, label + " " + c.name + " decided " +
                                              (result ? "true" : "false") + ", expected " +
                                              (c.expected ? "true" : "false"));
            require(dt < 120.0, label + " " + c.name + " exceeded the per-sentence budget");
            ++decided;
        }
    }
    (void)h;
    return std::to_string(decided) + " sentences decided as expected, each within 120 s";
}

// ----- criterion 5: defining relations ---------------------------------------

std::string definingRelations() {
    Presentation E = epPresentation(3);
    int checked = 0;
    for (int i = 0; i <= 3; ++i)
        for (int k = i + 1; k <= 3; ++k) {
            require(decide(commutatorEqualsSentence(i, k, "is_z"), E),
                    "E_3: [x_" + std::to_string(i) + ",x_" + std::to_string(k) + "] != z");
            ++checked;
        }
    Presentation H = hpPresentation(3);
    for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < k; ++i) {
            require(decide(commutatorEqualsSentence(i, k, "is_z" + std::to_string(k)), H),
                    "H_3: [x_" + std::to_string(i) + ",x_" + std::to_string(k) + "] != z_" +
                        std::to_string(k));
            ++checked;
        }
    return std::to_string(checked) + " commutator relations hold";
}

// ----- criterion 6: centre computations --------------------------------------

std::string centreComputations() {
    Presentation E = epPresentation(3);
    Dfa centreE = defineSet(centreFormula(), E);
    auto wordsE = enumerateWords(centreE, 6);
    require(wordsE.size() == 3, "E_3 centre has " + std::to_string(wordsE.size()) + " words");
    require(wordsE[0] == Word{0} && wordsE[1] == Word{1} && wordsE[2] == Word{2},
            "E_3 centre is not {0,1,2}");

    Presentation H = hpPresentation(3);
    Dfa centreH = defineSet(centreFormula(), H);
    auto got = enumerateWords(centreH, 6);
    std::vector<Word> expected;
    for (const Word& w : enumerateWords(H.domain, 6))
        if (decodeWord(NilKind::H, 3, 8, w).isCentral()) expected.push_back(w);
    require(got == expected, "H_3 centre words differ from the oracle-central encodings");
    return "E_3 centre = {0,1,2}; H_3 centre matches " + std::to_string(got.size()) +
           " oracle-central words up to length 6";
}

// ----- criterion 7: cocycle suite ---------------------------------------------

std::string cocycleSuite() {
    require(verifyCocycle(epCocycle(3)), "E_3 cocycle identity fails");
    require(verifyCocycle(hpCocycle(3)), "H_3 cocycle identity fails");
    require(verifyCocycle(zeroCocycle(vectorGroup(3, "q-vectors"), zpDigits(3), "zero3")),
            "zero cocycle identity fails");
    CocycleSpec ex12 = example12Cocycle();
    require(verifyCocycle(ex12), "example-12 cocycle identity fails");

    // E_3 as an extension vs the direct presentation, component length <= 3
    CocycleSpec spec = epCocycle(3);
    Presentation ext = buildExtension(spec);
    OpEvaluator eval(ext);
    uint64_t pairs = 0;
    std::vector<NilElement> elems;
    for (int code = 0; code < 81; ++code) {
        int c = code;
        NilElement a = NilElement::identity(NilKind::E, 3, 8);
        for (int i = 0; i < 3; ++i) {
            a.alpha[i] = c % 3;
            c /= 3;
        }
        a.central[0] = c % 3;
        elems.push_back(std::move(a));
    }
    auto toPair = [&](const NilElement& a) {
        Word q = a.alpha;
        while (!q.empty() && q.back() == 0) q.pop_back();
        return extensionWord(spec, q, Word{a.central[0]});
    };
    for (const auto& x : elems)
        for (const auto& y : elems) {
            ++pairs;
            if (eval.product(toPair(x), toPair(y)) != toPair(multiply(x, y)))
                throw std::runtime_error("extension product differs from E_3 at pair " +
                                         std::to_string(pairs));
        }

    Presentation L = example12();
    require(!decide(commutativitySentence(), L), "example-12 group decided commutative");
    require(decide("(exists a (exists b (and (is_y0 a) (Op a a b) (is_e b))))", L),
            "example-12: y0^2 != e");
    return "four cocycles verified; " + std::to_string(pairs) +
           " extension products match E_3; example-12 noncommutative with y0^2 = e";
}

// ----- criterion 8: census ----------------------------------------------------

std::string censusCriterion() {
    for (int p : {3, 5}) {
        Presentation P = epPresentation(p);
        CensusReport report = censusReport(P.domain, 8, p, 2);
        mpz_class expected = 1;
        for (int m = 1; m <= 8; ++m) {
            expected *= p;
            require(report.rows[m].cumulative == expected,
                    "ep(" + std::to_string(p) + ") cumulative count at length " + std::to_string(m) +
                        " is not p^m");
        }
        require(report.overtakeN > 0, "no overtake point found for p = " + std::to_string(p));
        require(report.overtakeDemand > report.overtakeSupply, "overtake report inconsistent");
    }
    require(freeGroupDemand(3, 4) == 729, "demand series: 3^(4*3/2) != 729");
    return "cumulative counts are p^m for p in {3,5}, m <= 8; demand 729 at (p=3, n=4); "
           "demand overtakes the 2n-length supply";
}

// ----- criterion 9: automata property suite -----------------------------------

std::string automataProperties(uint64_t seed) {
    std::mt19937 rng(static_cast<uint32_t>(seed));
    uint64_t wordsChecked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int m = std::uniform_int_distribution<int>(2, 4)(rng);
        int nStates = std::uniform_int_distribution<int>(1, 8)(rng);
        // random NFA
        std::vector<std::tuple<int, int, int>> ntrans;
        for (int q = 0; q < nStates; ++q)
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < nStates; ++t)
                    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) ntrans.emplace_back(q, s, t);
        std::vector<int> nstart, nacc;
        for (int q = 0; q < nStates; ++q) {
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) nstart.push_back(q);
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) nacc.push_back(q);
        }
        if (nstart.empty()) nstart.push_back(0);
        Nfa nfa(Alphabet(m), nStates, nstart, nacc, ntrans);
        // two random DFAs
        auto randomDfa = [&]() {
            int n = std::uniform_int_distribution<int>(1, 8)(rng);
            std::vector<int> dense(static_cast<size_t>(n) * m);
            for (auto& t : dense) t = std::uniform_int_distribution<int>(0, n - 1)(rng);
            std::vector<int> acc;
            for (int q = 0; q < n; ++q)
                if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) acc.push_back(q);
            return Dfa(Alphabet(m), n, std::uniform_int_distribution<int>(0, n - 1)(rng), acc, dense);
        };
        Dfa a = randomDfa();
        Dfa b = randomDfa();
        Dfa det = determinize(nfa);
        Dfa minA = minimize(a);
        Dfa compA = complement(a);
        Dfa inter = intersect(a, b);
        Dfa uni = unite(a, b);
        require(minA.stateCount() <= a.stateCount(), "minimize grew the automaton");

        // NFA subset masks for the oracle
        std::vector<uint16_t> moveMask(static_cast<size_t>(nStates) * m, 0);
        for (int q = 0; q < nStates; ++q)
            for (int s = 0; s < m; ++s)
                for (int t : nfa.movesByClass(q, nfa.classOf(s)))
                    moveMask[static_cast<size_t>(q) * m + s] |= static_cast<uint16_t>(1u << t);
        uint16_t startMask = 0, accMask = 0;
        for (int q : nfa.startSet()) startMask |= static_cast<uint16_t>(1u << q);
        for (int q = 0; q < nStates; ++q)
            if (nfa.isAccepting(q)) accMask |= static_cast<uint16_t>(1u << q);

        struct Node {
            uint16_t subset;
            int qa, qb, qdet, qmin, qcomp, qint, quni;
        };
        auto check = [&](const Node& n) {
            bool oracleNfa = (n.subset & accMask) != 0;
            require(det.isAccepting(n.qdet) == oracleNfa, "determinize disagrees with subset simulation");
            bool accA = a.isAccepting(n.qa);
            bool accB = b.isAccepting(n.qb);
            require(minA.isAccepting(n.qmin) == accA, "minimize changed the language");
            require(compA.isAccepting(n.qcomp) == !accA, "complement disagrees");
            require(inter.isAccepting(n.qint) == (accA && accB), "intersection disagrees");
            require(uni.isAccepting(n.quni) == (accA || accB), "union disagrees");
            ++wordsChecked;
        };
        std::function<void(const Node&, int)> dfs = [&](const Node& n, int depth) {
            check(n);
            if (depth == 8) return;
            for (int s = 0; s < m; ++s) {
                Node next;
                uint16_t sub = 0;
                for (int q = 0; q < nStates; ++q)
                    if (n.subset & (1u << q)) sub |= moveMask[static_cast<size_t>(q) * m + s];
                next.subset = sub;
                next.qa = a.next(n.qa, s);
                next.qb = b.next(n.qb, s);
                next.qdet = det.next(n.qdet, s);
                next.qmin = minA.next(n.qmin, s);
                next.qcomp = compA.next(n.qcomp, s);
                next.qint = inter.next(n.qint, s);
                next.quni = uni.next(n.quni, s);
                dfs(next, depth + 1);
            }
        };
        Node root{startMask, a.start(), b.start(), det.start(), minA.start(), compA.start(),
                  inter.start(), uni.start()};
        dfs(root, 0);
    }
    return "500 seeded automata, " + std::to_string(wordsChecked) + " word checks, zero failures";
}

// ----- criterion 10: determinism ----------------------------------------------

std::string determinism(const fs::path& tmp) {
    std::vector<std::string> kinds = {"nat-add", "ep"};
    for (int round = 0; round < 2; ++round) {
        BuildOptions opt;
        opt.p = 3;
        for (const auto& kind : kinds) {
            opt.kind = kind;
            saveBundle(buildPresentation(opt), tmp / ("det" + std::to_string(round)) / kind);
        }
    }
    int filesCompared = 0;
    for (const auto& kind : kinds) {
        fs::path d0 = tmp / "det0" / kind;
        fs::path d1 = tmp / "det1" / kind;
        for (const auto& entry : fs::directory_iterator(d0)) {
            std::string name = entry.path().filename().string();
            require(fs::exists(d1 / name), "second build is missing " + name);
            require(readFile(entry.path()) == readFile(d1 / name),
                    kind + "/" + name + " differs between runs");
            ++filesCompared;
        }
    }
    // repeated in-memory export of the same relation is also byte-identical
    Presentation P = loadBundle(tmp / "det0" / "nat-add");
    require(relationToJson(P.relation("Op")) == relationToJson(loadBundle(tmp / "det1" / "nat-add").relation("Op")),
            "re-exported Op json differs");
    return std::to_string(filesCompared) + " bundle files byte-identical across two builds";
}

}  // namespace

int main(int argc, char** argv) {
    uint64_t seed = 20250601;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::stoull(argv[++i]);
    }
    fs::path tmp = fs::temp_directory_path() / "wordauto-acceptance";
    fs::remove_all(tmp);
    fs::create_directories(tmp);

    Harness h;
    h.run(1, "adder fidelity (a,b < 4096, LSB-first)", 5.0, [&] { return adderFidelity(tmp); });
    h.run(2, "E_3 fidelity, exhaustive to length 3", 30.0,
          [&] { return crosscheckCriterion("ep", 3, 3, 729); });
    h.run(2, "E_5 fidelity, exhaustive to length 3", 30.0,
          [&] { return crosscheckCriterion("ep", 5, 3, 15625); });
    h.run(3, "H_3 fidelity, exhaustive to length 3", 60.0,
          [&] { return crosscheckCriterion("hp", 3, 3, 59049); });
    h.run(4, "axiom suite on E_3 and H_3", 0, [&] { return axiomSuite(h); });
    h.run(5, "defining commutator relations", 0, definingRelations);
    h.run(6, "centre computations", 0, centreComputations);
    h.run(7, "cocycle suite", 0, cocycleSuite);
    h.run(8, "growth census", 0, censusCriterion);
    h.run(9, "automata-core property suite", 0, [&] { return automataProperties(seed); });
    h.run(10, "build determinism", 0, [&] { return determinism(tmp); });

    if (h.failures) {
        std::cout << h.failures << " criterion(s) FAILED" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria PASS" << std::endl;
    return 0;
}
