#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "wordauto/bundle.hpp"
#include "wordauto/commands.hpp"
#include "wordauto/compile.hpp"
#include "wordauto/presentations.hpp"
#include "wordauto/serialization.hpp"

using namespace wordauto;

namespace {

int runBuild(const BuildOptions& opt, const std::string& outDir) {
    Presentation P = buildPresentation(opt);
    saveBundle(P, outDir);
    if (opt.kind == "ut3" || (opt.kind == "power" && opt.table == "ut3"))
        saveGroupTable(ut3(opt.p), std::filesystem::path(outDir) / "table.json");
    if (opt.kind == "power" && opt.table == "cyclic")
        saveGroupTable(cyclicGroup(opt.order), std::filesystem::path(outDir) / "table.json");
    if (opt.kind == "example12")
        saveCocycleSpec(example12Cocycle(), std::filesystem::path(outDir) / "cocycle");
    std::cout << "wrote " << P.name << " (" << P.relations.size() << " relations, domain "
              << P.domain.stateCount() << " states) to " << outDir << "\n";
    return 0;
}

std::string displayWord(const Alphabet& a, const Word& w) {
    std::string s = wordToString(a, w);
    return s.empty() ? "eps" : s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word-automatic structures: build presentations, decide sentences, run checks"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a presentation bundle");
    BuildOptions opt;
    std::string outDir = "bundle";
    build->add_option("kind", opt.kind, "nat-add | int-add | ep | hp | power | ut3 | example12")
        ->required();
    build->add_option("--p", opt.p, "odd prime parameter for ep/hp/ut3");
    build->add_option("--order", opt.order, "cyclic group order for power");
    build->add_option("--table", opt.table, "power table: cyclic | ut3");
    build->add_option("--out", outDir, "output directory");

    // decide
    auto* decideCmd = app.add_subcommand("decide", "decide a closed first-order sentence");
    std::string bundleDir, formulaText, axiomName, commutatorSpec;
    decideCmd->add_option("bundle", bundleDir, "bundle directory")->required();
    decideCmd->add_option("--formula", formulaText, "sentence in s-expression syntax");
    decideCmd->add_option("--axiom", axiomName,
                          "assoc | identity | inverse | commutative | exponent | class2 | "
                          "totality | functionality");
    decideCmd->add_option("--commutator", commutatorSpec,
                          "i,k,target: decide [x_i,x_k] = target constant, e.g. 0,1,is_z");

    // eval
    auto* evalCmd = app.add_subcommand("eval", "evaluate the group operation on two domain words");
    std::string evalBundle, wordX, wordY;
    evalCmd->add_option("bundle", evalBundle)->required();
    evalCmd->add_option("x", wordX, "first operand (use 'eps' for the empty word)")->required();
    evalCmd->add_option("y", wordY, "second operand")->required();

    // crosscheck
    auto* crossCmd = app.add_subcommand("crosscheck", "compare Op against the symbolic oracle");
    std::string crossBundle;
    int maxLen = 3;
    crossCmd->add_option("bundle", crossBundle)->required();
    crossCmd->add_option("--max-len", maxLen, "maximum word length");

    // census
    auto* censusCmd = app.add_subcommand("census", "per-length domain counts and the demand series");
    std::string censusBundle, censusFormat = "text";
    int censusLen = 8, censusP = 0, censusFactor = 2;
    censusCmd->add_option("bundle", censusBundle)->required();
    censusCmd->add_option("--max-len", censusLen);
    censusCmd->add_option("--p", censusP, "compare against p^(n(n-1)/2)");
    censusCmd->add_option("--factor", censusFactor, "supply length bound factor c in c*n");
    censusCmd->add_option("--format", censusFormat, "text | json");

    // export
    auto* exportCmd = app.add_subcommand("export", "export a relation or the domain automaton");
    std::string exportBundle, exportRel = "Op", exportFormat = "json", exportOut;
    exportCmd->add_option("bundle", exportBundle)->required();
    exportCmd->add_option("--relation", exportRel, "relation name, or 'domain'");
    exportCmd->add_option("--format", exportFormat, "json | dot");
    exportCmd->add_option("--out", exportOut, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return runBuild(opt, outDir);

        if (decideCmd->parsed()) {
            Presentation P = loadBundle(bundleDir);
            FormulaPtr sentence;
            if (!formulaText.empty()) {
                sentence = parseFormula(formulaText);
            } else if (!axiomName.empty()) {
                sentence = namedSentence(axiomName, P);
            } else if (!commutatorSpec.empty()) {
                int i = 0, k = 0;
                char c1 = 0, c2 = 0;
                std::string target;
                std::istringstream is(commutatorSpec);
                if (!(is >> i >> c1 >> k >> c2) || c1 != ',' || c2 != ',' || !std::getline(is, target))
                    throw std::invalid_argument("expected --commutator i,k,target");
                sentence = commutatorEqualsSentence(i, k, target);
            } else {
                throw std::invalid_argument("decide needs --formula, --axiom or --commutator");
            }
            std::cout << (decide(sentence, P) ? "true" : "false") << "\n";
            return 0;
        }

        if (evalCmd->parsed()) {
            Presentation P = loadBundle(evalBundle);
            OpEvaluator eval(P);
            Word x = wordFromString(P.base, wordX == "eps" ? "" : wordX);
            Word y = wordFromString(P.base, wordY == "eps" ? "" : wordY);
            std::cout << displayWord(P.base, eval.product(x, y)) << "\n";
            return 0;
        }

        if (crossCmd->parsed()) {
            Presentation P = loadBundle(crossBundle);
            CrosscheckResult r = crosscheckPresentation(P, maxLen);
            if (r.pass) {
                std::cout << "pass: " << r.pairsChecked << " pairs checked up to length " << maxLen
                          << "\n";
                return 0;
            }
            std::cout << "FAIL after " << r.pairsChecked << " pairs at " << r.counterexample << "\n";
            return 1;
        }

        if (censusCmd->parsed()) {
            Presentation P = loadBundle(censusBundle);
            int p = censusP ? censusP : P.p;
            CensusReport report = censusReport(P.domain, censusLen, p, censusFactor);
            std::cout << (censusFormat == "json" ? report.renderJson() : report.renderTable());
            return 0;
        }

        if (exportCmd->parsed()) {
            Presentation P = loadBundle(exportBundle);
            std::string text;
            if (exportRel == "domain") {
                text = exportFormat == "dot" ? dfaToDot(P.domain, "domain") : dfaToJson(P.domain);
            } else {
                const RelationAutomaton& r = P.relation(exportRel);
                text = exportFormat == "dot" ? relationToDot(r, exportRel) : relationToJson(r);
            }
            if (exportOut.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(exportOut, std::ios::binary | std::ios::trunc);
                if (!out) throw std::runtime_error("cannot write " + exportOut);
                out << text;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
