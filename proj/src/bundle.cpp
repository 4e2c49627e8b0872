#include "wordauto/bundle.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wordauto/serialization.hpp"

namespace wordauto {

using nlohmann::json;

namespace {

std::string readFile(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeFile(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

json alphabetToJson(const Alphabet& a) {
    json j;
    j["size"] = a.size;
    if (!a.labels.empty()) j["labels"] = a.labels;
    return j;
}

Alphabet alphabetFromJson(const json& j) {
    return Alphabet(j.at("size").get<int>(),
                    j.contains("labels") ? j.at("labels").get<std::vector<std::string>>()
                                         : std::vector<std::string>{});
}

}  // namespace

std::string relationToJson(const RelationAutomaton& r, int indent) {
    json j = json::parse(dfaToJson(r.dfa(), indent));
    j["arity"] = r.arity();
    j["baseAlphabet"] = r.base().size;
    if (!r.base().labels.empty()) j["baseLabels"] = r.base().labels;
    return j.dump(indent) + "\n";
}

RelationAutomaton relationFromJson(const std::string& text) {
    json j = json::parse(text);
    int arity = j.at("arity").get<int>();
    Alphabet base(j.at("baseAlphabet").get<int>(),
                  j.contains("baseLabels") ? j.at("baseLabels").get<std::vector<std::string>>()
                                           : std::vector<std::string>{});
    json dfaJson = j;
    dfaJson.erase("arity");
    dfaJson.erase("baseAlphabet");
    if (dfaJson.contains("baseLabels")) dfaJson.erase("baseLabels");
    Dfa d = dfaFromJson(dfaJson.dump());
    return RelationAutomaton(arity, std::move(base), std::move(d));
}

std::string relationToDot(const RelationAutomaton& r, const std::string& name) {
    const Dfa& d = r.dfa();
    Alphabet labeled = r.padded().packedAlphabet();
    if (labeled.labels.empty()) return dfaToDot(d, name);
    std::vector<int> classOf = d.classMap();
    std::vector<int> table(static_cast<size_t>(d.stateCount()) * d.numClasses());
    for (int q = 0; q < d.stateCount(); ++q)
        for (int c = 0; c < d.numClasses(); ++c)
            table[static_cast<size_t>(q) * d.numClasses() + c] = d.nextByClass(q, c);
    std::vector<bool> acc(d.stateCount());
    for (int q = 0; q < d.stateCount(); ++q) acc[q] = d.isAccepting(q);
    Dfa display = Dfa::fromClassified(std::move(labeled), std::move(classOf), d.numClasses(),
                                      std::move(table), d.start(), std::move(acc));
    return dfaToDot(display, name);
}

void saveBundle(const Presentation& P, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    json manifest;
    manifest["format"] = "fa-presentation-bundle-v1";
    manifest["name"] = P.name;
    manifest["kind"] = P.kind;
    manifest["p"] = P.p;
    manifest["alphabet"] = alphabetToJson(P.base);
    manifest["neutralWord"] = wordToString(P.base, P.neutralWord);
    manifest["domain"] = "domain.json";
    json rels = json::object();
    for (const auto& [name, r] : P.relations) {
        std::string file = "rel_" + name + ".json";
        rels[name] = {{"arity", r.arity()}, {"file", file}};
        writeFile(dir / file, relationToJson(r));
    }
    manifest["relations"] = std::move(rels);
    if (P.equality) {
        manifest["equality"] = {{"arity", 2}, {"file", "rel__equality.json"}};
        writeFile(dir / "rel__equality.json", relationToJson(*P.equality));
    } else {
        manifest["equality"] = nullptr;
    }
    manifest["notes"] = P.notes;
    writeFile(dir / "domain.json", dfaToJson(P.domain));
    writeFile(dir / "manifest.json", manifest.dump(2) + "\n");
}

Presentation loadBundle(const std::filesystem::path& dir) {
    json manifest = json::parse(readFile(dir / "manifest.json"));
    if (manifest.at("format").get<std::string>() != "fa-presentation-bundle-v1")
        throw std::runtime_error("unknown bundle format in " + (dir / "manifest.json").string());
    Alphabet base = alphabetFromJson(manifest.at("alphabet"));
    Dfa domain = dfaFromJson(readFile(dir / manifest.at("domain").get<std::string>()));
    if (domain.alphabet().size != base.size) throw std::runtime_error("bundle domain alphabet mismatch");
    // the domain file carries no labels; rebind the manifest alphabet
    {
        std::vector<int> classOf = domain.classMap();
        std::vector<int> table(static_cast<size_t>(domain.stateCount()) * domain.numClasses());
        for (int q = 0; q < domain.stateCount(); ++q)
            for (int c = 0; c < domain.numClasses(); ++c)
                table[static_cast<size_t>(q) * domain.numClasses() + c] = domain.nextByClass(q, c);
        std::vector<bool> acc(domain.stateCount());
        for (int q = 0; q < domain.stateCount(); ++q) acc[q] = domain.isAccepting(q);
        domain = Dfa::fromClassified(base, std::move(classOf), domain.numClasses(), std::move(table),
                                     domain.start(), std::move(acc));
    }
    Word neutral = wordFromString(base, manifest.at("neutralWord").get<std::string>());
    Presentation P(manifest.at("name").get<std::string>(), manifest.at("kind").get<std::string>(),
                   base, domain, neutral);
    P.p = manifest.at("p").get<int>();
    for (auto& [name, info] : manifest.at("relations").items()) {
        RelationAutomaton r = relationFromJson(readFile(dir / info.at("file").get<std::string>()));
        if (r.arity() != info.at("arity").get<int>())
            throw std::runtime_error("bundle relation arity mismatch for " + name);
        P.addRelation(name, r);
    }
    if (!manifest.at("equality").is_null()) {
        P.equality = relationFromJson(
            readFile(dir / manifest.at("equality").at("file").get<std::string>()));
    }
    if (manifest.contains("notes"))
        P.notes = manifest.at("notes").get<std::map<std::string, std::string>>();
    return P;
}

void saveCocycleSpec(const CocycleSpec& s, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    json manifest;
    manifest["format"] = "cocycle-spec-v1";
    manifest["name"] = s.name;
    manifest["Q"] = "q";
    manifest["A"] = "a";
    manifest["f"] = "cocycle_f.json";
    saveBundle(s.Q, dir / "q");
    saveBundle(s.A, dir / "a");
    writeFile(dir / "cocycle_f.json", relationToJson(s.f));
    writeFile(dir / "cocycle.json", manifest.dump(2) + "\n");
}

CocycleSpec loadCocycleSpec(const std::filesystem::path& dir) {
    json manifest = json::parse(readFile(dir / "cocycle.json"));
    if (manifest.at("format").get<std::string>() != "cocycle-spec-v1")
        throw std::runtime_error("unknown cocycle manifest format");
    Presentation Q = loadBundle(dir / manifest.at("Q").get<std::string>());
    Presentation A = loadBundle(dir / manifest.at("A").get<std::string>());
    RelationAutomaton f = relationFromJson(readFile(dir / manifest.at("f").get<std::string>()));
    return CocycleSpec(manifest.at("name").get<std::string>(), std::move(Q), std::move(A),
                       std::move(f));
}

void saveGroupTable(const FiniteGroupTable& t, const std::filesystem::path& file) {
    json j;
    j["order"] = t.order;
    j["identity"] = t.identity;
    j["labels"] = t.labels;
    j["table"] = t.table;
    writeFile(file, j.dump(2) + "\n");
}

FiniteGroupTable loadGroupTable(const std::filesystem::path& file) {
    json j = json::parse(readFile(file));
    return FiniteGroupTable(j.at("order").get<int>(), j.at("table").get<std::vector<int>>(),
                            j.at("labels").get<std::vector<std::string>>());
}

}  // namespace wordauto
