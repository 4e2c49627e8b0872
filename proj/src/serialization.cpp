#include "wordauto/serialization.hpp"

#include <json.hpp>
#include <map>
#include <sstream>

namespace wordauto {

using nlohmann::json;

std::string dfaToJson(const Dfa& d, int indent) {
    json j;
    j["alphabet"] = d.alphabet().size;
    if (!d.alphabet().labels.empty()) j["labels"] = d.alphabet().labels;
    j["states"] = d.stateCount();
    j["start"] = d.start();
    json acc = json::array();
    for (int q = 0; q < d.stateCount(); ++q)
        if (d.isAccepting(q)) acc.push_back(q);
    j["accepting"] = std::move(acc);
    // huge packed alphabets are stored as maximal constant runs instead of
    // one triple per symbol
    if (static_cast<int64_t>(d.stateCount()) * d.alphabet().size > (1 << 20)) {
        json runs = json::array();
        for (auto [q, s, t] : d.transitionRuns()) runs.push_back({q, s, t});
        j["transitionRuns"] = std::move(runs);
    } else {
        json trans = json::array();
        for (int q = 0; q < d.stateCount(); ++q)
            for (int s = 0; s < d.alphabet().size; ++s) trans.push_back({q, s, d.next(q, s)});
        j["transitions"] = std::move(trans);
    }
    return j.dump(indent) + "\n";
}

Dfa dfaFromJson(const std::string& text) {
    json j = json::parse(text);
    Alphabet a(j.at("alphabet").get<int>(),
               j.contains("labels") ? j.at("labels").get<std::vector<std::string>>()
                                    : std::vector<std::string>{});
    int states = j.at("states").get<int>();
    int start = j.at("start").get<int>();
    std::vector<int> accepting = j.at("accepting").get<std::vector<int>>();
    std::vector<std::tuple<int, int, int>> trans;
    const char* key = j.contains("transitionRuns") ? "transitionRuns" : "transitions";
    for (const auto& t : j.at(key)) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("bad transition triple");
        trans.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
    }
    if (j.contains("transitionRuns"))
        return Dfa::fromRuns(std::move(a), states, start, accepting, trans);
    return Dfa::fromTransitions(std::move(a), states, start, accepting, trans);
}

std::string dfaToDot(const Dfa& d, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (int q = 0; q < d.stateCount(); ++q)
        os << "  q" << q << " [shape=" << (d.isAccepting(q) ? "doublecircle" : "circle") << "];\n";
    os << "  __start -> q" << d.start() << ";\n";
    for (int q = 0; q < d.stateCount(); ++q) {
        std::map<int, std::string> byTarget;
        for (int s = 0; s < d.alphabet().size; ++s) {
            std::string& lbl = byTarget[d.next(q, s)];
            if (!lbl.empty()) lbl += ",";
            lbl += d.alphabet().labelOf(s);
        }
        for (const auto& [t, lbl] : byTarget)
            os << "  q" << q << " -> q" << t << " [label=\"" << lbl << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace wordauto
