#include "wordauto/presentation.hpp"

#include <stdexcept>

namespace wordauto {

Presentation::Presentation(std::string name_, std::string kind_, Alphabet base_, Dfa domain_,
                           Word neutral)
    : name(std::move(name_)), kind(std::move(kind_)), base(std::move(base_)),
      domain(minimize(domain_)), neutralWord(std::move(neutral)) {
    if (domain.alphabet().size != base.size)
        throw std::invalid_argument("presentation: domain alphabet mismatch");
    if (!domain.accepts(neutralWord))
        throw std::invalid_argument("presentation: neutral word not in domain");
}

const RelationAutomaton& Presentation::relation(const std::string& relName) const {
    auto it = relations.find(relName);
    if (it == relations.end()) throw std::invalid_argument("unknown relation: " + relName);
    return it->second;
}

void Presentation::addRelation(const std::string& relName, const RelationAutomaton& r) {
    if (r.base().size != base.size)
        throw std::invalid_argument("addRelation: base alphabet mismatch for " + relName);
    relations.emplace(relName, restrictToDomain(r, domain));
}

void Presentation::addConstant(const std::string& relName, const Word& w) {
    if (!domain.accepts(w))
        throw std::invalid_argument("addConstant: word not in domain for " + relName);
    addRelation(relName, unaryRelation(singletonDfa(base, w)));
}

RelationAutomaton Presentation::domainRelation() const { return unaryRelation(domain); }

RelationAutomaton Presentation::domainCylinder(int track, int arity) const {
    return liftUnary(domain, track, arity);
}

RelationAutomaton restrictToDomain(const RelationAutomaton& r, const Dfa& domain) {
    RelationAutomaton out = r;
    for (int t = 0; t < r.arity(); ++t) out = intersectRel(out, liftUnary(domain, t, r.arity()));
    return out;
}

}  // namespace wordauto
