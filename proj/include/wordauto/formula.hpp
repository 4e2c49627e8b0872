#pragma once

#include <memory>
#include <string>
#include <vector>

namespace wordauto {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// First-order formula over a presentation's relational signature.
/// Atoms are relation applications R(x1..xk) and equalities x = y;
/// functions are represented relationally (Op(x,y,z) means x*y = z).
struct Formula {
    enum class Kind { Rel, Eq, Not, And, Or, Implies, Exists, Forall };

    Kind kind;
    std::string relName;               // Rel
    std::vector<std::string> args;     // Rel arguments; Eq has exactly two
    std::vector<FormulaPtr> children;  // Not 1, Implies 2, And/Or n, quantifier 1
    std::string var;                   // quantified variable
};

FormulaPtr rel(std::string name, std::vector<std::string> args);
FormulaPtr eq(std::string a, std::string b);
FormulaPtr fnot(FormulaPtr f);
FormulaPtr fand(std::vector<FormulaPtr> fs);
FormulaPtr forr(std::vector<FormulaPtr> fs);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr existsAll(const std::vector<std::string>& vars, FormulaPtr body);
FormulaPtr forallAll(const std::vector<std::string>& vars, FormulaPtr body);

/// S-expression syntax:
///   (forall x (exists y (and (Op x y z) (= z x))))
/// Keywords: forall exists and or not implies (also ->), =; anything else
/// heads a relation atom.
FormulaPtr parseFormula(const std::string& text);
std::string formulaToString(const FormulaPtr& f);

/// Free variables in first-occurrence order of a left-to-right traversal.
std::vector<std::string> freeVariables(const FormulaPtr& f);

// Group-law sentences over the conventional signature (Op/3 plus constants
// is_e, is_x<i>, is_z, is_z<k>). Commutators are spelled with Op atoms:
// [a,b] = c iff a. b = (b.a).c.

FormulaPtr assocSentence();
FormulaPtr identitySentence();
FormulaPtr inverseSentence();
FormulaPtr commutativitySentence();
FormulaPtr totalitySentence();
FormulaPtr functionalitySentence();
/// forall x: x^p = e
FormulaPtr exponentSentence(int p);
/// forall x,y,z: [[x,y],z] = e
FormulaPtr classTwoSentence();
/// [x_i, x_k] = <target constant>, e.g. commutatorEqualsSentence(0, 2, "is_z2")
FormulaPtr commutatorEqualsSentence(int i, int k, const std::string& targetConstant);
/// Free variable "x": x commutes with everything.
FormulaPtr centreFormula();

}  // namespace wordauto
