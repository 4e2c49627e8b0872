#pragma once

#include <string>
#include <vector>

namespace wordauto {

/// Finite group given by its multiplication table. Construction verifies the
/// group axioms, so an instance is always an actual group.
struct FiniteGroupTable {
    int order;
    std::vector<int> table;  // order x order, row-major: table[a*order+b] = a.b
    int identity;
    std::vector<std::string> labels;

    FiniteGroupTable(int order, std::vector<int> table, std::vector<std::string> labels = {});

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int inv(int a) const;
    int elementOrder(int a) const;
};

FiniteGroupTable cyclicGroup(int n);

/// Upper unitriangular 3x3 matrices over GF(p), p an odd prime; p^3 elements
/// labeled "(a,b,c)" for rows [[1,a,c],[0,1,b],[0,0,1]].
FiniteGroupTable ut3(int p);

/// Element index of (a,b,c) in the ut3 table.
int ut3Index(int p, int a, int b, int c);

bool isOddPrime(int p);
/// Throws with a uniform message unless p is an odd prime.
void requireOddPrime(int p);

}  // namespace wordauto
