#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

#include "wordauto/automaton.hpp"

namespace wordauto {

/// Growth census of a regular domain, optionally set against the demand
/// series p^(n(n-1)/2): the number of strings the free class-2 group would
/// need at length O(n). A word-automatic domain supplies only exponentially
/// many strings up to a linear length bound, so the demand always overtakes
/// it; the report exhibits the least such n.
struct CensusRow {
    int length = 0;
    mpz_class count;
    mpz_class cumulative;
};

struct CensusReport {
    std::vector<CensusRow> rows;
    int p = 0;             // 0 = no comparison series
    int lengthFactor = 0;  // supply is measured at length lengthFactor * n
    std::vector<mpz_class> demand;  // p^(n(n-1)/2) for n = 1..
    int overtakeN = -1;             // least n with demand(n) > supply(lengthFactor*n)
    mpz_class overtakeDemand;
    mpz_class overtakeSupply;

    std::string renderTable() const;
    std::string renderJson() const;
};

CensusReport censusReport(const Dfa& domain, int maxLen, int p = 0, int lengthFactor = 2);

/// p^(n(n-1)/2)
mpz_class freeGroupDemand(int p, int n);

}  // namespace wordauto
