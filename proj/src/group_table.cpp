#include "wordauto/group_table.hpp"

#include <stdexcept>

namespace wordauto {

FiniteGroupTable::FiniteGroupTable(int order_, std::vector<int> table_, std::vector<std::string> labels_)
    : order(order_), table(std::move(table_)), identity(-1), labels(std::move(labels_)) {
    if (order < 1) throw std::invalid_argument("group table: order must be >= 1");
    if (table.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("group table: wrong table size");
    for (int v : table)
        if (v < 0 || v >= order) throw std::invalid_argument("group table: entry out of range");
    if (!labels.empty() && labels.size() != static_cast<size_t>(order))
        throw std::invalid_argument("group table: wrong label count");

    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("group table: no identity element");
    for (int a = 0; a < order; ++a) {
        bool hasInv = false;
        for (int b = 0; b < order && !hasInv; ++b) hasInv = mul(a, b) == identity && mul(b, a) == identity;
        if (!hasInv) throw std::invalid_argument("group table: element without inverse");
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("group table: not associative");
}

int FiniteGroupTable::inv(int a) const {
    for (int b = 0; b < order; ++b)
        if (mul(a, b) == identity) return b;
    throw std::logic_error("group table: inverse vanished");
}

int FiniteGroupTable::elementOrder(int a) const {
    int cur = a;
    int n = 1;
    while (cur != identity) {
        cur = mul(cur, a);
        ++n;
    }
    return n;
}

FiniteGroupTable cyclicGroup(int n) {
    if (n < 1) throw std::invalid_argument("cyclicGroup: order must be >= 1");
    std::vector<int> table(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    return FiniteGroupTable(n, std::move(table), std::move(labels));
}

int ut3Index(int p, int a, int b, int c) { return a + p * b + p * p * c; }

FiniteGroupTable ut3(int p) {
    requireOddPrime(p);
    int n = p * p * p;
    std::vector<int> table(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
                int idx = ut3Index(p, a, b, c);
                labels[idx] =
                    "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2) {
                            // [[1,a,c],[0,1,b],[0,0,1]] * [[1,a2,c2],[0,1,b2],[0,0,1]]
                            int idx2 = ut3Index(p, a2, b2, c2);
                            int a3 = (a + a2) % p;
                            int b3 = (b + b2) % p;
                            int c3 = (c + c2 + a * b2) % p;
                            table[static_cast<size_t>(idx) * n + idx2] = ut3Index(p, a3, b3, c3);
                        }
            }
    return FiniteGroupTable(n, std::move(table), std::move(labels));
}

bool isOddPrime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void requireOddPrime(int p) {
    if (!isOddPrime(p)) throw std::invalid_argument("p must be an odd prime (got " + std::to_string(p) + ")");
}

}  // namespace wordauto
