#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wordauto {

/// Word over an integer-coded alphabet; symbol i is a code in [0, alphabet.size).
using Word = std::vector<int>;

/// Integer-coded alphabet with optional display labels.
struct Alphabet {
    int size = 0;
    std::vector<std::string> labels;  // empty, or exactly `size` entries

    Alphabet() = default;
    explicit Alphabet(int n) : size(n) { check(); }
    Alphabet(int n, std::vector<std::string> lbl) : size(n), labels(std::move(lbl)) { check(); }

    bool operator==(const Alphabet& o) const { return size == o.size; }

    std::string labelOf(int symbol) const {
        if (symbol < 0 || symbol >= size) throw std::invalid_argument("symbol out of range");
        if (!labels.empty()) return labels[symbol];
        return std::to_string(symbol);
    }

private:
    void check() const {
        if (size < 1) throw std::invalid_argument("alphabet size must be >= 1");
        if (!labels.empty() && static_cast<int>(labels.size()) != size)
            throw std::invalid_argument("label count must match alphabet size");
    }
};

/// Render a word using the alphabet's labels. Single-character labels are
/// concatenated ("211"); anything else is joined as-is ("(1,0)(1,2)").
std::string wordToString(const Alphabet& a, const Word& w);

/// Inverse of wordToString: per-character digits, comma-separated codes,
/// or greedy label matching for composite labels.
Word wordFromString(const Alphabet& a, const std::string& s);

}  // namespace wordauto
