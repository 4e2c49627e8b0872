#include "wordauto/nilpotent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wordauto {

namespace {

int centralSize(NilKind kind, int rank) {
    switch (kind) {
        case NilKind::Free: return rank * (rank - 1) / 2;
        case NilKind::E: return 1;
        case NilKind::H: return rank;
    }
    throw std::logic_error("unreachable");
}

int mod(int v, int p) {
    int r = v % p;
    return r < 0 ? r + p : r;
}

void requireCompatible(const NilElement& a, const NilElement& b) {
    if (a.kind != b.kind || a.p != b.p || a.rank != b.rank)
        throw std::invalid_argument("nil elements have different kind, p or rank");
}

}  // namespace

NilElement NilElement::identity(NilKind kind, int p, int rank) {
    if (p < 2 || rank < 1) throw std::invalid_argument("NilElement: need p >= 2 and rank >= 1");
    NilElement e;
    e.kind = kind;
    e.p = p;
    e.rank = rank;
    e.alpha.assign(rank, 0);
    e.central.assign(centralSize(kind, rank), 0);
    return e;
}

NilElement NilElement::generator(NilKind kind, int p, int rank, int i) {
    if (i < 0 || i >= rank) throw std::invalid_argument("generator index exceeds rank");
    NilElement g = identity(kind, p, rank);
    g.alpha[i] = 1;
    return g;
}

NilElement NilElement::centralE(int p, int rank, int v) {
    NilElement g = identity(NilKind::E, p, rank);
    g.central[0] = mod(v, p);
    return g;
}

NilElement NilElement::centralH(int p, int rank, int k, int v) {
    if (k < 1 || k >= rank) throw std::invalid_argument("central generator z_k needs 1 <= k < rank");
    NilElement g = identity(NilKind::H, p, rank);
    g.central[k] = mod(v, p);
    return g;
}

NilElement NilElement::commutatorGenerator(int p, int rank, int i, int k, int v) {
    if (!(0 <= i && i < k && k < rank))
        throw std::invalid_argument("commutator generator needs 0 <= i < k < rank");
    NilElement g = identity(NilKind::Free, p, rank);
    g.central[freeIndex(i, k)] = mod(v, p);
    return g;
}

bool NilElement::isIdentity() const {
    for (int v : alpha)
        if (v) return false;
    return isCentral() && std::all_of(central.begin(), central.end(), [](int v) { return v == 0; });
}

bool NilElement::isCentral() const {
    for (int v : alpha)
        if (v) return false;
    return true;
}

NilElement multiply(const NilElement& a, const NilElement& b) {
    requireCompatible(a, b);
    NilElement out = a;
    for (int i = 0; i < a.rank; ++i) out.alpha[i] = mod(a.alpha[i] + b.alpha[i], a.p);
    switch (a.kind) {
        case NilKind::Free:
            for (int k = 1; k < a.rank; ++k)
                for (int i = 0; i < k; ++i) {
                    int idx = NilElement::freeIndex(i, k);
                    out.central[idx] =
                        mod(a.central[idx] + b.central[idx] - a.alpha[k] * b.alpha[i], a.p);
                }
            break;
        case NilKind::E: {
            int corr = 0;
            int betaPrefix = 0;
            for (int k = 0; k < a.rank; ++k) {
                corr += a.alpha[k] * betaPrefix;
                betaPrefix += b.alpha[k];
            }
            out.central[0] = mod(a.central[0] + b.central[0] - corr, a.p);
            break;
        }
        case NilKind::H: {
            int betaPrefix = 0;
            out.central[0] = 0;
            for (int k = 0; k < a.rank; ++k) {
                if (k >= 1)
                    out.central[k] =
                        mod(a.central[k] + b.central[k] - a.alpha[k] * betaPrefix, a.p);
                betaPrefix += b.alpha[k];
            }
            break;
        }
    }
    return out;
}

NilElement inverse(const NilElement& a) {
    NilElement b = NilElement::identity(a.kind, a.p, a.rank);
    for (int i = 0; i < a.rank; ++i) b.alpha[i] = mod(-a.alpha[i], a.p);
    NilElement residue = multiply(a, b);  // central, since alpha cancels
    for (size_t i = 0; i < b.central.size(); ++i) b.central[i] = mod(-residue.central[i], a.p);
    return b;
}

NilElement power(const NilElement& a, int m) {
    if (m < 0) throw std::invalid_argument("power: negative exponent");
    NilElement acc = NilElement::identity(a.kind, a.p, a.rank);
    for (int i = 0; i < m; ++i) acc = multiply(acc, a);
    return acc;
}

NilElement commutator(const NilElement& a, const NilElement& b) {
    requireCompatible(a, b);
    return multiply(multiply(multiply(inverse(a), inverse(b)), a), b);
}

NilElement freeToE(const NilElement& a) {
    if (a.kind != NilKind::Free) throw std::invalid_argument("freeToE: expected a Free element");
    NilElement out = NilElement::identity(NilKind::E, a.p, a.rank);
    out.alpha = a.alpha;
    int sum = 0;
    for (int v : a.central) sum += v;
    out.central[0] = mod(sum, a.p);
    return out;
}

NilElement freeToH(const NilElement& a) {
    if (a.kind != NilKind::Free) throw std::invalid_argument("freeToH: expected a Free element");
    NilElement out = NilElement::identity(NilKind::H, a.p, a.rank);
    out.alpha = a.alpha;
    for (int k = 1; k < a.rank; ++k) {
        int sum = 0;
        for (int i = 0; i < k; ++i) sum += a.central[NilElement::freeIndex(i, k)];
        out.central[k] = mod(sum, a.p);
    }
    return out;
}

std::string toText(const NilElement& a) {
    if (a.isIdentity()) return "e";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& gen, int exp) {
        if (exp == 0) return;
        if (!first) os << ' ';
        first = false;
        os << gen;
        if (exp != 1) os << '^' << exp;
    };
    auto emitAlpha = [&] {
        for (int i = 0; i < a.rank; ++i) emit("x" + std::to_string(i), a.alpha[i]);
    };
    switch (a.kind) {
        case NilKind::E:
            emit("z", a.central[0]);
            emitAlpha();
            break;
        case NilKind::H:
            for (int k = 1; k < a.rank; ++k) emit("z" + std::to_string(k), a.central[k]);
            emitAlpha();
            break;
        case NilKind::Free:
            emitAlpha();
            for (int k = 1; k < a.rank; ++k)
                for (int i = 0; i < k; ++i)
                    emit("[x" + std::to_string(i) + ",x" + std::to_string(k) + "]",
                         a.central[NilElement::freeIndex(i, k)]);
            break;
    }
    return os.str();
}

NilElement parseElement(NilKind kind, int p, int rank, const std::string& text) {
    NilElement acc = NilElement::identity(kind, p, rank);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "e") continue;
        int exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            exp = std::stoi(tok.substr(caret + 1));
            tok = tok.substr(0, caret);
        }
        NilElement factor = NilElement::identity(kind, p, rank);
        if (tok.size() >= 2 && tok[0] == 'x') {
            int i = std::stoi(tok.substr(1));
            factor = NilElement::generator(kind, p, rank, i);
        } else if (tok == "z" && kind == NilKind::E) {
            factor = NilElement::centralE(p, rank, 1);
        } else if (tok.size() >= 2 && tok[0] == 'z' && kind == NilKind::H) {
            factor = NilElement::centralH(p, rank, std::stoi(tok.substr(1)), 1);
        } else if (tok.size() >= 5 && tok.front() == '[' && tok.back() == ']' && kind == NilKind::Free) {
            auto comma = tok.find(',');
            if (comma == std::string::npos || tok[1] != 'x' || tok[comma + 1] != 'x')
                throw std::invalid_argument("cannot parse commutator token: " + tok);
            int i = std::stoi(tok.substr(2, comma - 2));
            int k = std::stoi(tok.substr(comma + 2, tok.size() - comma - 3));
            factor = NilElement::commutatorGenerator(p, rank, i, k, 1);
        } else {
            throw std::invalid_argument("cannot parse element token: " + tok);
        }
        int e = mod(exp, p);
        acc = multiply(acc, power(factor, e));
    }
    return acc;
}

Word encodeWord(const NilElement& a) {
    Word w;
    switch (a.kind) {
        case NilKind::E: {
            w.push_back(a.central[0]);
            int n = a.rank;
            while (n > 0 && a.alpha[n - 1] == 0) --n;
            for (int i = 0; i < n; ++i) w.push_back(a.alpha[i]);
            return w;
        }
        case NilKind::H: {
            int n = a.rank;
            while (n > 0 && a.alpha[n - 1] == 0 && a.central[n - 1] == 0) --n;
            for (int k = 0; k < n; ++k) w.push_back(a.alpha[k] + a.p * a.central[k]);
            return w;
        }
        case NilKind::Free:
            throw std::invalid_argument("encodeWord: free elements have no FA presentation");
    }
    throw std::logic_error("unreachable");
}

NilElement decodeWord(NilKind kind, int p, int rank, const Word& w) {
    NilElement a = NilElement::identity(kind, p, rank);
    switch (kind) {
        case NilKind::E: {
            if (w.empty()) throw std::invalid_argument("decodeWord: empty E word");
            if (static_cast<int>(w.size()) - 1 > rank)
                throw std::invalid_argument("decodeWord: rank overflow");
            if (w.size() > 1 && w.back() == 0)
                throw std::invalid_argument("decodeWord: E word has a trailing zero");
            for (int s : w)
                if (s < 0 || s >= p) throw std::invalid_argument("decodeWord: symbol out of range");
            a.central[0] = w[0];
            for (size_t i = 1; i < w.size(); ++i) a.alpha[i - 1] = w[i];
            return a;
        }
        case NilKind::H: {
            if (static_cast<int>(w.size()) > rank)
                throw std::invalid_argument("decodeWord: rank overflow");
            for (size_t k = 0; k < w.size(); ++k) {
                int code = w[k];
                if (code < 0 || code >= p * p)
                    throw std::invalid_argument("decodeWord: symbol out of range");
                a.alpha[k] = code % p;
                a.central[k] = code / p;
            }
            if (!w.empty()) {
                if (a.central[0] != 0)
                    throw std::invalid_argument("decodeWord: H word must start with v_0 = 0");
                if (a.alpha[w.size() - 1] == 0 && a.central[w.size() - 1] == 0)
                    throw std::invalid_argument("decodeWord: H word has a trailing zero column");
            }
            return a;
        }
        case NilKind::Free:
            throw std::invalid_argument("decodeWord: free elements have no FA presentation");
    }
    throw std::logic_error("unreachable");
}

}  // namespace wordauto
