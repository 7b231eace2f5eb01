#include "vle/alphabet.hpp"

#include <algorithm>
#include <unordered_set>

#include "vle/numeric.hpp"

namespace vle {

ParityAlphabet::ParityAlphabet(std::vector<std::string> symbols,
                               const std::vector<std::string>& odd_symbols)
    : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error("alphabet: symbol list is empty");
    std::unordered_set<std::string> seen;
    for (const auto& s : symbols_) {
        if (!seen.insert(s).second) throw Error("alphabet: duplicate symbol '" + s + "'");
    }
    odd_.assign(symbols_.size(), false);
    for (const auto& s : odd_symbols) {
        int i = index_of(s);
        if (i < 0) throw Error("alphabet: odd symbol '" + s + "' is not declared");
        if (!odd_[i]) {
            odd_[i] = true;
            ++odd_count_;
        }
    }
}

int ParityAlphabet::index_of(const std::string& name) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), name);
    return it == symbols_.end() ? -1 : static_cast<int>(it - symbols_.begin());
}

std::vector<std::string> ParityAlphabet::odd_symbols() const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (odd_[i]) out.push_back(symbols_[i]);
    return out;
}

Word ParityAlphabet::intern(const std::vector<std::string>& names) const {
    Word w;
    w.reserve(names.size());
    for (const auto& s : names) {
        int i = index_of(s);
        if (i < 0) throw Error("unknown symbol '" + s + "'");
        w.push_back(i);
    }
    return w;
}

std::vector<std::string> ParityAlphabet::externalize(const Word& w) const {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (int32_t s : w) out.push_back(symbol(s));
    return out;
}

std::string ParityAlphabet::render(const Word& w) const {
    bool single_char = std::all_of(symbols_.begin(), symbols_.end(),
                                   [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !single_char) out += '.';
        out += symbol(w[i]);
    }
    return out;
}

int parity_of_word(const Word& word, const ParityAlphabet& alphabet) {
    int p = 0;
    for (int32_t s : word) p ^= alphabet.is_odd(s) ? 1 : 0;
    return p;
}

int parity_of_word(const std::vector<std::string>& word, const ParityAlphabet& alphabet) {
    return parity_of_word(alphabet.intern(word), alphabet);
}

}  // namespace vle
