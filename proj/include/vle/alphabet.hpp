#ifndef VLE_ALPHABET_HPP_
#define VLE_ALPHABET_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace vle {

// A word is a sequence of symbol indices into some ParityAlphabet.
using Word = std::vector<int32_t>;

// A finite symbol set with an even/odd bipartition.  Also used for tag
// alphabets.  Symbols are opaque strings; the declared order is kept and all
// derived orderings (lexicographic word comparisons, bucket sorts) follow it.
class ParityAlphabet {
public:
    ParityAlphabet() = default;

    // Rejects empty or duplicate symbol lists and odd symbols that are not
    // declared in `symbols`.
    ParityAlphabet(std::vector<std::string> symbols,
                   const std::vector<std::string>& odd_symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& symbol(int i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const { return symbols_; }

    // Index of `name`, or -1 when unknown.
    int index_of(const std::string& name) const;

    bool is_odd(int sym) const { return odd_.at(sym); }
    int odd_count() const { return odd_count_; }
    int even_count() const { return size() - odd_count_; }
    std::vector<std::string> odd_symbols() const;

    // Interns a word of symbol names; names an unknown symbol on rejection.
    Word intern(const std::vector<std::string>& names) const;
    std::vector<std::string> externalize(const Word& w) const;

    // Display form: bare concatenation when every symbol is one character,
    // dot-delimited otherwise (so product symbols stay readable).
    std::string render(const Word& w) const;

    bool operator==(const ParityAlphabet& o) const {
        return symbols_ == o.symbols_ && odd_ == o.odd_;
    }

private:
    std::vector<std::string> symbols_;
    std::vector<bool> odd_;
    int odd_count_ = 0;
};

// 0 iff `word` contains an even number of odd symbols; the empty word is even.
int parity_of_word(const Word& word, const ParityAlphabet& alphabet);

// Name-based variant; rejects unknown symbols, naming the offender.
int parity_of_word(const std::vector<std::string>& word, const ParityAlphabet& alphabet);

}  // namespace vle

#endif
