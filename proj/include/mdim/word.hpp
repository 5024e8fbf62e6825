#ifndef MDIM_WORD_HPP
#define MDIM_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdim {

// A finite word over an alphabet {0, ..., k-1}. Alphabet sizes are capped at
// 256, so pair symbols over k x k always fit in 16 bits.
using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

constexpr int kMaxAlphabet = 256;

inline Symbol pair_encode(Symbol a, Symbol b, int k) {
  return static_cast<Symbol>(a * k + b);
}

inline std::pair<Symbol, Symbol> pair_decode(Symbol s, int k) {
  return {static_cast<Symbol>(s / k), static_cast<Symbol>(s % k)};
}

// Zips two equal-length words into one word over the pair alphabet k*k.
Word pair_word(const Word& u, const Word& w, int k);

void check_symbols(const Word& w, int alphabet);

// Text form: one digit per symbol for k <= 10, comma-separated otherwise.
std::string to_text(const Word& w, int alphabet);
Word from_text(const std::string& text, int alphabet);

}  // namespace mdim

#endif
