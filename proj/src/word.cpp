#include "mdim/word.hpp"

#include <sstream>

namespace mdim {

Word pair_word(const Word& u, const Word& w, int k) {
  if (u.size() != w.size())
    throw std::invalid_argument("pair_word: length mismatch");
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = pair_encode(u[i], w[i], k);
  return out;
}

void check_symbols(const Word& w, int alphabet) {
  for (Symbol s : w)
    if (s >= alphabet)
      throw std::out_of_range("symbol " + std::to_string(s) +
                              " outside alphabet of size " +
                              std::to_string(alphabet));
}

std::string to_text(const Word& w, int alphabet) {
  std::ostringstream os;
  if (alphabet <= 10) {
    for (Symbol s : w) os << static_cast<int>(s);
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ',';
      os << static_cast<int>(w[i]);
    }
  }
  return os.str();
}

Word from_text(const std::string& text, int alphabet) {
  Word w;
  if (alphabet <= 10) {
    for (char c : text) {
      if (c == '\n' || c == '\r' || c == ' ') continue;
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad digit in word text");
      w.push_back(static_cast<Symbol>(c - '0'));
    }
  } else {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ','))
      w.push_back(static_cast<Symbol>(std::stoi(tok)));
  }
  check_symbols(w, alphabet);
  return w;
}

}  // namespace mdim
