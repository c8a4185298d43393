#include "morphrec/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace morphrec {

Alphabet::Alphabet(std::string_view symbols) {
  for (char c : symbols) intern(c);
}

Letter Alphabet::intern(char symbol) {
  auto pos = symbols_.find(symbol);
  if (pos != std::string::npos) return static_cast<Letter>(pos);
  symbols_.push_back(symbol);
  return static_cast<Letter>(symbols_.size() - 1);
}

std::optional<Letter> Alphabet::find(char symbol) const {
  auto pos = symbols_.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

char Alphabet::symbol(Letter l) const {
  if (l < 0 || l >= size()) throw std::invalid_argument("letter out of range");
  return symbols_[static_cast<std::size_t>(l)];
}

bool Alphabet::contains_all(const Alphabet& other) const {
  for (char c : other.symbols_)
    if (!find(c)) return false;
  return true;
}

std::string Alphabet::to_string(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(symbol(l));
  return out;
}

Word Alphabet::to_word(std::string_view text, bool intern_new) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (intern_new) {
      w.push_back(intern(c));
    } else {
      auto l = find(c);
      if (!l) throw std::invalid_argument(std::string("symbol not in alphabet: ") + c);
      w.push_back(*l);
    }
  }
  return w;
}

Word Alphabet::to_word(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    auto l = find(c);
    if (!l) throw std::invalid_argument(std::string("symbol not in alphabet: ") + c);
    w.push_back(*l);
  }
  return w;
}

int minimal_period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("minimal_period: empty word");
  const int n = static_cast<int>(w.size());
  std::vector<int> border(static_cast<std::size_t>(n) + 1, 0);
  border[0] = -1;
  int k = -1;
  for (int i = 0; i < n; ++i) {
    while (k >= 0 && w[static_cast<std::size_t>(k)] != w[static_cast<std::size_t>(i)]) {
      k = border[static_cast<std::size_t>(k)];
    }
    ++k;
    border[static_cast<std::size_t>(i) + 1] = k;
  }
  return n - border[static_cast<std::size_t>(n)];
}

Word primitive_root(const Word& w) {
  const int p = minimal_period(w);
  const int n = static_cast<int>(w.size());
  if (n % p == 0) return Word(w.begin(), w.begin() + p);
  return w;
}

bool commute(const Word& u, const Word& v) { return concat(u, v) == concat(v, u); }

bool are_conjugate(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  const Word uu = concat(u, u);
  return std::search(uu.begin(), uu.end(), v.begin(), v.end()) != uu.end();
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

Word repeat(const Word& u, int times) {
  Word w;
  w.reserve(u.size() * static_cast<std::size_t>(std::max(times, 0)));
  for (int i = 0; i < times; ++i) w.insert(w.end(), u.begin(), u.end());
  return w;
}

Word reversed(const Word& u) { return Word(u.rbegin(), u.rend()); }

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

bool is_factor(const Word& f, const Word& w) {
  if (f.empty()) return true;
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

Word drop_prefix(const Word& w, int n) { return Word(w.begin() + n, w.end()); }

Word drop_suffix(const Word& w, int n) { return Word(w.begin(), w.end() - n); }

bool has_period(const Word& w, int q) {
  if (q <= 0) throw std::invalid_argument("has_period: q must be positive");
  for (std::size_t i = 0; i + static_cast<std::size_t>(q) < w.size(); ++i) {
    if (w[i] != w[i + static_cast<std::size_t>(q)]) return false;
  }
  return true;
}

}  // namespace morphrec
