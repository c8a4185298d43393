#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morphrec {

// Letters are small integers interned from a declared alphabet; a side table
// maps them back to the user's printable symbols.
using Letter = int;
using Word = std::vector<Letter>;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view symbols);

  Letter intern(char symbol);
  std::optional<Letter> find(char symbol) const;
  char symbol(Letter l) const;
  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbols() const { return symbols_; }
  bool contains_all(const Alphabet& other) const;

  std::string to_string(const Word& w) const;
  // Parses a string of symbols; unknown symbols are interned when
  // `intern_new` is set, otherwise they raise std::invalid_argument.
  Word to_word(std::string_view text, bool intern_new = false);
  Word to_word(std::string_view text) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string symbols_;
};

// Smallest p >= 1 with w[i] == w[i+p] for all valid i. Linear time via the
// border (failure-function) array. Throws std::invalid_argument on the
// empty word.
int minimal_period(const Word& w);

// Shortest r with w in r+; |r| divides |w| and r is primitive.
Word primitive_root(const Word& w);

// uv == vu, i.e. u and v are powers of a common word.
bool commute(const Word& u, const Word& v);

// |u| == |v| and v occurs as a factor of uu.
bool are_conjugate(const Word& u, const Word& v);

Word concat(const Word& u, const Word& v);
Word repeat(const Word& u, int times);
Word reversed(const Word& u);
bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);
bool is_factor(const Word& f, const Word& w);
// w with the length-n prefix (suffix) removed.
Word drop_prefix(const Word& w, int n);
Word drop_suffix(const Word& w, int n);

// True iff q is a period of w (positions only, q may exceed |w|).
bool has_period(const Word& w, int q);

}  // namespace morphrec
