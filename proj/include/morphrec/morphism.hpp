#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "morphrec/words.hpp"

namespace morphrec {

// A morphism sigma: A* -> B*, given by one image word per source letter.
struct Morphism {
  Alphabet source;            // A
  Alphabet target;            // B
  std::vector<Word> images;   // indexed by source letter, words over B

  const Word& image(Letter a) const { return images[static_cast<std::size_t>(a)]; }
  int card_source() const { return source.size(); }
  int card_target() const { return target.size(); }
  // Sum of image lengths; the "size" used for complexity statements.
  long total_image_length() const;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Reads the morphism spec format: one rule `x -> w` per line, `#` comments,
// blank lines ignored. Duplicate left-hand sides are rejected.
Morphism parse_morphism(std::istream& in);
Morphism parse_morphism(const std::string& text);
// Convenience builder from symbol strings, e.g. {{'a',"ab"},{'b',"a"}}.
Morphism make_morphism(const std::vector<std::pair<char, std::string>>& rules);
std::string format_morphism(const Morphism& m);

Word apply(const Morphism& m, const Word& w);
// alpha after beta: (alpha∘beta)(a) = alpha(beta(a)). Requires every letter
// used by beta's images to exist in alpha's source alphabet.
Morphism compose(const Morphism& alpha, const Morphism& beta);
Morphism reversed(const Morphism& m);

// sum over a of (|sigma(a)| - 1); negative when images are empty.
long ell(const Morphism& m);

std::vector<std::vector<long>> incidence_matrix(const Morphism& m);

struct RankResult {
  int rank;
  bool equals_card_source;
};
// Rank of the incidence matrix over the rationals, computed exactly.
RankResult incidence_rank(const Morphism& m);

// True iff images are pairwise distinct (injectivity on single letters).
bool injective_on_letters(const Morphism& m);

// True iff every image letter also belongs to the source alphabet, so the
// morphism can be iterated.
bool is_endomorphism_view(const Morphism& m);
// Re-expresses the images over the source alphabet (requires the above).
Morphism endomorphism_view(const Morphism& m);

// Letters killed by some iterate; requires an endomorphism view.
std::vector<Letter> erasable_letters(const Morphism& m);

// Exactly L(sigma) ∩ A_e*, the finite set of erasable words occurring as
// factors of iterated images; requires an endomorphism view. Sorted by
// (length, lex).
std::vector<Word> erasable_words(const Morphism& m);

// Letters a with |sigma^n(a)| unbounded; requires an endomorphism view.
std::vector<Letter> growing_letters(const Morphism& m);

struct PeriodicityResult {
  bool periodic = false;
  Word root;               // common primitive root of the nonempty images
  bool trivial = false;    // all images empty
};
// sigma(A*) ⊆ r* for some r, decided by pairwise commutation of images.
PeriodicityResult is_periodic_morphism(const Morphism& m);

bool is_left_marked(const Morphism& m);
bool is_right_marked(const Morphism& m);

// sigma(A) as a list with duplicates removed, in source-letter order.
std::vector<Word> image_code(const Morphism& m);

}  // namespace morphrec
