#include "morphrec/morphism.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace morphrec {

namespace {

bool all_in(const Word& w, const std::vector<bool>& flags) {
  for (Letter l : w)
    if (!flags[static_cast<std::size_t>(l)]) return false;
  return true;
}

}  // namespace

long Morphism::total_image_length() const {
  long n = 0;
  for (const Word& w : images) n += static_cast<long>(w.size());
  return n;
}

Morphism parse_morphism(std::istream& in) {
  Morphism m;
  std::string raw;
  int lineno = 0;
  std::vector<std::string> rhs_texts;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto arrow = raw.find("->");
    if (arrow == std::string::npos) throw ParseError(lineno, "expected `x -> w`");
    std::string lhs = raw.substr(0, arrow);
    std::string rhs = raw.substr(arrow + 2);
    auto strip = [](std::string& s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    strip(lhs);
    strip(rhs);
    if (lhs.size() != 1) throw ParseError(lineno, "left-hand side must be a single letter");
    if (rhs.find_first_of(" \t") != std::string::npos)
      throw ParseError(lineno, "image must not contain whitespace");
    if (m.source.find(lhs[0]))
      throw ParseError(lineno, std::string("duplicate definition of `") + lhs[0] + "`");
    m.source.intern(lhs[0]);
    rhs_texts.push_back(rhs);
  }
  for (const std::string& rhs : rhs_texts) m.images.push_back(m.target.to_word(rhs, true));
  return m;
}

Morphism parse_morphism(const std::string& text) {
  std::istringstream in(text);
  return parse_morphism(in);
}

Morphism make_morphism(const std::vector<std::pair<char, std::string>>& rules) {
  std::string text;
  for (const auto& [lhs, rhs] : rules) {
    text.push_back(lhs);
    text += " -> ";
    text += rhs;
    text.push_back('\n');
  }
  return parse_morphism(text);
}

std::string format_morphism(const Morphism& m) {
  std::string out;
  for (Letter a = 0; a < m.card_source(); ++a) {
    out.push_back(m.source.symbol(a));
    out += " -> ";
    out += m.target.to_string(m.image(a));
    out.push_back('\n');
  }
  return out;
}

Word apply(const Morphism& m, const Word& w) {
  Word out;
  for (Letter a : w) {
    if (a < 0 || a >= m.card_source())
      throw std::invalid_argument("apply: letter outside the source alphabet");
    const Word& im = m.image(a);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

Morphism compose(const Morphism& alpha, const Morphism& beta) {
  // Translate beta's target letters into alpha's source indexing by symbol.
  std::vector<Letter> translate(static_cast<std::size_t>(beta.card_target()), -1);
  for (Letter b = 0; b < beta.card_target(); ++b) {
    auto l = alpha.source.find(beta.target.symbol(b));
    if (!l)
      throw std::invalid_argument(std::string("compose: alphabet mismatch, letter `") +
                                  beta.target.symbol(b) + "` has no image under the outer morphism");
    translate[static_cast<std::size_t>(b)] = *l;
  }
  Morphism out;
  out.source = beta.source;
  out.target = alpha.target;
  for (const Word& im : beta.images) {
    Word translated;
    translated.reserve(im.size());
    for (Letter b : im) translated.push_back(translate[static_cast<std::size_t>(b)]);
    out.images.push_back(apply(alpha, translated));
  }
  return out;
}

Morphism reversed(const Morphism& m) {
  Morphism out = m;
  for (Word& im : out.images) std::reverse(im.begin(), im.end());
  return out;
}

long ell(const Morphism& m) {
  long sum = 0;
  for (const Word& im : m.images) sum += static_cast<long>(im.size()) - 1;
  return sum;
}

std::vector<std::vector<long>> incidence_matrix(const Morphism& m) {
  std::vector<std::vector<long>> mat(
      static_cast<std::size_t>(m.card_source()),
      std::vector<long>(static_cast<std::size_t>(m.card_target()), 0));
  for (Letter a = 0; a < m.card_source(); ++a)
    for (Letter b : m.image(a)) ++mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  return mat;
}

RankResult incidence_rank(const Morphism& m) {
  using boost::multiprecision::cpp_int;
  auto raw = incidence_matrix(m);
  const int rows = m.card_source();
  const int cols = m.card_target();
  std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(rows),
                                      std::vector<cpp_int>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  // Fraction-free (Bareiss) elimination; exact over the integers.
  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        auto& arc = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        arc = (a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] * arc -
               a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                   a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]) /
              prev;
      }
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
    }
    prev = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    ++rank;
  }
  return {rank, rank == rows};
}

bool injective_on_letters(const Morphism& m) {
  std::set<Word> seen(m.images.begin(), m.images.end());
  return seen.size() == m.images.size();
}

bool is_endomorphism_view(const Morphism& m) { return m.source.contains_all(m.target); }

Morphism endomorphism_view(const Morphism& m) {
  if (!is_endomorphism_view(m))
    throw std::invalid_argument("not an endomorphism: image letters outside the source alphabet");
  Morphism out;
  out.source = m.source;
  out.target = m.source;
  for (const Word& im : m.images) {
    Word w;
    w.reserve(im.size());
    for (Letter b : im) w.push_back(*m.source.find(m.target.symbol(b)));
    out.images.push_back(std::move(w));
  }
  return out;
}

std::vector<Letter> erasable_letters(const Morphism& m) {
  Morphism endo = endomorphism_view(m);
  const int n = endo.card_source();
  // Fixpoint: a letter is erasable once its whole image is erasable.
  std::vector<bool> erasable(static_cast<std::size_t>(n), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Letter a = 0; a < n; ++a) {
      if (erasable[static_cast<std::size_t>(a)]) continue;
      if (all_in(endo.image(a), erasable)) {
        erasable[static_cast<std::size_t>(a)] = true;
        changed = true;
      }
    }
  }
  std::vector<Letter> out;
  for (Letter a = 0; a < n; ++a)
    if (erasable[static_cast<std::size_t>(a)]) out.push_back(a);
  return out;
}

std::vector<Word> erasable_words(const Morphism& m) {
  Morphism endo = endomorphism_view(m);
  const int n = endo.card_source();
  std::vector<bool> erasable(static_cast<std::size_t>(n), false);
  for (Letter a : erasable_letters(m)) erasable[static_cast<std::size_t>(a)] = true;

  std::set<Word> result;
  result.insert(Word{});

  auto add_factors = [&](const Word& w) {
    for (std::size_t i = 0; i <= w.size(); ++i)
      for (std::size_t len = 1; i + len <= w.size(); ++len)
        result.insert(Word(w.begin() + static_cast<long>(i),
                           w.begin() + static_cast<long>(i + len)));
  };

  // Words descending from erasable letters are entirely erasable and die
  // within Card(A) steps; collect them directly.
  for (Letter a = 0; a < n; ++a) {
    if (!erasable[static_cast<std::size_t>(a)]) continue;
    Word w{a};
    for (int step = 0; step <= n && !w.empty(); ++step) {
      add_factors(w);
      w = apply(endo, w);
    }
  }

  // Saturate maximal erasable runs with their non-erasable neighbours.
  // A triple (c, m, d) records that the erasable word m occurs with c on its
  // left and d on its right (−1 marks a word boundary); applying sigma turns
  // it into (c', x·sigma(m)·y, d') where x is the maximal erasable suffix of
  // sigma(c) and y the maximal erasable prefix of sigma(d).
  using Triple = std::tuple<Letter, Word, Letter>;
  const Letter kBoundary = -1;
  std::set<Triple> seen;
  std::vector<Triple> queue;
  auto push = [&](Letter c, Word mid, Letter d) {
    Triple t{c, std::move(mid), d};
    if (seen.insert(t).second) queue.push_back(std::move(t));
  };

  for (Letter a = 0; a < n; ++a) {
    if (erasable[static_cast<std::size_t>(a)]) continue;
    push(kBoundary, {}, a);
    push(a, {}, kBoundary);
    const Word& im = endo.image(a);
    // Internal runs of the image, between consecutive non-erasable letters.
    int prev = -1;
    Word run;
    for (Letter l : im) {
      if (erasable[static_cast<std::size_t>(l)]) {
        run.push_back(l);
      } else {
        if (prev >= 0) push(static_cast<Letter>(prev), run, l);
        prev = l;
        run.clear();
      }
    }
  }

  auto erasable_suffix = [&](const Word& w) {
    std::size_t i = w.size();
    while (i > 0 && erasable[static_cast<std::size_t>(w[i - 1])]) --i;
    return std::pair<Word, Letter>(Word(w.begin() + static_cast<long>(i), w.end()),
                                   i > 0 ? w[i - 1] : kBoundary);
  };
  auto erasable_prefix = [&](const Word& w) {
    std::size_t i = 0;
    while (i < w.size() && erasable[static_cast<std::size_t>(w[i])]) ++i;
    return std::pair<Word, Letter>(Word(w.begin(), w.begin() + static_cast<long>(i)),
                                   i < w.size() ? w[i] : kBoundary);
  };

  constexpr std::size_t kTripleCap = 2'000'000;
  while (!queue.empty()) {
    if (seen.size() > kTripleCap)
      throw std::runtime_error("erasable_words: saturation exceeded the safety cap");
    auto [c, mid, d] = queue.back();
    queue.pop_back();
    add_factors(mid);
    Word x, y;
    Letter c2 = kBoundary, d2 = kBoundary;
    if (c != kBoundary) std::tie(x, c2) = erasable_suffix(endo.image(c));
    if (d != kBoundary) std::tie(y, d2) = erasable_prefix(endo.image(d));
    push(c2, concat(concat(x, apply(endo, mid)), y), d2);
  }

  std::vector<Word> out(result.begin(), result.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Letter> growing_letters(const Morphism& m) {
  Morphism endo = endomorphism_view(m);
  const int n = endo.card_source();
  std::vector<bool> erasable(static_cast<std::size_t>(n), false);
  for (Letter a : erasable_letters(m)) erasable[static_cast<std::size_t>(a)] = true;

  // Occurrence digraph restricted to non-erasable letters; a letter grows iff
  // it reaches a cycle through a vertex producing >= 2 non-erasable letters.
  std::vector<std::set<Letter>> succ(static_cast<std::size_t>(n));
  std::vector<int> weight(static_cast<std::size_t>(n), 0);  // |sigma(a)| counted over N
  for (Letter a = 0; a < n; ++a) {
    if (erasable[static_cast<std::size_t>(a)]) continue;
    for (Letter b : endo.image(a)) {
      if (erasable[static_cast<std::size_t>(b)]) continue;
      succ[static_cast<std::size_t>(a)].insert(b);
      ++weight[static_cast<std::size_t>(a)];
    }
  }

  // SCCs of the restricted digraph (small alphabets: simple pairwise closure).
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
  for (Letter a = 0; a < n; ++a)
    for (Letter b : succ[static_cast<std::size_t>(a)])
      reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

  std::vector<bool> expanding(static_cast<std::size_t>(n), false);
  for (Letter v = 0; v < n; ++v) {
    if (erasable[static_cast<std::size_t>(v)]) continue;
    // v lies on a cycle iff it reaches itself.
    if (reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] &&
        weight[static_cast<std::size_t>(v)] >= 2)
      expanding[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Letter> out;
  for (Letter a = 0; a < n; ++a) {
    if (erasable[static_cast<std::size_t>(a)]) continue;
    bool growing = false;
    for (Letter v = 0; v < n && !growing; ++v)
      if (expanding[static_cast<std::size_t>(v)] &&
          (v == a || reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)]))
        growing = true;
    if (growing) out.push_back(a);
  }
  return out;
}

PeriodicityResult is_periodic_morphism(const Morphism& m) {
  std::vector<const Word*> nonempty;
  for (const Word& im : m.images)
    if (!im.empty()) nonempty.push_back(&im);
  if (nonempty.empty()) return {true, {}, true};
  for (std::size_t i = 0; i < nonempty.size(); ++i)
    for (std::size_t j = i + 1; j < nonempty.size(); ++j)
      if (!commute(*nonempty[i], *nonempty[j])) return {false, {}, false};
  return {true, primitive_root(*nonempty.front()), false};
}

namespace {
bool marked_side(const Morphism& m, bool left) {
  std::set<Letter> firsts;
  for (const Word& im : m.images) {
    if (im.empty()) return false;
    Letter edge = left ? im.front() : im.back();
    if (!firsts.insert(edge).second) return false;
  }
  return true;
}
}  // namespace

bool is_left_marked(const Morphism& m) { return marked_side(m, true); }
bool is_right_marked(const Morphism& m) { return marked_side(m, false); }

std::vector<Word> image_code(const Morphism& m) {
  std::vector<Word> code;
  for (const Word& im : m.images)
    if (std::find(code.begin(), code.end(), im) == code.end()) code.push_back(im);
  return code;
}

}  // namespace morphrec
