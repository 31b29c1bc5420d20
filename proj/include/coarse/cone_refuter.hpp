#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coarse/certifier.hpp"
#include "coarse/presentation.hpp"

namespace coarse {

/// Raised when ball construction or search would exceed its limits.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Letters are +-(generator index + 1).
using LetterWord = std::vector<int>;

LetterWord free_reduce(const LetterWord& w);
LetterWord invert(const LetterWord& w);

struct LetterWordHash {
  std::size_t operator()(const LetterWord& w) const;
};

struct BallOptions {
  std::size_t radius = 1;
  /// Cap on the number of freely reduced words enumerated.
  std::size_t max_words = 500000;
  /// Extra length allowed beyond radius + longest relator.
  std::size_t slack = 0;
  /// Cap on distinct (g, h, g*h) triples.
  std::size_t max_products = 4000000;
};

/// One elementary identification: in `from` the subword `removed` starting at
/// `position` is replaced by `inserted`, then the result is freely reduced to
/// `to`. removed * inserted^-1 is a cyclic conjugate of a relator or its
/// inverse.
struct Witness {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t position = 0;
  LetterWord removed;
  LetterWord inserted;
};

struct Product {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t result = 0;
  friend auto operator<=>(const Product&, const Product&) = default;
};

class GroupBall {
 public:
  static GroupBall build(const Presentation& p, const BallOptions& options);

  std::size_t radius() const { return radius_; }
  std::size_t length_cap() const { return cap_; }
  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<LetterWord>& relators() const { return relators_; }

  /// All enumerated freely reduced words (shortlex order) and their classes.
  const std::vector<LetterWord>& words() const { return words_; }
  std::size_t word_index(const LetterWord& w) const;  // throws if absent
  /// Ball element of word `i`, or npos when its class has no word of length
  /// <= radius.
  std::size_t element_of_word(std::size_t i) const;

  /// Elements are classes meeting the radius ball, ordered by shortlex-least
  /// representative; element 0 is the identity.
  std::size_t element_count() const { return reps_.size(); }
  const LetterWord& representative(std::size_t e) const { return words_[reps_[e]]; }
  std::size_t inverse(std::size_t e) const { return inverse_[e]; }
  const std::vector<Product>& products() const { return products_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }

  std::string format_word(const LetterWord& w) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t radius_ = 0;
  std::size_t cap_ = 0;
  std::vector<std::string> gens_;
  std::vector<LetterWord> relators_;
  std::vector<LetterWord> words_;
  std::vector<std::size_t> word_class_;
  std::vector<std::size_t> class_element_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> inverse_;
  std::vector<Product> products_;
  std::vector<Witness> witnesses_;
  std::unordered_map<LetterWord, std::size_t, LetterWordHash> index_;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

struct RefuteResult {
  Certificate certificate;
  /// Search statistics.
  std::uint64_t nodes = 0;
  std::uint64_t conflicts = 0;
  std::string digest;
  /// Satisfying signs per element when the search is inconclusive.
  std::vector<Sign> signs;
};

/// Searches for a sign assignment on the ball: each element is positive,
/// negative or (possibly) trivial, inverses have opposite signs, products of
/// two positives (negatives) are positive (negative), multiplying by a
/// trivial element keeps the sign, and some generator is nontrivial.
/// Unsatisfiability proves the group is not left-orderable.
RefuteResult refute(const GroupBall& ball);
RefuteResult refute(const Presentation& p, const BallOptions& options);

}  // namespace coarse
