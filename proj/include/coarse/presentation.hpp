#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coarse/exact_arith.hpp"
#include "coarse/planar_map.hpp"
#include "coarse/range.hpp"
#include "coarse/tangle.hpp"

namespace coarse {

struct Syllable {
  std::string gen;
  std::int64_t exp = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in syllable form: adjacent syllables have distinct
/// generators and no exponent is zero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);
  static Word letter(std::string gen, std::int64_t exp = 1);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  /// Total letter count, sum of |exp|.
  std::int64_t length() const;

  Word inverse() const;
  Word power(std::int64_t n) const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  /// `A^-1 B`, or `1` for the empty word.
  std::string to_string() const;
  static Word parse(std::string_view text);

 private:
  std::vector<Syllable> syl_;
};

enum class GeneratorKind { Edge, Region, Tangle };
enum class RelatorKind { LocalEdge, ReducedLocalEdge, GlobalCycle };

struct Generator {
  std::string name;
  GeneratorKind kind = GeneratorKind::Edge;
};

struct Relator {
  Word word;
  RelatorKind kind = RelatorKind::LocalEdge;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Relator> relators;

  std::vector<std::string> generator_names() const;
};

/// Text format, one item per line:
///   gen <edge|region|tangle> <name>
///   rel <word>
///   cycle <word>
///   range <name> in [[a, b]] base <word>
std::string format_presentation(const Presentation& p);
/// Reads the format above; `range` lines are accepted and ignored. Every
/// relator letter must be a declared generator.
Presentation parse_presentation(std::string_view text);

Presentation brunner(const PlanarMap& m);
Presentation reduced_brunner(const PlanarMap& m);

struct TangleGenerator {
  std::string name;
  TangleExpr expr = TangleExpr::rational(1);
  Range range;
  /// Left and right regions of the edge; empty string for the outer region.
  std::string base_left;
  std::string base_right;

  /// R_l^-1 R_r with the outer region removed.
  Word base() const;
};

struct CoarsePresentation {
  std::vector<TangleGenerator> tangles;
  std::vector<std::string> regions;
  std::vector<Word> cycles;
};

CoarsePresentation coarse_brunner(const PlanarMap& m, bool refine);
std::string format_coarse(const CoarsePresentation& cp);

using IntMatrix = std::vector<std::vector<Integer>>;

/// Relator-by-generator exponent sums; columns follow `p.generators`.
IntMatrix abelianize(const Presentation& p);

struct SmithForm {
  /// min(rows, cols) diagonal entries, d_i >= 0 and d_i | d_{i+1}.
  std::vector<Integer> diagonal;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols
};

/// U * M * V = D with U and V unimodular. `cols` fixes the width when M has
/// no rows.
SmithForm smith_normal_form(const IntMatrix& m, std::size_t cols);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& a);

/// Order of the abelianization, 0 when infinite.
Integer h1_order(const Presentation& p);

/// Invariant factors of the abelianization: the SNF diagonal padded with
/// zeros to the generator count, with the unit entries removed.
std::vector<Integer> h1_invariants(const Presentation& p);

}  // namespace coarse
