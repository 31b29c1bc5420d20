#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coarse/presentation.hpp"

namespace coarse {

enum class Verdict { NotLeftOrderable, Inconclusive };
enum class Method { None, UniformSign, Theta1, Theta2, Pentagon, ConeSearch };

std::string verdict_name(Verdict v);
std::string method_name(Method m);

/// Coarse presentation pattern. Slot regions use the empty string for the
/// outer region.
struct Template {
  enum class Kind { Theta, Pentagon };
  struct Slot {
    std::string name;
    std::string left;
    std::string right;
  };

  Kind kind = Kind::Theta;
  std::string name;
  std::vector<std::string> regions;
  std::vector<Slot> slots;
  std::vector<Word> cycles;
};

/// Six tangles around three bounded regions A, B, C.
Template theta_template();
/// Ten tangles around five bounded regions A, ..., E.
Template pentagon_template();

/// Coarse presentation with the template's own structure; every range is
/// [[0, 0]] and every tangle Q(1).
CoarsePresentation template_presentation(const Template& t);

struct Assignment {
  /// Per template slot: index into CoarsePresentation::tangles.
  std::vector<std::size_t> tangle;
  /// Per template slot: true when the tangle is used against its orientation.
  std::vector<bool> flipped;
  /// Per template region: the assigned region name.
  std::vector<std::string> region;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// All structure-preserving assignments of `t` onto `cp`.
std::vector<Assignment> match_template(const CoarsePresentation& cp, const Template& t);

/// True when `a` maps bases and cycles of `t` onto those of `cp`.
bool assignment_is_valid(const Assignment& a, const CoarsePresentation& cp, const Template& t);

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Method method = Method::None;
  std::vector<std::string> assignment;
  std::vector<std::string> evidence;
  std::vector<std::string> trace;
};

Certificate check_uniform_sign(const CoarsePresentation& cp);
Certificate check_conditions(const Assignment& a, const CoarsePresentation& cp, const Template& t);

/// Uniform sign first, then every match of the theta and pentagon templates.
Certificate certify(const CoarsePresentation& cp);

std::string format_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

struct ReplayResult {
  bool ok = false;
  Certificate recomputed;
  std::string message;
};

/// Re-evaluates the recorded method and assignment against `cp` and checks
/// that the verdict is reproduced.
ReplayResult replay_certificate(const Certificate& c, const CoarsePresentation& cp);

}  // namespace coarse
