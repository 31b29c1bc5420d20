#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "coarse/exact_arith.hpp"
#include "coarse/tangle.hpp"

namespace coarse {

/// Raised when map data violates a structural invariant.
class map_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Band with `value` signed half twists.
struct IntegerLabel {
  Integer value;
  friend bool operator==(const IntegerLabel&, const IntegerLabel&) = default;
};

/// Bundle of `m` parallel bands of sign `sign`, written +-1/m.
struct InverseLabel {
  int sign = 1;
  Integer m;
  friend bool operator==(const InverseLabel&, const InverseLabel&) = default;
};

struct TangleLabel {
  TangleExpr expr;
  friend bool operator==(const TangleLabel&, const TangleLabel&) = default;
};

/// Connectivity-graph edges carry no label.
struct NoLabel {
  friend bool operator==(const NoLabel&, const NoLabel&) = default;
};

using EdgeLabel = std::variant<IntegerLabel, InverseLabel, TangleLabel, NoLabel>;

std::string format_label(const EdgeLabel& label);

/// Darts are numbered 2*edge (the tail end) and 2*edge + 1 (the head end).
using DartId = std::size_t;

constexpr DartId tail_dart(std::size_t edge) { return 2 * edge; }
constexpr DartId head_dart(std::size_t edge) { return 2 * edge + 1; }
constexpr std::size_t edge_of(DartId d) { return d / 2; }
constexpr bool is_head(DartId d) { return (d & 1U) != 0; }
constexpr DartId twin(DartId d) { return d ^ 1U; }

struct MapEdge {
  /// Name segments: the input edge id followed by expansion indices. The
  /// printed name joins them with '_'.
  std::vector<std::string> path;
  std::size_t tail = 0;
  std::size_t head = 0;
  EdgeLabel label = NoLabel{};

  std::string name() const;
};

struct Face {
  std::size_t id = 0;
  std::string name;
  /// Boundary darts in tracing order; the face lies on the left of each.
  std::vector<DartId> darts;
};

/// Edge of a face boundary word: traversal along (+1) or against (-1) the
/// edge orientation.
struct OrientedEdge {
  std::size_t edge = 0;
  int exponent = 1;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

/// Raw constituents of a map, validated by PlanarMap::build.
struct MapParts {
  std::vector<std::string> vertices;
  std::vector<MapEdge> edges;
  /// Counterclockwise dart order around each vertex.
  std::vector<std::vector<DartId>> rotation;
  /// Named faces as (name, dart on whose left the face lies), in declaration
  /// order. Faces left unnamed receive R1, R2, ... by smallest dart.
  std::vector<std::pair<std::string, DartId>> face_names;
  DartId outer_dart = 0;
};

/// Rotation-system combinatorial map with labelled, oriented edges and a
/// designated outer face.
///
/// Faces are orbits of next(d) = rotation predecessor of twin(d) at the head
/// of d; with counterclockwise rotations each orbit traces the face on the
/// left of its darts. Every face carries a name that survives expansions.
class PlanarMap {
 public:
  /// Validates: darts used exactly once in the rotation of their own vertex,
  /// no loops, V - E + F = 2, unique face names. Throws map_error.
  static PlanarMap build(MapParts parts);

  std::size_t vertex_count() const { return parts_.vertices.size(); }
  std::size_t edge_count() const { return parts_.edges.size(); }
  std::size_t face_count() const { return faces_.size(); }

  const std::string& vertex_name(std::size_t v) const { return parts_.vertices[v]; }
  const MapEdge& edge(std::size_t e) const { return parts_.edges[e]; }
  const std::vector<MapEdge>& edges() const { return parts_.edges; }
  const std::vector<DartId>& rotation(std::size_t v) const { return parts_.rotation[v]; }
  std::size_t dart_vertex(DartId d) const;

  /// Faces ordered by smallest dart id.
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_of(DartId d) const { return face_of_dart_[d]; }
  std::size_t outer_face() const { return outer_face_; }
  std::optional<std::size_t> find_face(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view name) const;
  /// Face indices in name-declaration order (declared names first, then
  /// generated ones).
  const std::vector<std::size_t>& faces_in_declaration_order() const { return declared_order_; }

  DartId next_in_face(DartId d) const;
  int euler_characteristic() const {
    return static_cast<int>(vertex_count()) - static_cast<int>(edge_count()) + static_cast<int>(face_count());
  }

  const MapParts& parts() const { return parts_; }

  /// Copy with edge `e` reversed; the label and faces are kept.
  PlanarMap with_flipped_edge(std::size_t e) const;

 private:
  PlanarMap() = default;

  MapParts parts_;
  std::vector<std::size_t> dart_vertex_;
  std::vector<std::size_t> dart_pos_;
  std::vector<Face> faces_;
  std::vector<std::size_t> face_of_dart_;
  std::vector<std::size_t> declared_order_;
  std::size_t outer_face_ = 0;
};

/// Line format:
///   vertex <vid>
///   edge <eid> <tail> <head> "<tangle-expr>"
///   rot <vid> : <eid>.t|<eid>.h ...      (counterclockwise)
///   outer : <dart>
///   region <name> : <dart>              (optional face name)
/// `#` starts a comment.
PlanarMap parse_map(std::string_view text);

/// Map file text for `m`; parse_map(format_map(m)) reproduces m.
std::string format_map(const PlanarMap& m);

std::vector<Face> trace_faces(const PlanarMap& m);

/// Replace tangle labels by integer and inverse labels: sums become series
/// edges through a fresh vertex, products become parallel edges around a
/// fresh face, other rational tangles expand through their continued
/// fraction.
PlanarMap expand_to_reduced(const PlanarMap& m);

/// Replace each +-1/m edge by m parallel +-1 edges.
PlanarMap expand_to_full(const PlanarMap& m);

/// Connectivity graph together with the bundle correspondence.
struct ConnectivityMap {
  PlanarMap map;
  /// Edge of `map` for each edge of the source map.
  std::vector<std::size_t> bundle_of;
  /// True when the source edge runs against its bundle edge.
  std::vector<bool> reversed;
  /// Source edges of each bundle, in source order.
  std::vector<std::vector<std::size_t>> members;
};

/// Collapse every maximal bundle of parallel edges joined by bounded bigon
/// faces into one unlabelled edge oriented like its first member.
ConnectivityMap collapse_connectivity(const PlanarMap& m);

/// (face on the left, face on the right) of edge `e` for its orientation.
std::pair<std::size_t, std::size_t> adjacent_regions(const PlanarMap& m, std::size_t e);

/// Cyclic boundary word of `face` read against its tracing direction, so that
/// a bounded face is walked clockwise with the face on the right. Written
/// with the first traversed edge rightmost; the walk starts at the
/// lowest-numbered edge traversed along its orientation (or the lowest edge
/// if there is none).
std::vector<OrientedEdge> boundary_word(const PlanarMap& m, std::size_t face);

}  // namespace coarse
