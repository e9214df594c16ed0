#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlab/errors.hpp"

namespace hyperlab::surface {

enum class SlotKind { Interior, Boundary, Puncture };

struct Slot {
  SlotKind kind = SlotKind::Boundary;
  int curve = -1;  // index into PantsDecomposition::curves (Interior/Boundary)
  bool operator==(const Slot&) const = default;
};

struct Pants {
  std::array<Slot, 3> slots;
  bool operator==(const Pants&) const = default;
};

// One decomposition or boundary curve, with its pants attachments.
struct CurveInfo {
  bool interior = false;
  // (pants, slot) ends; boundary curves have one, interior curves two.
  std::vector<std::pair<int, int>> ends;
  bool operator==(const CurveInfo&) const = default;
};

// A gluing edge of the dual graph (one per interior curve).
struct GluingEdge {
  int curve = -1;
  int p = -1, slot_p = -1;
  int q = -1, slot_q = -1;
  bool in_tree = false;  // spanning-tree edge of the dual graph
  bool operator==(const GluingEdge&) const = default;
};

// Input description for build_decomposition.
struct DecompositionSpec {
  // Per pants, three slot kind tags; Interior slots must be matched by a gluing.
  std::vector<std::array<SlotKind, 3>> pants;
  // Pairs of (pants, slot), each Interior slot in exactly one pair.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> gluings;
};

class PantsDecomposition {
 public:
  std::vector<Pants> pants;
  std::vector<CurveInfo> curves;   // interior curves first (gluing order), then boundary
  std::vector<GluingEdge> edges;   // edges[i] belongs to curves[i]
  std::vector<int> bfs_order;      // pants in spanning-tree BFS order
  std::vector<int> parent_edge;    // per pants: tree edge index to its BFS parent (-1 for root)

  int num_interior() const;
  int num_boundary() const;
  int num_punctures() const;
  int euler_characteristic() const { return -static_cast<int>(pants.size()); }
  int genus() const;

  // Generator alphabet for curve words: one generator per pants cuff slot,
  // plus one per non-tree gluing edge (handle generator).
  int cuff_gen(int p, int slot) const { return 3 * p + slot; }
  int edge_gen(int edge) const { return 3 * static_cast<int>(pants.size()) + edge; }
  int num_generators() const {
    return 3 * static_cast<int>(pants.size()) + static_cast<int>(edges.size());
  }
  bool is_edge_gen(int g) const { return g >= 3 * static_cast<int>(pants.size()); }

  bool operator==(const PantsDecomposition&) const = default;
};

using DecompositionPtr = std::shared_ptr<const PantsDecomposition>;

// Validates the spec (no dangling slot, no double gluing, connected graph)
// and computes the dual-graph spanning tree.
DecompositionPtr build_decomposition(const DecompositionSpec& spec);

// Named presets: "one-holed-torus", "four-holed-sphere", "genus-2", "pants",
// and "ladder-k" via ladder_preset(k).
DecompositionPtr preset_decomposition(const std::string& name);
DecompositionPtr ladder_preset(int k);

struct FNPoint {
  DecompositionPtr decomp;
  std::vector<double> lengths;  // per curve, > 0
  std::vector<double> twists;   // per interior curve, in curve-index order (radians)

  double length_of(int curve) const { return lengths.at(curve); }
  double twist_of(int curve) const;  // throws for boundary curves
};

// Validates counts and positivity.  `twists` has one entry per interior curve.
FNPoint make_fn_point(DecompositionPtr decomp, std::vector<double> lengths,
                      std::vector<double> twists);

// --- curve classes ---------------------------------------------------------

struct Letter {
  int gen = 0;
  int exp = 1;  // +-1
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

enum class CurveKind { Closed, Arc };

// Structured origin of an enumerated class; lets Dehn twists act exactly.
enum class CurveBase { DecompositionCurve, BoundaryCurve, DualCurve, Word };

struct CurveClass {
  CurveKind kind = CurveKind::Closed;
  std::vector<Letter> word;  // closed: cyclic word; arc: connecting word

  // Arc data: boundary curve ids of the endpoints.
  int from_boundary = -1;
  int to_boundary = -1;

  // Combinatorial geometric intersection numbers with decomposition curves
  // (exact for seeds and their twist orbits).
  std::vector<int> intersections;

  CurveBase base = CurveBase::Word;
  int base_curve = -1;  // curve index for DecompositionCurve/BoundaryCurve/DualCurve
  int twist_exp = 0;    // Dehn-twist power about base_curve (DualCurve only)

  std::string name;
};

// Canonical form of a cyclic word: freely and cyclically reduced, minimal
// over rotations and inversion.  Used for dedup and equality.
std::vector<Letter> canonical_cyclic_word(std::vector<Letter> w);

// The curve C_i itself as a class.
CurveClass curve_as_class(const PantsDecomposition& d, int curve);

// Dual curve beta_i: crosses C_i once (self-glued handle) or
// twice (two distinct pants), and no other decomposition curve.
CurveClass dual_curve(const PantsDecomposition& d, int curve);

// n-fold Dehn twist about decomposition curve `about`; identity when the
// stored intersection number vanishes.  Arcs are rejected.
CurveClass dehn_twist_class(const PantsDecomposition& d, const CurveClass& c,
                            int about, int n);

// Boundary-free double: two mirror copies glued along all boundary curves.
DecompositionPtr double_surface(const PantsDecomposition& d);

// Deterministic finite family: decomposition + boundary curves and the Dehn
// twist orbits Tw^n(beta_i), |n| <= K, of the dual curves.
std::vector<CurveClass> enumerate_curves(const PantsDecomposition& d, int K);

// Essential arc classes between boundary curves (surfaces with boundary),
// grown with twist powers about decomposition curves up to K.
std::vector<CurveClass> enumerate_arcs(const PantsDecomposition& d, int K);

// --- boundedness -----------------------------------------------------------

struct ShigaBounds {
  double delta = 0.0;
  double M = 0.0;
};

enum class Boundedness { Shiga, UpperBoundedOnly, Unbounded };

// Family given by its computable infimum and supremum.
struct LengthFamily {
  double inf = 0.0;
  double sup = 0.0;
};

LengthFamily family_from_values(const std::vector<double>& values);
Boundedness boundedness_check(const LengthFamily& family, const ShigaBounds& bounds);

// --- JSON IO (schema: docs/file-formats.md) --------------------------------

std::string to_json(const FNPoint& p);
FNPoint fn_point_from_json(const std::string& text);

}  // namespace hyperlab::surface
