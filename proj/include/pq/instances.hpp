#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "pq/family.hpp"
#include "pq/pierce.hpp"

namespace pq {

enum class GenKind {
  kCrossingSegments,
  kDisjoint,
  kConcentric,
  kSegmentsPlusBoxes,
  kRandomPolygons,
  kDiscPolygons,
  kGridPoints,
};

const char* gen_kind_name(GenKind kind);
std::optional<GenKind> parse_gen_kind(std::string_view name);

/// Generator request. Fields not used by a kind are ignored.
struct GenSpec {
  GenKind kind = GenKind::kCrossingSegments;
  int n = 0;             // bodies (or support points for kGridPoints)
  int p = 0;             // kSegmentsPlusBoxes
  int q = 0;             // kSegmentsPlusBoxes
  int grid = 20;         // coordinate range for random kinds
  int vertices = 5;      // points per random polygon / disc approximation
  int radius = 6;        // spread of random polygons / max disc radius
  int max_weight = 1;    // kGridPoints
  bool strips = false;   // kCrossingSegments: thin parallelograms instead of segments
  std::uint64_t seed = 0;
};

using Generated = std::variant<Family, WeightedPoints>;

/// Deterministic in (kind, parameters, seed). Throws PreconditionError on bad
/// parameters and VerificationFailure if post-hoc checks keep failing.
Generated gen(const GenSpec& spec);

/// Family-producing kinds only.
Family gen_family(const GenSpec& spec);

/// Portable uniform integers on top of mt19937_64 (whose output sequence the
/// standard fixes, unlike the distribution classes).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi);
  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pq
