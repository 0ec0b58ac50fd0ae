#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expander/fpset.hpp"
#include "expander/poly.hpp"

namespace expander {

struct Point3 {
  Elem x = 0, y = 0, z = 0;
  auto operator<=>(const Point3&) const = default;
};

/// The plane u*X + v*Y + w*Z = c. Canonical form scales (u, v, w, c) so that
/// the last nonzero of (u, v, w) is 1; planes with w != 0 therefore carry w = 1.
struct Plane3 {
  Elem u = 0, v = 0, w = 0, c = 0;
  auto operator<=>(const Plane3&) const = default;

  /// Throws RangeError when (u, v, w) = 0.
  static Plane3 make(const PrimeField& F, Elem u, Elem v, Elem w, Elem c);
  bool contains(const PrimeField& F, const Point3& q) const noexcept {
    return F.add(F.add(F.mul(u, q.x), F.mul(v, q.y)), F.mul(w, q.z)) == c;
  }
};

enum class Provenance { Cubic, Shift, User };
std::string_view to_string(Provenance p) noexcept;

struct IncidenceInstance {
  FieldPtr field;
  std::vector<Point3> points;  // sorted, distinct
  std::vector<Plane3> planes;  // sorted, distinct, canonical
  Provenance provenance = Provenance::User;
  std::vector<FpSet> generators;
  // Index tuples that produced the points / planes before deduplication.
  std::uint64_t point_tuples = 0;
  std::uint64_t plane_tuples = 0;
};

/// Normalizes planes and removes duplicates.
IncidenceInstance make_instance(FieldPtr field, std::vector<Point3> points, std::vector<Plane3> planes,
                                Provenance provenance = Provenance::User);

inline constexpr std::uint64_t kIncidenceBudget = 1'000'000'000;

/// Exact |{(r, s) : r in s}|. Each plane is solved for its last nonzero
/// coordinate and tested against the projection of R onto the other two, so
/// the work is |S| * |projection| rather than |R| * |S|.
std::uint64_t count_incidences(const IncidenceInstance& inst, std::uint64_t budget = kIncidenceBudget,
                               unsigned jobs = 1);

/// Tests every (point, plane) pair.
std::uint64_t count_incidences_naive(const IncidenceInstance& inst, std::uint64_t budget = kIncidenceBudget);

/// max over lines L of min(#points on L, #planes containing L).
std::uint64_t collinearity_param(const IncidenceInstance& inst, std::uint64_t budget = kIncidenceBudget);

struct RudnevReport {
  std::uint64_t rhs = 0;  // ceil(sqrt|R|) * |S| + k * |S|
  bool points_le_planes = false;
  bool points_le_p_squared = false;
  bool preconditions_ok() const noexcept { return points_le_planes && points_le_p_squared; }
};

RudnevReport rudnev_rhs(std::uint64_t num_points, std::uint64_t num_planes, std::uint64_t k, std::uint64_t p);
RudnevReport rudnev_rhs(const IncidenceInstance& inst, std::uint64_t k);

/// Points (t^2, b', -b'^3/4 + x) and planes 3bX - 3t'^2 Y + Z = -b^3/4 + x'
/// with t, t' in T = {a - b/2 : a, b in A}.
IncidenceInstance build_cubic_construction(const FpSet& A, const FpSet& X);
/// T = {a - b/2 : a, b in A}.
FpSet half_difference_set(const FpSet& A);

/// Points (a x, y', d x + a x^2 + z - a y'^2 + d y') and planes
/// -2y X + 2a x' Y + Z = a x'^2 + d x' + z' - a y^2 + d y, indexed by
/// (A + f(A)) x f(A) x A, for f(u) = a u^2 + d u (+ c0). Throws
/// DegenerateQuadratic if a = 0.
IncidenceInstance build_shift_construction(const FpSet& A, const UniQuad& f);

/// JSON: {"p", "points": [[x,y,z]...], "planes": [[u,v,w,c]...], "provenance"}.
std::string to_json(const IncidenceInstance& inst);

}  // namespace expander
