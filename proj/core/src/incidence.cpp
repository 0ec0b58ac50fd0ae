#include "expander/incidence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "expander/freq.hpp"
#include <nlohmann/json.hpp>

namespace expander {

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Cubic: return "CUBIC";
    case Provenance::Shift: return "SHIFT";
    case Provenance::User: return "USER";
  }
  return "USER";
}

Plane3 Plane3::make(const PrimeField& F, Elem u, Elem v, Elem w, Elem c) {
  u %= F.p();
  v %= F.p();
  w %= F.p();
  c %= F.p();
  const Elem lead = w != 0 ? w : v != 0 ? v : u;
  if (lead == 0) throw Error(Errc::RangeError, "plane needs a nonzero normal vector");
  const Elem s = F.inv(lead);
  return Plane3{F.mul(u, s), F.mul(v, s), F.mul(w, s), F.mul(c, s)};
}

IncidenceInstance make_instance(FieldPtr field, std::vector<Point3> points, std::vector<Plane3> planes,
                                Provenance provenance) {
  IncidenceInstance inst;
  inst.point_tuples = points.size();
  inst.plane_tuples = planes.size();
  for (auto& s : planes) s = Plane3::make(*field, s.u, s.v, s.w, s.c);
  for (auto& q : points) q = Point3{q.x % field->p(), q.y % field->p(), q.z % field->p()};
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::sort(planes.begin(), planes.end());
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
  inst.field = std::move(field);
  inst.points = std::move(points);
  inst.planes = std::move(planes);
  inst.provenance = provenance;
  return inst;
}

namespace {

std::uint64_t pack(Elem a, Elem b, Elem c) {
  return (std::uint64_t{a} << 42) | (std::uint64_t{b} << 21) | std::uint64_t{c};
}

void require_budget(long double cost, std::uint64_t budget, const char* what) {
  if (cost > static_cast<long double>(budget)) {
    throw Error(Errc::BudgetExceeded, std::string(what) + " exceeds the work budget of " + std::to_string(budget));
  }
}

/// Distinct pairs of coordinates obtained by dropping coordinate `drop`.
std::vector<std::array<Elem, 2>> projection(const std::vector<Point3>& pts, int drop) {
  std::vector<std::array<Elem, 2>> out;
  out.reserve(pts.size());
  for (const auto& q : pts) {
    if (drop == 0) out.push_back({q.y, q.z});
    if (drop == 1) out.push_back({q.x, q.z});
    if (drop == 2) out.push_back({q.x, q.y});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::uint64_t count_incidences(const IncidenceInstance& inst, std::uint64_t budget, unsigned jobs) {
  const auto& F = *inst.field;
  if (inst.points.empty() || inst.planes.empty()) return 0;
  const std::array<std::vector<std::array<Elem, 2>>, 3> proj{projection(inst.points, 0), projection(inst.points, 1),
                                                             projection(inst.points, 2)};
  long double cost = 0;
  for (const auto& s : inst.planes) cost += proj[s.w != 0 ? 2 : s.v != 0 ? 1 : 0].size();
  require_budget(cost, budget, "incidence count");

  std::unordered_set<std::uint64_t> present;
  present.reserve(inst.points.size() * 2);
  for (const auto& q : inst.points) present.insert(pack(q.x, q.y, q.z));

  // Canonical planes have coefficient 1 on the solved coordinate.
  auto count_plane = [&](const Plane3& s) -> std::uint64_t {
    std::uint64_t n = 0;
    if (s.w != 0) {
      for (const auto& [x, y] : proj[2]) {
        const Elem z = F.sub(s.c, F.add(F.mul(s.u, x), F.mul(s.v, y)));
        n += present.count(pack(x, y, z));
      }
    } else if (s.v != 0) {
      for (const auto& [x, z] : proj[1]) {
        const Elem y = F.sub(s.c, F.mul(s.u, x));
        n += present.count(pack(x, y, z));
      }
    } else {
      for (const auto& [y, z] : proj[0]) n += present.count(pack(s.c, y, z));
    }
    return n;
  };

  const std::size_t m = inst.planes.size();
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(m)));
  std::vector<std::uint64_t> partial(jobs, 0);
  auto work = [&](unsigned t) {
    for (std::size_t i = m * t / jobs; i < m * (t + 1) / jobs; ++i) partial[t] += count_plane(inst.planes[i]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

std::uint64_t count_incidences_naive(const IncidenceInstance& inst, std::uint64_t budget) {
  require_budget(static_cast<long double>(inst.points.size()) * inst.planes.size(), budget, "naive incidence count");
  std::uint64_t n = 0;
  for (const auto& s : inst.planes) {
    for (const auto& q : inst.points) n += s.contains(*inst.field, q);
  }
  return n;
}

std::uint64_t collinearity_param(const IncidenceInstance& inst, std::uint64_t budget) {
  const auto& F = *inst.field;
  const auto& pts = inst.points;
  const std::size_t n = pts.size();
  require_budget(static_cast<long double>(n) * n / 2, budget, "collinearity pair enumeration");

  struct Line {
    std::array<Elem, 3> base, dir;
    bool operator==(const Line&) const = default;
  };
  struct LineHash {
    std::size_t operator()(const Line& l) const noexcept {
      return std::hash<std::uint64_t>{}(pack(l.base[0], l.base[1], l.base[2]) * 0x9E3779B97F4A7C15ULL ^
                                        pack(l.dir[0], l.dir[1], l.dir[2]));
    }
  };
  // Number of point pairs on each line through two points of R.
  std::unordered_map<Line, std::uint64_t, LineHash> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::array<Elem, 3> a{pts[i].x, pts[i].y, pts[i].z}, b{pts[j].x, pts[j].y, pts[j].z}, d{};
      for (int t = 0; t < 3; ++t) d[t] = F.sub(b[t], a[t]);
      int piv = d[0] != 0 ? 0 : d[1] != 0 ? 1 : 2;
      const Elem s = F.inv(d[piv]);
      for (auto& x : d) x = F.mul(x, s);
      std::array<Elem, 3> base{};
      for (int t = 0; t < 3; ++t) base[t] = F.sub(a[t], F.mul(a[piv], d[t]));
      ++pairs[Line{base, d}];
    }
  }
  std::vector<std::pair<std::uint64_t, Line>> lines;
  lines.reserve(pairs.size());
  for (const auto& [line, np] : pairs) {
    // np = m(m-1)/2
    const auto m = static_cast<std::uint64_t>(std::llround((1.0L + std::sqrt(1.0L + 8.0L * np)) / 2.0L));
    lines.emplace_back(m, line);
  }
  std::sort(lines.begin(), lines.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first > r.first;
    return std::tie(l.second.base, l.second.dir) < std::tie(r.second.base, r.second.dir);
  });

  std::uint64_t best = 0;
  long double work = 0;
  for (const auto& [m, line] : lines) {
    if (m <= best) break;
    work += inst.planes.size();
    require_budget(work, budget, "collinearity plane scan");
    std::uint64_t through = 0;
    for (const auto& s : inst.planes) {
      const Elem nd = F.add(F.add(F.mul(s.u, line.dir[0]), F.mul(s.v, line.dir[1])), F.mul(s.w, line.dir[2]));
      if (nd != 0) continue;
      const Point3 q{line.base[0], line.base[1], line.base[2]};
      through += s.contains(F, q);
    }
    best = std::max(best, std::min(m, through));
  }
  // A single point lying on a plane spans a line with one point inside that plane.
  if (best == 0 && count_incidences(inst, budget) > 0) best = 1;
  return best;
}

RudnevReport rudnev_rhs(std::uint64_t num_points, std::uint64_t num_planes, std::uint64_t k, std::uint64_t p) {
  RudnevReport r;
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(num_points)));
  while (root * root < num_points) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= num_points) --root;
  r.rhs = root * num_planes + k * num_planes;
  r.points_le_planes = num_points <= num_planes;
  r.points_le_p_squared = static_cast<Wide>(num_points) <= static_cast<Wide>(p) * p;
  return r;
}

RudnevReport rudnev_rhs(const IncidenceInstance& inst, std::uint64_t k) {
  return rudnev_rhs(inst.points.size(), inst.planes.size(), k, inst.field->p());
}

FpSet half_difference_set(const FpSet& A) {
  const auto& F = A.field();
  const Elem half = F.inv(2);
  FpSet T(A.field_ptr());
  const auto elems = A.elements();
  for (Elem a : elems) {
    for (Elem b : elems) T.insert(F.sub(a, F.mul(b, half)));
  }
  return T;
}

IncidenceInstance build_cubic_construction(const FpSet& A, const FpSet& X) {
  require_same_field(A, X);
  if (A.empty() || X.empty()) throw Error(Errc::RangeError, "cubic construction needs nonempty A and X");
  const auto& F = A.field();
  const Elem quarter = F.inv(4);
  const FpSet T = half_difference_set(A);
  const auto te = T.elements(), ae = A.elements(), xe = X.elements();

  std::vector<Point3> points;
  std::vector<Plane3> planes;
  points.reserve(te.size() * ae.size() * xe.size());
  planes.reserve(points.capacity());
  for (Elem t : te) {
    const Elem t2 = F.mul(t, t);
    for (Elem b : ae) {
      const Elem b3q = F.mul(F.mul(F.mul(b, b), b), quarter);
      for (Elem x : xe) {
        points.push_back(Point3{t2, b, F.sub(x, b3q)});
        planes.push_back(Plane3{F.mul(3, b), F.neg(F.mul(3, t2)), 1, F.sub(x, b3q)});
      }
    }
  }
  auto inst = make_instance(A.field_ptr(), std::move(points), std::move(planes), Provenance::Cubic);
  inst.generators = {A, X, T};
  return inst;
}

IncidenceInstance build_shift_construction(const FpSet& A, const UniQuad& f) {
  if (f.a == 0) throw Error(Errc::DegenerateQuadratic, "shift construction needs a nonzero u^2 coefficient");
  if (A.empty()) throw Error(Errc::RangeError, "shift construction needs nonempty A");
  const auto& F = A.field();
  const FpSet fA = image_unary(f, A);
  const FpSet S0 = sumset(A, fA);
  const auto xs = S0.elements(), ys = fA.elements(), zs = A.elements();
  const Elem a = f.a, d = f.d;

  std::vector<Point3> points;
  std::vector<Plane3> planes;
  points.reserve(xs.size() * ys.size() * zs.size());
  planes.reserve(points.capacity());
  for (Elem x : xs) {
    const Elem fx = F.add(F.mul(F.mul(a, x), x), F.mul(d, x));  // a x^2 + d x
    for (Elem y : ys) {
      const Elem gy = F.sub(F.mul(d, y), F.mul(F.mul(a, y), y));  // -a y^2 + d y
      for (Elem z : zs) {
        // point indexed by (x, y' = y, z); plane indexed by (x' = x, y, z' = z)
        points.push_back(Point3{F.mul(a, x), y, F.add(F.add(fx, z), gy)});
        planes.push_back(Plane3{F.neg(F.mul(2, y)), F.mul(F.mul(2, a), x), 1, F.add(F.add(fx, z), gy)});
      }
    }
  }
  auto inst = make_instance(A.field_ptr(), std::move(points), std::move(planes), Provenance::Shift);
  inst.generators = {S0, fA, A};
  return inst;
}

std::string to_json(const IncidenceInstance& inst) {
  nlohmann::ordered_json j;
  j["p"] = inst.field->p();
  j["provenance"] = std::string(to_string(inst.provenance));
  auto pts = nlohmann::json::array();
  for (const auto& q : inst.points) pts.push_back({q.x, q.y, q.z});
  auto pls = nlohmann::json::array();
  for (const auto& s : inst.planes) pls.push_back({s.u, s.v, s.w, s.c});
  j["points"] = std::move(pts);
  j["planes"] = std::move(pls);
  auto gens = nlohmann::json::array();
  for (const auto& g : inst.generators) gens.push_back(g.elements());
  j["generators"] = std::move(gens);
  j["point_tuples"] = inst.point_tuples;
  j["plane_tuples"] = inst.plane_tuples;
  return j.dump();
}

}  // namespace expander
