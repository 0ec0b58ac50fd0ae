#include "expander/growth.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>

#include "expander/incidence.hpp"

namespace expander {

using boost::multiprecision::cpp_int;

std::string_view to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::CO0: return "CO0";
    case TheoremId::MU4: return "MU4";
    case TheoremId::MU5: return "MU5";
    case TheoremId::MU6A: return "MU6A";
    case TheoremId::MU6B: return "MU6B";
    case TheoremId::MAYMAY: return "MAYMAY";
    case TheoremId::THM2STAR: return "THM2STAR";
    case TheoremId::BUC1: return "BUC1";
    case TheoremId::MU1: return "MU1";
    case TheoremId::MOT: return "MOT";
    case TheoremId::BA: return "BA";
    case TheoremId::TONGTONG: return "TONGTONG";
  }
  return "UNKNOWN";
}

TheoremId parse_theorem(std::string_view name) {
  std::string up(name);
  for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (auto id : {TheoremId::CO0, TheoremId::MU4, TheoremId::MU5, TheoremId::MU6A, TheoremId::MU6B,
                  TheoremId::MAYMAY, TheoremId::THM2STAR, TheoremId::BUC1, TheoremId::MU1, TheoremId::MOT,
                  TheoremId::BA, TheoremId::TONGTONG}) {
    if (up == to_string(id)) return id;
  }
  throw Error(Errc::ConfigInvalid, "unknown theorem id '" + std::string(name) + "'");
}

Rational theorem_exponent(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::CO0: return {8, 7};
    case TheoremId::MU4: return {8, 5};
    case TheoremId::MU5: return {7, 4};
    case TheoremId::MU6A:
    case TheoremId::MU6B: return {2, 1};
    case TheoremId::MAYMAY: return {6, 5};
    case TheoremId::BUC1: return {6, 5};
    case TheoremId::MU1: return {3, 2};
    case TheoremId::MOT:
    case TheoremId::BA: return {3, 2};
    case TheoremId::THM2STAR:
    case TheoremId::TONGTONG: return {0, 1};
  }
  return {0, 1};
}

bool pow_le(std::uint64_t base, unsigned e1, std::uint64_t other, unsigned e2) {
  return boost::multiprecision::pow(cpp_int(base), e1) <= boost::multiprecision::pow(cpp_int(other), e2);
}

Wide isqrt_ceil(Wide n) {
  if (n == 0) return 0;
  Wide r = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r >= n) --r;
  while (r * r < n) ++r;
  return r;
}

bool GrowthReport::hard_ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.skipped || c.passed; });
}

std::optional<double> GrowthReport::extra(std::string_view name) const {
  for (const auto& e : extras) {
    if (e.name == name) return e.value;
  }
  return std::nullopt;
}

std::uint64_t cubic_identity_failures(const PrimeField& F) {
  const Elem half = F.inv(2), twelfth = F.inv(12);
  std::uint64_t failures = 0;
  for (Elem a = 0; a < F.p(); ++a) {
    const Elem a3 = F.mul(F.mul(a, a), a);
    for (Elem b = 0; b < F.p(); ++b) {
      const Elem d = F.sub(b, a);
      const Elem lhs = F.add(F.mul(F.mul(d, d), d), a3);
      const Elem t = F.sub(a, F.mul(b, half));
      const Elem rhs = F.mul(F.mul(3, b), F.add(F.mul(t, t), F.mul(F.mul(b, b), twelfth)));
      failures += lhs != rhs;
    }
  }
  return failures;
}

namespace {

double to_double(Wide w) { return static_cast<double>(static_cast<long double>(w)); }

void require_nonempty(std::initializer_list<const FpSet*> sets, std::string_view who) {
  for (const auto* s : sets) {
    if (s->empty()) throw Error(Errc::RangeError, std::string(who) + " needs nonempty sets");
  }
}

void require_index_range(const FieldPtr& F, std::uint64_t N, std::string_view who) {
  if (N < 1 || N > F->p() - 1) {
    throw Error(Errc::RangeError, fmt::format("{} needs 1 <= N <= p-1, got N={}", who, N));
  }
}

GrowthReport start(TheoremId id, std::uint64_t p, std::uint64_t measured, double size_for_bound) {
  GrowthReport r;
  r.theorem = id;
  r.p = p;
  r.measured = measured;
  r.exponent = theorem_exponent(id);
  if (r.exponent.num != 0) {
    r.bound_rhs = std::pow(size_for_bound, r.exponent.value());
    r.constant_ratio = static_cast<double>(measured) / r.bound_rhs;
  }
  return r;
}

void set_bound(GrowthReport& r, double rhs) {
  r.bound_rhs = rhs;
  r.constant_ratio = rhs > 0 ? static_cast<double>(r.measured) / rhs : 0.0;
}

/// The representation function behind `measured` must have exactly that many
/// values and satisfy support * E >= total^2.
void check_rep(GrowthReport& r, const Expression& expr, std::span<const FpSet> sets, const LabOptions& opts,
               Wide expected_total, std::optional<std::uint64_t> expected_support = std::nullopt) {
  const std::string tag(to_string(expr.id));
  const std::uint64_t want = expected_support.value_or(r.measured);
  try {
    const FreqVector rep = rep_function(expr, sets, opts.rep);
    const auto support = rep.support_size();
    r.checks.push_back({"support(" + tag + ") == image size", support == want, false,
                        fmt::format("support={} expected={}", support, want)});
    r.checks.push_back({"total(" + tag + ") == product of sizes", rep.total() == expected_total, false,
                        fmt::format("total={}", rep.total())});
    r.checks.push_back({"cauchy-schwarz(" + tag + ")", cauchy_schwarz_holds(rep), false,
                        fmt::format("support={} total={} energy={}", support, rep.total(), to_double(energy(rep)))});
    r.extras.push_back({"energy", to_double(energy(rep))});
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    r.checks.push_back({"rep(" + tag + ")", true, true, e.what()});
  }
}

/// Enumerates the raw tuple domain and compares its image with `measured`.
void check_enumeration(GrowthReport& r, const Expression& expr, std::span<const FpSet> sets, const LabOptions& opts) {
  const std::string name = "enumeration(" + std::string(to_string(expr.id)) + ") == measured";
  try {
    RepOptions brute = opts.rep;
    brute.backend = RepBackend::Brute;
    const auto support = rep_function(expr, sets, brute).support_size();
    r.checks.push_back({name, support == r.measured, false, fmt::format("enumerated={}", support)});
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    r.checks.push_back({name, true, true, e.what()});
  }
}

Wide product_size(std::initializer_list<std::size_t> sizes) {
  Wide n = 1;
  for (auto s : sizes) n *= s;
  return n;
}

}  // namespace

GrowthReport quantity_co0(const FpSet& A, const LabOptions& opts) {
  require_nonempty({&A}, "co0");
  const auto& F = A.field();
  const FpSet D = difference_set(A, A);
  const FpSet D3 = dilate_power(D, 3);
  const FpSet S = sumset(D3, D3);
  const std::size_t n = A.size();
  auto r = start(TheoremId::CO0, F.p(), S.size(), static_cast<double>(n));
  r.precondition = "|A|^12 <= p^7";
  r.precondition_ok = pow_le(n, 12, F.p(), 7);
  r.extras.push_back({"|A-A|", static_cast<double>(D.size())});
  r.extras.push_back({"max(|(A-A)^3+(A-A)^3|,|A-A|)", static_cast<double>(std::max(S.size(), D.size()))});
  // Dichotomy step of the argument: |A-A|^2 |X| > p^2 with |X| ~ |A-A|.
  r.extras.push_back({"|A-A|^3>p^2", pow_le(D.size(), 3, F.p(), 2) ? 0.0 : 1.0});

  const Elem t = F.p() / 2;
  const auto shifted = sumset(dilate_power(difference_set(translate(A, t), translate(A, t)), 3),
                              dilate_power(difference_set(translate(A, t), translate(A, t)), 3));
  r.checks.push_back({"translation invariance", shifted.size() == S.size(), false,
                      fmt::format("shift={} measured={}", t, shifted.size())});
  const FpSet sets[] = {A, A, A, A};
  check_rep(r, Expression::cube_diff_sum(), sets, opts, product_size({n, n, n, n}));
  return r;
}

GrowthReport quantity_thm2star(const FpSet& A, const FpSet& X, const LabOptions& opts) {
  require_nonempty({&A, &X}, "thm2star");
  require_same_field(A, X);
  const auto& F = A.field();
  const FpSet sets[] = {A, A, X};
  const FreqVector rep = rep_function(Expression::cubic_shift(), sets, opts.rep);
  auto r = start(TheoremId::THM2STAR, F.p(), rep.support_size(), static_cast<double>(A.size()));

  const std::uint64_t a = A.size(), x = X.size();
  const FpSet D = difference_set(A, A);
  const std::uint64_t d = D.size();
  r.precondition = "|A-A|^2 |X| <= p^2";
  r.precondition_ok = static_cast<Wide>(d) * d * x <= static_cast<Wide>(F.p()) * F.p();

  // min(|X|^{1/2}|A|^4/|D|^3, |X||A|^5/|D|^4); the first is smaller iff |D|^2 <= |X||A|^2.
  const double first = std::sqrt(static_cast<double>(x)) * std::pow(a, 4) / std::pow(d, 3);
  const double second = static_cast<double>(x) * std::pow(a, 5) / std::pow(d, 4);
  const bool first_is_min = static_cast<Wide>(d) * d <= static_cast<Wide>(x) * a * a;
  set_bound(r, first_is_min ? first : second);

  const FpSet T = half_difference_set(A);
  r.extras.push_back({"|T|", static_cast<double>(T.size())});
  r.extras.push_back({"|A-A|", static_cast<double>(d)});
  r.extras.push_back({"|A-A|^2/|A|", static_cast<double>(d) * d / static_cast<double>(a)});
  r.extras.push_back({"|A+A-A|", static_cast<double>(difference_set(sumset(A, A), A).size())});
  r.extras.push_back({"energy", to_double(energy(rep))});

  // Every value of the expression also has the form 3b(t^2 + b^2/12) + x.
  const Elem half = F.inv(2), twelfth = F.inv(12);
  FpSet via_identity(A.field_ptr());
  const auto ae = A.elements();
  FpSet heads(A.field_ptr());
  for (Elem aa : ae) {
    for (Elem bb : ae) {
      const Elem t = F.sub(aa, F.mul(bb, half));
      heads.insert(F.mul(F.mul(3, bb), F.add(F.mul(t, t), F.mul(F.mul(bb, bb), twelfth))));
    }
  }
  via_identity = sumset(heads, X);
  r.checks.push_back({"cubic identity image == measured", via_identity.size() == r.measured, false, ""});
  r.checks.push_back({"total(CUBIC_SHIFT)", rep.total() == product_size({a, a, x}), false, ""});
  r.checks.push_back({"cauchy-schwarz(CUBIC_SHIFT)", cauchy_schwarz_holds(rep), false, ""});

  const Wide tuples = product_size({T.size(), a, x});
  if (tuples <= opts.incidence_points_limit) {
    try {
      const auto inst = build_cubic_construction(A, X);
      const auto I = count_incidences(inst, opts.incidence_budget, opts.rep.jobs);
      const Wide E = energy(rep);
      r.extras.push_back({"incidences", static_cast<double>(I)});
      r.checks.push_back({"E <= 4 I (cubic construction)", E <= static_cast<Wide>(4) * I, false,
                          fmt::format("E={} I={}", to_double(E), I)});
      const auto rud = rudnev_rhs(inst, std::max<std::uint64_t>(a, T.size()));
      r.extras.push_back({"I/rudnev_rhs", static_cast<double>(I) / static_cast<double>(rud.rhs)});
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      r.checks.push_back({"E <= 4 I (cubic construction)", true, true, e.what()});
    }
  } else {
    r.checks.push_back({"E <= 4 I (cubic construction)", true, true, "instance above point limit"});
  }
  return r;
}

GrowthReport quantity_mu4(const FpSet& A, const UniQuad& f, const Quad2& g, const LabOptions& opts) {
  if (!has_xy_term(g)) throw Error(Errc::PolynomialDegenerate, "g needs a nonzero xy-term");
  if (f.a == 0) throw Error(Errc::PolynomialDegenerate, "f must be quadratic (nonzero u^2 coefficient)");
  require_nonempty({&A}, "mu4");
  const auto& F = A.field();
  const FpSet fA = image_unary(f, A);
  const FpSet gAA = image_binary(g, A, A);
  const FpSet S = sumset(sumset(fA, A), gAA);
  const std::size_t n = A.size();
  auto r = start(TheoremId::MU4, F.p(), S.size(), static_cast<double>(n));
  r.precondition = "|A|^8 <= p^5";
  r.precondition_ok = pow_le(n, 8, F.p(), 5);
  r.extras.push_back({"|f(A)+A|", static_cast<double>(sumset(fA, A).size())});
  r.extras.push_back({"|g(A,A)|", static_cast<double>(gAA.size())});
  const FpSet sets[] = {A, A, A, A};
  check_rep(r, Expression::mu4_sum(f, g), sets, opts, product_size({n, n, n, n}));
  return r;
}

GrowthReport quantity_mu5(const FieldPtr& F, std::uint64_t N, const Quad2& g, const LabOptions& opts) {
  require_index_range(F, N, "mu5");
  if (!has_xy_term(g)) throw Error(Errc::PolynomialDegenerate, "g needs a nonzero xy-term");
  const FpSet P = power_range(F, 1, N);
  const FpSet Z = integer_range(F, 1, static_cast<std::int64_t>(N));
  const FpSet S = sumset(sumset(P, P), image_binary(g, Z, Z));
  auto r = start(TheoremId::MU5, F->p(), S.size(), static_cast<double>(N));
  r.precondition = "N^7 <= p^4";
  r.precondition_ok = pow_le(N, 7, F->p(), 4);
  const FpSet sets[] = {P, P, Z, Z};
  check_rep(r, Expression::mu5_sum(g), sets, opts, product_size({N, N, N, N}));
  check_enumeration(r, Expression::mu5_sum(g), sets, opts);
  return r;
}

GrowthReport quantity_mu6(const FieldPtr& F, std::uint64_t N, Mu6Variant variant, const LabOptions& opts) {
  require_index_range(F, N, "mu6");
  const FpSet Q = power_range(F, 1, N);
  const FpSet P = variant == Mu6Variant::A ? Q : integer_range(F, 1, static_cast<std::int64_t>(N));
  const FpSet S = product_set(P, iterated_sumset(Q, 4));
  auto r = start(variant == Mu6Variant::A ? TheoremId::MU6A : TheoremId::MU6B, F->p(), S.size(),
                 static_cast<double>(N));
  r.precondition = "N^2 <= p";
  r.precondition_ok = pow_le(N, 2, F->p(), 1);
  const FpSet sets[] = {P, Q, Q, Q, Q};
  check_rep(r, Expression::mu6_prod(), sets, opts, product_size({N, N, N, N, N}));
  check_enumeration(r, Expression::mu6_prod(), sets, opts);
  return r;
}

GrowthReport quantity_maymay(const FpSet& A, const Quad2& f, const LabOptions& opts) {
  const auto& F = A.field();
  if (!depends_on_each_variable(f)) throw Error(Errc::PolynomialDegenerate, "f must depend on both variables");
  if (classify_rank_one(F, f)) throw Error(Errc::PolynomialDegenerate, "f has the form g(alpha x + beta y)");
  require_nonempty({&A}, "maymay");
  const FpSet AA = sumset(A, A);
  const FpSet fAA = image_binary(f, A, A);
  const std::size_t n = A.size();
  auto r = start(TheoremId::MAYMAY, F.p(), std::max(AA.size(), fAA.size()), static_cast<double>(n));
  r.precondition = "|A|^8 <= p^5";
  r.precondition_ok = pow_le(n, 8, F.p(), 5);
  r.extras.push_back({"|A+A|", static_cast<double>(AA.size())});
  r.extras.push_back({"|f(A,A)|", static_cast<double>(fAA.size())});

  const auto norm = normalize_for_shift(f);
  r.extras.push_back({"branch_swapped", norm.branch == ShiftBranch::Swapped ? 1.0 : 0.0});
  const Quad3 f3 = shift_compose(F, norm.f);
  r.checks.push_back({"shift_compose(f) not additively decomposable",
                      !classify_additively_decomposable3(F, f3).has_value(), false,
                      std::string("branch=") + std::string(to_string(norm.branch))});

  const FpSet img[] = {A, A};
  check_rep(r, Expression::quad2_image(f), img, opts, product_size({n, n}), fAA.size());

  // |A|^3 solutions of f'(x,y,z) = t with t in f(A,A), so |f(A,A)| * E >= |A|^6.
  try {
    const FpSet dom[] = {A, A, AA};
    const auto rep3 = rep_function(Expression::quad3_image(f3), dom, opts.rep);
    const Wide E = energy(rep3);
    const Wide n3 = product_size({n, n, n});
    r.extras.push_back({"E(f')", to_double(E)});
    r.checks.push_back({"|f(A,A)| * E(f') >= |A|^6", static_cast<Wide>(fAA.size()) * E >= n3 * n3, false,
                        fmt::format("E={}", to_double(E))});
    Wide hits = 0;
    for (Elem t = 0; t < F.p(); ++t) {
      if (fAA.contains(t)) hits += rep3[t];
    }
    r.checks.push_back({"solutions with t in f(A,A) >= |A|^3", hits >= n3, false, ""});
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    r.checks.push_back({"|f(A,A)| * E(f') >= |A|^6", true, true, e.what()});
  }
  return r;
}

GrowthReport quantity_buc1(const FpSet& A, const UniQuad& f, const LabOptions& opts) {
  if (f.a == 0) throw Error(Errc::PolynomialDegenerate, "f must be quadratic (nonzero u^2 coefficient)");
  require_nonempty({&A}, "buc1");
  const auto& F = A.field();
  const FpSet fA = image_unary(f, A);
  const FpSet S0 = sumset(A, fA);
  const std::size_t n = A.size();
  auto r = start(TheoremId::BUC1, F.p(), S0.size(), static_cast<double>(n));
  r.precondition = "|A|^8 <= p^5";
  r.precondition_ok = pow_le(n, 8, F.p(), 5);
  r.extras.push_back({"|f(A)|", static_cast<double>(fA.size())});

  const FpSet img[] = {A, A};
  check_rep(r, Expression::uni_plus(f), img, opts, product_size({n, n}), S0.size());

  const FpSet dom[] = {S0, fA, A};
  const auto rep = rep_function(Expression::shift_quad(f), dom, opts.rep);
  const Wide E = energy(rep);
  r.extras.push_back({"E(shift)", to_double(E)});
  // (u + f(v), f(v), w) are |A||f(A)||A| distinct solutions with t in A + f(A).
  const Wide sols = product_size({n, fA.size(), n});
  r.checks.push_back({"|A+f(A)| * E >= (|A|^2 |f(A)|)^2", static_cast<Wide>(S0.size()) * E >= sols * sols, false,
                      fmt::format("E={}", to_double(E))});
  r.checks.push_back({"cauchy-schwarz(SHIFT_QUAD)", cauchy_schwarz_holds(rep), false, ""});

  if (product_size({S0.size(), fA.size(), n}) <= opts.incidence_points_limit) {
    try {
      const auto inst = build_shift_construction(A, f);
      const auto I = count_incidences(inst, opts.incidence_budget, opts.rep.jobs);
      r.extras.push_back({"incidences", static_cast<double>(I)});
      r.checks.push_back({"E == I (shift construction)", E == I, false, fmt::format("E={} I={}", to_double(E), I)});
      const auto rud = rudnev_rhs(inst, S0.size());
      r.extras.push_back({"I/rudnev_rhs", static_cast<double>(I) / static_cast<double>(rud.rhs)});
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      r.checks.push_back({"E == I (shift construction)", true, true, e.what()});
    }
  } else {
    r.checks.push_back({"E == I (shift construction)", true, true, "instance above point limit"});
  }
  return r;
}

GrowthReport quantity_mu1(const FieldPtr& F, std::uint64_t N, const LabOptions& opts) {
  require_index_range(F, N, "mu1");
  const FpSet X = power_range(F, 1, N);
  const FpSet S = sumset(X, X);
  auto r = start(TheoremId::MU1, F->p(), S.size(), static_cast<double>(N));
  r.precondition = "N^3 <= p^2";
  r.precondition_ok = pow_le(N, 3, F->p(), 2);
  if (N >= 2) {
    const FpSet A = power_range(F, 1, N / 2);
    const FpSet AAX = sumset(product_set(A, A), X);
    r.extras.push_back({"|A.A+X|", static_cast<double>(AAX.size())});
    r.checks.push_back({"A.A + X subset of {h^x+h^y}", AAX.is_subset_of(S), false, ""});
  }
  const FpSet sets[] = {X, X};
  check_rep(r, Expression::add2(), sets, opts, product_size({N, N}));
  return r;
}

GrowthReport quantity_mot(const Quad2& g, const FpSet& A, const FpSet& X, const LabOptions& opts) {
  if (!has_xy_term(g)) throw Error(Errc::PolynomialDegenerate, "g needs a nonzero xy-term");
  require_nonempty({&A, &X}, "mot");
  require_same_field(A, X);
  const auto& F = A.field();
  const FpSet S = sumset(image_binary(g, A, A), X);
  auto r = start(TheoremId::MOT, F.p(), S.size(), static_cast<double>(A.size()));
  r.precondition = "|A| <= |X|";
  r.precondition_ok = A.size() <= X.size();
  set_bound(r, std::min(static_cast<double>(A.size()) * std::sqrt(static_cast<double>(X.size())),
                        static_cast<double>(F.p())));
  const FpSet sets[] = {A, A, X};
  check_rep(r, Expression::quad2_plus(g), sets, opts, product_size({A.size(), A.size(), X.size()}));
  return r;
}

GrowthReport quantity_ba(const FpSet& X, const FpSet& A, const LabOptions& opts) {
  require_nonempty({&A, &X}, "ba");
  require_same_field(A, X);
  const auto& F = A.field();
  const FpSet S = product_set(X, difference_set(A, A));
  auto r = start(TheoremId::BA, F.p(), S.size(), static_cast<double>(A.size()));
  r.precondition = "|X| <= |A|";
  r.precondition_ok = X.size() <= A.size();
  set_bound(r, std::min(static_cast<double>(A.size()) * std::sqrt(static_cast<double>(X.size())),
                        static_cast<double>(F.p())));
  const FpSet sets[] = {X, A, A};
  check_rep(r, Expression::scale_diff(), sets, opts, product_size({X.size(), A.size(), A.size()}));
  return r;
}

TongtongResult energy_tongtong(const Quad3& f3, const FpSet& A, const FpSet& B, const FpSet& C,
                               const RepOptions& rep) {
  require_same_field(A, B);
  require_same_field(A, C);
  const auto& F = A.field();
  TongtongResult t;
  t.not_decomposable = !classify_additively_decomposable3(F, f3).has_value();
  t.depends_on_each = depends_on_each_variable(f3);
  t.sizes_ok = A.size() == B.size() && B.size() <= C.size();
  const Wide n = product_size({A.size(), B.size(), C.size()});
  t.p_squared_ok = n <= static_cast<Wide>(F.p()) * F.p();
  const FpSet sets[] = {A, B, C};
  t.energy = energy(rep_function(Expression::quad3_image(f3), sets, rep));
  t.rhs = isqrt_ceil(n * n * n) + n * C.size();
  t.ratio = t.rhs == 0 ? 0.0 : to_double(t.energy) / to_double(t.rhs);
  t.inequality_holds = t.energy <= t.rhs;
  return t;
}

GrowthReport quantity_tongtong(const Quad3& f3, const FpSet& A, const FpSet& B, const FpSet& C,
                               const LabOptions& opts) {
  require_nonempty({&A, &B, &C}, "tongtong");
  const auto t = energy_tongtong(f3, A, B, C, opts.rep);
  auto r = start(TheoremId::TONGTONG, A.field().p(), static_cast<std::uint64_t>(t.energy),
                 static_cast<double>(A.size()));
  set_bound(r, to_double(t.rhs));
  r.precondition = "|A|=|B|<=|C|, |A||B||C| <= p^2, f3 not decomposable";
  r.precondition_ok = t.sizes_ok && t.p_squared_ok && t.not_decomposable && t.depends_on_each;
  r.extras.push_back({"inequality_holds", t.inequality_holds ? 1.0 : 0.0});
  r.checks.push_back({"E >= |A||B||C|", t.energy >= product_size({A.size(), B.size(), C.size()}), false, ""});
  return r;
}

}  // namespace expander
