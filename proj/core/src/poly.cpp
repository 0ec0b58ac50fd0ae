#include "expander/poly.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace expander {

Quad2 Quad2::from_integers(const PrimeField& F, std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d, std::int64_t e, std::int64_t c0) {
  return Quad2{F.reduce(a), F.reduce(b), F.reduce(c), F.reduce(d), F.reduce(e), F.reduce(c0)};
}

Elem Quad3::operator()(const PrimeField& F, Elem x, Elem y, Elem z) const noexcept {
  const std::array<Elem, kTerms> mono{F.mul(x, x), F.mul(y, y), F.mul(z, z), F.mul(x, y),
                                      F.mul(x, z), F.mul(y, z), x, y, z, 1};
  Elem acc = 0;
  for (int i = 0; i < kTerms; ++i) acc = F.add(acc, F.mul(coef[i], mono[i]));
  return acc;
}

bool has_xy_term(const Quad2& f) noexcept { return f.c != 0; }

bool depends_on_each_variable(const Quad2& f) noexcept {
  return (f.a | f.c | f.d) != 0 && (f.b | f.c | f.e) != 0;
}

bool depends_on_each_variable(const Quad3& f) noexcept {
  const auto& k = f.coef;
  const bool x = (k[Quad3::XX] | k[Quad3::XY] | k[Quad3::XZ] | k[Quad3::X]) != 0;
  const bool y = (k[Quad3::YY] | k[Quad3::XY] | k[Quad3::YZ] | k[Quad3::Y]) != 0;
  const bool z = (k[Quad3::ZZ] | k[Quad3::XZ] | k[Quad3::YZ] | k[Quad3::Z]) != 0;
  return x && y && z;
}

bool quadratic_part_zero(const Quad2& f) noexcept { return (f.a | f.b | f.c) == 0; }

std::optional<CompositionWitness> classify_rank_one(const PrimeField& F, const Quad2& f) {
  CompositionWitness w;
  w.g0 = f.c0;
  if (quadratic_part_zero(f)) {
    if ((f.d | f.e) != 0) {
      w.alpha = f.d;
      w.beta = f.e;
      w.g1 = 1;
    } else {
      w.alpha = 1;
    }
    return w;
  }
  // c^2 = 4ab is necessary and, in odd characteristic, sufficient for the
  // quadratic part to be g2 * (alpha x + beta y)^2.
  if (F.mul(f.c, f.c) != F.mul(4, F.mul(f.a, f.b))) return std::nullopt;
  if (f.a != 0) {
    w.alpha = 1;
    w.beta = F.div(f.c, F.mul(2, f.a));
    w.g2 = f.a;
    w.g1 = f.d;
    if (f.e != F.mul(w.g1, w.beta)) return std::nullopt;
  } else {
    w.alpha = 0;
    w.beta = 1;
    w.g2 = f.b;
    w.g1 = f.e;
    if (f.d != 0) return std::nullopt;
  }
  return w;
}

Quad3 shift_compose(const PrimeField& F, const Quad2& f) {
  // f(z - x, y) = a x^2 - 2a xz + a z^2 + b y^2 - c xy + c yz - d x + d z + e y + c0
  Quad3 out;
  auto& k = out.coef;
  k[Quad3::XX] = f.a;
  k[Quad3::ZZ] = f.a;
  k[Quad3::XZ] = F.neg(F.mul(2, f.a));
  k[Quad3::YY] = f.b;
  k[Quad3::XY] = F.neg(f.c);
  k[Quad3::YZ] = f.c;
  k[Quad3::X] = F.neg(f.d);
  k[Quad3::Z] = f.d;
  k[Quad3::Y] = f.e;
  k[Quad3::ONE] = f.c0;
  return out;
}

std::optional<CompositionWitness3> classify_rank_one3(const PrimeField& F, const Quad3& f3) {
  const auto& k = f3.coef;
  CompositionWitness3 w;
  w.g0 = k[Quad3::ONE];
  const std::array<Elem, 3> diag{k[Quad3::XX], k[Quad3::YY], k[Quad3::ZZ]};
  const std::array<Elem, 3> lin{k[Quad3::X], k[Quad3::Y], k[Quad3::Z]};
  // cross[i][j] for i != j
  auto cross = [&](int i, int j) -> Elem {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return k[Quad3::XY];
    if (i == 0 && j == 2) return k[Quad3::XZ];
    return k[Quad3::YZ];
  };
  const bool quad_zero = (diag[0] | diag[1] | diag[2] | k[Quad3::XY] | k[Quad3::XZ] | k[Quad3::YZ]) == 0;
  if (quad_zero) {
    if ((lin[0] | lin[1] | lin[2]) != 0) {
      w.lambda1 = lin[0];
      w.lambda2 = lin[1];
      w.lambda3 = lin[2];
      w.g1 = 1;
    } else {
      w.lambda1 = 1;
    }
    return w;
  }
  int pivot = -1;
  for (int i = 0; i < 3; ++i) {
    if (diag[i] != 0) {
      pivot = i;
      break;
    }
  }
  // g2 * L^2 has diagonal g2 * l_i^2, so a nonzero form has a nonzero diagonal.
  if (pivot < 0) return std::nullopt;

  std::array<Elem, 3> lambda{};
  const Elem g2 = diag[pivot];
  const Elem two_g2_inv = F.inv(F.mul(2, g2));
  for (int j = 0; j < 3; ++j) lambda[j] = j == pivot ? 1 : F.mul(cross(pivot, j), two_g2_inv);
  for (int i = 0; i < 3; ++i) {
    if (diag[i] != F.mul(g2, F.mul(lambda[i], lambda[i]))) return std::nullopt;
    for (int j = i + 1; j < 3; ++j) {
      if (cross(i, j) != F.mul(F.mul(2, g2), F.mul(lambda[i], lambda[j]))) return std::nullopt;
    }
  }
  const Elem g1 = lin[pivot];
  for (int j = 0; j < 3; ++j) {
    if (lin[j] != F.mul(g1, lambda[j])) return std::nullopt;
  }
  w.lambda1 = lambda[0];
  w.lambda2 = lambda[1];
  w.lambda3 = lambda[2];
  w.g2 = g2;
  w.g1 = g1;
  return w;
}

std::optional<Decomposition3> classify_additively_decomposable3(const PrimeField& F, const Quad3& f3) {
  if (auto w = classify_rank_one3(F, f3)) return Decomposition3{*w};
  const auto& k = f3.coef;
  if ((k[Quad3::XY] | k[Quad3::XZ] | k[Quad3::YZ]) == 0) {
    SeparableWitness3 s;
    s.hx = UniQuad{k[Quad3::XX], k[Quad3::X], k[Quad3::ONE]};
    s.ky = UniQuad{k[Quad3::YY], k[Quad3::Y], 0};
    s.lz = UniQuad{k[Quad3::ZZ], k[Quad3::Z], 0};
    return Decomposition3{s};
  }
  return std::nullopt;
}

Quad2 expand(const PrimeField& F, const CompositionWitness& w) {
  // g2 (al x + be y)^2 + g1 (al x + be y) + g0
  Quad2 f;
  f.a = F.mul(w.g2, F.mul(w.alpha, w.alpha));
  f.b = F.mul(w.g2, F.mul(w.beta, w.beta));
  f.c = F.mul(F.mul(2, w.g2), F.mul(w.alpha, w.beta));
  f.d = F.mul(w.g1, w.alpha);
  f.e = F.mul(w.g1, w.beta);
  f.c0 = w.g0;
  return f;
}

Quad3 expand(const PrimeField& F, const CompositionWitness3& w) {
  // g2 (L + l4)^2 + g1 (L + l4) + g0 = g2 L^2 + (2 g2 l4 + g1) L + g(l4)
  const std::array<Elem, 3> l{w.lambda1, w.lambda2, w.lambda3};
  const Elem lin = F.add(F.mul(F.mul(2, w.g2), w.lambda4), w.g1);
  const Elem cst = F.add(F.add(F.mul(w.g2, F.mul(w.lambda4, w.lambda4)), F.mul(w.g1, w.lambda4)), w.g0);
  const Elem two_g2 = F.mul(2, w.g2);
  Quad3 out;
  auto& k = out.coef;
  k[Quad3::XX] = F.mul(w.g2, F.mul(l[0], l[0]));
  k[Quad3::YY] = F.mul(w.g2, F.mul(l[1], l[1]));
  k[Quad3::ZZ] = F.mul(w.g2, F.mul(l[2], l[2]));
  k[Quad3::XY] = F.mul(two_g2, F.mul(l[0], l[1]));
  k[Quad3::XZ] = F.mul(two_g2, F.mul(l[0], l[2]));
  k[Quad3::YZ] = F.mul(two_g2, F.mul(l[1], l[2]));
  k[Quad3::X] = F.mul(lin, l[0]);
  k[Quad3::Y] = F.mul(lin, l[1]);
  k[Quad3::Z] = F.mul(lin, l[2]);
  k[Quad3::ONE] = cst;
  return out;
}

Quad3 expand(const PrimeField& F, const SeparableWitness3& w) {
  Quad3 out;
  auto& k = out.coef;
  k[Quad3::XX] = w.hx.a;
  k[Quad3::YY] = w.ky.a;
  k[Quad3::ZZ] = w.lz.a;
  k[Quad3::X] = w.hx.d;
  k[Quad3::Y] = w.ky.d;
  k[Quad3::Z] = w.lz.d;
  k[Quad3::ONE] = F.add(F.add(w.hx.c0, w.ky.c0), w.lz.c0);
  return out;
}

Quad3 expand(const PrimeField& F, const Decomposition3& w) {
  return std::visit([&](const auto& v) { return expand(F, v); }, w);
}

namespace {

void require_oracle_scale(const PrimeField& F) {
  if (F.p() > kOracleModulusLimit) {
    throw Error(Errc::ModulusTooLargeForOracle,
                "exhaustive oracle needs p <= " + std::to_string(kOracleModulusLimit) + ", got " +
                    std::to_string(F.p()));
  }
}

UniQuad interpolate(const PrimeField& F, Elem q0, Elem q1, Elem q2) {
  // q(u) = A u^2 + D u + C from q(0), q(1), q(2)
  const Elem A = F.div(F.add(F.sub(q2, F.mul(2, q1)), q0), 2);
  const Elem D = F.sub(F.sub(q1, q0), A);
  return UniQuad{A, D, q0};
}

}  // namespace

std::optional<CompositionWitness> oracle_classify(const PrimeField& F, const Quad2& f) {
  require_oracle_scale(F);
  const Elem p = F.p();
  CompositionWitness w;
  for (w.alpha = 0; w.alpha < p; ++w.alpha) {
    for (w.beta = 0; w.beta < p; ++w.beta) {
      if (w.alpha == 0 && w.beta == 0) continue;
      for (w.g2 = 0; w.g2 < p; ++w.g2) {
        for (w.g1 = 0; w.g1 < p; ++w.g1) {
          for (w.g0 = 0; w.g0 < p; ++w.g0) {
            if (expand(F, w) == f) return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Decomposition3> oracle_classify(const PrimeField& F, const Quad3& f3) {
  require_oracle_scale(F);
  const Elem p = F.p();

  // Rank-one family. The quadratic block depends only on (g2, l1, l2, l3), so
  // the inner loops run only when it already matches.
  CompositionWitness3 w;
  for (w.g2 = 0; w.g2 < p; ++w.g2) {
    for (w.lambda1 = 0; w.lambda1 < p; ++w.lambda1) {
      for (w.lambda2 = 0; w.lambda2 < p; ++w.lambda2) {
        for (w.lambda3 = 0; w.lambda3 < p; ++w.lambda3) {
          if ((w.lambda1 | w.lambda2 | w.lambda3) == 0) continue;
          CompositionWitness3 probe = w;
          probe.lambda4 = probe.g1 = probe.g0 = 0;
          const Quad3 head = expand(F, probe);
          bool quad_match = true;
          for (int t = Quad3::XX; t <= Quad3::YZ; ++t) quad_match &= head.coef[t] == f3.coef[t];
          if (!quad_match) continue;
          for (w.lambda4 = 0; w.lambda4 < p; ++w.lambda4) {
            for (w.g1 = 0; w.g1 < p; ++w.g1) {
              for (w.g0 = 0; w.g0 < p; ++w.g0) {
                if (expand(F, w) == f3) return Decomposition3{w};
              }
            }
          }
        }
      }
    }
  }

  // Separable family: every mixed second difference vanishes on all of F_p^3.
  auto f = [&](Elem x, Elem y, Elem z) { return f3(F, x % p, y % p, z % p); };
  for (Elem x = 0; x < p; ++x) {
    for (Elem y = 0; y < p; ++y) {
      for (Elem z = 0; z < p; ++z) {
        const Elem base = f(x, y, z);
        const Elem dxy = F.add(F.sub(F.sub(f(x + 1, y + 1, z), f(x + 1, y, z)), f(x, y + 1, z)), base);
        const Elem dxz = F.add(F.sub(F.sub(f(x + 1, y, z + 1), f(x + 1, y, z)), f(x, y, z + 1)), base);
        const Elem dyz = F.add(F.sub(F.sub(f(x, y + 1, z + 1), f(x, y + 1, z)), f(x, y, z + 1)), base);
        if ((dxy | dxz | dyz) != 0) return std::nullopt;
      }
    }
  }
  const Elem c = f(0, 0, 0);
  SeparableWitness3 s;
  s.hx = interpolate(F, f(0, 0, 0), f(1, 0, 0), f(2, 0, 0));
  s.ky = interpolate(F, 0, F.sub(f(0, 1, 0), c), F.sub(f(0, 2, 0), c));
  s.lz = interpolate(F, 0, F.sub(f(0, 0, 1), c), F.sub(f(0, 0, 2), c));
  return Decomposition3{s};
}

NormalizedQuad2 normalize_for_shift(const Quad2& f) noexcept {
  if (f.a != 0) return {f, ShiftBranch::AsGiven};
  if (f.b != 0) return {Quad2{f.b, f.a, f.c, f.e, f.d, f.c0}, ShiftBranch::Swapped};
  return {f, ShiftBranch::NoSquareTerm};
}

std::string_view to_string(ShiftBranch b) noexcept {
  switch (b) {
    case ShiftBranch::AsGiven: return "as_given";
    case ShiftBranch::Swapped: return "swapped";
    case ShiftBranch::NoSquareTerm: return "no_square_term";
  }
  return "unknown";
}

namespace {

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    std::int64_t v = 0;
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::ParseError, "bad coefficient '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

}  // namespace

Quad2 parse_quad2(const PrimeField& F, std::string_view text) {
  const auto v = parse_int_list(text);
  if (v.size() != 5 && v.size() != 6) {
    throw Error(Errc::ParseError, "expected 'a,b,c,d,e[,c0]', got '" + std::string(text) + "'");
  }
  return Quad2::from_integers(F, v[0], v[1], v[2], v[3], v[4], v.size() == 6 ? v[5] : 0);
}

UniQuad parse_uniquad(const PrimeField& F, std::string_view text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2 && v.size() != 3) {
    throw Error(Errc::ParseError, "expected 'a,d[,c0]', got '" + std::string(text) + "'");
  }
  return UniQuad{F.reduce(v[0]), F.reduce(v[1]), v.size() == 3 ? F.reduce(v[2]) : 0};
}

std::string to_string(const Quad2& f) {
  return std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + "," +
         std::to_string(f.d) + "," + std::to_string(f.e) + "," + std::to_string(f.c0);
}

std::string to_string(const Quad3& f) {
  std::string s;
  for (int i = 0; i < Quad3::kTerms; ++i) {
    if (i) s += ',';
    s += std::to_string(f.coef[i]);
  }
  return s;
}

}  // namespace expander
