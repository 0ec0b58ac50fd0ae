#include "expander/rep.hpp"

#include <string>
#include <thread>

namespace expander {

std::string_view to_string(ExprId id) noexcept {
  switch (id) {
    case ExprId::Add2: return "ADD2";
    case ExprId::CubicShift: return "CUBIC_SHIFT";
    case ExprId::ShiftQuad: return "SHIFT_QUAD";
    case ExprId::Quad2Image: return "QUAD2";
    case ExprId::Quad3Image: return "QUAD3";
    case ExprId::UniPlus: return "UNI_PLUS";
    case ExprId::Quad2Plus: return "QUAD2_PLUS";
    case ExprId::ScaleDiff: return "SCALE_DIFF";
    case ExprId::CubeDiffSum: return "CUBE_DIFF_SUM";
    case ExprId::Mu4Sum: return "MU4_SUM";
    case ExprId::Mu5Sum: return "MU5_SUM";
    case ExprId::Mu6Prod: return "MU6_PROD";
  }
  return "UNKNOWN";
}

std::size_t arity(ExprId id) noexcept {
  switch (id) {
    case ExprId::Add2:
    case ExprId::Quad2Image:
    case ExprId::UniPlus: return 2;
    case ExprId::CubicShift:
    case ExprId::ShiftQuad:
    case ExprId::Quad3Image:
    case ExprId::Quad2Plus:
    case ExprId::ScaleDiff: return 3;
    case ExprId::CubeDiffSum:
    case ExprId::Mu4Sum:
    case ExprId::Mu5Sum: return 4;
    case ExprId::Mu6Prod: return 5;
  }
  return 0;
}

Elem Expression::evaluate(const PrimeField& F, std::span<const Elem> v) const noexcept {
  auto cube = [&](Elem x) { return F.mul(F.mul(x, x), x); };
  switch (id) {
    case ExprId::Add2: return F.add(v[0], v[1]);
    case ExprId::CubicShift: return F.add(F.add(cube(F.sub(v[1], v[0])), cube(v[0])), v[2]);
    case ExprId::ShiftQuad: return F.add(f(F, F.sub(v[0], v[1])), v[2]);
    case ExprId::Quad2Image: return g(F, v[0], v[1]);
    case ExprId::Quad3Image: return f3(F, v[0], v[1], v[2]);
    case ExprId::UniPlus: return F.add(f(F, v[0]), v[1]);
    case ExprId::Quad2Plus: return F.add(g(F, v[0], v[1]), v[2]);
    case ExprId::ScaleDiff: return F.mul(v[0], F.sub(v[1], v[2]));
    case ExprId::CubeDiffSum: return F.add(cube(F.sub(v[0], v[1])), cube(F.sub(v[2], v[3])));
    case ExprId::Mu4Sum: return F.add(F.add(f(F, v[0]), v[1]), g(F, v[2], v[3]));
    case ExprId::Mu5Sum: return F.add(F.add(v[0], v[1]), g(F, v[2], v[3]));
    case ExprId::Mu6Prod: return F.mul(v[0], F.add(F.add(v[1], v[2]), F.add(v[3], v[4])));
  }
  return 0;
}

namespace {

void validate(const Expression& expr, std::span<const FpSet> sets) {
  if (sets.size() != expr.arity()) {
    throw Error(Errc::ArityMismatch, std::string(to_string(expr.id)) + " takes " +
                                         std::to_string(expr.arity()) + " sets, got " +
                                         std::to_string(sets.size()));
  }
  for (const auto& s : sets) require_same_field(sets[0], s);
}

void charge(std::uint64_t& spent, Wide cost, std::uint64_t budget, std::string_view what) {
  if (static_cast<Wide>(spent) + cost > budget) {
    throw Error(Errc::BudgetExceeded, std::string(what) + " needs more than " + std::to_string(budget) +
                                          " tuple evaluations");
  }
  spent += static_cast<std::uint64_t>(cost);
}

Wide tuple_count(std::span<const FpSet> sets) {
  Wide n = 1;
  for (const auto& s : sets) {
    n *= s.size();
    if (n >> 96 != 0) return n;  // saturate; far beyond any budget
  }
  return n;
}

/// Enumerates every tuple. The first coordinate is split across workers; each
/// worker accumulates privately and the partial vectors are summed, so the
/// result is independent of the worker count.
FreqVector brute(const Expression& expr, std::span<const FpSet> sets, unsigned jobs) {
  const auto& F = sets[0].field();
  const std::size_t k = sets.size();
  std::vector<std::vector<Elem>> elems;
  elems.reserve(k);
  for (const auto& s : sets) elems.push_back(s.elements());
  for (const auto& e : elems) {
    if (e.empty()) return FreqVector(sets[0].field_ptr());
  }

  auto work = [&](std::size_t first_lo, std::size_t first_hi, std::vector<Count>& counts) {
    std::vector<std::size_t> idx(k, 0);
    std::vector<Elem> tuple(k);
    for (std::size_t i0 = first_lo; i0 < first_hi; ++i0) {
      tuple[0] = elems[0][i0];
      std::fill(idx.begin() + 1, idx.end(), 0);
      for (std::size_t j = 1; j < k; ++j) tuple[j] = elems[j][0];
      while (true) {
        ++counts[expr.evaluate(F, tuple)];
        std::size_t j = k;
        while (--j >= 1) {
          if (++idx[j] < elems[j].size()) {
            tuple[j] = elems[j][idx[j]];
            break;
          }
          idx[j] = 0;
          tuple[j] = elems[j][0];
        }
        if (j == 0) break;
      }
    }
  };

  const std::size_t n0 = elems[0].size();
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n0)));
  std::vector<std::vector<Count>> partial(jobs, std::vector<Count>(F.p(), 0));
  if (jobs == 1) {
    work(0, n0, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back(work, n0 * t / jobs, n0 * (t + 1) / jobs, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
  }
  for (unsigned t = 1; t < jobs; ++t) {
    for (std::size_t c = 0; c < F.p(); ++c) partial[0][c] += partial[t][c];
  }
  return FreqVector(sets[0].field_ptr(), std::move(partial[0]));
}

FreqVector sub_brute(const Expression& expr, std::span<const FpSet> sets, unsigned jobs, std::uint64_t& spent,
                     std::uint64_t budget) {
  charge(spent, tuple_count(sets), budget, to_string(expr.id));
  return brute(expr, sets, jobs);
}

FreqVector convolution(const Expression& expr, std::span<const FpSet> sets, const RepOptions& opts) {
  const auto& F = sets[0].field();
  const auto& fp = sets[0].field_ptr();
  std::uint64_t spent = 0;
  auto ind = [](const FpSet& s) { return FreqVector::indicator(s); };
  auto neg_ind = [&](const FpSet& s) { return FreqVector::indicator(negate(s)); };
  auto pair = [&](const Expression& e, const FpSet& a, const FpSet& b) {
    const FpSet two[] = {a, b};
    return sub_brute(e, two, opts.jobs, spent, opts.budget);
  };
  auto cube_of_diff = [&](const FpSet& a, const FpSet& b) {
    return pushforward(additive_convolve(ind(a), neg_ind(b)), [&](Elem x) { return F.mul(F.mul(x, x), x); });
  };

  switch (expr.id) {
    case ExprId::Add2:
      return additive_convolve(ind(sets[0]), ind(sets[1]));
    case ExprId::CubicShift: {
      // (b - a)^3 + a^3 does not factor; count the pair part directly.
      Expression head{ExprId::CubicShift};
      FpSet zero(fp);
      zero.insert(0);
      const FpSet three[] = {sets[0], sets[1], zero};
      charge(spent, tuple_count(three), opts.budget, "CUBIC_SHIFT pair part");
      return additive_convolve(brute(head, three, opts.jobs), ind(sets[2]));
    }
    case ExprId::ShiftQuad: {
      // f(x - y) is a pushforward of the difference distribution.
      const UniQuad f = expr.f;
      auto diff = additive_convolve(ind(sets[0]), neg_ind(sets[1]));
      return additive_convolve(pushforward(diff, [&](Elem u) { return f(F, u); }), ind(sets[2]));
    }
    case ExprId::Quad2Image:
    case ExprId::Quad3Image:
      return sub_brute(expr, sets, opts.jobs, spent, opts.budget);
    case ExprId::UniPlus:
      return additive_convolve(pushforward(ind(sets[0]), [&](Elem u) { return expr.f(F, u); }), ind(sets[1]));
    case ExprId::Quad2Plus:
      return additive_convolve(pair(Expression::quad2_image(expr.g), sets[0], sets[1]), ind(sets[2]));
    case ExprId::ScaleDiff:
      return multiplicative_convolve(ind(sets[0]), additive_convolve(ind(sets[1]), neg_ind(sets[2])));
    case ExprId::CubeDiffSum:
      return additive_convolve(cube_of_diff(sets[0], sets[1]), cube_of_diff(sets[2], sets[3]));
    case ExprId::Mu4Sum: {
      auto head = additive_convolve(pushforward(ind(sets[0]), [&](Elem u) { return expr.f(F, u); }), ind(sets[1]));
      return additive_convolve(head, pair(Expression::quad2_image(expr.g), sets[2], sets[3]));
    }
    case ExprId::Mu5Sum: {
      auto head = additive_convolve(ind(sets[0]), ind(sets[1]));
      return additive_convolve(head, pair(Expression::quad2_image(expr.g), sets[2], sets[3]));
    }
    case ExprId::Mu6Prod: {
      auto s = additive_convolve(additive_convolve(ind(sets[1]), ind(sets[2])),
                                 additive_convolve(ind(sets[3]), ind(sets[4])));
      return multiplicative_convolve(ind(sets[0]), s);
    }
  }
  throw Error(Errc::ArityMismatch, "unknown expression");
}

FreqVector checked_brute(const Expression& expr, std::span<const FpSet> sets, const RepOptions& opts) {
  std::uint64_t spent = 0;
  return sub_brute(expr, sets, opts.jobs, spent, opts.budget);
}

}  // namespace

FreqVector rep_function(const Expression& expr, std::span<const FpSet> sets, const RepOptions& opts) {
  validate(expr, sets);
  switch (opts.backend) {
    case RepBackend::Brute:
      return checked_brute(expr, sets, opts);
    case RepBackend::Auto:
    case RepBackend::Convolution:
      return convolution(expr, sets, opts);
    case RepBackend::CrossCheck: {
      auto fast = convolution(expr, sets, opts);
      auto slow = checked_brute(expr, sets, opts);
      if (!(fast == slow)) {
        throw Error(Errc::InvariantViolated,
                    std::string(to_string(expr.id)) + ": convolution and enumeration disagree");
      }
      return fast;
    }
  }
  return convolution(expr, sets, opts);
}

}  // namespace expander
