#include "expander_lab/commands.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <ostream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "expander/error.hpp"
#include "expander/incidence.hpp"
#include "expander/plunnecke.hpp"
#include "expander/set_io.hpp"

namespace expander::lab {
namespace {

struct Cell {
  Family family;
  std::uint64_t size;
  std::uint64_t seed;
};

LabOptions lab_options(const ExperimentConfig& cfg, unsigned rep_jobs) {
  LabOptions opts;
  opts.rep.budget = cfg.budget;
  opts.rep.jobs = rep_jobs;
  return opts;
}

std::vector<Cell> enumerate_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  // index theorems ignore the family: one series
  const auto families = is_index_theorem(cfg.theorem) ? std::vector<Family>{Family::Interval} : cfg.families;
  for (auto fam : families) {
    if (fam == Family::File) {
      cells.push_back({fam, 0, cfg.seeds.front()});
      continue;
    }
    for (auto n : cfg.sizes) {
      if (cfg.respect_preconditions && !size_precondition_ok(cfg.theorem, n, cfg.p)) continue;
      for (auto s : cfg.seeds) cells.push_back({fam, n, s});
    }
  }
  return cells;
}

std::string family_label(const ExperimentConfig& cfg, Family fam) {
  return is_index_theorem(cfg.theorem) ? "index" : std::string(to_string(fam));
}

Quad2 random_quad2(const PrimeField& F, Rng& rng) {
  // Each coefficient is zero with probability 1/3 so that degenerate shapes
  // (a = 0, c = 0, pure squares...) actually show up.
  auto coef = [&] { return rng.below(3) == 0 ? Elem{0} : static_cast<Elem>(rng.below(F.p())); };
  Quad2 f;
  f.a = coef();
  f.b = coef();
  f.c = coef();
  f.d = coef();
  f.e = coef();
  f.c0 = coef();
  return f;
}

Quad2 random_composed_quad2(const PrimeField& F, Rng& rng) {
  CompositionWitness w;
  w.alpha = static_cast<Elem>(rng.below(F.p()));
  w.beta = static_cast<Elem>(rng.below(F.p()));
  w.g2 = static_cast<Elem>(rng.below(F.p()));
  w.g1 = static_cast<Elem>(rng.below(F.p()));
  w.g0 = static_cast<Elem>(rng.below(F.p()));
  return expand(F, w);
}

Quad3 random_quad3(const PrimeField& F, Rng& rng, unsigned kind) {
  auto any = [&] { return static_cast<Elem>(rng.below(F.p())); };
  switch (kind % 4) {
    case 0: {
      Quad3 f;
      for (auto& c : f.coef) c = rng.below(3) == 0 ? Elem{0} : any();
      return f;
    }
    case 1:
      return expand(F, CompositionWitness3{any(), any(), any(), any(), any(), any(), any()});
    case 2:
      return expand(F, SeparableWitness3{{any(), any(), any()}, {any(), any(), 0}, {any(), any(), 0}});
    default:
      return shift_compose(F, random_quad2(F, rng));
  }
}

FpSet random_set(const FieldPtr& F, Rng& rng, std::uint64_t max_size) {
  return random_subset(F, 1 + rng.below(max_size), rng);
}

std::string render(const ExperimentConfig& cfg, const std::vector<GrowthReport>& reports,
                   const std::vector<FitSummary>& fits) {
  if (cfg.format == OutputFormat::Json) return to_json(reports, fits) + "\n";
  std::string out = to_csv(reports);
  for (const auto& f : fits) out += fit_comment(f) + "\n";
  return out;
}

int emit(const ExperimentConfig& cfg, const Outcome& o, std::ostream& out) {
  if (cfg.out.empty()) {
    out << o.rendered;
  } else {
    write_file_atomic(cfg.out, o.rendered);
  }
  return o.exit_code;
}

void report_failures(const Outcome& o, std::ostream& err) {
  for (const auto& r : o.reports) {
    for (const auto& c : r.checks) {
      if (!c.skipped && !c.passed)
        err << fmt::format("invariant failed: {} family={} size={} seed={}: {} {}\n", to_string(r.theorem),
                           r.family, r.size, r.seed, c.name, c.detail);
    }
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::InvariantViolated ? kExitInvariant : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

GrowthReport run_cell(const ExperimentConfig& cfg, const FieldPtr& F, Family family, std::uint64_t N,
                      std::uint64_t seed, unsigned rep_jobs) {
  const auto opts = lab_options(cfg, rep_jobs);
  GrowthReport r;
  if (is_index_theorem(cfg.theorem)) {
    switch (cfg.theorem) {
      case TheoremId::MU5: r = quantity_mu5(F, N, parse_quad2(*F, cfg.poly), opts); break;
      case TheoremId::MU6A: r = quantity_mu6(F, N, Mu6Variant::A, opts); break;
      case TheoremId::MU6B: r = quantity_mu6(F, N, Mu6Variant::B, opts); break;
      default: r = quantity_mu1(F, N, opts); break;
    }
  } else {
    FpSet A = family == Family::File ? load_set_file(F, cfg.set_file) : make_family(F, family, N, seed, 0);
    FpSet X = family == Family::File ? A : make_family(F, family, N, seed, 1);
    switch (cfg.theorem) {
      case TheoremId::CO0: r = quantity_co0(A, opts); break;
      case TheoremId::THM2STAR: r = quantity_thm2star(A, X, opts); break;
      case TheoremId::MU4:
        r = quantity_mu4(A, parse_uniquad(*F, cfg.upoly), parse_quad2(*F, cfg.poly), opts);
        break;
      case TheoremId::MAYMAY: r = quantity_maymay(A, parse_quad2(*F, cfg.poly), opts); break;
      case TheoremId::BUC1: r = quantity_buc1(A, parse_uniquad(*F, cfg.upoly), opts); break;
      case TheoremId::MOT: r = quantity_mot(parse_quad2(*F, cfg.poly), A, X, opts); break;
      case TheoremId::BA: r = quantity_ba(X, A, opts); break;
      case TheoremId::TONGTONG: {
        const Quad3 f3 = shift_compose(*F, normalize_for_shift(parse_quad2(*F, cfg.poly)).f);
        r = quantity_tongtong(f3, A, A, sumset(A, A), opts);
        break;
      }
      default: throw Error(Errc::InvariantViolated, "unhandled theorem");
    }
    if (family == Family::File) N = A.size();
  }
  r.family = family_label(cfg, family);
  r.size = N;
  r.seed = seed;
  return r;
}

std::vector<GrowthReport> run_cells(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto F = PrimeField::make(cfg.p);
  const auto cells = enumerate_cells(cfg);
  std::vector<GrowthReport> out(cells.size());
  if (cells.empty()) return out;

  // Index theorems do not depend on the seed: evaluate once per size.
  std::vector<std::size_t> source(cells.size());
  std::map<std::uint64_t, std::size_t> first_of_size;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    source[i] = i;
    if (is_index_theorem(cfg.theorem)) source[i] = first_of_size.try_emplace(cells[i].size, i).first->second;
  }
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (source[i] == i) todo.push_back(i);

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(cfg.jobs, todo.size()));
  const unsigned rep_jobs = workers == 1 ? cfg.jobs : 1;
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < todo.size();) {
      const auto i = todo[t];
      try {
        out[i] = run_cell(cfg, F, cells[i].family, cells[i].size, cells[i].seed, rep_jobs);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (source[i] != i) {
      out[i] = out[source[i]];
      out[i].seed = cells[i].seed;
    }
  }
  return out;
}

std::vector<FitSummary> fit_by_family(const std::vector<GrowthReport>& reports) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<std::uint64_t, std::uint64_t>>> points;
  for (const auto& r : reports) {
    auto [it, fresh] = points.try_emplace(r.family);
    if (fresh) order.push_back(r.family);
    it->second.emplace_back(r.size, r.measured);
  }
  std::vector<FitSummary> fits;
  for (const auto& fam : order) {
    const auto& pts = points[fam];
    FitSummary s{reports.front().theorem, fam, pts.size(), fit_exponent(pts), theorem_exponent(reports.front().theorem)};
    fits.push_back(s);
  }
  return fits;
}

Outcome check(const ExperimentConfig& cfg) {
  Outcome o;
  o.reports = run_cells(cfg);
  for (const auto& r : o.reports)
    if (!r.hard_ok()) o.exit_code = kExitInvariant;
  o.rendered = render(cfg, o.reports, o.fits);
  return o;
}

Outcome sweep(const ExperimentConfig& cfg) {
  validate(cfg);
  std::size_t usable = 0;
  for (auto n : cfg.sizes)
    usable += !cfg.respect_preconditions || size_precondition_ok(cfg.theorem, n, cfg.p);
  if (usable < 3) throw Error(Errc::InsufficientData, fmt::format("sweep needs at least 3 sizes, got {}", usable));
  Outcome o;
  o.reports = run_cells(cfg);
  for (const auto& r : o.reports)
    if (!r.hard_ok()) o.exit_code = kExitInvariant;
  o.fits = fit_by_family(o.reports);
  o.rendered = render(cfg, o.reports, o.fits);
  return o;
}

OracleOutcome oracle(const std::string& subject, const ExperimentConfig& cfg) {
  const auto F = PrimeField::make(cfg.p);
  const std::uint64_t seed = cfg.seeds.empty() ? 1 : cfg.seeds.front();
  Rng rng(mix_seed(seed, 0x6f7261636c65));
  OracleOutcome o;
  o.subject = subject;
  auto tally = [&](bool ok) { ok ? ++o.agreements : ++o.disagreements; };
  const bool poly_subject = subject == "classify" || subject == "classify3" || subject == "implication";
  if (poly_subject && F->p() > kOracleModulusLimit)
    throw Error(Errc::ModulusTooLargeForOracle, fmt::format("p={} exceeds the oracle limit {}", F->p(), kOracleModulusLimit));

  if (subject == "classify") {
    const auto n = cfg.count ? cfg.count : 1000;
    for (std::uint64_t i = 0; i < n; ++i) {
      const Quad2 f = i % 2 ? random_composed_quad2(*F, rng) : random_quad2(*F, rng);
      const auto closed = classify_rank_one(*F, f);
      const auto brute = oracle_classify(*F, f);
      bool ok = closed.has_value() == brute.has_value();
      if (closed) ok = ok && expand(*F, *closed) == f;
      if (!ok) o.lines.push_back("disagreement: f = " + to_string(f));
      tally(ok);
    }
  } else if (subject == "classify3") {
    const auto n = cfg.count ? cfg.count : 300;
    for (std::uint64_t i = 0; i < n; ++i) {
      const Quad3 f3 = random_quad3(*F, rng, static_cast<unsigned>(i));
      const auto closed = classify_additively_decomposable3(*F, f3);
      const auto brute = oracle_classify(*F, f3);
      bool ok = closed.has_value() == brute.has_value();
      if (closed) ok = ok && expand(*F, *closed) == f3;
      if (!ok) o.lines.push_back("disagreement: f3 = " + to_string(f3));
      tally(ok);
    }
  } else if (subject == "implication") {
    const auto n = cfg.count ? cfg.count : 1000;
    std::uint64_t eligible = 0, unnormalized_decomposable = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const Quad2 f = random_quad2(*F, rng);
      if (!depends_on_each_variable(f) || classify_rank_one(*F, f)) continue;
      ++eligible;
      const Quad3 f3 = shift_compose(*F, normalize_for_shift(f).f);
      const bool ok = !oracle_classify(*F, f3).has_value();
      if (!ok) o.lines.push_back("counterexample: f = " + to_string(f));
      tally(ok);
      unnormalized_decomposable += oracle_classify(*F, shift_compose(*F, f)).has_value();
    }
    o.lines.push_back(fmt::format("eligible={} decomposable_without_normalization={}", eligible,
                                  unnormalized_decomposable));
  } else if (subject == "plunnecke") {
    const Rational delta = parse_rational(cfg.delta);
    const bool from_files = !cfg.set_file.empty();
    const auto n = from_files ? 1 : (cfg.count ? cfg.count : 30);
    const std::uint64_t max_size = cfg.sizes.empty() ? 8 : cfg.sizes.front();
    for (std::uint64_t i = 0; i < n; ++i) {
      const FpSet A = from_files ? load_set_file(F, cfg.set_file) : random_set(F, rng, max_size);
      const FpSet B = from_files ? (cfg.set_file_b.empty() ? A : load_set_file(F, cfg.set_file_b))
                                 : random_set(F, rng, max_size);
      const Rational K = cfg.K.empty() ? doubling_constant(A, B) : parse_rational(cfg.K);
      for (unsigned k : cfg.ks) {
        const PlunneckeParams params{K, delta, k};
        const auto res = plunnecke_search(A, B, params, SearchMode::Exhaustive);
        bool ok = res.witness.has_value() && !res.disproof;
        if (ok) ok = plunnecke_conclusion_holds(*res.witness, A, iterated_sumset(B, k), params);
        o.lines.push_back(fmt::format("instance={} |A|={} |B|={} K={}/{} k={} witness={} examined={}", i, A.size(),
                                      B.size(), K.num, K.den, k,
                                      res.witness ? fmt::format("{}", res.witness->elements()) : "none",
                                      res.subsets_examined));
        tally(ok);
      }
    }
  } else if (subject == "incidence") {
    const auto n = cfg.count ? cfg.count : 50;
    LabOptions opts = lab_options(cfg, cfg.jobs);
    opts.rep.backend = RepBackend::CrossCheck;
    for (std::uint64_t i = 0; i < n; ++i) {
      const FpSet A = random_set(F, rng, 10);
      const UniQuad f{1, static_cast<Elem>(rng.below(F->p())), 0};
      const auto shift = quantity_buc1(A, f, opts);
      const FpSet A2 = random_set(F, rng, 6);
      const FpSet X = random_set(F, rng, 4);
      const auto cubic = quantity_thm2star(A2, X, opts);
      for (const auto* r : {&shift, &cubic}) {
        for (const auto& c : r->checks) {
          if (!c.skipped && !c.passed)
            o.lines.push_back(fmt::format("instance={} {}: {} {}", i, to_string(r->theorem), c.name, c.detail));
        }
        tally(r->hard_ok());
      }
    }
  } else {
    throw Error(Errc::ConfigInvalid, "unknown oracle subject: " + subject);
  }
  o.exit_code = o.disagreements ? kExitInvariant : kExitOk;
  return o;
}

int cmd_check(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto o = check(cfg);
    report_failures(o, err);
    return emit(cfg, o, out);
  });
}

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto o = sweep(cfg);
    report_failures(o, err);
    for (const auto& f : o.fits) err << fit_comment(f) << "\n";
    return emit(cfg, o, out);
  });
}

int cmd_oracle(const std::string& subject, const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto o = oracle(subject, cfg);
    std::string text;
    for (const auto& l : o.lines) text += l + "\n";
    text += fmt::format("oracle subject={} p={} agreements={} disagreements={}\n", o.subject, cfg.p, o.agreements,
                        o.disagreements);
    if (cfg.out.empty()) {
      out << text;
    } else {
      write_file_atomic(cfg.out, text);
    }
    return o.exit_code;
  });
}

int cmd_gen(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    const auto F = PrimeField::make(cfg.p);
    const auto fam = cfg.families.front();
    const FpSet A = fam == Family::File ? load_set_file(F, cfg.set_file)
                                        : make_family(F, fam, cfg.sizes.front(), cfg.seeds.front(), 0);
    std::string text;
    if (cfg.format == OutputFormat::Json) {
      text = fmt::format("[{}]\n", fmt::join(A.elements(), ","));
    } else {
      text = format_set(A);
    }
    if (cfg.out.empty()) {
      out << text;
    } else {
      write_file_atomic(cfg.out, text);
    }
    return kExitOk;
  });
}

int cmd_incidence(const std::string& construction, const ExperimentConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const auto F = PrimeField::make(cfg.p);
    if (cfg.set_file.empty()) throw Error(Errc::ConfigInvalid, "incidence needs --set-file");
    const FpSet A = load_set_file(F, cfg.set_file);
    IncidenceInstance inst;
    if (construction == "cubic") {
      const FpSet X = cfg.set_file_b.empty() ? A : load_set_file(F, cfg.set_file_b);
      inst = build_cubic_construction(A, X);
    } else if (construction == "shift") {
      inst = build_shift_construction(A, parse_uniquad(*F, cfg.upoly));
    } else {
      throw Error(Errc::ConfigInvalid, "construction must be cubic or shift");
    }
    const auto I = count_incidences(inst, kIncidenceBudget, cfg.jobs);
    const auto k = collinearity_param(inst);
    const auto rud = rudnev_rhs(inst, k);
    const std::string text = to_json(inst) + "\n";
    if (cfg.out.empty()) {
      out << text;
    } else {
      write_file_atomic(cfg.out, text);
    }
    err << fmt::format("points={} planes={} incidences={} collinearity={} bound={} preconditions={}\n",
                       inst.points.size(), inst.planes.size(), I, k, rud.rhs, rud.preconditions_ok());
    return kExitOk;
  });
}

}  // namespace expander::lab
