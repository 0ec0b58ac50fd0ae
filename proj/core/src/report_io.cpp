#include "expander/report_io.hpp"

#include <cstdio>
#include <fstream>

#include <fmt/format.h>

#include <nlohmann/json.hpp>

namespace expander {

namespace {

std::string num(double v) { return fmt::format("{:.10g}", v); }

}  // namespace

std::string csv_row(const GrowthReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{}", to_string(r.theorem), r.p, r.family, r.size, r.seed,
                     r.measured, r.exponent.num, r.exponent.den, num(r.bound_rhs), num(r.constant_ratio),
                     r.precondition_ok ? 1 : 0);
}

std::string to_csv(std::span<const GrowthReport> reports) {
  std::string out(kCsvVersionLine);
  out += '\n';
  out += kCsvColumns;
  out += '\n';
  for (const auto& r : reports) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

std::string fit_comment(const FitSummary& s) {
  return fmt::format("# fit theorem={} family={} points={} slope={:.6f} exponent={}/{} gap={:.6f} residual={:.6f}",
                     to_string(s.theorem), s.family, s.points, s.fit.slope, s.exponent.num, s.exponent.den, s.gap(),
                     s.fit.residual);
}

std::string to_json(std::span<const GrowthReport> reports, std::span<const FitSummary> fits) {
  nlohmann::ordered_json root;
  root["version"] = "expander-lab v1";
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["theorem_id"] = std::string(to_string(r.theorem));
    j["p"] = r.p;
    j["family"] = r.family;
    j["size"] = r.size;
    j["seed"] = r.seed;
    j["measured"] = r.measured;
    j["exponent_num"] = r.exponent.num;
    j["exponent_den"] = r.exponent.den;
    j["bound_rhs"] = r.bound_rhs;
    j["constant_ratio"] = r.constant_ratio;
    j["precondition_ok"] = r.precondition_ok;
    j["precondition"] = r.precondition;
    auto extras = nlohmann::ordered_json::object();
    for (const auto& e : r.extras) extras[e.name] = e.value;
    j["extras"] = std::move(extras);
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    rows.push_back(std::move(j));
  }
  root["reports"] = std::move(rows);
  auto fj = nlohmann::ordered_json::array();
  for (const auto& s : fits) {
    fj.push_back({{"theorem_id", std::string(to_string(s.theorem))},
                  {"family", s.family},
                  {"points", s.points},
                  {"slope", s.fit.slope},
                  {"intercept", s.fit.intercept},
                  {"residual", s.fit.residual},
                  {"exponent_num", s.exponent.num},
                  {"exponent_den", s.exponent.den},
                  {"gap", s.gap()}});
  }
  root["fits"] = std::move(fj);
  return root.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::ConfigInvalid, "cannot write '" + tmp + "'");
    out << contents;
    out.flush();
    if (!out) throw Error(Errc::ConfigInvalid, "short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(Errc::ConfigInvalid, "cannot rename '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace expander
