#include "expnev/numeric/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace expnev::numeric {

using nlohmann::json;

const std::vector<double>& CheckReport::column(const std::string& key) const {
  for (const auto& [k, v] : columns)
    if (k == key) return v;
  throw std::out_of_range("no report column " + key);
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

json number(double x) { return std::isfinite(x) ? json(round12(x)) : json(nullptr); }

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

bool small_trend(const std::vector<double>& v, double eps) {
  if (v.empty()) return false;
  if (v.back() <= eps) return true;
  const std::size_t lo = v.size() / 2;
  for (std::size_t i = lo + 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return v.back() < v[lo];
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& cols) {
  std::ostringstream out;
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << "\n";
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << format12(cols[c][i]);
    out << "\n";
  }
  return out.str();
}

}  // namespace

bool evaluate_verdict(const CheckReport& rep) {
  if (!rep.preconditions_ok) return false;
  const auto& mg = rep.margin;
  if (rep.rule == "oscillation") {
    if (mg.empty()) return false;
    const auto [lo, hi] = std::minmax_element(mg.begin(), mg.end());
    return *hi - *lo <= rep.metadata.at("bound").get<double>();
  }
  if (rep.rule == "upper_bound_top_half") {
    if (mg.empty()) return false;
    for (std::size_t i = mg.size() / 2; i < mg.size(); ++i)
      if (!(mg[i] >= 0)) return false;
    return true;
  }
  if (rep.rule == "small_trend") return small_trend(rep.lhs, rep.metadata.at("eps").get<double>());
  if (rep.rule == "smt") {
    const double eps = rep.metadata.at("eps").get<double>();
    const double floor = rep.metadata.at("min_simple_ratio").get<double>();
    const std::size_t tail = rep.metadata.at("tail").get<std::size_t>();
    const auto& simple = rep.column("simple_ratio");
    if (rep.lhs.size() < tail || tail == 0) return false;
    for (std::size_t i = rep.lhs.size() - tail; i < rep.lhs.size(); ++i)
      if (!(rep.lhs[i] <= eps) || !(simple[i] >= floor)) return false;
    return true;
  }
  if (rep.rule == "transversal") {
    if (!rep.metadata.at("euler_identity").get<bool>()) return false;
    for (double m : mg)
      if (!(m > 0)) return false;
    return true;
  }
  throw std::invalid_argument("unknown verdict rule " + rep.rule);
}

json report_to_json(const CheckReport& rep) {
  json j;
  j["check"] = rep.name;
  j["rule"] = rep.rule;
  j["pass"] = rep.pass;
  j["preconditions_ok"] = rep.preconditions_ok;
  j["r"] = numbers(rep.r);
  j["r_used"] = numbers(rep.r_used);
  j["lhs"] = numbers(rep.lhs);
  j["rhs"] = numbers(rep.rhs);
  j["margin"] = numbers(rep.margin);
  json cols = json::object();
  for (const auto& [k, v] : rep.columns) cols[k] = numbers(v);
  j["columns"] = cols;
  j["metadata"] = rep.metadata;
  j["diagnostics"] = rep.diagnostics;
  return j;
}

std::string report_to_csv(const CheckReport& rep) {
  std::vector<std::string> header = {"r", "r_used", "lhs", "rhs", "margin"};
  std::vector<std::vector<double>> cols = {rep.r, rep.r_used, rep.lhs, rep.rhs, rep.margin};
  for (const auto& [k, v] : rep.columns) {
    header.push_back(k);
    cols.push_back(v);
  }
  return csv_table(header, cols);
}

json samples_to_json(const std::vector<NevanlinnaSample>& samples) {
  json a = json::array();
  for (const auto& s : samples) {
    json j;
    j["r"] = number(s.r);
    j["r_used"] = number(s.r_used);
    j["T"] = number(s.T);
    j["m"] = number(s.m);
    j["N"] = number(s.N);
    json trunc = json::object();
    for (const auto& [q, v] : s.N_trunc) trunc[std::to_string(q)] = number(v);
    j["N_trunc"] = trunc;
    j["n_count"] = s.n_count;
    j["N_poles"] = number(s.N_poles);
    a.push_back(j);
  }
  return a;
}

std::string samples_to_csv(const std::vector<NevanlinnaSample>& samples) {
  std::vector<int> levels;
  if (!samples.empty())
    for (const auto& [q, v] : samples.front().N_trunc) levels.push_back(q);
  std::vector<std::string> header = {"r", "r_used", "T", "m", "N"};
  for (int q : levels) header.push_back("N" + std::to_string(q));
  header.push_back("n_count");
  header.push_back("N_poles");
  std::vector<std::vector<double>> cols(header.size());
  for (const auto& s : samples) {
    std::size_t c = 0;
    for (double v : {s.r, s.r_used, s.T, s.m, s.N}) cols[c++].push_back(v);
    for (int q : levels) cols[c++].push_back(s.N_trunc.at(q));
    cols[c++].push_back(s.n_count);
    cols[c++].push_back(s.N_poles);
  }
  return csv_table(header, cols);
}

json zeros_to_json(const ZeroSearch& zs) {
  auto records = [](const std::vector<ZeroRecord>& v) {
    json a = json::array();
    for (const auto& z : v)
      a.push_back({{"re", number(z.location.real())},
                   {"im", number(z.location.imag())},
                   {"multiplicity", z.multiplicity},
                   {"enclosure_radius", number(z.enclosure_radius)},
                   {"residual", number(z.residual)}});
    return a;
  };
  json j;
  j["requested_radius"] = number(zs.requested_radius);
  j["radius"] = number(zs.radius);
  j["nudge"] = zs.nudge;
  j["outer_winding"] = zs.outer_winding;
  j["zeros"] = records(zs.zeros);
  j["poles"] = records(zs.poles);
  return j;
}

std::string zeros_to_csv(const ZeroSearch& zs) {
  std::vector<std::vector<double>> cols(5);
  for (const auto& z : zs.zeros) {
    cols[0].push_back(z.location.real());
    cols[1].push_back(z.location.imag());
    cols[2].push_back(z.multiplicity);
    cols[3].push_back(z.enclosure_radius);
    cols[4].push_back(z.residual);
  }
  return csv_table({"re", "im", "multiplicity", "enclosure_radius", "residual"}, cols);
}

}  // namespace expnev::numeric
