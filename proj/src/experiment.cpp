#include "trifree/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "trifree/errors.hpp"
#include "trifree/parallel.hpp"
#include "trifree/partite_distance.hpp"

namespace trifree {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ArgumentError("'" + key + "': not a number: '" + text + "'");
}

std::uint64_t to_unsigned(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text[0] != '-') {
      const auto v = std::stoull(text, &used);
      if (used == text.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw ArgumentError("'" + key + "': not a non-negative integer: '" + text + "'");
}

template <class T, class F>
std::vector<T> list_of(const std::string& key, const std::string& value, F convert) {
  std::vector<T> out;
  for (const auto& item : split(value, ',')) out.push_back(convert(key, item));
  require(!out.empty(), "'" + key + "': empty list");
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sanitize(std::string s) {
  for (auto& ch : s)
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
  return s;
}

const std::vector<std::string>& columns() {
  static const std::vector<std::string> names = {
      "schema_version", "cell", "trial", "seed", "n", "p", "gamma", "r", "c", "c_source", "pprime",
      "completed", "valid", "lemma_regime", "edges_gamma", "edges_h", "min_degree_h", "min_degree_target",
      "triangles_h", "distance", "exact", "method", "del_g1_a", "del_g1_b", "del_g2", "del_g3", "del_h", "error",
      "wall_ms"};
  return names;
}

}  // namespace

std::string to_string(MeasureMode mode) {
  switch (mode) {
    case MeasureMode::kAuto: return "auto";
    case MeasureMode::kExact: return "exact";
    case MeasureMode::kHeuristic: return "heuristic";
    case MeasureMode::kNone: return "none";
  }
  return "auto";
}

MeasureMode parse_measure_mode(const std::string& text) {
  if (text == "auto") return MeasureMode::kAuto;
  if (text == "exact") return MeasureMode::kExact;
  if (text == "heuristic") return MeasureMode::kHeuristic;
  if (text == "none") return MeasureMode::kNone;
  throw ArgumentError("unknown measure mode '" + text + "'");
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig config;
  bool have_n = false, have_p = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, "config line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    auto as_size = [](const std::string& k, const std::string& t) {
      return static_cast<std::size_t>(to_unsigned(k, t));
    };
    if (key == "n") {
      config.n = list_of<std::size_t>(key, value, as_size);
      have_n = true;
    } else if (key == "p" || key == "p_scale") {
      require(!have_p, "config: give either p or p_scale, once");
      config.p = list_of<double>(key, value, to_double);
      config.p_scale = key == "p_scale";
      have_p = true;
    } else if (key == "gamma") {
      config.gamma = list_of<double>(key, value, to_double);
    } else if (key == "r") {
      config.r = list_of<std::size_t>(key, value, as_size);
    } else if (key == "c") {
      config.c = list_of<std::optional<double>>(key, value, [](const std::string& k, const std::string& t) {
        return t == "formula" ? std::optional<double>{} : std::optional<double>{to_double(k, t)};
      });
    } else if (key == "seeds") {
      config.seeds = as_size(key, value);
    } else if (key == "base_seed") {
      config.base_seed = to_unsigned(key, value);
    } else if (key == "restarts") {
      config.restarts = as_size(key, value);
    } else if (key == "measure") {
      config.measure = parse_measure_mode(value);
    } else if (key == "out") {
      config.out = value;
    } else if (key == "threads") {
      config.threads = as_size(key, value);
    } else {
      throw ArgumentError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  require(have_n, "config: n is required");
  require(have_p, "config: p or p_scale is required");
  require(config.seeds >= 1, "config: seeds must be positive");
  require(config.restarts >= 1, "config: restarts must be positive");
  return config;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config '" + path + "'");
  return parse_sweep_config(in);
}

std::string sweep_config_json(const SweepConfig& config) {
  nlohmann::ordered_json j;
  j["n"] = config.n;
  j[config.p_scale ? "p_scale" : "p"] = config.p;
  j["gamma"] = config.gamma;
  j["r"] = config.r;
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : config.c) cs.push_back(c ? nlohmann::ordered_json(*c) : nlohmann::ordered_json("formula"));
  j["c"] = cs;
  j["seeds"] = config.seeds;
  j["base_seed"] = config.base_seed;
  j["restarts"] = config.restarts;
  j["measure"] = to_string(config.measure);
  j["out"] = config.out;
  return j.dump(2);
}

std::vector<SweepCell> expand_cells(const SweepConfig& config) {
  std::vector<SweepCell> cells;
  for (auto n : config.n)
    for (auto p : config.p)
      for (auto gamma : config.gamma)
        for (auto r : config.r)
          for (const auto& c : config.c) {
            const double prob = config.p_scale ? p / std::sqrt(static_cast<double>(n)) : p;
            cells.push_back({cells.size(), n, prob, gamma, r, c});
          }
  return cells;
}

Seed cell_seed(const SweepConfig& config, std::size_t cell, std::size_t trial) {
  return {mix64(config.base_seed + mix64(cell + 1)), trial};
}

ExperimentRecord run_cell(const SweepCell& cell, const SweepConfig& config, std::size_t trial) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.cell = cell.index;
  rec.trial = trial;
  const auto seed = cell_seed(config, cell.index, trial);
  rec.seed = seed.value;
  rec.n = cell.n;
  rec.p = cell.p;
  rec.gamma = cell.gamma;
  rec.r = cell.r;
  rec.c = cell.c.value_or(0);
  rec.c_source = cell.c ? "explicit" : "formula";
  rec.method = "none";
  try {
    const auto params = derive_params(cell.gamma, cell.r, cell.n, cell.p, cell.c, seed);
    rec.c = params.c;
    rec.pprime = params.pprime;
    rec.valid = params.valid;
    rec.lemma_regime = params.lemma_regime;
    const auto gamma = sample_gnp(cell.n, cell.p, seed);
    rec.edges_gamma = gamma.m();
    const auto trace = construct(gamma, params);
    rec.edges_h = trace.h.m();
    rec.min_degree_h = trace.min_degree_h;
    rec.min_degree_target = trace.min_degree_target;
    rec.triangles_h = trace.triangles_h;
    rec.deleted = trace.deleted;

    auto mode = config.measure;
    if (mode == MeasureMode::kAuto)
      mode = cell.n <= 24 && cell.n <= exact_vertex_cap(cell.r) ? MeasureMode::kExact : MeasureMode::kHeuristic;
    if (mode != MeasureMode::kNone) {
      const auto result = mode == MeasureMode::kExact ? max_rcut_exact(trace.h, cell.r)
                                                      : rcut_local_search(trace.h, cell.r, config.restarts, seed);
      rec.distance = static_cast<std::int64_t>(result.distance);
      rec.exact = result.exact;
      rec.method = to_string(mode);
    }
    rec.completed = true;
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<ExperimentRecord> run_sweep(const SweepConfig& config) {
  const auto cells = expand_cells(config);
  std::vector<ExperimentRecord> records(cells.size() * config.seeds);
  parallel_for(
      records.size(),
      [&](std::size_t i) { records[i] = run_cell(cells[i / config.seeds], config, i % config.seeds); },
      config.threads);
  return records;
}

std::string csv_header() {
  std::string out;
  for (const auto& name : columns()) out += (out.empty() ? "" : ",") + name;
  return out;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& r : records) {
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
    out << r.schema_version << ',' << r.cell << ',' << r.trial << ',' << r.seed << ',' << r.n << ',' << fmt(r.p)
        << ',' << fmt(r.gamma) << ',' << r.r << ',' << fmt(r.c) << ',' << r.c_source << ',' << fmt(r.pprime) << ','
        << r.completed << ',' << r.valid << ',' << r.lemma_regime << ',' << r.edges_gamma << ',' << r.edges_h
        << ',' << r.min_degree_h << ',' << fmt(r.min_degree_target) << ',' << r.triangles_h << ',' << r.distance
        << ',' << r.exact << ',' << r.method << ',' << r.deleted.g1_a_internal << ',' << r.deleted.g1_b_dropped
        << ',' << r.deleted.g2 << ',' << r.deleted.g3 << ',' << r.deleted.h << ',' << sanitize(r.error) << ','
        << wall << '\n';
  }
}

void save_csv(const std::string& path, const std::vector<ExperimentRecord>& records) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  write_csv(out, records);
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "csv: missing header");
  const auto header = split(trim(line), ',');
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < header.size(); ++i) at[header[i]] = i;
  for (const auto& name : columns()) require(at.count(name) == 1, "csv: missing column '" + name + "'");

  std::vector<ExperimentRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    require(f.size() == header.size(), "csv line " + std::to_string(line_no) + ": wrong field count");
    auto get = [&](const char* name) -> const std::string& { return f[at.at(name)]; };
    auto uint = [&](const char* name) { return to_unsigned(name, get(name)); };
    auto real = [&](const char* name) { return to_double(name, get(name)); };
    auto flag = [&](const char* name) { return uint(name) != 0; };
    ExperimentRecord r;
    r.schema_version = static_cast<int>(uint("schema_version"));
    require(r.schema_version == kRecordSchemaVersion, "csv: unsupported schema version");
    r.cell = uint("cell");
    r.trial = uint("trial");
    r.seed = uint("seed");
    r.n = uint("n");
    r.p = real("p");
    r.gamma = real("gamma");
    r.r = uint("r");
    r.c = real("c");
    r.c_source = get("c_source");
    r.pprime = real("pprime");
    r.completed = flag("completed");
    r.valid = flag("valid");
    r.lemma_regime = flag("lemma_regime");
    r.edges_gamma = uint("edges_gamma");
    r.edges_h = uint("edges_h");
    r.min_degree_h = uint("min_degree_h");
    r.min_degree_target = real("min_degree_target");
    r.triangles_h = uint("triangles_h");
    r.distance = static_cast<std::int64_t>(real("distance"));
    r.exact = flag("exact");
    r.method = get("method");
    r.deleted = {uint("del_g1_a"), uint("del_g1_b"), uint("del_g2"), uint("del_g3"), uint("del_h")};
    r.error = get("error");
    r.wall_ms = real("wall_ms");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ExperimentRecord> load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  return read_csv(in);
}

void save_sweep(const std::string& path, const SweepConfig& config, const std::vector<ExperimentRecord>& records) {
  save_csv(path, records);
  std::ofstream side(path + ".json");
  if (!side) throw ArgumentError("cannot write '" + path + ".json'");
  auto j = nlohmann::ordered_json::parse(sweep_config_json(config));
  nlohmann::ordered_json meta;
  meta["schema_version"] = kRecordSchemaVersion;
  meta["columns"] = columns();
  meta["records"] = records.size();
  meta["config"] = j;
  side << meta.dump(2) << '\n';
}

ScalingFit fit_scaling(const std::vector<ExperimentRecord>& records) {
  ScalingFit fit;
  std::vector<double> xs, ys;
  std::set<std::pair<std::size_t, double>> cells;
  fit.all_exact = true;
  for (const auto& r : records) {
    if (!r.completed || r.distance < 0) {
      ++fit.skipped_unmeasured;
      continue;
    }
    if (r.distance == 0) {
      ++fit.skipped_zero;
      continue;
    }
    require(r.p > 0 && r.n > 0, "fit_scaling: record with non-positive n or p");
    xs.push_back(std::log(static_cast<double>(r.n) / r.p));
    ys.push_back(std::log(static_cast<double>(r.distance)));
    cells.emplace(r.n, r.p);
    fit.all_exact = fit.all_exact && r.exact;
  }
  fit.used = xs.size();
  fit.cells = cells.size();
  require(fit.used >= 5, "fit_scaling: need at least 5 records with a positive distance");

  const double k = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  require(sxx > 1e-12 * std::max(1.0, mx * mx), "fit_scaling: all x values equal");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.c_hat = std::exp(fit.intercept);
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / k);
  return fit;
}

std::string fit_json(const ScalingFit& fit, int indent) {
  nlohmann::ordered_json j;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["c_hat"] = fit.c_hat;
  j["residual_rms"] = fit.residual;
  j["records_used"] = fit.used;
  j["cells"] = fit.cells;
  j["skipped_zero_distance"] = fit.skipped_zero;
  j["skipped_unmeasured"] = fit.skipped_unmeasured;
  j["all_exact"] = fit.all_exact;
  j["c_hat_is_upper_estimate"] = !fit.all_exact;
  return j.dump(indent);
}

}  // namespace trifree
