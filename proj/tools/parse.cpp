#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "hardykit/error.hpp"
#include "json.hpp"

namespace hardykit::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double to_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::size_t to_count(std::string_view s) {
  const double v = to_double(s);
  if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw Error(ErrorCode::ParseError, "not a positive count: '" + std::string(s) + "'");
  }
  return static_cast<std::size_t>(v);
}

FiniteDist grid_dist(GridFamily family, double parameter, std::size_t n) {
  GridSpec spec;
  spec.family = family;
  spec.parameter = parameter;
  spec.n_atoms = n;
  return grid_of_continuous(spec);
}

}  // namespace

FiniteDist dist_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (j.contains("atoms")) {
      return make_finite_dist(j.at("atoms").get<std::vector<double>>(),
                              j.at("probs").get<std::vector<double>>());
    }
    GridSpec spec;
    spec.family = parse_grid_family(j.at("family").get<std::string>());
    spec.n_atoms = j.at("n").get<std::size_t>();
    for (const char* key : {"parameter", "rate", "shape"}) {
      if (j.contains(key)) spec.parameter = j.at(key).get<double>();
    }
    if (spec.family == GridFamily::CustomQuantile) {
      spec.table.levels = j.at("levels").get<std::vector<double>>();
      spec.table.values = j.at("values").get<std::vector<double>>();
    }
    return grid_of_continuous(spec);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("distribution file: ") + e.what());
  }
}

FiniteDist parse_dist(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n) {
      throw Error(ErrorCode::ParseError, "malformed distribution spec '" + std::string(spec) + "'");
    }
  };
  if (kind == "bernoulli") {
    need(2);
    return bernoulli(to_double(parts[1]));
  }
  if (kind == "point") {
    need(2);
    return degenerate(to_double(parts[1]));
  }
  if (kind == "uniform") {
    need(3);
    const auto dots = parts[1].find("..");
    if (dots == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "uniform needs a..b, got '" + std::string(parts[1]) + "'");
    }
    return uniform_points(to_double(parts[1].substr(0, dots)), to_double(parts[1].substr(dots + 2)),
                          to_count(parts[2]));
  }
  if (kind == "grid") {
    if (parts.size() == 3) {
      return grid_dist(parse_grid_family(parts[1]), 1.0, to_count(parts[2]));
    }
    need(4);
    return grid_dist(parse_grid_family(parts[1]), to_double(parts[2]), to_count(parts[3]));
  }
  if (kind == "file") {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return dist_from_json_text(buf.str());
  }
  throw Error(ErrorCode::ParseError, "unknown distribution kind '" + std::string(kind) + "'");
}

SupportFunction parse_psi(std::string_view spec, const FiniteDist& d) {
  const std::size_t n = d.size();
  if (spec == "e1") {
    SupportFunction f = SupportFunction::constant(n, 0.0);
    f[0] = 1.0;
    return f;
  }
  if (spec == "one") return SupportFunction::constant(n, 1.0);
  if (spec == "atoms") {
    return SupportFunction(std::vector<double>(d.atoms().begin(), d.atoms().end()));
  }
  std::vector<double> v;
  for (auto part : split(spec, ',')) v.push_back(to_double(part));
  if (v.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "psi has " + std::to_string(v.size()) +
                                               " values for " + std::to_string(n) + " atoms");
  }
  return SupportFunction(std::move(v));
}

CensoredSample read_censored_csv(std::istream& in, CensorSide default_side) {
  CensoredSample s;
  s.side = default_side;
  std::string line;
  bool header = true;
  bool side_seen = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cols = split(line, ',');
    if (header) {
      header = false;
      if (trim(cols[0]) == "time") continue;
    }
    if (cols.size() < 2 || cols.size() > 3) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 2 or 3 columns");
    }
    s.times.push_back(to_double(cols[0]));
    const auto status = trim(cols[1]);
    if (status != "0" && status != "1") {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": status must be 0 or 1");
    }
    s.events.push_back(status == "1");
    if (cols.size() == 3) {
      const auto side = trim(cols[2]);
      CensorSide parsed;
      if (side == "right") {
        parsed = CensorSide::Right;
      } else if (side == "left") {
        parsed = CensorSide::Left;
      } else {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad side");
      }
      if (side_seen && parsed != s.side) {
        throw Error(ErrorCode::ParseError, "mixed censoring sides in one file");
      }
      s.side = parsed;
      side_seen = true;
    }
  }
  if (s.times.empty()) throw Error(ErrorCode::EmptySample, "no observations in input");
  return s;
}

void write_censored_csv(std::ostream& out, const CensoredSample& s) {
  const char* side = s.side == CensorSide::Right ? "right" : "left";
  out << "time,status,side\n";
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", s.times[i]);
    out << buf << ',' << (s.events[i] ? 1 : 0) << ',' << side << '\n';
  }
}

}  // namespace hardykit::cli
