#include "uso/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace uso {

ParseError::ParseError(std::size_t line, const std::string& field,
                       const std::string& message)
    : InvalidInput("line " + std::to_string(line) + ", " + field + ": " +
                   message),
      line_(line),
      field_(field) {}

void write_orientation(std::ostream& out, const Orientation& o) {
  out << "auso v1 d=" << o.dimension() << "\noutmaps";
  for (AxisMask m : o.outmaps()) out << ' ' << m;
  out << '\n';
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::uint64_t parse_unsigned(const std::string& token, std::size_t line,
                             const std::string& field) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, field, "expected a non-negative integer, got '" +
                                      token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw ParseError(line, field, "integer out of range: '" + token + "'");
  }
}

}  // namespace

Orientation read_orientation(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError(1, "header", "empty input");
  }
  std::istringstream header(line);
  std::string magic, version, dim;
  header >> magic >> version >> dim;
  if (magic != "auso") {
    throw ParseError(line_no, "header", "expected 'auso', got '" + magic + "'");
  }
  if (version != "v1") {
    throw ParseError(line_no, "version", "unsupported version '" + version + "'");
  }
  if (dim.rfind("d=", 0) != 0) {
    throw ParseError(line_no, "d", "expected 'd=<dimension>', got '" + dim + "'");
  }
  const std::uint64_t d = parse_unsigned(dim.substr(2), line_no, "d");
  if (d < 1 || d > static_cast<std::uint64_t>(kMaxDimension)) {
    throw ParseError(line_no, "d", "dimension out of range: " + std::to_string(d));
  }
  std::string extra;
  if (header >> extra) {
    throw ParseError(line_no, "header", "unexpected token '" + extra + "'");
  }

  if (!next_content_line(in, line, line_no)) {
    throw ParseError(line_no + 1, "outmaps", "missing outmaps line");
  }
  std::istringstream body(line);
  std::string keyword;
  body >> keyword;
  if (keyword != "outmaps") {
    throw ParseError(line_no, "outmaps", "expected 'outmaps', got '" + keyword + "'");
  }
  const std::uint64_t n = vertex_count(static_cast<int>(d));
  std::vector<AxisMask> outmaps;
  outmaps.reserve(n);
  std::string token;
  while (body >> token) {
    const std::string field = "outmaps[" + std::to_string(outmaps.size()) + "]";
    if (outmaps.size() == n) {
      throw ParseError(line_no, field, "more than " + std::to_string(n) + " outmaps");
    }
    const std::uint64_t m = parse_unsigned(token, line_no, field);
    if (m >= n) {
      throw ParseError(line_no, field, "outmap " + token + " has bits above d");
    }
    outmaps.push_back(static_cast<AxisMask>(m));
  }
  if (outmaps.size() != n) {
    throw ParseError(line_no, "outmaps", "expected " + std::to_string(n) +
                                             " outmaps, got " +
                                             std::to_string(outmaps.size()));
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError(line_no, "trailer", "unexpected content after outmaps");
  }
  try {
    return Orientation(static_cast<int>(d), std::move(outmaps));
  } catch (const InvalidInput& e) {
    throw ParseError(line_no, "outmaps", e.what());
  }
}

Orientation load_orientation(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file.string());
  return read_orientation(in);
}

void save_orientation(const std::filesystem::path& file, const Orientation& o) {
  std::ofstream out(file);
  if (!out) throw InvalidInput("cannot write " + file.string());
  write_orientation(out, o);
}

std::string format_path_record(const PathRecord& record) {
  nlohmann::ordered_json j;
  j["dim"] = record.dimension;
  j["rule"] = rule_name(record.rule.kind);
  if (!record.rule.ordering.empty()) {
    j["ordering"] = format_ordering(record.rule.ordering);
  }
  j["path"] = record.vertices;
  std::vector<int> dirs;
  dirs.reserve(record.directions.size());
  for (SignedDirection t : record.directions) dirs.push_back(t.value());
  j["dirs"] = dirs;
  j["usage"] = record.usage;
  return j.dump();
}

PathRecord parse_path_record(const std::string& line, std::size_t line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, "record", e.what());
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) {
      throw ParseError(line_no, key, "missing field");
    }
    return j.at(key);
  };
  try {
    const int d = require("dim").get<int>();
    check_dimension(d);
    Rule rule;
    rule.kind = parse_rule_kind(require("rule").get<std::string>());
    if (j.contains("ordering")) {
      rule.ordering = parse_ordering(j.at("ordering").get<std::string>());
    }
    auto vertices = require("path").get<std::vector<Vertex>>();
    for (Vertex v : vertices) {
      if (!is_vertex(d, v)) {
        throw ParseError(line_no, "path", "vertex " + std::to_string(v) + " outside the cube");
      }
    }
    PathRecord record = make_path_record(d, rule, std::move(vertices));
    std::vector<SignedDirection> dirs;
    for (int t : require("dirs").get<std::vector<int>>()) dirs.emplace_back(t);
    if (dirs != record.directions) {
      throw ParseError(line_no, "dirs", "directions disagree with the vertex path");
    }
    if (require("usage").get<std::vector<std::uint64_t>>() != record.usage) {
      throw ParseError(line_no, "usage", "usage counts disagree with the vertex path");
    }
    return record;
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, "record", e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(line_no, "record", e.what());
  }
}

}  // namespace uso
