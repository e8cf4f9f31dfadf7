#ifndef USO_IO_HPP
#define USO_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "uso/orientation.hpp"
#include "uso/search.hpp"

namespace uso {

// Malformed orientation file or path record; `line` is 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& field,
             const std::string& message);

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// Orientation file, text:
//   auso v1 d=<d>
//   outmaps <m_0> <m_1> ... <m_{2^d-1}>
// m_v is the decimal outmap of vertex v.
void write_orientation(std::ostream& out, const Orientation& o);
Orientation read_orientation(std::istream& in);
Orientation load_orientation(const std::filesystem::path& file);
void save_orientation(const std::filesystem::path& file, const Orientation& o);

// One JSON object per line with keys dim, rule, path, dirs, usage (plus
// ordering for lrc).  usage lists counts for +1, -1, +2, -2, ...
std::string format_path_record(const PathRecord& record);
PathRecord parse_path_record(const std::string& line, std::size_t line_no = 1);

}  // namespace uso

#endif  // USO_IO_HPP
