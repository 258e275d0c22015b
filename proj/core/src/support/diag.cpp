#include "pyx/support.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pyx {

std::string SourceLoc::str() const {
  std::ostringstream os;
  os << (file.empty() ? "<input>" : file) << ":" << line << ":" << column;
  return os.str();
}

std::string Diag::render() const {
  std::ostringstream os;
  os << "error: " << category_ << ": " << what();
  if (has_loc_)
    os << " at " << loc_.str();
  if (stmt_id_ >= 0)
    os << " stmt " << stmt_id_;
  return os.str();
}

uint64_t fnv1a(std::string_view s) {
  Fnv1a h;
  h.update(s);
  return h.digest();
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Diag("io", "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Diag("io", "cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  // Keep integral doubles visibly floating point ("6" -> "6.0").
  if (s.find_first_of(".eEnN") == std::string::npos)
    s += ".0";
  return s;
}

std::string format_int(int64_t v) { return std::to_string(v); }

} // namespace pyx
