#ifndef PYX_SUPPORT_HPP
#define PYX_SUPPORT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pyx {

struct SourceLoc {
  std::string file;
  uint32_t line = 1;
  uint32_t column = 1;

  std::string str() const;
};

// Error with an optional source location and statement id. Everything that
// can fail in the pipeline throws one of these; the CLI renders them as a
// single machine-parsable line.
class Diag : public std::runtime_error {
public:
  Diag(std::string category, const std::string &message)
      : std::runtime_error(message), category_(std::move(category)) {}
  Diag(std::string category, const std::string &message, SourceLoc loc)
      : std::runtime_error(message), category_(std::move(category)),
        loc_(std::move(loc)), has_loc_(true) {}

  const std::string &category() const { return category_; }
  const SourceLoc *loc() const { return has_loc_ ? &loc_ : nullptr; }
  int64_t stmt_id() const { return stmt_id_; }
  Diag &at_stmt(int64_t id) {
    stmt_id_ = id;
    return *this;
  }

  // "error: <category>: <message> [at file:line:col] [stmt N]"
  std::string render() const;

private:
  std::string category_;
  SourceLoc loc_;
  bool has_loc_ = false;
  int64_t stmt_id_ = -1;
};

// FNV-1a, used for artifact hashes and anywhere a stable 64-bit digest of
// bytes is needed.
struct Fnv1a {
  uint64_t state = 1469598103934665603ull;
  void update(const void *data, size_t n) {
    const auto *p = static_cast<const uint8_t *>(data);
    for (size_t i = 0; i < n; ++i) {
      state ^= p[i];
      state *= 1099511628211ull;
    }
  }
  void update(std::string_view s) { update(s.data(), s.size()); }
  uint64_t digest() const { return state; }
};

uint64_t fnv1a(std::string_view s);

std::vector<std::string> split_ws(std::string_view line);
std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view content);

// Shortest round-trip formatting; the one float-to-text routine used by the
// interpreter, the runtime and all dumps so traces compare bit-identical.
std::string format_double(double v);
std::string format_int(int64_t v);

} // namespace pyx

#endif
