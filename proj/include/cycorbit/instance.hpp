#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cycorbit/congruence.hpp"
#include "cycorbit/permutation.hpp"

namespace cycorbit {

// Invalid instance or system file; line and column are 1-based.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Keyword-prefixed orbit instance:
//
//   n 9
//   alphabet 01
//   perm (6,5,7,3,2,1)(4,8)
//   v 010001111
//   w 101110001
//
// Blank lines and lines starting with '#' are ignored. An empty perm value
// denotes the identity.
struct InstanceFile {
  std::size_t n = 0;
  std::string alphabet;
  Permutation perm = Permutation::identity(1);
  Configuration v;
  Configuration w;
};

InstanceFile parse_instance(std::string_view text);
std::string format_instance(const InstanceFile& instance);

// One equation "a mod b" per line, 0 <= a < b.
CongruenceSystem parse_congruence_system(std::string_view text);

// Whole file contents; throws InputError (line 0) when unreadable.
std::string read_file(const std::string& path);

}  // namespace cycorbit
