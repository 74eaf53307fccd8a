#include "cycorbit/instance.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace cycorbit {

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-blank, non-comment lines with trailing whitespace removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first < line.size() && line[first] != '#') lines.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

BigInt parse_natural(std::string_view token, std::size_t line, std::size_t column,
                     const char* what) {
  if (token.empty()) throw InputError(std::string("missing ") + what, line, column);
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
      throw InputError(std::string("invalid ") + what + " '" + std::string(token) + "'", line,
                       column + i);
    }
  }
  return BigInt(std::string(token), 10);
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  struct Field {
    std::size_t line;
    std::size_t column;  // of the value
    std::string_view value;
  };
  std::map<std::string, Field, std::less<>> fields;
  static const char* kKeys[] = {"n", "alphabet", "perm", "v", "w"};

  const std::vector<Line> lines = content_lines(text);
  for (const Line& line : lines) {
    std::size_t pos = 0;
    while (is_space(line.text[pos])) ++pos;
    const std::size_t key_start = pos;
    while (pos < line.text.size() && !is_space(line.text[pos])) ++pos;
    const std::string key(line.text.substr(key_start, pos - key_start));
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw InputError("unknown key '" + key + "'", line.number, key_start + 1);
    if (fields.count(key) != 0) {
      throw InputError("duplicate key '" + key + "'", line.number, key_start + 1);
    }
    if (pos < line.text.size()) ++pos;  // single separator
    fields[key] = {line.number, pos + 1, line.text.substr(pos)};
  }

  const std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  for (const char* k : kKeys) {
    if (fields.count(k) == 0) throw InputError(std::string("missing key '") + k + "'", last_line, 1);
  }

  InstanceFile inst;
  const Field& n_field = fields["n"];
  const BigInt n = parse_natural(n_field.value, n_field.line, n_field.column, "degree");
  if (sgn(n) == 0 || bit_length(n) > 32) {
    throw InputError("degree must be a positive integer below 2^32", n_field.line, n_field.column);
  }
  inst.n = static_cast<std::size_t>(to_u64(n));

  const Field& a_field = fields["alphabet"];
  if (a_field.value.empty()) throw InputError("empty alphabet", a_field.line, a_field.column);
  for (std::size_t i = 0; i < a_field.value.size(); ++i) {
    const char ch = a_field.value[i];
    if (is_space(ch)) {
      throw InputError("whitespace in alphabet", a_field.line, a_field.column + i);
    }
    if (a_field.value.substr(0, i).find(ch) != std::string_view::npos) {
      throw InputError(std::string("repeated alphabet symbol '") + ch + "'", a_field.line,
                       a_field.column + i);
    }
  }
  inst.alphabet = std::string(a_field.value);

  auto config = [&](const char* key) {
    const Field& f = fields[key];
    if (f.value.size() != inst.n) {
      throw InputError(std::string(key) + " has length " + std::to_string(f.value.size()) +
                           ", expected " + std::to_string(inst.n),
                       f.line, f.column);
    }
    for (std::size_t i = 0; i < f.value.size(); ++i) {
      if (inst.alphabet.find(f.value[i]) == std::string::npos) {
        throw InputError(std::string("symbol '") + f.value[i] + "' not in alphabet", f.line,
                         f.column + i);
      }
    }
    return Configuration(std::string(f.value));
  };
  inst.v = config("v");
  inst.w = config("w");

  const Field& p_field = fields["perm"];
  try {
    inst.perm = parse_permutation(p_field.value, inst.n);
  } catch (const ParseError& e) {
    std::string message = e.what();
    message = message.substr(0, message.rfind(" at column "));
    throw InputError(message, p_field.line, p_field.column + e.position() - 1);
  }
  return inst;
}

std::string format_instance(const InstanceFile& instance) {
  std::ostringstream out;
  out << "n " << instance.n << '\n'
      << "alphabet " << instance.alphabet << '\n'
      << "perm " << instance.perm.to_string() << '\n'
      << "v " << instance.v.str() << '\n'
      << "w " << instance.w.str() << '\n';
  return out.str();
}

CongruenceSystem parse_congruence_system(std::string_view text) {
  CongruenceSystem system;
  for (const Line& line : content_lines(text)) {
    std::vector<std::pair<std::size_t, std::string_view>> tokens;
    std::size_t pos = 0;
    while (pos < line.text.size()) {
      while (pos < line.text.size() && is_space(line.text[pos])) ++pos;
      const std::size_t start = pos;
      while (pos < line.text.size() && !is_space(line.text[pos])) ++pos;
      if (pos > start) tokens.emplace_back(start + 1, line.text.substr(start, pos - start));
    }
    if (tokens.size() != 3 || tokens[1].second != "mod") {
      throw InputError("expected '<residue> mod <modulus>'", line.number,
                       tokens.size() > 1 ? tokens[1].first : tokens[0].first);
    }
    BigInt residue = parse_natural(tokens[0].second, line.number, tokens[0].first, "residue");
    BigInt modulus = parse_natural(tokens[2].second, line.number, tokens[2].first, "modulus");
    if (sgn(modulus) == 0) throw InputError("modulus must be positive", line.number, tokens[2].first);
    if (residue >= modulus) {
      throw InputError("residue must be smaller than the modulus", line.number, tokens[0].first);
    }
    system.add(std::move(residue), std::move(modulus));
  }
  return system;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cycorbit
