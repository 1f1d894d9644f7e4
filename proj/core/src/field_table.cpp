#include "permpoly/field_table.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

#include "permpoly/errors.hpp"

namespace permpoly {

FieldTable FieldTable::parse(std::istream& in) {
  static const std::regex line_re(R"(^\s*m\s*=\s*(\d+)\s+poly\s*=\s*0[xX]([0-9a-fA-F]+)\s*$)");
  FieldTable table;
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch match;
    if (!std::regex_match(line, match, line_re)) {
      throw ParseError("field table line " + std::to_string(lineno) + ": expected 'm=<int> poly=0x<hex>'");
    }
    const unsigned long m = std::stoul(match[1].str());
    const unsigned long long poly = std::stoull(match[2].str(), nullptr, 16);
    if (m < 1 || m > BinaryField::kMaxDegree || poly > 0xffffffffull) {
      throw UnsupportedDegree("field table line " + std::to_string(lineno) + ": degree out of range");
    }
    table.set(static_cast<unsigned>(m), static_cast<std::uint32_t>(poly));
  }
  return table;
}

FieldTable FieldTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open field table '" + path.string() + "'");
  return parse(in);
}

FieldTable FieldTable::from_environment() {
  const char* path = std::getenv(kFieldTableEnv);
  if (path == nullptr || *path == '\0') return {};
  return load(path);
}

void FieldTable::set(unsigned m, std::uint32_t reduction) {
  // Validates degree and irreducibility.
  (void)BinaryField(m, reduction);
  entries_[m] = reduction;
}

std::optional<std::uint32_t> FieldTable::lookup(unsigned m) const {
  if (auto it = entries_.find(m); it != entries_.end()) return it->second;
  return std::nullopt;
}

BinaryField FieldTable::make_field(unsigned m) const { return permpoly::make_field(m, lookup(m)); }

}  // namespace permpoly
