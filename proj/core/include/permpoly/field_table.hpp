#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>

#include "permpoly/field.hpp"

namespace permpoly {

/// Reduction polynomial overrides keyed by degree.
///
/// Text format, one entry per line: `m=<int> poly=0x<hex>` where the mask
/// includes the leading X^m bit. Blank lines and lines starting with '#' are
/// ignored. Every entry is validated for degree and irreducibility on load.
class FieldTable {
 public:
  FieldTable() = default;

  static FieldTable parse(std::istream& in);
  static FieldTable load(const std::filesystem::path& path);
  /// Reads PERMPOLY_FIELD_TABLE; an unset or empty variable yields an empty table.
  static FieldTable from_environment();

  void set(unsigned m, std::uint32_t reduction);
  std::optional<std::uint32_t> lookup(unsigned m) const;
  bool empty() const { return entries_.empty(); }

  /// Override when present, built-in table otherwise.
  BinaryField make_field(unsigned m) const;

 private:
  std::map<unsigned, std::uint32_t> entries_;
};

inline constexpr const char* kFieldTableEnv = "PERMPOLY_FIELD_TABLE";

}  // namespace permpoly
