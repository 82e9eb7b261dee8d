#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tfp/rational.hpp"

namespace tfp::cli {

using Value = std::variant<std::monostate, std::string, std::int64_t, std::uint64_t, double, bool, Rational>;

/// One flat output row; column order is the insertion order.
class Record {
 public:
  Record& add(std::string key, Value value);
  Record& add_optional(std::string key, const std::optional<double>& value);
  [[nodiscard]] const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

enum class Format { csv, json };

/// Streams records as CSV (a header whenever the column set changes) or as
/// JSON lines. Rationals print as "num/den", reals with 17 significant digits.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}
  void write(const Record& record);

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> header_;
};

std::string format_real(double v);

}  // namespace tfp::cli
