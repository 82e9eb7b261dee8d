#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

namespace tfp::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

std::string text(const Value& v) {
  return std::visit(overloaded{[](std::monostate) { return std::string(); },
                               [](const std::string& s) { return s; },
                               [](std::int64_t i) { return std::to_string(i); },
                               [](std::uint64_t u) { return std::to_string(u); },
                               [](double d) { return format_real(d); },
                               [](bool b) { return std::string(b ? "true" : "false"); },
                               [](const Rational& r) { return r.str(); }},
                    v);
}

std::string json_value(const Value& v) {
  return std::visit(overloaded{[](std::monostate) { return std::string("null"); },
                               [](const std::string& s) { return nlohmann::json(s).dump(); },
                               [](std::int64_t i) { return std::to_string(i); },
                               [](std::uint64_t u) { return std::to_string(u); },
                               [](double d) { return std::isfinite(d) ? format_real(d) : std::string("null"); },
                               [](bool b) { return std::string(b ? "true" : "false"); },
                               [](const Rational& r) { return nlohmann::json(r.str()).dump(); }},
                    v);
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Record& Record::add(std::string key, Value value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Record& Record::add_optional(std::string key, const std::optional<double>& value) {
  return value ? add(std::move(key), *value) : add(std::move(key), std::monostate{});
}

void RecordWriter::write(const Record& record) {
  if (format_ == Format::json) {
    out_ << '{';
    bool first = true;
    for (const auto& [k, v] : record.fields()) {
      if (!first) out_ << ',';
      first = false;
      out_ << nlohmann::json(k).dump() << ':' << json_value(v);
    }
    out_ << "}\n";
    return;
  }
  std::vector<std::string> keys;
  for (const auto& f : record.fields()) keys.push_back(f.first);
  if (keys != header_) {
    header_ = keys;
    for (std::size_t i = 0; i < keys.size(); ++i) out_ << (i ? "," : "") << csv_escape(keys[i]);
    out_ << '\n';
  }
  std::size_t i = 0;
  for (const auto& f : record.fields()) out_ << (i++ ? "," : "") << csv_escape(text(f.second));
  out_ << '\n';
}

}  // namespace tfp::cli
