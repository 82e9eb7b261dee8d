#include "config.hpp"

#include <fstream>
#include <iostream>
#include <regex>

#include <nlohmann/json.hpp>

#include "tfp/error.hpp"

namespace tfp::cli {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double real(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number()) throw InputError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::int64_t integer(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<double> real_list(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw InputError(std::string("field '") + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> matrix(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field '") + key + "' must be an array of rows");
  std::vector<std::vector<double>> out;
  for (const auto& row : v) {
    if (!row.is_array()) throw InputError(std::string("field '") + key + "' must be an array of rows");
    auto& r = out.emplace_back();
    for (const auto& e : row) {
      if (!e.is_number()) throw InputError(std::string("field '") + key + "' must hold numbers");
      r.push_back(e.get<double>());
    }
  }
  return out;
}

json load(const std::filesystem::path& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Statistic parse_statistic(const json& j) {
  std::string kind;
  int power = 0;
  if (j.is_string()) {
    kind = j.get<std::string>();
  } else if (j.is_object()) {
    kind = field(j, "kind").get<std::string>();
    if (j.contains("power")) power = static_cast<int>(integer(j, "power"));
  } else {
    throw InputError("statistic must be a string or an object");
  }
  if (kind == "average_tfb") return Statistic::average();
  if (kind == "triangle_free_indicator") return Statistic::triangle_free();
  if (kind == "scaled_tfb") {
    if (power < -1 || power > 2) throw InputError("scaled_tfb power must be -1, 0, 1 or 2");
    return Statistic::scaled(power);
  }
  throw InputError("unknown statistic '" + kind + "'");
}

Model parse_model(const json& j, const std::filesystem::path& base_dir) {
  const auto kind = field(j, "kind").get<std::string>();
  if (kind == "errg") {
    const auto n = integer(j, "n");
    if (j.contains("lambda") == j.contains("p")) throw InputError("errg model needs exactly one of 'lambda' and 'p'");
    return ErrgModel{j.contains("lambda") ? ErrgParams::from_lambda(n, real(j, "lambda")) : ErrgParams::from_p(n, real(j, "p"))};
  }
  if (kind == "cm") {
    if (j.contains("degrees")) {
      std::vector<std::int64_t> d;
      for (const auto& e : field(j, "degrees")) {
        if (!e.is_number_integer()) throw InputError("degrees must be integers");
        d.push_back(e.get<std::int64_t>());
      }
      return CmModel{DegreeSequence(std::move(d))};
    }
    if (j.contains("distribution")) {
      return CmModel{DegreeSequence::from_named(field(j, "distribution").get<std::string>(), integer(j, "n"))};
    }
    if (j.contains("degree_file")) {
      std::filesystem::path p = field(j, "degree_file").get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      return CmModel{DegreeSequence::read(p)};
    }
    throw InputError("cm model needs 'degrees', 'distribution' or 'degree_file'");
  }
  if (kind == "graphon") {
    const auto n = integer(j, "n");
    if (n < 1) throw InputError("graphon model needs n >= 1");
    return GraphonModel{n, parse_graphon(field(j, "graphon"))};
  }
  throw InputError("unknown model kind '" + kind + "'");
}

}  // namespace

Graphon parse_graphon(const json& j) {
  try {
    const auto kind = field(j, "kind").get<std::string>();
    Graphon g;
    if (kind == "constant") {
      g = ConstantGraphon{real(j, "p")};
    } else if (kind == "two_block") {
      g = TwoBlockGraphon{real(j, "alpha"), real(j, "beta"), real(j, "gamma"), real(j, "p")};
    } else if (kind == "rank1") {
      g = j.contains("polynomial") ? RankOneGraphon::polynomial(real_list(j, "polynomial"))
                                   : RankOneGraphon::step(real_list(j, "profile"));
    } else if (kind == "block") {
      g = BlockGraphon{real_list(j, "sizes"), matrix(j, "matrix")};
    } else if (kind == "grid") {
      g = GridGraphon{matrix(j, "matrix")};
    } else {
      throw InputError("unknown graphon kind '" + kind + "'");
    }
    validate(g);
    return g;
  } catch (const json::exception& e) {
    throw InputError(std::string("graphon description: ") + e.what());
  }
}

Graphon read_graphon(const std::filesystem::path& path) { return parse_graphon(load(path)); }

ExperimentConfig parse_experiment(const json& j, const std::filesystem::path& base_dir) {
  try {
    ExperimentConfig c;
    c.model = parse_model(field(j, "model"), base_dir);
    c.statistic = j.contains("statistic") ? parse_statistic(j.at("statistic")) : Statistic::average();
    c.trials = j.contains("trials") ? integer(j, "trials") : 1000;
    if (j.contains("master_seed")) {
      const auto& s = j.at("master_seed");
      if (s.is_string()) {
        c.master_seed = std::stoull(s.get<std::string>(), nullptr, 0);
      } else if (s.is_number_unsigned() || s.is_number_integer()) {
        c.master_seed = s.get<std::uint64_t>();
      } else {
        throw InputError("master_seed must be an integer");
      }
    }
    if (j.contains("workers")) {
      const auto& w = j.at("workers");
      if (w.is_string() && w.get<std::string>() == "auto") {
        c.workers = 0;
      } else if (w.is_number_integer() && w.get<int>() >= 0) {
        c.workers = w.get<int>();
      } else {
        throw InputError("workers must be a non-negative integer or \"auto\"");
      }
    }
    if (c.trials < 2) throw InputError("trials must be at least 2");
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("experiment config: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("master_seed is not an integer");
  } catch (const std::out_of_range&) {
    throw InputError("master_seed does not fit in 64 bits");
  }
}

ExperimentConfig read_experiment(const std::filesystem::path& path) {
  return parse_experiment(load(path), path == "-" ? std::filesystem::path{} : path.parent_path());
}

Rational parse_exact_number(std::string_view text) {
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  const std::string s(text);
  if (s.find('/') != std::string::npos) return Rational::parse(s);
  std::smatch m;
  if (!std::regex_match(s, m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw InputError("bad number '" + s + "'");
  }
  const std::string digits = m[2].str() + m[3].str();
  std::int64_t exponent = m[4].matched ? std::stoll(m[4].str()) : 0;
  exponent -= static_cast<std::int64_t>(m[3].length());
  if (std::llabs(exponent) > 4000) throw InputError("exponent out of range in '" + s + "'");
  Rational value = Rational::parse(digits.empty() ? "0" : digits);
  const Rational ten(10);
  for (std::int64_t e = 0; e < std::llabs(exponent); ++e) value = exponent > 0 ? value * ten : value / ten;
  return m[1].str() == "-" ? -value : value;
}

}  // namespace tfp::cli
