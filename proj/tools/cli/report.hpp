#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "altdes/bi_poly.hpp"
#include "altdes/int_poly.hpp"

namespace altdes::cli {

enum class Status { Pass, Fail, Finding };

std::string_view status_name(Status s);
Status parse_status(std::string_view s);

using Value = std::variant<IntPoly, BiPolyTQ, Integer>;

struct Result {
  std::string name;
  Status status = Status::Pass;
  std::optional<std::string> witness;
  std::optional<Value> value;
  /// Variable names for printing a polynomial value: "t", "q", "x" or a
  /// pair such as "t,q" / "s,t" for bivariate values.
  std::string vars;

  friend bool operator==(const Result&, const Result&) = default;
};

struct Report {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Result> results;
  std::int64_t elapsed_ms = 0;

  bool all_pass() const;

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { Text, Json, Csv };

using Json = nlohmann::ordered_json;

Json to_json(const Report& r);
Report report_from_json(const Json& j);

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

std::string value_to_string(const Value& v, const std::string& vars);

/// Text mode prints only the value when the report holds a single valued
/// result; otherwise one line per result.
std::string render(const Report& r, Format f);

}  // namespace altdes::cli
