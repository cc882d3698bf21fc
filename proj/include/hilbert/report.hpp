#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hilbert::report {

struct Null {};

using Value = std::variant<Null, bool, std::int64_t, double, std::string, std::vector<double>>;

// One report row: ordered key/value pairs.
class Row {
 public:
  Row& set(std::string key, Value v);
  Row& set(std::string key, int v) { return set(std::move(key), Value(std::int64_t{v})); }
  Row& set(std::string key, std::size_t v) { return set(std::move(key), Value(static_cast<std::int64_t>(v))); }
  Row& set(std::string key, const char* v) { return set(std::move(key), Value(std::string(v))); }
  Row& set(std::string key, double v) { return set(std::move(key), Value(v)); }
  Row& set(std::string key, bool v) { return set(std::move(key), Value(v)); }
  Row& set(std::string key, std::string v) { return set(std::move(key), Value(std::move(v))); }
  Row& set(std::string key, std::vector<double> v) { return set(std::move(key), Value(std::move(v))); }
  Row& set_null(std::string key) { return set(std::move(key), Value(Null{})); }

  const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }
  const Value* find(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

enum class Format { json, csv };

// Floats use 17 significant digits ("%.17g"); non-finite values are written
// as null (JSON) or an empty cell (CSV). Columns are the union of row keys in
// first-appearance order; missing keys are null / empty. UTF-8, LF endings.
void write_json(std::ostream& os, const std::vector<Row>& rows);
void write_csv(std::ostream& os, const std::vector<Row>& rows);
void write(std::ostream& os, const std::vector<Row>& rows, Format f);

std::string format_double(double v);

}  // namespace hilbert::report
