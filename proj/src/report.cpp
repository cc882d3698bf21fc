#include "hilbert/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace hilbert::report {

Row& Row::set(std::string key, Value v) {
  for (auto& [k, existing] : fields_) {
    if (k == key) {
      existing = std::move(v);
      return *this;
    }
  }
  fields_.emplace_back(std::move(key), std::move(v));
  return *this;
}

const Value* Row::find(const std::string& key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return &v;
  return nullptr;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> columns(const std::vector<Row>& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.fields())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::string json_value(const Value& v) {
  struct Visitor {
    std::string operator()(Null) const { return "null"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return json_number(d); }
    std::string operator()(const std::string& s) const { return json_string(s); }
    std::string operator()(const std::vector<double>& xs) const {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + json_number(xs[i]);
      return out + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

std::string csv_cell(const Value& v) {
  struct Visitor {
    std::string operator()(Null) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return std::isfinite(d) ? format_double(d) : ""; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
      return out + "\"";
    }
    std::string operator()(const std::vector<double>& xs) const {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ";" : "") + (std::isfinite(xs[i]) ? format_double(xs[i]) : std::string());
      return out;
    }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

void write_json(std::ostream& os, const std::vector<Row>& rows) {
  const auto cols = columns(rows);
  os << "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << "  {";
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Value* v = rows[r].find(cols[c]);
      os << (c ? ", " : "") << json_string(cols[c]) << ": " << (v ? json_value(*v) : "null");
    }
    os << "}" << (r + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "]\n";
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  const auto cols = columns(rows);
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Value* v = row.find(cols[c]);
      os << (c ? "," : "") << (v ? csv_cell(*v) : "");
    }
    os << "\n";
  }
}

void write(std::ostream& os, const std::vector<Row>& rows, Format f) {
  if (f == Format::json)
    write_json(os, rows);
  else
    write_csv(os, rows);
}

}  // namespace hilbert::report
