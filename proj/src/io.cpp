#include "stripepow/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stripepow::io {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_real(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot serialize a non-finite value");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
          out += buf;
        } else {
          out.push_back(ch);
        }
    }
  }
  out.push_back('"');
  return out;
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ << ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ << '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  out_ << '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ << '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  out_ << ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separate();
  out_ << quote(k) << ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  separate();
  out_ << quote(s);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  separate();
  out_ << (b ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separate();
  out_ << format_real(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  separate();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
  separate();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::null() {
  separate();
  out_ << "null";
  return *this;
}

namespace {

template <typename Matrix, typename Cell>
void write_csv(std::ostream& out, const Matrix& m, Cell cell) {
  const std::size_t n = m.order();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (j > 1) out << ',';
      out << cell(m(i, j));
    }
    out << '\n';
  }
}

template <typename Matrix, typename Emit>
void write_json(std::ostream& out, std::int64_t m, std::string_view method, const Matrix& matrix,
                Emit emit) {
  JsonWriter w(out);
  w.begin_object();
  w.field("n", static_cast<std::uint64_t>(matrix.order()));
  w.field("m", m);
  w.field("method", method);
  w.key("matrix").begin_array();
  for (std::size_t i = 1; i <= matrix.order(); ++i) {
    w.begin_array();
    for (std::size_t j = 1; j <= matrix.order(); ++j) emit(w, matrix(i, j));
    w.end_array();
  }
  w.end_array();
  w.end_object();
  out << '\n';
}

std::vector<std::vector<std::string>> read_csv_cells(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw std::invalid_argument("CSV matrix is not square");
  return rows;
}

}  // namespace

void write_matrix_csv(std::ostream& out, const DenseIntMatrix& m) {
  write_csv(out, m, [](const BigInt& v) { return v.get_str(); });
}

void write_matrix_csv(std::ostream& out, const DenseRealMatrix& m) {
  write_csv(out, m, [](double v) { return format_real(v); });
}

void write_matrix_json(std::ostream& out, std::int64_t m, std::string_view method,
                       const DenseIntMatrix& matrix) {
  write_json(out, m, method, matrix, [](JsonWriter& w, const BigInt& v) { w.value(v.get_str()); });
}

void write_matrix_json(std::ostream& out, std::int64_t m, std::string_view method,
                       const DenseRealMatrix& matrix) {
  write_json(out, m, method, matrix, [](JsonWriter& w, double v) { w.value(v); });
}

MatrixDocument read_matrix_json(std::istream& in) {
  const nlohmann::json doc = nlohmann::json::parse(in);
  MatrixDocument out;
  out.n = doc.at("n").get<std::size_t>();
  out.m = doc.at("m").get<std::int64_t>();
  out.method = doc.at("method").get<std::string>();
  const auto& rows = doc.at("matrix");
  if (rows.size() != out.n) throw std::invalid_argument("matrix row count does not match n");
  const bool exact = out.n > 0 && rows.at(0).at(0).is_string();
  if (exact) {
    DenseIntMatrix mat(out.n);
    for (std::size_t i = 0; i < out.n; ++i) {
      if (rows[i].size() != out.n) throw std::invalid_argument("matrix row length does not match n");
      for (std::size_t j = 0; j < out.n; ++j) mat(i + 1, j + 1) = BigInt(rows[i][j].get<std::string>());
    }
    out.matrix = std::move(mat);
  } else {
    DenseRealMatrix mat(out.n);
    for (std::size_t i = 0; i < out.n; ++i) {
      if (rows[i].size() != out.n) throw std::invalid_argument("matrix row length does not match n");
      for (std::size_t j = 0; j < out.n; ++j) mat(i + 1, j + 1) = rows[i][j].get<double>();
    }
    out.matrix = std::move(mat);
  }
  return out;
}

DenseIntMatrix read_int_matrix_csv(std::istream& in) {
  const auto cells = read_csv_cells(in);
  DenseIntMatrix m(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j) m(i + 1, j + 1) = BigInt(cells[i][j]);
  return m;
}

DenseRealMatrix read_real_matrix_csv(std::istream& in) {
  const auto cells = read_csv_cells(in);
  DenseRealMatrix m(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j) m(i + 1, j + 1) = std::stod(cells[i][j]);
  return m;
}

}  // namespace stripepow::io
