#pragma once

// JSON and CSV serialization. Output is deterministic: fixed key order and
// reals printed with 17 significant digits. Exact integers are written as
// decimal strings in JSON so arbitrary precision survives a round trip.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stripepow/stripe.hpp"

namespace stripepow::io {

enum class Format { json, csv };

Format parse_format(std::string_view name);
std::string format_real(double v);
std::string quote(std::string_view s);

/// Minimal streaming JSON emitter; keys appear in the order they are written.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(bool b);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& null();

  template <typename T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

 private:
  void separate();
  std::ostream& out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

void write_matrix_csv(std::ostream& out, const DenseIntMatrix& m);
void write_matrix_csv(std::ostream& out, const DenseRealMatrix& m);

/// {"n":int,"m":int,"method":str,"matrix":[[...]]}
void write_matrix_json(std::ostream& out, std::int64_t m, std::string_view method,
                       const DenseIntMatrix& matrix);
void write_matrix_json(std::ostream& out, std::int64_t m, std::string_view method,
                       const DenseRealMatrix& matrix);

struct MatrixDocument {
  std::size_t n = 0;
  std::int64_t m = 0;
  std::string method;
  std::variant<DenseIntMatrix, DenseRealMatrix> matrix;
};

/// String entries read as exact integers, numeric entries as reals.
MatrixDocument read_matrix_json(std::istream& in);
DenseIntMatrix read_int_matrix_csv(std::istream& in);
DenseRealMatrix read_real_matrix_csv(std::istream& in);

}  // namespace stripepow::io
