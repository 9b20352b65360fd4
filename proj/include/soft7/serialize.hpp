#pragma once

// Text formats for points, torsion tables, reports and generator sets.
// Exact values are written as fraction strings, float values with 17
// significant digits, so every printed table parses back bit for bit.

#include <map>
#include <string>
#include <vector>

#include "soft7/lie.hpp"
#include "soft7/report.hpp"
#include "soft7/torsion.hpp"

namespace soft7 {

enum class Format { Json, Csv };

/// "json" or "csv"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& text);

Sign parse_sign(const std::string& text);          // + - plus minus
Route parse_route(const std::string& text);        // closed solve appendix
SignPair parse_sign_pair(const std::string& text); // ++ -- pp mm

/// Eight comma separated coordinates, each an integer, "p/q" or a decimal.
/// Values are held exactly; a decimal literal makes the inferred model float.
struct PointSpec {
  std::vector<Rational> coords;
  std::vector<std::string> literals;
  bool has_decimal = false;

  std::string inferred_model() const { return has_decimal ? "float" : "exact"; }

  template <Scalar T>
  Octonion<T> to_octonion() const;
};

/// Throws std::invalid_argument on malformed input and ZeroPointError when
/// every coordinate is zero.
PointSpec parse_point(const std::string& text);

/// Parses one exact ("-12/17") or float literal of the given model.
template <Scalar T>
T parse_scalar(const std::string& text);

template <>
Rational parse_scalar<Rational>(const std::string& text);

template <>
double parse_scalar<double>(const std::string& text);

std::string complex_string(const Complex<Rational>& z);
std::string complex_string(const Complex<double>& z);

template <Scalar T>
std::string torsion_json(const TorsionTable<T>& table);

template <Scalar T>
std::string torsion_csv(const TorsionTable<T>& table);

/// Inverse of torsion_json. Throws std::invalid_argument on schema errors.
template <Scalar T>
TorsionTable<T> parse_torsion_json(const std::string& text);

/// 35 values f(++/--)_ijk(phi, lambda) plus the largest defining relation residual.
template <Scalar T>
struct SoftTable {
  SignPair pair;
  Octonion<T> phi;
  Octonion<T> lambda;
  std::array<T, 35> values;
  T residual;
};

template <Scalar T>
SoftTable<T> soft_table(SignPair pair, const Octonion<T>& phi, const Octonion<T>& lambda);

template <Scalar T>
std::string soft_json(const SoftTable<T>& table);

template <Scalar T>
std::string soft_csv(const SoftTable<T>& table);

std::string report_json(const Report& report);
std::string report_csv(const Report& report);

/// A generator family ready for printing.
struct GeneratorDump {
  std::string family;
  std::string model;
  std::map<std::string, std::string> tags;
  std::size_t advertised_dimension = 0;
  std::size_t rank = 0;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> entries;  // 64 per matrix, row major
  std::vector<std::pair<std::string, bool>> flags;
};

template <Scalar T, typename E>
GeneratorDump dump_generators(const std::string& family, const GeneratorSet<T, E>& set);

std::string generators_json(const GeneratorDump& dump);
std::string generators_csv(const GeneratorDump& dump);

}  // namespace soft7
