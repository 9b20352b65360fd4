#include "soft7/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace soft7 {

using ojson = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad_literal(const std::string& s) {
  throw std::invalid_argument("malformed number '" + s + "'");
}

Rational pow10(long n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n));
  return Rational(p);
}

// Integer, p/q or decimal (with optional exponent), converted exactly.
Rational exact_literal(const std::string& raw, bool* decimal) {
  const std::string s = trim(raw);
  if (decimal) *decimal = false;
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  const std::string body = s.substr(pos);
  Rational value;

  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(raw);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    value = Rational(mpz_class(num, 10), d);
    value.canonicalize();
  } else if (all_digits(body)) {
    value = Rational(mpz_class(body, 10));
  } else {
    std::string mant = body;
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string::npos) {
      mant = body.substr(0, e);
      std::string ex = body.substr(e + 1);
      bool neg_exp = false;
      if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
        neg_exp = ex[0] == '-';
        ex = ex.substr(1);
      }
      if (!all_digits(ex) || ex.size() > 4) bad_literal(raw);
      exponent = std::stol(ex) * (neg_exp ? -1 : 1);
    }
    const auto dot = mant.find('.');
    std::string whole = mant, frac;
    if (dot != std::string::npos) {
      whole = mant.substr(0, dot);
      frac = mant.substr(dot + 1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      bad_literal(raw);
    value = Rational(mpz_class(whole + frac + (whole.empty() && frac.empty() ? "0" : ""), 10));
    exponent -= static_cast<long>(frac.size());
    if (exponent >= 0)
      value *= pow10(exponent);
    else
      value /= pow10(-exponent);
    value.canonicalize();
    if (decimal) *decimal = true;
  }
  return negative ? Rational(-value) : value;
}

template <Scalar T>
ojson point_json(const Octonion<T>& p) {
  ojson a = ojson::array();
  for (int m = 0; m < 8; ++m) a.push_back(to_string(p[m]));
  return a;
}

template <Scalar T>
ojson entries_json(const std::array<T, 35>& values) {
  ojson a = ojson::array();
  const auto& triples = canonical_triples();
  for (std::size_t n = 0; n < 35; ++n)
    a.push_back({{"i", triples[n].i}, {"j", triples[n].j}, {"k", triples[n].k}, {"value", to_string(values[n])}});
  return a;
}

template <Scalar T>
std::string entries_csv(const std::array<T, 35>& values) {
  std::ostringstream out;
  out << "i,j,k,value\n";
  const auto& triples = canonical_triples();
  for (std::size_t n = 0; n < 35; ++n)
    out << triples[n].i << ',' << triples[n].j << ',' << triples[n].k << ',' << to_string(values[n]) << '\n';
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string model_of(bool exact) { return exact ? "exact" : "float"; }

template <Scalar T>
T abs_value(const T& x) {
  if constexpr (is_exact_v<T>) {
    return T(abs(x));
  } else {
    return std::abs(x);
  }
}

template <Scalar T>
std::string entry_string(const T& x) {
  return to_string(x);
}

template <Scalar T>
std::string entry_string(const Complex<T>& z) {
  return complex_string(z);
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("format must be json or csv, got '" + text + "'");
}

Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "plus") return Sign::Plus;
  if (text == "-" || text == "minus") return Sign::Minus;
  throw std::invalid_argument("sign must be + or -, got '" + text + "'");
}

Route parse_route(const std::string& text) {
  if (text == "closed") return Route::ClosedForm;
  if (text == "solve") return Route::Solve;
  if (text == "appendix") return Route::Appendix;
  throw std::invalid_argument("route must be closed, solve or appendix, got '" + text + "'");
}

SignPair parse_sign_pair(const std::string& text) {
  if (text == "++" || text == "pp") return SignPair::PlusPlus;
  if (text == "--" || text == "mm") return SignPair::MinusMinus;
  throw std::invalid_argument("sign pair must be ++ or --, got '" + text + "'");
}

PointSpec parse_point(const std::string& text) {
  PointSpec spec;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    bool decimal = false;
    spec.coords.push_back(exact_literal(item, &decimal));
    spec.literals.push_back(trim(item));
    spec.has_decimal = spec.has_decimal || decimal;
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in point");
  if (spec.coords.size() != 8)
    throw std::invalid_argument("a point needs 8 coordinates, got " + std::to_string(spec.coords.size()));
  if (std::all_of(spec.coords.begin(), spec.coords.end(), [](const Rational& x) { return sgn(x) == 0; }))
    throw ZeroPointError();
  return spec;
}

template <Scalar T>
Octonion<T> PointSpec::to_octonion() const {
  std::array<T, 8> c{};
  for (std::size_t m = 0; m < 8; ++m) {
    if constexpr (is_exact_v<T>) {
      c[m] = coords[m];
    } else {
      // the literal itself when it is a plain decimal, so no double rounding
      double v = 0;
      const auto& lit = literals[m];
      const auto res = std::from_chars(lit.data(), lit.data() + lit.size(), v);
      const bool plain = lit.find('/') == std::string::npos && lit.find('+') == std::string::npos &&
                         res.ec == std::errc() && res.ptr == lit.data() + lit.size();
      c[m] = plain ? v : coords[m].get_d();
    }
  }
  return Octonion<T>(c);
}

template Octonion<Rational> PointSpec::to_octonion<Rational>() const;
template Octonion<double> PointSpec::to_octonion<double>() const;

template <>
Rational parse_scalar<Rational>(const std::string& text) {
  return exact_literal(text, nullptr);
}

template <>
double parse_scalar<double>(const std::string& text) {
  const std::string s = trim(text);
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec == std::errc() && res.ptr == s.data() + s.size()) return v;
  return exact_literal(s, nullptr).get_d();
}

std::string complex_string(const Complex<Rational>& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  const std::string im = (z.im == 1) ? "i" : (z.im == -1) ? "-i" : to_string(z.im) + "i";
  if (sgn(z.re) == 0) return im;
  return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im;
}

std::string complex_string(const Complex<double>& z) {
  if (z.im == 0.0) return to_string(z.re);
  const std::string im = to_string(z.im) + "i";
  if (z.re == 0.0) return im;
  return to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

template <Scalar T>
std::string torsion_json(const TorsionTable<T>& table) {
  ojson j;
  j["point"] = point_json(table.point());
  j["r2"] = to_string(table.r2());
  j["sign"] = to_string(table.sign());
  j["route"] = to_string(table.route());
  j["model"] = model_of(is_exact_v<T>);
  j["entries"] = entries_json(table.values());
  return j.dump(2) + "\n";
}

template <Scalar T>
std::string torsion_csv(const TorsionTable<T>& table) {
  return entries_csv(table.values());
}

template <Scalar T>
TorsionTable<T> parse_torsion_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto& pt = j.at("point");
    if (!pt.is_array() || pt.size() != 8) throw std::invalid_argument("point must hold 8 coordinates");
    std::array<T, 8> c{};
    for (std::size_t m = 0; m < 8; ++m) c[m] = parse_scalar<T>(pt[m].get<std::string>());
    const Octonion<T> point(c);

    const Sign sign = parse_sign(j.at("sign").get<std::string>());
    const Route route = parse_route(j.at("route").get<std::string>());
    if (j.contains("model") && j["model"].get<std::string>() != model_of(is_exact_v<T>))
      throw std::invalid_argument("table was written by the " + j["model"].get<std::string>() + " model");

    std::array<T, 35> values{};
    std::array<bool, 35> seen{};
    for (const auto& e : j.at("entries")) {
      const auto ct = canonicalize(e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>());
      if (!ct) throw std::invalid_argument("degenerate entry index");
      const auto n = static_cast<std::size_t>(ct->index);
      if (seen[n]) throw std::invalid_argument("duplicate entry");
      seen[n] = true;
      const T v = parse_scalar<T>(e.at("value").get<std::string>());
      values[n] = ct->sign > 0 ? v : T(-v);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw std::invalid_argument("table must list all 35 triples");

    TorsionTable<T> table(sign, point, route, values);
    if (j.contains("r2") && !(parse_scalar<T>(j["r2"].get<std::string>()) == table.r2()))
      throw std::invalid_argument("r2 does not match the point");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("torsion json: ") + e.what());
  }
}

template <Scalar T>
SoftTable<T> soft_table(SignPair pair, const Octonion<T>& phi, const Octonion<T>& lambda) {
  SoftTable<T> t{pair, phi, lambda, generalized_table(pair, phi, lambda), T(0)};
  const auto ops = soft_ops(side_of(sign_of(pair)), phi);
  std::array<Octonion<T>, 7> al;
  for (std::size_t n = 0; n < 7; ++n) al[n] = apply(ops[n], lambda);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      Octonion<T> d = apply(mat_commutator(ops[static_cast<std::size_t>(i - 1)], ops[static_cast<std::size_t>(j - 1)]), lambda);
      for (int k = 1; k <= 7; ++k) {
        const auto ct = canonicalize(i, j, k);
        if (!ct) continue;
        const T& v = t.values[static_cast<std::size_t>(ct->index)];
        d -= T(2 * (ct->sign > 0 ? v : T(-v))) * al[static_cast<std::size_t>(k - 1)];
      }
      for (int m = 0; m < 8; ++m) {
        const T a = abs_value(d[m]);
        if (a > t.residual) t.residual = a;
      }
    }
  return t;
}

template <Scalar T>
std::string soft_json(const SoftTable<T>& t) {
  ojson j;
  j["phi"] = point_json(t.phi);
  j["lambda"] = point_json(t.lambda);
  j["sign_pair"] = to_string(t.pair);
  j["model"] = model_of(is_exact_v<T>);
  j["residual"] = to_string(t.residual);
  j["entries"] = entries_json(t.values);
  return j.dump(2) + "\n";
}

template <Scalar T>
std::string soft_csv(const SoftTable<T>& t) {
  return entries_csv(t.values);
}

std::string report_json(const Report& report) {
  ojson j;
  j["seed"] = report.config.seed;
  j["model"] = report.config.model;
  j["points"] = report.config.points;
  j["status"] = report.passed() ? "pass" : "fail";
  ojson checks = ojson::array();
  for (const auto& c : report.checks) {
    ojson cj;
    cj["name"] = c.name;
    cj["status"] = c.passed() ? "pass" : "fail";
    cj["advisory"] = c.advisory;
    cj["points_tested"] = c.points_tested;
    cj["max_deviation"] = c.max_deviation;
    cj["anchor"] = c.anchor;
    if (c.witness) {
      cj["witness"] = {{"point", c.witness->point},
                       {"indices", c.witness->indices},
                       {"value", c.witness->value},
                       {"note", c.witness->note}};
    } else {
      cj["witness"] = nullptr;
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string report_csv(const Report& report) {
  std::ostringstream out;
  out << "name,status,advisory,points_tested,max_deviation,witness,anchor\n";
  for (const auto& c : report.checks) {
    std::string w;
    if (c.witness) {
      for (std::size_t n = 0; n < c.witness->indices.size(); ++n)
        w += (n ? " " : "") + std::to_string(c.witness->indices[n]);
      w += (w.empty() ? "" : ": ") + c.witness->value;
      if (!c.witness->note.empty()) w += " (" + c.witness->note + ")";
    }
    out << csv_field(c.name) << ',' << (c.passed() ? "pass" : "fail") << ',' << (c.advisory ? "true" : "false")
        << ',' << c.points_tested << ',' << to_string(c.max_deviation) << ',' << csv_field(w) << ','
        << csv_field(c.anchor) << '\n';
  }
  return out.str();
}

template <Scalar T, typename E>
GeneratorDump dump_generators(const std::string& family, const GeneratorSet<T, E>& set) {
  GeneratorDump d;
  d.family = family;
  d.model = model_of(is_exact_v<T>);
  d.tags = set.tags;
  d.advertised_dimension = set.advertised_dimension;
  d.rank = mat_rank(set.matrices);
  d.names = set.names;
  for (const auto& m : set.matrices) {
    std::vector<std::string> e;
    e.reserve(64);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) e.push_back(entry_string(m(r, c)));
    d.entries.push_back(std::move(e));
  }
  return d;
}

std::string generators_json(const GeneratorDump& d) {
  ojson j;
  j["family"] = d.family;
  j["model"] = d.model;
  j["tags"] = d.tags;
  j["count"] = d.names.size();
  j["advertised_dimension"] = d.advertised_dimension;
  j["rank"] = d.rank;
  for (const auto& [k, v] : d.flags) j[k] = v;
  ojson mats = ojson::array();
  for (std::size_t n = 0; n < d.names.size(); ++n) {
    ojson rows = ojson::array();
    for (int r = 0; r < 8; ++r) {
      ojson row = ojson::array();
      for (int c = 0; c < 8; ++c) row.push_back(d.entries[n][static_cast<std::size_t>(8 * r + c)]);
      rows.push_back(std::move(row));
    }
    mats.push_back({{"name", d.names[n]}, {"rows", std::move(rows)}});
  }
  j["matrices"] = std::move(mats);
  return j.dump(2) + "\n";
}

std::string generators_csv(const GeneratorDump& d) {
  std::ostringstream out;
  out << "name,row,col,value\n";
  for (std::size_t n = 0; n < d.names.size(); ++n)
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        out << csv_field(d.names[n]) << ',' << r << ',' << c << ',' << d.entries[n][static_cast<std::size_t>(8 * r + c)]
            << '\n';
  return out.str();
}

#define SOFT7_INSTANTIATE(T)                                                              \
  template std::string torsion_json<T>(const TorsionTable<T>&);                           \
  template std::string torsion_csv<T>(const TorsionTable<T>&);                            \
  template TorsionTable<T> parse_torsion_json<T>(const std::string&);                     \
  template SoftTable<T> soft_table<T>(SignPair, const Octonion<T>&, const Octonion<T>&);  \
  template std::string soft_json<T>(const SoftTable<T>&);                                 \
  template std::string soft_csv<T>(const SoftTable<T>&);                                  \
  template GeneratorDump dump_generators<T, T>(const std::string&, const GeneratorSet<T, T>&); \
  template GeneratorDump dump_generators<T, Complex<T>>(const std::string&, const GeneratorSet<T, Complex<T>>&);

SOFT7_INSTANTIATE(Rational)
SOFT7_INSTANTIATE(double)

#undef SOFT7_INSTANTIATE

}  // namespace soft7
