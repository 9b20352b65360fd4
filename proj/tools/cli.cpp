#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "soft7/serialize.hpp"
#include "soft7/verify.hpp"

namespace soft7::cli {

namespace {

Outcome usage(const std::string& message) { return {kUsageError, "", "error: " + message + "\n"}; }

// Usage problems surface as exceptions from the parsers; map them to exit 2.
Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const ZeroPointError& e) {
    return usage(e.what());
  } catch (const IndexError& e) {
    return usage(e.what());
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  } catch (const std::exception& e) {
    return {kVerificationFailed, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

std::string resolve_model(const std::string& requested, const std::string& inferred) {
  if (requested.empty()) return inferred;
  if (requested != "exact" && requested != "float")
    throw std::invalid_argument("model must be exact or float, got '" + requested + "'");
  return requested;
}

template <Scalar T>
Outcome torsion_as(const PointSpec& spec, Sign sign, Route route, Format format) {
  const auto table = torsion_table(sign, spec.to_octonion<T>(), route);
  return {kOk, format == Format::Json ? torsion_json(table) : torsion_csv(table), ""};
}

template <Scalar T>
Outcome soft_as(const PointSpec& phi, const PointSpec& lambda, SignPair pair, Format format) {
  const auto t = soft_table(pair, phi.to_octonion<T>(), lambda.to_octonion<T>());
  return {kOk, format == Format::Json ? soft_json(t) : soft_csv(t), ""};
}

template <Scalar T>
GeneratorDump gamma_dump(const std::string& family, Chirality c) {
  GeneratorSet<T, Complex<T>> set;
  set.label = "gamma";
  set.advertised_dimension = 7;
  set.tags["chirality"] = to_string(c);
  bool hermitian = true, imaginary = true;
  for (int i = 1; i <= 7; ++i) {
    const auto g = gamma<T>(i, c);
    for (int r = 0; r < 8; ++r)
      for (int q = 0; q < 8; ++q) {
        hermitian = hermitian && g(r, q) == g(q, r).conj();
        imaginary = imaginary && is_zero(g(r, q).re);
      }
    set.names.push_back("gamma^" + std::to_string(i));
    set.matrices.push_back(g);
  }
  auto dump = dump_generators(family, set);
  dump.flags = {{"hermitian", hermitian}, {"purely_imaginary", imaginary}};
  return dump;
}

template <Scalar T>
GeneratorDump family_dump(const std::string& family, Sign sign) {
  if (family == "so8") {
    auto dump = dump_generators(family, so8_generators<T>(Chirality::Left, sign));
    dump.flags = {{"relations_hold", true}};
    return dump;
  }
  if (family == "g2") return dump_generators(family, g2_generators<T>());
  if (family == "coset-v") return dump_generators(family, coset_generators<T>(CosetKind::Vector, sign));
  if (family == "coset-s") return dump_generators(family, coset_generators<T>(CosetKind::Spinor, sign));
  if (family == "coset-s-bar") return dump_generators(family, coset_generators<T>(CosetKind::SpinorBar, sign));
  if (family == "gamma-left") return gamma_dump<T>(family, Chirality::Left);
  if (family == "gamma-right") return gamma_dump<T>(family, Chirality::Right);
  throw std::invalid_argument("unknown family '" + family +
                              "' (so8, g2, coset-v, coset-s, coset-s-bar, gamma-left, gamma-right)");
}

}  // namespace

Outcome cmd_torsion(const std::string& point, const std::string& sign, const std::string& route,
                    const std::string& model, const std::string& format) {
  return guarded([&] {
    const Format fmt = parse_format(format);
    const Sign sg = parse_sign(sign);
    const Route rt = parse_route(route);
    const PointSpec spec = parse_point(point);
    return resolve_model(model, spec.inferred_model()) == "exact" ? torsion_as<Rational>(spec, sg, rt, fmt)
                                                                 : torsion_as<double>(spec, sg, rt, fmt);
  });
}

Outcome cmd_verify(std::uint64_t seed, const std::string& model, long long points, const std::string& format) {
  return guarded([&] {
    const Format fmt = parse_format(format);
    if (points < 1) throw std::invalid_argument("--points must be at least 1");
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.model = resolve_model(model, "exact");
    cfg.points = static_cast<std::size_t>(points);
    const Report report = run_suite(cfg);
    Outcome o{report.passed() ? kOk : kVerificationFailed,
              fmt == Format::Json ? report_json(report) : report_csv(report), ""};
    for (const auto& c : report.checks)
      if (!c.passed()) o.err += std::string(c.advisory ? "advisory check failed: " : "check failed: ") + c.name + "\n";
    return o;
  });
}

Outcome cmd_generators(const std::string& family, const std::string& model, const std::string& sign,
                       const std::string& format) {
  return guarded([&] {
    const Format fmt = parse_format(format);
    const Sign sg = parse_sign(sign);
    const auto dump = resolve_model(model, "exact") == "exact" ? family_dump<Rational>(family, sg)
                                                               : family_dump<double>(family, sg);
    return Outcome{kOk, fmt == Format::Json ? generators_json(dump) : generators_csv(dump), ""};
  });
}

Outcome cmd_soft(const std::string& point, const std::string& lambda, const std::string& sign_pair,
                 const std::string& model, const std::string& format) {
  return guarded([&] {
    const Format fmt = parse_format(format);
    const SignPair pair = parse_sign_pair(sign_pair);
    const PointSpec phi = parse_point(point);
    const PointSpec lam = lambda.empty() ? phi : parse_point(lambda);
    const std::string inferred = phi.has_decimal || lam.has_decimal ? "float" : "exact";
    return resolve_model(model, inferred) == "exact" ? soft_as<Rational>(phi, lam, pair, fmt)
                                                     : soft_as<double>(phi, lam, pair, fmt);
  });
}

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Soft seven sphere structure functions and octonionic Lie algebra checks"};
  app.name("soft7");
  app.require_subcommand(1);

  std::string point, lambda, sign = "+", sign_pair = "++", route = "closed", model, format = "json", family;
  std::uint64_t seed = 1;
  long long points = 50;

  auto* torsion = app.add_subcommand("torsion", "Print the 35 structure functions at a point");
  torsion->add_option("--point", point, "Eight coordinates: integers, p/q or decimals")->required();
  torsion->add_option("--sign", sign, "+ (left) or - (right)");
  torsion->add_option("--route", route, "closed, solve or appendix");
  torsion->add_option("--model", model, "exact or float (default: inferred from the point)");
  torsion->add_option("--format", format, "json or csv");

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--seed", seed, "Random stream seed");
  verify->add_option("--model", model, "exact (default) or float");
  verify->add_option("--points", points, "Random points per check");
  verify->add_option("--format", format, "json or csv");

  auto* generators = app.add_subcommand("generators", "Print a generator family");
  generators->add_option("--family", family, "so8, g2, coset-v, coset-s, coset-s-bar, gamma-left, gamma-right")
      ->required();
  generators->add_option("--sign", sign, "sign choice for so8 and the coset families");
  generators->add_option("--model", model, "exact (default) or float");
  generators->add_option("--format", format, "json or csv");

  auto* soft = app.add_subcommand("soft", "Print f(++) or f(--) for operators at phi acting on lambda");
  soft->add_option("--point", point, "phi")->required();
  soft->add_option("--lambda", lambda, "lambda (default: phi)");
  soft->add_option("--sign-pair", sign_pair, "++ or -- (write --sign-pair=--)");
  soft->add_option("--model", model, "exact or float (default: inferred from the points)");
  soft->add_option("--format", format, "json or csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kUsageError, out.str(), err.str()};
  }

  if (torsion->parsed()) return cmd_torsion(point, sign, route, model, format);
  if (verify->parsed()) return cmd_verify(seed, model, points, format);
  if (generators->parsed()) return cmd_generators(family, model, sign, format);
  return cmd_soft(point, lambda, sign_pair, model, format);
}

}  // namespace soft7::cli
