#include "soft7/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "soft7/lie.hpp"
#include "soft7/operators.hpp"

namespace soft7 {

namespace {

constexpr std::uint64_t kLambdaStream = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kScaleStream = 0xc2b2ae3d27d4eb4fULL;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

template <Scalar T>
std::vector<std::string> point_strings(const Octonion<T>& p) {
  std::vector<std::string> out;
  for (int m = 0; m < 8; ++m) out.push_back(to_string(p[m]));
  return out;
}

template <Scalar T>
Witness witness(const Octonion<T>* p, std::vector<int> idx, std::string value, std::string note = {}) {
  Witness w;
  if (p) w.point = point_strings(*p);
  w.indices = std::move(idx);
  w.value = std::move(value);
  w.note = std::move(note);
  return w;
}

template <Scalar T>
double oct_dev(const Octonion<T>& o) {
  double d = 0;
  for (int m = 0; m < 8; ++m) d = std::max(d, magnitude(o[m]));
  return d;
}

template <Scalar T>
std::string oct_string(const Octonion<T>& o) {
  std::string s = "(";
  for (int m = 0; m < 8; ++m) s += (m ? "," : "") + to_string(o[m]);
  return s + ")";
}

class Recorder {
 public:
  Recorder(std::string name, std::string anchor, bool advisory = false) {
    r_.name = std::move(name);
    r_.anchor = std::move(anchor);
    r_.advisory = advisory;
  }

  template <typename MakeWitness>
  void expect(bool ok, double deviation, MakeWitness&& make) {
    r_.max_deviation = std::max(r_.max_deviation, deviation);
    if (!ok) {
      r_.status = Status::Fail;
      if (!r_.witness) r_.witness = make();
    }
  }

  // witness-required claims: pass exactly when a witness was found
  void require_witness(std::optional<Witness> w, std::string missing) {
    if (w) {
      r_.witness = std::move(w);
    } else {
      r_.status = Status::Fail;
      r_.witness = Witness{{}, {}, "", std::move(missing)};
    }
  }

  void fail(Witness w) {
    r_.status = Status::Fail;
    if (!r_.witness) r_.witness = std::move(w);
  }

  bool ok() const { return r_.passed(); }
  void cases(std::size_t n) { r_.points_tested = n; }
  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

template <Scalar T>
struct Samples {
  std::vector<Octonion<T>> points;
  std::vector<Octonion<T>> lambdas;
  std::vector<T> scales;
};

template <Scalar T>
T random_scale(std::uint64_t seed, std::uint64_t index) {
  auto rng = make_rng(seed ^ kScaleStream, index);
  if constexpr (is_exact_v<T>) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 9), sgn(0, 1);
    const long p = num(rng) * (sgn(rng) ? 1 : -1);
    return ratio<T>(p, den(rng));
  } else {
    std::uniform_real_distribution<double> mag(0.1, 10.0);
    std::uniform_int_distribution<int> sgn(0, 1);
    return mag(rng) * (sgn(rng) ? 1.0 : -1.0);
  }
}

template <Scalar T>
Samples<T> draw(const SuiteConfig& cfg) {
  Samples<T> s;
  for (std::size_t n = 0; n < cfg.points; ++n) {
    s.points.push_back(random_point<T>(cfg.seed, n));
    s.lambdas.push_back(random_point<T>(cfg.seed ^ kLambdaStream, n));
    s.scales.push_back(random_scale<T>(cfg.seed, n));
  }
  return s;
}

template <Scalar T>
const Mat8<T>& op(Sign s, int i) {
  return side_op<T>(side_of(s), i);
}

template <Scalar T>
std::array<Octonion<T>, 7> applied(const std::array<Mat8<T>, 7>& ops, const Octonion<T>& x) {
  std::array<Octonion<T>, 7> out;
  for (std::size_t n = 0; n < 7; ++n) out[n] = apply(ops[n], x);
  return out;
}

template <Scalar T>
std::array<Mat8<T>, 7> constant_ops(Sign s) {
  std::array<Mat8<T>, 7> ops;
  for (int i = 1; i <= 7; ++i) ops[static_cast<std::size_t>(i - 1)] = op<T>(s, i);
  return ops;
}

template <Scalar T>
T table_value(const std::array<T, 35>& values, int i, int j, int k) {
  auto ct = canonicalize(i, j, k);
  if (!ct) return T(0);
  const T& v = values[static_cast<std::size_t>(ct->index)];
  return ct->sign > 0 ? v : T(-v);
}

// [A_i, A_j] x = 2 sum_k f_ijk A_k x over i < j
template <Scalar T, typename F>
void commutator_relation(Recorder& rec, const std::array<Mat8<T>, 7>& ops, const Octonion<T>& x,
                         F&& f, const Octonion<T>& where) {
  const auto ax = applied(ops, x);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      const auto& ai = ops[static_cast<std::size_t>(i - 1)];
      const auto& aj = ops[static_cast<std::size_t>(j - 1)];
      Octonion<T> diff = apply(mat_commutator(ai, aj), x);
      for (int k = 1; k <= 7; ++k) {
        const T v = f(i, j, k);
        if (!is_zero(v)) diff -= T(2 * v) * ax[static_cast<std::size_t>(k - 1)];
      }
      rec.expect(diff.is_zero(), oct_dev(diff),
                 [&] { return witness(&where, {i, j}, oct_string(diff), "lhs - rhs"); });
    }
}

// ---- operators --------------------------------------------------------------

template <Scalar T>
CheckResult check_anticommutators() {
  Recorder rec("anticommutators", "{E_i,E_j} = -2 delta_ij I and {1|E_i,1|E_j} = -2 delta_ij I");
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        Mat8<T> d = mat_anticommutator(op<T>(s, i), op<T>(s, j));
        if (i == j) d += T(2) * Mat8<T>::identity();
        rec.expect(d.is_zero(), d.max_abs(), [&] {
          return witness<T>(nullptr, {i, j}, to_string(d.max_abs()), s == Sign::Plus ? "left" : "right");
        });
      }
  rec.cases(98);
  return rec.done();
}

template <Scalar T>
CheckResult check_matrix_jacobi() {
  Recorder rec("matrix-jacobi", "[E_i,[E_j,E_k]] + cyclic = 0 as matrices, left and right");
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
          const auto &a = op<T>(s, i), &b = op<T>(s, j), &c = op<T>(s, k);
          const Mat8<T> d = mat_commutator(a, mat_commutator(b, c)) + mat_commutator(b, mat_commutator(c, a)) +
                            mat_commutator(c, mat_commutator(a, b));
          rec.expect(d.is_zero(), d.max_abs(), [&] {
            return witness<T>(nullptr, {i, j, k}, to_string(d.max_abs()), s == Sign::Plus ? "left" : "right");
          });
        }
  rec.cases(2 * 343);
  return rec.done();
}

template <Scalar T>
CheckResult check_open_algebra() {
  Recorder rec("open-algebra-witness",
               "[E_1,E_2] - 2E_3 is a nonzero matrix that annihilates the north pole");
  const auto np = north_pole<T>();
  const Mat8<T> d = mat_commutator(left_op<T>(1), left_op<T>(2)) - T(2) * left_op<T>(3);
  const Octonion<T> at_np = apply(d, np);
  rec.expect(at_np.is_zero(), oct_dev(at_np),
             [&] { return witness(&np, {1, 2, 3}, oct_string(at_np), "([E_1,E_2] - 2E_3) NP"); });
  std::optional<Witness> w;
  if (!d.is_zero()) w = witness<T>(nullptr, {1, 2, 3}, to_string(d.max_abs()), "max |[E_1,E_2] - 2E_3|");
  rec.require_witness(std::move(w), "[E_1,E_2] - 2E_3 vanished as a matrix");
  rec.cases(1);
  return rec.done();
}

template <Scalar T>
CheckResult check_mixed_commutator() {
  Recorder rec("mixed-commutator", "[E_i,1|E_j] = 0 iff i = j, and [E_i,1|E_j] e_0 = 0");
  const auto e0 = north_pole<T>();
  std::optional<Witness> nonzero;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const Mat8<T> c = mat_commutator(left_op<T>(i), right_op<T>(j));
      if (i == j) {
        rec.expect(c.is_zero(), c.max_abs(),
                   [&] { return witness<T>(nullptr, {i, j}, to_string(c.max_abs()), "diagonal commutator"); });
      } else {
        rec.expect(!c.is_zero(), 0.0,
                   [&] { return witness<T>(nullptr, {i, j}, "0", "off-diagonal commutator vanished"); });
        if (!nonzero && !c.is_zero())
          nonzero = witness<T>(nullptr, {i, j}, to_string(c.max_abs()), "nonzero [E_i,1|E_j]");
      }
      const Octonion<T> v = apply(c, e0);
      rec.expect(v.is_zero(), oct_dev(v), [&] { return witness(&e0, {i, j}, oct_string(v), "[E_i,1|E_j] e_0"); });
    }
  if (rec.ok()) rec.require_witness(std::move(nonzero), "no i != j with nonzero commutator");
  rec.cases(49);
  return rec.done();
}

template <Scalar T>
CheckResult check_pure_spinor(const Samples<T>& s) {
  Recorder rec("pure-spinor", "phi^t E_i phi = 0 and phi^t 1|E_i phi = 0");
  for (const auto& p : s.points)
    for (Sign sg : {Sign::Plus, Sign::Minus})
      for (int i = 1; i <= 7; ++i) {
        const T q = quadratic_form(op<T>(sg, i), p);
        rec.expect(is_zero(q), magnitude(q), [&] { return witness(&p, {i}, to_string(q)); });
      }
  rec.cases(s.points.size());
  return rec.done();
}

template <Scalar T>
CheckResult check_mixed_quadratic(const Samples<T>& s) {
  Recorder rec("mixed-quadratic-zero", "phi^t [E_i,1|E_j] phi = 0");
  std::vector<Mat8<T>> comms;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) comms.push_back(mat_commutator(left_op<T>(i), right_op<T>(j)));
  for (const auto& p : s.points)
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        const T q = quadratic_form(comms[static_cast<std::size_t>(7 * (i - 1) + j - 1)], p);
        rec.expect(is_zero(q), magnitude(q), [&] { return witness(&p, {i, j}, to_string(q)); });
      }
  rec.cases(s.points.size());
  return rec.done();
}

// ---- structure functions ----------------------------------------------------

template <Scalar T>
CheckResult check_np_reduction() {
  Recorder rec("np-reduction", "f(+)(NP/SP) = -f(-)(NP/SP) = f, and E_i(NP) = E_i, 1|E_i(NP) = 1|E_i");
  const auto np = north_pole<T>();
  const auto sp = -np;
  const auto& triples = canonical_triples();
  for (const auto* p : {&np, &sp})
    for (Route route : {Route::ClosedForm, Route::Solve, Route::Appendix})
      for (Sign sg : {Sign::Plus, Sign::Minus}) {
        const auto table = torsion_table(sg, *p, route);
        for (std::size_t n = 0; n < 35; ++n) {
          const auto& t = triples[n];
          const T expect(sg == Sign::Plus ? fconst(t.i, t.j, t.k) : -fconst(t.i, t.j, t.k));
          const T d = table.values()[n] - expect;
          rec.expect(is_zero(d), magnitude(d), [&] {
            return witness(p, {t.i, t.j, t.k}, to_string(table.values()[n]), to_string(sg) + " " + to_string(route));
          });
        }
      }
  for (int i = 1; i <= 7; ++i) {
    const Mat8<T> dl = left_op_at(i, np) - left_op<T>(i);
    const Mat8<T> dr = right_op_at(i, np) - right_op<T>(i);
    rec.expect(dl.is_zero(), dl.max_abs(), [&] { return witness(&np, {i}, to_string(dl.max_abs()), "E_i(NP) - E_i"); });
    rec.expect(dr.is_zero(), dr.max_abs(), [&] { return witness(&np, {i}, to_string(dr.max_abs()), "1|E_i(NP) - 1|E_i"); });
  }
  rec.cases(2);
  return rec.done();
}

template <Scalar T>
CheckResult compare_routes(const Samples<T>& s, const char* name, const char* anchor, Route other) {
  Recorder rec(name, anchor);
  const auto& triples = canonical_triples();
  for (const auto& p : s.points)
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const auto a = torsion_table(sg, p, Route::ClosedForm);
      const auto b = torsion_table(sg, p, other);
      for (std::size_t n = 0; n < 35; ++n) {
        const T d = a.values()[n] - b.values()[n];
        rec.expect(is_zero(d), magnitude(d), [&] {
          return witness(&p, {triples[n].i, triples[n].j, triples[n].k},
                         to_string(a.values()[n]) + " vs " + to_string(b.values()[n]), to_string(sg));
        });
      }
    }
  rec.cases(s.points.size());
  return rec.done();
}

template <Scalar T>
CheckResult check_scale_invariance(const Samples<T>& s) {
  Recorder rec("scale-invariance", "f(cphi) = f(phi) for nonzero c");
  const auto& triples = canonical_triples();
  for (std::size_t n = 0; n < s.points.size(); ++n) {
    const auto& p = s.points[n];
    const Octonion<T> q = s.scales[n] * p;
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const auto a = torsion_table(sg, p, Route::ClosedForm);
      const auto b = torsion_table(sg, q, Route::ClosedForm);
      for (std::size_t m = 0; m < 35; ++m) {
        const T d = a.values()[m] - b.values()[m];
        rec.expect(is_zero(d), magnitude(d), [&] {
          return witness(&p, {triples[m].i, triples[m].j, triples[m].k}, to_string(d), "scale " + to_string(s.scales[n]));
        });
      }
    }
  }
  rec.cases(s.points.size());
  return rec.done();
}

template <Scalar T>
CheckResult check_total_antisymmetry(const Samples<T>& s) {
  Recorder rec("total-antisymmetry", "f(+/-)_ijk(phi) is totally antisymmetric in i, j, k");
  static constexpr std::array<std::array<int, 4>, 6> perms = {{
      {0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}}};
  for (const auto& p : s.points)
    for (Sign sg : {Sign::Plus, Sign::Minus})
      for (const auto& t : canonical_triples()) {
        const std::array<int, 3> idx = {t.i, t.j, t.k};
        const T base = torsion_closed_form(sg, t.i, t.j, t.k, p);
        for (const auto& pm : perms) {
          const int a = idx[static_cast<std::size_t>(pm[0])];
          const int b = idx[static_cast<std::size_t>(pm[1])];
          const int c = idx[static_cast<std::size_t>(pm[2])];
          const T v = torsion_closed_form(sg, a, b, c, p);
          const T d = pm[3] > 0 ? T(v - base) : T(v + base);
          rec.expect(is_zero(d), magnitude(d), [&] { return witness(&p, {a, b, c}, to_string(v), to_string(sg)); });
        }
      }
  rec.cases(s.points.size());
  return rec.done();
}

template <Scalar T>
CheckResult check_defining_relation(const Samples<T>& s, Sign sg) {
  Recorder rec(sg == Sign::Plus ? "defining-relation(+)" : "defining-relation(-)",
               sg == Sign::Plus ? "[E_i,E_j] phi = 2 f(+)_ijk(phi) E_k phi"
                                : "[1|E_i,1|E_j] phi = 2 f(-)_ijk(phi) 1|E_k phi");
  const auto ops = constant_ops<T>(sg);
  for (const auto& p : s.points) {
    const auto table = torsion_table(sg, p, Route::ClosedForm);
    commutator_relation(rec, ops, p, [&](int i, int j, int k) { return table(i, j, k); }, p);
  }
  rec.cases(s.points.size());
  return rec.done();
}

template <Scalar T>
CheckResult check_contracted_jacobi(const Samples<T>& s) {
  Recorder rec("contracted-jacobi", "sum_t (f_ijm f_mkt + f_jkm f_mit + f_kim f_mjt) A_t phi = 0");
  for (const auto& p : s.points)
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const auto table = torsion_table(sg, p, Route::ClosedForm);
      const auto ap = applied(constant_ops<T>(sg), p);
      for (const auto& t : canonical_triples()) {
        Octonion<T> v;
        for (int u = 1; u <= 7; ++u) {
          const T r = jacobi_residual(table, t.i, t.j, t.k, u);
          if (!is_zero(r)) v += r * ap[static_cast<std::size_t>(u - 1)];
        }
        rec.expect(v.is_zero(), oct_dev(v),
                   [&] { return witness(&p, {t.i, t.j, t.k}, oct_string(v), to_string(sg) + " contracted residual"); });
      }
    }
  rec.cases(s.points.size());
  return rec.done();
}

template <Scalar T>
std::optional<Witness> raw_jacobi_scan(const Octonion<T>& p) {
  for (Sign sg : {Sign::Plus, Sign::Minus}) {
    const auto table = torsion_table(sg, p, Route::ClosedForm);
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k)
          for (int t = 1; t <= 7; ++t) {
            const T r = jacobi_residual(table, i, j, k, t);
            if (!is_zero(r)) return witness(&p, {i, j, k, t}, to_string(r), to_string(sg) + " raw residual");
          }
  }
  return std::nullopt;
}

template <Scalar T>
CheckResult check_raw_jacobi_witness() {
  Recorder rec("raw-jacobi-witness", "f_ijm f_mkt + f_jkm f_mit + f_kim f_mjt is nonzero in general");
  const auto w = phi_w<T>();
  rec.require_witness(raw_jacobi_scan(w), "raw residual vanished for every (i,j,k,t) at phi_w");
  rec.cases(1);
  return rec.done();
}

template <Scalar T>
CheckResult check_standard_cycle_parity(const Samples<T>& s) {
  Recorder rec("standard-cycle-parity",
               "f(+) = -f(-) on the seven standard cycles; broken on some other triple");
  for (const auto& p : s.points)
    for (const auto& c : StructureConstants::cycles()) {
      const T d = torsion_closed_form(Sign::Plus, c.i, c.j, c.k, p) + torsion_closed_form(Sign::Minus, c.i, c.j, c.k, p);
      rec.expect(is_zero(d), magnitude(d), [&] { return witness(&p, {c.i, c.j, c.k}, to_string(d), "f(+) + f(-)"); });
    }
  const auto q = from_ints<T>({1, 0, 0, 0, 0, 0, 0, 1});
  std::optional<Witness> found;
  for (const auto& t : canonical_triples()) {
    if (fconst(t.i, t.j, t.k) != 0) continue;
    const T d = torsion_closed_form(Sign::Plus, t.i, t.j, t.k, q) + torsion_closed_form(Sign::Minus, t.i, t.j, t.k, q);
    if (!is_zero(d)) {
      found = witness(&q, {t.i, t.j, t.k}, to_string(d), "f(+) + f(-) on a non-standard triple");
      break;
    }
  }
  if (rec.ok()) rec.require_witness(std::move(found), "f(+) = -f(-) held on every non-standard triple");
  rec.cases(s.points.size() + 1);
  return rec.done();
}

template <Scalar T>
CheckResult check_left_right_asymmetry() {
  Recorder rec("left-right-asymmetry-witness",
               "f(+)_124 = f(-)_124 = 1 at (1,0,0,0,0,0,0,1), so f(+) != -f(-)");
  const auto q = from_ints<T>({1, 0, 0, 0, 0, 0, 0, 1});
  for (Sign sg : {Sign::Plus, Sign::Minus})
    for (Route route : {Route::ClosedForm, Route::Appendix}) {
      const T v = torsion_table(sg, q, route)(1, 2, 4);
      const T d = v - T(1);
      rec.expect(is_zero(d), magnitude(d),
                 [&] { return witness(&q, {1, 2, 4}, to_string(v), to_string(sg) + " " + to_string(route)); });
    }
  rec.cases(1);
  return rec.done();
}

template <Scalar T>
CheckResult check_generalized_relation(const Samples<T>& s) {
  Recorder rec("generalized-torsion-relation",
               "[A_i(phi),A_j(phi)] lambda = 2 f(++/--)_ijk(phi,lambda) A_k(phi) lambda; f(++)(NP,lambda) = f(+)(lambda)");
  const auto np = north_pole<T>();
  for (std::size_t n = 0; n < s.points.size(); ++n) {
    const auto& p = s.points[n];
    const auto& l = s.lambdas[n];
    for (SignPair pair : {SignPair::PlusPlus, SignPair::MinusMinus}) {
      const auto ops = soft_ops(side_of(sign_of(pair)), p);
      const auto g = generalized_table(pair, p, l);
      commutator_relation(rec, ops, l, [&](int i, int j, int k) { return table_value(g, i, j, k); }, p);

      const auto at_np = generalized_table(pair, np, l);
      const auto plain = torsion_table(sign_of(pair), l, Route::ClosedForm);
      for (std::size_t m = 0; m < 35; ++m) {
        const T d = at_np[m] - plain.values()[m];
        const auto& t = canonical_triples()[m];
        rec.expect(is_zero(d), magnitude(d),
                   [&] { return witness(&l, {t.i, t.j, t.k}, to_string(d), to_string(pair) + " at NP vs plain"); });
      }
    }
  }
  rec.cases(s.points.size());
  return rec.done();
}

// ---- Lie structures ---------------------------------------------------------

template <Scalar T>
CheckResult check_clifford() {
  Recorder rec("clifford", "{gamma^i,gamma^j} = 2 delta^ij I; gamma^i Hermitian and purely imaginary");
  for (Chirality c : {Chirality::Left, Chirality::Right}) {
    for (int i = 1; i <= 7; ++i) {
      const auto g = gamma<T>(i, c);
      bool herm = true, imag = true;
      for (int r = 0; r < 8; ++r)
        for (int q = 0; q < 8; ++q) {
          if (!(g(r, q) == g(q, r).conj())) herm = false;
          if (!is_zero(g(r, q).re)) imag = false;
        }
      rec.expect(herm && imag, 0.0,
                 [&] { return witness<T>(nullptr, {i}, herm ? "not imaginary" : "not Hermitian", to_string(c)); });
      for (int j = 1; j <= 7; ++j) {
        Mat8C<T> d = mat_anticommutator(g, gamma<T>(j, c));
        if (i == j) d -= Complex<T>(T(2)) * Mat8C<T>::identity();
        rec.expect(d.is_zero(), d.max_abs(),
                   [&] { return witness<T>(nullptr, {i, j}, to_string(d.max_abs()), to_string(c)); });
      }
    }
  }
  rec.cases(98);
  return rec.done();
}

template <Scalar T>
struct DualCache {
  // gamma^i gamma^j gamma^k and the epsilon contracted four product, per ordered distinct triple
  std::vector<std::array<int, 3>> triples;
  std::vector<Mat8C<T>> lhs[2];
  std::vector<Mat8C<T>> rhs[2];

  DualCache() {
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k)
          if (i != j && j != k && i != k) triples.push_back({i, j, k});
    for (int c = 0; c < 2; ++c) {
      const Chirality ch = c == 0 ? Chirality::Left : Chirality::Right;
      std::array<Mat8C<T>, 7> g;
      for (int n = 1; n <= 7; ++n) g[static_cast<std::size_t>(n - 1)] = gamma<T>(n, ch);
      for (const auto& t : triples) {
        lhs[c].push_back(g[static_cast<std::size_t>(t[0] - 1)] * g[static_cast<std::size_t>(t[1] - 1)] *
                         g[static_cast<std::size_t>(t[2] - 1)]);
        rhs[c].push_back(dual_four_product<T>(t[0], t[1], t[2], ch));
      }
    }
  }
};

template <Scalar T>
CheckResult check_self_duality(const DualCache<T>& dc, bool with_phase) {
  Recorder rec(with_phase ? "self-duality-phase" : "self-duality",
               with_phase ? "gamma^i gamma^j gamma^k = w (1/4!) eps^ijklmnp gamma^l gamma^m gamma^n gamma^p, w = +i left, -i right"
                          : "gamma^i gamma^j gamma^k = (1/4!) eps^ijklmnp gamma^l gamma^m gamma^n gamma^p, i, j, k distinct",
               with_phase);
  for (int c = 0; c < 2; ++c) {
    const Complex<T> w = !with_phase ? Complex<T>(T(1)) : Complex<T>(T(0), T(c == 0 ? 1 : -1));
    for (std::size_t n = 0; n < dc.triples.size(); ++n) {
      const Mat8C<T> d = dc.lhs[c][n] - w * dc.rhs[c][n];
      const auto& t = dc.triples[n];
      rec.expect(d.is_zero(), d.max_abs(), [&] {
        return witness<T>(nullptr, {t[0], t[1], t[2]}, to_string(d.max_abs()),
                          c == 0 ? "left" : "right");
      });
    }
  }
  rec.cases(2 * dc.triples.size());
  return rec.done();
}

template <Scalar T>
CheckResult check_so8() {
  Recorder rec("so8-relations", "so(8) commutators of J^i, J^ij hold; 28 independent generators");
  for (Chirality c : {Chirality::Left, Chirality::Right}) {
    try {
      const auto set = so8_generators<T>(c);
      std::array<Mat8C<T>, 7> jv;
      std::array<std::array<Mat8C<T>, 7>, 7> jb;
      for (int i = 1; i <= 7; ++i) jv[static_cast<std::size_t>(i - 1)] = set.matrices[static_cast<std::size_t>(21 + i - 1)];
      for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) jb[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = gamma2<T>(i, j, c);
      double dev = 0;
      const auto defect = so8_relation_defect(jv, jb, &dev);
      rec.expect(!defect, dev, [&] { return witness<T>(nullptr, {}, to_string(dev), *defect); });
      const auto rank = mat_rank(set.matrices);
      rec.expect(rank == 28, std::abs(static_cast<double>(rank) - 28.0),
                 [&] { return witness<T>(nullptr, {}, std::to_string(rank), "span dimension, " + to_string(c)); });
    } catch (const std::exception& e) {
      rec.fail(witness<T>(nullptr, {}, "", e.what()));
    }
  }
  rec.cases(2);
  return rec.done();
}

template <Scalar T>
CheckResult check_g2_constraints(const std::vector<Mat8<T>>& hfull) {
  Recorder rec("g2-constraints", "f_ijk H_jk = 0 for each i");
  for (int i = 1; i <= 7; ++i) {
    Mat8<T> sum;
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) {
        const int f = fconst(i, j, k);
        if (f != 0) sum += T(f) * hfull[static_cast<std::size_t>(7 * (j - 1) + k - 1)];
      }
    rec.expect(sum.is_zero(), sum.max_abs(), [&] { return witness<T>(nullptr, {i}, to_string(sum.max_abs())); });
  }
  rec.cases(7);
  return rec.done();
}

template <Scalar T>
CheckResult check_g2_rank(const GeneratorSet<T>& g2) {
  Recorder rec("g2-rank", "the 21 H_ij span a 14 dimensional space");
  const auto rank = mat_rank(g2.matrices);
  rec.expect(rank == 14, std::abs(static_cast<double>(rank) - 14.0),
             [&] { return witness<T>(nullptr, {}, std::to_string(rank), "span dimension"); });
  rec.cases(1);
  return rec.done();
}

template <Scalar T>
CheckResult check_g2_fixes_identity(const GeneratorSet<T>& g2) {
  Recorder rec("g2-fixes-identity", "H_ij e_0 = 0");
  const auto e0 = north_pole<T>();
  for (std::size_t n = 0; n < g2.matrices.size(); ++n) {
    const auto v = apply(g2.matrices[n], e0);
    rec.expect(v.is_zero(), oct_dev(v), [&] { return witness(&e0, {}, oct_string(v), g2.names[n]); });
  }
  rec.cases(g2.matrices.size());
  return rec.done();
}

template <Scalar T>
void closure(Recorder& rec, const std::vector<Mat8<T>>& gens, const std::vector<std::string>& names,
             std::size_t expected_dim) {
  SpanBasis<T> basis(64);
  for (const auto& m : gens) basis.insert(flatten(m));
  rec.expect(basis.rank() == expected_dim, std::abs(static_cast<double>(basis.rank()) - static_cast<double>(expected_dim)),
             [&] { return witness<T>(nullptr, {}, std::to_string(basis.rank()), "span dimension"); });
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const auto res = basis.residual(flatten(mat_commutator(gens[a], gens[b])));
      double dev = 0;
      bool zero = true;
      for (const auto& x : res) {
        dev = std::max(dev, magnitude(x));
        if (!is_zero(x)) zero = false;
      }
      rec.expect(zero, dev, [&] {
        return witness<T>(nullptr, {}, to_string(dev), "[" + names[a] + "," + names[b] + "] leaves the span");
      });
    }
  rec.cases(gens.size() * (gens.size() - 1) / 2);
}

template <Scalar T>
CheckResult check_g2_closure(const GeneratorSet<T>& g2) {
  Recorder rec("g2-closure", "[H, H] lies in span{H_ij}");
  closure(rec, g2.matrices, g2.names, 14);
  return rec.done();
}

template <Scalar T>
CheckResult check_spin7_closure(const GeneratorSet<T>& g2) {
  Recorder rec("spin7-closure", "span{H_ij, K_s^+i} is a 21 dimensional Lie algebra");
  const auto ks = coset_generators<T>(CosetKind::Spinor, Sign::Plus);
  auto gens = g2.matrices;
  auto names = g2.names;
  gens.insert(gens.end(), ks.matrices.begin(), ks.matrices.end());
  names.insert(names.end(), ks.names.begin(), ks.names.end());
  closure(rec, gens, names, 21);
  return rec.done();
}

template <Scalar T>
CheckResult check_coset_annihilation(const GeneratorSet<T>& g2) {
  Recorder rec("coset-annihilation", "K_v e_0 = 0 and H_ij e_0 = 0; span{e_1..e_7} is preserved");
  const auto e0 = north_pole<T>();
  std::vector<std::pair<std::string, const Mat8<T>*>> all;
  const auto kp = coset_generators<T>(CosetKind::Vector, Sign::Plus);
  const auto km = coset_generators<T>(CosetKind::Vector, Sign::Minus);
  for (const auto* set : {&kp, &km, &g2})
    for (std::size_t n = 0; n < set->matrices.size(); ++n) all.emplace_back(set->names[n], &set->matrices[n]);
  for (const auto& [name, m] : all) {
    const auto v = apply(*m, e0);
    rec.expect(v.is_zero(), oct_dev(v), [&] { return witness(&e0, {}, oct_string(v), name + " e_0"); });
    for (int c = 1; c < 8; ++c) {
      const T& x = (*m)(0, c);
      rec.expect(is_zero(x), magnitude(x),
                 [&] { return witness<T>(nullptr, {0, c}, to_string(x), name + " moves e_" + std::to_string(c) + " off span{e_1..e_7}"); });
    }
  }
  rec.cases(all.size());
  return rec.done();
}

template <Scalar T>
CheckResult check_conjugacy() {
  Recorder rec("conjugacy", "conj(K_v) = K_v, conj(K_s) = Kbar_s, conj is an involution");
  for (Sign sg : {Sign::Plus, Sign::Minus}) {
    const auto kv = coset_generators<T>(CosetKind::Vector, sg);
    const auto ks = coset_generators<T>(CosetKind::Spinor, sg);
    const auto kb = coset_generators<T>(CosetKind::SpinorBar, sg);
    for (std::size_t n = 0; n < 7; ++n) {
      const int i = static_cast<int>(n) + 1;
      rec.expect(kv.combos[n].conjugate() == kv.combos[n], 0.0,
                 [&] { return witness<T>(nullptr, {i}, "", kv.names[n] + " not self-conjugate"); });
      rec.expect(ks.combos[n].conjugate() == kb.combos[n], 0.0,
                 [&] { return witness<T>(nullptr, {i}, "", "conj(" + ks.names[n] + ") != " + kb.names[n]); });
      for (const auto* set : {&kv, &ks, &kb}) {
        const auto& c = set->combos[n];
        rec.expect(c.conjugate().conjugate() == c, 0.0,
                   [&] { return witness<T>(nullptr, {i}, "", set->names[n] + " conj not an involution"); });
        const Mat8<T> d = c.evaluate() - set->matrices[n];
        rec.expect(d.is_zero(), d.max_abs(), [&] { return witness<T>(nullptr, {i}, "", set->names[n] + " evaluation mismatch"); });
      }
    }
  }
  rec.cases(14);
  return rec.done();
}

template <Scalar T>
CheckResult check_decompositions() {
  Recorder rec("decompositions",
               "[E_i,E_j], [1|E_i,1|E_j], [E_i,1|E_j] in terms of H, E, 1|E, and H from commutators");
  const Report sub = commutator_decompositions<T>();
  for (const auto& c : sub.checks) {
    rec.expect(c.passed(), c.max_deviation, [&] {
      Witness w = c.witness.value_or(Witness{});
      w.note = c.name + ": " + w.note;
      return w;
    });
  }
  rec.cases(49 * sub.checks.size());
  return rec.done();
}

// ---- reference values at phi_w -------------------------------------------------

template <Scalar T>
CheckResult check_phi_w_table() {
  Recorder rec("phiW-table", "the reference f(+) values at phi_mu = (mu + 1)/sqrt(204)");
  const auto w = phi_w<T>();
  const auto closed = torsion_table(Sign::Plus, w, Route::ClosedForm);
  const auto appendix = torsion_table(Sign::Plus, w, Route::Appendix);
  const auto err = phi_w_erratum();
  for (const auto& e : phi_w_printed_table()) {
    const T v = closed(e.i, e.j, e.k);
    if (e.i == err.i && e.j == err.j && e.k == err.k) {
      const T corrected = ratio<T>(err.num, err.den);
      const T printed = ratio<T>(e.num, e.den);
      const T d1 = v - corrected;
      const T d2 = appendix(e.i, e.j, e.k) - corrected;
      rec.expect(is_zero(d1) && is_zero(d2), std::max(magnitude(d1), magnitude(d2)),
                 [&] { return witness(&w, {e.i, e.j, e.k}, to_string(v), "corrected value mismatch"); });
      rec.expect(!is_zero(T(v - printed)), 0.0,
                 [&] { return witness(&w, {e.i, e.j, e.k}, to_string(v), "matches the misprint"); });
      continue;
    }
    const T d = v - ratio<T>(e.num, e.den);
    rec.expect(is_zero(d), magnitude(d), [&] {
      return witness(&w, {e.i, e.j, e.k}, to_string(v),
                     "printed " + std::to_string(e.num) + "/" + std::to_string(e.den));
    });
  }
  rec.cases(35);
  return rec.done();
}

template <Scalar T>
CheckResult check_phi_w_commutator() {
  Recorder rec("phiW-commutator-vector",
               "[E_1,E_2] phi_w = sqrt(51) (-4,-3,2,1,8,-7,6,-5)/51 = (-24E_3 + 8E_4 + 16E_5 + 16E_6 - 2E_7)/17 phi_w");
  const auto w = phi_w<T>();
  const auto col = phi_w_commutator_column();
  const auto lhs = apply(mat_commutator(left_op<T>(1), left_op<T>(2)), w);
  Octonion<T> printed;
  for (int m = 0; m < 8; ++m) printed[m] = T(col[static_cast<std::size_t>(m)]);
  const auto d1 = lhs - printed;
  rec.expect(d1.is_zero(), oct_dev(d1), [&] { return witness(&w, {1, 2}, oct_string(lhs), "printed column"); });

  const std::array<long, 7> coeff17 = {0, 0, -24, 8, 16, 16, -2};
  const auto table = torsion_table(Sign::Plus, w, Route::ClosedForm);
  Octonion<T> via_f, via_printed;
  for (int k = 1; k <= 7; ++k) {
    const auto ek = apply(left_op<T>(k), w);
    via_f += T(2 * table(1, 2, k)) * ek;
    via_printed += ratio<T>(coeff17[static_cast<std::size_t>(k - 1)], 17) * ek;
  }
  const auto d2 = lhs - via_f;
  const auto d3 = lhs - via_printed;
  rec.expect(d2.is_zero(), oct_dev(d2), [&] { return witness(&w, {1, 2}, oct_string(via_f), "2 f_12k E_k phi_w"); });
  rec.expect(d3.is_zero(), oct_dev(d3), [&] { return witness(&w, {1, 2}, oct_string(via_printed), "printed E_k expansion"); });
  rec.cases(1);
  return rec.done();
}

// ---- point dependent constructions (advisory) ----------------------------------

template <Scalar T>
CheckResult check_soft_clifford(const Samples<T>& s) {
  Recorder rec("soft-clifford", "{E_i(phi),E_j(phi)} = -2 delta_ij I and likewise for 1|E_i(phi)", true);
  const std::size_t n = std::min<std::size_t>(s.points.size(), 10);
  for (std::size_t m = 0; m < n; ++m) {
    const auto& p = s.points[m];
    for (Side side : {Side::Left, Side::Right}) {
      const auto ops = soft_ops(side, p);
      for (int i = 1; i <= 7; ++i)
        for (int j = i; j <= 7; ++j) {
          Mat8<T> d = mat_anticommutator(ops[static_cast<std::size_t>(i - 1)], ops[static_cast<std::size_t>(j - 1)]);
          if (i == j) d += T(2) * Mat8<T>::identity();
          rec.expect(d.is_zero(), d.max_abs(), [&] {
            return witness(&p, {i, j}, to_string(d.max_abs()), side == Side::Left ? "left" : "right");
          });
        }
    }
  }
  rec.cases(n);
  return rec.done();
}

template <Scalar T>
CheckResult check_soft_g2(const Samples<T>& s) {
  Recorder rec("soft-g2", "H_ij built from E_i(phi), 1|E_i(phi): f_ijk H_jk = 0 and 14 dimensions", true);
  const std::size_t n = std::min<std::size_t>(s.points.size(), 3);
  for (std::size_t m = 0; m < n; ++m) {
    const auto& p = s.points[m];
    const auto l = soft_ops(Side::Left, p);
    const auto r = soft_ops(Side::Right, p);
    auto at = [](const std::array<Mat8<T>, 7>& a, int i) -> const Mat8<T>& { return a[static_cast<std::size_t>(i - 1)]; };
    std::vector<Mat8<T>> hfull(49), hs;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        Mat8<T> h;
        for (int k = 1; k <= 7; ++k) {
          const int f = fconst(i, j, k);
          if (f != 0) h += T(f) * (at(l, k) - at(r, k));
        }
        h -= ratio<T>(3, 2) * mat_commutator(at(l, i), at(r, j));
        hfull[static_cast<std::size_t>(7 * (i - 1) + j - 1)] = h;
        if (i < j) hs.push_back(h);
      }
    for (int i = 1; i <= 7; ++i) {
      Mat8<T> sum;
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
          const int f = fconst(i, j, k);
          if (f != 0) sum += T(f) * hfull[static_cast<std::size_t>(7 * (j - 1) + k - 1)];
        }
      rec.expect(sum.is_zero(), sum.max_abs(),
                 [&] { return witness(&p, {i}, to_string(sum.max_abs()), "f_ijk H_jk(phi)"); });
    }
    const auto rank = mat_rank(hs);
    rec.expect(rank == 14, std::abs(static_cast<double>(rank) - 14.0),
               [&] { return witness(&p, {}, std::to_string(rank), "span dimension of H_ij(phi)"); });
  }
  rec.cases(n);
  return rec.done();
}

template <Scalar T>
Report run_model(const SuiteConfig& cfg) {
  const auto s = draw<T>(cfg);
  const auto g2 = g2_generators<T>();
  std::vector<Mat8<T>> hfull;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) hfull.push_back(g2_generator<T>(i, j));
  const DualCache<T> dc;

  Report rep;
  rep.config = cfg;
  auto& c = rep.checks;
  c.push_back(check_anticommutators<T>());
  c.push_back(check_matrix_jacobi<T>());
  c.push_back(check_open_algebra<T>());
  c.push_back(check_mixed_commutator<T>());
  c.push_back(check_pure_spinor(s));
  c.push_back(check_mixed_quadratic(s));
  c.push_back(check_np_reduction<T>());
  c.push_back(compare_routes(s, "route-agreement", "closed form = solution of the linear system", Route::Solve));
  c.push_back(compare_routes(s, "appendix-agreement", "closed form = transcribed polynomial table", Route::Appendix));
  c.push_back(check_scale_invariance(s));
  c.push_back(check_total_antisymmetry(s));
  c.push_back(check_defining_relation(s, Sign::Plus));
  c.push_back(check_defining_relation(s, Sign::Minus));
  c.push_back(check_contracted_jacobi(s));
  c.push_back(check_raw_jacobi_witness<T>());
  c.push_back(check_standard_cycle_parity(s));
  c.push_back(check_left_right_asymmetry<T>());
  c.push_back(check_generalized_relation(s));
  c.push_back(check_clifford<T>());
  c.push_back(check_self_duality(dc, false));
  c.push_back(check_so8<T>());
  c.push_back(check_g2_constraints(hfull));
  c.push_back(check_g2_rank(g2));
  c.push_back(check_g2_fixes_identity(g2));
  c.push_back(check_g2_closure(g2));
  c.push_back(check_spin7_closure(g2));
  c.push_back(check_coset_annihilation(g2));
  c.push_back(check_conjugacy<T>());
  c.push_back(check_decompositions<T>());
  c.push_back(check_phi_w_table<T>());
  c.push_back(check_phi_w_commutator<T>());
  c.push_back(check_soft_clifford(s));
  c.push_back(check_soft_g2(s));
  c.push_back(check_self_duality(dc, true));
  return rep;
}

}  // namespace

template <Scalar T>
Octonion<T> random_point(std::uint64_t seed, std::uint64_t index) {
  auto rng = make_rng(seed, index);
  if constexpr (is_exact_v<T>) {
    std::uniform_int_distribution<long> coord(-9, 9);
    for (;;) {
      std::array<long, 8> v{};
      bool nonzero = false;
      for (auto& x : v) {
        x = coord(rng);
        nonzero = nonzero || x != 0;
      }
      if (nonzero) return from_ints<T>(v);
    }
  } else {
    std::normal_distribution<double> coord(0.0, 1.0);
    for (;;) {
      std::array<double, 8> v{};
      double r2 = 0;
      for (auto& x : v) {
        x = coord(rng);
        r2 += x * x;
      }
      if (r2 < 1e-12) continue;
      const double r = std::sqrt(r2);
      for (auto& x : v) x /= r;
      return Octonion<T>(v);
    }
  }
}

template Octonion<Rational> random_point<Rational>(std::uint64_t, std::uint64_t);
template Octonion<double> random_point<double>(std::uint64_t, std::uint64_t);

const std::array<PrintedTorsion, 35>& phi_w_printed_table() {
  static const std::array<PrintedTorsion, 35> table = {{
      {1, 2, 3, -12, 17}, {2, 5, 7, 4, 51},   {1, 5, 6, 1, 51},    {1, 4, 5, -6, 17},  {1, 7, 6, 8, 51},
      {3, 6, 5, 0, 1},    {4, 3, 7, -2, 51},  {4, 2, 6, 3, 17},    {1, 2, 4, 4, 17},   {1, 5, 2, -8, 17},
      {3, 5, 4, -44, 51}, {5, 6, 7, -10, 17}, {1, 3, 4, -5, 17},   {4, 1, 6, -14, 17}, {1, 5, 7, -40, 51},
      {3, 5, 7, -2, 17},  {3, 1, 6, -14, 51}, {2, 3, 5, -23, 51},  {1, 7, 4, -4, 17},  {4, 5, 6, -16, 51},
      {2, 6, 5, -38, 51}, {1, 6, 2, -8, 17},  {6, 3, 2, -22, 51},  {1, 3, 5, -10, 51}, {2, 4, 3, -2, 17},
      {4, 3, 6, -20, 51}, {3, 7, 6, -13, 17}, {1, 2, 7, -1, 17},   {4, 2, 7, -16, 17}, {2, 7, 3, -16, 17},
      {2, 6, 7, -4, 51},  {7, 1, 3, -28, 51}, {2, 4, 5, 2, 17},    {4, 7, 5, -7, 51},  {4, 6, 7, -10, 51},
  }};
  return table;
}

PrintedTorsion phi_w_erratum() { return {2, 7, 3, -16, 51}; }

std::array<long, 8> phi_w_commutator_column() { return {-8, -6, 4, 2, 16, -14, 12, -10}; }

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    SuiteConfig cfg;
    cfg.model = "float";
    cfg.points = 1;
    for (const auto& c : run_suite(cfg).checks) out.push_back(c.name);
    return out;
  }();
  return names;
}

Report run_suite(const SuiteConfig& config) {
  if (config.points == 0) throw std::invalid_argument("points must be at least 1");
  if (config.model == "exact") return run_model<Rational>(config);
  if (config.model == "float") return run_model<double>(config);
  throw std::invalid_argument("unknown model '" + config.model + "' (expected exact or float)");
}

}  // namespace soft7
