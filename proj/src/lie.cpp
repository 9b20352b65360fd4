#include "soft7/lie.hpp"

#include <stdexcept>
#include <string>

namespace soft7 {

std::string to_string(Chirality c) { return c == Chirality::Left ? "left" : "right"; }

std::string to_string(CosetKind k) {
  switch (k) {
    case CosetKind::Vector:
      return "coset_v";
    case CosetKind::Spinor:
      return "coset_s";
    case CosetKind::SpinorBar:
      return "coset_s_bar";
  }
  return "?";
}

namespace {

void check_index(int i) {
  if (i < 1 || i > 7) throw IndexError("index " + std::to_string(i) + " out of range 1..7");
}

int delta(int a, int b) { return a == b ? 1 : 0; }

template <Scalar T>
Complex<T> cint(long v) {
  return Complex<T>(T(v));
}

template <Scalar T>
Complex<T> imag_unit() {
  return Complex<T>(T(0), T(1));
}

// c1 * A + c2 * B for integer coefficients, skipping zero terms
template <Scalar T>
Mat8C<T> combo2(int c1, const Mat8C<T>& a, int c2, const Mat8C<T>& b) {
  Mat8C<T> out;
  if (c1 != 0) out += cint<T>(c1) * a;
  if (c2 != 0) out += cint<T>(c2) * b;
  return out;
}

std::string index_label(const char* stem, std::initializer_list<int> idx) {
  std::string s = stem;
  for (int x : idx) s += std::to_string(x);
  return s;
}

}  // namespace

template <Scalar T>
Mat8C<T> gamma(int i, Chirality chirality) {
  check_index(i);
  return complexify(side_op<T>(side_of(chirality), i), imag_unit<T>());
}

template <Scalar T>
Mat8C<T> gamma2(int i, int j, Chirality chirality) {
  check_index(i);
  check_index(j);
  if (i == j) return Mat8C<T>();
  const auto gi = gamma<T>(i, chirality);
  const auto gj = gamma<T>(j, chirality);
  return Complex<T>(ratio<T>(1, 2)) * mat_commutator(gi, gj);
}

int levi_civita7(const std::array<int, 7>& idx) {
  for (std::size_t a = 0; a < 7; ++a) {
    if (idx[a] < 1 || idx[a] > 7) throw IndexError("Levi-Civita index out of range 1..7");
    for (std::size_t b = a + 1; b < 7; ++b)
      if (idx[a] == idx[b]) return 0;
  }
  int inversions = 0;
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = a + 1; b < 7; ++b)
      if (idx[a] > idx[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

template <Scalar T>
Mat8C<T> dual_four_product(int i, int j, int k, Chirality chirality) {
  std::array<Mat8C<T>, 7> g;
  for (int n = 1; n <= 7; ++n) g[static_cast<std::size_t>(n - 1)] = gamma<T>(n, chirality);
  auto at = [&](int n) -> const Mat8C<T>& { return g[static_cast<std::size_t>(n - 1)]; };

  Mat8C<T> sum;
  for (int l = 1; l <= 7; ++l)
    for (int m = 1; m <= 7; ++m)
      for (int n = 1; n <= 7; ++n)
        for (int p = 1; p <= 7; ++p) {
          const int eps = levi_civita7({i, j, k, l, m, n, p});
          if (eps == 0) continue;
          sum += cint<T>(eps) * (at(l) * at(m) * at(n) * at(p));
        }
  return Complex<T>(ratio<T>(1, 24)) * sum;
}

template <Scalar T>
std::optional<std::string> so8_relation_defect(const std::array<Mat8C<T>, 7>& j_vec,
                                               const std::array<std::array<Mat8C<T>, 7>, 7>& j_bi,
                                               double* max_deviation) {
  auto v = [&](int n) -> const Mat8C<T>& { return j_vec[static_cast<std::size_t>(n - 1)]; };
  auto b = [&](int p, int q) -> const Mat8C<T>& {
    return j_bi[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
  };
  double worst = 0;
  std::optional<std::string> defect;
  auto record = [&](const Mat8C<T>& diff, const std::string& where) {
    const double d = diff.max_abs();
    worst = std::max(worst, d);
    if (!defect && !diff.is_zero()) defect = where;
  };

  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      record(mat_commutator(v(i), v(j)) - cint<T>(2) * b(i, j), index_label("[J^i,J^j] i,j=", {i, j}));

  for (int i = 1; i <= 7; ++i)
    for (int m = 1; m <= 7; ++m)
      for (int n = 1; n <= 7; ++n)
        record(mat_commutator(v(i), b(m, n)) - combo2(2 * delta(i, m), v(n), -2 * delta(i, n), v(m)),
               index_label("[J^i,J^mn] i,m,n=", {i, m, n}));

  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k)
        for (int l = 1; l <= 7; ++l) {
          const Mat8C<T> rhs = combo2(2 * delta(j, k), b(i, l), 2 * delta(i, l), b(j, k)) +
                               combo2(-2 * delta(i, k), b(j, l), -2 * delta(j, l), b(i, k));
          record(mat_commutator(b(i, j), b(k, l)) - rhs, index_label("[J^ij,J^kl] i,j,k,l=", {i, j, k, l}));
        }

  if (max_deviation) *max_deviation = worst;
  return defect;
}

template <Scalar T>
GeneratorSet<T, Complex<T>> so8_generators(Chirality chirality, Sign sign_choice) {
  std::array<std::array<Mat8C<T>, 7>, 7> j_bi;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      j_bi[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = gamma2<T>(i, j, chirality);

  const Chirality other = chirality == Chirality::Left ? Chirality::Right : Chirality::Left;
  const Sign flipped = sign_choice == Sign::Plus ? Sign::Minus : Sign::Plus;
  const std::array<std::pair<Chirality, Sign>, 4> candidates = {{
      {chirality, sign_choice}, {chirality, flipped}, {other, sign_choice}, {other, flipped}}};

  std::vector<std::string> rejected;
  for (const auto& [family, sign] : candidates) {
    std::array<Mat8C<T>, 7> j_vec;
    for (int i = 1; i <= 7; ++i) {
      j_vec[static_cast<std::size_t>(i - 1)] = gamma<T>(i, family);
      if (sign == Sign::Minus) j_vec[static_cast<std::size_t>(i - 1)] = -j_vec[static_cast<std::size_t>(i - 1)];
    }
    const std::string tag = to_string(sign) + (family == Chirality::Left ? "iE_i" : "i1|E_i");
    if (auto defect = so8_relation_defect(j_vec, j_bi)) {
      rejected.push_back(tag + " (" + *defect + ")");
      continue;
    }

    GeneratorSet<T, Complex<T>> set;
    set.label = "so8";
    set.advertised_dimension = 28;
    set.tags["J^ij"] = "gamma^ij, " + to_string(chirality);
    set.tags["J^i"] = tag;
    set.tags["chirality"] = to_string(chirality);
    set.tags["relations"] = "pass";
    if (!rejected.empty()) {
      std::string r;
      for (const auto& x : rejected) r += (r.empty() ? "" : "; ") + x;
      set.tags["rejected"] = r;
    }
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) {
        set.names.push_back(index_label("J^", {i, j}));
        set.matrices.push_back(j_bi[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
      }
    for (int i = 1; i <= 7; ++i) {
      set.names.push_back(index_label("J^", {i}));
      set.matrices.push_back(j_vec[static_cast<std::size_t>(i - 1)]);
    }
    return set;
  }
  std::string msg = "no J^i choice satisfies the so(8) relations:";
  for (const auto& r : rejected) msg += " " + r;
  throw std::runtime_error(msg);
}

template <Scalar T>
Mat8<T> g2_generator(int i, int j) {
  check_index(i);
  check_index(j);
  Mat8<T> h;
  for (int k = 1; k <= 7; ++k) {
    const int f = fconst(i, j, k);
    if (f == 0) continue;
    h += T(f) * (left_op<T>(k) - right_op<T>(k));
  }
  h -= T(ratio<T>(3, 2)) * mat_commutator(left_op<T>(i), right_op<T>(j));
  return h;
}

template <Scalar T>
GeneratorSet<T> g2_generators() {
  GeneratorSet<T> set;
  set.label = "g2";
  set.advertised_dimension = 14;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      set.names.push_back(index_label("H_", {i, j}));
      set.matrices.push_back(g2_generator<T>(i, j));
    }
  return set;
}

template <Scalar T>
GeneratorSet<T> coset_generators(CosetKind kind, Sign sign) {
  GeneratorSet<T> set;
  set.label = to_string(kind);
  set.advertised_dimension = 7;
  set.tags["sign"] = to_string(sign);
  const T s(sign == Sign::Plus ? 1 : -1);
  const T half = ratio<T>(1, 2);
  for (int i = 1; i <= 7; ++i) {
    LRCombo<T> c;
    switch (kind) {
      case CosetKind::Vector:
        c = LRCombo<T>::single(i, T(s * half), T(-s * half));
        set.names.push_back(index_label(sign == Sign::Plus ? "K_v^+" : "K_v^-", {i}));
        break;
      case CosetKind::Spinor:
        c = LRCombo<T>::single(i, T(s * half), s);
        set.names.push_back(index_label(sign == Sign::Plus ? "K_s^+" : "K_s^-", {i}));
        break;
      case CosetKind::SpinorBar:
        c = LRCombo<T>::single(i, T(-s), T(-s * half));
        set.names.push_back(index_label(sign == Sign::Plus ? "Kbar_s^+" : "Kbar_s^-", {i}));
        break;
    }
    set.matrices.push_back(c.evaluate());
    set.combos.push_back(std::move(c));
  }
  return set;
}

template <Scalar T>
Report commutator_decompositions() {
  const T third = ratio<T>(1, 3);
  const T half = ratio<T>(1, 2);

  struct Identity {
    const char* name;
    const char* anchor;
  };
  const std::array<Identity, 4> ids = {{
      {"decomposition-left-left", "[E_i,E_j] = (4H_ij + 2f_ijk E_k + 4f_ijk 1|E_k)/3"},
      {"decomposition-right-right", "[1|E_i,1|E_j] = (4H_ij - 4f_ijk E_k - 2f_ijk 1|E_k)/3"},
      {"decomposition-left-right", "[E_i,1|E_j] = (-2H_ij + 2f_ijk E_k - 2f_ijk 1|E_k)/3"},
      {"g2-from-commutators", "H_ij = ([E_i,E_j] + [1|E_i,1|E_j] + [E_i,1|E_j])/2"},
  }};

  Report report;
  for (std::size_t n = 0; n < ids.size(); ++n) {
    CheckResult r;
    r.name = ids[n].name;
    r.anchor = ids[n].anchor;
    r.points_tested = 49;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        Mat8<T> fe, fr;
        for (int k = 1; k <= 7; ++k) {
          const int f = fconst(i, j, k);
          if (f == 0) continue;
          fe += T(f) * left_op<T>(k);
          fr += T(f) * right_op<T>(k);
        }
        const Mat8<T> h = g2_generator<T>(i, j);
        const Mat8<T> ll = mat_commutator(left_op<T>(i), left_op<T>(j));
        const Mat8<T> rr = mat_commutator(right_op<T>(i), right_op<T>(j));
        const Mat8<T> lr = mat_commutator(left_op<T>(i), right_op<T>(j));

        Mat8<T> diff;
        switch (n) {
          case 0:
            diff = ll - third * (T(4) * h + T(2) * fe + T(4) * fr);
            break;
          case 1:
            diff = rr - third * (T(4) * h - T(4) * fe - T(2) * fr);
            break;
          case 2:
            diff = lr - third * (T(-2) * h + T(2) * fe - T(2) * fr);
            break;
          default:
            diff = h - half * (ll + rr + lr);
            break;
        }
        r.max_deviation = std::max(r.max_deviation, diff.max_abs());
        if (!diff.is_zero() && !r.witness) {
          r.status = Status::Fail;
          r.witness = Witness{{}, {i, j}, std::to_string(diff.max_abs()), "largest entry of lhs - rhs"};
        }
      }
    report.checks.push_back(std::move(r));
  }
  return report;
}

#define SOFT7_INSTANTIATE(T)                                                                       \
  template Mat8C<T> gamma<T>(int, Chirality);                                                      \
  template Mat8C<T> gamma2<T>(int, int, Chirality);                                                \
  template Mat8C<T> dual_four_product<T>(int, int, int, Chirality);                                \
  template std::optional<std::string> so8_relation_defect<T>(                                      \
      const std::array<Mat8C<T>, 7>&, const std::array<std::array<Mat8C<T>, 7>, 7>&, double*);     \
  template GeneratorSet<T, Complex<T>> so8_generators<T>(Chirality, Sign);                         \
  template Mat8<T> g2_generator<T>(int, int);                                                      \
  template GeneratorSet<T> g2_generators<T>();                                                     \
  template GeneratorSet<T> coset_generators<T>(CosetKind, Sign);                                   \
  template Report commutator_decompositions<T>();

SOFT7_INSTANTIATE(Rational)
SOFT7_INSTANTIATE(double)

#undef SOFT7_INSTANTIATE

}  // namespace soft7
