#ifndef BOREL_ORBITS_HPP
#define BOREL_ORBITS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "borel/chops.hpp"
#include "borel/liestruct.hpp"
#include "borel/linalg.hpp"

namespace borel::orbits {

using chops::HessenbergPoint;
using chops::NongenericError;

template <class S>
Matrix<S> principal_nilpotent(int n) {
  Matrix<S> e(n, n);
  for (int i = 0; i + 1 < n; ++i) e(i, i + 1) = scalar_traits<S>::one();
  return e;
}

/// Normal form meeting each generic coadjoint orbit once: diagonal
/// (k_1,...,k_{n-R},...,k_2,k_1) symmetric across the anti-diagonal, unit
/// superdiagonal, unit anti-diagonal entries below the diagonal, zero
/// elsewhere.
struct CrossSectionPoint {
  int n = 0;
  std::vector<Rational> kappa;
  Matrix<Rational> f;
};

inline CrossSectionPoint build_cross_section(int n, const std::vector<Rational>& kappa) {
  const int R = n / 2;
  if (static_cast<int>(kappa.size()) != n - R)
    throw std::invalid_argument("build_cross_section: kappa must have n - R entries");
  Matrix<Rational> f(n, n);
  for (int i = 0; i < n; ++i) f(i, i) = kappa[std::min(i, n - 1 - i)];
  for (int i = 0; i + 1 < n; ++i) f(i, i + 1) = Rational(1);
  for (int r = 1; r <= R; ++r) f(n - r, r - 1) = Rational(1);
  CrossSectionPoint cs{n, kappa, std::move(f)};
  for (int r = 1; r <= R; ++r)
    if (chops::chop_E(cs.f, 0, r).is_zero())
      throw std::logic_error("build_cross_section: cross-section point not generic");
  return cs;
}

/// Bases of the polarization h = a_diamond + s + v+ and of its trace-form
/// annihilator h_perp = (a_diamond-perp in a) + transpose(v-) inside b-.
struct PolarizationData {
  int n = 0;
  std::vector<Matrix<Rational>> h;
  std::vector<Matrix<Rational>> h_perp;
  std::vector<Matrix<Rational>> a_diamond;
  std::vector<Matrix<Rational>> s;
  std::vector<Matrix<Rational>> v_plus;
};

inline PolarizationData polarization_data(int n) {
  lie::Decomposition dec = lie::build_decomposition(n);
  PolarizationData pd;
  pd.n = n;
  pd.a_diamond = lie::a_diamond_basis(n);
  pd.s = lie::slot_basis(n, dec.s);
  pd.v_plus = lie::slot_basis(n, dec.v_plus);
  pd.h = pd.a_diamond;
  pd.h.insert(pd.h.end(), pd.s.begin(), pd.s.end());
  pd.h.insert(pd.h.end(), pd.v_plus.begin(), pd.v_plus.end());
  for (int r = 1; r <= dec.R; ++r) {
    Matrix<Rational> m(n, n);
    m(r - 1, r - 1) = Rational(1);
    m(n - r, n - r) = Rational(-1);
    pd.h_perp.push_back(std::move(m));
  }
  for (auto [i, j] : dec.v_minus)
    pd.h_perp.push_back(Matrix<Rational>::unit(n, j, i));
  return pd;
}

namespace detail {

inline std::vector<std::vector<Rational>> flatten_all(
    const std::vector<Matrix<Rational>>& ms) {
  std::vector<std::vector<Rational>> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(flatten(m));
  return out;
}

/// Basis of b = upper triangular including the diagonal.
inline std::vector<lie::IJ> b_slots(int n) {
  std::vector<lie::IJ> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) slots.push_back({i, j});
  return slots;
}

}  // namespace detail

struct IsotropyReport {
  int n = 0;
  int kernel_dim = 0;
  bool kernel_equals_a_diamond = false;
  bool a_diamond_annihilates = false;
  bool passed() const { return kernel_equals_a_diamond && a_diamond_annihilates; }
};

/// The Lie algebra isotropy of a cross-section point: the kernel of
/// xi -> proj_{b-}([xi, f - eps]) on b must be exactly a_diamond.
inline IsotropyReport isotropy_check(const CrossSectionPoint& cs) {
  const int n = cs.n;
  IsotropyReport rep;
  rep.n = n;
  Matrix<Rational> base = cs.f - principal_nilpotent<Rational>(n);
  auto slots = detail::b_slots(n);
  const int dim_b = static_cast<int>(slots.size());
  // columns: b basis; rows: lower-triangular image coordinates
  Matrix<Rational> a(dim_b, dim_b);
  for (int k = 0; k < dim_b; ++k) {
    Matrix<Rational> im = lie::project(
        commutator(lie::slot(n, slots[k]), base), lie::Part::BMinus);
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) a(row++, k) = im(i, j);
  }
  auto kernel = nullspace(a);
  rep.kernel_dim = static_cast<int>(kernel.size());
  // expand coefficient vectors back to matrices
  std::vector<std::vector<Rational>> kernel_mats;
  for (const auto& c : kernel) {
    Matrix<Rational> m(n, n);
    for (int k = 0; k < dim_b; ++k) m(slots[k].first, slots[k].second) = c[k];
    kernel_mats.push_back(flatten(m));
  }
  auto ad_basis = detail::flatten_all(lie::a_diamond_basis(n));
  rep.kernel_equals_a_diamond =
      kernel_mats.empty() ? ad_basis.empty() : span_equal(kernel_mats, ad_basis);
  rep.a_diamond_annihilates = true;
  for (const auto& v : lie::a_diamond_basis(n)) {
    Matrix<Rational> im =
        lie::project(commutator(v, base), lie::Part::BMinus);
    if (im != Matrix<Rational>(n, n)) rep.a_diamond_annihilates = false;
  }
  return rep;
}

struct PukanszkyReport {
  int n = 0;
  bool stability = false;       // [a_diamond, h] contained in h
  bool isotropic = false;       // (f, [h, h]) = 0
  bool dimension = false;       // 2 dim h = dim b + dim b_f
  bool fiber_spanned = false;   // span proj_{b-}[h, f - eps] = h_perp
  bool passed() const { return stability && isotropic && dimension && fiber_spanned; }
};

/// Exact verification of the four real-polarization conditions at f(kappa).
inline PukanszkyReport pukanszky_check(int n, const std::vector<Rational>& kappa) {
  CrossSectionPoint cs = build_cross_section(n, kappa);
  PolarizationData pd = polarization_data(n);
  PukanszkyReport rep;
  rep.n = n;

  auto h_span = detail::flatten_all(pd.h);
  rep.stability = true;
  for (const auto& a : pd.a_diamond)
    for (const auto& hb : pd.h)
      if (!span_contains(h_span, flatten(commutator(a, hb)))) rep.stability = false;

  rep.isotropic = true;
  for (size_t i = 0; i < pd.h.size(); ++i)
    for (size_t j = i + 1; j < pd.h.size(); ++j)
      if (!(cs.f * commutator(pd.h[i], pd.h[j])).trace().is_zero())
        rep.isotropic = false;

  const int R = n / 2;
  rep.dimension =
      2 * static_cast<int>(pd.h.size()) == n * (n + 1) / 2 + (n - R);

  Matrix<Rational> base = cs.f - principal_nilpotent<Rational>(n);
  std::vector<std::vector<Rational>> moved;
  for (const auto& hb : pd.h)
    moved.push_back(
        flatten(lie::project(commutator(hb, base), lie::Part::BMinus)));
  rep.fiber_spanned = span_equal(moved, detail::flatten_all(pd.h_perp));
  return rep;
}

/// Orbit parameters from the Casimir values of a generic point: partial sums
/// k_1 + ... + k_r are read off Tr X and the chop-root sums -E_{1,r}/E_{0,r},
/// and the middle parameter closes the trace. The recovered kappa is
/// certified against its defining post-condition (equal Tr and I_{1,r}).
inline std::vector<Rational> kappa_from_casimirs(const HessenbergPoint& x) {
  const int n = x.n();
  const int R = n / 2;
  const int levels = (n - 1) / 2;
  Rational tr = x.X.trace();
  std::vector<Rational> partial(levels + 1, Rational(0));  // partial[r] = k_1+..+k_r
  for (int r = 1; r <= levels; ++r) {
    Rational e0 = chops::chop_E(x.X, 0, r);
    if (e0.is_zero())
      throw NongenericError("kappa_from_casimirs: E_{0," + std::to_string(r) +
                            "} vanishes");
    Rational root_sum = -(chops::chop_E(x.X, 1, r) / e0);
    partial[r] = (tr - root_sum) / Rational(2);
  }
  std::vector<Rational> kappa(n - R, Rational(0));
  for (int r = 1; r <= levels; ++r) kappa[r - 1] = partial[r] - partial[r - 1];
  if (n % 2 == 1) {
    kappa[n - R - 1] = tr - Rational(2) * partial[levels];
  } else {
    kappa[n - R - 1] = tr / Rational(2) - partial[levels];
  }
  // post-condition: the cross-section point carries the same Casimirs
  CrossSectionPoint cs = build_cross_section(n, kappa);
  if (cs.f.trace() != tr)
    throw std::logic_error("kappa_from_casimirs: trace mismatch");
  for (int r = 1; r <= levels; ++r) {
    Rational lhs = chops::chop_E(cs.f, 1, r) / chops::chop_E(cs.f, 0, r);
    Rational rhs = chops::chop_E(x.X, 1, r) / chops::chop_E(x.X, 0, r);
    if (lhs != rhs)
      throw std::logic_error("kappa_from_casimirs: I_{1,r} mismatch");
  }
  return kappa;
}

// ---------------------------------------------------------------------------
// Canonical chart

/// Coordinates of one Hessenberg point in the polarization-adapted chart:
/// orbit parameters a, configuration coordinates q (below the anti-diagonal
/// plus the diagonal q0), momenta p (above the anti-diagonal plus the
/// anti-diagonal p0).
struct ChartPoint {
  int n = 0;
  std::vector<Rational> a;                        // a_1 .. a_{n-R}
  std::vector<Rational> q0, p0;                   // index r = 1..R
  std::map<std::pair<int, int>, Rational> q, p;   // key (k, m), k >= 1
};

struct ChartSlots {
  std::vector<std::pair<int, int>> q_keys, p_keys;  // (k, m) with k >= 1
  int a_count = 0, q0_count = 0, p0_count = 0;
};

inline ChartSlots chart_slots(int n) {
  const int R = n / 2;
  ChartSlots cs;
  cs.a_count = n - R;
  cs.q0_count = R;
  cs.p0_count = R;
  for (int m = 1; m <= R; ++m)
    for (int k = 1; k <= n - 2 * m; ++k) {
      cs.q_keys.push_back({k, m});
      cs.p_keys.push_back({k, m});
    }
  return cs;
}

inline HessenbergPoint chart_pack(const ChartPoint& c) {
  const int n = c.n;
  const int R = n / 2;
  ChartSlots slots = chart_slots(n);
  if (static_cast<int>(c.a.size()) != slots.a_count ||
      static_cast<int>(c.q0.size()) != slots.q0_count ||
      static_cast<int>(c.p0.size()) != slots.p0_count)
    throw std::invalid_argument("chart_pack: wrong number of diagonal slots");
  for (auto key : slots.q_keys)
    if (!c.q.count(key)) throw std::invalid_argument("chart_pack: missing q slot");
  for (auto key : slots.p_keys)
    if (!c.p.count(key)) throw std::invalid_argument("chart_pack: missing p slot");

  Matrix<Rational> x(n, n);
  for (int i = 0; i + 1 < n; ++i) x(i, i + 1) = Rational(1);
  for (int i = 0; i < n; ++i) {
    if (i < R) x(i, i) = c.a[i] + c.q0[i];
    else if (i >= n - R) x(i, i) = c.a[n - 1 - i] - c.q0[n - 1 - i];
    else x(i, i) = c.a[R];  // center of an odd-size matrix
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const int s = i + j;
      if (s < n - 1) x(i, j) = c.p.at({i - j, j + 1});
      else if (s == n - 1) x(i, j) = c.p0[j];
      else x(i, j) = c.q.at({i + j + 1 - n, n - i});
    }
  return HessenbergPoint(std::move(x));
}

inline ChartPoint chart_unpack(const HessenbergPoint& xp) {
  const int n = xp.n();
  const int R = n / 2;
  const Matrix<Rational>& x = xp.X;
  ChartPoint c;
  c.n = n;
  for (int r = 0; r < R; ++r) {
    c.a.push_back((x(r, r) + x(n - 1 - r, n - 1 - r)) / Rational(2));
    c.q0.push_back((x(r, r) - x(n - 1 - r, n - 1 - r)) / Rational(2));
    c.p0.push_back(x(n - 1 - r, r));
  }
  if (n % 2 == 1) c.a.push_back(x((n - 1) / 2, (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const int s = i + j;
      if (s < n - 1) c.p[{i - j, j + 1}] = x(i, j);
      else if (s > n - 1) c.q[{i + j + 1 - n, n - i}] = x(i, j);
    }
  return c;
}

/// Membership of (b, l) in the moment-map fiber over f: the coadjoint
/// translate of l must land in the affine space f + span(h_perp).
inline bool fiber_membership(const Matrix<Rational>& b, const HessenbergPoint& l,
                             const CrossSectionPoint& f) {
  const int n = f.n;
  if (!b.square() || b.rows() != n || l.n() != n)
    throw std::invalid_argument("fiber_membership: size mismatch");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j)
      if (!b(i, j).is_zero())
        throw std::invalid_argument("fiber_membership: b must be upper triangular");
    if (b(i, i) <= Rational(0))
      throw std::invalid_argument("fiber_membership: diagonal must be positive");
  }
  Matrix<Rational> eps = principal_nilpotent<Rational>(n);
  Matrix<Rational> moved =
      lie::project(solve(b, (l.X - eps) * b), lie::Part::BMinus) + eps;
  PolarizationData pd = polarization_data(n);
  return span_contains(detail::flatten_all(pd.h_perp), flatten(moved - f.f));
}

}  // namespace borel::orbits

#endif
