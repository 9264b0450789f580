#include "irrep/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "irrep/errors.hpp"

namespace irrep {

namespace {

constexpr int kMaxRetries = 20;

double round_to(double x, double quantum) { return std::round(x / quantum) * quantum; }

// Inverse iteration sharpens an eigenvector for a well-separated eigenvalue.
Eigen::VectorXcd refine_eigenvector(const Eigen::MatrixXcd& m, Complex lambda, Eigen::VectorXcd v, double shift) {
  const auto k = m.rows();
  Eigen::MatrixXcd shifted = m - (lambda + Complex(shift, shift)) * Eigen::MatrixXcd::Identity(k, k);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
  for (int it = 0; it < 3; ++it) {
    v = lu.solve(v);
    v /= v.norm();
  }
  return v;
}

}  // namespace

std::vector<Elem> CharacterTable::kernel(std::size_t row) const {
  std::vector<Elem> k;
  const Complex deg = table(row, 0);
  for (Elem x = 0; x < classes.class_of.size(); ++x) {
    if (std::abs(value(row, x) - deg) < tolerance) k.push_back(x);
  }
  return k;
}

bool CharacterTable::is_trivial_row(std::size_t row) const {
  for (Eigen::Index c = 0; c < table.cols(); ++c) {
    if (std::abs(table(row, c) - Complex(1.0, 0.0)) > tolerance) return false;
  }
  return true;
}

CharacterTable character_table(const FiniteGroup& g, double tolerance) {
  CharacterTable t;
  t.tolerance = tolerance;
  t.group_order = g.order();
  t.classes = conjugacy_classes(g);
  const auto& classes = t.classes.classes;
  const auto k = static_cast<Eigen::Index>(classes.size());
  const auto n = static_cast<double>(g.order());

  // combo(j, l) = sum_i r_i #{(x, y) in C_i x C_j : x y = z_l}, a random
  // combination of the class-sum structure matrices.
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> coeff(0.0, 1.0);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<double> r(classes.size());
    for (auto& x : r) x = coeff(rng);
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index l = 0; l < k; ++l) {
      const Elem z = classes[l].front();
      for (Elem x = 0; x < g.order(); ++x) {
        const Elem y = g.mul(g.inv(x), z);
        combo(static_cast<Eigen::Index>(t.classes.class_of[y]), l) += r[t.classes.class_of[x]];
      }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
    if (es.info() != Eigen::Success) continue;
    const Eigen::VectorXcd lambda = es.eigenvalues();
    double scale = 1.0;
    for (Eigen::Index a = 0; a < k; ++a) scale = std::max(scale, std::abs(lambda(a)));
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = a + 1; b < k; ++b) gap = std::min(gap, std::abs(lambda(a) - lambda(b)));
    if (gap < 1e-6 * scale) continue;

    const Eigen::MatrixXcd combo_c = combo.cast<Complex>();
    const Eigen::MatrixXcd vectors = es.eigenvectors();
    struct Row {
      std::size_t degree;
      std::vector<Complex> values;
    };
    std::vector<Row> rows;
    bool ok = true;
    for (Eigen::Index a = 0; a < k && ok; ++a) {
      Eigen::VectorXcd w = refine_eigenvector(combo_c, lambda(a), vectors.col(a), std::isfinite(gap) ? gap * 1e-3 : 1e-3);
      if (std::abs(w(0)) < 1e-12) {
        ok = false;
        break;
      }
      w /= w(0);
      double weight = 0;
      for (Eigen::Index l = 0; l < k; ++l) weight += std::norm(w(l)) / static_cast<double>(classes[l].size());
      const double deg_real = std::sqrt(n / weight);
      const double deg = std::round(deg_real);
      if (std::abs(deg - deg_real) > 1e-6 * std::max(1.0, deg)) {
        ok = false;
        break;
      }
      Row r{static_cast<std::size_t>(deg), std::vector<Complex>(k)};
      for (Eigen::Index l = 0; l < k; ++l) r.values[l] = deg * w(l) / static_cast<double>(classes[l].size());
      r.values[0] = Complex(deg, 0.0);
      rows.push_back(std::move(r));
    }
    if (!ok) continue;

    auto key_less = [](const Row& a, const Row& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      for (std::size_t c = 0; c < a.values.size(); ++c) {
        const double ar = round_to(a.values[c].real(), 1e-6), br = round_to(b.values[c].real(), 1e-6);
        if (ar != br) return ar > br;
        const double ai = round_to(a.values[c].imag(), 1e-6), bi = round_to(b.values[c].imag(), 1e-6);
        if (ai != bi) return ai > bi;
      }
      return false;
    };
    std::sort(rows.begin(), rows.end(), key_less);
    t.table.resize(k, k);
    t.degrees.clear();
    for (Eigen::Index r = 0; r < k; ++r) {
      t.degrees.push_back(rows[r].degree);
      for (Eigen::Index c = 0; c < k; ++c) t.table(r, c) = rows[r].values[c];
    }
    std::size_t sum_sq = 0;
    for (auto d : t.degrees) sum_sq += d * d;
    if (sum_sq != g.order()) continue;
    return t;
  }
  throw ConsistencyError("class-sum eigenvalues failed to separate after retries; check the tolerance");
}

CharacterTableCheck check_character_table(const CharacterTable& t) {
  CharacterTableCheck c;
  const auto k = t.table.rows();
  const double n = static_cast<double>(t.group_order);
  double sum_sq = 0;
  for (auto d : t.degrees) sum_sq += static_cast<double>(d * d);
  c.degree_sum_error = std::abs(sum_sq - n);
  // U(r, a) = sqrt(|C_a| / n) chi_r(a) is unitary exactly when both
  // orthogonality relations hold.
  Eigen::MatrixXcd u(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index a = 0; a < k; ++a)
      u(r, a) = std::sqrt(static_cast<double>(t.classes.classes[a].size()) / n) * t.table(r, a);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(k, k);
  c.row_orthogonality = (u * u.adjoint() - eye).cwiseAbs().maxCoeff();
  c.column_orthogonality = (u.adjoint() * u - eye).cwiseAbs().maxCoeff();
  for (Eigen::Index r = 0; r < k; ++r) {
    c.first_column = std::max(c.first_column, std::abs(t.table(r, 0) - static_cast<double>(t.degrees[r])));
  }
  return c;
}

std::optional<std::size_t> invariant_faithful_row(const CharacterTable& t, std::span<const Elem> embedding,
                                                  std::size_t parent_order, std::span<const ElementMap> maps) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    std::vector<Elem> kernel;
    for (auto x : t.kernel(r)) kernel.push_back(embedding[x]);
    if (kernel.size() > 1) kernel = invariant_core(kernel, parent_order, maps);
    if (kernel.size() == 1) return r;
  }
  return std::nullopt;
}

std::optional<std::size_t> has_faithful_irreducible(const FiniteGroup& g, const CharacterTable& t,
                                                    std::span<const ElementMap> automorphisms) {
  std::vector<Elem> identity(g.order());
  for (Elem x = 0; x < g.order(); ++x) identity[x] = x;
  return invariant_faithful_row(t, identity, g.order(), automorphisms);
}

double scalar_distance(const Eigen::MatrixXcd& m) {
  const double norm = m.norm();
  if (norm == 0) return 0;
  const Complex lambda = m.trace() / static_cast<double>(m.rows());
  return (m - lambda * Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm() / norm;
}

Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

// (R(g) W) where R is the left regular representation: row g*h receives row h.
Eigen::MatrixXcd left_translate(const FiniteGroup& g, Elem s, const Eigen::MatrixXcd& w) {
  Eigen::MatrixXcd out(w.rows(), w.cols());
  for (Elem h = 0; h < g.order(); ++h) out.row(g.mul(s, h)) = w.row(h);
  return out;
}

std::size_t commutant_dimension(const std::vector<Eigen::MatrixXcd>& gens, std::size_t d) {
  const auto dd = static_cast<Eigen::Index>(d * d);
  if (gens.empty()) return d * d;
  Eigen::MatrixXcd system(dd * static_cast<Eigen::Index>(gens.size()), dd);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    // vec(B X - X B) = (I (x) B - B^T (x) I) vec(X)
    system.block(static_cast<Eigen::Index>(i) * dd, 0, dd, dd) =
        kronecker(eye, gens[i]) - kronecker(gens[i].transpose(), eye);
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(system);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-8 * std::max(1.0, s.size() ? s(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++rank;
  return d * d - rank;
}

}  // namespace

IrrepMatrices construct_irreducible_rep(const FiniteGroup& g, const CharacterTable& t, std::size_t row) {
  const std::size_t n = g.order();
  if (n > kMaxRegularRepOrder) {
    throw InputError("explicit representations need |G| <= " + std::to_string(kMaxRegularRepOrder));
  }
  if (row >= t.size()) throw InputError("character row out of range");
  const std::size_t d = t.degrees[row];
  const auto ni = static_cast<Eigen::Index>(n);

  // Central idempotent (d/|G|) sum_g conj(chi(g)) R(g); entry (a, h) = (d/|G|) conj(chi(a h^-1)).
  Eigen::MatrixXcd proj(ni, ni);
  const double scale = static_cast<double>(d) / static_cast<double>(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem h = 0; h < n; ++h) proj(a, h) = scale * std::conj(t.value(row, g.mul(a, g.inv(h))));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> pes(proj);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ni; ++i)
    if (pes.eigenvalues()(i) > 0.5) keep.push_back(i);
  if (keep.size() != d * d) throw ConsistencyError("isotypic component has the wrong dimension");
  Eigen::MatrixXcd q(ni, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = pes.eigenvectors().col(keep[i]);

  std::mt19937_64 rng(7781);
  std::normal_distribution<double> gauss;
  for (int attempt = 1; attempt <= kMaxRetries; ++attempt) {
    Eigen::MatrixXcd w;
    if (d == 1) {
      w = q;
    } else {
      // Random Hermitian element of the right regular algebra, which acts on
      // the isotypic component as the full commutant of the left action.
      std::vector<Complex> c(n);
      for (auto& x : c) x = Complex(gauss(rng), gauss(rng));
      Eigen::MatrixXcd xq = Eigen::MatrixXcd::Zero(ni, q.cols());
      for (Elem k = 0; k < n; ++k) {
        const Complex ck = 0.5 * (c[k] + std::conj(c[g.inv(k)]));
        const Elem kinv = g.inv(k);
        for (Elem h = 0; h < n; ++h) xq.row(g.mul(h, kinv)) += ck * q.row(h);
      }
      Eigen::MatrixXcd herm = q.adjoint() * xq;
      herm = 0.5 * (herm + herm.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hes(herm);
      const auto& ev = hes.eigenvalues();
      const double s = 1.0 + ev.cwiseAbs().maxCoeff();
      const auto di = static_cast<Eigen::Index>(d);
      const bool tight = ev(di - 1) - ev(0) < 1e-8 * s;
      const bool separated = ev(di) - ev(di - 1) > 1e-6 * s;
      if (!tight || !separated) continue;
      w = q * hes.eigenvectors().leftCols(di);
      // Re-orthonormalize against rounding.
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(w);
      w = qr.householderQ() * Eigen::MatrixXcd::Identity(ni, di);
    }
    IrrepMatrices rep;
    rep.degree = d;
    rep.split_attempts = static_cast<std::size_t>(attempt);
    rep.images.resize(n);
    const Eigen::MatrixXcd w_adj = w.adjoint();
    for (Elem s = 0; s < n; ++s) rep.images[s] = w_adj * left_translate(g, s, w);
    std::vector<Eigen::MatrixXcd> gen_images;
    for (auto s : g.generators()) gen_images.push_back(rep.images[s]);
    rep.commutant_dimension = commutant_dimension(gen_images, d);
    if (rep.commutant_dimension != 1) continue;
    rep.character.resize(t.table.cols());
    for (Eigen::Index c = 0; c < t.table.cols(); ++c) rep.character[c] = t.table(row, c);
    for (Elem s = 0; s < n; ++s) {
      if (std::abs(rep.images[s].trace() - t.value(row, s)) > 1e-6) {
        throw ConsistencyError("constructed representation does not afford the requested character");
      }
    }
    return rep;
  }
  throw ConsistencyError("commutant dimension stayed above 1 after retries");
}

IrrepCheck check_irrep(const FiniteGroup& g, const CharacterTable& t, const IrrepMatrices& rep) {
  IrrepCheck c;
  const auto d = static_cast<Eigen::Index>(rep.degree);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x) {
    c.unitarity = std::max(c.unitarity, (rep.images[x] * rep.images[x].adjoint() - eye).cwiseAbs().maxCoeff());
    c.character = std::max(c.character, std::abs(rep.images[x].trace() - rep.character[t.classes.class_of[x]]));
  }
  auto mult = [&](Elem x, Elem y) {
    c.multiplicativity = std::max(
        c.multiplicativity, (rep.images[x] * rep.images[y] - rep.images[g.mul(x, y)]).cwiseAbs().maxCoeff());
  };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) mult(x, y);
  c.min_pairwise_distance = std::numeric_limits<double>::infinity();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      c.min_pairwise_distance = std::min(c.min_pairwise_distance, (rep.images[x] - rep.images[y]).norm());
  return c;
}

}  // namespace irrep
