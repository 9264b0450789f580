#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "irrep/group.hpp"

namespace irrep {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-8;

/// Irreducible complex characters computed from class-sum structure constants.
/// Columns follow `classes` (ordered by least element, identity first); rows
/// are sorted by degree, then by values in descending lexicographic order,
/// which puts the trivial character first.
struct CharacterTable {
  ConjugacyClasses classes;
  std::vector<std::size_t> degrees;
  Eigen::MatrixXcd table;  // rows = characters, cols = classes
  double tolerance = kDefaultTolerance;
  std::size_t group_order = 0;

  std::size_t size() const { return degrees.size(); }
  Complex value(std::size_t row, Elem x) const { return table(row, classes.class_of[x]); }
  /// {x : |chi(x) - chi(1)| < tolerance}
  std::vector<Elem> kernel(std::size_t row) const;
  bool is_trivial_row(std::size_t row) const;
};

/// Burnside's class-sum method with a fixed-seed random combination of the
/// class matrices; retries with fresh coefficients (up to 20 times) until the
/// eigenvalues separate. Throws ConsistencyError if they never do.
CharacterTable character_table(const FiniteGroup& g, double tolerance = kDefaultTolerance);

struct CharacterTableCheck {
  double degree_sum_error = 0;   // |sum deg^2 - |G||
  double row_orthogonality = 0;  // max deviation from delta_rs
  double column_orthogonality = 0;
  double first_column = 0;       // max |chi(1) - deg|
  bool passes(double tol) const {
    return degree_sum_error < tol && row_orthogonality < tol && column_orthogonality < tol && first_column < tol;
  }
};

CharacterTableCheck check_character_table(const CharacterTable& t);

/// First row whose kernel, intersected over the group generated by `maps`,
/// is trivial. `embedding` sends the table's group into the parent group on
/// which the maps act (identity embedding when the table is of the parent).
std::optional<std::size_t> invariant_faithful_row(const CharacterTable& t, std::span<const Elem> embedding,
                                                  std::size_t parent_order, std::span<const ElementMap> maps);

/// Without maps: first row with trivial kernel. With the generators of an
/// automorphism group: first row whose kernel has trivial core.
std::optional<std::size_t> has_faithful_irreducible(const FiniteGroup& g, const CharacterTable& t,
                                                    std::span<const ElementMap> automorphisms = {});

/// Explicit unitary matrices for one irreducible character.
struct IrrepMatrices {
  std::size_t degree = 0;
  std::vector<Eigen::MatrixXcd> images;  // one per group element
  std::vector<Complex> character;        // per class
  std::size_t commutant_dimension = 0;
  std::size_t split_attempts = 0;
};

inline constexpr std::size_t kMaxRegularRepOrder = 512;

/// Projects the regular representation onto the isotypic component of `row`,
/// splits it with eigenspaces of a random Hermitian commutant element and
/// keeps one irreducible block. Certifies commutant dimension 1 and the
/// character. Throws InputError if |G| > 512.
IrrepMatrices construct_irreducible_rep(const FiniteGroup& g, const CharacterTable& t, std::size_t row);

struct IrrepCheck {
  double unitarity = 0;
  double multiplicativity = 0;
  double character = 0;
  double min_pairwise_distance = 0;  // over distinct elements; infinity for |G| = 1
};

/// Unitarity, multiplicativity and character agreement over all elements and
/// pairs (|G| <= 512 keeps this cheap).
IrrepCheck check_irrep(const FiniteGroup& g, const CharacterTable& t, const IrrepMatrices& rep);

/// Relative Frobenius distance of a square matrix from the line of scalar
/// multiples of the identity.
double scalar_distance(const Eigen::MatrixXcd& m);

Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace irrep
