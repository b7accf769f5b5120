#pragma once

#include <string>
#include <vector>

#include "h1lat/group.hpp"
#include "h1lat/int_matrix.hpp"
#include "h1lat/polynomial.hpp"

namespace h1lat {

/// Picard lattice of a del Pezzo surface of degree d: Z^(10-d) with basis
/// H, E1, ..., E(9-d), Gram diag(1, -1, ..., -1) and canonical class
/// K = -3H + E1 + ... + E(9-d).
struct PicardLattice {
  int degree = 0;
  IntMatrix gram;
  IntVector canonical;
  std::vector<std::string> labels;

  std::size_t rank() const { return gram.rows(); }
  Integer dot(std::span<const Integer> x, std::span<const Integer> y) const {
    return bilinear(gram, x, y);
  }
};

/// Throws for d outside [1, 6].
PicardLattice del_pezzo_pic(int d);

/// Q = K^perp inside Pic.
struct QLattice {
  PicardLattice parent;
  IntMatrix basis;  // rows, parent coordinates
  IntMatrix gram;   // induced form, negative definite
};

QLattice q_sublattice(const PicardLattice& pic);

/// H - E1 - E2 - E3, E1 - E2, ..., E(8-d) - E(9-d).
std::vector<IntVector> simple_roots(const PicardLattice& pic);

/// Every a with a.a = -2 and a.K = 0, by closing the simple roots under the
/// simple reflections. Sorted lexicographically, no duplicates.
std::vector<IntVector> roots(const PicardLattice& pic);

/// Matrix of x -> x + (x.a) a. Throws "not a root" unless a.a = -2, a.K = 0.
IntMatrix reflection(const PicardLattice& pic, std::span<const Integer> alpha);

/// x -> (2/d)(x.K)K - x for d in {1, 2}: fixes K, acts as -1 on Q.
IntMatrix anticanonical_involution(const PicardLattice& pic);

/// Pic(dP2) with the Geiser involution.
GLattice geiser_involution();
/// Pic(dP1) with the Bertini involution.
GLattice bertini_involution();

/// Characteristic polynomial of an isometry fixing K, restricted to Q.
IntPolynomial q_char_poly(const PicardLattice& pic, const IntMatrix& action);

/// |chi_Q(1)| / d for a cyclic action of prime order with rank Pic^G = 1.
/// This is the predicted order of H^1(G, Pic).
Integer charpoly_order(const PicardLattice& pic, const GLattice& m);

/// Picard lattice of a de Jonquieres conic bundle of genus g: basis
/// F, F1', ..., F(2g+2)', S (rank 2g+4); F^2 = 0, Fi'^2 = -1, S.F = 1,
/// S^2 = section_square, all other products 0. The involution swaps the
/// components of every singular fiber: F -> F, Fi' -> F - Fi',
/// S -> S - sum Fi' + (g+1) F.
struct ConicBundlePic {
  int genus = 0;
  IntMatrix gram;
  IntMatrix delta;
  std::vector<std::string> labels;

  std::size_t rank() const { return gram.rows(); }
  IntVector fiber() const;
  /// Pic with the involution.
  GLattice lattice() const;
  /// Span of F and the Fi' (rank 2g+3) with the restricted involution.
  GLattice fiber_components() const;
};

ConicBundlePic dejonquieres(int genus, long section_square = -1);

}  // namespace h1lat
