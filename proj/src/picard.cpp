#include "h1lat/picard.hpp"

#include <deque>
#include <set>

#include "h1lat/cohomology.hpp"
#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"

namespace h1lat {

PicardLattice del_pezzo_pic(int d) {
  if (d < 1 || d > 6) fail("del_pezzo_pic: degree " + std::to_string(d) + " outside [1, 6]");
  const std::size_t n = static_cast<std::size_t>(10 - d);
  PicardLattice pic;
  pic.degree = d;
  pic.gram = IntMatrix::identity(n);
  pic.canonical.assign(n, Integer(1));
  pic.canonical[0] = -3;
  pic.labels.push_back("H");
  for (std::size_t i = 1; i < n; ++i) {
    pic.gram(i, i) = -1;
    pic.labels.push_back("E" + std::to_string(i));
  }
  return pic;
}

QLattice q_sublattice(const PicardLattice& pic) {
  // x.K = x^T (gram K)
  IntMatrix functional = IntMatrix::row_vector(pic.gram.apply(pic.canonical));
  QLattice q{pic, kernel_basis(functional), {}};
  q.gram = q.basis * pic.gram * q.basis.transpose();
  return q;
}

std::vector<IntVector> simple_roots(const PicardLattice& pic) {
  const std::size_t n = pic.rank();
  std::vector<IntVector> out;
  IntVector a(n);
  a[0] = 1;
  a[1] = a[2] = a[3] = -1;
  out.push_back(a);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    IntVector b(n);
    b[i] = 1;
    b[i + 1] = -1;
    out.push_back(b);
  }
  return out;
}

namespace {

// s_a(x) = x + (x.a) a
IntVector reflect(const PicardLattice& pic, const IntVector& alpha, const IntVector& x) {
  Integer c = pic.dot(x, alpha);
  IntVector y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * alpha[i];
  return y;
}

}  // namespace

std::vector<IntVector> roots(const PicardLattice& pic) {
  const auto simple = simple_roots(pic);
  std::set<IntVector> found(simple.begin(), simple.end());
  std::deque<IntVector> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    IntVector beta = std::move(queue.front());
    queue.pop_front();
    for (const auto& alpha : simple) {
      IntVector next = reflect(pic, alpha, beta);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {found.begin(), found.end()};
}

IntMatrix reflection(const PicardLattice& pic, std::span<const Integer> alpha) {
  const std::size_t n = pic.rank();
  if (alpha.size() != n) fail("reflection: vector length does not match the lattice rank");
  if (pic.dot(alpha, alpha) != -2 || pic.dot(alpha, pic.canonical) != 0)
    fail("reflection: " + to_string(alpha) + " is not a root");
  // R = I + a (gram a)^T
  IntVector ga = pic.gram.apply(alpha);
  IntMatrix r = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) += alpha[i] * ga[j];
  return r;
}

IntMatrix anticanonical_involution(const PicardLattice& pic) {
  if (pic.degree != 1 && pic.degree != 2)
    fail("anticanonical_involution: needs degree 1 or 2, got " + std::to_string(pic.degree));
  const long scale = 2 / pic.degree;
  const std::size_t n = pic.rank();
  IntVector gk = pic.gram.apply(pic.canonical);
  IntMatrix m = -IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += scale * pic.canonical[i] * gk[j];
  return m;
}

GLattice geiser_involution() {
  auto pic = del_pezzo_pic(2);
  return GLattice::make(pic.rank(), Cyclic{anticanonical_involution(pic)}, pic.gram);
}

GLattice bertini_involution() {
  auto pic = del_pezzo_pic(1);
  return GLattice::make(pic.rank(), Cyclic{anticanonical_involution(pic)}, pic.gram);
}

IntPolynomial q_char_poly(const PicardLattice& pic, const IntMatrix& action) {
  auto q = q_sublattice(pic);
  auto m = GLattice::make(pic.rank(), Cyclic{action}, pic.gram);
  auto mq = sublattice_action(m, q.basis);
  return char_poly(std::get<Cyclic>(mq.group()).generator);
}

Integer charpoly_order(const PicardLattice& pic, const GLattice& m) {
  if (m.rank() != pic.rank()) fail("charpoly_order: lattice rank does not match Pic");
  auto gi = m.cyclic_generator_index();
  if (!gi) fail("charpoly_order: group is not cyclic");
  if (!mpz_probab_prime_p(Integer(m.order()).get_mpz_t(), 25))
    fail("charpoly_order: group order " + std::to_string(m.order()) + " is not prime");
  const std::size_t fixed = invariants_h0(m).rows();
  if (fixed != 1)
    fail("charpoly_order: rank of the fixed sublattice is " + std::to_string(fixed) +
         ", expected 1");
  Integer value = abs(q_char_poly(pic, m.elements()[*gi]).eval(1));
  if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(pic.degree)))
    fail("charpoly_order: d = " + std::to_string(pic.degree) + " does not divide |chi(1)| = " +
         value.get_str());
  return value / pic.degree;
}

IntVector ConicBundlePic::fiber() const {
  IntVector f(rank());
  f[0] = 1;
  return f;
}

GLattice ConicBundlePic::lattice() const {
  return GLattice::make(rank(), Cyclic{delta}, gram);
}

GLattice ConicBundlePic::fiber_components() const {
  IntMatrix basis(rank() - 1, rank());
  for (std::size_t i = 0; i + 1 < rank(); ++i) basis(i, i) = 1;
  return sublattice_action(lattice(), basis);
}

ConicBundlePic dejonquieres(int genus, long section_square) {
  if (genus < 1) fail("dejonquieres: genus must be at least 1, got " + std::to_string(genus));
  const std::size_t singular = static_cast<std::size_t>(2 * genus + 2);
  const std::size_t n = singular + 2;
  const std::size_t s = n - 1;
  ConicBundlePic cb;
  cb.genus = genus;
  cb.gram = IntMatrix(n, n);
  cb.delta = IntMatrix(n, n);
  cb.labels.push_back("F");
  for (std::size_t i = 1; i <= singular; ++i) {
    cb.labels.push_back("F" + std::to_string(i) + "'");
    cb.gram(i, i) = -1;
  }
  cb.labels.push_back("S");
  cb.gram(0, s) = cb.gram(s, 0) = 1;
  cb.gram(s, s) = section_square;

  // Columns are images of basis vectors.
  cb.delta(0, 0) = 1;
  for (std::size_t i = 1; i <= singular; ++i) {
    cb.delta(0, i) = 1;
    cb.delta(i, i) = -1;
  }
  cb.delta(s, s) = 1;
  for (std::size_t i = 1; i <= singular; ++i) cb.delta(i, s) = -1;
  // (S - sum Fi' + cF)^2 = S^2 forces c = g + 1 whatever S^2 is.
  cb.delta(0, s) = genus + 1;

  if (!(cb.delta * cb.delta).is_identity())
    fail_verification("dejonquieres: constructed action is not an involution");
  if (cb.delta.transpose() * cb.gram * cb.delta != cb.gram)
    fail_verification("dejonquieres: constructed action does not preserve the form");
  return cb;
}

}  // namespace h1lat
