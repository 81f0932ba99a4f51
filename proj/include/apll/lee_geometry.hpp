#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apll/abelian_group.hpp"
#include "apll/hermite.hpp"

namespace apll {

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// |S(n, r)| = sum_i 2^i C(n, i) C(r, i). Throws std::overflow_error past 64 bits.
std::uint64_t sphere_size(int n, int r);

/// Lee sphere about the origin, one point per row in lexicographic order.
struct LeeSphere {
  int n = 0;
  int r = 0;
  IntMatrix points;
};

/// Throws limit_exceeded when n * |S(n, r)| exceeds `budget`.
LeeSphere enumerate_sphere(int n, int r, std::uint64_t budget = 10'000'000);

/// Lee (l1) weight of an integer vector.
std::int64_t lee_weight(const IntVector& v);

/// Full-rank sublattice of Z^n stored by its Hermite normal form basis
/// (rows are generators, upper triangular, positive diagonal).
class LeeLattice {
 public:
  /// Throws std::invalid_argument unless the rows span a rank-n lattice.
  static LeeLattice from_generators(const IntMatrix& generators);

  int dimension() const { return static_cast<int>(basis_.cols()); }
  const IntMatrix& basis() const { return basis_; }
  std::int64_t det_abs() const { return det_abs_; }

  bool contains(const IntVector& v) const;
  /// Canonical representative of v + L in the box  prod [0, basis(i,i)).
  IntVector reduce(const IntVector& v) const;
  /// Mixed-radix index of the coset of v, in [0, det_abs).
  std::int64_t coset_index(const IntVector& v) const;
  IntVector coset_representative(std::int64_t index) const;
  /// Integer coordinates k with  v = k^T basis ; v must be in the lattice.
  IntVector coordinates(const IntVector& v) const;

  bool operator==(const LeeLattice& other) const { return basis_ == other.basis_; }

 private:
  explicit LeeLattice(IntMatrix hnf);
  IntMatrix basis_;
  std::int64_t det_abs_ = 1;
};

/// Kernel of  x -> sum_i x_i * images[i]  from Z^n to G, with n = images.size().
LeeLattice lattice_from_code(const GroupSpec& g, std::span<const GroupElement> images);

/// Minimum Lee weight of every coset of Z^n / L, found by breadth-first
/// search over the quotient with unit steps +-e_j.
struct CosetTable {
  std::vector<std::int64_t> moduli;        // HNF diagonal; coset index is mixed radix over it
  std::vector<int> weight;                 // by coset index
  std::vector<std::int32_t> parent;        // predecessor coset in the search tree; -1 at the origin
  std::vector<std::int8_t> parent_step;    // +-(j+1): step taken from the predecessor; 0 at the origin
  int covering_radius = 0;

  /// A minimum-weight vector in the given coset.
  IntVector shortest_vector(std::int64_t coset) const;
};

/// Throws limit_exceeded when det_abs exceeds max_cosets.
CosetTable coset_weights(const LeeLattice& lattice, std::int64_t max_cosets = 1'000'000);
int covering_radius(const LeeLattice& lattice, std::int64_t max_cosets = 1'000'000);

/// Minimum weight over non-zero lattice vectors. Scans the box [-B, B]^n with
/// B = 2 * covering_radius + 1 and re-confirms the minimum on [-(B+2), B+2]^n.
/// Requires det_abs >= 2; throws limit_exceeded if the scan visits more than
/// `budget` lattice points.
std::int64_t min_lee_weight(const LeeLattice& lattice, std::uint64_t budget = 50'000'000);

/// Reduced non-negative fraction.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction reduced(std::int64_t num, std::int64_t den);
  std::string to_string() const;
  bool operator==(const Fraction&) const = default;
};

struct CodeMetrics {
  int n = 0;
  int intended_radius = 0;
  std::int64_t det_abs = 0;
  std::int64_t min_distance = 0;
  std::int64_t packing_radius = 0;
  std::int64_t covering_radius = 0;
  Fraction density;  // |S(n, r)| / det
  bool perfect = false;
  bool almost_perfect = false;
};

CodeMetrics code_metrics(const LeeLattice& lattice, int r);

struct TileWindow {
  std::int64_t x0 = 0;
  std::int64_t y0 = 0;
  std::int64_t width = 0;
  std::int64_t height = 0;
};

struct TileStyle {
  int cell_px = 16;
  std::string hole_color = "#202020";
  std::string center_color = "#000000";
  std::vector<std::string> palette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                      "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
};

/// SVG 1.1 picture of the window: one square per point of Z^2. Points within
/// distance r of a codeword are painted in that codeword's colour, all other
/// points are holes. Requires n = 2.
std::string render_tiling(const LeeLattice& lattice, int r, const TileWindow& window,
                          const TileStyle& style = {});

}  // namespace apll
