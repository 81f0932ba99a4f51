#include "apll/lee_geometry.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "apll/errors.hpp"
#include "apll/number_theory.hpp"

namespace apll {

std::uint64_t sphere_size(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("sphere_size needs n >= 1 and r >= 0");
  using u128 = unsigned __int128;
  const u128 limit = std::numeric_limits<std::uint64_t>::max();
  u128 total = 0;
  u128 cn = 1;  // C(n, i)
  u128 cr = 1;  // C(r, i)
  u128 pow2 = 1;
  for (int i = 0; i <= std::min(n, r); ++i) {
    if (i > 0) {
      cn = cn * static_cast<u128>(n - i + 1) / static_cast<u128>(i);
      cr = cr * static_cast<u128>(r - i + 1) / static_cast<u128>(i);
      pow2 *= 2;
    }
    if (cn > limit || cr > limit || pow2 > limit) throw std::overflow_error("sphere_size exceeds 64 bits");
    const u128 term = pow2 * cn;
    if (term > limit || (cr != 0 && term > limit / cr)) throw std::overflow_error("sphere_size exceeds 64 bits");
    total += term * cr;
    if (total > limit) throw std::overflow_error("sphere_size exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

void enumerate_rec(int coord, int remaining, std::vector<std::int64_t>& current,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (coord == static_cast<int>(current.size())) {
    out.push_back(current);
    return;
  }
  for (int x = -remaining; x <= remaining; ++x) {
    current[coord] = x;
    enumerate_rec(coord + 1, remaining - (x < 0 ? -x : x), current, out);
  }
}

}  // namespace

LeeSphere enumerate_sphere(int n, int r, std::uint64_t budget) {
  const std::uint64_t size = sphere_size(n, r);
  if (size > budget / static_cast<std::uint64_t>(n)) {
    throw limit_exceeded("Lee sphere S(" + std::to_string(n) + "," + std::to_string(r) + ") exceeds the point budget");
  }
  std::vector<std::vector<std::int64_t>> pts;
  pts.reserve(size);
  std::vector<std::int64_t> current(static_cast<std::size_t>(n), 0);
  enumerate_rec(0, r, current, pts);

  LeeSphere sphere{n, r, IntMatrix(static_cast<Eigen::Index>(pts.size()), n)};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int j = 0; j < n; ++j) sphere.points(static_cast<Eigen::Index>(i), j) = pts[i][j];
  }
  return sphere;
}

std::int64_t lee_weight(const IntVector& v) { return v.cwiseAbs().sum(); }

LeeLattice::LeeLattice(IntMatrix hnf) : basis_(std::move(hnf)) {
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) det_abs_ = nt::checked_mul(det_abs_, basis_(i, i));
}

LeeLattice LeeLattice::from_generators(const IntMatrix& generators) {
  if (generators.cols() < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  IntMatrix hnf = hermite_normal_form(generators);
  if (hnf.rows() != generators.cols()) throw std::invalid_argument("generators do not span a full-rank lattice");
  return LeeLattice(std::move(hnf));
}

IntVector LeeLattice::reduce(const IntVector& v) const {
  if (v.size() != basis_.cols()) throw std::invalid_argument("vector dimension does not match lattice");
  IntVector x = v;
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    const std::int64_t q = nt::div_floor(x(i), basis_(i, i));
    if (q != 0) x -= q * basis_.row(i).transpose();
  }
  return x;
}

bool LeeLattice::contains(const IntVector& v) const { return reduce(v).isZero(); }

std::int64_t LeeLattice::coset_index(const IntVector& v) const {
  const IntVector r = reduce(v);
  std::int64_t index = 0;
  for (Eigen::Index i = 0; i < r.size(); ++i) index = index * basis_(i, i) + r(i);
  return index;
}

IntVector LeeLattice::coset_representative(std::int64_t index) const {
  IntVector r(basis_.cols());
  for (Eigen::Index i = r.size(); i-- > 0;) {
    r(i) = index % basis_(i, i);
    index /= basis_(i, i);
  }
  return r;
}

IntVector LeeLattice::coordinates(const IntVector& v) const {
  IntVector rest = v;
  IntVector k(basis_.rows());
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    if (rest(i) % basis_(i, i) != 0) throw std::invalid_argument("vector is not in the lattice");
    k(i) = rest(i) / basis_(i, i);
    rest -= k(i) * basis_.row(i).transpose();
  }
  return k;
}

LeeLattice lattice_from_code(const GroupSpec& g, std::span<const GroupElement> images) {
  const auto n = static_cast<Eigen::Index>(images.size());
  const auto k = static_cast<Eigen::Index>(g.rank());
  if (n < 1) throw std::invalid_argument("lattice_from_code needs at least one image");
  for (const auto& a : images) {
    if (!g.contains(a)) throw std::invalid_argument("image is not an element of " + g.to_string());
  }
  // Rows [images_i | e_i] and [d_j e_j | 0]. After echelon reduction on the
  // first k columns, the rows that vanish there carry the kernel in the tail.
  IntMatrix aug = IntMatrix::Zero(n + k, k + n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) aug(i, j) = images[static_cast<std::size_t>(i)].exponents[j];
    aug(i, k + i) = 1;
  }
  for (Eigen::Index j = 0; j < k; ++j) aug(n + j, j) = g.factors()[static_cast<std::size_t>(j)];

  const IntMatrix hnf = hermite_normal_form(aug);
  std::vector<Eigen::Index> kernel_rows;
  for (Eigen::Index r = 0; r < hnf.rows(); ++r) {
    if (hnf.row(r).head(k).isZero()) kernel_rows.push_back(r);
  }
  IntMatrix kernel(static_cast<Eigen::Index>(kernel_rows.size()), n);
  for (std::size_t r = 0; r < kernel_rows.size(); ++r) {
    kernel.row(static_cast<Eigen::Index>(r)) = hnf.row(kernel_rows[r]).tail(n);
  }
  return LeeLattice::from_generators(kernel);
}

IntVector CosetTable::shortest_vector(std::int64_t coset) const {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(moduli.size()));
  for (std::int64_t c = coset; parent[static_cast<std::size_t>(c)] >= 0; c = parent[static_cast<std::size_t>(c)]) {
    const int step = parent_step[static_cast<std::size_t>(c)];
    v(std::abs(step) - 1) += step > 0 ? 1 : -1;
  }
  return v;
}

CosetTable coset_weights(const LeeLattice& lattice, std::int64_t max_cosets) {
  const std::int64_t det = lattice.det_abs();
  if (det > max_cosets) {
    throw limit_exceeded("quotient has " + std::to_string(det) + " cosets, limit is " + std::to_string(max_cosets));
  }
  const int n = lattice.dimension();
  CosetTable table;
  for (int i = 0; i < n; ++i) table.moduli.push_back(lattice.basis()(i, i));
  const auto size = static_cast<std::size_t>(det);
  table.weight.assign(size, -1);
  table.parent.assign(size, -1);
  table.parent_step.assign(size, 0);

  std::deque<std::int64_t> queue{0};
  table.weight[0] = 0;
  while (!queue.empty()) {
    const std::int64_t current = queue.front();
    queue.pop_front();
    const IntVector rep = lattice.coset_representative(current);
    for (int j = 0; j < n; ++j) {
      for (int sign : {1, -1}) {
        IntVector next = rep;
        next(j) += sign;
        const std::int64_t idx = lattice.coset_index(next);
        auto& w = table.weight[static_cast<std::size_t>(idx)];
        if (w >= 0) continue;
        w = table.weight[static_cast<std::size_t>(current)] + 1;
        table.parent[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(current);
        table.parent_step[static_cast<std::size_t>(idx)] = static_cast<std::int8_t>(sign * (j + 1));
        table.covering_radius = std::max(table.covering_radius, w);
        queue.push_back(idx);
      }
    }
  }
  return table;
}

int covering_radius(const LeeLattice& lattice, std::int64_t max_cosets) {
  return coset_weights(lattice, max_cosets).covering_radius;
}

namespace {

struct BoxScan {
  const IntMatrix& basis;
  std::int64_t bound;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  void run(Eigen::Index coord, IntVector& partial) {
    const Eigen::Index n = basis.cols();
    if (coord == n) {
      if (++visited > budget) throw limit_exceeded("minimum-weight box scan exceeded its budget");
      const std::int64_t w = lee_weight(partial);
      if (w > 0) best = std::min(best, w);
      return;
    }
    // Rows below `coord` do not touch column `coord`, so the choice of the
    // coord-th lattice coordinate fixes partial(coord) for good.
    const std::int64_t pivot = basis(coord, coord);
    const std::int64_t lo = -nt::div_floor(bound + partial(coord), pivot);
    const std::int64_t hi = nt::div_floor(bound - partial(coord), pivot);
    for (std::int64_t c = lo; c <= hi; ++c) {
      IntVector next = partial + c * basis.row(coord).transpose();
      run(coord + 1, next);
    }
  }
};

std::int64_t scan_box(const LeeLattice& lattice, std::int64_t bound, std::uint64_t budget) {
  BoxScan scan{lattice.basis(), bound, budget};
  IntVector start = IntVector::Zero(lattice.dimension());
  scan.run(0, start);
  return scan.best;
}

}  // namespace

std::int64_t min_lee_weight(const LeeLattice& lattice, std::uint64_t budget) {
  if (lattice.det_abs() < 2) throw std::invalid_argument("min_lee_weight requires det_abs >= 2");
  const std::int64_t bound = 2 * static_cast<std::int64_t>(covering_radius(lattice)) + 1;
  const std::int64_t found = scan_box(lattice, bound, budget);
  const std::int64_t confirm = scan_box(lattice, bound + 2, budget);
  if (found != confirm) throw std::logic_error("minimum-weight box bound violated");
  return found;
}

Fraction Fraction::reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = nt::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

CodeMetrics code_metrics(const LeeLattice& lattice, int r) {
  CodeMetrics m;
  m.n = lattice.dimension();
  m.intended_radius = r;
  m.det_abs = lattice.det_abs();
  m.covering_radius = covering_radius(lattice);
  m.min_distance = min_lee_weight(lattice);
  m.packing_radius = (m.min_distance - 1) / 2;
  const std::uint64_t s = sphere_size(m.n, r);
  if (s > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("sphere size does not fit a signed 64-bit numerator");
  }
  m.density = Fraction::reduced(static_cast<std::int64_t>(s), m.det_abs);
  m.perfect = m.packing_radius == m.covering_radius;
  m.almost_perfect = static_cast<std::uint64_t>(m.det_abs) == s + 1 && m.covering_radius == m.packing_radius + 1;
  return m;
}

std::string render_tiling(const LeeLattice& lattice, int r, const TileWindow& window, const TileStyle& style) {
  if (lattice.dimension() != 2) throw std::invalid_argument("render_tiling needs a lattice in Z^2");
  if (style.palette.empty()) throw std::invalid_argument("render_tiling needs a non-empty palette");
  const std::int64_t w = std::max<std::int64_t>(window.width, 0);
  const std::int64_t h = std::max<std::int64_t>(window.height, 0);
  const std::int64_t px = style.cell_px;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w * px << "\" height=\"" << h * px
      << "\" viewBox=\"0 0 " << w * px << ' ' << h * px << "\">\n";
  if (w > 0 && h > 0) {
    const CosetTable table = coset_weights(lattice);
    const auto palette_size = static_cast<std::int64_t>(style.palette.size());
    // Rows run top to bottom, so y decreases down the picture.
    for (std::int64_t row = 0; row < h; ++row) {
      const std::int64_t y = window.y0 + h - 1 - row;
      for (std::int64_t col = 0; col < w; ++col) {
        const std::int64_t x = window.x0 + col;
        IntVector point(2);
        point << x, y;
        const std::int64_t coset = lattice.coset_index(point);
        const int weight = table.weight[static_cast<std::size_t>(coset)];
        svg << "<rect x=\"" << col * px << "\" y=\"" << row * px << "\" width=\"" << px << "\" height=\"" << px
            << '"';
        if (weight > r) {
          svg << " class=\"hole\" fill=\"" << style.hole_color << "\"/>\n";
          continue;
        }
        const IntVector codeword = point - table.shortest_vector(coset);
        const IntVector k = lattice.coordinates(codeword);
        const std::int64_t colour = nt::mod_floor(k(0) + 3 * k(1), palette_size);
        svg << " class=\"" << (weight == 0 ? "center" : "cell") << "\" fill=\""
            << style.palette[static_cast<std::size_t>(colour)] << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
        if (weight == 0) {
          svg << "<circle cx=\"" << col * px + px / 2 << "\" cy=\"" << row * px + px / 2 << "\" r=\"" << px / 5
              << "\" fill=\"" << style.center_color << "\"/>\n";
        }
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace apll
