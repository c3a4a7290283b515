#include "syzgraph/homology.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace syzgraph {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ExactField ExactField::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return ExactField(p);
}

ExactField ExactField::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("gf:") || text.starts_with("GF:")) {
    const auto digits = text.substr(3);
    std::uint64_t p = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty() && p < (1ULL << 31))
      return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or gf:<p>)");
}

std::string ExactField::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
}

std::string ExactField::spec() const {
  return is_rational() ? "q" : "gf:" + std::to_string(characteristic_);
}

// ---------------------------------------------------------------------------
// Rank kernels

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow instead of wrapping.
struct Checked {
  std::int64_t v;

  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked operator/(Checked a, Checked b) { return {a.v / b.v}; }
  bool is_zero() const { return v == 0; }
};

template <typename T>
bool is_zero(const T& x) {
  if constexpr (std::is_same_v<T, Checked>)
    return x.is_zero();
  else
    return x == 0;
}

template <typename T>
std::size_t bareiss_rank(std::vector<T> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
  T prev{1};
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(at(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    const T p = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T factor = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j)
        at(i, j) = (p * at(i, j) - factor * at(rank, j)) / prev;
      at(i, c) = T{0};
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& m) {
  const auto rows = m.rows();
  const auto cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  try {
    std::vector<Checked> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = {m(r, c)};
    return bareiss_rank(std::move(a), rows, cols);
  } catch (const Overflow&) {
    std::vector<boost::multiprecision::cpp_int> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c);
    return bareiss_rank(std::move(a), rows, cols);
  }
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const auto rows = m.rows();
  const auto cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  const auto mod = static_cast<std::int64_t>(p);
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = static_cast<std::uint64_t>(((m(r, c) % mod) + mod) % mod);
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    const std::uint64_t inv = pow_mod(at(rank, c), p - 2, p);
    for (std::size_t j = c; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t factor = at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        at(i, j) = (at(i, j) + (p - factor) * at(rank, j)) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over(const IntMatrix& m, const ExactField& field) {
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

// ---------------------------------------------------------------------------
// Complexes

std::size_t SimplicialComplex::face_count(int d) const {
  if (d == -1) return 1;
  if (d < -1 || d > dimension()) return 0;
  return faces_by_dim[d].size();
}

bool SimplicialComplex::contains_face(VertexSet face) const {
  if (face == 0) return true;
  const int d = cardinality(face) - 1;
  if (d > dimension()) return false;
  const auto& level = faces_by_dim[d];
  return std::binary_search(level.begin(), level.end(), face);
}

SimplicialComplex clique_complex(const SimpleGraph& g) {
  SimplicialComplex c;
  c.vertices = g.vertices();
  // Extend each clique only by vertices above its largest member.
  auto grow = [&](auto&& self, VertexSet clique, VertexSet candidates) -> void {
    const int d = cardinality(clique) - 1;
    if (static_cast<int>(c.faces_by_dim.size()) <= d) c.faces_by_dim.resize(d + 1);
    c.faces_by_dim[d].push_back(clique);
    for (int w : members(candidates)) {
      self(self, clique | singleton(w), candidates & g.neighbors(w) & ~first_vertices(w + 1));
    }
  };
  for (int v : members(g.vertices()))
    grow(grow, singleton(v), g.neighbors(v) & ~first_vertices(v + 1));
  for (auto& level : c.faces_by_dim) std::sort(level.begin(), level.end());
  return c;
}

IntMatrix boundary_matrix(const SimplicialComplex& c, int d) {
  const std::size_t cols = c.face_count(d);
  const std::size_t rows = c.face_count(d - 1);
  IntMatrix m(rows, cols);
  if (d == 0) {
    for (std::size_t j = 0; j < cols; ++j) m(0, j) = 1;
    return m;
  }
  const auto& faces = c.faces_by_dim[d];
  const auto& facets = c.faces_by_dim[d - 1];
  for (std::size_t j = 0; j < cols; ++j) {
    int position = 0;
    for (int v : members(faces[j])) {
      const VertexSet facet = faces[j] & ~singleton(v);
      const auto it = std::lower_bound(facets.begin(), facets.end(), facet);
      m(static_cast<std::size_t>(it - facets.begin()), j) = (position % 2 == 0) ? 1 : -1;
      ++position;
    }
  }
  return m;
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& c, const ExactField& field) {
  const int top = c.dimension();
  // ranks[d + 1] = rank of the boundary map out of the d-faces.
  std::vector<std::size_t> ranks(top + 3, 0);
  for (int d = 0; d <= top; ++d) ranks[d + 1] = rank_over(boundary_matrix(c, d), field);
  std::vector<std::size_t> dims(top + 2, 0);
  for (int d = -1; d <= top; ++d) dims[d + 1] = c.face_count(d) - ranks[d + 1] - ranks[d + 2];
  return dims;
}

}  // namespace syzgraph
