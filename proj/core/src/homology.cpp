#include "cmperm/homology.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmperm {

namespace {

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (Vertex v : f) {
      if (v < 1 || v > n) {
        throw std::invalid_argument("simplicial complex: label " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n));
      }
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  SimplicialComplex c;
  c.n_ = n;
  for (const auto& f : faces) {
    const bool dominated = std::any_of(faces.begin(), faces.end(), [&](const VertexSet& g) {
      return g.size() > f.size() && is_subset(f, g);
    });
    if (!dominated) c.facets_.push_back(f);
  }
  return c;
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) {
    return static_cast<int>(f.size()) - 1 == dimension();
  });
}

bool SimplicialComplex::contains(const VertexSet& face) const {
  VertexSet sorted = face;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const VertexSet& f) { return is_subset(sorted, f); });
}

std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c,
                                                       std::size_t face_cap) {
  if (c.n() > 62) {
    throw std::length_error("faces_by_dimension: at most 62 vertices supported");
  }
  std::vector<std::vector<VertexSet>> out;
  if (c.is_void()) return out;

  std::unordered_set<std::uint64_t> masks;
  const auto insert = [&](std::uint64_t m) {
    if (masks.insert(m).second && masks.size() > face_cap) {
      throw CapExceeded("simplicial complex has more than " + std::to_string(face_cap) +
                        " faces");
    }
  };
  for (const auto& f : c.facets()) {
    if (f.size() >= 63 || (std::uint64_t{1} << f.size()) > face_cap + 1) {
      throw CapExceeded("simplicial complex has more than " + std::to_string(face_cap) +
                        " faces");
    }
    std::uint64_t full = 0;
    for (Vertex v : f) full |= std::uint64_t{1} << (v - 1);
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      insert(sub);
      if (sub == 0) break;
    }
  }

  out.assign(static_cast<std::size_t>(c.dimension()) + 2, {});
  for (std::uint64_t m : masks) {
    VertexSet face;
    for (std::uint64_t rest = m; rest != 0; rest &= rest - 1)
      face.push_back(std::countr_zero(rest) + 1);
    out[face.size()].push_back(std::move(face));
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<VertexSet> all_faces(const SimplicialComplex& c, std::size_t face_cap) {
  std::vector<VertexSet> out;
  for (auto& level : faces_by_dimension(c, face_cap))
    for (auto& f : level) out.push_back(std::move(f));
  std::sort(out.begin(), out.end());
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix out{a.rows, b.cols, std::vector<std::int64_t>(a.rows * b.cols, 0)};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (const auto x = a.at(i, k); x != 0)
        for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += x * b.at(k, j);
  return out;
}

IntMatrix boundary_matrix(const std::vector<std::vector<VertexSet>>& faces, int k) {
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= faces.size()) {
    throw std::out_of_range("boundary_matrix: dimension " + std::to_string(k) +
                            " out of range");
  }
  const auto& lower = faces[static_cast<std::size_t>(k)];
  const auto& upper = faces[static_cast<std::size_t>(k) + 1];
  IntMatrix m{lower.size(), upper.size(),
              std::vector<std::int64_t>(lower.size() * upper.size(), 0)};
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const auto& face = upper[col];
    for (std::size_t i = 0; i < face.size(); ++i) {
      VertexSet facet = face;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
      const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      m.at(static_cast<std::size_t>(it - lower.begin()), col) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::string_view to_string(Field f) {
  switch (f) {
    case Field::F2:
      return "f2";
    case Field::F3:
      return "f3";
    case Field::F5:
      return "f5";
    case Field::Q:
      return "q";
  }
  return "unknown";
}

std::optional<Field> parse_field(std::string_view text) {
  std::string lower;
  for (char ch : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (lower == "f2") return Field::F2;
  if (lower == "f3") return Field::F3;
  if (lower == "f5") return Field::F5;
  if (lower == "q") return Field::Q;
  return std::nullopt;
}

namespace {

std::size_t rank_f2(const IntMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) % 2 != 0) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && !(rows[pivot][c / 64] & bit)) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < m.rows; ++r)
      if (r != rank && (rows[r][c / 64] & bit))
        for (std::size_t w = c / 64; w < words; ++w) rows[r][w] ^= rows[rank][w];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, int p) {
  std::vector<int> a(m.entries.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<int>(((m.entries[i] % p) + p) % p);
  const auto inv = [p](int x) {
    for (int y = 1; y < p; ++y)
      if ((x * y) % p == 1) return y;
    return 0;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot * m.cols + c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(a[pivot * m.cols + j], a[rank * m.cols + j]);
    const int scale = inv(a[rank * m.cols + c]);
    for (std::size_t j = c; j < m.cols; ++j) a[rank * m.cols + j] = (a[rank * m.cols + j] * scale) % p;
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const int f = a[r * m.cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j)
        a[r * m.cols + j] = ((a[r * m.cols + j] - f * a[rank * m.cols + j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

bool checked_step(std::int64_t pivot, std::int64_t x, std::int64_t lead, std::int64_t y,
                  std::int64_t prev, std::int64_t& out) {
  std::int64_t a = 0, b = 0, d = 0;
  if (__builtin_mul_overflow(pivot, x, &a)) return false;
  if (__builtin_mul_overflow(lead, y, &b)) return false;
  if (__builtin_sub_overflow(a, b, &d)) return false;
  out = d / prev;
  return true;
}

bool checked_step(const boost::multiprecision::cpp_int& pivot,
                  const boost::multiprecision::cpp_int& x,
                  const boost::multiprecision::cpp_int& lead,
                  const boost::multiprecision::cpp_int& y,
                  const boost::multiprecision::cpp_int& prev,
                  boost::multiprecision::cpp_int& out) {
  out = (pivot * x - lead * y) / prev;
  return true;
}

// Fraction-free (Bareiss) elimination; every intermediate entry is a minor
// of the input, so each division is exact. Returns nullopt on overflow.
template <class Int>
std::optional<std::size_t> bareiss_rank(const IntMatrix& m) {
  std::vector<Int> a(m.entries.begin(), m.entries.end());
  const std::size_t cols = m.cols;
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    const Int lead = a[rank * cols + c];
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const Int factor = a[r * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int next;
        if (!checked_step(lead, a[r * cols + j], factor, a[rank * cols + j], prev, next))
          return std::nullopt;
        a[r * cols + j] = next;
      }
      a[r * cols + c] = 0;
    }
    prev = lead;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
  if (auto r = bareiss_rank<std::int64_t>(m)) return *r;
  return *bareiss_rank<boost::multiprecision::cpp_int>(m);
}

}  // namespace

std::size_t matrix_rank(const IntMatrix& m, Field field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  switch (field) {
    case Field::F2:
      return rank_f2(m);
    case Field::F3:
      return rank_mod_p(m, 3);
    case Field::F5:
      return rank_mod_p(m, 5);
    case Field::Q:
      return rank_rational(m);
  }
  return 0;
}

std::size_t HomologyProfile::rank(int k) const {
  const int i = k + 1;
  if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(i)];
}

std::int64_t HomologyProfile::euler_from_faces() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < face_counts.size(); ++i) {
    // i = k + 1, sign (-1)^k
    const auto v = static_cast<std::int64_t>(face_counts[i]);
    sum += (i % 2 == 1) ? v : -v;
  }
  return sum;
}

std::int64_t HomologyProfile::euler_from_ranks() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const auto v = static_cast<std::int64_t>(ranks[i]);
    sum += (i % 2 == 1) ? v : -v;
  }
  return sum;
}

HomologyProfile reduced_homology_ranks(const SimplicialComplex& c, Field field,
                                       std::size_t face_cap) {
  HomologyProfile profile;
  profile.field = field;
  const auto faces = faces_by_dimension(c, face_cap);
  if (faces.empty()) return profile;

  const std::size_t levels = faces.size();  // dimensions -1 .. levels - 2
  // boundary_rank[k + 1] = rank of the map out of k-faces; zero for k = -1.
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  for (std::size_t k = 0; k + 1 < levels; ++k)
    boundary_rank[k + 1] = matrix_rank(boundary_matrix(faces, static_cast<int>(k)), field);

  for (std::size_t i = 0; i < levels; ++i) {
    profile.face_counts.push_back(faces[i].size());
    profile.ranks.push_back(faces[i].size() - boundary_rank[i] - boundary_rank[i + 1]);
  }
  return profile;
}

}  // namespace cmperm
