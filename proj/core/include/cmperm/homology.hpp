#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cmperm/graph.hpp"
#include "cmperm/permutation.hpp"

namespace cmperm {

/**
 * Finite abstract simplicial complex on the labels 1..n, kept as its list
 * of facets (inclusion-maximal faces).
 *
 * The void complex has no faces at all. The complex whose only face is the
 * empty set is distinct from it: it has the single facet {} and dimension -1.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal sets of `faces`, sorted. Throws
  /// std::invalid_argument on labels outside 1..n.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> faces);

  int n() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  /// Largest facet size minus one; -2 for the void complex.
  int dimension() const;
  bool is_pure() const;
  bool contains(const VertexSet& face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> facets_;
};

inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 20;

/// faces[k + 1] lists the k-dimensional faces (k >= -1) in lexicographic
/// order. Empty for the void complex. Throws CapExceeded when the complex has
/// more than `face_cap` faces, std::length_error when n > 62.
std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c,
                                                       std::size_t face_cap = kDefaultFaceCap);

/// Every face, sorted lexicographically (the empty face first).
std::vector<VertexSet> all_faces(const SimplicialComplex& c,
                                 std::size_t face_cap = kDefaultFaceCap);

/// Dense integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> entries;  ///< row-major

  std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::int64_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  bool is_zero() const;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Boundary map from k-faces (columns) to (k-1)-faces (rows), k >= 0, in
/// the order of faces_by_dimension. Removing the i-th smallest vertex carries
/// sign (-1)^i; the 0-dimensional map is the augmentation onto the empty face.
IntMatrix boundary_matrix(const std::vector<std::vector<VertexSet>>& faces, int k);

enum class Field { F2, F3, F5, Q };

std::string_view to_string(Field f);
/// Accepts f2, f3, f5, q (case-insensitive).
std::optional<Field> parse_field(std::string_view text);

/// Rank over F_p (p in {2, 3, 5}) or over the rationals.
std::size_t matrix_rank(const IntMatrix& m, Field field);

struct HomologyProfile {
  Field field = Field::F2;
  std::vector<std::size_t> ranks;        ///< ranks[k + 1] = dim of reduced H_k
  std::vector<std::size_t> face_counts;  ///< face_counts[k + 1] = # k-faces

  /// Zero outside the stored range.
  std::size_t rank(int k) const;
  int dimension() const { return static_cast<int>(ranks.size()) - 2; }

  std::int64_t euler_from_faces() const;
  std::int64_t euler_from_ranks() const;
};

/// rank H_k = #k-faces - rank d_k - rank d_(k+1), exact over the field.
HomologyProfile reduced_homology_ranks(const SimplicialComplex& c, Field field,
                                       std::size_t face_cap = kDefaultFaceCap);

}  // namespace cmperm
