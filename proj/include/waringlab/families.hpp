#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "waringlab/decomp.hpp"

namespace waringlab {

/// A certified multi-decomposition instance: every listed decomposition is
/// re-checked exactly (membership and non-redundancy) before the witness is
/// returned, and the form is checked concise.
struct Witness {
  Form form;
  std::vector<Decomposition> decomps;
  std::string family;
  std::uint64_t seed;
  int n;
  int d;
};

/// Binary cubic with two disjoint non-redundant decompositions of lengths
/// (2, 3); the unique cube relation of 5 distinct points on the projective
/// line, split into its two halves. (n = 1, d = 3)
Witness gen_binary_pair(std::uint64_t seed);

/// Concise plane cubic with two disjoint length-4 decompositions supported
/// on 8 distinct points of the conic x0 x2 = x1^2. (n = 2, d = 3)
Witness gen_conic8(std::uint64_t seed);

/// Concise cubic in 4 variables with two disjoint length-5 decompositions
/// whose union sits on two skew lines. (n = 3, d = 3)
Witness gen_two_lines(std::uint64_t seed);

/// Embeds a witness into a larger space and adds generic cubes spanning the
/// complementary coordinates, shared by every decomposition.
Witness extend_with_generic_cubes(const Witness& w, int n_target, std::uint64_t seed);

/// Two length-(n+2) decompositions meeting in exactly n-3 points, with the
/// symmetric difference on two skew lines. (n >= 3)
Witness gen_case_ii(int n, std::uint64_t seed);

/// Two length-(n+2) decompositions meeting in exactly n-2 points, with the
/// symmetric difference on a plane conic. (n >= 2)
Witness gen_case_iii(int n, std::uint64_t seed);

/// Decompositions of lengths n+1 and n+2 meeting in n-1 points, with a
/// collinear symmetric difference. (n >= 1)
Witness gen_fermat_plus(int n, std::uint64_t seed);

/// Concise cubic in 4 variables of the shape F' + L^3 with F' supported on
/// a plane: two distinct pentahedral (length-5) decompositions. (n = 3)
Witness gen_pentahedral_nonunique(std::uint64_t seed);

/// Random GL-image of the orbit normal form A_r: n+2 spanning points with
/// Kruskal rank exactly r.
PointSet random_kruskal_set(int n, int r, std::uint64_t seed);

/// Thrown when a generator exhausts its resampling budget.
struct ResampleBudgetExceeded : std::runtime_error {
  explicit ResampleBudgetExceeded(const std::string& family)
      : std::runtime_error("resample budget exceeded: " + family) {}
};

}  // namespace waringlab
