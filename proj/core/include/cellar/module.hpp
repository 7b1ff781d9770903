#pragma once

#include <cstdint>

#include "cellar/algebra.hpp"

namespace cellar {

using DimensionVector = std::vector<long>;
using IntMat = std::vector<std::vector<long>>;

// A finite-dimensional left module given by exact action matrices for the
// vertex idempotents and for a generating set of the radical (the arrows for
// presented algebras). Matrices act on column vectors.
class LeftModule {
 public:
  const FDAlgebra* A = nullptr;
  int n = 0;
  std::vector<Mat> vertex_act;
  std::vector<Mat> gen_act;
  std::vector<std::string> gen_names;

  Field field() const { return A->field; }
  Mat act_word(const Word& w) const;       // presented algebras
  Mat act_element(const Element& e) const;
  bool validate(std::string* why = nullptr) const;
};

LeftModule projective(const FDAlgebra& A, int vertex);
LeftModule simple_module(const FDAlgebra& A, int vertex);

// c_{ij} = [P_i : L_j] = dim e_j A e_i.
IntMat cartan_matrix(const FDAlgebra& A);

// Dimensions of M >= JM >= J^2 M >= ... >= 0 (strictly decreasing).
std::vector<int> radical_layer_dims(const LeftModule& M);
RowSpace socle_space(const LeftModule& M);
DimensionVector socle_vector(const LeftModule& M);
DimensionVector top_vector(const LeftModule& M);
DimensionVector composition_vector(const LeftModule& M);  // [M : L_j] per vertex

struct WeakSymmetry {
  bool ok = true;
  int witness_vertex = -1;
  std::string reason;
};
// Soc P_i simple and isomorphic to L_i = Top P_i, for every vertex.
WeakSymmetry weakly_symmetric(const FDAlgebra& A);

// G[i][j] = number of Gabriel-quiver arrows i -> j = dim of the (i,j)
// component of J/J^2; independent of presentation admissibility.
IntMat gabriel_matrix(const FDAlgebra& A);

struct Ext1Sym {
  bool ok = true;
  int i = -1, j = -1;  // witness pair when asymmetric
};
Ext1Sym ext1_symmetric(const FDAlgebra& A);

// eAe for e the sum of the chosen vertex idempotents; basis the normal words
// with both endpoints in the subset, multiplication through the full algebra.
FDAlgebra truncate(const FDAlgebra& A, const std::vector<std::string>& vertices);

// Exact module isomorphism test: solves the intertwiner space, then looks for
// an invertible element (seeded random combinations with a deterministic
// exhaustive grid fallback).
bool module_isomorphic(const LeftModule& M, const LeftModule& N, std::uint64_t seed = 0xCE11A5ULL);

// Submodule on an action-closed span (throws InputError otherwise).
LeftModule submodule(const LeftModule& M, const RowSpace& span);
LeftModule quotient_module(const LeftModule& M, const RowSpace& sub);
LeftModule direct_sum(const LeftModule& M, int copies);

}  // namespace cellar
