#pragma once

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "opineq/hermitian.hpp"

namespace opineq {

class PositiveMap;

/// X -> sum_i w_i U_i* X U_i.
struct UnitaryMixture {
  std::vector<CMatrix> unitaries;
  std::vector<double> weights;
};

/// X -> sum_k P_k X P_k for the coordinate projections of a partition.
struct Pinching {
  Index dim;
  std::vector<std::vector<Index>> blocks;
};

/// X -> V* X V for an isometry V (V*V = I).
struct Compression {
  CMatrix isometry;
};

/// A_1 (+) ... (+) A_k -> sum_i w_i Phi_i(A_i). Only the diagonal blocks of
/// the input are read.
struct DirectSum {
  std::vector<std::shared_ptr<const PositiveMap>> components;
  std::vector<double> weights;
  std::vector<Index> offsets;  // starting row of each input block
};

/// X -> Phi(A)^{-1/2} Phi(A^{1/2} X A^{1/2}) Phi(A)^{-1/2}.
struct InducedCongruence {
  std::shared_ptr<const PositiveMap> base;
  HermitianMatrix anchor;
  HermitianMatrix anchor_root;           // A^{1/2}
  HermitianMatrix image_inverse_root;    // Phi(A)^{-1/2}, cached at construction
};

/// A unital positive linear map, represented structurally. Immutable; copies
/// share the underlying representation.
class PositiveMap {
 public:
  using Variant = std::variant<UnitaryMixture, Pinching, Compression, DirectSum, InducedCongruence>;

  static PositiveMap identity(Index n);
  /// Unitaries within 1e-11 of unitary, positive weights summing to 1 within 1e-12.
  static PositiveMap unitary_mixture(std::vector<CMatrix> unitaries, std::vector<double> weights);
  /// `blocks` must partition {0, ..., dim-1}.
  static PositiveMap pinching(Index dim, std::vector<std::vector<Index>> blocks);
  static PositiveMap compression(CMatrix isometry);
  /// Positive weights summing to 1; each component is itself unital.
  static PositiveMap direct_sum(std::vector<PositiveMap> components, std::vector<double> weights);
  /// Throws DomainError unless A and Phi(A) are positive definite.
  static PositiveMap induced_congruence(const PositiveMap& base, const HermitianMatrix& anchor);

  HermitianMatrix apply(const HermitianMatrix& x) const;
  HermitianMatrix operator()(const HermitianMatrix& x) const { return apply(x); }

  Index input_dim() const { return input_dim_; }
  Index output_dim() const { return output_dim_; }
  const Variant& variant() const { return *repr_; }
  std::string_view kind() const;

 private:
  PositiveMap(Variant repr, Index input_dim, Index output_dim);
  void check_unital() const;

  std::shared_ptr<const Variant> repr_;
  Index input_dim_;
  Index output_dim_;
};

/// The 2x2 mixture X -> (U*XU + V*XV)/2 with U, V the rotations by alpha and beta.
PositiveMap make_rotation_mixture(double alpha, double beta);

/// 2x2 rotation (cos t, -sin t; sin t, cos t).
CMatrix rotation(double angle);

/// Unit vector used as the state X -> <Xx, x>.
class VectorState {
 public:
  /// Throws DomainError unless |x| = 1 within 1e-12.
  explicit VectorState(CVector x);
  const CVector& vector() const { return x_; }
  Index dim() const { return x_.size(); }

 private:
  CVector x_;
};

/// Real part of x* T x.
double vector_state_value(const VectorState& x, const HermitianMatrix& t);

}  // namespace opineq
