#include "opineq/positive_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "opineq/error.hpp"

namespace opineq {

namespace {

constexpr double kUnitaryTolerance = 1e-11;
constexpr double kWeightSumTolerance = 1e-12;
constexpr double kUnitalityTolerance = 1e-10;

void check_weights(const std::vector<double>& weights) {
  if (weights.empty()) throw DomainError("a mixture needs at least one weight");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw DomainError("mixture weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance)
    throw DomainError("mixture weights must sum to 1, got " + std::to_string(sum));
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

PositiveMap::PositiveMap(Variant repr, Index input_dim, Index output_dim)
    : repr_(std::make_shared<const Variant>(std::move(repr))),
      input_dim_(input_dim),
      output_dim_(output_dim) {}

void PositiveMap::check_unital() const {
  const auto image = apply(HermitianMatrix::identity(input_dim_));
  const double dev = (image - HermitianMatrix::identity(output_dim_)).frobenius_norm();
  if (dev > kUnitalityTolerance)
    throw DomainError("map is not unital: |Phi(I) - I|_F = " + std::to_string(dev));
}

PositiveMap PositiveMap::identity(Index n) {
  return unitary_mixture({CMatrix::Identity(n, n)}, {1.0});
}

PositiveMap PositiveMap::unitary_mixture(std::vector<CMatrix> unitaries,
                                         std::vector<double> weights) {
  if (unitaries.size() != weights.size())
    throw DimensionError("one weight per unitary is required");
  check_weights(weights);
  const Index n = unitaries.front().rows();
  if (n < 1) throw DimensionError("unitaries must be non-empty");
  for (const auto& u : unitaries) {
    if (u.rows() != n || u.cols() != n) throw DimensionError("unitaries must share one square shape");
    if ((u.adjoint() * u - CMatrix::Identity(n, n)).norm() > kUnitaryTolerance)
      throw DomainError("mixture component is not unitary");
  }
  PositiveMap out(UnitaryMixture{std::move(unitaries), std::move(weights)}, n, n);
  out.check_unital();
  return out;
}

PositiveMap PositiveMap::pinching(Index dim, std::vector<std::vector<Index>> blocks) {
  if (dim < 1) throw DimensionError("pinching dimension must be >= 1");
  std::vector<int> seen(static_cast<std::size_t>(dim), 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw DomainError("pinching blocks must be non-empty");
    for (Index i : block) {
      if (i < 0 || i >= dim) throw DimensionError("pinching index out of range");
      ++seen[static_cast<std::size_t>(i)];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw DomainError("pinching blocks must partition the index set");
  PositiveMap out(Pinching{dim, std::move(blocks)}, dim, dim);
  out.check_unital();
  return out;
}

PositiveMap PositiveMap::compression(CMatrix isometry) {
  const Index n = isometry.rows();
  const Index k = isometry.cols();
  if (k < 1 || n < k) throw DimensionError("compression needs an n x k isometry with n >= k >= 1");
  if ((isometry.adjoint() * isometry - CMatrix::Identity(k, k)).norm() > kUnitaryTolerance)
    throw DomainError("compression matrix is not an isometry");
  PositiveMap out(Compression{std::move(isometry)}, n, k);
  out.check_unital();
  return out;
}

PositiveMap PositiveMap::direct_sum(std::vector<PositiveMap> components,
                                    std::vector<double> weights) {
  if (components.size() != weights.size())
    throw DimensionError("one weight per direct-sum component is required");
  check_weights(weights);
  const Index out_dim = components.front().output_dim();
  DirectSum repr;
  repr.weights = std::move(weights);
  Index offset = 0;
  for (auto& c : components) {
    if (c.output_dim() != out_dim)
      throw DimensionError("direct-sum components must share an output dimension");
    repr.offsets.push_back(offset);
    offset += c.input_dim();
    repr.components.push_back(std::make_shared<const PositiveMap>(std::move(c)));
  }
  PositiveMap out(std::move(repr), offset, out_dim);
  out.check_unital();
  return out;
}

PositiveMap PositiveMap::induced_congruence(const PositiveMap& base,
                                            const HermitianMatrix& anchor) {
  if (anchor.dim() != base.input_dim())
    throw DimensionError("anchor dimension differs from the map's input dimension");
  if (!is_positive_definite(anchor))
    throw DomainError("induced congruence requires a positive definite anchor");
  const auto image = base.apply(anchor);
  if (!is_positive_definite(image))
    throw DomainError("induced congruence requires Phi(A) positive definite");
  InducedCongruence repr{std::make_shared<const PositiveMap>(base), anchor, sqrt(anchor),
                         power(image, -0.5)};
  PositiveMap out(std::move(repr), base.input_dim(), base.output_dim());
  out.check_unital();
  return out;
}

HermitianMatrix PositiveMap::apply(const HermitianMatrix& x) const {
  if (x.dim() != input_dim_)
    throw DimensionError("map expects input dimension " + std::to_string(input_dim_) +
                         ", got " + std::to_string(x.dim()));
  return std::visit(
      Overloaded{
          [&](const UnitaryMixture& m) {
            CMatrix acc = CMatrix::Zero(output_dim_, output_dim_);
            for (std::size_t i = 0; i < m.unitaries.size(); ++i)
              acc += m.weights[i] * (m.unitaries[i].adjoint() * x.entries() * m.unitaries[i]);
            return HermitianMatrix::hermitian_part(acc);
          },
          [&](const Pinching& p) {
            CMatrix acc = CMatrix::Zero(p.dim, p.dim);
            for (const auto& block : p.blocks)
              for (Index i : block)
                for (Index j : block) acc(i, j) = x(i, j);
            return HermitianMatrix::hermitian_part(acc);
          },
          [&](const Compression& c) { return congruence(c.isometry.adjoint(), x); },
          [&](const DirectSum& d) {
            CMatrix acc = CMatrix::Zero(output_dim_, output_dim_);
            for (std::size_t i = 0; i < d.components.size(); ++i) {
              const auto& comp = *d.components[i];
              const Index k = comp.input_dim();
              const auto block =
                  HermitianMatrix::hermitian_part(x.entries().block(d.offsets[i], d.offsets[i], k, k));
              acc += d.weights[i] * comp.apply(block).entries();
            }
            return HermitianMatrix::hermitian_part(acc);
          },
          [&](const InducedCongruence& ic) {
            const auto inner = ic.base->apply(sandwich(ic.anchor_root, x));
            return sandwich(ic.image_inverse_root, inner);
          },
      },
      *repr_);
}

std::string_view PositiveMap::kind() const {
  return std::visit(Overloaded{
                        [](const UnitaryMixture&) { return std::string_view("unitary_mixture"); },
                        [](const Pinching&) { return std::string_view("pinching"); },
                        [](const Compression&) { return std::string_view("compression"); },
                        [](const DirectSum&) { return std::string_view("direct_sum"); },
                        [](const InducedCongruence&) {
                          return std::string_view("induced_congruence");
                        },
                    },
                    *repr_);
}

CMatrix rotation(double angle) {
  CMatrix r(2, 2);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  r << c, -s, s, c;
  return r;
}

PositiveMap make_rotation_mixture(double alpha, double beta) {
  return PositiveMap::unitary_mixture({rotation(alpha), rotation(beta)}, {0.5, 0.5});
}

VectorState::VectorState(CVector x) : x_(std::move(x)) {
  if (x_.size() < 1) throw DimensionError("vector state needs dimension >= 1");
  if (std::abs(x_.norm() - 1.0) > 1e-12) throw DomainError("vector state must have unit norm");
}

double vector_state_value(const VectorState& x, const HermitianMatrix& t) {
  if (x.dim() != t.dim()) throw DimensionError("vector state dimension mismatch");
  return x.vector().dot(t.entries() * x.vector()).real();
}

}  // namespace opineq
