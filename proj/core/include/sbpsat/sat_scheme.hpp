/// @file sat_scheme.hpp
/// @brief SAT penalty assembly and the semi-discrete right-hand sides for the
/// Dirichlet and mixed schemes in 2D and 3D.
///
/// Penalty values realize the stability bounds as equalities: the advective
/// sigma' are set node-wise from the upwind part of the velocity and the
/// resistive sigma'' to -1/(2 p dx) per face. Face penalties scale by the
/// inverse boundary norm weight 1/(p dx); corner nodes receive additive
/// contributions from every incident face.

#pragma once

#include "sbpsat/grid.hpp"
#include "sbpsat/model.hpp"
#include "sbpsat/tensor_ops.hpp"

namespace sbpsat {

enum class SchemeKind { DirichletResistive, MixedResistive };

struct FacePenalty {
  /// Advective penalty per face node, in lexicographic face order.
  std::vector<double> sigma_prime;
  /// Resistive penalty (scalar per face); zero for the mixed scheme.
  double sigma_dprime = 0.0;
  /// 1/(p_corner * normal spacing): the P^{-1} factor at the face.
  double inv_ph = 0.0;
};

struct PenaltyConfig {
  std::vector<FacePenalty> faces;  // indexed by static_cast<int>(Face)
  double epsilon = 0.0;

  const FacePenalty& face(Face f) const {
    return faces[static_cast<std::size_t>(f)];
  }
};

/// Visit every node of a face in lexicographic order of the remaining axes.
/// fn receives (flat_index, i, j, k); k is 0 on 2D grids.
template <typename Fn>
void for_each_face_node(const GridSpec& grid, Face face, Fn&& fn) {
  const int a = face_axis(face);
  const int f = face_is_high(face) ? grid.axis(a).nodes - 1 : 0;
  if (grid.dim() == 2) {
    const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
    if (a == 0) {
      for (int j = 0; j < m; ++j) fn(grid.index(f, j), f, j, 0);
    } else {
      for (int i = 0; i < n; ++i) fn(grid.index(i, f), i, f, 0);
    }
    return;
  }
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes, k = grid.axis(2).nodes;
  if (a == 0) {
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < k; ++l) fn(grid.index(f, j, l), f, j, l);
  } else if (a == 1) {
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < k; ++l) fn(grid.index(i, f, l), i, f, l);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) fn(grid.index(i, j, f), i, j, f);
  }
}

/// Equality choice of the stable penalties at time t: node-wise upwind
/// sigma' per face and sigma'' = -1/(2 p dx) for both scheme kinds. Throws
/// for the mixed kind with epsilon = 0.
PenaltyConfig build_penalties(const ModelConfig& model, const GridSpec& grid,
                              const OperatorSet& ops, SchemeKind kind, double t);

/// B(V - g): per face, (sigma' + eps sigma'')/(p dx) * (V - g) at face nodes.
VectorField sat_dirichlet(const VectorField& v, const VectorField& g,
                          const PenaltyConfig& pen, const GridSpec& grid,
                          const OperatorSet& ops);

/// Mixed-condition SAT: the value penalty B(V - g) as in sat_dirichlet, plus
/// the curl penalty +/- eps (curl V - h)/(p dx) with sign + on YHigh / - on
/// YLow for component 1 and - on XHigh / + on XLow for component 2. The
/// sigma'' part of B is dissipative here and keeps the fourth-order scheme at
/// its interior convergence order on fine grids.
VectorField sat_mixed(const VectorField& v, const VectorField& g, const ScalarField& h,
                      const PenaltyConfig& pen, const GridSpec& grid,
                      const OperatorSet& ops, double epsilon);

/// Semi-discrete right-hand side with cached node values of the velocity and
/// of C (rebuilt each call for time-dependent fields). Instances are immutable
/// after construction; evaluation is pure in (V, t).
class SemidiscreteRhs {
 public:
  SemidiscreteRhs(const ModelConfig& model, const GridSpec& grid, const OperatorSet& ops,
                  SchemeKind kind, ForcingSource forcing);

  /// dV/dt = -sum_a u^a o d_a V + C V - eps curl^2 V + SAT(V) + F(t).
  VectorField operator()(const VectorField& v, double t) const;

  const GridSpec& grid() const { return grid_; }
  const ModelConfig& model() const { return model_; }

 private:
  struct StageData {
    const std::vector<ScalarField>* u = nullptr;
    const std::vector<ScalarField>* c = nullptr;
    const PenaltyConfig* pen = nullptr;
    std::vector<ScalarField> u_local;
    std::vector<ScalarField> c_local;
    PenaltyConfig pen_local;
  };

  void fill_velocity_nodes(double t, std::vector<ScalarField>& u,
                           std::vector<ScalarField>& c) const;
  StageData stage_data(double t) const;
  /// Exact-solution values on the boundary strips (zero elsewhere); used for
  /// the boundary data g and, through the discrete curl, for h.
  VectorField exact_on_strips(double t) const;

  ModelConfig model_;
  GridSpec grid_;
  OperatorSet ops_;
  SchemeKind kind_;
  ForcingSource forcing_;

  std::vector<ScalarField> u_cache_;
  std::vector<ScalarField> c_cache_;
  PenaltyConfig pen_cache_;
};

/// One-shot form of SemidiscreteRhs for a single evaluation.
VectorField semidiscrete_rhs(const VectorField& v, double t, const ModelConfig& model,
                             const GridSpec& grid, const OperatorSet& ops, SchemeKind kind,
                             ForcingSource forcing);

}  // namespace sbpsat
