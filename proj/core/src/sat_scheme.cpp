#include "sbpsat/sat_scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbpsat {

namespace {

void check_ops(const OperatorSet& ops, const GridSpec& grid) {
  if (ops.dim() != grid.dim())
    throw std::invalid_argument("operator set does not match grid dimension");
  for (int a = 0; a < grid.dim(); ++a)
    if (ops.op(a).nodes != grid.axis(a).nodes)
      throw std::invalid_argument("operator set does not match grid size");
}

void check_field(const VectorField& v, const GridSpec& grid) {
  if (v.dim() != grid.dim() || !(v.grid() == grid))
    throw std::invalid_argument("field shape does not match grid");
}

std::array<double, 3> node_point(const GridSpec& grid, int i, int j, int k) {
  std::array<double, 3> x{grid.axis(0).coord(i), grid.axis(1).coord(j), 0.0};
  if (grid.dim() == 3) x[2] = grid.axis(2).coord(k);
  return x;
}

}  // namespace

PenaltyConfig build_penalties(const ModelConfig& model, const GridSpec& grid,
                              const OperatorSet& ops, SchemeKind kind, double t) {
  check_ops(ops, grid);
  if (model.velocity.dimension != grid.dim())
    throw std::invalid_argument("build_penalties: velocity dimension mismatch");
  if (kind == SchemeKind::MixedResistive && model.epsilon <= 0.0)
    throw std::invalid_argument("build_penalties: mixed scheme requires epsilon > 0");

  PenaltyConfig pen;
  pen.epsilon = model.epsilon;
  pen.faces.resize(static_cast<std::size_t>(2 * grid.dim()));
  for (int fi = 0; fi < 2 * grid.dim(); ++fi) {
    const Face face = static_cast<Face>(fi);
    const int a = face_axis(face);
    const bool high = face_is_high(face);
    FacePenalty& fp = pen.faces[static_cast<std::size_t>(fi)];
    const double ph = ops.op(a).p_corner * grid.axis(a).spacing;
    fp.inv_ph = 1.0 / ph;
    // Both schemes carry the resistive value penalty sigma'' = -1/(2 p dx);
    // for the mixed scheme it adds face dissipation on top of the curl
    // penalty and is what restores the interior-order convergence of the
    // fourth-order scheme on fine grids.
    fp.sigma_dprime = -1.0 / (2.0 * ph);
    fp.sigma_prime.reserve(grid.num_nodes() / static_cast<std::size_t>(grid.axis(a).nodes));
    for_each_face_node(grid, face, [&](std::size_t, int i, int j, int k) {
      const double ua = model.velocity.component(a, node_point(grid, i, j, k), t);
      // High side penalizes the negative part, low side the positive part.
      fp.sigma_prime.push_back(high ? std::min(ua, 0.0) / 2.0 : -std::max(ua, 0.0) / 2.0);
    });
  }
  return pen;
}

VectorField sat_dirichlet(const VectorField& v, const VectorField& g,
                          const PenaltyConfig& pen, const GridSpec& grid,
                          const OperatorSet& ops) {
  check_ops(ops, grid);
  check_field(v, grid);
  check_field(g, grid);
  VectorField out(grid);
  for (int fi = 0; fi < 2 * grid.dim(); ++fi) {
    const FacePenalty& fp = pen.faces[static_cast<std::size_t>(fi)];
    std::size_t node = 0;
    for_each_face_node(grid, static_cast<Face>(fi), [&](std::size_t idx, int, int, int) {
      const double coef = fp.inv_ph * (fp.sigma_prime[node] + pen.epsilon * fp.sigma_dprime);
      for (int c = 0; c < v.dim(); ++c) out[c][idx] += coef * (v[c][idx] - g[c][idx]);
      ++node;
    });
  }
  return out;
}

namespace {

// Curl penalty of the mixed scheme acting on (curl V - h) face values.
void add_mixed_curl_penalty(const GridSpec& grid, const PenaltyConfig& pen, double epsilon,
                            const ScalarField& curl_minus_h, VectorField& out) {
  auto add_face = [&](Face face, int comp, double sign) {
    const double scale = sign * epsilon * pen.face(face).inv_ph;
    for_each_face_node(grid, face, [&](std::size_t idx, int, int, int) {
      out[comp][idx] += scale * curl_minus_h[idx];
    });
  };
  add_face(Face::YHigh, 0, +1.0);
  add_face(Face::YLow, 0, -1.0);
  add_face(Face::XHigh, 1, -1.0);
  add_face(Face::XLow, 1, +1.0);
}

}  // namespace

VectorField sat_mixed(const VectorField& v, const VectorField& g, const ScalarField& h,
                      const PenaltyConfig& pen, const GridSpec& grid,
                      const OperatorSet& ops, double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("sat_mixed: epsilon must be > 0");
  if (grid.dim() != 2) throw std::invalid_argument("sat_mixed: the mixed scheme is 2D only");
  check_ops(ops, grid);
  check_field(v, grid);
  check_field(g, grid);
  if (!(h.grid == grid)) throw std::invalid_argument("sat_mixed: h grid mismatch");

  VectorField out = sat_dirichlet(v, g, pen, grid, ops);

  ScalarField curl = curl_2d(ops, v);
  ScalarField diff(grid);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = curl[i] - h[i];
  add_mixed_curl_penalty(grid, pen, epsilon, diff, out);
  return out;
}

SemidiscreteRhs::SemidiscreteRhs(const ModelConfig& model, const GridSpec& grid,
                                 const OperatorSet& ops, SchemeKind kind,
                                 ForcingSource forcing)
    : model_(model), grid_(grid), ops_(ops), kind_(kind), forcing_(forcing) {
  model_.validate();
  check_ops(ops_, grid_);
  if (model_.velocity.dimension != grid_.dim())
    throw std::invalid_argument("SemidiscreteRhs: velocity dimension mismatch");
  if (kind_ == SchemeKind::MixedResistive) {
    if (grid_.dim() != 2)
      throw std::invalid_argument("SemidiscreteRhs: the mixed scheme is 2D only");
    if (model_.epsilon <= 0.0)
      throw std::invalid_argument("SemidiscreteRhs: mixed scheme requires epsilon > 0");
  }
  if (grid_.dim() == 3 && forcing_ != ForcingSource::None)
    throw std::invalid_argument("SemidiscreteRhs: forcing terms are 2D only");
  if (grid_.dim() == 3 && model_.exact)
    throw std::invalid_argument("SemidiscreteRhs: exact-solution boundary data is 2D only");
  if (forcing_ == ForcingSource::ResidualOracle && !model_.exact)
    throw std::invalid_argument("SemidiscreteRhs: residual-oracle forcing needs an exact solution");

  if (!model_.velocity.time_dependent) {
    fill_velocity_nodes(0.0, u_cache_, c_cache_);
    pen_cache_ = build_penalties(model_, grid_, ops_, kind_, 0.0);
  }
}

void SemidiscreteRhs::fill_velocity_nodes(double t, std::vector<ScalarField>& u,
                                          std::vector<ScalarField>& c) const {
  const int d = grid_.dim();
  u.assign(static_cast<std::size_t>(d), ScalarField(grid_));
  c.assign(static_cast<std::size_t>(d * d), ScalarField(grid_));
  const int n = grid_.axis(0).nodes, m = grid_.axis(1).nodes;
  const int kk = d == 3 ? grid_.axis(2).nodes : 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < kk; ++k) {
        const std::array<double, 3> x = node_point(grid_, i, j, k);
        const std::size_t idx = d == 2 ? grid_.index(i, j) : grid_.index(i, j, k);
        for (int a = 0; a < d; ++a)
          u[static_cast<std::size_t>(a)][idx] = model_.velocity.component(a, x, t);
        if (d == 2) {
          const double u1x = model_.velocity.partial(0, 0, x, t);
          const double u1y = model_.velocity.partial(0, 1, x, t);
          const double u2x = model_.velocity.partial(1, 0, x, t);
          const double u2y = model_.velocity.partial(1, 1, x, t);
          c[0][idx] = -u2y;
          c[1][idx] = u1y;
          c[2][idx] = u2x;
          c[3][idx] = -u1x;
        } else {
          const double u1x = model_.velocity.partial(0, 0, x, t);
          const double u1y = model_.velocity.partial(0, 1, x, t);
          const double u1z = model_.velocity.partial(0, 2, x, t);
          const double u2x = model_.velocity.partial(1, 0, x, t);
          const double u2y = model_.velocity.partial(1, 1, x, t);
          const double u2z = model_.velocity.partial(1, 2, x, t);
          const double u3x = model_.velocity.partial(2, 0, x, t);
          const double u3y = model_.velocity.partial(2, 1, x, t);
          const double u3z = model_.velocity.partial(2, 2, x, t);
          c[0][idx] = -u2y - u3z;
          c[1][idx] = u1y;
          c[2][idx] = u1z;
          c[3][idx] = u2x;
          c[4][idx] = -u1x - u3z;
          c[5][idx] = u2z;
          c[6][idx] = u3x;
          c[7][idx] = u3y;
          c[8][idx] = -u1x - u2y;
        }
      }
    }
  }
}

SemidiscreteRhs::StageData SemidiscreteRhs::stage_data(double t) const {
  StageData sd;
  if (!model_.velocity.time_dependent) {
    sd.u = &u_cache_;
    sd.c = &c_cache_;
    sd.pen = &pen_cache_;
    return sd;
  }
  fill_velocity_nodes(t, sd.u_local, sd.c_local);
  sd.pen_local = build_penalties(model_, grid_, ops_, kind_, t);
  sd.u = &sd.u_local;
  sd.c = &sd.c_local;
  sd.pen = &sd.pen_local;
  return sd;
}

VectorField SemidiscreteRhs::exact_on_strips(double t) const {
  VectorField g(grid_);
  if (!model_.exact) return g;
  const ExactSolution& ex = *model_.exact;
  const int n = grid_.axis(0).nodes, m = grid_.axis(1).nodes;
  const int dx = std::min(ops_.op(0).closure_cols, n);
  const int dy = std::min(ops_.op(1).closure_cols, m);
  auto fill = [&](int i, int j) {
    const std::array<double, 2> b =
        ex.value(grid_.axis(0).coord(i), grid_.axis(1).coord(j), t);
    const std::size_t idx = grid_.index(i, j);
    g[0][idx] = b[0];
    g[1][idx] = b[1];
  };
  for (int i = 0; i < n; ++i) {
    const bool edge_i = i < dx || i >= n - dx;
    for (int j = 0; j < m; ++j)
      if (edge_i || j < dy || j >= m - dy) fill(i, j);
  }
  return g;
}

VectorField SemidiscreteRhs::operator()(const VectorField& v, double t) const {
  check_field(v, grid_);
  const StageData sd = stage_data(t);
  const std::vector<ScalarField>& u = *sd.u;
  const std::vector<ScalarField>& cm = *sd.c;
  const PenaltyConfig& pen = *sd.pen;
  const double eps = model_.epsilon;
  const std::size_t nn = grid_.num_nodes();

  VectorField out(grid_);
  if (grid_.dim() == 2) {
    const ScalarField dx_v1 = apply_d_axis(ops_, 0, v[0]);
    const ScalarField dy_v1 = apply_d_axis(ops_, 1, v[0]);
    const ScalarField dx_v2 = apply_d_axis(ops_, 0, v[1]);
    const ScalarField dy_v2 = apply_d_axis(ops_, 1, v[1]);
    const VectorField cc = detail::curlcurl_2d_from(ops_, dy_v1, dy_v2, dx_v2);

    const double* u1 = u[0].values.data();
    const double* u2 = u[1].values.data();
    const double* c00 = cm[0].values.data();
    const double* c01 = cm[1].values.data();
    const double* c10 = cm[2].values.data();
    const double* c11 = cm[3].values.data();
    const double* v1 = v[0].values.data();
    const double* v2 = v[1].values.data();
    double* o1 = out[0].values.data();
    double* o2 = out[1].values.data();
#pragma omp parallel for schedule(static) if (nn > 4096)
    for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(nn); ++q) {
      o1[q] = -u1[q] * dx_v1[static_cast<std::size_t>(q)] -
              u2[q] * dy_v1[static_cast<std::size_t>(q)] + c00[q] * v1[q] +
              c01[q] * v2[q] - eps * cc[0][static_cast<std::size_t>(q)];
      o2[q] = -u1[q] * dx_v2[static_cast<std::size_t>(q)] -
              u2[q] * dy_v2[static_cast<std::size_t>(q)] + c10[q] * v1[q] +
              c11[q] * v2[q] - eps * cc[1][static_cast<std::size_t>(q)];
    }

    if (forcing_ == ForcingSource::Printed) {
      const VectorField f = forcing_printed(t, grid_, eps);
      axpy(1.0, f, out);
    } else if (forcing_ == ForcingSource::ResidualOracle) {
      const VectorField f = forcing_residual_oracle(t, grid_, model_);
      axpy(1.0, f, out);
    }

    const VectorField g = exact_on_strips(t);
    for (int fi = 0; fi < 4; ++fi) {
      const FacePenalty& fp = pen.faces[static_cast<std::size_t>(fi)];
      std::size_t node = 0;
      for_each_face_node(grid_, static_cast<Face>(fi), [&](std::size_t idx, int, int, int) {
        const double coef =
            fp.inv_ph * (fp.sigma_prime[node] + pen.epsilon * fp.sigma_dprime);
        out[0][idx] += coef * (v[0][idx] - g[0][idx]);
        out[1][idx] += coef * (v[1][idx] - g[1][idx]);
        ++node;
      });
    }
    if (kind_ == SchemeKind::MixedResistive) {
      // h is the discrete curl of the exact solution's restriction; the strip
      // field carries every value that the face-node curl touches.
      ScalarField curl_minus_h(grid_);
      {
        const ScalarField dx_g2 = apply_d_axis(ops_, 0, g[1]);
        const ScalarField dy_g1 = apply_d_axis(ops_, 1, g[0]);
        for (std::size_t q = 0; q < nn; ++q)
          curl_minus_h[q] = (dx_v2[q] - dy_v1[q]) - (dx_g2[q] - dy_g1[q]);
      }
      add_mixed_curl_penalty(grid_, pen, eps, curl_minus_h, out);
    }
    return out;
  }

  // 3D Dirichlet scheme.
  const ScalarField dx_v1 = apply_d_axis(ops_, 0, v[0]);
  const ScalarField dy_v1 = apply_d_axis(ops_, 1, v[0]);
  const ScalarField dz_v1 = apply_d_axis(ops_, 2, v[0]);
  const ScalarField dx_v2 = apply_d_axis(ops_, 0, v[1]);
  const ScalarField dy_v2 = apply_d_axis(ops_, 1, v[1]);
  const ScalarField dz_v2 = apply_d_axis(ops_, 2, v[1]);
  const ScalarField dx_v3 = apply_d_axis(ops_, 0, v[2]);
  const ScalarField dy_v3 = apply_d_axis(ops_, 1, v[2]);
  const ScalarField dz_v3 = apply_d_axis(ops_, 2, v[2]);

  ScalarField w1(grid_), w2(grid_), w3(grid_);
  for (std::size_t q = 0; q < nn; ++q) {
    w1[q] = dy_v3[q] - dz_v2[q];
    w2[q] = dz_v1[q] - dx_v3[q];
    w3[q] = dx_v2[q] - dy_v1[q];
  }
  const VectorField cc = detail::curlcurl_3d_from(ops_, w1, w2, w3);

  const ScalarField* dv[3][3] = {{&dx_v1, &dy_v1, &dz_v1},
                                 {&dx_v2, &dy_v2, &dz_v2},
                                 {&dx_v3, &dy_v3, &dz_v3}};
  for (std::size_t q = 0; q < nn; ++q) {
    for (int l = 0; l < 3; ++l) {
      double acc = -eps * cc[l][q];
      for (int a = 0; a < 3; ++a) acc -= u[static_cast<std::size_t>(a)][q] * (*dv[l][a])[q];
      for (int mcomp = 0; mcomp < 3; ++mcomp)
        acc += cm[static_cast<std::size_t>(3 * l + mcomp)][q] * v[mcomp][q];
      out[l][q] = acc;
    }
  }

  for (int fi = 0; fi < 6; ++fi) {
    const FacePenalty& fp = pen.faces[static_cast<std::size_t>(fi)];
    std::size_t node = 0;
    for_each_face_node(grid_, static_cast<Face>(fi), [&](std::size_t idx, int, int, int) {
      const double coef = fp.inv_ph * (fp.sigma_prime[node] + pen.epsilon * fp.sigma_dprime);
      for (int c = 0; c < 3; ++c) out[c][idx] += coef * v[c][idx];
      ++node;
    });
  }
  return out;
}

VectorField semidiscrete_rhs(const VectorField& v, double t, const ModelConfig& model,
                             const GridSpec& grid, const OperatorSet& ops, SchemeKind kind,
                             ForcingSource forcing) {
  return SemidiscreteRhs(model, grid, ops, kind, forcing)(v, t);
}

}  // namespace sbpsat
