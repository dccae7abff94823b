/// @file grid.hpp
/// @brief Tensor-product grids and flat grid functions.
///
/// Grid functions are stored as flat vectors in lexicographic order with the
/// last axis fastest: in 2D, w = (w_{0,0}, w_{0,1}, ..., w_{0,M-1}, w_{1,0}, ...).

#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace sbpsat {

struct AxisSpec {
  int nodes = 0;
  double spacing = 0.0;
  double origin = 0.0;

  double coord(int i) const { return origin + spacing * i; }
  double extent() const { return spacing * (nodes - 1); }
  bool operator==(const AxisSpec&) const = default;
};

class GridSpec {
 public:
  GridSpec() = default;
  explicit GridSpec(std::vector<AxisSpec> axes);

  /// nodes_per_axis nodes on [lo, hi] per axis, spacing = (hi-lo)/(nodes-1).
  static GridSpec square(int nodes_per_axis, double lo, double hi);
  static GridSpec cube(int nodes_per_axis, double lo, double hi);
  static GridSpec rectangle(int nx, int ny, double x0, double x1, double y0, double y1);
  static GridSpec box(int nx, int ny, int nz, std::array<double, 6> bounds);

  int dim() const { return dim_; }
  const AxisSpec& axis(int a) const { return axes_[static_cast<std::size_t>(a)]; }
  std::size_t num_nodes() const;
  double min_spacing() const;

  /// Flat-index stride of one step along an axis.
  std::ptrdiff_t stride(int a) const;

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * axes_[1].nodes + j;
  }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * axes_[1].nodes + j) * axes_[2].nodes + k;
  }

  bool operator==(const GridSpec& other) const;

 private:
  std::array<AxisSpec, 3> axes_{};
  int dim_ = 0;
};

struct ScalarField {
  GridSpec grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const GridSpec& g, double fill = 0.0)
      : grid(g), values(g.num_nodes(), fill) {}

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
};

/// d scalar components sharing one grid (d = grid dimension).
struct VectorField {
  std::vector<ScalarField> components;

  VectorField() = default;
  explicit VectorField(const GridSpec& g, double fill = 0.0)
      : components(static_cast<std::size_t>(g.dim()), ScalarField(g, fill)) {}

  int dim() const { return static_cast<int>(components.size()); }
  const GridSpec& grid() const { return components.front().grid; }
  ScalarField& operator[](int c) { return components[static_cast<std::size_t>(c)]; }
  const ScalarField& operator[](int c) const {
    return components[static_cast<std::size_t>(c)];
  }
};

/// Domain faces; the z faces exist only on 3D grids.
enum class Face { XLow = 0, XHigh, YLow, YHigh, ZLow, ZHigh };

constexpr int face_axis(Face f) { return static_cast<int>(f) / 2; }
constexpr bool face_is_high(Face f) { return static_cast<int>(f) % 2 != 0; }

// y += a*x, elementwise; shapes must agree.
void axpy(double a, const ScalarField& x, ScalarField& y);
void axpy(double a, const VectorField& x, VectorField& y);

}  // namespace sbpsat
