/*
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QGVAR_QG_MODEL_HPP_
#define QGVAR_QG_MODEL_HPP_

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qgvar/fields.hpp"
#include "qgvar/spectral.hpp"

namespace qgvar {

/// Bottom-layer orography contribution to potential vorticity.
struct OrographyField {
  ArrayXXd rs;  // ny x nx, nondimensional PV units
  bool empty() const { return rs.size() == 0; }
};

/// Gaussian hill of amplitude 0.1 centred at (nx/4, ny/2), e-folding radius
/// 3 grid cells, periodic in x.
OrographyField default_orography(int ny, int nx);

struct QGConfig {
  int nx = 40;
  int ny = 20;
  int n_layers = 2;
  double top_depth = 6000.0;      // m
  double bottom_depth = 4000.0;   // m
  double dt_seconds = 600.0;
  double f0 = 1.0e-4;             // s^-1
  double beta = 1.5e-11;          // m^-1 s^-1
  double reduced_gravity = 1.0;   // m s^-2
  double length_scale = 1.0e6;    // m
  double velocity_scale = 10.0;   // m s^-1
  double domain_x_meters = 1.2e7;
  double domain_y_meters = 6.3e6;
  OrographyField orography;       // empty selects default_orography

  /// Layer coupling coefficients F_i = f0^2 L^2 / (g' D_i).
  double coupling_top() const {
    return f0 * f0 * length_scale * length_scale /
           (reduced_gravity * top_depth);
  }
  double coupling_bottom() const {
    return f0 * f0 * length_scale * length_scale /
           (reduced_gravity * bottom_depth);
  }
  /// Nondimensional planetary vorticity gradient beta L^2 / U.
  double beta_hat() const {
    return beta * length_scale * length_scale / velocity_scale;
  }
  double dx() const { return domain_x_meters / nx / length_scale; }
  double dy() const { return domain_y_meters / (ny - 1) / length_scale; }
  double dt_nd() const { return dt_seconds * velocity_scale / length_scale; }
  double y_coord(int j) const { return j * dy(); }

  void validate() const;

  static QGConfig reference();
  static QGConfig perturbed();
};

struct QGState {
  Fields psi;
  double valid_time = 0.0;  // seconds since experiment epoch

  QGState() = default;
  QGState(int ny, int nx, double t = 0.0) : psi(ny, nx), valid_time(t) {}
};

struct PVField {
  Fields q;
};

/// Departure-point metadata recorded by one semi-Lagrangian step, enough to
/// run the exact tangent-linear and adjoint of that step.
struct StepTape {
  std::array<Eigen::ArrayXXi, 2> cell_x, cell_y;
  std::array<ArrayXXd, 2> frac_x, frac_y;
  std::array<ArrayXXd, 2> grad_x, grad_y;  // base-PV gradient, index units
  std::array<Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>, 2> clamped;
};

/// Record of a nonlinear integration used for linearization. states[s] is the
/// state after step s+1; replaying the tape returns these states bit-exactly.
struct TrajectoryTape {
  QGState initial;
  std::vector<StepTape> steps;
  std::vector<QGState> states;

  int n_steps() const { return static_cast<int>(steps.size()); }
  const QGState& state_after(int s) const {
    return s == 0 ? initial : states[s - 1];
  }
};

using StepVisitor = std::function<void(int step, const QGState&)>;
using IncrementVisitor = std::function<void(int step, const Fields&)>;
/// Called with the adjoint state before the reverse step; may add forcing.
using AdjointInjector = std::function<void(int step, Fields&)>;

/// Two-layer quasi-geostrophic channel model: PV conservation with
/// semi-Lagrangian advection, spectral-in-x / tridiagonal-in-y inversion,
/// periodic in x, rigid walls in y. All methods are const and thread-safe.
class QGModel {
 public:
  explicit QGModel(QGConfig cfg);

  const QGConfig& config() const { return cfg_; }

  /// q_1 = lap(psi_1) - F1 (psi_1 - psi_2) + beta_hat y
  /// q_2 = lap(psi_2) - F2 (psi_2 - psi_1) + beta_hat y + rs
  /// Wall rows use a mirrored ghost row for the y part of the Laplacian.
  PVField pv_from_psi(const QGState& state) const;

  /// Exact inverse of pv_from_psi on the interior rows, with Dirichlet data
  /// for psi taken from the wall rows of `boundary`. Wall rows of the result
  /// equal the boundary values.
  QGState psi_from_pv(const PVField& pv, const QGState& boundary) const;

  /// Freezes the y-boundary PV used by advection to the values implied by
  /// this state. Cycling runs freeze it once from the run's initial state.
  void freeze_boundary(const QGState& state);
  bool boundary_frozen() const { return boundary_frozen_; }

  /// One semi-Lagrangian time step of dt_seconds.
  QGState step(const QGState& state, StepTape* tape = nullptr) const;

  /// Resolvent from t0 to t1 (integer number of steps).
  QGState resolvent(const QGState& state, double t0, double t1,
                    TrajectoryTape* tape = nullptr,
                    const StepVisitor& visit = {}) const;

  /// Resolvent of the w-debiased model: the constant forcing w is added to
  /// psi after every model time step.
  QGState resolvent_forced(const Fields& w, const QGState& state, double t0,
                           double t1, TrajectoryTape* tape = nullptr,
                           const StepVisitor& visit = {}) const;

  /// Tangent linear of resolvent_forced about the tape. visit(s, dx_s) is
  /// called after every step (post forcing addition); returns the final
  /// increment.
  Fields tl_sweep(const TrajectoryTape& tape, const Fields& dx0,
                  const Fields& dw, const IncrementVisitor& visit = {}) const;

  /// Exact adjoint of tl_sweep. inject(s, lambda) is called for
  /// s = n_steps .. 0 before the reverse step (s = 0 after the last one) and
  /// adds any adjoint forcing at that step's state. Returns the adjoints of
  /// (dx0, dw).
  std::pair<Fields, Fields> ad_sweep(const TrajectoryTape& tape,
                                     const AdjointInjector& inject) const;

  /// Materialized variants of the sweeps: the full trajectory of increments
  /// for the TL, and the adjoint of a full increment stream.
  std::vector<Fields> tangent_linear(const TrajectoryTape& tape,
                                     const Fields& dx0,
                                     const Fields& dw) const;
  std::pair<Fields, Fields> adjoint(const TrajectoryTape& tape,
                                    const std::vector<Fields>& dxt) const;

  /// Single-step building blocks (exposed for the dense-matrix tests).
  Fields tl_step(const StepTape& tape, const Fields& dpsi) const;
  Fields ad_step(const StepTape& tape, const Fields& dpsi_tilde) const;

 private:
  struct TridiagFactors {
    // Thomas factors per vertical mode and x column; interior size M = ny-2.
    Eigen::MatrixXd denom[2];   // M x nx
    Eigen::MatrixXd cprime[2];  // (M-1) x nx
  };

  Fields advection_pv(const Fields& psi) const;
  void interior_pv_linear(const Fields& dpsi, Fields& dq) const;
  void interior_pv_linear_adjoint(const Fields& dq, Fields& dpsi) const;
  Fields invert_core(const Fields& g_interior, const Fields& walls) const;
  void invert_core_adjoint(const Fields& psi_tilde, Fields& g_tilde,
                           Fields& wall_tilde) const;
  void advect(const Fields& q, const Fields& psi, Fields& out,
              StepTape* tape) const;

  QGConfig cfg_;
  CirculantBasis bx_;
  TridiagFactors tri_;
  ArrayXXd rs_;        // orography, ny x nx
  ArrayXXd beta_y_;    // beta_hat * y, ny x nx
  Fields boundary_q_;  // frozen wall PV (only wall rows meaningful)
  bool boundary_frozen_ = false;
  double f_[2];        // coupling coefficients per layer
};

/// Two-layer zonal jet with seeded small-amplitude noise, the initial
/// condition for relaxation runs.
QGState initial_jet_state(const QGConfig& cfg, std::uint64_t seed);

}  // namespace qgvar

#endif  // QGVAR_QG_MODEL_HPP_
