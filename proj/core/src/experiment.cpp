/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "loopda/csv.hpp"
#include "loopda/errors.hpp"
#include "loopda/filters/ekf.hpp"
#include "loopda/filters/enkf.hpp"
#include "loopda/filters/ensrf.hpp"
#include "loopda/filters/etkf.hpp"
#include "loopda/filters/letkf.hpp"
#include "loopda/filters/threedvar.hpp"
#include "loopda/observing.hpp"

namespace loopda {

namespace {

// stream ids for the counter-based generator; one experiment seed covers
// every draw in a run
constexpr std::uint64_t kStreamTruthInit = 1;
constexpr std::uint64_t kStreamEnsInit = 2;
constexpr std::uint64_t kStreamObsBase = 1u << 20;
constexpr std::uint64_t kStreamFilterBase = 2u << 20;
constexpr std::uint64_t kStreamReinitBase = 3u << 20;

std::string model_name(ModelId m) {
  switch (m) {
    case ModelId::Lorenz63: return "lorenz63";
    case ModelId::Em3: return "em3";
    case ModelId::Ring: return "ring";
  }
  return "?";
}

ModelId model_from_name(const std::string& s) {
  if (s == "lorenz63") return ModelId::Lorenz63;
  if (s == "em3") return ModelId::Em3;
  if (s == "ring") return ModelId::Ring;
  throw ConfigError("unknown model: " + s);
}

std::string filter_name(FilterId f) {
  switch (f) {
    case FilterId::ThreeDVar: return "3dvar";
    case FilterId::Ekf: return "ekf";
    case FilterId::Enkf: return "enkf";
    case FilterId::Etkf: return "etkf";
    case FilterId::Ensrf: return "ensrf";
    case FilterId::Letkf: return "letkf";
  }
  return "?";
}

FilterId filter_from_name(const std::string& s) {
  if (s == "3dvar") return FilterId::ThreeDVar;
  if (s == "ekf") return FilterId::Ekf;
  if (s == "enkf") return FilterId::Enkf;
  if (s == "etkf") return FilterId::Etkf;
  if (s == "ensrf") return FilterId::Ensrf;
  if (s == "letkf") return FilterId::Letkf;
  throw ConfigError("unknown filter: " + s);
}

int state_dim(const ExperimentConfig& cfg) {
  return cfg.model == ModelId::Ring ? cfg.ring.dim() : 3;
}

RhsFn model_rhs(const ExperimentConfig& cfg) {
  switch (cfg.model) {
    case ModelId::Lorenz63: return lorenz_rhs_fn(cfg.lorenz);
    case ModelId::Em3: return em3_rhs_fn(cfg.em);
    case ModelId::Ring: return ring_rhs_fn(cfg.ring);
  }
  throw ConfigError("bad model id");
}

JacFn model_jac(const ExperimentConfig& cfg) {
  switch (cfg.model) {
    case ModelId::Lorenz63: return lorenz_jac_fn(cfg.lorenz);
    case ModelId::Em3: return em3_jac_fn(cfg.em);
    case ModelId::Ring: return ring_jac_fn(cfg.ring);
  }
  throw ConfigError("bad model id");
}

int steps_per_window(const ExperimentConfig& cfg) {
  const double ratio = cfg.window / cfg.stepper.dt;
  const int n = static_cast<int>(std::lround(ratio));
  if (n < 1 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
    throw ConfigError("window length must be an integer number of steps");
  }
  return n;
}

Vector initial_truth(const ExperimentConfig& cfg, RngStream& rng) {
  if (cfg.model == ModelId::Ring) {
    Vector x(cfg.ring.dim());
    for (int i = 0; i < cfg.ring.n_cells; ++i) {
      x[i] = cfg.ring.wall_profile[i] + 0.05 * rng.normal();
    }
    x[cfg.ring.n_cells] = 0.01 * rng.normal();
    return x;
  }
  Vector x(3);
  for (int i = 0; i < 3; ++i) x[i] = 1.0 + 0.5 * rng.normal();
  return x;
}

double default_spin_time(const ExperimentConfig& cfg) {
  return cfg.model == ModelId::Ring ? 400.0 : 10.0;
}

ObsSpec build_obs_spec(const ExperimentConfig& cfg, const Vector& clim_std) {
  const int observable =
      cfg.model == ModelId::Ring ? cfg.ring.n_cells : 3;
  ObsSpec spec;
  for (int i = 0; i < observable; i += cfg.obs_spacing) {
    spec.indices.push_back(i);
  }
  if (cfg.model == ModelId::Ring && cfg.observe_velocity) {
    spec.indices.push_back(cfg.ring.n_cells);
  }
  spec.sigma.resize(spec.size());
  for (int i = 0; i < spec.size(); ++i) {
    spec.sigma[i] = cfg.obs_sigma > 0.0
                        ? cfg.obs_sigma
                        : std::max(1e-8, 0.01 * clim_std[spec.indices[i]]);
  }
  return spec;
}

}  // namespace

int velocity_index(const ExperimentConfig& cfg) {
  return cfg.model == ModelId::Ring ? cfg.ring.n_cells : 0;
}

TruthRun generate_truth(const ExperimentConfig& cfg) {
  const RhsFn rhs = model_rhs(cfg);
  RngStream rng(cfg.seed, kStreamTruthInit);
  Vector x = initial_truth(cfg, rng);

  const double spin =
      cfg.truth_spin_time >= 0.0 ? cfg.truth_spin_time : default_spin_time(cfg);
  const int spin_steps = static_cast<int>(std::lround(spin / cfg.stepper.dt));
  for (int s = 0; s < spin_steps; ++s) x = step(rhs, cfg.stepper, x);

  const int n_steps = steps_per_window(cfg);
  TruthRun run;
  run.window_states.reserve(cfg.cycles + 1);
  run.window_states.push_back(x);
  run.window_times.push_back(0.0);
  for (int w = 1; w <= cfg.cycles; ++w) {
    for (int s = 0; s < n_steps; ++s) x = step(rhs, cfg.stepper, x);
    run.window_states.push_back(x);
    run.window_times.push_back(w * cfg.window);
  }

  const int dim = state_dim(cfg);
  run.clim_mean = Vector::Zero(dim);
  for (const auto& s : run.window_states) run.clim_mean += s;
  run.clim_mean /= double(run.window_states.size());
  Vector var = Vector::Zero(dim);
  for (const auto& s : run.window_states) {
    var += (s - run.clim_mean).array().square().matrix();
  }
  var /= double(run.window_states.size());
  run.clim_std = var.cwiseSqrt().cwiseMax(1e-6);
  return run;
}

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

double rmse_observed(const ObsSpec& spec, const Vector& est,
                     const Vector& truth) {
  double acc = 0.0;
  for (int idx : spec.indices) {
    const double d = est[idx] - truth[idx];
    acc += d * d;
  }
  return std::sqrt(acc / spec.size());
}

struct ShiftRow {
  int window;
  int zone;
  int shift;
  bool fallback;
};

}  // namespace

SkillReport run_twin(const ExperimentConfig& cfg) {
  if (cfg.cycles <= cfg.spinup) {
    throw ConfigError("run_twin: cycle count must exceed spin-up");
  }
  const RhsFn rhs = model_rhs(cfg);
  const JacFn jac = model_jac(cfg);
  const int n_steps = steps_per_window(cfg);
  const int dim = state_dim(cfg);
  const int vi = velocity_index(cfg);
  const bool is_ring = cfg.model == ModelId::Ring;

  const TruthRun truth = generate_truth(cfg);
  const ObsSpec obs_spec = build_obs_spec(cfg, truth.clim_std);

  SkillReport report;
  report.spinup = cfg.spinup;

  // climatological flux statistics from the truth run
  std::vector<double> truth_flux(truth.window_states.size(), 0.0);
  if (is_ring) {
    double mean = 0.0;
    for (std::size_t i = 0; i < truth.window_states.size(); ++i) {
      truth_flux[i] = ring_flux(cfg.ring, truth.window_states[i], cfg.rho_ref,
                                cfg.beta_th, cfg.t_ref);
      mean += truth_flux[i];
    }
    mean /= double(truth_flux.size());
    double var = 0.0;
    for (double f : truth_flux) var += (f - mean) * (f - mean);
    report.clim_flux_std = std::sqrt(var / truth_flux.size());
  }

  // filter state
  const bool is_ensemble = cfg.filter == FilterId::Enkf ||
                           cfg.filter == FilterId::Etkf ||
                           cfg.filter == FilterId::Ensrf ||
                           cfg.filter == FilterId::Letkf;
  std::optional<Ensemble> ens;
  std::optional<GaussianBelief> belief;
  Vector var_state;
  Matrix var_b;

  auto init_ensemble = [&](RngStream& rng, const Vector& center) {
    Matrix members(dim, cfg.ensemble_size);
    for (int k = 0; k < cfg.ensemble_size; ++k) {
      for (int i = 0; i < dim; ++i) {
        members(i, k) = center[i] + truth.clim_std[i] * rng.normal();
      }
    }
    ens = Ensemble(std::move(members));
  };

  {
    RngStream rng(cfg.seed, kStreamEnsInit);
    const Vector& x0 = truth.window_states[0];
    if (is_ensemble) {
      init_ensemble(rng, x0);
    } else if (cfg.filter == FilterId::Ekf) {
      GaussianBelief b;
      b.mean = x0;
      for (int i = 0; i < dim; ++i) b.mean[i] += truth.clim_std[i] * rng.normal();
      b.cov = truth.clim_std.array().square().matrix().asDiagonal();
      belief = b;
    } else {
      var_state = x0;
      for (int i = 0; i < dim; ++i) {
        var_state[i] += truth.clim_std[i] * rng.normal();
      }
      // static background covariance from the truth free-run sample
      var_b = Matrix::Zero(dim, dim);
      for (const auto& s : truth.window_states) {
        const Vector d = s - truth.clim_mean;
        var_b += d * d.transpose();
      }
      var_b /= double(truth.window_states.size() - 1);
      var_b.diagonal().array() += 1e-9;
    }
  }

  const double trace_cap =
      belief ? cfg.ekf_trace_cap_factor * belief->cov.trace() : 0.0;
  ZoneLayout base_layout;
  if (cfg.filter == FilterId::Letkf) {
    base_layout = build_zones(is_ring ? cfg.ring.n_cells : dim,
                              cfg.zone_center, cfg.zone_halo);
  }

  std::vector<ShiftRow> shift_rows;
  const Matrix q = Matrix::Zero(dim, dim);  // perfect model

  for (int w = 1; w <= cfg.cycles; ++w) {
    const Vector& xt = truth.window_states[w];
    const double t = truth.window_times[w];
    WindowStat stat;
    stat.time = t;
    stat.truth_dir = sign_of(xt[vi]);
    const int prev_truth_dir = sign_of(truth.window_states[w - 1][vi]);

    const ObservationBatch obs =
        synthesize_obs(obs_spec, xt, t, cfg.seed, kStreamObsBase + w);
    RngStream filter_rng(cfg.seed, kStreamFilterBase + w);

    bool diverged = false;
    Vector forecast_mean;
    try {
      if (is_ensemble) {
        Matrix members = ens->members();
        for (int k = 0; k < cfg.ensemble_size; ++k) {
          Vector x = members.col(k);
          for (int s = 0; s < n_steps; ++s) x = step(rhs, cfg.stepper, x);
          members.col(k) = x;
        }
        Ensemble forecast(std::move(members));
        forecast_mean = forecast.mean();

        stat.spread = (forecast.perturbations().array().square().rowwise().sum() /
                       (cfg.ensemble_size - 1))
                          .sqrt()
                          .mean();
        if (is_ring) {
          stat.flux_truth = truth_flux[w];
          double fmean = 0.0, f2 = 0.0;
          for (int k = 0; k < cfg.ensemble_size; ++k) {
            const double f = ring_flux(cfg.ring, forecast.member(k),
                                       cfg.rho_ref, cfg.beta_th, cfg.t_ref);
            fmean += f;
            f2 += f * f;
          }
          fmean /= cfg.ensemble_size;
          stat.flux_mean = fmean;
          stat.flux_spread = std::sqrt(
              std::max(0.0, f2 / cfg.ensemble_size - fmean * fmean));
        }

        Ensemble analysis = forecast;
        switch (cfg.filter) {
          case FilterId::Enkf:
            analysis = enkf_analysis(forecast, obs, cfg.inflation, filter_rng,
                                     cfg.cov_mode);
            break;
          case FilterId::Etkf:
            analysis = etkf_analysis(forecast, obs, cfg.inflation, filter_rng);
            break;
          case FilterId::Ensrf:
            analysis = ensrf_analysis(forecast, obs, cfg.inflation, filter_rng);
            break;
          case FilterId::Letkf: {
            std::vector<int> shifts(base_layout.zones.size(), cfg.fixed_shift);
            if (cfg.shift_mode == ShiftMode::Adaptive) {
              const double u_local = forecast_mean[vi];
              double u_max = 0.0;
              for (int k = 0; k < cfg.ensemble_size; ++k) {
                u_max = std::max(u_max, std::abs(forecast.member(k)[vi]));
              }
              const int s = adaptive_shift(u_local, u_max, cfg.zone_center);
              shifts.assign(shifts.size(), s);
            }
            const ZoneLayout layout = apply_shift(base_layout, shifts);
            LetkfReport lrep;
            analysis = letkf_analysis(forecast, obs, layout, cfg.inflation,
                                      filter_rng, &lrep);
            for (std::size_t z = 0; z < layout.zones.size(); ++z) {
              const bool fb =
                  std::find(lrep.zones_without_obs.begin(),
                            lrep.zones_without_obs.end(),
                            static_cast<int>(z)) != lrep.zones_without_obs.end();
              shift_rows.push_back({w, static_cast<int>(z),
                                    layout.zones[z].shift, fb});
            }
            break;
          }
          default:
            break;
        }
        ens = analysis;
        stat.rmse_analysis = rmse_observed(obs_spec, ens->mean(), xt);
      } else if (cfg.filter == FilterId::Ekf) {
        // forecast metrics need the propagated mean before the update
        Vector fx = belief->mean;
        for (int s = 0; s < n_steps; ++s) fx = step(rhs, cfg.stepper, fx);
        forecast_mean = fx;
        *belief = ekf_cycle(*belief, rhs, jac, cfg.stepper, n_steps, obs, q,
                            trace_cap);
        stat.spread = belief->cov.diagonal().cwiseSqrt().mean();
        stat.rmse_analysis = rmse_observed(obs_spec, belief->mean, xt);
      } else {
        Vector fx = var_state;
        for (int s = 0; s < n_steps; ++s) fx = step(rhs, cfg.stepper, fx);
        forecast_mean = fx;
        var_state = threedvar_analysis(fx, var_b, obs);
        stat.rmse_analysis = rmse_observed(obs_spec, var_state, xt);
      }
    } catch (const NumericalError&) {
      diverged = true;
    }

    if (diverged) {
      // reinitialize about the climatological mean and keep cycling
      ++report.divergence_events;
      stat.diverged = true;
      RngStream rng(cfg.seed, kStreamReinitBase + w);
      if (is_ensemble) {
        init_ensemble(rng, truth.clim_mean);
      } else if (cfg.filter == FilterId::Ekf) {
        belief->mean = truth.clim_mean;
        for (int i = 0; i < dim; ++i) {
          belief->mean[i] += truth.clim_std[i] * rng.normal();
        }
        belief->cov = truth.clim_std.array().square().matrix().asDiagonal();
      } else {
        var_state = truth.clim_mean;
        for (int i = 0; i < dim; ++i) {
          var_state[i] += truth.clim_std[i] * rng.normal();
        }
      }
      forecast_mean = truth.clim_mean;
      stat.rmse_analysis = rmse_observed(obs_spec, forecast_mean, xt);
    }

    stat.rmse_forecast = rmse_observed(obs_spec, forecast_mean, xt);
    stat.innovation_norm =
        (obs.values - apply_h(obs_spec, forecast_mean)).norm();
    stat.predicted_dir = sign_of(forecast_mean[vi]);

    if (w > cfg.spinup) {
      const bool truth_reversal =
          prev_truth_dir != 0 && stat.truth_dir != 0 &&
          stat.truth_dir != prev_truth_dir;
      // exact-zero predictions score as no-reversal
      const bool predicted_reversal =
          prev_truth_dir != 0 && stat.predicted_dir != 0 &&
          stat.predicted_dir != prev_truth_dir;
      if (truth_reversal && predicted_reversal) ++report.hits;
      else if (truth_reversal) ++report.misses;
      else if (predicted_reversal) ++report.false_alarms;
      else ++report.correct_negatives;
      report.mean_rmse_analysis += stat.rmse_analysis;
      report.mean_rmse_forecast += stat.rmse_forecast;
    }
    report.windows.push_back(stat);
  }

  const int scored = cfg.cycles - cfg.spinup;
  report.mean_rmse_analysis /= scored;
  report.mean_rmse_forecast /= scored;

  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    {
      CsvWriter csv(cfg.out_dir + "/windows.csv",
                    {"window", "time", "rmse_analysis", "rmse_forecast",
                     "spread", "innovation_norm", "predicted_dir", "truth_dir",
                     "flux_truth", "flux_mean", "flux_spread", "diverged"});
      for (std::size_t i = 0; i < report.windows.size(); ++i) {
        const auto& s = report.windows[i];
        csv.row({double(i + 1), s.time, s.rmse_analysis, s.rmse_forecast,
                 s.spread, s.innovation_norm, double(s.predicted_dir),
                 double(s.truth_dir), s.flux_truth, s.flux_mean, s.flux_spread,
                 s.diverged ? 1.0 : 0.0});
      }
    }
    {
      CsvWriter csv(cfg.out_dir + "/skill.csv",
                    {"hits", "misses", "false_alarms", "correct_negatives",
                     "scored", "skill", "divergence_events",
                     "mean_rmse_analysis", "mean_rmse_forecast",
                     "clim_flux_std"});
      csv.row({double(report.hits), double(report.misses),
               double(report.false_alarms), double(report.correct_negatives),
               double(report.scored()), report.skill(),
               double(report.divergence_events), report.mean_rmse_analysis,
               report.mean_rmse_forecast, report.clim_flux_std});
    }
    if (cfg.filter == FilterId::Letkf) {
      CsvWriter csv(cfg.out_dir + "/shifts.csv",
                    {"window", "zone", "shift", "fallback"});
      for (const auto& r : shift_rows) {
        csv.row({double(r.window), double(r.zone), double(r.shift),
                 r.fallback ? 1.0 : 0.0});
      }
    }
  }
  return report;
}

ExperimentConfig experiment_from_config(const Config& c) {
  ExperimentConfig cfg;
  cfg.model = model_from_name(c.get_string("model", "lorenz63"));
  cfg.lorenz.sigma = c.get_double("lorenz_sigma", cfg.lorenz.sigma);
  cfg.lorenz.rho = c.get_double("lorenz_rho", cfg.lorenz.rho);
  cfg.lorenz.beta = c.get_double("lorenz_beta", cfg.lorenz.beta);
  cfg.em.alpha = c.get_double("em_alpha", cfg.em.alpha);
  cfg.em.beta = c.get_double("em_beta", cfg.em.beta);
  cfg.em.k_wall = c.get_double("em_k_wall", cfg.em.k_wall);

  const int n_cells = c.get_int("ring_n_cells", 100);
  cfg.ring = ring_chaotic_params(n_cells);
  cfg.ring.alpha_w = c.get_double("ring_alpha_w", cfg.ring.alpha_w);
  cfg.ring.friction = c.get_double("ring_friction", cfg.ring.friction);
  cfg.ring.buoyancy = c.get_double("ring_buoyancy", cfg.ring.buoyancy);
  cfg.ring.k_wall = c.get_double("ring_k_wall", cfg.ring.k_wall);
  if (c.has("ring_wall_amplitude")) {
    cfg.ring.wall_amplitude = c.get_double("ring_wall_amplitude");
    cfg.ring.wall_profile = ring_cosine_wall(n_cells, cfg.ring.wall_amplitude);
  }

  cfg.seed = c.get_u64("seed", cfg.seed);
  const std::string scheme = c.get_string("scheme", "rk4");
  if (scheme == "rk2") cfg.stepper.scheme = Scheme::Rk2;
  else if (scheme == "rk4") cfg.stepper.scheme = Scheme::Rk4;
  else throw ConfigError("unknown scheme: " + scheme);
  cfg.stepper.dt = c.get_double("dt", cfg.model == ModelId::Ring ? 0.02 : 0.01);
  cfg.window = c.get_double("window", cfg.model == ModelId::Ring ? 10.0 : 0.26);
  cfg.cycles = c.get_int("cycles", cfg.cycles);
  cfg.spinup = c.get_int("spinup", cfg.spinup);
  cfg.truth_spin_time = c.get_double("truth_spin_time", cfg.truth_spin_time);

  cfg.filter = filter_from_name(c.get_string("filter", "etkf"));
  cfg.inflation.mult = c.get_double("inflation_mult", cfg.inflation.mult);
  cfg.inflation.add = c.get_double("inflation_add", cfg.inflation.add);
  cfg.inflation.letkf_rho = c.get_double("inflation_rho", cfg.inflation.letkf_rho);
  cfg.ensemble_size = c.get_int("ensemble_size", cfg.ensemble_size);
  cfg.cov_mode = c.get_string("cov_mode", "standard") == "leave_one_out"
                     ? CovMode::LeaveOneOut
                     : CovMode::Standard;
  cfg.ekf_trace_cap_factor =
      c.get_double("ekf_trace_cap_factor", cfg.ekf_trace_cap_factor);

  cfg.obs_spacing = c.get_int("obs_spacing", cfg.obs_spacing);
  cfg.obs_sigma = c.get_double("obs_sigma", cfg.obs_sigma);
  cfg.observe_velocity = c.get_bool("observe_velocity", cfg.observe_velocity);

  cfg.zone_center = c.get_int("zone_center", cfg.zone_center);
  cfg.zone_halo = c.get_int("zone_halo", cfg.zone_halo);
  const std::string sm = c.get_string("shift_mode", "fixed");
  if (sm == "fixed") cfg.shift_mode = ShiftMode::Fixed;
  else if (sm == "adaptive") cfg.shift_mode = ShiftMode::Adaptive;
  else throw ConfigError("unknown shift_mode: " + sm);
  cfg.fixed_shift = c.get_int("fixed_shift", cfg.fixed_shift);

  cfg.rho_ref = c.get_double("rho_ref", cfg.rho_ref);
  cfg.beta_th = c.get_double("beta_th", cfg.beta_th);
  cfg.t_ref = c.get_double("t_ref", cfg.t_ref);
  cfg.reversal_hold = c.get_double("reversal_hold", cfg.reversal_hold);
  cfg.out_dir = c.get_string("out_dir", cfg.out_dir);
  return cfg;
}

Config experiment_to_config(const ExperimentConfig& cfg) {
  Config c;
  c.set("model", model_name(cfg.model));
  c.set("lorenz_sigma", cfg.lorenz.sigma);
  c.set("lorenz_rho", cfg.lorenz.rho);
  c.set("lorenz_beta", cfg.lorenz.beta);
  c.set("em_alpha", cfg.em.alpha);
  c.set("em_beta", cfg.em.beta);
  c.set("em_k_wall", cfg.em.k_wall);
  c.set("ring_n_cells", cfg.ring.n_cells);
  c.set("ring_alpha_w", cfg.ring.alpha_w);
  c.set("ring_friction", cfg.ring.friction);
  c.set("ring_buoyancy", cfg.ring.buoyancy);
  c.set("ring_k_wall", cfg.ring.k_wall);
  c.set("ring_wall_amplitude", cfg.ring.wall_amplitude);
  c.set("seed", std::to_string(cfg.seed));
  c.set("scheme", cfg.stepper.scheme == Scheme::Rk2 ? "rk2" : "rk4");
  c.set("dt", cfg.stepper.dt);
  c.set("window", cfg.window);
  c.set("cycles", cfg.cycles);
  c.set("spinup", cfg.spinup);
  c.set("truth_spin_time", cfg.truth_spin_time);
  c.set("filter", filter_name(cfg.filter));
  c.set("inflation_mult", cfg.inflation.mult);
  c.set("inflation_add", cfg.inflation.add);
  c.set("inflation_rho", cfg.inflation.letkf_rho);
  c.set("ensemble_size", cfg.ensemble_size);
  c.set("cov_mode",
        cfg.cov_mode == CovMode::LeaveOneOut ? "leave_one_out" : "standard");
  c.set("ekf_trace_cap_factor", cfg.ekf_trace_cap_factor);
  c.set("obs_spacing", cfg.obs_spacing);
  c.set("obs_sigma", cfg.obs_sigma);
  c.set("observe_velocity", cfg.observe_velocity ? "true" : "false");
  c.set("zone_center", cfg.zone_center);
  c.set("zone_halo", cfg.zone_halo);
  c.set("shift_mode",
        cfg.shift_mode == ShiftMode::Adaptive ? "adaptive" : "fixed");
  c.set("fixed_shift", cfg.fixed_shift);
  c.set("rho_ref", cfg.rho_ref);
  c.set("beta_th", cfg.beta_th);
  c.set("t_ref", cfg.t_ref);
  c.set("reversal_hold", cfg.reversal_hold);
  c.set("out_dir", cfg.out_dir);
  return c;
}

void write_manifest(const ExperimentConfig& cfg, const std::string& command,
                    double wall_seconds) {
  write_manifest_config(experiment_to_config(cfg), cfg.out_dir, command,
                        wall_seconds);
}

void write_manifest_config(const Config& cfg, const std::string& out_dir,
                           const std::string& command, double wall_seconds) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  nlohmann::json j;
  j["command"] = command;
  j["version"] = "0.1.0";
  j["wall_time_s"] = wall_seconds;
  nlohmann::json conf = nlohmann::json::object();
  for (const auto& [k, v] : cfg.entries()) conf[k] = v;
  j["config"] = conf;
  std::ofstream out(out_dir + "/manifest.json");
  out << j.dump(2) << '\n';
}

Config load_config_or_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  in.seekg(0);
  if (first != '{') return Config::parse(in);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad manifest JSON in " + path + ": " + e.what());
  }
  if (!j.contains("config") || !j["config"].is_object()) {
    throw ConfigError("manifest " + path + " has no config object");
  }
  Config c;
  for (const auto& [k, v] : j["config"].items()) {
    c.set(k, v.get<std::string>());
  }
  return c;
}

}  // namespace loopda
