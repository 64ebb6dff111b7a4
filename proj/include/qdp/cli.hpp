// Copyright 2026 The qdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. `run_cli` is the whole program; the executable
// only forwards argv and the standard streams.
//
// Exit codes: 0 ok, 2 bad input or out-of-range parameter, 3 invariant
// violation in the supplied objects, 4 method not applicable, 5 refusal to
// certify with an unsound bound.

#ifndef QDP_CLI_HPP_
#define QDP_CLI_HPP_

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qdp/channel.hpp"
#include "qdp/contraction.hpp"
#include "qdp/core.hpp"
#include "qdp/divergences.hpp"
#include "qdp/dp.hpp"
#include "qdp/hypothesis.hpp"
#include "qdp/io.hpp"
#include "qdp/renyi.hpp"

namespace qdp::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kInvariantError = 3,
  kMethodError = 4,
  kSoundnessError = 5,
};

inline std::string format(const char* fmt, double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

inline std::string fixed12(double x) { return format("%.12f", x); }
inline std::string sig12(double x) { return format("%.12g", x); }

// Canonical neighboring qubit pair with trace distance 1/3.
inline DensityMatrix fixture_rho() { return DensityMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0}); }
inline DensityMatrix fixture_sigma() { return DensityMatrix::diagonal({1.0 / 3.0, 2.0 / 3.0}); }

// -- sweeps -------------------------------------------------------------------

using Params = std::map<std::string, double>;

inline std::size_t integer_param(const Params& p, const std::string& key) {
  const double v = p.at(key);
  const double r = std::round(v);
  if (!(std::abs(v - r) <= 1e-9) || r < 1.0) {
    throw DomainError("parameter '" + key + "' must be a positive integer, got " + sig12(v));
  }
  return static_cast<std::size_t>(r);
}

struct SweepQuantity {
  Params defaults;
  std::vector<std::string> columns;  // evaluated once per series
  std::function<std::vector<double>(const Params&)> eval;
  std::vector<std::string> shared_columns;  // evaluated once per row with the base parameters
  std::function<std::vector<double>(const Params&)> eval_shared;
};

inline LayeredAlgorithm depolarizing_layers(double p, std::size_t dim, std::size_t n) {
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < n; ++i) layers.push_back({identity_channel(dim), GlobalDepolarizing{p}});
  return LayeredAlgorithm(dim, std::move(layers));
}

inline const std::map<std::string, SweepQuantity>& sweep_quantities() {
  static const std::map<std::string, SweepQuantity> table = [] {
    std::map<std::string, SweepQuantity> t;
    t["eta-depolarizing"] = {
        {{"p", 0.3}, {"D", 2}, {"epsilon", 0.0}},
        {"eta"},
        [](const Params& p) {
          return std::vector<double>{eta_depolarizing_closed(
              p.at("p"), integer_param(p, "D"), Gamma::from_epsilon(p.at("epsilon")))};
        }};
    t["delta-decay"] = {
        {{"p", 0.3}, {"D", 2}, {"kappa", 0.1}, {"epsilon", 0.0}, {"n", 1}},
        {"delta"},
        [](const Params& p) {
          return std::vector<double>{delta_layered_generic(
              depolarizing_layers(p.at("p"), integer_param(p, "D"), integer_param(p, "n")),
              NeighborRelation(p.at("kappa")), p.at("epsilon"))};
        }};
    t["delta-compare"] = {
        {{"p", 0.1}, {"D", 2}, {"kappa", 0.1}, {"epsilon", 0.1}, {"n", 1}},
        {"contraction", "improved"},
        [](const Params& p) {
          const std::size_t d = integer_param(p, "D");
          const std::size_t n = integer_param(p, "n");
          return std::vector<double>{
              delta_layered_generic(depolarizing_layers(p.at("p"), d, n),
                                    NeighborRelation(p.at("kappa")), p.at("epsilon")),
              delta_global_depolarizing(std::vector<double>(n, p.at("p")), d, p.at("kappa"),
                                        p.at("epsilon"))};
        }};
    t["eps-global"] = {
        {{"p", 0.3}, {"D", 2}, {"kappa", 0.1}, {"delta", 0.01}, {"n", 1}},
        {"epsilon"},
        [](const Params& p) {
          return std::vector<double>{eps_global_depolarizing(
              std::vector<double>(integer_param(p, "n"), p.at("p")), integer_param(p, "D"),
              p.at("kappa"), p.at("delta"))};
        }};
    t["delta-local"] = {
        {{"p", 0.3}, {"D", 2}, {"k", 3}, {"kappa", 0.1}, {"epsilon", 0.1}, {"n", 1}},
        {"delta"},
        [](const Params& p) {
          return std::vector<double>{delta_local_depolarizing(
              p.at("p"), integer_param(p, "D"), integer_param(p, "k"), integer_param(p, "n"),
              p.at("kappa"), p.at("epsilon"))};
        }};
    t["separation"] = {
        {{"p", 0.2}, {"D", 2}, {"k", 1}, {"kappa", 0.1}, {"epsilon", 0.5}, {"n", 1}},
        {"delta"},
        [](const Params& p) {
          return std::vector<double>{delta_local_depolarizing(
              p.at("p"), integer_param(p, "D"), integer_param(p, "k"), integer_param(p, "n"),
              p.at("kappa"), p.at("epsilon"))};
        },
        {"trace_lower"},
        [](const Params& p) {
          return std::vector<double>{trace_lower_bound_local(p.at("p"), integer_param(p, "k"),
                                                             integer_param(p, "n"), p.at("kappa"))
                                         .value};
        }};
    t["delta-qubit"] = {
        {{"lambda", 0.2}, {"k", 2}, {"kappa", 0.1}, {"epsilon", 0.1}, {"n", 10}},
        {"delta"},
        [](const Params& p) {
          return std::vector<double>{delta_qubit_noise(p.at("lambda"), integer_param(p, "k"),
                                                       integer_param(p, "n"), p.at("kappa"),
                                                       p.at("epsilon"))};
        }};
    t["region-boundary"] = {
        {{"epsilon", 0.0}, {"delta", 0.1}, {"alpha", 0.0}},
        {"beta_low", "beta_high"},
        [](const Params& p) {
          const BoundarySegment s =
              region_boundary_at(PrivacyRegion(p.at("epsilon"), p.at("delta")), p.at("alpha"));
          return std::vector<double>{s.beta_low, s.beta_high};
        }};
    t["relax-budget"] = {
        {{"epsilon", 0.2}, {"delta", 0.01}, {"delta_relaxed", 0.05}},
        {"epsilon_relaxed"},
        [](const Params& p) {
          return std::vector<double>{
              relax_budget(p.at("epsilon"), p.at("delta"), p.at("delta_relaxed"))};
        }};
    return t;
  }();
  return table;
}

struct Assignment {
  std::string key;
  double value = 0.0;
};

inline double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError(what + ": '" + s + "' is not a number");
  }
  if (used != s.size()) throw InputError(what + ": '" + s + "' is not a number");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// `gamma` is accepted as an alias that sets epsilon = ln(gamma).
inline void assign(Params& params, const std::string& key, double value) {
  if (key == "gamma" && params.count("epsilon")) {
    params["epsilon"] = Gamma(value).epsilon();
    return;
  }
  if (!params.count(key)) throw InputError("unknown parameter '" + key + "' for this quantity");
  params[key] = value;
}

inline std::pair<std::string, std::string> split_assignment(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw InputError("expected key=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

struct Series {
  std::string label;
  std::vector<Assignment> assignments;
};

// "key=v1,v2" expands to one series per value; "a=v;b=w" is a single series.
inline std::vector<Series> parse_series(const std::vector<std::string>& series_args) {
  std::vector<Series> out;
  for (const std::string& arg : series_args) {
    if (arg.find(';') != std::string::npos) {
      Series s{arg, {}};
      for (const std::string& part : split(arg, ';')) {
        const auto [k, v] = split_assignment(part);
        s.assignments.push_back({k, parse_number(v, "--series " + k)});
      }
      out.push_back(std::move(s));
    } else {
      const auto [k, vs] = split_assignment(arg);
      for (const std::string& v : split(vs, ',')) {
        out.push_back({k + "=" + v, {{k, parse_number(v, "--series " + k)}}});
      }
    }
  }
  return out;
}

struct SweepRequest {
  std::string quantity;
  std::string variable;
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 2;
  std::vector<std::string> series;
  std::vector<std::string> fixed;
};

inline std::string run_sweep(const SweepRequest& req) {
  const auto& table = sweep_quantities();
  const auto it = table.find(req.quantity);
  if (it == table.end()) {
    std::string names;
    for (const auto& [name, q] : table) names += (names.empty() ? "" : ", ") + name;
    throw InputError("unknown sweep quantity '" + req.quantity + "' (known: " + names + ")");
  }
  const SweepQuantity& q = it->second;
  if (req.steps < 2) throw InputError("--steps must be at least 2");
  if (!(req.start < req.stop)) throw InputError("--start must be smaller than --stop");
  const bool is_gamma = req.variable == "gamma" && q.defaults.count("epsilon");
  if (!is_gamma && !q.defaults.count(req.variable)) {
    throw InputError("variable '" + req.variable + "' is not a parameter of " + req.quantity);
  }

  Params base = q.defaults;
  for (const std::string& f : req.fixed) {
    const auto [k, v] = split_assignment(f);
    assign(base, k, parse_number(v, "--set " + k));
  }
  const std::vector<Series> series = parse_series(req.series);
  for (const Series& s : series) {
    Params probe = base;
    for (const Assignment& a : s.assignments) assign(probe, a.key, a.value);
  }

  std::ostringstream csv;
  csv << "x";
  if (series.empty()) {
    for (const std::string& c : q.columns) csv << "," << c;
  } else {
    for (const Series& s : series) {
      for (const std::string& c : q.columns) {
        csv << "," << (q.columns.size() == 1 ? s.label : c + "[" + s.label + "]");
      }
    }
  }
  for (const std::string& c : q.shared_columns) csv << "," << c;
  csv << "\n";

  for (std::size_t i = 0; i < req.steps; ++i) {
    double x = i + 1 == req.steps
                   ? req.stop
                   : req.start + (req.stop - req.start) * static_cast<double>(i) /
                                     static_cast<double>(req.steps - 1);
    Params row = base;
    assign(row, req.variable, x);
    if (req.variable == "n" || req.variable == "k" || req.variable == "D") {
      x = static_cast<double>(integer_param(row, req.variable));
    }
    csv << sig12(x);
    auto emit = [&](const std::vector<double>& vals) {
      for (const double v : vals) csv << "," << sig12(v);
    };
    if (series.empty()) {
      emit(q.eval(row));
    } else {
      for (const Series& s : series) {
        Params p = row;
        for (const Assignment& a : s.assignments) assign(p, a.key, a.value);
        emit(q.eval(p));
      }
    }
    if (q.eval_shared) emit(q.eval_shared(row));
    csv << "\n";
  }
  return csv.str();
}

// -- certify -------------------------------------------------------------------

enum class CertifyMode { kGeneric, kDepolarizing, kQubit };

inline CertifyMode parse_certify_mode(const std::string& s) {
  if (s == "generic") return CertifyMode::kGeneric;
  if (s == "depolarizing") return CertifyMode::kDepolarizing;
  if (s == "qubit") return CertifyMode::kQubit;
  throw InputError("unknown certify mode '" + s + "'");
}

// delta(eps) under the chosen mode. Throws MethodError when the noise does not fit.
inline std::function<double(double)> certify_delta_fn(const LayeredAlgorithm& algo, double kappa,
                                                      CertifyMode mode) {
  const NeighborRelation rel(kappa);
  switch (mode) {
    case CertifyMode::kGeneric:
      return [&algo, rel](double eps) { return delta_layered_generic(algo, rel, eps); };
    case CertifyMode::kDepolarizing: {
      std::vector<double> global_p;
      std::optional<LocalDepolarizing> local;
      bool mixed = false;
      for (std::size_t i = 0; i < algo.n_layers(); ++i) {
        const NoiseSpec& n = algo.layers()[i].noise;
        if (const auto* g = std::get_if<GlobalDepolarizing>(&n)) {
          global_p.push_back(g->p);
        } else if (const auto* l = std::get_if<LocalDepolarizing>(&n)) {
          if (local && (local->p != l->p || local->k != l->k)) mixed = true;
          local = *l;
        } else {
          const QuantumChannel& ch = std::get<KrausNoise>(n).channel;
          const auto p = ch.dim_in() == algo.dim() ? recognize_depolarizing(ch) : std::nullopt;
          if (!p) {
            throw MethodError("depolarizing mode: layer " + std::to_string(i) +
                              " noise is not a depolarizing channel");
          }
          global_p.push_back(*p);
        }
      }
      if (mixed || (local && !global_p.empty())) {
        throw MethodError("depolarizing mode: layers must share one kind of depolarizing noise "
                          "(global, or local with identical p and k)");
      }
      if (local) {
        const auto [d, k] = algo.local_structure(*local);
        const double p = local->p;
        const std::size_t n = algo.n_layers();
        return [=](double eps) { return delta_local_depolarizing(p, d, k, n, kappa, eps); };
      }
      const std::size_t d = algo.dim();
      return [=](double eps) { return delta_global_depolarizing(global_p, d, kappa, eps); };
    }
    case CertifyMode::kQubit: {
      const auto qubits = detail::integer_log(algo.dim(), 2);
      if (!qubits) throw MethodError("qubit mode: dimension is not a power of 2");
      std::vector<std::pair<QuantumChannel, std::size_t>> factors;
      for (std::size_t i = 0; i < algo.n_layers(); ++i) {
        const NoiseSpec& n = algo.layers()[i].noise;
        if (const auto* g = std::get_if<GlobalDepolarizing>(&n)) {
          if (algo.dim() != 2) throw MethodError("qubit mode: global depolarizing noise on more than one qubit");
          factors.emplace_back(depolarizing_channel(2, g->p), 1);
        } else if (const auto* l = std::get_if<LocalDepolarizing>(&n)) {
          factors.emplace_back(depolarizing_channel(2, l->p), *qubits);
          if (algo.local_structure(*l).first != 2) throw MethodError("qubit mode: local noise is not qubit-wise");
        } else {
          const QuantumChannel& ch = std::get<KrausNoise>(n).channel;
          if (ch.dim_in() != 2) throw MethodError("qubit mode: layer " + std::to_string(i) + " noise is not a qubit channel");
          factors.emplace_back(ch, *qubits);
        }
      }
      return [factors, kappa](double eps) {
        double delta = kappa;
        for (const auto& [ch, k] : factors) {
          try {
            delta *= eta_qubit_tensor_upper(ch, k, Gamma::from_epsilon(eps)).value;
          } catch (const PreconditionError& e) {
            throw SoundnessError(std::string("qubit mode: ") + e.what());
          }
        }
        return std::clamp(delta, 0.0, 1.0);
      };
    }
  }
  throw InputError("unknown certify mode");
}

// -- entry point ---------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum differential privacy toolkit: hockey-stick divergences, contraction "
               "coefficients and privacy certificates."};
  app.require_subcommand(1);
  std::uint64_t seed = 42;
  std::string out_path;
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--out", out_path, "Output file (default stdout)");

  std::ostringstream result;
  std::function<void()> action;

  // divergence
  auto* div = app.add_subcommand("divergence", "Hockey-stick divergence E_gamma(rho || sigma)");
  std::string rho_file, sigma_file;
  std::optional<double> gamma_opt, eps_opt;
  div->add_option("rho", rho_file, "State JSON")->required();
  div->add_option("sigma", sigma_file, "State JSON")->required();
  auto* g_flag = div->add_option("--gamma", gamma_opt, "gamma >= 1");
  auto* e_flag = div->add_option("--epsilon", eps_opt, "epsilon >= 0 (gamma = e^epsilon)");
  g_flag->excludes(e_flag);
  div->callback([&] {
    action = [&] {
      if (!gamma_opt && !eps_opt) throw InputError("divergence: one of --gamma or --epsilon is required");
      const Gamma g = gamma_opt ? Gamma(*gamma_opt) : Gamma::from_epsilon(*eps_opt);
      result << fixed12(hockey_stick(io::load_state(rho_file), io::load_state(sigma_file), g)) << "\n";
    };
  });

  // contraction
  auto* con = app.add_subcommand("contraction", "Bounds on the contraction coefficient eta_gamma");
  std::string channel_file, method = "optimize";
  std::size_t restarts = kDefaultRestarts, qubit_power = 1;
  std::optional<double> c_gamma, c_eps;
  con->add_option("channel", channel_file, "Channel JSON")->required();
  auto* cg = con->add_option("--gamma", c_gamma, "gamma >= 1 (default 1)");
  auto* ce = con->add_option("--epsilon", c_eps, "epsilon >= 0");
  cg->excludes(ce);
  con->add_option("--method", method, "closed|optimize|fvdg|trace|choi")->capture_default_str();
  con->add_option("--restarts", restarts, "Optimizer restarts")->capture_default_str();
  con->add_option("--k", qubit_power, "Tensor power for the choi method")->capture_default_str();
  con->callback([&] {
    action = [&] {
      const Gamma g = c_gamma ? Gamma(*c_gamma) : c_eps ? Gamma::from_epsilon(*c_eps) : Gamma(1.0);
      ContractionRequest req;
      req.method = parse_contraction_method(method);
      req.restarts = restarts;
      req.seed = seed;
      req.qubit_power = qubit_power;
      req.channel_id = channel_file;
      const ContractionEstimate est = estimate_contraction(io::load_channel(channel_file), g, req);
      std::string tags;
      for (const MethodTag t : est.method_tags) tags += (tags.empty() ? "" : ",") + std::string(to_string(t));
      result << "gamma=" << sig12(est.gamma) << "\n"
             << "lower=" << fixed12(est.lower) << "\n"
             << "upper=" << fixed12(est.upper) << "\n"
             << "methods=" << tags << "\n"
             << "upper_rigorous=" << (est.upper_is_rigorous ? "true" : "false") << "\n";
    };
  });

  // certify
  auto* cert = app.add_subcommand("certify", "Privacy budget of a layered algorithm");
  std::string algo_file, mode = "generic";
  double kappa = 0.1;
  std::optional<double> cert_eps, cert_delta;
  cert->add_option("algorithm", algo_file, "Layered algorithm JSON")->required();
  cert->add_option("--kappa", kappa, "Neighbor radius in trace distance")->capture_default_str();
  auto* ceps = cert->add_option("--epsilon", cert_eps, "Given epsilon; prints delta");
  auto* cdel = cert->add_option("--delta", cert_delta, "Given delta; prints epsilon");
  ceps->excludes(cdel);
  cert->add_option("--mode", mode, "generic|depolarizing|qubit")->capture_default_str();
  cert->callback([&] {
    action = [&] {
      if (!cert_eps && !cert_delta) throw InputError("certify: one of --epsilon or --delta is required");
      const CertifyMode m = parse_certify_mode(mode);
      const LayeredAlgorithm algo = io::load_algorithm(algo_file);
      const auto delta_of = certify_delta_fn(algo, kappa, m);
      if (cert_eps) {
        result << "epsilon=" << sig12(*cert_eps) << "\n"
               << "delta=" << sig12(delta_of(*cert_eps)) << "\n";
        return;
      }
      double eps = 0.0;
      if (m == CertifyMode::kDepolarizing) {
        // Closed form; the bisection below would agree.
        std::vector<double> ps;
        std::optional<LocalDepolarizing> local;
        for (const Layer& l : algo.layers()) {
          if (const auto* g = std::get_if<GlobalDepolarizing>(&l.noise)) ps.push_back(g->p);
          else if (const auto* lo = std::get_if<LocalDepolarizing>(&l.noise)) local = *lo;
          else ps.push_back(*recognize_depolarizing(std::get<KrausNoise>(l.noise).channel));
        }
        eps = local ? eps_local_depolarizing(local->p, algo.local_structure(*local).first, local->k,
                                             algo.n_layers(), kappa, *cert_delta)
                    : eps_global_depolarizing(ps, algo.dim(), kappa, *cert_delta);
      } else {
        eps = invert_delta(delta_of, *cert_delta);
      }
      result << "epsilon=" << sig12(eps) << "\n" << "delta=" << sig12(*cert_delta) << "\n";
    };
  });

  // sweep
  auto* sw = app.add_subcommand("sweep", "Parameter sweep written as CSV");
  SweepRequest sreq;
  sw->add_option("quantity", sreq.quantity,
                 "eta-depolarizing|delta-decay|delta-compare|eps-global|delta-local|separation|"
                 "delta-qubit|region-boundary|relax-budget")
      ->required();
  sw->add_option("--var", sreq.variable, "Swept parameter")->required();
  sw->add_option("--start", sreq.start, "First x")->required();
  sw->add_option("--stop", sreq.stop, "Last x")->required();
  sw->add_option("--steps", sreq.steps, "Number of rows (>= 2)")->required();
  sw->add_option("--series", sreq.series, "key=v1,v2 or a=v;b=w (repeatable)");
  sw->add_option("--set", sreq.fixed, "key=value (repeatable)");
  sw->callback([&] { action = [&] { result << run_sweep(sreq); }; });

  // region
  auto* reg = app.add_subcommand("region", "Sampled (alpha, beta) error pairs of a channel");
  std::string r_channel, r_rho, r_sigma;
  std::size_t samples = 1000;
  double r_eps = 0.2, r_delta = 0.01;
  reg->add_option("channel", r_channel, "Channel JSON")->required();
  reg->add_option("rho", r_rho, "State JSON (default diag(2/3, 1/3))");
  reg->add_option("sigma", r_sigma, "State JSON (default diag(1/3, 2/3))");
  reg->add_option("--samples", samples, "Random POVMs")->capture_default_str();
  reg->add_option("--epsilon", r_eps, "Region epsilon")->capture_default_str();
  reg->add_option("--delta", r_delta, "Region delta")->capture_default_str();
  reg->callback([&] {
    action = [&] {
      if (r_rho.empty() != r_sigma.empty()) throw InputError("region: give both rho and sigma or neither");
      const QuantumChannel ch = io::load_channel(r_channel);
      const DensityMatrix rho = r_rho.empty() ? fixture_rho() : io::load_state(r_rho);
      const DensityMatrix sigma = r_sigma.empty() ? fixture_sigma() : io::load_state(r_sigma);
      const PrivacyRegion region(r_eps, r_delta);
      const auto points = sample_channel_region(ch, rho, sigma, samples, seed, {r_eps});
      std::size_t outside = 0;
      double max_excess = -std::numeric_limits<double>::infinity();
      result << "index,alpha,beta,inside\n";
      for (std::size_t i = 0; i < points.size(); ++i) {
        const double e = region_excess(region, points[i].point);
        max_excess = std::max(max_excess, e);
        const bool inside = e <= kRegionSlack;
        outside += inside ? 0 : 1;
        result << i << "," << sig12(points[i].point.alpha) << "," << sig12(points[i].point.beta)
               << "," << (inside ? 1 : 0) << "\n";
      }
      const double certified = certify_pair_symmetric(ch, rho, sigma, r_eps);
      err << "verdict=" << (outside > 0 ? "certified_violation" : "no_violation_found")
          << " points=" << points.size() << " outside=" << outside
          << " max_excess=" << sig12(max_excess) << " certified_delta=" << sig12(certified)
          << " within_budget=" << (certified <= r_delta + kRegionSlack ? "yes" : "no") << "\n";
    };
  });

  // renyi
  auto* ren = app.add_subcommand("renyi", "Renyi differential privacy");
  ren->require_subcommand(1);
  auto* rcert = ren->add_subcommand("certify", "Renyi divergence of the outputs of a pair");
  std::string kind = "sandwiched", rn_channel, rn_rho, rn_sigma;
  double alpha = 2.0, rn_eps = 0.0, rn_delta = 0.01;
  rcert->add_option("channel", rn_channel, "Channel JSON")->required();
  rcert->add_option("rho", rn_rho, "State JSON (default diag(2/3, 1/3))");
  rcert->add_option("sigma", rn_sigma, "State JSON (default diag(1/3, 2/3))");
  rcert->add_option("--alpha", alpha, "Order")->capture_default_str();
  rcert->add_option("--kind", kind, "sandwiched|petz")->capture_default_str();
  rcert->callback([&] {
    action = [&] {
      if (rn_rho.empty() != rn_sigma.empty()) throw InputError("renyi certify: give both rho and sigma or neither");
      const RenyiKind k = parse_renyi_kind(kind);
      const QuantumChannel ch = io::load_channel(rn_channel);
      const std::vector<StatePair> pairs{
          {rn_rho.empty() ? fixture_rho() : io::load_state(rn_rho),
           rn_sigma.empty() ? fixture_sigma() : io::load_state(rn_sigma)}};
      result << "epsilon=" << sig12(renyi_dp_certify(ch, pairs, alpha, k)) << "\n"
             << "alpha=" << sig12(alpha) << "\n"
             << "kind=" << to_string(k) << "\n";
      err << "note: supremum over the supplied pair only (empirical lower bound)\n";
    };
  });
  auto* rconv = ren->add_subcommand("convert", "Renyi budget to (epsilon, delta)");
  rconv->add_option("--epsilon", rn_eps, "Renyi epsilon")->required();
  rconv->add_option("--alpha", alpha, "Order > 1")->capture_default_str();
  rconv->add_option("--delta", rn_delta, "Target delta in (0, 1]")->capture_default_str();
  rconv->add_option("--kind", kind, "sandwiched|petz")->capture_default_str();
  rconv->callback([&] {
    action = [&] {
      const DpBudget b = renyi_to_approx_dp(RenyiBudget(rn_eps, alpha, parse_renyi_kind(kind)), rn_delta);
      result << "epsilon=" << sig12(b.epsilon) << "\n" << "delta=" << sig12(b.delta) << "\n";
    };
  });

  for (CLI::App* sub : {div, con, cert, sw, reg, ren, rcert, rconv}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (action) action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const MethodError& e) {
    err << "error: method not applicable: " << e.what() << "\n";
    return kMethodError;
  } catch (const SoundnessError& e) {
    err << "error: refusing to certify: " << e.what() << "\n";
    return kSoundnessError;
  } catch (const ValidationError& e) {
    err << "error: invalid object: " << e.what() << "\n";
    return kInvariantError;
  } catch (const PreconditionError& e) {
    err << "error: precondition violated: " << e.what() << "\n";
    return kInvariantError;
  }

  if (out_path.empty()) {
    out << result.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return kInputError;
    }
    f << result.str();
  }
  return kOk;
}

}  // namespace qdp::cli

#endif  // QDP_CLI_HPP_
