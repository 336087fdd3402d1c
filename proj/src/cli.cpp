#include "tnvqa/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

namespace tnvqa {

using nlohmann::json;

namespace {

constexpr double kPlantedPhaseGap = 0.5;

// ---- strict field access ----------------------------------------------------

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ValidationError(where + " must be a JSON object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) throw ValidationError("unknown key '" + where + "." + item.key() + "'");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ValidationError("missing key '" + where + "." + key + "'");
  return obj.at(key);
}

long long as_int(const json& v, const std::string& name) {
  if (!v.is_number_integer()) throw ValidationError("'" + name + "' must be an integer");
  return v.get<long long>();
}

std::uint64_t as_uint(const json& v, const std::string& name) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return static_cast<std::uint64_t>(v.get<long long>());
  throw ValidationError("'" + name + "' must be a non-negative integer");
}

double as_double(const json& v, const std::string& name) {
  if (!v.is_number()) throw ValidationError("'" + name + "' must be a number");
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& name) {
  if (!v.is_string()) throw ValidationError("'" + name + "' must be a string");
  return v.get<std::string>();
}

int narrow_int(long long v, const std::string& name) {
  if (v < -1000000000LL || v > 1000000000LL) throw ValidationError("'" + name + "' is out of range");
  return static_cast<int>(v);
}

std::string resolve(const std::string& path, const std::string& base_dir) {
  namespace fs = std::filesystem;
  if (base_dir.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base_dir) / path).string();
}

Method resolved_method(const RunConfig& c) {
  if (c.method) return *c.method;
  return default_method(build_mps_ansatz(c.n, c.k_max).total_params());
}

ParameterVector planted_theta(const AnsatzCircuit& circuit, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ParameterVector theta(static_cast<Eigen::Index>(circuit.total_params()));
  for (Eigen::Index j = 0; j < theta.size(); ++j) theta[j] = angle(rng);
  return theta;
}

std::uint64_t completion_seed(std::uint64_t seed) { return seed ^ 0x6a09e667f3bcc909ULL; }

double tfim_param(const json& params, const char* key) {
  return params.contains(key) ? as_double(params.at(key), std::string("oracle.params.") + key) : 1.0;
}

// ---- JSON writer ------------------------------------------------------------

std::string format_double(double v) {
  if (!std::isfinite(v)) throw NumericalError("cannot serialize non-finite value " + std::to_string(v));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void dump_value(std::ostream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << json(item.key()).dump() << ": ";
        dump_value(out, item.value(), indent + 2);
      }
      out << "\n" << close << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      const bool scalars = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
      if (scalars) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          dump_value(out, j[i], indent + 2);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        dump_value(out, j[i], indent + 2);
      }
      out << "\n" << close << "]";
      return;
    }
    case json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

std::vector<double> number_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw ParseError(where + "[" + std::to_string(i) + "] must be a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

}  // namespace

int report_exception(std::ostream& err) {
  try {
    throw;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ArgumentError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

void RunConfig::validate() const {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("n = " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  if (k_max < 0 || k_max > n / 2) {
    throw ValidationError("k_max = " + std::to_string(k_max) + " outside [0, " + std::to_string(n / 2) + "]");
  }
  if (max_iters < 1) throw ValidationError("optimizer.max_iters must be >= 1");
  if (restarts < 1) throw ValidationError("optimizer.restarts must be >= 1");
  if (!(fd_step > 0)) throw ValidationError("optimizer.fd_step must be > 0");
  if (!(tol_loss >= 0)) throw ValidationError("optimizer.tol_loss must be >= 0");
  if (!(cert_tol >= 0 && cert_tol < 1)) throw ValidationError("cert_tol must lie in [0, 1)");
  if (output_path.empty()) throw ValidationError("output_path must not be empty");
  if (oracle.t && !std::isfinite(*oracle.t)) throw ValidationError("oracle.t must be finite");

  const std::string& type = oracle.type;
  if (type == "dimacs" || type == "dense") {
    if (oracle.path.empty()) throw ValidationError("oracle type '" + type + "' needs oracle.path");
  } else if (type == "hamiltonian") {
    if (oracle.preset == "tfim") {
      for (const auto& item : oracle.params.items()) {
        if (item.key() != "J" && item.key() != "h") {
          throw ValidationError("unknown key 'oracle.params." + item.key() + "' for preset tfim");
        }
      }
    } else if (oracle.preset == "sat") {
      if (oracle.path.empty()) throw ValidationError("hamiltonian preset 'sat' needs oracle.path");
    } else {
      throw ValidationError("unknown hamiltonian preset '" + oracle.preset + "' (expected tfim or sat)");
    }
  } else if (type == "planted") {
    if (oracle.planted.k < 0 || oracle.planted.k > n / 2) {
      throw ValidationError("oracle.planted.k outside [0, " + std::to_string(n / 2) + "]");
    }
    if (n > kMaxPlantedQubits) {
      throw ValidationError("planted oracles support n <= " + std::to_string(kMaxPlantedQubits));
    }
  } else {
    throw ValidationError("unknown oracle type '" + type + "' (expected dimacs, hamiltonian, dense or planted)");
  }
}

SweepConfig RunConfig::sweep_config() const {
  SweepConfig s;
  s.k_max = k_max;
  s.optimizer.method = resolved_method(*this);
  s.optimizer.max_iters = max_iters;
  s.optimizer.tol_loss = tol_loss;
  s.optimizer.fd_step = fd_step;
  s.optimizer.restarts = restarts;
  s.optimizer.seed = seed;
  s.warm_start = warm_start;
  s.cert_tol = cert_tol;
  s.shots = shots;
  return s;
}

RunConfig parse_run_config(const json& j) {
  check_keys(j, "config",
             {"n", "k_max", "oracle", "optimizer", "shots", "warm_start", "cert_tol", "seed", "output_path"});
  RunConfig c;
  c.n = narrow_int(as_int(require(j, "n", "config"), "n"), "n");
  c.k_max = narrow_int(as_int(require(j, "k_max", "config"), "k_max"), "k_max");

  const json& o = require(j, "oracle", "config");
  check_keys(o, "oracle", {"type", "path", "preset", "t", "params", "planted"});
  c.oracle.type = as_string(require(o, "type", "oracle"), "oracle.type");
  const std::string& type = c.oracle.type;
  auto reject = [&](const char* key) {
    if (o.contains(key)) {
      throw ValidationError("oracle." + std::string(key) + " is not used by oracle type '" + type + "'");
    }
  };
  if (o.contains("path")) c.oracle.path = as_string(o.at("path"), "oracle.path");
  if (o.contains("preset")) c.oracle.preset = as_string(o.at("preset"), "oracle.preset");
  if (o.contains("t")) c.oracle.t = as_double(o.at("t"), "oracle.t");
  if (o.contains("params")) {
    if (!o.at("params").is_object()) throw ValidationError("'oracle.params' must be an object");
    c.oracle.params = o.at("params");
  }
  if (type == "dimacs") {
    reject("preset");
    reject("params");
    reject("planted");
  } else if (type == "dense") {
    reject("preset");
    reject("params");
    reject("planted");
    reject("t");
  } else if (type == "hamiltonian") {
    reject("planted");
    if (!o.contains("preset")) throw ValidationError("missing key 'oracle.preset'");
    if (c.oracle.preset == "tfim") reject("path");
    if (c.oracle.preset == "sat") reject("params");
  } else if (type == "planted") {
    reject("path");
    reject("preset");
    reject("params");
    reject("t");
    const json& p = require(o, "planted", "oracle");
    check_keys(p, "oracle.planted", {"k", "seed", "phases_seed"});
    if (p.contains("k")) c.oracle.planted.k = narrow_int(as_int(p.at("k"), "oracle.planted.k"), "oracle.planted.k");
    if (p.contains("seed")) c.oracle.planted.seed = as_uint(p.at("seed"), "oracle.planted.seed");
    if (p.contains("phases_seed")) {
      c.oracle.planted.phases_seed = as_uint(p.at("phases_seed"), "oracle.planted.phases_seed");
    }
  }

  if (j.contains("optimizer")) {
    const json& opt = j.at("optimizer");
    check_keys(opt, "optimizer", {"method", "max_iters", "tol_loss", "fd_step", "restarts"});
    if (opt.contains("method")) {
      try {
        c.method = method_from_string(as_string(opt.at("method"), "optimizer.method"));
      } catch (const ArgumentError& e) {
        throw ValidationError(e.what());
      }
    }
    if (opt.contains("max_iters")) {
      c.max_iters = narrow_int(as_int(opt.at("max_iters"), "optimizer.max_iters"), "optimizer.max_iters");
    }
    if (opt.contains("tol_loss")) c.tol_loss = as_double(opt.at("tol_loss"), "optimizer.tol_loss");
    if (opt.contains("fd_step")) c.fd_step = as_double(opt.at("fd_step"), "optimizer.fd_step");
    if (opt.contains("restarts")) {
      c.restarts = narrow_int(as_int(opt.at("restarts"), "optimizer.restarts"), "optimizer.restarts");
    }
  }
  if (j.contains("shots")) c.shots = as_uint(j.at("shots"), "shots");
  if (j.contains("warm_start")) {
    if (!j.at("warm_start").is_boolean()) throw ValidationError("'warm_start' must be a boolean");
    c.warm_start = j.at("warm_start").get<bool>();
  }
  if (j.contains("cert_tol")) c.cert_tol = as_double(j.at("cert_tol"), "cert_tol");
  if (j.contains("seed")) c.seed = as_uint(j.at("seed"), "seed");
  if (j.contains("output_path")) c.output_path = as_string(j.at("output_path"), "output_path");
  c.validate();
  return c;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

RunConfig load_run_config(const std::string& path) { return parse_run_config(read_json_file(path)); }

json to_json(const RunConfig& c) {
  json o = {{"type", c.oracle.type}};
  const std::string& type = c.oracle.type;
  if (!c.oracle.path.empty()) o["path"] = c.oracle.path;
  if (type == "hamiltonian") o["preset"] = c.oracle.preset;
  if (c.oracle.t) o["t"] = *c.oracle.t;
  if (type == "hamiltonian" && c.oracle.preset == "tfim") o["params"] = c.oracle.params;
  if (type == "planted") {
    o["planted"] = {{"k", c.oracle.planted.k},
                    {"seed", c.oracle.planted.seed},
                    {"phases_seed", c.oracle.planted.phases_seed}};
  }
  return {
      {"n", c.n},
      {"k_max", c.k_max},
      {"oracle", o},
      {"optimizer",
       {{"method", to_string(resolved_method(c))},
        {"max_iters", c.max_iters},
        {"tol_loss", c.tol_loss},
        {"fd_step", c.fd_step},
        {"restarts", c.restarts}}},
      {"shots", c.shots},
      {"warm_start", c.warm_start},
      {"cert_tol", c.cert_tol},
      {"seed", c.seed},
      {"output_path", c.output_path},
  };
}

BlackBoxUnitary build_oracle(const RunConfig& c, const std::string& base_dir) {
  c.validate();
  const OracleSpec& o = c.oracle;
  auto check_n = [&](int got, const std::string& what) {
    if (got != c.n) {
      throw ValidationError(what + " has " + std::to_string(got) + " qubits but n = " + std::to_string(c.n));
    }
  };
  if (o.type == "dimacs") {
    const SatInstance sat = load_dimacs(resolve(o.path, base_dir));
    check_n(sat.num_vars, "DIMACS instance");
    return from_sat_instance(sat, o.t.value_or(default_sat_time(sat)));
  }
  if (o.type == "dense") {
    const MatrixXc m = load_dense_matrix_json(resolve(o.path, base_dir));
    check_n(qubits_for_dimension(m.rows()), "dense matrix");
    return from_dense_matrix(m);
  }
  if (o.type == "hamiltonian") {
    if (o.preset == "tfim") {
      return from_hamiltonian_evolution(
          transverse_field_ising(c.n, tfim_param(o.params, "J"), tfim_param(o.params, "h")), o.t.value_or(1.0));
    }
    const SatInstance sat = load_dimacs(resolve(o.path, base_dir));
    check_n(sat.num_vars, "DIMACS instance");
    const MatrixXc h = sat_cost_diagonal(sat).cast<Complex>().asDiagonal();
    return from_hamiltonian_evolution(h, o.t.value_or(default_sat_time(sat)));
  }
  const AnsatzCircuit circuit = build_mps_ansatz(c.n, o.planted.k);
  return planted_unitary(circuit, planted_theta(circuit, o.planted.seed),
                         separated_phases(c.n, kPlantedPhaseGap, o.planted.phases_seed),
                         completion_seed(o.planted.seed));
}

VectorXc planted_state(const RunConfig& c) {
  if (c.oracle.type != "planted") throw ArgumentError("config does not describe a planted oracle");
  const AnsatzCircuit circuit = build_mps_ansatz(c.n, c.oracle.planted.k);
  return prepare_state(circuit, planted_theta(circuit, c.oracle.planted.seed)).amplitudes();
}

json mps_to_json(const MpsState& mps) {
  json tensors = json::array();
  for (const auto& site : mps.sites()) {
    const Eigen::Index l = site[0].rows(), r = site[0].cols();
    json re = json::array(), im = json::array();
    for (Eigen::Index a = 0; a < l; ++a) {
      for (int s = 0; s < 2; ++s) {
        for (Eigen::Index b = 0; b < r; ++b) {
          re.push_back(site[static_cast<std::size_t>(s)](a, b).real());
          im.push_back(site[static_cast<std::size_t>(s)](a, b).imag());
        }
      }
    }
    tensors.push_back({{"shape", {l, 2, r}}, {"re", re}, {"im", im}});
  }
  return {{"n", mps.num_sites()}, {"bond_dims", mps.bond_dims()}, {"tensors", tensors}};
}

MpsState mps_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("MPS must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw ParseError("MPS: 'n' must be an integer");
  if (!j.contains("tensors") || !j.at("tensors").is_array()) throw ParseError("MPS: 'tensors' must be an array");
  const long long n = j.at("n").get<long long>();
  const json& tensors = j.at("tensors");
  if (n < 1 || static_cast<long long>(tensors.size()) != n) {
    throw ParseError("MPS: n = " + std::to_string(n) + " but " + std::to_string(tensors.size()) + " tensors");
  }
  std::vector<MpsState::Site> sites;
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    const std::string where = "tensors[" + std::to_string(i) + "]";
    const json& t = tensors[i];
    if (!t.is_object() || !t.contains("shape") || !t.contains("re") || !t.contains("im")) {
      throw ParseError(where + " needs keys shape, re, im");
    }
    const std::vector<double> shape = number_array(t.at("shape"), where + ".shape");
    if (shape.size() != 3 || shape[1] != 2 || shape[0] < 1 || shape[2] < 1 || shape[0] != std::floor(shape[0]) ||
        shape[2] != std::floor(shape[2]) || shape[0] > 1 << 20 || shape[2] > 1 << 20) {
      throw ParseError(where + ".shape must be [l, 2, r] with positive integers");
    }
    const auto l = static_cast<Eigen::Index>(shape[0]), r = static_cast<Eigen::Index>(shape[2]);
    const std::vector<double> re = number_array(t.at("re"), where + ".re");
    const std::vector<double> im = number_array(t.at("im"), where + ".im");
    const auto expected = static_cast<std::size_t>(l * 2 * r);
    if (re.size() != expected || im.size() != expected) {
      throw ParseError(where + ": expected " + std::to_string(expected) + " entries in re and im");
    }
    MpsState::Site site{MatrixXc(l, r), MatrixXc(l, r)};
    std::size_t idx = 0;
    for (Eigen::Index a = 0; a < l; ++a) {
      for (int s = 0; s < 2; ++s) {
        for (Eigen::Index b = 0; b < r; ++b, ++idx) site[static_cast<std::size_t>(s)](a, b) = {re[idx], im[idx]};
      }
    }
    sites.push_back(std::move(site));
  }
  try {
    return MpsState(std::move(sites));
  } catch (const ShapeError& e) {
    throw ParseError(std::string("MPS: ") + e.what());
  }
}

std::string dump_json(const json& j) {
  std::ostringstream out;
  dump_value(out, j, 0);
  out << "\n";
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp + "'");
    out << contents;
    out.flush();
    if (!out) throw IoError("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move record into place at '" + path + "'");
  }
}

json main_run(const RunConfig& config, const std::string& base_dir) {
  config.validate();
  const BlackBoxUnitary q = build_oracle(config, base_dir);
  const SweepResult sweep = run_sweep(config.n, q, config.sweep_config());
  const KResult& best = sweep.best();

  json per_k = json::array();
  long long steps = 0;
  for (const KResult& r : sweep.per_k) {
    steps += r.iterations;
    per_k.push_back({{"k", r.k},
                     {"loss", r.loss},
                     {"certificate", r.certificate},
                     {"wall_time_s", r.wall_time_s},
                     {"iterations", r.iterations},
                     {"evaluations", r.evaluations},
                     {"restarts_run", r.restarts_run},
                     {"selected_restart", r.selected_restart},
                     {"theta", vector_json(canonical_angles(r.theta))}});
  }

  const Statevector state = prepare_state(build_mps_ansatz(config.n, best.k), best.theta);
  const MpsState mps = statevector_to_mps(state);
  const std::int64_t r = std::int64_t{1} << best.k;
  json audit = json::array();
  for (int cut = 1; cut < config.n; ++cut) {
    const SchmidtData sd = schmidt_spectrum(state, cut);
    const double ebits = entropy_ebits(sd.singular_values);
    audit.push_back({{"cut", cut},
                     {"rank", sd.rank_eps},
                     {"ebits", ebits},
                     {"within_budget", sd.rank_eps <= r && ebits <= best.k + 1e-10}});
  }

  json record = {
      {"version", kVersion},
      {"timestamp", utc_timestamp()},
      {"config", to_json(config)},
      {"oracle", {{"kind", to_string(q.kind())}, {"description", q.description()}}},
      {"per_k", per_k},
      {"terminated_early", sweep.terminated_early},
      {"reason", sweep.reason},
      {"best", {{"k", best.k}, {"loss", best.loss}, {"certificate", best.certificate}}},
      {"mps", mps_to_json(mps)},
      {"resources",
       {{"bond_dim", r},
        {"cnot_lower_bound", r >= 2 ? json(cnot_lower_bound(r)) : json(nullptr)},
        {"optimizer_steps", steps},
        {"cost_estimate", cost_estimate(config.n, r, std::max<long long>(1, steps))},
        {"ebit_audit", audit}}},
  };
  write_file_atomic(config.output_path, dump_json(record));
  return record;
}

json analyze(const json& input) {
  json mps_json;
  if (input.is_object() && input.contains("tensors")) {
    mps_json = input;
  } else if (input.is_object() && input.contains("mps")) {
    mps_json = input.at("mps");
  } else {
    throw ParseError("expected an exported MPS (key 'tensors') or a RunRecord (key 'mps')");
  }
  const MpsState mps = mps_from_json(mps_json);
  const Statevector state = mps_to_statevector(mps);
  const int n = mps.num_sites();
  const double norm = state.norm();
  if (!(norm > 0)) throw NumericalError("MPS contracts to the zero vector");
  const Statevector unit(state.amplitudes() / norm);

  json cuts = json::array();
  int max_rank = 1;
  double max_ebits = 0;
  for (int cut = 1; cut < n; ++cut) {
    const SchmidtData sd = schmidt_spectrum(unit, cut);
    const double ebits = entropy_ebits(sd.singular_values);
    max_rank = std::max(max_rank, sd.rank_eps);
    max_ebits = std::max(max_ebits, ebits);
    cuts.push_back({{"cut", cut},
                    {"singular_values", vector_json(sd.singular_values.head(sd.rank_eps))},
                    {"rank", sd.rank_eps},
                    {"ebits", ebits}});
  }
  const int depth = static_cast<int>(std::ceil(std::log2(static_cast<double>(max_rank)) - 1e-12));
  const int bound = ebit_bound(n, depth);

  json table = json::array();
  const MpsState canonical = statevector_to_mps(unit);
  for (int r = 1; r <= max_rank; ++r) {
    const Truncation t = truncate(canonical, r);
    table.push_back({{"r", r}, {"eps", t.eps}, {"err1", t.err1}, {"err2", t.err2}});
  }
  return {
      {"n", n},
      {"bond_dims", mps.bond_dims()},
      {"norm", norm},
      {"cuts", cuts},
      {"max_rank", max_rank},
      {"max_ebits", max_ebits},
      {"ebit_bound", {{"depth", depth}, {"bound", bound}, {"satisfied", max_ebits <= bound + 1e-10}}},
      {"truncation", table},
  };
}

json main_analyze(const std::string& path) { return analyze(read_json_file(path)); }

void print_analysis(std::ostream& out, const json& report) {
  const auto flags = out.flags();
  out << "n = " << report.at("n").get<int>() << ", max rank " << report.at("max_rank").get<int>()
      << ", max entanglement " << std::setprecision(6) << report.at("max_ebits").get<double>() << " ebits\n";
  for (const json& c : report.at("cuts")) {
    out << "cut " << c.at("cut").get<int>() << ": rank " << c.at("rank").get<int>() << ", " << std::fixed
        << std::setprecision(6) << c.at("ebits").get<double>() << " ebits, spectrum [";
    out.unsetf(std::ios::floatfield);
    bool first = true;
    for (const json& s : c.at("singular_values")) {
      out << (first ? "" : ", ") << std::setprecision(10) << s.get<double>();
      first = false;
    }
    out << "]\n";
  }
  const json& eb = report.at("ebit_bound");
  out << "ebit bound min(ceil(n/2), " << eb.at("depth").get<int>() << ") = " << eb.at("bound").get<int>() << ": "
      << (eb.at("satisfied").get<bool>() ? "satisfied" : "VIOLATED") << "\n";
  out << "truncation\n  r  eps  err1  err2\n";
  for (const json& t : report.at("truncation")) {
    out << "  " << t.at("r").get<int>() << std::scientific << std::setprecision(3) << "  " << t.at("eps").get<double>()
        << "  " << t.at("err1").get<double>() << "  " << t.at("err2").get<double>() << "\n";
    out.unsetf(std::ios::floatfield);
  }
  out.flags(flags);
}

}  // namespace tnvqa
