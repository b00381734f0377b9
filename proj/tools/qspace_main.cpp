// Batch front end: statistics tables, state-vector operations, and the
// identity sweeps (commutators, oracle equivalence, permutation
// unobservability) for scripted verification.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 usage or input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qspace/fock.hpp"
#include "qspace/json_io.hpp"
#include "qspace/labeled.hpp"
#include "qspace/qset.hpp"
#include "qspace/statistics.hpp"

namespace {

using nlohmann::json;
using namespace qspace;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw io::ParseError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw io::ParseError("cannot open '" + out_path + "' for writing");
    out << j.dump(2) << "\n";
  }
}

std::string state_label(std::uint64_t state, std::uint64_t states) {
  if (states <= 26) return std::string(1, static_cast<char>('A' + state));
  return "S" + std::to_string(state + 1);
}

std::string format_microstate(const stats::Microstate& ms, std::uint64_t states) {
  std::ostringstream out;
  if (ms.kind == stats::StatisticsKind::MB) {
    for (std::size_t particle = 0; particle < ms.data.size(); ++particle) {
      if (particle > 0) out << ' ';
      out << state_label(ms.data[particle], states) << '(' << particle + 1 << ')';
    }
    if (ms.data.empty()) out << "(empty)";
  } else {
    for (std::size_t state = 0; state < ms.data.size(); ++state) {
      if (state > 0) out << ' ';
      out << state_label(state, states) << ':' << ms.data[state];
    }
  }
  return out.str();
}

std::string format_occ(const fock::OccupationMap& occ) {
  std::ostringstream out;
  out << "|{";
  bool first = true;
  for (const auto& [index, count] : occ.support()) {
    if (!first) out << ",";
    out << index << ":" << count;
    first = false;
  }
  out << "})";
  return out.str();
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream out;
  out.precision(12);
  out << "(" << z.real() << ", " << z.imag() << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// stats

struct StatsOptions {
  std::string kind;
  std::uint64_t particles = 0;
  std::uint64_t levels = 1;
  std::uint64_t cap = stats::kDefaultEnumerationCap;
  bool enumerate = false;
  bool as_json = false;
};

stats::StatisticsKind parse_stats_kind(const std::string& name) {
  if (name == "mb") return stats::StatisticsKind::MB;
  if (name == "be") return stats::StatisticsKind::BE;
  if (name == "fd") return stats::StatisticsKind::FD;
  throw io::ParseError("unknown statistics kind '" + name + "' (expected mb, be or fd)");
}

int run_stats(const StatsOptions& opt) {
  stats::StatisticsKind kind = parse_stats_kind(opt.kind);
  stats::BigInt count = stats::count_microstates(kind, opt.particles, opt.levels);
  std::optional<stats::BigRational> probability;
  if (count > 0) probability = stats::BigRational(1, count);

  std::vector<stats::Microstate> microstates;
  if (opt.enumerate) {
    microstates = stats::enumerate_microstates(kind, opt.particles, opt.levels, opt.cap);
  }

  if (opt.as_json) {
    json j;
    j["kind"] = opt.kind;
    j["particles"] = opt.particles;
    j["levels"] = opt.levels;
    if (count <= std::numeric_limits<std::uint64_t>::max()) {
      j["count"] = count.convert_to<std::uint64_t>();
    } else {
      j["count"] = count.str();
    }
    if (probability) j["probability"] = probability->str();
    if (opt.enumerate) {
      json list = json::array();
      for (const auto& ms : microstates) list.push_back(ms.data);
      j["microstates"] = std::move(list);
    }
    emit(j, "");
  } else {
    std::cout << "count: " << count.str() << "\n";
    if (probability) std::cout << "probability: " << probability->str() << "\n";
    if (opt.enumerate) {
      std::cout << "microstates:\n";
      for (const auto& ms : microstates) {
        std::cout << "  " << format_microstate(ms, opt.levels) << "\n";
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// state inner | apply | norm

struct StateOptions {
  std::string kind;  // empty: take it from the input files
  std::vector<std::string> inputs;
  std::string out_path;
  std::string op = "create";
  fock::LevelIndex level = 1;
  std::uint64_t levels = 0;  // 0: infer from the vector and --level
  bool as_json = false;
};

fock::Statistics resolve_kind(const StateOptions& opt,
                              const std::vector<fock::Statistics>& file_kinds) {
  if (!opt.kind.empty()) return io::statistics_from_name(opt.kind);
  for (std::size_t i = 1; i < file_kinds.size(); ++i) {
    if (file_kinds[i] != file_kinds[0]) {
      throw io::ParseError("input files disagree on statistics; pass --kind to pick one");
    }
  }
  if (file_kinds.empty()) throw io::ParseError("no statistics given");
  return file_kinds[0];
}

fock::LevelBasis basis_for(const StateOptions& opt, const fock::FockVector& v) {
  std::uint64_t levels = opt.levels;
  if (levels == 0) {
    levels = opt.level;
    for (const auto& [occ, coeff] : v.terms()) {
      if (!occ.support().empty()) {
        levels = std::max<std::uint64_t>(levels, occ.support().rbegin()->first);
      }
    }
  }
  return fock::LevelBasis::uniform(levels);
}

int run_state_inner(const StateOptions& opt) {
  if (opt.inputs.empty() || opt.inputs.size() > 2) {
    throw io::ParseError("state inner expects --in once or twice");
  }
  std::vector<fock::Statistics> kinds;
  std::vector<fock::FockVector> vectors;
  for (const auto& path : opt.inputs) {
    auto [kind, v] = io::fock_from_json(read_json_file(path));
    kinds.push_back(kind);
    vectors.push_back(std::move(v));
  }
  fock::Statistics kind = resolve_kind(opt, kinds);
  const fock::FockVector& left = vectors[0];
  const fock::FockVector& right = vectors.size() == 2 ? vectors[1] : vectors[0];
  fock::Complex value = fock::inner(kind, left, right);
  if (opt.as_json) {
    emit(json{{"inner", {value.real(), value.imag()}}}, "");
  } else {
    std::cout << "inner: " << format_complex(value) << "\n";
  }
  return kExitOk;
}

int run_state_apply(const StateOptions& opt) {
  if (opt.inputs.size() != 1) throw io::ParseError("state apply expects exactly one --in");
  auto [file_kind, v] = io::fock_from_json(read_json_file(opt.inputs[0]));
  fock::Statistics kind = resolve_kind(opt, {file_kind});
  fock::LevelBasis basis = basis_for(opt, v);
  fock::FockVector result;
  if (opt.op == "create") {
    result = fock::create(kind, basis, opt.level, v);
  } else if (opt.op == "annihilate") {
    result = fock::annihilate(kind, basis, opt.level, v);
  } else {
    throw io::ParseError("unknown --op '" + opt.op + "' (expected create or annihilate)");
  }
  emit(io::to_json(kind, result), opt.out_path);
  return kExitOk;
}

int run_state_norm(const StateOptions& opt) {
  if (opt.inputs.size() != 1) throw io::ParseError("state norm expects exactly one --in");
  auto [file_kind, v] = io::fock_from_json(read_json_file(opt.inputs[0]));
  fock::Statistics kind = resolve_kind(opt, {file_kind});
  double value = fock::norm(kind, v);
  bool null_norm = fock::is_null_norm(kind, v);
  if (opt.as_json) {
    emit(json{{"norm", value}, {"null_norm", null_norm}}, "");
  } else {
    std::cout << "norm: " << value << "\n";
    std::cout << "null_norm: " << (null_norm ? "true" : "false") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check-commutators

struct CheckCommutatorOptions {
  std::string kind = "boson";
  std::uint64_t levels = 4;
  std::uint64_t max_occ = 4;
  double tolerance = 1e-9;
  bool as_json = false;
};

void enumerate_occupations(std::uint64_t levels, std::uint64_t max_total, bool fermionic,
                           std::map<fock::LevelIndex, std::uint32_t>& current,
                           fock::LevelIndex next, std::uint64_t used,
                           std::vector<fock::OccupationMap>& out) {
  if (next > levels) {
    out.push_back(fock::OccupationMap::from_counts(current));
    return;
  }
  std::uint64_t limit = fermionic ? 1 : max_total - used;
  for (std::uint64_t n = 0; n <= limit && used + n <= max_total; ++n) {
    if (n > 0) current[static_cast<fock::LevelIndex>(next)] = static_cast<std::uint32_t>(n);
    enumerate_occupations(levels, max_total, fermionic, current, next + 1, used + n, out);
    current.erase(static_cast<fock::LevelIndex>(next));
  }
}

std::vector<fock::OccupationMap> all_kets(std::uint64_t levels, std::uint64_t max_total,
                                          bool fermionic) {
  std::vector<fock::OccupationMap> out;
  std::map<fock::LevelIndex, std::uint32_t> current;
  enumerate_occupations(levels, max_total, fermionic, current, 1, 0, out);
  return out;
}

int run_check_commutators(const CheckCommutatorOptions& opt) {
  fock::Statistics kind = io::statistics_from_name(opt.kind);
  fock::LevelBasis basis = fock::LevelBasis::uniform(opt.levels);
  bool fermionic = kind == fock::Statistics::fermion;
  std::vector<fock::OccupationMap> kets = all_kets(opt.levels, opt.max_occ, fermionic);

  double worst = 0.0;
  bool failed = false;
  auto check = [&](const char* relation, fock::LevelIndex alpha, fock::LevelIndex beta,
                   const fock::OccupationMap& occ, const fock::FockVector& residual) {
    double r = fock::max_coefficient_distance(residual, fock::FockVector::zero());
    worst = std::max(worst, r);
    if (r > opt.tolerance && !failed) {
      failed = true;
      std::cout << "violation: " << relation << " alpha=" << alpha << " beta=" << beta
                << " ket=" << format_occ(occ) << " residual=" << r << "\n";
    }
  };

  for (const auto& occ : kets) {
    fock::FockVector ket = fock::basis_ket(occ);
    for (const auto& la : basis.levels()) {
      for (const auto& lb : basis.levels()) {
        fock::LevelIndex alpha = la.index;
        fock::LevelIndex beta = lb.index;
        check("[annihilate,create]", alpha, beta, occ,
              fock::commutator_residual(kind, basis, alpha, beta, ket));

        fock::FockVector aa =
            fock::annihilate(kind, basis, alpha, fock::annihilate(kind, basis, beta, ket));
        fock::FockVector aa_swapped =
            fock::annihilate(kind, basis, beta, fock::annihilate(kind, basis, alpha, ket));
        fock::FockVector cc =
            fock::create(kind, basis, alpha, fock::create(kind, basis, beta, ket));
        fock::FockVector cc_swapped =
            fock::create(kind, basis, beta, fock::create(kind, basis, alpha, ket));
        if (fermionic) {
          check("{annihilate,annihilate}", alpha, beta, occ,
                fock::fermion_canonical_form(aa + aa_swapped));
          check("{create,create}", alpha, beta, occ,
                fock::fermion_canonical_form(cc + cc_swapped));
        } else {
          check("[annihilate,annihilate]", alpha, beta, occ, aa - aa_swapped);
          check("[create,create]", alpha, beta, occ, cc - cc_swapped);
        }
      }
      // number operator
      fock::LevelIndex alpha = la.index;
      fock::FockVector counted =
          fock::create(kind, basis, alpha, fock::annihilate(kind, basis, alpha, ket));
      fock::FockVector expected =
          fock::Complex(static_cast<double>(occ.count(alpha)), 0.0) * ket;
      check("number operator", alpha, alpha, occ, counted - expected);
    }
  }

  if (opt.as_json) {
    emit(json{{"kind", opt.kind},
              {"kets", kets.size()},
              {"max_residual", worst},
              {"tolerance", opt.tolerance},
              {"ok", !failed}},
         "");
  } else {
    std::cout << "kets: " << kets.size() << "\n";
    std::cout << "max residual: " << worst << "\n";
    std::cout << (failed ? "FAIL" : "OK") << "\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// check-oracle

struct CheckOracleOptions {
  std::uint64_t max_len = 4;
  std::uint64_t max_levels = 4;
  std::uint64_t ip_trials = 200;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  bool as_json = false;
};

int run_check_oracle(const CheckOracleOptions& opt) {
  bool failed = false;

  // Occupation-word sweep: both inner-product routes must agree exactly.
  std::vector<fock::OccupationMap> words;
  std::map<fock::LevelIndex, std::uint32_t> current;
  enumerate_occupations(opt.max_levels, opt.max_len, false, current, 1, 0, words);
  std::uint64_t compared = 0;
  for (const auto& f : words) {
    for (const auto& g : words) {
      for (auto kind : {fock::Statistics::boson, fock::Statistics::fermion}) {
        long long direct = fock::basis_bracket(kind, f, g);
        long long oracle = labeled::oracle_inner(kind, f, g);
        ++compared;
        if (direct != oracle && !failed) {
          failed = true;
          std::cout << "violation: inner " << format_occ(f) << " vs " << format_occ(g)
                    << " direct=" << direct << " oracle=" << oracle << "\n";
        }
      }
    }
  }

  // Indistinguishability Postulate sweep over group-averaged observables.
  std::mt19937_64 rng(opt.seed);
  double worst_gap = 0.0;
  std::uint64_t trials_done = 0;
  std::vector<std::pair<std::size_t, std::size_t>> spaces = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (std::uint64_t trial = 0; trial < opt.ip_trials; ++trial) {
    auto [particles, levels] = spaces[trial % spaces.size()];
    labeled::AssignmentSpace space(particles, levels);
    labeled::CMatrix observable = labeled::random_permutation_compatible_observable(space, rng);
    labeled::LabeledVector v;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (const auto& assignment : space.assignments()) {
      v.accumulate(assignment, {gauss(rng), gauss(rng)});
    }
    auto perms = labeled::all_permutations(particles);
    const auto& perm = perms[rng() % perms.size()];
    auto [before, after] = labeled::ip_expectation_check(space, observable, v, perm);
    worst_gap = std::max(worst_gap, std::abs(before - after));
    ++trials_done;
    if (std::abs(before - after) > opt.tolerance && !failed) {
      failed = true;
      std::cout << "violation: IP trial " << trial << " gap " << std::abs(before - after)
                << "\n";
    }
  }

  // An observable that fails to commute with the permutations must be refused.
  bool refused = false;
  {
    labeled::AssignmentSpace space(2, 2);
    labeled::CMatrix projector(space.dim());
    std::size_t target = space.index_of({1, 2});
    projector.at(target, target) = {1.0, 0.0};
    try {
      labeled::ip_expectation_check(space, projector, labeled::LabeledVector::basis({1, 2}),
                                    {1, 0});
    } catch (const labeled::NotPermutationCompatible&) {
      refused = true;
    }
  }
  if (!refused) {
    failed = true;
    std::cout << "violation: incompatible observable was not refused\n";
  }

  if (opt.as_json) {
    emit(json{{"inner_products_compared", compared},
              {"ip_trials", trials_done},
              {"max_ip_gap", worst_gap},
              {"refusal_check", refused},
              {"ok", !failed}},
         "");
  } else {
    std::cout << "inner products compared: " << compared << "\n";
    std::cout << "IP trials: " << trials_done << " (max gap " << worst_gap << ")\n";
    std::cout << "incompatible observable refused: " << (refused ? "yes" : "no") << "\n";
    std::cout << (failed ? "FAIL" : "OK") << "\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// demo-permutation

struct DemoPermutationOptions {
  std::uint64_t max_total = 5;
  std::uint64_t max_kinds = 3;
  bool as_json = false;
};

void enumerate_multisets(const std::vector<std::string>& kinds, std::size_t next,
                         std::uint64_t remaining, qset::QSet& current,
                         std::vector<qset::QSet>& out) {
  if (next == kinds.size()) {
    out.push_back(current);
    return;
  }
  for (std::uint64_t n = 0; n <= remaining; ++n) {
    qset::QSet saved = current;
    if (n > 0) current.add_m(qset::AtomKind::m(kinds[next]), n);
    enumerate_multisets(kinds, next + 1, remaining - n, current, out);
    current = saved;
  }
}

int run_demo_permutation(const DemoPermutationOptions& opt) {
  std::vector<std::string> kinds = {"a", "b", "c", "d", "e"};
  kinds.resize(std::min<std::size_t>(opt.max_kinds, kinds.size()));

  std::vector<qset::QSet> multisets;
  qset::QSet scratch;
  enumerate_multisets(kinds, 0, opt.max_total, scratch, multisets);

  std::uint64_t verified = 0;
  bool failed = false;
  for (const auto& x : multisets) {
    for (const auto& [kind_id, count] : x.m_part()) {
      qset::AtomKind kind = qset::AtomKind::m(kind_id);
      for (std::uint64_t extra : {std::uint64_t{1}, std::uint64_t{2}}) {
        qset::QSet pool = x;
        pool.add_m(kind, extra);
        qset::QSet swapped = qset::permutation_swap(x, kind, pool);
        ++verified;
        if (!(swapped == x) && !failed) {
          failed = true;
          std::cout << "violation: swap of kind '" << kind_id << "' changed the q-set\n";
        }
      }
    }
  }

  if (opt.as_json) {
    emit(json{{"multisets", multisets.size()}, {"swaps_verified", verified}, {"ok", !failed}},
         "");
  } else {
    std::cout << "multisets: " << multisets.size() << "\n";
    std::cout << "swaps verified: " << verified << "\n";
    std::cout << (failed ? "FAIL" : "OK") << "\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// qset inspection

struct QSetOptions {
  std::string in_path;
  std::string in2_path;
  std::string pool_path;
  std::string kind;
  std::string out_path;
  bool as_json = false;
};

int run_qset_info(const QSetOptions& opt) {
  qset::QSet q = io::qset_from_json(read_json_file(opt.in_path));
  if (opt.as_json) {
    emit(json{{"qcard", q.qcard()},
              {"classical", qset::is_classical(q)},
              {"pure", q.is_pure()},
              {"m_kinds", q.m_part().size()},
              {"classical_members", q.classical_part().size()}},
         "");
  } else {
    std::cout << "qcard: " << q.qcard() << "\n";
    std::cout << "classical: " << (qset::is_classical(q) ? "true" : "false") << "\n";
    std::cout << "pure: " << (q.is_pure() ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_qset_indistinguishable(const QSetOptions& opt) {
  qset::QSet a = io::qset_from_json(read_json_file(opt.in_path));
  qset::QSet b = io::qset_from_json(read_json_file(opt.in2_path));
  bool result = qset::indistinguishable(qset::Element{a}, qset::Element{b});
  std::cout << (result ? "true" : "false") << "\n";
  return kExitOk;
}

int run_qset_weak_singleton(const QSetOptions& opt) {
  qset::QSet z = io::qset_from_json(read_json_file(opt.in_path));
  qset::QSet result = qset::weak_singleton(qset::AtomKind::m(opt.kind), z);
  emit(io::to_json(result), opt.out_path);
  return kExitOk;
}

int run_qset_permute(const QSetOptions& opt) {
  qset::QSet x = io::qset_from_json(read_json_file(opt.in_path));
  qset::QSet pool = io::qset_from_json(read_json_file(opt.pool_path));
  qset::QSet swapped = qset::permutation_swap(x, qset::AtomKind::m(opt.kind), pool);
  bool unchanged = swapped == x;
  if (opt.as_json) {
    json j = json{{"result", io::to_json(swapped)}, {"structurally_equal", unchanged}};
    emit(j, opt.out_path);
  } else {
    std::cout << "result: " << io::to_json(swapped).dump() << "\n";
    std::cout << "structurally_equal: " << (unchanged ? "true" : "false") << "\n";
  }
  return unchanged ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"occupation-number Fock space on quasi-set semantics"};
  app.require_subcommand(1);

  int result = kExitOk;

  StatsOptions stats_opt;
  auto* stats_cmd = app.add_subcommand("stats", "microstate counts and equiprobability tables");
  stats_cmd->add_option("--kind", stats_opt.kind, "mb, be or fd")->required();
  stats_cmd->add_option("--particles", stats_opt.particles, "number of particles")->required();
  stats_cmd->add_option("--levels", stats_opt.levels, "number of states")->required();
  stats_cmd->add_option("--cap", stats_opt.cap, "enumeration cap");
  stats_cmd->add_flag("--enumerate", stats_opt.enumerate, "list the microstates");
  stats_cmd->add_flag("--json", stats_opt.as_json, "JSON output");
  stats_cmd->callback([&] { result = run_stats(stats_opt); });

  StateOptions state_opt;
  auto* state_cmd = app.add_subcommand("state", "operations on state-vector files");
  state_cmd->require_subcommand(1);
  auto add_state_common = [&](CLI::App* cmd) {
    cmd->add_option("--kind", state_opt.kind, "boson or fermion (default: from the file)");
    cmd->add_option("--in", state_opt.inputs, "input vector file(s)")->required();
    cmd->add_flag("--json", state_opt.as_json, "JSON output");
  };
  auto* inner_cmd = state_cmd->add_subcommand("inner", "inner product of one or two vectors");
  add_state_common(inner_cmd);
  inner_cmd->callback([&] { result = run_state_inner(state_opt); });
  auto* apply_cmd = state_cmd->add_subcommand("apply", "apply a ladder operator");
  add_state_common(apply_cmd);
  apply_cmd->add_option("--op", state_opt.op, "create or annihilate");
  apply_cmd->add_option("--level", state_opt.level, "level index")->required();
  apply_cmd->add_option("--levels", state_opt.levels, "basis size (default: inferred)");
  apply_cmd->add_option("--out", state_opt.out_path, "output file (default: stdout)");
  apply_cmd->callback([&] { result = run_state_apply(state_opt); });
  auto* norm_cmd = state_cmd->add_subcommand("norm", "norm and null-norm flag");
  add_state_common(norm_cmd);
  norm_cmd->callback([&] { result = run_state_norm(state_opt); });

  CheckCommutatorOptions comm_opt;
  auto* comm_cmd =
      app.add_subcommand("check-commutators", "verify the ladder-operator algebra");
  comm_cmd->add_option("--kind", comm_opt.kind, "boson or fermion")->required();
  comm_cmd->add_option("--levels", comm_opt.levels, "basis size");
  comm_cmd->add_option("--max-occ", comm_opt.max_occ, "max total occupation");
  comm_cmd->add_option("--tolerance", comm_opt.tolerance, "residual tolerance");
  comm_cmd->add_flag("--json", comm_opt.as_json, "JSON output");
  comm_cmd->callback([&] { result = run_check_commutators(comm_opt); });

  CheckOracleOptions oracle_opt;
  auto* oracle_cmd = app.add_subcommand(
      "check-oracle", "verify inner products against the labeled-tensor oracle and the IP");
  oracle_cmd->add_option("--max-len", oracle_opt.max_len, "max occupation-word length");
  oracle_cmd->add_option("--max-levels", oracle_opt.max_levels, "levels in the sweep");
  oracle_cmd->add_option("--ip-trials", oracle_opt.ip_trials, "random IP observables");
  oracle_cmd->add_option("--seed", oracle_opt.seed, "RNG seed");
  oracle_cmd->add_option("--tolerance", oracle_opt.tolerance, "tolerance");
  oracle_cmd->add_flag("--json", oracle_opt.as_json, "JSON output");
  oracle_cmd->callback([&] { result = run_check_oracle(oracle_opt); });

  DemoPermutationOptions demo_opt;
  auto* demo_cmd = app.add_subcommand(
      "demo-permutation", "exhaustively demonstrate permutation unobservability");
  demo_cmd->add_option("--max-total", demo_opt.max_total, "max quasi-cardinal");
  demo_cmd->add_option("--max-kinds", demo_opt.max_kinds, "max distinct kinds");
  demo_cmd->add_flag("--json", demo_opt.as_json, "JSON output");
  demo_cmd->callback([&] { result = run_demo_permutation(demo_opt); });

  QSetOptions qset_opt;
  auto* qset_cmd = app.add_subcommand("qset", "q-set kernel inspection");
  qset_cmd->require_subcommand(1);
  auto* info_cmd = qset_cmd->add_subcommand("info", "quasi-cardinal and classicality");
  info_cmd->add_option("--in", qset_opt.in_path, "q-set file")->required();
  info_cmd->add_flag("--json", qset_opt.as_json, "JSON output");
  info_cmd->callback([&] { result = run_qset_info(qset_opt); });
  auto* indist_cmd = qset_cmd->add_subcommand("indistinguishable", "compare two q-sets");
  indist_cmd->add_option("--in", qset_opt.in_path, "first q-set file")->required();
  indist_cmd->add_option("--in2", qset_opt.in2_path, "second q-set file")->required();
  indist_cmd->callback([&] { result = run_qset_indistinguishable(qset_opt); });
  auto* weak_cmd = qset_cmd->add_subcommand("weak-singleton", "separate [x]_z by kind");
  weak_cmd->add_option("--kind", qset_opt.kind, "m-atom kind")->required();
  weak_cmd->add_option("--in", qset_opt.in_path, "q-set file")->required();
  weak_cmd->add_option("--out", qset_opt.out_path, "output file (default: stdout)");
  weak_cmd->callback([&] { result = run_qset_weak_singleton(qset_opt); });
  auto* permute_cmd =
      qset_cmd->add_subcommand("permute", "swap one atom against the pool and compare");
  permute_cmd->add_option("--kind", qset_opt.kind, "m-atom kind")->required();
  permute_cmd->add_option("--in", qset_opt.in_path, "q-set file")->required();
  permute_cmd->add_option("--pool", qset_opt.pool_path, "pool q-set file")->required();
  permute_cmd->add_flag("--json", qset_opt.as_json, "JSON output");
  permute_cmd->callback([&] { result = run_qset_permute(qset_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return result;
}
