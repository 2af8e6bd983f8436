// seqspace-greedy: norms, greedy approximation and democracy/identification
// reports for Nakano, Orlicz, Musielak flow, Lorentz and Marcinkiewicz
// sequence spaces. Emits deterministic JSON/CSV given a fixed seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "seqspace/errors.hpp"
#include "seqspace/json_io.hpp"
#include "seqspace/random.hpp"
#include "seqspace/rearrangement.hpp"

namespace {

using seqspace::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitExpectation = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::string space_path;
  std::string vector_path;
  std::string out_path;
  std::size_t n_max = 16;
  std::size_t window = 0;  // 0 -> max(n_max, 64)
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  std::string format = "json";
  std::string expect;
  bool greedy_table = false;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);  // parse errors carry line/column in what()
}

void emit(const RunConfig& config, const std::string& text) {
  if (config.out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + config.out_path + "'");
  out << text;
}

// Largest index the descriptor can serve values for.
std::size_t available_indices(const seqspace::SpaceDescriptor& space) {
  using Kind = seqspace::SpaceDescriptor::Kind;
  const auto unlimited = std::numeric_limits<std::size_t>::max();
  switch (space.kind()) {
    case Kind::nakano:
      return space.exponents().tail_has_values() ? unlimited : space.exponents().prefix_size();
    case Kind::orlicz:
      return unlimited;
    case Kind::musielak_flow:
      return space.scales().has_closed_form() ? unlimited : space.scales().prefix().size();
    default:
      return space.weight().available();
  }
}

Json greedy_sampling(const seqspace::SpaceDescriptor& space, const RunConfig& config,
                     std::size_t max_index) {
  seqspace::Rng rng(config.seed);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  std::size_t ran = 0;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    std::size_t support = 3 + rng.below(6);
    support = std::min(support, max_index);
    if (support < 2) break;
    std::vector<seqspace::VectorEntry> entries;
    std::vector<bool> used(max_index + 1, false);
    while (entries.size() < support) {
      const std::size_t idx = 1 + rng.below(max_index);
      if (used[idx]) continue;
      used[idx] = true;
      entries.push_back({idx, rng.sign() * rng.uniform(0.1, 1.0)});
    }
    const std::size_t n = 1 + rng.below(support - 1);
    const double ratio =
        seqspace::greedy_ratio(space, seqspace::FiniteVector(entries), n);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    ++ran;
  }
  Json j;
  j["trials"] = ran;
  j["seed"] = config.seed;
  if (ran > 0) {
    j["min_ratio"] = lo;
    j["max_ratio"] = hi;
  }
  return j;
}

std::vector<seqspace::CriterionVerdict> collect_criteria(
    const seqspace::SpaceDescriptor& space) {
  std::vector<seqspace::CriterionVerdict> verdicts;
  if (space.kind() == seqspace::SpaceDescriptor::Kind::nakano)
    verdicts.push_back(seqspace::nakano_space_verdict(space.exponents()).detail);
  return verdicts;
}

int apply_expectation(const RunConfig& config,
                      const std::vector<seqspace::CriterionVerdict>& verdicts) {
  if (config.expect.empty()) return kExitOk;
  bool any_fails = false;
  for (const auto& v : verdicts) any_fails |= v.verdict == seqspace::Verdict::fails;
  if (config.expect == "holds" && any_fails) return kExitExpectation;
  if (config.expect == "fails" && !any_fails) return kExitExpectation;
  return kExitOk;
}

int cmd_analyze(const RunConfig& config) {
  const auto space = seqspace::space_from_json(load_json(config.space_path));
  const std::size_t available = available_indices(space);
  if (available == 0) throw std::invalid_argument("descriptor provides no indices");
  const std::size_t window =
      std::min(config.window ? config.window : std::max<std::size_t>(config.n_max, 64), available);
  const std::size_t n_max = std::min(config.n_max, window);

  Json report;
  report["space"] = seqspace::space_to_json(space);
  report["symmetric"] = space.symmetric();

  Json norm_checks = Json::array();
  {
    Json row;
    row["vector"] = "e_1";
    row["norm"] = seqspace::space_norm(space, seqspace::FiniteVector::unit(1), config.tol);
    norm_checks.push_back(row);
    const std::size_t m = std::min<std::size_t>(4, window);
    Json row2;
    row2["vector"] = "indicator_" + std::to_string(m);
    row2["norm"] =
        seqspace::space_norm(space, seqspace::FiniteVector::indicator(m), config.tol);
    norm_checks.push_back(row2);
    if (!config.vector_path.empty()) {
      const auto x = seqspace::vector_from_json(load_json(config.vector_path));
      Json row3;
      row3["vector"] = config.vector_path;
      row3["norm"] = seqspace::space_norm(space, x, config.tol);
      norm_checks.push_back(row3);
    }
  }
  report["norm_checks"] = norm_checks;

  const auto table = seqspace::democracy_functions(space, n_max, window);
  report["democracy"] = seqspace::democracy_to_json(table);
  report["greedy_sampling"] = greedy_sampling(space, config, window);

  std::string summary;
  const auto verdicts = collect_criteria(space);
  switch (space.kind()) {
    case seqspace::SpaceDescriptor::Kind::nakano: {
      const auto classification = seqspace::nakano_space_verdict(space.exponents());
      report["classification"] = seqspace::classification_to_json(classification);
      summary = classification.summary;
      break;
    }
    case seqspace::SpaceDescriptor::Kind::marcinkiewicz:
    case seqspace::SpaceDescriptor::Kind::lorentz_d1:
    case seqspace::SpaceDescriptor::Kind::weak_lorentz: {
      const std::size_t m = std::min<std::size_t>(1024, available / 2 ? available / 2 : 1);
      if (m >= 4) {
        report["weight_properties"] =
            seqspace::weight_properties_to_json(seqspace::weight_properties(space.weight(), m));
      }
      report["embedding_constants"] = [&] {
        const auto constants = seqspace::embedding_constants(table, space.weight());
        Json j;
        j["sup_s_over_phi_l"] = constants.sup_s_over_phi_l;
        j["sup_phi_u_over_s"] = constants.sup_phi_u_over_s;
        return j;
      }();
      summary = "symmetric unit vector basis; democracy ratio 1.0";
      break;
    }
    case seqspace::SpaceDescriptor::Kind::orlicz: {
      const auto& f = space.function();
      report["delta2_estimate"] = seqspace::delta2_estimate(f, 0.25, 256);
      report["multiplicative_convexity_violation"] =
          seqspace::multiplicative_convexity_violation(f, 48);
      Json fundamental = Json::array();
      for (std::size_t n : {2, 8, 32, 128}) {
        Json row;
        row["N"] = n;
        row["D_N"] = seqspace::fundamental_function(f, static_cast<double>(n));
        fundamental.push_back(row);
      }
      report["fundamental_function"] = fundamental;
      summary = "symmetric (1-symmetric) unit vector basis; greedy";
      break;
    }
    case seqspace::SpaceDescriptor::Kind::musielak_flow:
      summary = space.symmetric() ? "constant flow scales: symmetric unit vector basis"
                                  : "flow family with varying scales";
      break;
  }

  Json criteria = Json::array();
  for (const auto& v : verdicts) criteria.push_back(seqspace::verdict_to_json(v));
  report["criteria"] = criteria;
  report["summary"] = summary;

  emit(config, report.dump(2));
  return apply_expectation(config, verdicts);
}

int cmd_table(const RunConfig& config) {
  const auto space = seqspace::space_from_json(load_json(config.space_path));

  if (config.greedy_table) {
    if (config.vector_path.empty())
      throw std::invalid_argument("--greedy needs --vector");
    const auto x = seqspace::vector_from_json(load_json(config.vector_path));
    const std::size_t n_hi = std::min(config.n_max, x.support_size());
    if (config.format == "csv") {
      std::string csv = "N,sigma,residual,ratio\n";
      for (std::size_t n = 1; n <= n_hi; ++n) {
        const auto r = seqspace::greedy_ratio_report(space, x, n);
        csv += std::to_string(n) + ',' + seqspace::format_g12(r.sigma) + ',' +
               seqspace::format_g12(r.residual_norm) + ',' + seqspace::format_g12(r.ratio) + '\n';
      }
      emit(config, csv);
    } else {
      Json rows = Json::array();
      for (std::size_t n = 1; n <= n_hi; ++n)
        rows.push_back(seqspace::greedy_report_to_json(seqspace::greedy_ratio_report(space, x, n)));
      emit(config, rows.dump(2));
    }
    return kExitOk;
  }

  const std::size_t window = config.window ? config.window : std::max<std::size_t>(config.n_max, 64);
  const auto table = seqspace::democracy_functions(space, config.n_max, window);
  if (config.format == "csv")
    emit(config, seqspace::democracy_to_csv(table));
  else
    emit(config, seqspace::democracy_to_json(table).dump(2));
  return kExitOk;
}

int cmd_criteria(const RunConfig& config) {
  const Json input = load_json(config.space_path);
  const std::string kind = input.value("kind", "");
  std::vector<seqspace::CriterionVerdict> verdicts;
  Json report;

  if (kind == "nakano") {
    const auto classification =
        seqspace::nakano_space_verdict(seqspace::exponents_from_json(input.at("exponents")));
    report = seqspace::classification_to_json(classification);
    verdicts.push_back(classification.detail);
  } else if (kind == "counts") {
    const auto counts = seqspace::counts_from_json(input);
    const double r = input.value("R", 2.0);
    const int k_max = input.value("k_max", 10);
    const auto verdict = seqspace::condition_c_check(counts, r, k_max);
    report = seqspace::verdict_to_json(verdict);
    verdicts.push_back(verdict);
  } else if (kind == "witness") {
    const auto f_space = seqspace::space_from_json(input.at("F"));
    const auto g_space = seqspace::space_from_json(input.at("G"));
    seqspace::MusielakWitness witness;
    const Json& w = input.at("witness");
    for (const auto& v : w.value("a", Json::array())) witness.a.push_back(v.get<double>());
    witness.delta = w.value("delta", 0.0);
    witness.b = w.value("b", 1.0);
    witness.c = w.value("C", 1.0);
    const auto rule = input.value("rule", "inclusion") == "doubling"
                          ? seqspace::WitnessRule::doubling
                          : seqspace::WitnessRule::inclusion;
    const auto verdict = seqspace::musielak_witness_check(
        f_space.musielak(), g_space.musielak(), witness,
        input.value("samples", std::size_t{64}), rule, input.value("grid", std::size_t{64}));
    report = seqspace::verdict_to_json(verdict);
    verdicts.push_back(verdict);
  } else {
    throw std::invalid_argument("criteria input must have kind nakano, counts or witness");
  }

  emit(config, report.dump(2));
  return apply_expectation(config, verdicts);
}

int cmd_blocks(const RunConfig& config) {
  const Json input = load_json(config.space_path);
  const auto f = seqspace::orlicz_from_json(input.at("function"));
  std::vector<std::size_t> lengths;
  for (const auto& v : input.at("lengths")) lengths.push_back(v.get<std::size_t>());
  const auto basis = seqspace::build_block_basis(
      f, lengths, input.value("samples", std::size_t{100}), config.seed);
  emit(config, seqspace::block_basis_to_json(basis).dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy approximation and democracy reports for sequence spaces"};
  app.require_subcommand(1);

  RunConfig config;
  const auto add_common = [&](CLI::App* cmd, bool needs_space) {
    auto* opt = cmd->add_option("--space", config.space_path, "descriptor JSON file");
    if (needs_space) opt->required();
    cmd->add_option("--vector", config.vector_path, "vector JSON file");
    cmd->add_option("--Nmax", config.n_max, "largest N in tables");
    cmd->add_option("--window", config.window, "index window (>= Nmax)");
    cmd->add_option("--trials", config.trials, "sampling trials");
    cmd->add_option("--seed", config.seed, "sampling seed");
    cmd->add_option("--tol", config.tol, "norm tolerance");
    cmd->add_option("--format", config.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", config.out_path, "output path (stdout when absent)");
    cmd->add_option("--expect", config.expect, "holds|fails: exit 2 on mismatch")
        ->check(CLI::IsMember({"holds", "fails"}));
  };

  auto* analyze = app.add_subcommand("analyze", "full per-space report");
  add_common(analyze, true);
  auto* table = app.add_subcommand("table", "democracy or greedy-error table");
  add_common(table, true);
  table->add_flag("--greedy", config.greedy_table, "emit sigma_N/residual/ratio rows");
  auto* criteria = app.add_subcommand("criteria", "identification criteria verdicts");
  add_common(criteria, true);
  auto* blocks = app.add_subcommand("blocks", "block basis construction + isometry check");
  add_common(blocks, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (config.window && config.window < config.n_max)
      throw std::invalid_argument("--window must be >= --Nmax");
    if (config.window > (1u << 20))
      throw std::invalid_argument("--window is capped at 2^20");
    if (!(config.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
    if (analyze->parsed()) return cmd_analyze(config);
    if (table->parsed()) return cmd_table(config);
    if (criteria->parsed()) return cmd_criteria(config);
    if (blocks->parsed()) return cmd_blocks(config);
  } catch (const seqspace::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
