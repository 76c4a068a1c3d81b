#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "looplab/errors.hpp"
#include "looplab/involution.hpp"
#include "looplab/matching.hpp"
#include "looplab/pattern.hpp"
#include "looplab/rational.hpp"
#include "looplab/schedule.hpp"
#include "looplab/simulate.hpp"
#include "looplab/sweeps.hpp"
#include "looplab/tiles.hpp"
#include "looplab/transfer.hpp"
#include "looplab/version.hpp"
#include "looplab/yang_baxter.hpp"

namespace looplab::cli {
namespace {

using nlohmann::ordered_json;

struct Ctx {
  std::filesystem::path out;
  int threads = 1;
};

// Artifact filenames derived from parameter text: "1/2" -> "1-2".
std::string tag(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_') c = '-';
  return s;
}

ordered_json make_doc(const std::string& command, ordered_json parameters) {
  ordered_json doc;
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  return doc;
}

void write_text(const Ctx& ctx, const std::string& name, const std::string& body) {
  std::filesystem::create_directories(ctx.out);
  auto path = ctx.out / name;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << body;
  if (!f) throw std::runtime_error("failed writing " + path.string());
  std::cout << "wrote " << path.string() << '\n';
}

void write_artifact(const Ctx& ctx, const std::string& name, const ordered_json& doc) {
  write_text(ctx, name, doc.dump(2) + "\n");
}

std::string csv_cell(const std::string& s) { return '"' + s + '"'; }

std::string evaluated_csv(const TransferMatrix& T,
                          const std::vector<std::vector<Rational>>& values) {
  std::string out = "from";
  for (const auto& m : T.order) out += ',' + csv_cell(format_matching(m));
  out += '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += csv_cell(format_matching(T.order[i]));
    for (const auto& v : values[i]) out += ',' + csv_cell(format_rational(v));
    out += '\n';
  }
  return out;
}

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

RowPair parse_pair(const std::string& top, const std::string& bottom) {
  RowPair pair{parse_row(top), parse_row(bottom)};
  require_valid_pair(pair);
  return pair;
}

std::vector<BiasSchedule> load_schedules(const std::string& file,
                                         const std::vector<std::string>& specs) {
  std::vector<BiasSchedule> out;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw std::runtime_error("cannot read schedule file " + file);
    nlohmann::json doc = nlohmann::json::parse(f);
    if (!doc.is_array()) throw std::runtime_error("schedule file must hold a JSON array");
    for (const auto& item : doc) {
      if (item.is_string())
        out.push_back(BiasSchedule::parse(item.get<std::string>()));
      else
        out.push_back(BiasSchedule::from_json(item));
    }
  }
  for (const auto& spec : specs) out.push_back(BiasSchedule::parse(spec));
  return out;
}

void print_law(const std::vector<std::string>& order, const std::vector<long>& counts,
               long samples) {
  for (std::size_t i = 0; i < order.size(); ++i)
    std::cout << "  " << order[i] << "  " << counts[i] << "  "
              << static_cast<double>(counts[i]) / static_cast<double>(samples) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"loop workbench: noncrossing matchings, tile rows, the row-pair\n"
               "involution, transfer matrices, and cylinder sampling"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_flag = ".";
  int threads = 1;
  app.add_option("--out", out_flag, "directory for JSON/CSV artifacts (env LOOPLAB_OUT overrides)")
      ->capture_default_str();
  app.add_option("--threads", threads, "worker cap; results never depend on it")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  int rc = 0;
  auto ctx = [&] {
    Ctx c;
    const char* env = std::getenv("LOOPLAB_OUT");
    c.out = (env && *env) ? std::filesystem::path(env) : std::filesystem::path(out_flag);
    c.threads = threads;
    return c;
  };

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list the noncrossing matchings of 2n points");
  int enum_n = 1;
  cmd_enum->add_option("--n", enum_n, "half the number of boundary points")
      ->required()
      ->check(CLI::Range(1, 12));
  cmd_enum->callback([&] {
    auto ms = enumerate_matchings(enum_n);
    for (const auto& m : ms) std::cout << format_matching(m) << '\n';
    std::cout << ms.size() << " matchings of " << 2 * enum_n << " points\n";
    auto doc = make_doc("enumerate", ordered_json{{"n", enum_n}});
    doc["count"] = ms.size();
    auto arr = ordered_json::array();
    for (const auto& m : ms) arr.push_back(format_matching(m));
    doc["matchings"] = std::move(arr);
    write_artifact(ctx(), "enumerate_n" + std::to_string(enum_n) + ".json", doc);
  });

  // act
  auto* cmd_act = app.add_subcommand("act", "apply one tile row to a matching from below");
  std::string act_row_text, act_matching_text;
  cmd_act->add_option("--row", act_row_text, "tile letters per column, e.g. lrlr")->required();
  cmd_act->add_option("--matching", act_matching_text, "matching text like (1,4),(2,3)")
      ->required();
  cmd_act->callback([&] {
    Row row = parse_row(act_row_text);
    Matching m = parse_matching(act_matching_text);
    Matching result = act_row(row, m);
    std::cout << format_matching(result) << '\n';
    auto doc = make_doc("act", ordered_json{{"row", format_row(row)},
                                            {"matching", format_matching(m)}});
    doc["result"] = format_matching(result);
    write_artifact(ctx(), "act.json", doc);
  });

  // intervals
  auto* cmd_intervals =
      app.add_subcommand("intervals", "maximal fundamental blocks of a row pair");
  std::string iv_top, iv_bottom;
  cmd_intervals->add_option("--top", iv_top, "top row tiles")->required();
  cmd_intervals->add_option("--bottom", iv_bottom, "bottom row tiles")->required();
  cmd_intervals->callback([&] {
    RowPair pair = parse_pair(iv_top, iv_bottom);
    auto doc = make_doc("intervals", ordered_json{{"top", format_row(pair.top)},
                                                  {"bottom", format_row(pair.bottom)}});
    doc["symbols"] = symbol_string(pair);
    auto special = classify_special(pair);
    if (special != SpecialPair::None) {
      const char* which = special == SpecialPair::AllRight ? "all-right" : "all-left";
      std::cout << symbol_string(pair) << '\n'
                << "special pair (" << which
                << "): no blocks; the involution maps it to its mirror\n";
      doc["special"] = which;
      doc["blocks"] = ordered_json::array();
    } else {
      auto blocks = maximal_fundamental_blocks(pair);
      std::cout << symbol_string(pair) << '\n';
      for (const auto& b : blocks)
        std::cout << "  [" << b.interval.a + 1 << ", " << b.interval.b + 1 << "]  j=" << b.j
                  << " k=" << b.k << '\n';
      std::cout << blocks.size() << " blocks\n";
      doc["special"] = nullptr;
      doc["blocks"] = blocks_to_json(blocks);
    }
    write_artifact(ctx(), "intervals.json", doc);
  });

  // involution
  auto* cmd_inv = app.add_subcommand("involution", "apply the row-pair involution V");
  std::string in_top, in_bottom;
  cmd_inv->add_option("--top", in_top, "top row tiles")->required();
  cmd_inv->add_option("--bottom", in_bottom, "bottom row tiles")->required();
  cmd_inv->callback([&] {
    RowPair pair = parse_pair(in_top, in_bottom);
    RowPair result = involute(pair);
    std::cout << "top:    " << format_row(result.top) << '\n'
              << "bottom: " << format_row(result.bottom) << '\n';
    auto doc = make_doc("involution", ordered_json{{"top", format_row(pair.top)},
                                                   {"bottom", format_row(pair.bottom)}});
    doc["input_symbols"] = symbol_string(pair);
    doc["result"] = ordered_json{{"top", format_row(result.top)},
                                 {"bottom", format_row(result.bottom)},
                                 {"symbols", symbol_string(result)}};
    if (classify_special(pair) == SpecialPair::None)
      doc["blocks"] = blocks_to_json(maximal_fundamental_blocks(pair));
    write_artifact(ctx(), "involution.json", doc);
  });

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "check a stated identity; exits 1 on failure");
  cmd_verify->require_subcommand(1);

  auto* v_inv = cmd_verify->add_subcommand("involution", "property sweep over row pairs");
  int vi_L = 2;
  long vi_random = 0;
  std::uint64_t vi_seed = 0;
  v_inv->add_option("--L", vi_L, "row width (even)")->required()->check(CLI::Range(2, 32));
  v_inv->add_option("--random", vi_random, "sample this many pairs instead of all 4^L")
      ->check(CLI::NonNegativeNumber);
  v_inv->add_option("--seed", vi_seed, "stream seed for --random");
  v_inv->callback([&] {
    SweepOptions opts;
    opts.random_pairs = vi_random;
    opts.seed = vi_seed;
    opts.threads = ctx().threads;
    auto rep = involution_sweep(vi_L, opts);
    if (rep.exhaustive)
      std::cout << "4^" << vi_L << " = " << rep.pairs_checked << " pairs: ";
    else
      std::cout << rep.pairs_checked << " sampled pairs: ";
    std::cout << "V∘V " << mark(rep.failures.involutive == 0) << ", Pat∘V "
              << mark(rep.failures.pattern == 0) << ", count-switch "
              << mark(rep.failures.count_switch == 0) << ", R-equivariance "
              << mark(rep.failures.equivariance == 0) << ", blocks "
              << mark(rep.failures.disjoint + rep.failures.stability +
                          rep.failures.block_pattern ==
                      0)
              << " (" << rep.special_pairs << " special)\n";
    auto doc = make_doc("verify involution",
                        ordered_json{{"L", vi_L}, {"random", vi_random}, {"seed", vi_seed}});
    doc["report"] = rep.to_json();
    write_artifact(ctx(), "verify_involution_L" + std::to_string(vi_L) + ".json", doc);
    if (!rep.ok()) {
      std::cout << "FAILED: " << rep.failures.total() << " pairs broke a property; first "
                << rep.first_failure << '\n';
      rc = 1;
    }
  });

  auto* v_com = cmd_verify->add_subcommand("commute", "transfer matrices at two biases commute");
  int vc_n = 1, vc_max_n = kDefaultTransferBound;
  bool vc_inject = false, vc_grid = false;
  v_com->add_option("--n", vc_n, "half width")->required()->check(CLI::Range(1, 8));
  v_com->add_flag("--inject-defect", vc_inject,
                  "perturb one product entry first; the check must then fail");
  v_com->add_flag("--grid", vc_grid, "also recheck at a grid of rational points");
  v_com->add_option("--max-n", vc_max_n, "resource cap on n")->capture_default_str();
  v_com->callback([&] {
    auto T = build_transfer_matrix(vc_n, vc_max_n);
    auto rep = commutator_report(T, vc_inject);
    auto C = static_cast<long>(T.order.size());
    if (rep.zero)
      std::cout << "[T(p), T(q)] = 0: all " << C * C << " entries vanish identically (n = "
                << vc_n << ")\n";
    else
      std::cout << "[T(p), T(q)] ≠ 0 at entry (" << rep.defect_row << ", " << rep.defect_col
                << "), largest coefficient " << format_rational(rep.max_abs_coeff) << '\n';
    bool grid_ok = true;
    if (vc_grid) {
      std::vector<Rational> points;
      const int L = 2 * vc_n;
      for (int k = 1; k <= L + 1; ++k) points.emplace_back(Rational(k) / (L + 2));
      grid_ok = commutator_pointwise_zero(T, points, points);
      std::cout << "grid recheck at " << points.size() << "^2 rational points: " << mark(grid_ok)
                << '\n';
    }
    auto doc = make_doc("verify commute",
                        ordered_json{{"n", vc_n}, {"inject_defect", vc_inject}, {"grid", vc_grid}});
    doc["zero"] = rep.zero;
    if (!rep.zero) {
      doc["defect"] = ordered_json{{"row", rep.defect_row},
                                   {"col", rep.defect_col},
                                   {"max_abs_coeff", format_rational(rep.max_abs_coeff)}};
    }
    if (vc_grid) doc["grid_zero"] = grid_ok;
    write_artifact(ctx(), "verify_commute_n" + std::to_string(vc_n) + ".json", doc);
    if (!(rep.zero && grid_ok)) rc = 1;
  });

  auto* v_yb = cmd_verify->add_subcommand(
      "yangbaxter", "one aux cell at s(p,q) swaps a p-row past a q-row on the triangle");
  std::string yb_p, yb_q;
  v_yb->add_option("--p", yb_p, "left row bias (rational)");
  v_yb->add_option("--q", yb_q, "right row bias (rational)");
  v_yb->callback([&] {
    auto doc = make_doc("verify yangbaxter",
                        ordered_json{{"p", yb_p.empty() ? ordered_json() : ordered_json(yb_p)},
                                     {"q", yb_q.empty() ? ordered_json() : ordered_json(yb_q)}});
    bool holds = true;
    if (!yb_p.empty() || !yb_q.empty()) {
      if (yb_p.empty() || yb_q.empty())
        throw std::invalid_argument("give both --p and --q, or neither for the symbolic check");
      Rational p = parse_rational(yb_p), q = parse_rational(yb_q);
      auto rep = verify_yang_baxter_at(p, q);
      std::cout << "s(" << format_rational(p) << ", " << format_rational(q)
                << ") = " << format_rational(solve_s(p, q)) << '\n'
                << rep.claim << ": " << mark(rep.holds) << '\n';
      doc["report"] = ordered_json{{"claim", rep.claim}, {"holds", rep.holds},
                                   {"details", rep.details}};
      holds = rep.holds;
    } else {
      auto sym = verify_yang_baxter_symbolic();
      std::cout << sym.claim << ": " << mark(sym.holds) << '\n';
      auto failures = ordered_json::array();
      int points = 0;
      for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
          Rational p = Rational(i) / 10, q = Rational(j) / 10;
          ++points;
          auto rep = verify_yang_baxter_at(p, q);
          if (!rep.holds)
            failures.push_back(
                ordered_json{{"p", format_rational(p)}, {"q", format_rational(q)}});
        }
      bool grid_ok = failures.empty();
      std::cout << "grid p, q ∈ {1/10, ..., 1}: " << points << " points " << mark(grid_ok)
                << '\n';
      doc["symbolic"] = ordered_json{{"claim", sym.claim}, {"holds", sym.holds},
                                     {"details", sym.details}};
      doc["grid"] = ordered_json{{"points", points}, {"holds", grid_ok},
                                 {"failures", failures}};
      holds = sym.holds && grid_ok;
    }
    write_artifact(ctx(), "verify_yangbaxter.json", doc);
    if (!holds) rc = 1;
  });

  auto* v_aux = cmd_verify->add_subcommand("auxcompose",
                                           "stacked aux cells compose by weight products");
  std::string ax_s, ax_t;
  v_aux->add_option("--s", ax_s, "upper cell pass weight (rational)")->required();
  v_aux->add_option("--t", ax_t, "lower cell pass weight (rational)")->required();
  v_aux->callback([&] {
    Rational s = parse_rational(ax_s), t = parse_rational(ax_t);
    auto rep = verify_aux_composition(s, t);
    std::cout << rep.claim << ": " << mark(rep.holds) << '\n';
    auto doc = make_doc("verify auxcompose", ordered_json{{"s", ax_s}, {"t", ax_t}});
    doc["report"] = ordered_json{{"claim", rep.claim}, {"holds", rep.holds},
                                 {"details", rep.details}};
    write_artifact(ctx(), "verify_auxcompose.json", doc);
    if (!rep.holds) rc = 1;
  });

  auto* v_rs = cmd_verify->add_subcommand(
      "rowswitch", "stacks with adjacent rows swapped give equal boundary weights");
  int rs_L = 2, rs_max_L = 8;
  std::string rs_p, rs_q;
  v_rs->add_option("--L", rs_L, "row width (even)")->required()->check(CLI::Range(2, 12));
  v_rs->add_option("--p", rs_p, "lower row bias (rational)");
  v_rs->add_option("--q", rs_q, "upper row bias (rational)");
  v_rs->add_option("--max-L", rs_max_L, "resource cap on L")->capture_default_str();
  v_rs->callback([&] {
    CheckReport rep;
    if (!rs_p.empty() || !rs_q.empty()) {
      if (rs_p.empty() || rs_q.empty())
        throw std::invalid_argument("give both --p and --q, or neither for the symbolic check");
      rep = verify_row_switch_at(rs_L, parse_rational(rs_p), parse_rational(rs_q), rs_max_L);
    } else {
      rep = verify_row_switch(rs_L, rs_max_L);
    }
    std::cout << rep.claim << ": " << mark(rep.holds) << '\n';
    auto doc = make_doc("verify rowswitch",
                        ordered_json{{"L", rs_L},
                                     {"p", rs_p.empty() ? ordered_json() : ordered_json(rs_p)},
                                     {"q", rs_q.empty() ? ordered_json() : ordered_json(rs_q)}});
    doc["report"] = ordered_json{{"claim", rep.claim}, {"holds", rep.holds},
                                 {"details", rep.details}};
    write_artifact(ctx(), "verify_rowswitch_L" + std::to_string(rs_L) + ".json", doc);
    if (!rep.holds) rc = 1;
  });

  // transfer
  auto* cmd_transfer = app.add_subcommand("transfer", "row transfer matrix over Q[p]");
  int tr_n = 1, tr_max_n = kDefaultTransferBound;
  std::string tr_eval;
  cmd_transfer->add_option("--n", tr_n, "half width")->required()->check(CLI::Range(1, 8));
  cmd_transfer->add_option("--eval", tr_eval, "also evaluate at this rational bias");
  cmd_transfer->add_option("--max-n", tr_max_n, "resource cap on n")->capture_default_str();
  cmd_transfer->callback([&] {
    auto T = build_transfer_matrix(tr_n, tr_max_n);
    std::cout << "T_" << tr_n << ": " << T.order.size() << "x" << T.order.size()
              << " matrix of polynomials in p\n";
    auto doc = make_doc("transfer", ordered_json{{"n", tr_n}});
    doc["matrix"] = transfer_to_json(T);
    write_artifact(ctx(), "transfer_n" + std::to_string(tr_n) + ".json", doc);
    if (!tr_eval.empty()) {
      Rational p = parse_rational(tr_eval);
      auto values = evaluate_transfer(T, p);
      std::cout << "evaluated at p = " << format_rational(p) << '\n';
      auto edoc = make_doc("transfer", ordered_json{{"n", tr_n}, {"eval", tr_eval}});
      auto order = ordered_json::array();
      for (const auto& m : T.order) order.push_back(format_matching(m));
      edoc["order"] = std::move(order);
      auto rows = ordered_json::array();
      for (const auto& row : values) {
        auto r = ordered_json::array();
        for (const auto& v : row) r.push_back(format_rational(v));
        rows.push_back(std::move(r));
      }
      edoc["entries"] = std::move(rows);
      std::string base = "transfer_n" + std::to_string(tr_n) + "_p" + tag(tr_eval);
      write_artifact(ctx(), base + ".json", edoc);
      write_text(ctx(), base + ".csv", evaluated_csv(T, values));
    }
  });

  // stationary
  auto* cmd_stat = app.add_subcommand("stationary", "exact stationary law of the transfer chain");
  int st_n = 1, st_max_n = kDefaultTransferBound;
  std::string st_p;
  cmd_stat->add_option("--n", st_n, "half width")->required()->check(CLI::Range(1, 8));
  cmd_stat->add_option("--p", st_p, "row bias in (0,1), rational")->required();
  cmd_stat->add_option("--max-n", st_max_n, "resource cap on n")->capture_default_str();
  cmd_stat->callback([&] {
    Rational p = parse_rational(st_p);
    auto pi = stationary_distribution(st_n, p, st_max_n);
    auto order = enumerate_matchings(st_n);
    for (std::size_t i = 0; i < pi.size(); ++i)
      std::cout << "  " << format_matching(order[i]) << "  " << format_rational(pi[i]) << '\n';
    auto doc = make_doc("stationary", ordered_json{{"n", st_n}, {"p", st_p}});
    auto names = ordered_json::array();
    for (const auto& m : order) names.push_back(format_matching(m));
    doc["order"] = std::move(names);
    auto law = ordered_json::array();
    for (const auto& v : pi) law.push_back(format_rational(v));
    doc["stationary"] = std::move(law);
    write_artifact(ctx(), "stationary_n" + std::to_string(st_n) + "_p" + tag(st_p) + ".json",
                   doc);
  });

  // simulate
  auto* cmd_sim = app.add_subcommand("simulate",
                                     "sample settled boundary matchings on the half cylinder");
  int sm_L = 2;
  std::string sm_schedule = "constant:1/2";
  long sm_samples = 10000, sm_max_rows = kDefaultMaxRows;
  std::uint64_t sm_seed = 1;
  cmd_sim->add_option("--L", sm_L, "row width (even)")->required()->check(CLI::Range(2, 32));
  cmd_sim->add_option("--schedule", sm_schedule,
                      "constant:P | cyclic:P1,P2,... | file:PATH")
      ->capture_default_str();
  cmd_sim->add_option("--samples", sm_samples, "number of sampled matchings")
      ->check(CLI::Range(1L, 100000000L))
      ->capture_default_str();
  cmd_sim->add_option("--seed", sm_seed, "root seed")->capture_default_str();
  cmd_sim->add_option("--max-rows", sm_max_rows, "per-sample row budget before diagnosing")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_sim->callback([&] {
    auto schedule = BiasSchedule::parse(sm_schedule);
    auto rep = run_simulation(sm_L, schedule, sm_samples, sm_seed, ctx().threads, sm_max_rows);
    std::cout << "schedule " << schedule.describe() << ", " << rep.samples << " samples, mean "
              << rep.run.mean_rows << " rows (max " << rep.run.max_rows_seen << ")\n";
    if (rep.order.size() <= 14)
      print_law(rep.order, rep.run.counts, rep.samples);
    if (rep.run.chi_square)
      std::cout << "chi-square vs stationary law: statistic " << rep.run.chi_square->statistic
                << ", p-value " << rep.run.chi_square->p_value << " (dof "
                << rep.run.chi_square->dof << ")\n";
    auto doc = make_doc("simulate", ordered_json{{"L", sm_L},
                                                 {"schedule", schedule.describe()},
                                                 {"samples", sm_samples},
                                                 {"seed", sm_seed},
                                                 {"max_rows", sm_max_rows}});
    doc["report"] = rep.to_json();
    write_artifact(ctx(),
                   "simulate_L" + std::to_string(sm_L) + "_" + tag(schedule.describe()) +
                       "_seed" + std::to_string(sm_seed) + ".json",
                   doc);
  });

  // invariance
  auto* cmd_invar = app.add_subcommand(
      "invariance", "compare empirical boundary laws across divergent schedules");
  int nv_L = 2;
  std::string nv_file;
  std::vector<std::string> nv_specs;
  long nv_samples = 10000, nv_max_rows = kDefaultMaxRows;
  std::uint64_t nv_seed = 1;
  double nv_tv_limit = -1.0;
  cmd_invar->add_option("--L", nv_L, "row width (even)")->required()->check(CLI::Range(2, 32));
  cmd_invar->add_option("--schedules", nv_file,
                        "JSON file: array of schedule objects or spec strings");
  cmd_invar->add_option("--schedule", nv_specs, "inline schedule spec (repeatable)");
  cmd_invar->add_option("--samples", nv_samples, "samples per schedule")
      ->check(CLI::Range(1L, 100000000L))
      ->capture_default_str();
  cmd_invar->add_option("--seed", nv_seed, "root seed")->capture_default_str();
  cmd_invar->add_option("--max-rows", nv_max_rows, "per-sample row budget before diagnosing")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_invar->add_option("--tv-limit", nv_tv_limit,
                        "fail (exit 1) if any pairwise total variation exceeds this");
  cmd_invar->callback([&] {
    auto schedules = load_schedules(nv_file, nv_specs);
    if (schedules.size() < 2)
      throw std::invalid_argument("need at least two schedules to compare");
    auto rep =
        run_invariance_experiment(nv_L, schedules, nv_samples, nv_seed, ctx().threads,
                                  nv_max_rows);
    for (const auto& run : rep.runs) {
      std::cout << run.label << ": " << run.schedule.describe() << ", mean " << run.mean_rows
                << " rows";
      if (run.chi_square) std::cout << ", chi-square p-value " << run.chi_square->p_value;
      std::cout << '\n';
    }
    std::cout << "max pairwise total variation: " << rep.max_tv << '\n';
    auto specs = ordered_json::array();
    for (const auto& s : schedules) specs.push_back(s.describe());
    auto doc = make_doc("invariance", ordered_json{{"L", nv_L},
                                                   {"schedules", specs},
                                                   {"samples", nv_samples},
                                                   {"seed", nv_seed},
                                                   {"max_rows", nv_max_rows}});
    doc["report"] = rep.to_json();
    write_artifact(ctx(), "invariance_L" + std::to_string(nv_L) + ".json", doc);
    if (nv_tv_limit >= 0 && rep.max_tv > nv_tv_limit) {
      std::cout << "FAILED: max TV " << rep.max_tv << " exceeds limit " << nv_tv_limit << '\n';
      rc = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nontermination_error& e) {
    std::cerr << "error: " << e.what() << '\n'
              << "hint: the divergence diagnostic rejects such schedules up front; raise"
                 " --max-rows only if the schedule can actually settle\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

}  // namespace looplab::cli
