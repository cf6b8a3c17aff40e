#include <CLI11.hpp>

#include <dyckgrass/dyck.hpp>
#include <dyckgrass/hecke.hpp>
#include <dyckgrass/homology.hpp>
#include <dyckgrass/io.hpp>
#include <dyckgrass/render.hpp>
#include <dyckgrass/verify.hpp>
#include <dyckgrass/zelevinsky.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace dyckgrass;

std::string fixture_dir_or_default(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("DYCKGRASS_FIXTURE_DIR")) return env;
  return DYCKGRASS_FIXTURE_DIR_DEFAULT;
}

// Runs every task, fanning out over a fixed number of workers, and returns the
// results in submission order.
std::vector<SweepReport> run_queue(const std::vector<std::function<SweepReport()>>& tasks,
                                   int jobs) {
  std::vector<SweepReport> results(tasks.size());
  if (jobs <= 1) {
    for (size_t k = 0; k < tasks.size(); ++k) results[k] = tasks[k]();
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      results[k] = tasks[k]();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

int print_reports(const std::vector<SweepReport>& reports) {
  bool ok = true;
  for (const SweepReport& r : reports) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << " (checked " << r.checked << ")\n";
    for (const std::string& f : r.failures) std::cout << "     " << f << "\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

std::string poly_cell(const Laurent& f) { return f.str(); }

int cmd_table(int n, int i, const std::string& format, bool inverse) {
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  auto g = inverse_g_table(ctx, h);
  const auto& table = inverse ? g : h;
  if (format == "csv") {
    for (size_t a = 0; a < ctx.size(); ++a)
      for (size_t b = 0; b < ctx.size(); ++b)
        std::cout << ctx.paths[a].steps << "," << ctx.paths[b].steps << ","
                  << poly_cell(table[a][b]) << "\n";
    return 0;
  }
  Json j;
  j["n"] = n;
  j["i"] = i;
  j["table"] = inverse ? "g" : "h";
  j["entries"] = Json::array();
  for (size_t a = 0; a < ctx.size(); ++a)
    for (size_t b = 0; b < ctx.size(); ++b) {
      Json e;
      e["lambda"] = ctx.paths[a].steps;
      e["mu"] = ctx.paths[b].steps;
      e["poly"] = laurent_to_json(table[a][b]);
      j["entries"].push_back(e);
    }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_partitions(int n, int i, const std::string& lower, const std::string& upper,
                   const std::string& format) {
  Path lo(n, i, lower), hi(n, i, upper);
  auto parts = enumerate_partitions(lo, hi);
  if (format == "json") {
    Json j;
    j["lower"] = lo.steps;
    j["upper"] = hi.steps;
    j["count"] = parts.size();
    j["partitions"] = Json::array();
    for (const DyckPartition& p : parts) {
      Json e;
      e["strips"] = partition_to_json(p);
      e["type1"] = is_type1(p);
      e["type2"] = is_type2(p);
      j["partitions"].push_back(e);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "count " << parts.size() << "\n";
  for (size_t k = 0; k < parts.size(); ++k) {
    std::cout << "\npartition " << k << ":";
    if (is_type1(parts[k])) std::cout << " type1";
    if (is_type2(parts[k])) std::cout << " type2";
    std::cout << "\n";
    for (const std::string& line : render_partition(parts[k])) std::cout << line << "\n";
  }
  return 0;
}

int cmd_render(int n, int i, const std::string& lower, const std::string& upper) {
  Path lo = lower.empty() ? identity_path(n, i) : Path(n, i, lower);
  Path hi(n, i, upper);
  for (const std::string& line : render_region(lo, hi)) std::cout << line << "\n";
  return 0;
}

int cmd_neat(int n, int i, const std::string& lambda, int cap, const std::string& format) {
  Path lam(n, i, lambda);
  auto orders = neat_orders(lam, cap);
  if (format == "json") {
    Json j = Json::array();
    for (const auto& o : orders) {
      TranslationPair tp = translation_pair(lam, o);
      Json e;
      e["order"] = o;
      e["pair"] = pair_to_json(tp);
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& o : orders) {
    TranslationPair tp = translation_pair(lam, o);
    std::cout << "order";
    for (int p : o) std::cout << " " << p;
    std::cout << "\n" << render_pair(tp) << "\n";
  }
  return 0;
}

int cmd_rouquier(int n, int i, const std::string& mu) {
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  auto g = inverse_g_table(ctx, h);
  RouquierTerms rt = rouquier_terms(ctx, g, Path(n, i, mu));
  for (auto it = rt.terms.rbegin(); it != rt.terms.rend(); ++it) {
    std::cout << it->first << "," << it->first << ",";
    for (size_t k = 0; k < it->second.size(); ++k)
      std::cout << (k ? " " : "") << it->second[k].steps;
    std::cout << "\n";
  }
  return 0;
}

int cmd_homdim(int n, int i, const std::string& lambda, const std::string& mu) {
  Grassmannian ctx(n, i);
  Path lam(n, i, lambda), m(n, i, mu);
  std::cout << "rank: " << hom_rank_notless(lam, m).str() << "\n";
  if (lam != m) {
    std::cout << "hom1: " << hom1_dim(lam, m) << "\n";
    if (bruhat_leq(lam, m)) {
      auto h = parabolic_h_table(ctx);
      std::cout << "hom2: " << hom2_dim(ctx, h, lam, m) << "\n";
      std::cout << "cellular: " << cellular_rank(ctx, lam, m).str() << "\n";
    }
  }
  return 0;
}

int cmd_char_check(int n, int i, int cap, int jobs) {
  std::vector<std::function<SweepReport()>> tasks;
  tasks.push_back([=] { return verify_small_resolutions(n, i, cap); });
  return print_reports(run_queue(tasks, jobs));
}

int cmd_pieri_check(int n, int i, int trials, unsigned seed, int jobs) {
  std::vector<std::function<SweepReport()>> tasks;
  tasks.push_back([=] { return verify_pieri(n, i); });
  tasks.push_back([=] { return verify_commutativity(n, i, trials, seed); });
  return print_reports(run_queue(tasks, jobs));
}

int cmd_demazure_check(int n, int maxlen, int trials, unsigned seed, int jobs) {
  std::vector<std::function<SweepReport()>> tasks;
  tasks.push_back([=] { return verify_braid(n); });
  tasks.push_back([=] { return verify_demaformula(n, maxlen, trials, seed); });
  tasks.push_back([=] { return verify_positivity(n); });
  return print_reports(run_queue(tasks, jobs));
}

int emit_fixtures(int max_n, const std::string& dir) {
  for (int n = 2; n <= std::min(max_n, 5); ++n)
    for (int i = 1; i < n; ++i) {
      std::string stem = dir + "/partitions_" + std::to_string(n) + "_" + std::to_string(i);
      write_text_file(stem + ".json", partitions_fixture(n, i).dump(2) + "\n");
      std::cout << "wrote " << stem << ".json\n";
      stem = dir + "/kl_" + std::to_string(n) + "_" + std::to_string(i);
      write_text_file(stem + ".json", kl_fixture(n, i).dump(2) + "\n");
      std::cout << "wrote " << stem << ".json\n";
    }
  return 0;
}

int cmd_selftest(int max_n, unsigned seed, int jobs, bool fixtures, const std::string& dir) {
  std::vector<std::function<SweepReport()>> tasks;
  tasks.push_back([] { return verify_worked_examples(); });
  tasks.push_back([] { return verify_large_example_pair(); });
  for (int n = 2; n <= std::min(max_n, 8); ++n)
    for (int i = 1; i < n; ++i) {
      tasks.push_back([=] { return verify_tables_vs_strips(n, i); });
      tasks.push_back([=] { return verify_inverse_tables(n, i); });
      if (n <= 7) tasks.push_back([=] { return verify_euler(n, i); });
      if (n <= 6) {
        tasks.push_back([=] { return verify_hom_dims(n, i); });
        tasks.push_back([=] { return verify_order_suite(n, i); });
        tasks.push_back([=] { return verify_small_resolutions(n, i); });
      }
      tasks.push_back([=] { return verify_two_row(n, i); });
      if (n <= 5) {
        tasks.push_back([=] { return verify_crucial(n, i); });
        tasks.push_back([=] { return verify_pieri(n, i); });
      }
    }
  for (int n = 2; n <= std::min(max_n, 5); ++n) tasks.push_back([=] { return verify_braid(n); });
  {
    int n = std::min(max_n, 5);
    tasks.push_back([=] { return verify_demaformula(n, 4, 100, seed); });
  }
  for (int n = 2; n <= std::min(max_n, 6); ++n)
    tasks.push_back([=] { return verify_positivity(n); });
  if (max_n >= 4) tasks.push_back([=] { return verify_commutativity(4, 2, 50, seed); });
  if (max_n >= 5) tasks.push_back([=] { return verify_commutativity(5, 2, 50, seed); });
  int status = print_reports(run_queue(tasks, jobs));
  if (status == 0 && fixtures) emit_fixtures(max_n, dir);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dyck-strip combinatorics for Grassmannian Schubert varieties"};
  app.require_subcommand(1);

  int n = 0, i = 0, cap = 50, trials = 0, maxlen = 4, max_n = 6, jobs = 1;
  unsigned seed = 0;
  std::string format, lower, upper, lambda, mu, fixture_dir;
  bool fixtures = false;

  auto add_ni = [&](CLI::App* sub) {
    sub->add_option("--n", n, "path length")->required();
    sub->add_option("--i", i, "number of down steps")->required();
  };

  CLI::App* kl = app.add_subcommand("kl", "table of parabolic KL polynomials");
  add_ni(kl);
  kl->add_option("--format", format, "csv or json")->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* invkl = app.add_subcommand("invkl", "table of inverse KL polynomials");
  add_ni(invkl);
  invkl->add_option("--format", format, "csv or json")->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* parts = app.add_subcommand("partitions", "strip partitions of a region");
  add_ni(parts);
  parts->add_option("--lower", lower, "lower path")->required();
  parts->add_option("--upper", upper, "upper path")->required();
  parts->add_option("--format", format, "ascii or json")->default_val("ascii")
      ->check(CLI::IsMember({"ascii", "json"}));

  CLI::App* rend = app.add_subcommand("render", "draw a region with column labels");
  add_ni(rend);
  rend->add_option("--lower", lower, "lower path (default: minimal path)");
  rend->add_option("--upper", upper, "upper path")->required();

  CLI::App* neat = app.add_subcommand("neat", "neat orderings and translation pairs");
  add_ni(neat);
  neat->add_option("--lambda", lambda, "path to resolve")->required();
  neat->add_option("--cap", cap, "max orderings")->default_val(50);
  neat->add_option("--format", format, "text or json")->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cc = app.add_subcommand("char-check", "verify resolution characters");
  add_ni(cc);
  cc->add_option("--cap", cap, "max orderings per path")->default_val(50);
  cc->add_option("--jobs", jobs, "worker threads")->default_val(1);

  CLI::App* rq = app.add_subcommand("rouquier", "term listing of the singular complex");
  add_ni(rq);
  rq->add_option("--mu", mu, "top path")->required();

  CLI::App* hd = app.add_subcommand("homdim", "hom-space graded dimensions");
  add_ni(hd);
  hd->add_option("--lambda", lambda, "first path")->required();
  hd->add_option("--mu", mu, "second path")->required();

  CLI::App* pc = app.add_subcommand("pieri-check", "verify the Pieri action pointwise");
  add_ni(pc);
  pc->add_option("--trials", trials, "random commuting pairs")->default_val(50);
  pc->add_option("--seed", seed, "random seed")->default_val(0);
  pc->add_option("--jobs", jobs, "worker threads")->default_val(1);

  CLI::App* dc = app.add_subcommand("demazure-check", "verify divided-difference identities");
  dc->add_option("--n", n, "symmetric group rank")->required();
  dc->add_option("--maxlen", maxlen, "max length for the product expansion")->default_val(4);
  dc->add_option("--trials", trials, "random instances per element")->default_val(100);
  dc->add_option("--seed", seed, "random seed")->default_val(0);
  dc->add_option("--jobs", jobs, "worker threads")->default_val(1);

  CLI::App* st = app.add_subcommand("selftest", "run the full verification suite");
  st->add_option("--max-n", max_n, "largest path length")->default_val(6);
  st->add_option("--seed", seed, "random seed")->default_val(0);
  st->add_option("--jobs", jobs, "worker threads")->default_val(1);
  st->add_flag("--emit-fixtures", fixtures, "write golden fixture files");
  st->add_option("--fixture-dir", fixture_dir, "fixture directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (kl->parsed()) return cmd_table(n, i, format, false);
    if (invkl->parsed()) return cmd_table(n, i, format, true);
    if (parts->parsed()) return cmd_partitions(n, i, lower, upper, format);
    if (rend->parsed()) return cmd_render(n, i, lower, upper);
    if (neat->parsed()) return cmd_neat(n, i, lambda, cap, format);
    if (cc->parsed()) return cmd_char_check(n, i, cap, jobs);
    if (rq->parsed()) return cmd_rouquier(n, i, mu);
    if (hd->parsed()) return cmd_homdim(n, i, lambda, mu);
    if (pc->parsed()) return cmd_pieri_check(n, i, trials, seed, jobs);
    if (dc->parsed()) return cmd_demazure_check(n, maxlen, trials, seed, jobs);
    if (st->parsed())
      return cmd_selftest(max_n, seed, jobs, fixtures, fixture_dir_or_default(fixture_dir));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
