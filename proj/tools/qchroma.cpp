#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qchroma/foata.hpp"
#include "qchroma/forest.hpp"
#include "qchroma/graph.hpp"
#include "qchroma/io.hpp"
#include "qchroma/qsym.hpp"
#include "qchroma/series.hpp"
#include "qchroma/verify.hpp"

namespace {

using namespace qchroma;

struct NRange {
  int lo = 0, hi = 0;
};

// "3", or "3..6".
NRange parse_range(const std::string& text) {
  NRange r;
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, pos));
    r.hi = std::stoi(text.substr(pos + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("bad --n range: " + text);
  return r;
}

std::string mask_set_string(std::uint64_t mask) {
  std::string out = "{";
  for (int s = 1; mask >> (s - 1); ++s)
    if (mask >> (s - 1) & 1) out += (out.size() > 1 ? "," : "") + std::to_string(s);
  return out + "}";
}

Basis parse_basis(const std::string& name) {
  if (name == "L") return Basis::L;
  if (name == "M") return Basis::M;
  if (name == "Psi") return Basis::Psi;
  throw std::invalid_argument("unknown basis: " + name);
}

std::optional<int> opt_n(const CLI::App* sc, int value) {
  if (sc->count("--n")) return value;
  return std::nullopt;
}

int run_enumerate(const std::string& kind, std::optional<int> n,
                  const std::string& graph_text, bool count) {
  if (kind == "forests") {
    if (graph_text.empty())
      throw std::invalid_argument("enumerate --kind forests needs --graph");
    const SimpleGraph gs = parse_simple_graph(graph_text, n);
    if (count) {
      std::cout << isf_count(gs) << "\n";
    } else {
      for (const IncreasingForest& f : enumerate_isf(gs))
        std::cout << to_string(f) << "\n";
    }
    return 0;
  }
  if (!n) throw std::invalid_argument("enumerate --kind " + kind + " needs --n");
  if (kind == "compositions") {
    const auto comps = enumerate_compositions(*n);
    if (count) {
      std::cout << comps.size() << "\n";
    } else {
      for (const Composition& a : comps) std::cout << to_string(a) << "\n";
    }
    return 0;
  }
  const auto graphs = kind == "dyck" ? enumerate_dyck(*n) : enumerate_interval(*n);
  if (count) {
    std::cout << graphs.size() << "\n";
  } else {
    for (const IntervalGraph& g : graphs) std::cout << g.key() << "\n";
  }
  return 0;
}

int run_series(const std::string& graph_text, std::optional<int> n,
               const std::string& kind, const std::string& route,
               const std::string& forest_text, const std::string& basis_name,
               const std::string& format) {
  const bool monomial_route = route == "monomial";
  QSymElem e(1, Basis::M);
  if (kind == "llt") {
    const SimpleGraph gs = parse_simple_graph(graph_text, n);
    e = monomial_route ? llt_monomial(gs) : llt(gs);
  } else {
    const IntervalGraph g = parse_interval_graph(graph_text, n);
    if (kind == "chrom") {
      e = monomial_route ? chromatic_monomial(g) : chromatic(g);
    } else {
      if (forest_text.empty())
        throw std::invalid_argument("series --kind forest needs --forest");
      const IncreasingForest f = parse_forest(forest_text);
      if (!is_spanning_for(g.simple(), f))
        throw std::invalid_argument(
            "the forest is not an increasing spanning forest of the graph");
      e = monomial_route ? forest_qsym_monomial(g, f) : forest_qsym(g, f);
    }
  }
  e = to_basis(e, parse_basis(basis_name));
  if (format == "json")
    std::cout << qsym_json(e) << "\n";
  else
    std::cout << qsym_text(e) << "\n";
  return 0;
}

int run_realize(const std::string& graph_text, std::optional<int> n) {
  const IntervalGraph g = parse_interval_graph(graph_text, n);
  std::cout << realization_text(g);
  return 0;
}

int run_foata(const std::string& graph_text, std::optional<int> n,
              const std::string& perm_text, bool inverse) {
  const IntervalGraph g = parse_interval_graph(graph_text, n);
  const Word w = parse_word(perm_text);
  if (!is_permutation(w) || static_cast<int>(w.size()) != g.n())
    throw std::invalid_argument("--perm must be a permutation of [n]");
  const Word image = inverse ? phi_foata_inv(g, w) : phi_foata(g, w);
  const Word& sigma = inverse ? image : w;
  const Word& tau = inverse ? w : image;
  std::cout << format_word(image) << "\n";
  std::cout << "inv(tau) = " << word_inversions(tau) << "\n";
  std::cout << "tilde_inv(sigma) = " << tilde_inv(g.simple(), sigma) << "\n";
  std::cout << "tilde_maj(sigma) = " << maj_comp(g.simple(), sigma) << "\n";
  return 0;
}

int run_stats(const std::string& graph_text, std::optional<int> n,
              const std::string& perm_text) {
  const SimpleGraph gs = parse_simple_graph(graph_text, n);
  const Word sigma = parse_word(perm_text);
  if (static_cast<int>(sigma.size()) != gs.n())
    throw std::invalid_argument("--perm length must match the vertex count");
  std::cout << "word = " << format_word(sigma) << "\n";
  std::cout << "inv = " << word_inversions(sigma) << "\n";
  std::cout << "inv_G = " << inv(gs, sigma) << "\n";
  std::cout << "coinv_G = " << coinv(gs, sigma) << "\n";
  if (is_permutation(sigma)) {
    std::cout << "inverse = " << format_word(inverse_perm(sigma)) << "\n";
    std::cout << "Des = " << mask_set_string(des_mask(sigma)) << "\n";
    std::cout << "Des_G = " << mask_set_string(des_g_mask(gs, sigma)) << "\n";
    std::cout << "tilde_Des_G = " << mask_set_string(tilde_des_mask(gs, sigma))
              << "\n";
    std::cout << "tilde_inv = " << tilde_inv(gs, sigma) << "\n";
    std::cout << "tilde_maj = " << maj_comp(gs, sigma) << "\n";
    std::cout << "alpha_G = " << to_string(alpha_g(gs, sigma)) << "\n";
  }
  return 0;
}

int run_verify(const std::string& claim, const std::string& n_text, int jobs,
               int sample, std::uint64_t seed, const std::string& format,
               bool list) {
  if (list) {
    for (const ClaimInfo& c : claim_registry())
      std::cout << c.id << " (" << (c.fatal ? "theorem" : "conjecture") << ", n="
                << c.default_lo << ".." << c.default_hi << "): " << c.description
                << "\n";
    return 0;
  }
  SweepOptions opt;
  if (!n_text.empty()) {
    const NRange r = parse_range(n_text);
    opt.n_lo = r.lo;
    opt.n_hi = r.hi;
  }
  opt.jobs = jobs;
  opt.sample = sample;
  opt.seed = seed;
  std::vector<std::string> ids;
  if (claim == "all") {
    for (const ClaimInfo& c : claim_registry()) ids.push_back(c.id);
  } else {
    ids.push_back(claim);
  }
  bool fatal_failure = false;
  nlohmann::json out = nlohmann::json::array();
  for (const std::string& id : ids) {
    const SweepSummary s = sweep(id, opt);
    if (s.fatal && s.failures > 0) fatal_failure = true;
    if (format == "json") {
      nlohmann::json j;
      j["claim"] = s.claim;
      j["fatal"] = s.fatal;
      j["checks"] = s.checks;
      j["failures"] = s.failures;
      j["millis"] = s.millis;
      j["failed"] = nlohmann::json::array();
      for (const Verdict& v : s.failed)
        j["failed"].push_back({{"claim", v.claim},
                               {"graph", v.graph},
                               {"params", v.params},
                               {"pass", v.pass},
                               {"witness", v.witness}});
      out.push_back(std::move(j));
    } else {
      std::cout << s.claim << ": " << s.checks << " checks, " << s.failures
                << " failures (" << (s.fatal ? "theorem" : "conjecture") << ", "
                << s.millis << " ms)\n";
      for (const Verdict& v : s.failed)
        std::cout << "  FAIL graph=" << v.graph
                  << (v.params.empty() ? "" : " params=" + v.params) << ": "
                  << v.witness << "\n";
    }
  }
  if (format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << (fatal_failure ? "overall: FAIL" : "overall: PASS") << "\n";
  return fatal_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic and LLT quasisymmetric series on interval graphs"};
  app.require_subcommand(1);
  int rc = 0;

  std::string graph_text, kind, route = "fundamental", forest_text;
  std::string basis_name = "L", format = "text", perm_text;
  std::string claim = "all", n_range_text;
  int n_value = 0, jobs = 1, sample = 0;
  std::uint64_t seed = 12345;
  bool count = false, inverse = false, list = false;

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list interval graphs, Dyck graphs, compositions or forests");
  enumerate->add_option("--kind", kind, "interval|dyck|compositions|forests")
      ->required()
      ->check(CLI::IsMember({"interval", "dyck", "compositions", "forests"}));
  enumerate->add_option("--n", n_value, "size parameter");
  enumerate->add_option("--graph", graph_text, "graph literal (forests)");
  enumerate->add_flag("--count", count, "print the count only");
  enumerate->callback([&]() {
    rc = run_enumerate(kind, opt_n(enumerate, n_value), graph_text, count);
  });

  CLI::App* series = app.add_subcommand(
      "series", "chromatic, llt or forest quasisymmetric series");
  series->add_option("--graph", graph_text, "graph literal m=... or e=...")
      ->required();
  series->add_option("--n", n_value, "vertex count for e= literals");
  series->add_option("--kind", kind, "chrom|llt|forest")
      ->default_val("chrom")
      ->check(CLI::IsMember({"chrom", "llt", "forest"}));
  series->add_option("--route", route, "fundamental|monomial construction route")
      ->check(CLI::IsMember({"fundamental", "monomial"}));
  series->add_option("--forest", forest_text, "forest literal for --kind forest");
  series->add_option("--basis", basis_name, "L|M|Psi output basis")
      ->check(CLI::IsMember({"L", "M", "Psi"}));
  series->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  series->callback([&]() {
    rc = run_series(graph_text, opt_n(series, n_value), kind, route, forest_text,
                    basis_name, format);
  });

  CLI::App* realize =
      app.add_subcommand("realize", "interval realization of the graph");
  realize->add_option("--graph", graph_text, "graph literal")->required();
  realize->add_option("--n", n_value, "vertex count for e= literals");
  realize->callback([&]() { rc = run_realize(graph_text, opt_n(realize, n_value)); });

  CLI::App* foata = app.add_subcommand(
      "foata", "modified Foata bijection with its statistic certificate");
  foata->add_option("--graph", graph_text, "graph literal")->required();
  foata->add_option("--n", n_value, "vertex count for e= literals");
  foata->add_option("--perm", perm_text, "permutation, digits or comma form")
      ->required();
  foata->add_flag("--inverse", inverse, "apply the inverse map");
  foata->callback([&]() {
    rc = run_foata(graph_text, opt_n(foata, n_value), perm_text, inverse);
  });

  CLI::App* stats =
      app.add_subcommand("stats", "statistics of a word on a graph");
  stats->add_option("--graph", graph_text, "graph literal")->required();
  stats->add_option("--n", n_value, "vertex count for e= literals");
  stats->add_option("--perm", perm_text, "word, digits or comma form")->required();
  stats->callback([&]() {
    rc = run_stats(graph_text, opt_n(stats, n_value), perm_text);
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "sweep theorem and conjecture checkers over graph families");
  verify->add_option("--claim", claim, "claim id or 'all' (see --list)");
  verify->add_option("--n", n_range_text, "range LO..HI, or a single N");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--sample", sample, "random graphs per n instead of all")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--list", list, "list registered claims and exit");
  verify->callback([&]() {
    rc = run_verify(claim, n_range_text, jobs, sample, seed, format, list);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qchroma::NotIntervalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
