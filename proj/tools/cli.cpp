#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "superchar/acceptance.hpp"
#include "superchar/ds.hpp"
#include "superchar/enumerate.hpp"
#include "superchar/json_io.hpp"

namespace superchar::cli {

namespace {

Algebra parse_algebra(const std::string& spec) {
  auto colon = spec.find(':');
  auto comma = spec.find(',', colon);
  if (colon == std::string::npos || comma == std::string::npos)
    throw ParseError("algebra spec must look like gl:2,2 | ospE:2,2 | ospO:2,2");
  std::string kind = spec.substr(0, colon);
  int m, n;
  try {
    m = std::stoi(spec.substr(colon + 1, comma - colon - 1));
    n = std::stoi(spec.substr(comma + 1));
  } catch (const std::logic_error&) {
    throw ParseError("bad ranks in algebra spec '" + spec + "'");
  }
  if (kind == "gl") return Algebra::make(Kind::GL, m, n);
  if (kind == "ospE") return Algebra::make(Kind::OspEven, m, n);
  if (kind == "ospO") return Algebra::make(Kind::OspOdd, m, n);
  throw ParseError("unknown algebra kind '" + kind + "'");
}

Weight parse_weight_spec(const Algebra& g, const std::string& spec) {
  auto split = [](const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) out.push_back(Rat::parse(tok));
    }
    return out;
  };
  auto slash = spec.find('/');
  if (slash == std::string::npos && !g.is_gl()) {
    // ascending principal-block tuple, the notation of the sdim tables
    std::vector<Rat> tuple = split(spec);
    if (static_cast<int>(tuple.size()) != g.m() || g.m() != g.n())
      throw ParseError("tuple '" + spec + "' does not match " + g.key());
    Weight w = Weight::zero(g.m(), g.n());
    for (int r = 0; r < g.m(); ++r) w.eps[r] = tuple[g.m() - 1 - r];
    for (int r = 0; r < g.n(); ++r) w.delta[r] = tuple[g.n() - 1 - r];
    return w;
  }
  std::string se = slash == std::string::npos ? spec : spec.substr(0, slash);
  std::string sd = slash == std::string::npos ? "" : spec.substr(slash + 1);
  Weight w(split(se), split(sd));
  if (w.m() != g.m() || w.n() != g.n())
    throw ParseError("weight '" + spec + "' does not match " + g.key());
  return w;
}

Weight resolve_weight(const Algebra& g, const std::string& weight_spec,
                      const std::string& diagram_spec) {
  // tuple and coordinate forms share parse_weight_spec
  if (!diagram_spec.empty()) return module_weight_of(g, parse_diagram(g, diagram_spec));
  if (weight_spec.empty()) throw ParseError("need --weight or --diagram");
  return parse_weight_spec(g, weight_spec);
}

std::string weight_plain(const Weight& w) {
  std::string s;
  for (int i = 0; i < w.m(); ++i) s += (i ? "," : "") + w.eps[i].str();
  s += "/";
  for (int j = 0; j < w.n(); ++j) s += (j ? "," : "") + w.delta[j].str();
  return s;
}

// content-addressed cache for graph outputs
std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("SUPERCHAR_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "superchar";
  return std::filesystem::temp_directory_path() / "superchar-cache";
}

uint64_t fnv(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Out {
  std::ostringstream out, err;
};

int cmd_diagram(Out& o, const Algebra& g, const Weight& lam, const std::string& fmt) {
  WeightDiagram f = diag(g, lam);
  if (fmt == "json") {
    o.out << diagram_json(f) << "\n";
    return 0;
  }
  o.out << render(f) << "\n";
  Invariants inv = invariants(g, lam);
  o.out << "atypicality " << inv.atypicality << ", tail " << inv.tail << ", ||.|| "
        << inv.norm << ", ||.||_gr " << inv.norm_gr
        << (inv.kostant ? ", Kostant" : "") << "\n";
  if (g.is_gl()) {
    o.out << "arcs:";
    for (const auto& a : arc_diagram(g, lam))
      o.out << " (" << a.from << "," << a.to << ")";
    o.out << "\n";
    DaggerData d = dagger(g, lam);
    o.out << "straightened: " << render(diagram_of_shifted(g, d.dagger)) << "\n";
  }
  return 0;
}

int cmd_char(Out& o, const Algebra& g, const Weight& lam, const std::string& basis,
             const std::string& fmt) {
  G0Char c = irr_char(g, lam);
  Dims d = dims(c);
  if (fmt == "json") {
    o.out << g0char_json(c) << "\n";
    return 0;
  }
  if (basis == "euler" || basis == "both") {
    o.out << "Euler basis of ch L(" << weight_plain(lam) << "):\n";
    for (const auto& t : euler_decomposition(g, lam))
      o.out << "  " << (t.coeff > 0 ? "+" : "") << t.coeff << " E["
            << weight_plain(t.mu) << "]\n";
  }
  if (basis == "g0" || basis == "both") {
    o.out << "g0 decomposition (even, odd):\n";
    for (const auto& [k, p] : c.terms())
      o.out << "  L0[" << weight_plain(k) << "] (" << p.first << "," << p.second
            << ")\n";
  }
  o.out << "dim " << d.dim << ", sdim " << d.sdim << "\n";
  return 0;
}

int cmd_ds(Out& o, const Algebra& g, const Weight& lam, int rank, bool simple,
           const std::string& fmt) {
  if (simple) {
    SimpleImage img = ds_on_simple(g, lam);
    if (fmt == "json") {
      o.out << "{\"schema\":\"v1\",\"target\":{\"algebra\":\"" << img.core.target.key()
            << "\"},\"core\":" << weight_json(img.core.nu)
            << ",\"sigma_pair\":" << (img.core.sigma_pair ? "true" : "false")
            << ",\"mult\":" << img.mult << ",\"parity_shift\":" << img.parity_shift
            << ",\"sdim\":" << sdim_simple(g, lam) << "}\n";
    } else {
      o.out << "DS image: " << img.mult << " copies of L[" << weight_plain(img.core.nu)
            << "]" << (img.core.sigma_pair ? " (+ sigma twin)" : "") << " over "
            << img.core.target.key() << ", parity shift " << img.parity_shift << "\n";
      o.out << "sdim " << sdim_simple(g, lam) << "\n";
    }
    return 0;
  }
  DsImage img = ds_on_euler(g, lam, rank);
  if (fmt == "json") {
    o.out << ds_image_json(g, img) << "\n";
    return 0;
  }
  o.out << "ds_" << rank << "(E^-[" << weight_plain(lam) << "]) over "
        << img.target.key() << ":\n";
  if (img.terms.empty()) o.out << "  0\n";
  for (const auto& t : img.terms)
    o.out << "  " << (t.coeff > 0 ? "+" : "") << t.coeff
          << (t.kind == DsImage::TermKind::Euler ? " E^-[" : " sch K[")
          << weight_plain(t.weight) << "]\n";
  return 0;
}

int cmd_graph(Out& o, const Algebra& g, const std::vector<std::string>& seeds_text,
              long long max_gr, const std::string& fmt, bool no_cache) {
  if (seeds_text.empty()) throw ParseError("graph needs at least one --seed");
  std::vector<Weight> seeds;
  std::string key = g.key() + "#" + std::to_string(max_gr) + "#" + fmt;
  for (const auto& s : seeds_text) {
    seeds.push_back(parse_weight_spec(g, s));
    key += "#" + s;
  }
  key += "#" + core_fingerprint(g, seeds[0] + g.rho()).str();

  std::filesystem::path file;
  if (!no_cache) {
    file = cache_dir() / (std::to_string(fnv(key)) + "." + fmt);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    if (!ec && std::filesystem::exists(file)) {
      std::ifstream in(file);
      o.out << in.rdbuf();
      return 0;
    }
  }
  MarkedGraph graph = build_block_graph(g, seeds, max_gr);
  std::string text = fmt == "dot" ? graph_dot(graph) : graph_json(graph) + "\n";
  o.out << text;
  if (!no_cache && !file.empty()) {
    std::ofstream out(file);
    out << text;
  }
  return 0;
}

int cmd_denom(Out& o, const Algebra& g, const std::string& fmt) {
  DenomReport r = denominator_check(g);
  if (fmt == "json") {
    o.out << "{\"schema\":\"v1\",\"algebra\":\"" << g.key() << "\",\"j\":" << r.j
          << ",\"direct\":" << (r.direct_ok ? "true" : "false")
          << ",\"reversed\":" << (r.reversed_ok ? "true" : "false") << "}\n";
  } else {
    o.out << g.key() << ": j = " << r.j << ", direct "
          << (r.direct_ok ? "ok" : "FAILED") << ", reversed "
          << (r.reversed_ok ? "ok" : "FAILED") << "\n";
  }
  return (r.direct_ok && r.reversed_ok) ? 0 : 1;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"exact characters, block graphs and tail-cutting images for gl(m|n) and osp(M|2n)"};
  app.name("superchar");
  app.require_subcommand(1);

  std::string algebra_spec, weight_spec, diagram_spec, basis = "both", fmt = "text";
  std::vector<std::string> seeds;
  long long max_gr = 0;
  int rank = 1;
  bool simple = false, no_cache = false;

  auto add_common = [&](CLI::App* sub, bool with_weight) {
    sub->add_option("algebra", algebra_spec, "algebra spec: gl:m,n | ospE:m,n | ospO:m,n")
        ->required();
    if (with_weight) {
      sub->add_option("--weight", weight_spec, "eps/delta coordinates, e.g. 1,0/0,-1");
      sub->add_option("--diagram", diagram_spec, "diagram string, e.g. 0xxx or (+)x^2");
    }
    sub->add_option("--format", fmt, "text | json | dot");
  };

  auto* diagram = app.add_subcommand("diagram", "render the weight diagram");
  add_common(diagram, true);
  auto* character = app.add_subcommand("char", "Euler and g0 decompositions of ch L");
  add_common(character, true);
  character->add_option("--basis", basis, "euler | g0 | both");
  auto* ds = app.add_subcommand("ds", "tail-cutting image of the Euler supercharacter");
  add_common(ds, true);
  ds->add_option("--rank", rank, "rank of the odd element");
  ds->add_flag("--simple", simple, "image of the simple module at maximal rank");
  auto* graph = app.add_subcommand("graph", "block graph truncation (DOT or JSON)");
  add_common(graph, false);
  graph->add_option("--seed", seeds, "seed weight (repeatable)");
  graph->add_option("--max-norm-gr", max_gr, "forward truncation bound");
  graph->add_flag("--no-cache", no_cache, "bypass the on-disk cache");
  auto* denom = app.add_subcommand("denom-check", "denominator identity self-check");
  add_common(denom, false);
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  (void)selftest;

  RunResult result;
  Out o;
  try {
    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      std::ostringstream msg;
      int code = app.exit(e, msg, msg);
      result.exit_code = code == 0 ? 0 : 2;
      result.out = msg.str();
      return result;
    }
    if (app.got_subcommand("selftest")) {
      auto results = run_acceptance(&o.out);
      result.exit_code = acceptance_ok(results) ? 0 : 1;
    } else {
      Algebra g = parse_algebra(algebra_spec);
      if (app.got_subcommand("diagram")) {
        result.exit_code = cmd_diagram(o, g, resolve_weight(g, weight_spec, diagram_spec), fmt);
      } else if (app.got_subcommand("char")) {
        result.exit_code = cmd_char(o, g, resolve_weight(g, weight_spec, diagram_spec), basis, fmt);
      } else if (app.got_subcommand("ds")) {
        result.exit_code = cmd_ds(o, g, resolve_weight(g, weight_spec, diagram_spec), rank, simple, fmt);
      } else if (app.got_subcommand("graph")) {
        result.exit_code = cmd_graph(o, g, seeds, max_gr, fmt, no_cache);
      } else if (app.got_subcommand("denom-check")) {
        result.exit_code = cmd_denom(o, g, fmt);
      }
    }
  } catch (const ParseError& e) {
    o.err << "parse error: " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const ProviderUnavailable& e) {
    o.err << "unavailable: " << e.what() << "\n";
    result.exit_code = 4;
  } catch (const MathError& e) {
    o.err << "precondition: " << e.what() << "\n";
    result.exit_code = 3;
  }
  result.out = o.out.str();
  result.err = o.err.str();
  return result;
}

}  // namespace superchar::cli
