#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "uncrossed/bounds.hpp"
#include "uncrossed/construction.hpp"
#include "uncrossed/error.hpp"
#include "uncrossed/io.hpp"
#include "uncrossed/render.hpp"

namespace uncrossed::cli {
namespace {

int to_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidParameter("not an integer: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (path) write_file(*path, text);
  else out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Parts of a complete bipartite graph, if g is one.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  side[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  const int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
  const int b = g.n() - a;
  if (a == 0 || b == 0 || static_cast<std::int64_t>(a) * b != g.m()) return std::nullopt;
  return std::pair{std::min(a, b), std::max(a, b)};
}

}  // namespace

std::vector<std::string> split_list(const std::string& list) { return split(list, ','); }

Graph generate_graph(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw InvalidParameter("empty generator spec");
  const std::string& kind = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw InvalidParameter("generator '" + spec + "' is missing arguments");
    return parts[i];
  };
  if (kind == "complete") return make_complete(to_int(arg(1)));
  if (kind == "bipartite") {
    auto ab = split(arg(1), ',');
    if (ab.size() != 2) throw InvalidParameter("bipartite:A,B expected");
    return make_complete_bipartite(to_int(ab[0]), to_int(ab[1]));
  }
  if (kind == "wheel") return make_wheel(to_int(arg(1)));
  if (kind == "path") return make_path(to_int(arg(1)));
  if (kind == "cycle") return make_cycle(to_int(arg(1)));
  if (kind == "cube") return make_cube();
  if (kind == "gnm") {
    std::uint64_t seed = 0;
    const std::string s = arg(3);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidParameter("bad seed '" + s + "'");
    return make_random_gnm(to_int(arg(1)), to_int(arg(2)), seed);
  }
  throw InvalidParameter("unknown generator '" + kind + "'");
}

Graph load_graph(const std::optional<std::string>& in, const std::optional<std::string>& gen) {
  if (in.has_value() == gen.has_value()) {
    throw InvalidParameter("give exactly one of --in FILE or --gen SPEC");
  }
  if (in) return parse_edge_list(read_file(*in));
  return generate_graph(*gen);
}

int cmd_bounds(const Graph& g, const BoundsOptions& opt, std::ostream& out, std::ostream& err) {
  if (g.n() < 3 || !is_connected(g)) {
    err << "bounds: input must be a connected graph with n >= 3\n";
    return kGateFailure;
  }
  const std::int64_t n = g.n();
  const std::int64_t m = g.m();
  std::vector<BoundReport> rows;
  rows.push_back(report_unc_lower_old(n, m));
  rows.push_back(report_unc_lower_new(n, m));
  rows.push_back(report_h_upper(n, m));
  rows.push_back(best_combined_bound(n, m));
  if (m > 0) rows.push_back(alpha_bound_report(n, m, std::sqrt(static_cast<double>(3 * n - 6) / m)));

  const bool triangle_free = is_triangle_free(g);
  if (triangle_free || opt.triangle_free_check) {
    rows.push_back(report_unc_lower_triangle_free(g));
    rows.push_back(report_h_upper_triangle_free(g));
  }
  if (m == n * (n - 1) / 2) {
    rows.push_back(report_exact_h_complete(n));
    rows.push_back(report_exact_unc_complete(n));
  }
  if (auto parts = complete_bipartite_parts(g)) {
    rows.push_back(report_exact_h_complete_bipartite(parts->first, parts->second));
  }
  for (auto& r : rows) {
    r.params.emplace("n", static_cast<double>(n));
    r.params.emplace("m", static_cast<double>(m));
  }

  std::string csv = bound_csv_header();
  json arr = json::array();
  for (const auto& r : rows) {
    csv += bound_csv_row(r);
    arr.push_back(to_json(r));
  }
  if (opt.json_path) write_file(*opt.json_path, dump(arr));
  emit(opt.csv_path, csv, out);
  return kOk;
}

int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err) {
  ConstructionRecord rec;
  try {
    rec = build_construction(opt.epsilon, opt.n);
  } catch (const NotApplicable& e) {
    err << "construct: " << e.what() << "\n";
    return kGateFailure;
  }
  TightnessReport rep;
  try {
    rep = check_tightness(rec);
  } catch (const ConstructionIntegrityError& e) {
    err << "construct: integrity failure: " << e.what() << "\n";
    return kIntegrityFailure;
  }
  std::filesystem::create_directories(opt.out_dir);
  const std::filesystem::path dir(opt.out_dir);
  write_file((dir / "record.json").string(), dump(to_json(rec)));
  write_file((dir / "graph.txt").string(), serialize_edge_list(rec.graph));
  if (opt.svg) write_file((dir / "drawing.svg").string(), render_svg(drawing_from_record(rec)));
  out << fmt::format("epsilon={} n={} x={} m={} m_prime={} t={} lower={} upper={}\n",
                     to_string(opt.epsilon), rec.n, rec.x, rec.stats.m, rec.stats.m_prime,
                     rec.stats.t, format_number(rep.lower), format_number(rep.upper));
  return kOk;
}

int cmd_oracle(OracleKind kind, const Graph& g, const SearchLimits& limits,
               const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  if (!is_connected(g)) {
    err << "oracle: input graph must be connected\n";
    return kGateFailure;
  }
  json result{{"n", g.n()}, {"m", g.m()}};
  try {
    if (kind == OracleKind::kH) {
      HResult r = exact_h(g, limits);
      if (!verify_certificate(r.witness)) {
        err << "oracle-h: witness failed re-verification\n";
        return kIntegrityFailure;
      }
      result["kind"] = "h";
      result["value"] = r.h;
      result["witness"] = to_json(r.witness);
    } else {
      UncResult r = exact_unc(g, limits);
      json cover = json::array();
      for (const auto& c : r.cover) {
        if (!verify_certificate(c)) {
          err << "oracle-unc: cover certificate failed re-verification\n";
          return kIntegrityFailure;
        }
        cover.push_back(to_json(c));
      }
      result["kind"] = "unc";
      result["value"] = r.unc;
      result["cover"] = cover;
    }
  } catch (const SearchBudgetError& e) {
    err << "oracle: " << e.what() << "\n";
    return kBudgetExceeded;
  }
  emit(out_path, dump(result), out);
  return kOk;
}

int cmd_verify_tightness(const std::vector<Rational>& epsilons, const std::vector<int>& ns,
                         const std::optional<std::string>& out_path, std::ostream& out,
                         std::ostream& err) {
  std::vector<Rational> eps_sorted = epsilons;
  std::sort(eps_sorted.begin(), eps_sorted.end());
  std::vector<int> ns_sorted = ns;
  std::sort(ns_sorted.begin(), ns_sorted.end());

  std::string csv =
      "epsilon,n,x,m,m_prime,lower,upper,gap,gap_witness,gap_limit,density,density_ceiling,"
      "property1,property2,ok\n";
  bool all_ok = true;
  for (const auto& eps : eps_sorted) {
    for (int n : ns_sorted) {
      ConstructionRecord rec;
      try {
        rec = build_construction(eps, n);
      } catch (const NotApplicable& e) {
        err << "verify-tightness: epsilon=" << to_string(eps) << " n=" << n << ": " << e.what()
            << "\n";
        return kGateFailure;
      }
      std::string failure;
      TightnessReport rep;
      try {
        rep = check_tightness(rec);
      } catch (const ConstructionIntegrityError& e) {
        failure = e.what();
        all_ok = false;
      }
      const bool p1 = rec.stats.m_prime >= 3 * n - 3 - std::sqrt(2.0 * rec.stats.m) - 1e-9;
      const Rational density(rec.stats.m, static_cast<std::int64_t>(n) * n);
      const Rational ceiling =
          eps + Rational(1, n) + Rational(1, 2 * static_cast<std::int64_t>(n) * n);
      const bool p2 = eps <= density && density <= ceiling;
      csv += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", to_string(eps), n,
                         rec.x, rec.stats.m, rec.stats.m_prime, format_number(rep.lower),
                         format_number(rep.upper), format_number(rep.gap),
                         format_number(rep.gap_witness), format_number(rep.gap_limit),
                         to_string(density), to_string(ceiling), p1 ? "true" : "false",
                         p2 ? "true" : "false", failure.empty() ? "true" : "false");
      if (!failure.empty()) {
        err << "verify-tightness: epsilon=" << to_string(eps) << " n=" << n << ": " << failure
            << "\n";
      }
    }
  }
  emit(out_path, csv, out);
  return all_ok ? kOk : kIntegrityFailure;
}

int cmd_compare_bounds(const std::vector<int>& ns, const std::vector<std::string>& epsilons,
                       const std::optional<std::string>& out_path, std::ostream& out,
                       std::ostream& err) {
  std::vector<int> ns_sorted = ns;
  std::sort(ns_sorted.begin(), ns_sorted.end());
  std::string csv =
      "n,epsilon,m,unc_lower_old,unc_lower_new,best_combined,best_k,exact_unc_complete,"
      "ratio_new_vs_asymptotic,ratio_new_vs_exact\n";
  for (int n : ns_sorted) {
    if (n < 3) {
      err << "compare-bounds: n must be >= 3\n";
      return kGateFailure;
    }
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    for (const auto& token : epsilons) {
      std::int64_t m = 0;
      if (token == "K") {
        m = pairs;
      } else if (token == "tree") {
        m = n - 1;
      } else {
        const Rational eps = parse_rational(token);
        const Rational target = eps * n * n;
        m = target.numerator() / target.denominator();
        if (Rational(m) < target) ++m;
      }
      auto cell = [](const BoundReport& r) {
        if (!r.value) return std::string("NA");
        return r.integral ? std::to_string(static_cast<std::int64_t>(*r.value))
                          : format_number(*r.value);
      };
      if (m < n - 1 || m > pairs) {
        csv += fmt::format("{},{},{},NA,NA,NA,NA,NA,NA,NA\n", n, token, m);
        continue;
      }
      const BoundReport old_b = report_unc_lower_old(n, m);
      const BoundReport new_b = report_unc_lower_new(n, m);
      const BoundReport comb = best_combined_bound(n, m);
      const BoundReport exact =
          m == pairs ? report_exact_unc_complete(n) : BoundReport{"exact_unc_complete", {}, true, "not complete", {}};
      const double density = static_cast<double>(m) / (static_cast<double>(n) * n);
      std::string ratio = "NA";
      if (new_b.value) {
        const double asymptotic = density * n / (3.0 - std::sqrt(2.0 * density));
        ratio = format_number(*new_b.value / asymptotic);
      }
      std::string ratio_exact = "NA";
      if (new_b.value && exact.value) ratio_exact = format_number(*new_b.value / *exact.value);
      csv += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", n, token, m, cell(old_b), cell(new_b),
                         cell(comb),
                         comb.value ? std::to_string(static_cast<int>(comb.params.at("k"))) : "NA",
                         cell(exact), ratio, ratio_exact);
    }
  }
  emit(out_path, csv, out);
  return kOk;
}

int cmd_render(const std::string& in_path, const std::string& out_path, std::ostream& err) {
  json j;
  try {
    j = json::parse(read_file(in_path));
  } catch (const json::parse_error& e) {
    err << "render: " << e.what() << "\n";
    return kGateFailure;
  }
  try {
    write_file(out_path, render_json(j));
  } catch (const RenderError& e) {
    err << "render: " << e.what() << "\n";
    return kGateFailure;
  } catch (const MalformedCertificate& e) {
    err << "render: " << e.what() << "\n";
    return kIntegrityFailure;
  }
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds, tight constructions and exact search for uncrossed drawings"};
  app.require_subcommand(1);

  std::optional<std::string> in;
  std::optional<std::string> gen;
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("--in", in, "edge-list file");
    sub->add_option("--gen", gen, "generator spec, e.g. complete:5, bipartite:3,3, gnm:8:14:1");
  };

  BoundsOptions bounds_opt;
  auto* bounds = app.add_subcommand("bounds", "evaluate every applicable bound for a graph");
  add_graph_input(bounds);
  bounds->add_flag("--triangle-free-check", bounds_opt.triangle_free_check,
                   "always report the triangle-free rows, with a reason when they do not apply");
  bounds->add_option("--csv", bounds_opt.csv_path, "CSV output (default stdout)");
  bounds->add_option("--json", bounds_opt.json_path, "JSON output");

  std::string epsilon_text;
  ConstructOptions construct_opt;
  auto* construct = app.add_subcommand("construct", "build the tight construction for (epsilon, n)");
  construct->add_option("--epsilon", epsilon_text, "target density P/Q or decimal")->required();
  construct->add_option("--n", construct_opt.n, "vertex count")->required();
  construct->add_option("--out", construct_opt.out_dir, "output directory")->required();
  construct->add_flag("--svg", construct_opt.svg, "also write drawing.svg");

  int max_n = -1;
  double budget = 1e7;
  std::optional<double> time_budget;
  std::optional<std::string> oracle_out;
  auto add_oracle = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    add_graph_input(sub);
    sub->add_option("--max-n", max_n, "largest n to attempt");
    sub->add_option("--budget", budget, "rotation systems per candidate");
    sub->add_option("--time-budget", time_budget, "seconds");
    sub->add_option("--out", oracle_out, "result JSON (default stdout)");
    return sub;
  };
  auto* oracle_h = add_oracle("oracle-h", "exact maximum uncrossed subgraph number");
  auto* oracle_unc = add_oracle("oracle-unc", "exact uncrossed number");

  std::string eps_list = "0.15,0.2,0.25,0.3,0.35,0.4,0.45";
  std::string ns_list = "20,40,80";
  std::optional<std::string> table_out;
  auto* verify = app.add_subcommand("verify-tightness", "sweep the tight construction");
  verify->add_option("--epsilons", eps_list, "comma-separated densities");
  verify->add_option("--ns", ns_list, "comma-separated vertex counts");
  verify->add_option("--out", table_out, "CSV output (default stdout)");

  std::string cmp_eps = "0.1,0.2,0.3,0.4,K,tree";
  std::string cmp_ns = "100,1000,10000";
  auto* compare = app.add_subcommand("compare-bounds", "old vs new lower bounds on unc");
  compare->add_option("--epsilons", cmp_eps, "densities, K (complete) or tree");
  compare->add_option("--ns", cmp_ns, "comma-separated vertex counts");
  compare->add_option("--out", table_out, "CSV output (default stdout)");

  std::string render_in;
  std::string render_out;
  auto* render = app.add_subcommand("render", "SVG drawing of a record or certificate");
  render->add_option("--in", render_in, "record or certificate JSON")->required();
  render->add_option("--out", render_out, "SVG output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kGateFailure;
  }

  try {
    auto parse_ints = [](const std::string& list) {
      std::vector<int> v;
      for (const auto& s : split_list(list)) v.push_back(to_int(s));
      return v;
    };
    if (bounds->parsed()) return cmd_bounds(load_graph(in, gen), bounds_opt, out, err);
    if (construct->parsed()) {
      construct_opt.epsilon = parse_rational(epsilon_text);
      return cmd_construct(construct_opt, out, err);
    }
    if (oracle_h->parsed() || oracle_unc->parsed()) {
      const bool is_h = oracle_h->parsed();
      SearchLimits limits = is_h ? SearchLimits{} : SearchLimits::for_unc();
      if (max_n > 0) limits.max_n = max_n;
      limits.max_rotation_budget = budget;
      limits.time_budget_seconds = time_budget;
      return cmd_oracle(is_h ? OracleKind::kH : OracleKind::kUnc, load_graph(in, gen), limits,
                        oracle_out, out, err);
    }
    if (verify->parsed()) {
      std::vector<Rational> eps;
      for (const auto& s : split_list(eps_list)) eps.push_back(parse_rational(s));
      return cmd_verify_tightness(eps, parse_ints(ns_list), table_out, out, err);
    }
    if (compare->parsed()) {
      return cmd_compare_bounds(parse_ints(cmp_ns), split_list(cmp_eps), table_out, out, err);
    }
    if (render->parsed()) return cmd_render(render_in, render_out, err);
  } catch (const SearchBudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ConstructionIntegrityError& e) {
    err << "error: " << e.what() << "\n";
    return kIntegrityFailure;
  } catch (const MalformedCertificate& e) {
    err << "error: " << e.what() << "\n";
    return kIntegrityFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kGateFailure;
  }
  return kGateFailure;
}

}  // namespace uncrossed::cli
