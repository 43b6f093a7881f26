#include "dx/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "dx/verify.hpp"

namespace dx {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string quiver;
  int d = 1;
  std::uint64_t seed = 1;
  int cap = 200;
  int budget = 4;
  std::string format = "table";
  bool experimental = false;
  std::string object, at, dir = "left", suite = "all", report = "verify_report.json";
};

Quiver read_quiver(const std::string& arg) {
  if (arg.empty()) throw InputError("--quiver is required");
  if (std::filesystem::exists(arg)) return load_quiver(arg);
  std::smatch m;
  if (std::regex_match(arg, m, std::regex("[Aa]([0-9]+)"))) return linear_a(std::stoi(m[1]), "A" + m[1].str());
  throw InputError("cannot read quiver file '" + arg + "'");
}

std::string literal(const IndTable& t, const std::vector<Summand>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + summand_name(t, xs[i]);
  return s;
}

nlohmann::json summands_json(const IndTable& t, const std::vector<Summand>& xs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& s : xs) a.push_back({{"name", summand_name(t, s)}, {"ind", s.ind}, {"shift", s.shift}});
  return a;
}

std::vector<Summand> parse_summands(const IndTable& t, const std::string& text) {
  try {
    return parse_wobj(t, text).s;
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
}

SiltObj parse_silting(const Window& w, const std::string& text) {
  if (text.empty()) throw InputError("--object is required");
  auto xs = parse_summands(w.t(), text);
  SiltObj p(xs.begin(), xs.end());
  std::sort(p.begin(), p.end());
  if (!is_silting(w, p)) throw InputError("'" + text + "' is not a basic silting object for d = " + std::to_string(w.d));
  return p;
}

std::string dims_str(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_ind(const Config& c, const Window& w, std::ostream& out) {
  const IndTable& t = w.t();
  const auto objs = w.objects();
  if (c.format == "json") {
    nlohmann::json j;
    j["algebra"] = t.quiver.name;
    j["d"] = w.d;
    j["partial"] = t.partial;
    j["objects"] = nlohmann::json::array();
    for (const auto& s : objs)
      j["objects"].push_back({{"name", summand_name(t, s)}, {"module", t.names[s.ind]}, {"shift", s.shift},
                              {"dims", t.inds[s.ind].dims}});
    j["modules"] = t.names;
    j["hom"] = t.G;
    j["ext"] = t.E;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "algebra " << t.quiver.name << ", d = " << w.d << ": " << objs.size() << " indecomposables in the window";
  if (t.partial) out << " (partial table, bounded experiment)";
  out << "\n";
  std::size_t width = 6;
  for (const auto& n : t.names) width = std::max(width, n.size() + 4);
  for (const auto& s : objs) {
    std::string flags;
    if (t.proj_vertex[s.ind] >= 0) flags += " projective";
    if (t.inj_vertex[s.ind] >= 0) flags += " injective";
    if (t.simple_vertex[s.ind] >= 0) flags += " simple";
    out << "  " << std::left << std::setw(static_cast<int>(width)) << summand_name(t, s) << dims_str(t.inds[s.ind].dims)
        << flags << "\n";
  }
  auto table = [&](const char* title, const std::vector<std::vector<int>>& m) {
    out << title << "\n" << std::setw(static_cast<int>(width) + 2) << "";
    for (const auto& n : t.names) out << std::setw(static_cast<int>(width)) << n;
    out << "\n";
    for (int a = 0; a < t.size(); ++a) {
      out << "  " << std::setw(static_cast<int>(width)) << t.names[a];
      for (int b = 0; b < t.size(); ++b) out << std::setw(static_cast<int>(width)) << m[a][b];
      out << "\n";
    }
  };
  table("dim Hom(row, column)", t.G);
  table("dim Ext^1(row, column)", t.E);
  return 0;
}

int cmd_silting(const std::string& sub, const Config& c, const Window& w, std::ostream& out) {
  const IndTable& t = w.t();
  if (sub == "enumerate") {
    auto all = enumerate_silting_exhaustive(w);
    if (c.format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& p : all) j.push_back(summands_json(t, p));
      out << j.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < all.size(); ++i) out << std::setw(4) << i + 1 << "  " << literal(t, all[i]) << "\n";
      out << all.size() << " silting objects\n";
    }
    return 0;
  }
  if (sub == "mutate") {
    SiltObj p = parse_silting(w, c.object);
    auto at = parse_summands(t, c.at);
    if (at.size() != 1) throw InputError("--at must name one summand");
    auto it = std::find(p.begin(), p.end(), at[0]);
    if (it == p.end()) throw InputError("'" + c.at + "' is not a summand of the object");
    if (c.dir != "left" && c.dir != "right") throw InputError("--dir must be left or right");
    MutationResult r = mutate(w, p, static_cast<int>(it - p.begin()), c.dir == "left" ? Direction::Left : Direction::Right);
    // Keep the order the user wrote, with the mutated summand replaced in place.
    std::vector<Summand> shown = parse_summands(t, c.object);
    for (auto& s : shown)
      if (s == at[0]) s = r.added;
    if (c.format == "json") {
      nlohmann::json j{{"exists", r.ok}, {"reason", r.reason}};
      j["result"] = r.ok ? summands_json(t, shown) : nlohmann::json::array();
      out << j.dump(2) << "\n";
    } else if (r.ok) {
      out << literal(t, shown) << "\n";
    } else {
      out << "mutation does not exist: " << r.reason << "\n";
    }
    return 0;
  }
  if (sub == "qseq") {
    SiltObj p = parse_silting(w, c.object);
    QSequence qs = q_sequence(w, p);
    Verdict v = check_q_sequence(w, p, qs);
    if (c.format == "json") {
      nlohmann::json j;
      j["q"] = nlohmann::json::array();
      j["z"] = nlohmann::json::array();
      for (const auto& q : qs.q) j["q"].push_back(wobj_str(t, q));
      for (const auto& z : qs.z) j["z"].push_back(wobj_str(t, z));
      j["checks_ok"] = v.ok;
      j["mutations"] = nlohmann::json::array();
      for (int i = 0; i < static_cast<int>(p.size()); ++i)
        j["mutations"].push_back({{"summand", summand_name(t, p[i])},
                                  {"left", mutation_exists(p, qs, i, Direction::Left)},
                                  {"right", mutation_exists(p, qs, i, Direction::Right)}});
      out << j.dump(2) << "\n";
    } else {
      for (std::size_t j = 0; j < qs.q.size(); ++j)
        out << "Q" << j << " = " << wobj_str(t, qs.q[j]) << "    Z" << j << " = " << wobj_str(t, qs.z[j]) << "\n";
      for (int i = 0; i < static_cast<int>(p.size()); ++i)
        out << summand_name(t, p[i]) << ": left " << (mutation_exists(p, qs, i, Direction::Left) ? "yes" : "no")
            << ", right " << (mutation_exists(p, qs, i, Direction::Right) ? "yes" : "no") << "\n";
      if (!v.ok) out << "sequence check failed: " << v.witness << "\n";
    }
    return v.ok ? 0 : 1;
  }
  if (sub == "poset") {
    auto all = enumerate_silting_exhaustive(w);
    Poset ps = hasse_poset(w, all);
    if (c.format == "dot") {
      std::map<std::pair<int, int>, Summand> label;
      for (const auto& e : mutation_edges(w, all)) label[{e.upper, e.lower}] = e.at;
      out << "digraph silting_poset {\n  node [shape=box];\n";
      for (std::size_t i = 0; i < all.size(); ++i) out << "  n" << i << " [label=\"" << silt_str(t, all[i]) << "\"];\n";
      for (auto [u, v] : ps.hasse) {
        out << "  n" << u << " -> n" << v;
        if (auto it = label.find({u, v}); it != label.end()) out << " [label=\"" << summand_name(t, it->second) << "\"]";
        out << ";\n";
      }
      out << "}\n";
    } else if (c.format == "json") {
      nlohmann::json j;
      j["nodes"] = nlohmann::json::array();
      for (const auto& p : all) j["nodes"].push_back(summands_json(t, p));
      j["hasse_edges"] = ps.hasse;
      nlohmann::json pairs = nlohmann::json::array();
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b)
          if (ps.leq[a][b]) pairs.push_back({a, b});
      j["order_pairs"] = pairs;
      out << j.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < all.size(); ++i) out << std::setw(4) << i << "  " << silt_str(t, all[i]) << "\n";
      out << "covers (upper > lower):\n";
      for (auto [u, v] : ps.hasse) out << "  " << u << " > " << v << "\n";
    }
    return 0;
  }
  throw InputError("unknown silting subcommand '" + sub + "'");
}

int cmd_smc(const Config& c, const Window& w, std::ostream& out) {
  const IndTable& t = w.t();
  auto all = enumerate_silting_exhaustive(w);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : all) {
    SMC x = smc_of_silting(w, p);
    if (c.format == "json") {
      j.push_back({{"silting", summands_json(t, p)},
                   {"smc", summands_json(t, x)},
                   {"pi1", summands_json(t, to_list(pi1(w, x)))},
                   {"pi2", summands_json(t, to_list(pi2(w, x)))}});
    } else {
      out << silt_str(t, p) << "  ->  " << smc_str(t, x) << "   pi1 " << subcat_str(t, pi1(w, x)) << "  pi2 "
          << subcat_str(t, pi2(w, x)) << "\n";
    }
  }
  if (c.format == "json") out << j.dump(2) << "\n";
  return 0;
}

int cmd_semibricks(const Config& c, const Window& w, std::ostream& out) {
  const IndTable& t = w.t();
  auto all = enumerate_semibricks(w);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : all) {
    const Subcat ss(s.begin(), s.end());
    const Subcat tor = smallest_positive_torsion(w, ss);
    if (c.format == "json")
      j.push_back({{"semibrick", summands_json(t, s)}, {"torsion", summands_json(t, to_list(tor))}});
    else
      out << subcat_str(t, ss) << "   T = " << subcat_str(t, tor) << "\n";
  }
  if (c.format == "json")
    out << j.dump(2) << "\n";
  else
    out << all.size() << " semibricks\n";
  return 0;
}

int cmd_ledger(const Config& c, const Window& w, std::ostream& out) {
  const IndTable& t = w.t();
  Ledger l = build_ledger(w, t.quiver.name);
  if (c.format == "json") {
    out << ledger_json(t, l).dump(2) << "\n";
  } else if (c.format == "dot") {
    out << ledger_dot(t, l);
  } else {
    for (const auto& r : l.rows)
      out << silt_str(t, r.silting) << " | smc " << smc_str(t, r.smc) << " | S " << subcat_str(t, r.left) << " | S' "
          << subcat_str(t, r.right) << " | T " << subcat_str(t, r.torsion) << " | W " << subcat_str(t, r.wide)
          << "\n";
    std::size_t fails = 0;
    for (const auto& ch : l.checks)
      if (ch.status == "fail") {
        ++fails;
        out << "FAIL " << ch.check << " " << ch.subject << ": " << ch.witness << "\n";
      }
    out << l.rows.size() << " rows, " << l.checks.size() << " checks, " << fails << " failed\n";
  }
  return l.ok() ? 0 : 1;
}

int cmd_verify(const Config& c, const Window& w, std::ostream& out) {
  const IndTable& t = w.t();
  std::vector<SuiteResult> res;
  try {
    res = run_suites(w, t.quiver.name, c.suite);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  nlohmann::json rep = report_json(w, t.quiver.name, res);
  std::ofstream f(c.report);
  if (!f) throw InputError("cannot write report '" + c.report + "'");
  f << rep.dump(2) << "\n";
  bool ok = true;
  if (c.format == "json") {
    out << rep.dump(2) << "\n";
  } else {
    for (const auto& r : res) {
      std::size_t pass = 0, fail = 0, inc = 0;
      for (const auto& ch : r.checks) {
        pass += ch.status == "pass";
        fail += ch.status == "fail";
        inc += ch.status == "inconclusive";
      }
      out << std::left << std::setw(24) << r.suite << (r.ok() ? "PASS" : "FAIL") << "  " << pass << " passed, " << fail
          << " failed, " << inc << " inconclusive\n";
      for (const auto& ch : r.checks)
        if (ch.status == "fail") out << "  " << ch.check << " " << ch.subject << ": " << ch.witness << "\n";
    }
    out << "report written to " << c.report << "\n";
  }
  for (const auto& r : res) ok &= r.ok();
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"dxw: silting, simple-minded collections and torsion classes of d-extended module categories"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--quiver", c.quiver, "quiver file (or A<n> for linear A_n)");
  app.add_option("--d", c.d, "window parameter d >= 1");
  app.add_option("--seed", c.seed, "seed for randomized witness searches");
  app.add_option("--knit-cap", c.cap, "maximum number of indecomposables to knit");
  app.add_option("--witness-budget", c.budget, "random witnesses per search step");
  app.add_option("--format", c.format, "table, json or dot")->check(CLI::IsMember({"table", "json", "dot"}));
  app.add_flag("--experimental-window", c.experimental, "allow a partial table for representation-infinite quivers");
  app.add_option("--object", c.object, "object literal, e.g. \"P2@2,I1@1\"");
  app.add_option("--at", c.at, "summand to mutate at");
  app.add_option("--dir", c.dir, "left or right");
  app.add_option("--suite", c.suite, "verification suite or 'all'");
  app.add_option("--report", c.report, "path of the JSON verification report");

  auto* ind = app.add_subcommand("ind", "list window indecomposables with Hom/Ext tables");
  auto* silt = app.add_subcommand("silting", "silting objects");
  silt->require_subcommand(1);
  for (const char* s : {"enumerate", "mutate", "qseq", "poset"}) silt->add_subcommand(s);
  auto* smc = app.add_subcommand("smc", "simple-minded collections of all silting objects");
  auto* sb = app.add_subcommand("semibricks", "semibricks and their torsion classes");
  auto* led = app.add_subcommand("ledger", "bijection ledger");
  auto* ver = app.add_subcommand("verify", "run verification suites");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }

  try {
    if (c.d < 1) throw InputError("--d must be at least 1");
    if (c.experimental && !ind->parsed()) throw ScopeError("--experimental-window is only supported by 'ind'");
    KnitOptions ko;
    ko.cap = c.cap;
    ko.experimental = c.experimental;
    ko.seed = c.seed;
    if (c.cap <= 0) throw InputError("--knit-cap must be positive");
    Window w{knit_indecomposables(read_quiver(c.quiver), ko), c.d, c.seed, c.budget};
    if (c.format == "dot" && !led->parsed() && !silt->parsed()) throw InputError("--format dot is only for ledger and silting poset");
    if (ind->parsed()) return cmd_ind(c, w, out);
    if (silt->parsed()) return cmd_silting(silt->get_subcommands().at(0)->get_name(), c, w, out);
    if (smc->parsed()) return cmd_smc(c, w, out);
    if (sb->parsed()) return cmd_semibricks(c, w, out);
    if (led->parsed()) return cmd_ledger(c, w, out);
    if (ver->parsed()) return cmd_verify(c, w, out);
  } catch (const ScopeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const QuiverError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}

}  // namespace dx
