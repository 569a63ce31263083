// cdgraph: command-line front end for the character degree graph toolkit.
//
// Exit status: 0 success or pass, 1 verification failure or ceiling
// exceeded, 2 usage error or malformed spec.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cdgraph/chardeg.hpp"
#include "cdgraph/classes.hpp"
#include "cdgraph/classify.hpp"
#include "cdgraph/json_io.hpp"
#include "cdgraph/modact.hpp"
#include "cdgraph/prime_graph.hpp"
#include "cdgraph/suite.hpp"

namespace {

using cdg::io::Json;

struct RunConfig {
  std::string spec;
  std::string format = "json";
  std::size_t ceiling = cdg::kDefaultCeiling;
  bool long_checks = false;
  std::string out;
  cdg::u64 q = 0;
  cdg::u64 r = 0;
  cdg::u64 s = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_spec(const RunConfig& cfg) {
  if (cfg.spec.empty()) throw UsageError("--spec is required for this command");
}

void no_dot(const RunConfig& cfg) {
  if (cfg.format == "dot") throw UsageError("dot output is only available for graph-valued commands");
}

std::string text_list(const cdg::PrimeSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::string render_graph(const cdg::PrimeGraph& g, const RunConfig& cfg) {
  if (cfg.format == "dot") return cdg::to_dot(g);
  if (cfg.format == "text") return g.to_string() + "\n";
  return cdg::io::to_json(g).dump() + "\n";
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

int run_command(const std::string& cmd, const RunConfig& cfg, std::string& output) {
  if (cmd == "suite") {
    no_dot(cfg);
    const auto checks = cdg::suite::run(cfg.long_checks);
    bool all = true;
    Json arr = Json::array();
    std::ostringstream text;
    for (const auto& c : checks) {
      all = all && c.pass;
      arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      text << (c.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << c.detail << "\n";
    }
    output = cfg.format == "text" ? text.str() : render(Json{{"checks", arr}, {"long", cfg.long_checks}, {"pass", all}});
    return all ? 0 : 1;
  }

  require_spec(cfg);
  const Json doc = cdg::io::load_document(cfg.spec);

  if (cmd == "predict") {
    const auto c = cdg::io::case_from_json(doc);
    const auto g = cdg::predict_graph(c);
    if (cfg.format == "json") {
      output = render(Json{{"case", cdg::io::to_json(c)}, {"graph", cdg::io::to_json(g)}});
    } else {
      output = render_graph(g, cfg);
    }
    return 0;
  }

  if (cmd == "verify") {
    no_dot(cfg);
    const std::string id = doc.contains("id") && doc["id"].is_string() ? doc["id"].get<std::string>() : "witness";
    if (!doc.contains("group") || !doc.contains("case")) throw cdg::InvalidArgument("witness: needs \"group\" and \"case\"");
    const auto c = cdg::io::case_from_json(doc["case"]);
    const auto g = cdg::io::group_from_json(doc["group"], cfg.ceiling);
    const auto rep = cdg::verify_witness(id, *g, c);
    if (cfg.format == "text") {
      std::ostringstream os;
      os << (rep.pass ? "PASS " : "FAIL ") << id << " case " << cdg::to_string(c.tag) << " p=" << c.p << "\n"
         << "computed  " << rep.computed.to_string() << "\n"
         << "predicted " << rep.predicted.to_string() << "\n"
         << "cut " << text_list(rep.cut_set) << " complete " << text_list(rep.complete_set) << "\n";
      output = os.str();
    } else {
      output = render(cdg::io::verification_report(rep));
    }
    return rep.pass ? 0 : 1;
  }

  if (cmd == "orbits" || cmd == "nq" || cmd == "vsets") {
    const auto action = cdg::io::module_from_json(doc, cfg.ceiling);
    const auto rep = cdg::orbit_report(action);
    if (cmd == "orbits") {
      if (cfg.format == "dot") {
        output = cdg::to_dot(cdg::delta_orb(rep));
      } else if (cfg.format == "text") {
        std::ostringstream os;
        os << action.label() << " |H|=" << rep.acting_order << " |V|=" << rep.module_order << "\n";
        for (const auto& o : rep.orbits) os << "orbit size " << o.size << " stabilizer " << o.stabilizer_order << "\n";
        os << "delta_orb " << cdg::delta_orb(rep).to_string() << "\n";
        output = os.str();
      } else {
        output = render(cdg::io::orbits_report(action, rep));
      }
      return 0;
    }
    no_dot(cfg);
    if (cmd == "nq") {
      if (cfg.q == 0) throw UsageError("nq needs --q");
      const auto nq = cdg::check_Nq(action, rep, cfg.q);
      output = cfg.format == "text"
                   ? action.label() + " N_" + std::to_string(cfg.q) + (nq.satisfied ? " satisfied\n" : " not satisfied\n")
                   : render(cdg::io::nq_report(action, nq));
      return 0;
    }
    std::optional<cdg::u64> r, s;
    if (cfg.r) r = cfg.r;
    if (cfg.s) s = cfg.s;
    const auto d = cdg::v_set_decomposition(action, rep, r, s);
    std::optional<cdg::DichotomyResult> dich;
    if (action.prime() == d.t) dich = cdg::type_dichotomy(action, rep);
    if (cfg.format == "text") {
      std::ostringstream os;
      os << action.label() << " |V_I-|=" << d.v_i_minus.size() << " |V_I+|=" << d.v_i_plus.size()
         << " |V_II|=" << d.v_ii.size();
      if (dich) os << " dichotomy " << (dich->holds ? "holds" : "fails");
      os << "\n";
      output = os.str();
    } else {
      output = render(cdg::io::vsets_report(action, d, dich ? &*dich : nullptr));
    }
    return 0;
  }

  const auto g = cdg::io::group_from_json(doc, cfg.ceiling);
  const auto cd = cdg::conjugacy_classes(*g);
  if (cmd == "group") {
    no_dot(cfg);
    output = cfg.format == "text"
                 ? g->name() + " order " + std::to_string(g->order()) + " classes " + std::to_string(cd.count()) + "\n"
                 : render(cdg::io::group_report(*g, cd));
    return 0;
  }
  const auto degrees = cdg::character_degrees(*g, cd);
  if (cmd == "degrees") {
    no_dot(cfg);
    if (cfg.format == "text") {
      std::ostringstream os;
      os << g->name() << " " << degrees << "\n";
      output = os.str();
    } else {
      output = render(cdg::io::degrees_report(*g, cd, degrees));
    }
    return 0;
  }
  const auto graph = cdg::degree_graph(degrees);
  if (cmd == "graph") {
    output = render_graph(graph, cfg);
    return 0;
  }
  if (cmd == "analyze") {
    if (cfg.format == "json") {
      output = render(cdg::io::analysis_report(graph));
    } else if (cfg.format == "dot") {
      output = cdg::to_dot(graph);
    } else {
      std::ostringstream os;
      os << graph.to_string() << "\ncomponents";
      for (const auto& c : cdg::connected_components(graph)) os << ' ' << c;
      os << "\ncut vertices " << cdg::cut_vertices(graph) << "\ncomplete vertices " << cdg::complete_vertices(graph)
         << "\n";
      output = os.str();
    }
    return 0;
  }
  throw UsageError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character degree graphs of groups with a composition factor SL2(2^a)"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  const char* commands[][2] = {{"group", "build a group and report order and classes"},
                               {"degrees", "irreducible character degrees"},
                               {"graph", "character degree graph"},
                               {"analyze", "components, cut vertices and complete vertices"},
                               {"orbits", "orbit report and orbit graph of a module"},
                               {"nq", "condition N_q for a module"},
                               {"vsets", "V_I-/V_I+/V_II decomposition of a module"},
                               {"predict", "predicted graph of a classification case"},
                               {"verify", "verify a witness against its case"},
                               {"suite", "run the verification suite"}};
  for (auto& c : commands) {
    auto* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("--spec", cfg.spec, "inline JSON or path to a JSON file");
    sub->add_option("--format", cfg.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--ceiling", cfg.ceiling, "maximum number of enumerated elements")->check(CLI::PositiveNumber);
    sub->add_flag("--long", cfg.long_checks, "include long-running checks");
    sub->add_option("--out", cfg.out, "write output to this path");
    if (std::string(c[0]) == "nq") sub->add_option("--q", cfg.q, "prime q")->required();
    if (std::string(c[0]) == "vsets") {
      sub->add_option("--r", cfg.r, "odd prime dividing q - 1");
      sub->add_option("--s", cfg.s, "odd prime dividing q + 1");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  std::string output;
  int rc = 0;
  try {
    rc = run_command(cmd, cfg, output);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const cdg::CeilingExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cdg::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cdg::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  if (cfg.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << output;
  }
  return rc;
}
