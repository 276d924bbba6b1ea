// Command line front end: computations and verification suites over
// bumpless pipe dreams, plactic biwords and Schubert polynomials.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "pipedream/json_io.hpp"
#include "pipedream/knuth.hpp"
#include "pipedream/schubert.hpp"
#include "pipedream/verify.hpp"

using namespace pipedream;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(errc::bad_input, "cannot open " + path);
  out << text;
}

BPD load_bpd(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open " + path);
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    json j;
    in >> j;
    return bpd_from_json(j);
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return BPD::parse(text);
}

std::string chain_pretty(const DecoratedChain& ch) { return ch.str(); }

int run_verify(const std::string& what, int max_n, const std::string& perm_str, unsigned seed,
               const std::string& json_path) {
  if (what == "connectivity") {
    std::vector<Permutation> perms;
    if (!perm_str.empty()) {
      perms.push_back(Permutation::parse(perm_str));
    } else {
      for (const auto& p : all_permutations(max_n)) perms.push_back(p);
    }
    json report = json::array();
    bool ok = true;
    for (const auto& p : perms) {
      ConnectivityReport rep = verify_connectivity(p);
      ok = ok && rep.all_connected;
      json fibers = json::array();
      for (const auto& fr : rep.fibers)
        fibers.push_back({{"bpd", fr.bpd},
                          {"fiber_size", fr.fiber_size},
                          {"class_size", fr.class_size},
                          {"diameter", fr.diameter},
                          {"has_maxword", fr.has_maxword},
                          {"has_minword", fr.has_minword},
                          {"connected", fr.connected}});
      report.push_back({{"perm", rep.perm.str()}, {"connected", rep.all_connected}, {"fibers", fibers}});
      std::cout << (rep.all_connected ? "[PASS] " : "[FAIL] ") << rep.perm.str() << ": "
                << rep.fibers.size() << " fibers\n";
    }
    if (!json_path.empty()) write_file(json_path, report.dump(2) + "\n");
    return ok ? 0 : 1;
  }
  if (what == "all") {
    auto results = verify_all(max_n, seed);
    bool ok = true;
    for (const auto& r : results) {
      std::printf("[%s] criterion %d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds, r.detail.c_str());
      ok = ok && r.pass;
    }
    if (!json_path.empty()) {
      json arr = json::array();
      for (const auto& r : results)
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
      write_file(json_path, arr.dump(2) + "\n");
    }
    return ok ? 0 : 1;
  }
  std::cerr << "unknown verify target: " << what << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bumpless pipe dream insertion, plactic biwords and Schubert structure constants"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine readable output");

  // bpds
  auto* cmd_bpds = app.add_subcommand("bpds", "enumerate BPD(pi)");
  std::string perm_str;
  cmd_bpds->add_option("--perm", perm_str, "one-line notation")->required();

  // render
  auto* cmd_render = app.add_subcommand("render", "render the Rothe BPD of a permutation or a .bpd file");
  std::string render_perm, render_file;
  cmd_render->add_option("--perm", render_perm, "one-line notation");
  cmd_render->add_option("--file", render_file, "path to a .bpd or .json diagram");

  // insert
  auto* cmd_insert = app.add_subcommand("insert", "insert a biword into the empty diagram");
  std::string biword_path, order = "left";
  cmd_insert->add_option("--biword", biword_path, "biword json file")->required();
  cmd_insert->add_option("--order", order, "left or right")->check(CLI::IsMember({"left", "right"}));

  // phi
  auto* cmd_phi = app.add_subcommand("phi", "insertion BPD of a plactic biword");
  std::string phi_path;
  cmd_phi->add_option("--biword", phi_path, "biword json file")->required();

  // maxword / minword
  auto* cmd_maxword = app.add_subcommand("maxword", "canonical maxword of a BPD");
  std::string max_perm, max_bpd;
  cmd_maxword->add_option("--perm", max_perm, "use the Rothe BPD of this permutation");
  cmd_maxword->add_option("--bpd", max_bpd, "diagram file");
  auto* cmd_minword = app.add_subcommand("minword", "canonical minword of a BPD");
  std::string min_perm, min_bpd;
  cmd_minword->add_option("--perm", min_perm, "use the Rothe BPD of this permutation");
  cmd_minword->add_option("--bpd", min_bpd, "diagram file");

  // knuth-class
  auto* cmd_class = app.add_subcommand("knuth-class", "BFS closure under the generalized Knuth moves");
  std::string class_path, dot_path;
  cmd_class->add_option("--biword", class_path, "biword json file")->required();
  cmd_class->add_option("--dot", dot_path, "write the move graph in DOT format");

  // fiber
  auto* cmd_fiber = app.add_subcommand("fiber", "all plactic biwords inserting to a BPD");
  std::string fiber_bpd, fiber_perm;
  cmd_fiber->add_option("--bpd", fiber_bpd, "diagram file");
  cmd_fiber->add_option("--perm", fiber_perm, "use the Rothe BPD of this permutation");

  // chains
  auto* cmd_chains = app.add_subcommand("chains", "count complete mixed chains with a label vector");
  std::string chains_perm;
  std::vector<int> chain_labels;
  cmd_chains->add_option("--perm", chains_perm)->required();
  cmd_chains->add_option("--labels", chain_labels, "label vector k1 k2 ...")->required();

  // schubert
  auto* cmd_schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  std::string schubert_perm, schubert_method = "bpd";
  cmd_schubert->add_option("--perm", schubert_perm)->required();
  cmd_schubert->add_option("--method", schubert_method)->check(CLI::IsMember({"bpd", "divdiff"}));

  // constants
  auto* cmd_constants = app.add_subcommand("constants", "separated-descent structure constants");
  std::string c_pi, c_rho, c_sigma;
  cmd_constants->add_option("--pi", c_pi)->required();
  cmd_constants->add_option("--rho", c_rho)->required();
  cmd_constants->add_option("--sigma", c_sigma, "one sigma; defaults to the whole expansion row");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string verify_what = "all", verify_perm, verify_json;
  int verify_max_n = 4;
  unsigned seed = 20240817;
  cmd_verify->add_option("what", verify_what, "all or connectivity");
  cmd_verify->add_option("--max-n", verify_max_n, "window bound for sweeps");
  cmd_verify->add_option("--perm", verify_perm, "restrict connectivity to one permutation");
  cmd_verify->add_option("--seed", seed, "seed for randomized spot checks");
  cmd_verify->add_option("--json", verify_json, "write a json report");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (*cmd_bpds) {
      Permutation p = Permutation::parse(perm_str);
      auto ds = all_bpds(p);
      if (as_json) {
        json arr = json::array();
        for (const auto& d : ds) arr.push_back(to_json(d.embedded(std::max(1, p.size()))));
        std::cout << json{{"perm", p.str()}, {"count", ds.size()}, {"bpds", arr}}.dump(2) << "\n";
      } else {
        for (const auto& d : ds) std::cout << d.embedded(std::max(1, p.size())).render() << "\n\n";
        std::cout << "count " << ds.size() << "\n";
      }
    } else if (*cmd_render) {
      BPD d = render_file.empty() ? rothe_bpd(Permutation::parse(render_perm)) : load_bpd(render_file);
      int m = std::max(d.n(), 1);
      if (as_json)
        std::cout << to_json(d.embedded(m)).dump(2) << "\n";
      else
        std::cout << d.embedded(m).render() << "\n";
    } else if (*cmd_insert || *cmd_phi) {
      PlacticBiword q = biword_from_json(read_json_file(*cmd_insert ? biword_path : phi_path));
      auto [d, ch] = (*cmd_phi || order == "left") ? insert_left_with_chain(q) : insert_right_with_chain(q);
      int m = std::max(d.n(), 1);
      if (as_json)
        std::cout << json{{"bpd", to_json(d.embedded(m))},
                          {"perm", validate(d).str()},
                          {"chain", to_json(ch)}}
                         .dump(2)
                  << "\n";
      else {
        std::cout << d.embedded(m).render() << "\nperm " << validate(d).str() << "\nchain "
                  << chain_pretty(ch) << "\n";
      }
    } else if (*cmd_maxword || *cmd_minword) {
      bool is_max = static_cast<bool>(*cmd_maxword);
      std::string ps = is_max ? max_perm : min_perm;
      std::string bs = is_max ? max_bpd : min_bpd;
      BPD d = !bs.empty() ? load_bpd(bs) : rothe_bpd(Permutation::parse(ps));
      PlacticBiword q = is_max ? maxword(d) : minword(d);
      if (as_json)
        std::cout << to_json(q).dump(2) << "\n";
      else
        std::cout << q.str() << "\n";
    } else if (*cmd_class) {
      PlacticBiword q = biword_from_json(read_json_file(class_path));
      auto cls = knuth_class(q);
      if (!dot_path.empty()) {
        std::ostringstream dot;
        dot << "graph knuth_class {\n";
        std::map<PlacticBiword, int> ids;
        int next_id = 0;
        for (const auto& w : cls) ids[w] = next_id++;
        for (const auto& [w, id] : ids)
          dot << "  n" << id << " [label=\"" << w.str() << "\"];\n";
        for (const auto& [w, id] : ids)
          for (const auto& [v, m] : knuth_neighbors(w))
            if (ids.count(v) && ids[v] > id)
              dot << "  n" << id << " -- n" << ids[v] << " [label=\"" << m.rule_name() << "\"];\n";
        dot << "}\n";
        write_file(dot_path, dot.str());
      }
      if (as_json) {
        json arr = json::array();
        for (const auto& w : cls) arr.push_back(to_json(w));
        std::cout << json{{"size", cls.size()}, {"members", arr}}.dump(2) << "\n";
      } else {
        for (const auto& w : cls) std::cout << w.str() << "\n";
        std::cout << "size " << cls.size() << "\n";
      }
    } else if (*cmd_fiber) {
      BPD d = !fiber_bpd.empty() ? load_bpd(fiber_bpd) : rothe_bpd(Permutation::parse(fiber_perm));
      auto f = fiber(d);
      if (as_json) {
        json arr = json::array();
        for (const auto& w : f) arr.push_back(to_json(w));
        std::cout << json{{"size", f.size()}, {"members", arr}}.dump(2) << "\n";
      } else {
        for (const auto& w : f) std::cout << w.str() << "\n";
        std::cout << "size " << f.size() << "\n";
      }
    } else if (*cmd_chains) {
      Permutation p = Permutation::parse(chains_perm);
      long n = count_chains(p, chain_labels);
      if (as_json)
        std::cout << json{{"perm", p.str()}, {"labels", chain_labels}, {"count", n}}.dump(2) << "\n";
      else
        std::cout << n << "\n";
    } else if (*cmd_schubert) {
      Permutation p = Permutation::parse(schubert_perm);
      IntPolynomial f = schubert_method == "bpd" ? schubert_bpd(p) : schubert_divdiff(p);
      if (as_json) {
        json terms = json::array();
        for (const auto& [m, c] : f.terms()) terms.push_back({{"exponents", m}, {"coefficient", c}});
        std::cout << json{{"perm", p.str()}, {"terms", terms}}.dump(2) << "\n";
      } else
        std::cout << f.str() << "\n";
    } else if (*cmd_constants) {
      Permutation p = Permutation::parse(c_pi), r = Permutation::parse(c_rho);
      if (!c_sigma.empty()) {
        long c = separated_descent_constant(p, r, Permutation::parse(c_sigma));
        if (as_json)
          std::cout << json{{"pi", p.str()}, {"rho", r.str()}, {"sigma", c_sigma}, {"c", c}}.dump(2) << "\n";
        else
          std::cout << c << "\n";
      } else {
        auto expansion = expand_schubert(schubert_bpd(p) * schubert_bpd(r));
        json arr = json::array();
        for (const auto& [sigma, coeff] : expansion) {
          long c = separated_descent_constant(p, r, sigma);
          arr.push_back({{"sigma", sigma.str()}, {"c", c}, {"expansion", coeff}});
          if (!as_json) std::cout << sigma.str() << " " << c << "\n";
        }
        if (as_json)
          std::cout << json{{"pi", p.str()}, {"rho", r.str()}, {"row", arr}}.dump(2) << "\n";
      }
    } else if (*cmd_verify) {
      return run_verify(verify_what, verify_max_n, verify_perm, seed, verify_json);
    }
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
