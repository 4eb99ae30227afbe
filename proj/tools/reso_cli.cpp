// Command-line front end for the resonance engine: builds cuts from weight
// lists or symbolic forms, runs closures, classifications, homotopy-type and
// complexity computations, and renders text, JSON, or DOT.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reso/complexity.hpp"
#include "reso/errors.hpp"
#include "reso/homotopy.hpp"
#include "reso/relative.hpp"
#include "reso/symbolic.hpp"

using nlohmann::json;
using namespace reso;

namespace {

constexpr int kSchemaVersion = 1;

json base_json(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json cut_json(const Cut& s) {
  json j;
  j["length"] = s.length();
  j["element_count"] = s.size();
  j["trivial"] = s.is_trivial();
  std::vector<std::string> els;
  for (const auto& e : s.elements()) els.push_back(e.str());
  j["elements"] = els;
  j["symbolic"] = to_symbolic(s).str();
  return j;
}

json homotopy_json(const HomotopyClass& h) {
  json j;
  switch (h.kind()) {
    case HomotopyClass::Kind::Point:
      j["status"] = "point";
      break;
    case HomotopyClass::Kind::Wedge:
      j["status"] = "determined";
      break;
    case HomotopyClass::Kind::Undetermined:
      j["status"] = "undetermined";
      j["reason"] = h.reason();
      break;
  }
  json wedge = json::array();
  std::vector<Term> terms = h.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::pair(a.alpha + a.beta, a.alpha) < std::pair(b.alpha + b.beta, b.alpha);
  });
  for (const auto& t : terms)
    wedge.push_back({{"alpha", t.alpha}, {"beta", t.beta}, {"sphere_dim", t.alpha + t.beta}});
  j["wedge"] = wedge;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of additive identities among partition parts:\n"
               "cuts, closures, relative cuts, classification, homotopy types."};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string weights_arg, partition_arg, ordered_arg, forms_arg;
  std::string model_arg = "circle", mode_arg = "transpositions";
  int enum_n = 3, max_size = 3;
  bool as_dot = false;

  auto* c_cut = app.add_subcommand("cut", "cut of a weight list: elements and symbolic form");
  c_cut->add_option("weights", weights_arg, "e.g. 1,1,2 or 8,4,2^3,1^6")->required();

  auto* c_sym = app.add_subcommand("symbolic", "cut described by linear forms in a..z");
  c_sym->add_option("forms", forms_arg, "e.g. 'a+b,a,b'")->required();

  auto* c_act = app.add_subcommand("act", "apply an ordered partition to a weight-list cut");
  c_act->add_option("partition", ordered_arg, "e.g. '({1,2},{3})'")->required();
  c_act->add_option("weights", weights_arg)->required();

  auto* c_clo = app.add_subcommand("closure", "partitions reachable from one by merge/rewrite moves");
  c_clo->add_option("partition", partition_arg, "e.g. '{1}{2,3}{4}{5}'")->required();
  c_clo->add_option("weights", weights_arg)->required();

  auto* c_rel = app.add_subcommand("relative", "surviving elements and partitions at infinity");
  c_rel->add_option("partition", partition_arg)->required();
  c_rel->add_option("weights", weights_arg)->required();

  auto* c_cls = app.add_subcommand("classify", "sequential / strongly sequential / division chain");
  c_cls->add_option("weights", weights_arg)->required();

  auto* c_hom = app.add_subcommand("homotopy", "homotopy type of the stratum as a wedge of spheres");
  c_hom->add_option("weights", weights_arg)->required();
  c_hom->add_option("--model", model_arg, "circle | symbolic")
      ->check(CLI::IsMember({"circle", "symbolic"}));

  auto* c_gra = app.add_subcommand("graph", "divisibility graph of a division chain");
  c_gra->add_option("weights", weights_arg)->required();
  c_gra->add_flag("--dot", as_dot, "emit Graphviz DOT");

  auto* c_cpx = app.add_subcommand("complexity", "minimal gluing set that drops the span");
  c_cpx->add_option("weights", weights_arg)->required();
  c_cpx->add_option("--mode", mode_arg, "transpositions | literal")
      ->check(CLI::IsMember({"transpositions", "literal"}));
  c_cpx->add_option("--max-size", max_size, "largest gluing-set size to try")
      ->check(CLI::PositiveNumber);

  auto* c_enu = app.add_subcommand("enumerate", "one representative per resonance class");
  c_enu->add_option("n", enum_n, "coordinate count (<= 5)")->required();

  CLI11_PARSE(app, argc, argv);

  if (*c_cut) {
    Cut s = cut_from_weights(parse_weight_vector(weights_arg));
    if (as_json) {
      json j = base_json("cut");
      j["input"] = weights_arg;
      j["cut"] = cut_json(s);
      emit(j);
    } else {
      std::cout << "elements: " << s.size() << (s.is_trivial() ? " (trivial)" : "") << "\n";
      for (const auto& e : s.elements()) std::cout << "  " << e.str() << "\n";
      std::cout << "symbolic: " << to_symbolic(s).str() << "\n";
    }
  } else if (*c_sym) {
    Cut s = from_symbolic(parse_symbolic(forms_arg));
    if (as_json) {
      json j = base_json("symbolic");
      j["input"] = forms_arg;
      j["cut"] = cut_json(s);
      emit(j);
    } else {
      std::cout << "elements: " << s.size() << "\n";
      for (const auto& e : s.elements()) std::cout << "  " << e.str() << "\n";
      std::cout << "symbolic: " << to_symbolic(s).str() << "\n";
    }
  } else if (*c_act) {
    OrderedSetPartition pi = parse_ordered_partition(ordered_arg);
    Cut s = cut_from_weights(parse_weight_vector(weights_arg));
    Cut t = act(pi, s);
    if (as_json) {
      json j = base_json("act");
      j["partition"] = pi.str();
      j["cut"] = cut_json(t);
      emit(j);
    } else {
      std::cout << "induced cut on " << t.length() << " coordinates, " << t.size()
                << " elements\n";
      for (const auto& e : t.elements()) std::cout << "  " << e.str() << "\n";
      std::cout << "symbolic: " << to_symbolic(t).str() << "\n";
    }
  } else if (*c_clo) {
    SetPartition pi = parse_set_partition(partition_arg);
    Cut s = cut_from_weights(parse_weight_vector(weights_arg));
    auto closed = closure_partition(pi, s);
    if (as_json) {
      json j = base_json("closure");
      j["partition"] = pi.str();
      std::vector<std::string> members;
      for (const auto& p : closed) members.push_back(p.str());
      j["closure"] = members;
      j["count"] = members.size();
      emit(j);
    } else {
      std::cout << closed.size() << " partitions in the closure of " << pi.str() << ":\n";
      for (const auto& p : closed) std::cout << "  " << p.str() << "\n";
    }
  } else if (*c_rel) {
    SetPartition pi = parse_set_partition(partition_arg);
    Cut s = cut_from_weights(parse_weight_vector(weights_arg));
    RelativeCut rc = relative_from_gluing(s, pi);
    if (as_json) {
      json j = base_json("relative");
      j["partition"] = pi.str();
      std::vector<std::string> surv, inf;
      for (const auto& e : rc.surviving) surv.push_back(e.str());
      for (const auto& p : rc.at_infinity) inf.push_back(p.str());
      j["surviving"] = surv;
      j["at_infinity"] = inf;
      emit(j);
    } else {
      std::cout << "surviving elements (" << rc.surviving.size() << "):\n";
      for (const auto& e : rc.surviving) std::cout << "  " << e.str() << "\n";
      std::cout << "at infinity (" << rc.at_infinity.size() << "):\n";
      for (const auto& p : rc.at_infinity) std::cout << "  " << p.str() << "\n";
    }
  } else if (*c_cls) {
    NumberPartition lambda = parse_weights(weights_arg);
    SequentialReport rep = classify(lambda);
    auto iset = [](const std::vector<int>& v) {
      std::string out = "{";
      for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
      return out + "}";
    };
    if (as_json) {
      json j = base_json("classify");
      j["partition"] = lambda.str();
      j["sequential"] = rep.sequential;
      j["strongly_sequential"] = rep.strongly_sequential;
      j["division_chain"] = rep.division_chain;
      j["mm"] = rep.mm;
      if (rep.I_max) j["I_max"] = *rep.I_max;
      if (rep.witness) {
        j["witness"] = {{"plus", rep.witness->plus_side}, {"minus", rep.witness->minus_side}};
      }
      emit(j);
    } else {
      std::cout << "partition: " << lambda.str() << "\n"
                << "sequential: " << (rep.sequential ? "yes" : "no") << "\n"
                << "strongly sequential: " << (rep.strongly_sequential ? "yes" : "no") << "\n"
                << "division chain: " << (rep.division_chain ? "yes" : "no") << "\n"
                << "mm: " << rep.mm << "\n";
      if (rep.I_max) std::cout << "I: " << iset(*rep.I_max) << "\n";
      if (rep.witness) {
        auto sum_str = [&](const std::vector<int>& side) {
          std::string out;
          for (std::size_t i = 0; i < side.size(); ++i)
            out += (i ? " + " : "") + std::to_string(lambda.part(side[i] - 1));
          return out;
        };
        std::cout << "witness: " << sum_str(rep.witness->plus_side) << " = "
                  << sum_str(rep.witness->minus_side) << "\n";
      }
    }
  } else if (*c_hom) {
    NumberPartition lambda = parse_weights(weights_arg);
    SpaceModel model = model_arg == "circle" ? SpaceModel::Circle : SpaceModel::Symbolic;
    TypeAnswer ans = homotopy_type(lambda, model);
    if (as_json) {
      json j = base_json("homotopy");
      j["partition"] = lambda.str();
      j["model"] = model_arg;
      j.update(homotopy_json(ans.cls));
      j["trace"] = ans.trace;
      emit(j);
    } else {
      std::cout << "partition: " << lambda.str() << "\n";
      if (ans.cls.is_undetermined()) {
        std::cout << "type: undetermined (" << ans.cls.reason() << ")\n";
      } else if (model == SpaceModel::Circle) {
        std::cout << "type: " << render_circle(ans.cls) << "\n";
        if (!ans.cls.is_point()) {
          std::cout << "betti:";
          for (const auto& [dim, rank] : betti(ans.cls))
            std::cout << " b" << dim << "=" << rank;
          std::cout << "\n";
        }
      } else {
        if (ans.cls.is_point()) {
          std::cout << "type: point\n";
        } else {
          std::cout << "type:";
          bool first = true;
          for (const auto& t : ans.cls.terms()) {
            std::cout << (first ? " " : " v ") << "F(1)^" << t.alpha << "^S^" << t.beta;
            first = false;
          }
          std::cout << "\n";
        }
      }
      for (const auto& step : ans.trace) std::cout << "  via " << step << "\n";
    }
  } else if (*c_gra) {
    NumberPartition lambda = parse_weights(weights_arg);
    ResonanceGraph g = division_graph(lambda);
    if (as_dot) {
      std::cout << g.dot();
    } else if (as_json) {
      json j = base_json("graph");
      j["partition"] = lambda.str();
      j["vertices"] = g.vertex_count();
      json edges = json::array();
      for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
      j["edges"] = edges;
      json paths = json::array();
      for (const auto& p : complete_paths(g))
        paths.push_back({{"vertices", p.vertices}, {"length", p.length}, {"weight", p.weight}});
      j["complete_paths"] = paths;
      emit(j);
    } else {
      std::cout << g.vertex_count() << " vertices, " << g.edges.size() << " edges\n";
      for (const auto& e : g.edges)
        std::cout << "  " << e.from << " -> " << e.to << "  weight " << e.weight << "\n";
      auto paths = complete_paths(g);
      std::cout << paths.size() << " complete paths\n";
      for (const auto& p : paths) {
        std::cout << "  ";
        for (std::size_t i = 0; i < p.vertices.size(); ++i)
          std::cout << (i ? " -> " : "") << p.vertices[i];
        std::cout << "  (length " << p.length << ", weight " << p.weight << ")\n";
      }
    }
  } else if (*c_cpx) {
    Cut s = cut_from_weights(parse_weight_vector(weights_arg));
    ComplexityMode mode = mode_arg == "literal" ? ComplexityMode::LiteralProper
                                                : ComplexityMode::TranspositionsOnly;
    ComplexityResult r = complexity(s, mode, max_size);
    if (as_json) {
      json j = base_json("complexity");
      j["mode"] = mode_arg;
      j["search_bound"] = r.search_bound;
      if (r.value) {
        j["status"] = "determined";
        j["value"] = *r.value;
        std::vector<std::string> witness;
        for (const auto& p : r.witness) witness.push_back(p.str());
        j["witness"] = witness;
      } else {
        j["status"] = r.exhausted ? "lower_bound" : "unbounded";
        if (r.exhausted) j["lower_bound"] = r.search_bound + 1;
      }
      emit(j);
    } else {
      if (r.value) {
        std::cout << "complexity: " << *r.value << "\nwitness:";
        for (const auto& p : r.witness) std::cout << " " << p.str();
        std::cout << "\n";
      } else if (r.exhausted) {
        std::cout << "complexity: > " << r.search_bound << " (search bound hit)\n";
      } else {
        std::cout << "complexity: unbounded (no gluing set changes the span)\n";
      }
    }
  } else if (*c_enu) {
    auto reps = enumerate_resonances(enum_n);
    if (as_json) {
      json j = base_json("enumerate");
      j["n"] = enum_n;
      json classes = json::array();
      for (const auto& r : reps) {
        classes.push_back({{"element_count", r.cut().size()},
                           {"trivial", r.cut().is_trivial()},
                           {"symbolic", to_symbolic(r.cut()).str()}});
      }
      j["classes"] = classes;
      emit(j);
    } else {
      std::cout << reps.size() << " resonance classes on " << enum_n << " coordinates\n";
      for (const auto& r : reps)
        std::cout << "  " << to_symbolic(r.cut()).str() << "  (" << r.cut().size()
                  << " elements" << (r.cut().is_trivial() ? ", trivial" : "") << ")\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
