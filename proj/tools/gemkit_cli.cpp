// gemkit command-line tool. Talks to the library exclusively through the C
// interface in gemkit/gemkit.h.
//
// Exit codes: 0 success or verdict true, 1 verdict false, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "gemkit/gemkit.h"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

struct GraphDeleter {
  void operator()(gemkit_graph* g) const { gemkit_graph_free(g); }
};
using Graph = std::unique_ptr<gemkit_graph, GraphDeleter>;

// Failure reported by the library or by argument handling.
struct InputError {
  std::string name;
  std::string message;
};

void check(int status) {
  if (status != GEMKIT_OK) throw InputError{gemkit_status_name(status), gemkit_last_error()};
}

json take_json(char* raw) {
  json out = json::parse(raw);
  gemkit_string_free(raw);
  return out;
}

std::string take_string(char* raw) {
  std::string out(raw);
  gemkit_string_free(raw);
  return out;
}

Graph load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"IO_ERROR", "cannot read " + path};
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  gemkit_graph* g = nullptr;
  const int status = gemkit_graph_parse(text.data(), text.size(), &g);
  if (status != GEMKIT_OK) throw InputError{gemkit_status_name(status), path + ": " + gemkit_last_error()};
  return Graph(g);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{"IO_ERROR", "cannot write " + path};
  out << text;
}

std::string half(const json& h) { return h.at("value").get<std::string>(); }

std::string joined(const json& arr, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i > 0) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

struct Context {
  bool json_mode = false;
};

// Emits a gem-producing command's result: gem text to `out_path` (stdout
// when empty) and, in JSON mode, the report on stdout.
int emit_graph(const Context& ctx, const gemkit_graph* g, const std::string& out_path, json extra = json::object()) {
  char* raw = nullptr;
  check(gemkit_graph_serialize(g, &raw));
  const std::string text = take_string(raw);
  if (ctx.json_mode) {
    check(gemkit_report_gem(g, &raw));
    json report = take_json(raw);
    for (auto& [key, value] : extra.items()) report[key] = value;
    if (!out_path.empty() && out_path != "-") write_text(out_path, text);
    std::cout << report.dump(2) << '\n';
  } else {
    write_text(out_path, text);
    for (auto& [key, value] : extra.items()) std::cerr << key << ": " << value.dump() << '\n';
  }
  return kExitTrue;
}

void print_census(const json& r) {
  std::cout << "dim " << r["dim"] << ", vertices " << r["vertices"] << "\n";
  std::cout << "p = " << r["p"] << ", p_bar = " << r["p_bar"] << ", p_dot = " << r["p_dot"] << "\n";
  std::cout << "residue counts g:\n";
  for (auto& [key, value] : r["residue_counts"].items()) std::cout << "  g_" << key << " = " << value << "\n";
  std::cout << "bicolored cycles C:\n";
  for (auto& [key, value] : r["cycle_counts"].items()) std::cout << "  C_" << key << " = " << value << "\n";
  std::cout << "f-vector: (" << joined(r["f_vector"], ", ") << "), chi(K) = " << r["euler_characteristic"] << "\n";
  std::cout << "boundary components h = " << r["h"] << ", complex vertices " << r["f_vector"][0] << " (crystallization target "
            << r["crystallization_vertex_target"] << ": " << (r["crystallization_vertex_condition"].get<bool>() ? "yes" : "no")
            << ")\n";
  std::cout << "bipartite: " << r["bipartite"] << ", contracted: " << r["contracted"]
            << ", boundary-contracted: " << r["boundary_contracted"] << "\n";
}

void print_genus(const json& r) {
  std::cout << "eps        chi  holes  rho\n";
  for (const auto& row : r["rows"])
    std::cout << "(" << joined(row["eps"], ",") << ")  " << row["chi"] << "  " << row["holes"] << "  " << half(row["rho"])
              << "\n";
  std::cout << "rho = " << half(r["rho"]) << " at eps = (" << joined(r["argmin"], ",") << ")\n";
}

void print_verify(const json& r) {
  if (r["mode"] == "closed") {
    std::cout << "closed gem: manifold " << r["manifold"] << ", contracted " << r["contracted"] << "\n";
  } else {
    std::cout << "h = " << r["h"] << "\n";
    std::cout << "(i)   " << (r["condition_i"]["holds"].get<bool>() ? "pass" : "FAIL")
              << "  connected " << r["condition_i"]["connected"] << ", boundary-contracted "
              << r["condition_i"]["boundary_contracted"] << "\n";
    std::cout << "(ii)  " << (r["condition_ii"]["holds"].get<bool>() ? "pass" : "FAIL") << "  differences ("
              << joined(r["condition_ii"]["differences"], ", ") << "), expected " << half(r["condition_ii"]["expected"])
              << "\n";
    std::cout << "(iii) " << (r["condition_iii"]["holds"].get<bool>() ? "pass" : "FAIL") << "  g01+g02+g12 = "
              << r["condition_iii"]["sum"] << ", 2+p = " << r["condition_iii"]["expected"] << "\n";
  }
  for (const auto& d : r["diagnostics"]) std::cout << "  " << d.get<std::string>() << "\n";
  std::cout << "verdict: " << (r["verdict"].get<bool>() ? "crystallization" : "not a crystallization") << "\n";
}

void print_bounds(const json& r) {
  for (const auto& c : r["certificates"])
    std::cout << c["kind"].get<std::string>() << ": genus " << half(c["genus_used"]) << ", h " << c["h"]
              << ", lower bound " << half(c["lower_bound"]) << ", p-1 = " << c["complexity_of_graph"] << ", slack "
              << half(c["slack"]) << (c["holds"].get<bool>() ? "" : "  VIOLATED") << "\n    "
              << c["statement"].get<std::string>() << "\n";
}

void print_handlebody(const json& r) {
  std::cout << "boundary genus n = " << half(r["n"]) << "\n";
  std::cout << "g01 = " << r["g01"] << ", g02 = " << r["g02"] << ", g12 = " << r["g12"] << "\n";
  std::cout << "minimum g_" << r["witness"][0] << r["witness"][1] << " = " << r["minimum"] << " vs 1+n = "
            << half(r["threshold"]) << "\n";
  std::cout << (r["handlebody"].get<bool>() ? "handlebody" : "not a handlebody") << "\n";
}

void print_relations(const json& r) {
  std::cout << "n = " << half(r["n"]) << "\n";
  for (const auto& row : r["rows"])
    std::cout << "i=" << row["i"] << " {j,k}={" << row["j"] << "," << row["k"] << "}: g_i3=" << row["g_i3"]
              << " g_jk=" << row["g_jk"] << " C_i3=" << row["c_i3"] << "  (i) " << row["i_holds"] << " (ii) "
              << row["ii_holds"] << " (iii) " << row["iii_holds"] << "\n";
  std::cout << (r["all_hold"].get<bool>() ? "all relations hold" : "relations FAIL") << "\n";
}

int report(const Context& ctx, const json& r, void (*printer)(const json&), int code = kExitTrue) {
  if (ctx.json_mode)
    std::cout << r.dump(2) << '\n';
  else
    printer(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gemkit: crystallizations of compact 3-manifolds with boundary"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_flag("--json", ctx.json_mode, "Print machine-readable JSON reports");

  std::function<int()> action;
  std::string file, file2, out_path, seed_name, surface_file;
  int v1 = 0, v2 = 0, x = 0, y = 0, color = 0, genus = 0;
  bool nonorientable = false, force_closed = false, force_boundary = false, open_weld = false;

  auto* verify = app.add_subcommand("verify", "Check the crystallization conditions (closed or with boundary)");
  verify->add_option("file", file, "Gem file")->required();
  auto* closed_flag = verify->add_flag("--closed", force_closed, "Force the closed-gem check");
  verify->add_flag("--boundary", force_boundary, "Force the boundary check")->excludes(closed_flag);
  verify->callback([&] {
    action = [&] {
      Graph g = load(file);
      const int mode = force_closed ? GEMKIT_VERIFY_CLOSED : force_boundary ? GEMKIT_VERIFY_BOUNDARY : GEMKIT_VERIFY_AUTO;
      int verdict = 0;
      char* raw = nullptr;
      check(gemkit_report_verify(g.get(), mode, &verdict, &raw));
      return report(ctx, take_json(raw), print_verify, verdict ? kExitTrue : kExitFalse);
    };
  });

  auto simple = [&](const char* name, const char* help, int (*fn)(const gemkit_graph*, char**),
                    void (*printer)(const json&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Gem file")->required();
    sub->callback([&, fn, printer] {
      action = [&, fn, printer] {
        Graph g = load(file);
        char* raw = nullptr;
        check(fn(g.get(), &raw));
        return report(ctx, take_json(raw), printer);
      };
    });
  };
  simple("genus", "Regular genus over all color permutations", gemkit_report_genus, print_genus);
  simple("census", "Residue and cycle counts, vertex statistics, f-vector", gemkit_report_census, print_census);
  simple("bounds", "Gem-complexity lower-bound certificates", gemkit_report_bounds, print_bounds);

  auto* handlebody = app.add_subcommand("handlebody", "Handlebody criterion for connected boundary");
  handlebody->add_option("file", file, "Gem file")->required();
  handlebody->callback([&] {
    action = [&] {
      Graph g = load(file);
      int verdict = 0;
      char* raw = nullptr;
      check(gemkit_report_handlebody(g.get(), &verdict, &raw));
      return report(ctx, take_json(raw), print_handlebody, verdict ? kExitTrue : kExitFalse);
    };
  });

  auto* relations = app.add_subcommand("relations", "Residue/cycle relations for connected boundary");
  relations->add_option("file", file, "Gem file")->required();
  relations->callback([&] {
    action = [&] {
      Graph g = load(file);
      int holds = 0;
      char* raw = nullptr;
      check(gemkit_report_relations(g.get(), &holds, &raw));
      return report(ctx, take_json(raw), print_relations, holds ? kExitTrue : kExitFalse);
    };
  });

  auto* boundary = app.add_subcommand("boundary", "Extract the boundary graph components as gem files");
  boundary->add_option("file", file, "Gem file")->required();
  boundary->add_option("-o,--output", out_path, "Output prefix: component k goes to <prefix>-<k>.gem");
  boundary->callback([&] {
    action = [&] {
      Graph g = load(file);
      char* raw = nullptr;
      check(gemkit_report_boundary(g.get(), &raw));
      const json r = take_json(raw);
      const int h = r["h"].get<int>();
      if (!out_path.empty())
        for (int k = 0; k < h; ++k)
          write_text(out_path + "-" + std::to_string(k) + ".gem", r["components"][k]["text"].get<std::string>());
      if (ctx.json_mode) {
        std::cout << r.dump(2) << '\n';
      } else if (out_path.empty()) {
        for (int k = 0; k < h; ++k)
          std::cout << "# boundary component " << k << "\n" << r["components"][k]["text"].get<std::string>();
      } else {
        std::cout << h << " boundary component(s) written\n";
      }
      return kExitTrue;
    };
  });

  auto* generate = app.add_subcommand("generate", "Write a generated crystallization");
  generate->require_subcommand(1);
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--output", out_path, "Output gem file (default stdout)"); };

  auto* gen_handlebody = generate->add_subcommand("handlebody", "Genus-n handlebody on 6n+2 vertices");
  gen_handlebody->add_option("--genus", genus, "Genus n")->required();
  gen_handlebody->add_flag("--nonorientable", nonorientable);
  add_out(gen_handlebody);
  gen_handlebody->callback([&] {
    action = [&] {
      gemkit_graph* g = nullptr;
      check(gemkit_generate_handlebody(genus, nonorientable, &g));
      return emit_graph(ctx, Graph(g).get(), out_path);
    };
  });

  auto* gen_surface = generate->add_subcommand("surface", "Closed surface gem (genus, or crosscaps if non-orientable)");
  gen_surface->add_option("--genus", genus, "Genus, or crosscap count with --nonorientable")->required();
  gen_surface->add_flag("--nonorientable", nonorientable);
  add_out(gen_surface);
  gen_surface->callback([&] {
    action = [&] {
      gemkit_graph* g = nullptr;
      check(gemkit_generate_surface(genus, nonorientable, &g));
      return emit_graph(ctx, Graph(g).get(), out_path);
    };
  });

  auto* gen_product = generate->add_subcommand("product", "Product of a surface gem with an interval");
  gen_product->add_option("--surface", surface_file, "Surface gem file")->required();
  add_out(gen_product);
  gen_product->callback([&] {
    action = [&] {
      Graph s = load(surface_file);
      gemkit_graph* g = nullptr;
      check(gemkit_generate_product(s.get(), &g));
      return emit_graph(ctx, Graph(g).get(), out_path);
    };
  });

  auto* gen_seed = generate->add_subcommand("seed", "8-vertex closed seed: S2xS1, RP3, TWISTED_S2xS1");
  gen_seed->add_option("name", seed_name)->required();
  add_out(gen_seed);
  gen_seed->callback([&] {
    action = [&] {
      int seed = 0;
      check(gemkit_seed_from_name(seed_name.c_str(), &seed));
      gemkit_graph* g = nullptr;
      check(gemkit_generate_seed(seed, &g));
      return emit_graph(ctx, Graph(g).get(), out_path);
    };
  });

  auto* gen_nonhb = generate->add_subcommand("nonhandlebody", "Handlebody summed with a closed seed (6n+8 vertices)");
  gen_nonhb->add_option("--genus", genus, "Genus n of the boundary")->required();
  gen_nonhb->add_option("--seed", seed_name, "S2xS1, RP3 or TWISTED_S2xS1")->required();
  gen_nonhb->add_flag("--nonorientable", nonorientable);
  add_out(gen_nonhb);
  gen_nonhb->callback([&] {
    action = [&] {
      int seed = 0;
      check(gemkit_seed_from_name(seed_name.c_str(), &seed));
      gemkit_graph* g = nullptr;
      check(gemkit_generate_non_handlebody(genus, nonorientable, seed, &g));
      return emit_graph(ctx, Graph(g).get(), out_path);
    };
  });

  auto* sum = app.add_subcommand("sum", "Graph connected sum at two vertices");
  sum->add_option("file1", file)->required();
  sum->add_option("v1", v1)->required();
  sum->add_option("file2", file2)->required();
  sum->add_option("v2", v2)->required();
  sum->add_flag("--open-weld", open_weld, "Leave a lone color-d partner as a boundary vertex");
  add_out(sum);
  sum->callback([&] {
    action = [&] {
      Graph a = load(file), b = load(file2);
      gemkit_graph* g = nullptr;
      char* raw = nullptr;
      check(gemkit_connected_sum(a.get(), v1, b.get(), v2, open_weld, &g, &raw));
      Graph owned(g);
      json r = take_json(raw);
      json extra{{"first_map", r["first_map"]}, {"second_map", r["second_map"]},
                 {"unwelded_colors", r["unwelded_colors"]}, {"warnings", r["warnings"]}};
      if (!ctx.json_mode) {
        std::cerr << "relabeling (first): " << joined(r["first_map"]) << "\n";
        std::cerr << "relabeling (second): " << joined(r["second_map"]) << "\n";
        for (const auto& w : r["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
        char* text = nullptr;
        check(gemkit_graph_serialize(owned.get(), &text));
        write_text(out_path, take_string(text));
        return kExitTrue;
      }
      return emit_graph(ctx, owned.get(), out_path, extra);
    };
  });

  auto* dipole = app.add_subcommand("dipole", "1-dipole moves");
  dipole->require_subcommand(1);
  auto* dlist = dipole->add_subcommand("list", "List 1-dipole sites");
  dlist->add_option("file", file)->required();
  dlist->callback([&] {
    action = [&] {
      Graph g = load(file);
      char* raw = nullptr;
      check(gemkit_report_dipoles(g.get(), &raw));
      return report(ctx, take_json(raw), [](const json& r) {
        std::cout << r["sites"].size() << " site(s)\n";
        for (const auto& s : r["sites"])
          std::cout << "  " << s["x"] << " " << s["y"] << " color " << s["color"] << "\n";
      });
    };
  });
  auto* dcancel = dipole->add_subcommand("cancel", "Cancel the 1-dipole x-y of color j");
  dcancel->add_option("file", file)->required();
  dcancel->add_option("x", x)->required();
  dcancel->add_option("y", y)->required();
  dcancel->add_option("j", color)->required();
  add_out(dcancel);
  dcancel->callback([&] {
    action = [&] {
      Graph g = load(file);
      gemkit_graph* out = nullptr;
      char* raw = nullptr;
      check(gemkit_cancel_dipole(g.get(), x, y, color, &out, &raw));
      Graph owned(out);
      json r = take_json(raw);
      return emit_graph(ctx, owned.get(), out_path, json{{"relabel", r["relabel"]}, {"unwelded_colors", r["unwelded_colors"]}});
    };
  });
  auto* dreduce = dipole->add_subcommand("reduce", "Cancel 1-dipoles until none remain");
  dreduce->add_option("file", file)->required();
  add_out(dreduce);
  dreduce->callback([&] {
    action = [&] {
      Graph g = load(file);
      gemkit_graph* out = nullptr;
      char* raw = nullptr;
      check(gemkit_reduce_dipoles(g.get(), &out, &raw));
      Graph owned(out);
      json r = take_json(raw);
      return emit_graph(ctx, owned.get(), out_path, json{{"cancelled", r["cancelled"]}, {"relabel", r["relabel"]}});
    };
  });
  auto* dinsert = dipole->add_subcommand("insert", "Insert a 1-dipole of color j at vertex v");
  dinsert->add_option("file", file)->required();
  dinsert->add_option("v", v1)->required();
  dinsert->add_option("j", color)->required();
  add_out(dinsert);
  dinsert->callback([&] {
    action = [&] {
      Graph g = load(file);
      gemkit_graph* out = nullptr;
      check(gemkit_insert_dipole(g.get(), v1, color, &out));
      return emit_graph(ctx, Graph(out).get(), out_path);
    };
  });

  auto* join = app.add_subcommand("join", "Connect the boundary components with color-3 edges");
  join->add_option("file", file)->required();
  add_out(join);
  join->callback([&] {
    action = [&] {
      Graph g = load(file);
      gemkit_graph* out = nullptr;
      char* raw = nullptr;
      check(gemkit_join_boundary(g.get(), &out, &raw));
      Graph owned(out);
      json r = take_json(raw);
      return emit_graph(ctx, owned.get(), out_path, json{{"added_edges", r["added_edges"]}});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (const InputError& e) {
    if (ctx.json_mode) {
      std::cout << json{{"schema", "gemkit.error/1"}, {"error", e.name}, {"message", e.message}}.dump(2) << '\n';
    }
    std::cerr << "error: " << e.name << ": " << e.message << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
