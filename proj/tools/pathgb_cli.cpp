// pathgb: Groebner machinery for quadratic path-algebra quotients.
//
// Subcommands work on scheme files (see the README for the input language):
//   ideal       defining polynomials of the variety GrAlg(T)
//   check       quadratic Buchberger criterion at a point
//   basis       nontip basis shared by every algebra in the variety
//   cartan      Cartan matrix and its determinant
//   betti       Ext dimensions of the simples (tip-chain counts)
//   gldim       global dimension
//   specialize  subvariety ideal with coordinates frozen by `set` entries
//   op          opposite scheme
//   tensor      tensor of two schemes at points, emitted as a scheme file

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pathgb/pathgb.hpp"

namespace {

using namespace pathgb;

constexpr int kExitMath = 1;
constexpr int kExitInput = 2;

struct CommonOpts {
  std::string file;
  bool json = false;
  std::vector<std::string> set_flags;
  std::string rename;
  unsigned threads = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemeError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedScheme {
  SchemeFile file;
  QuadraticScheme scheme;
  Specialization sets;
  std::string name;
};

LoadedScheme load(const CommonOpts& opts) {
  LoadedScheme out;
  out.name = std::filesystem::path(opts.file).stem().string();
  out.file = parse_scheme_file(read_file(opts.file));
  // --set flags append to the file's set entries; duplicates are rejected
  for (const auto& flag : opts.set_flags) {
    auto entry = parse_set_entry(flag);
    for (const auto* name : {&entry.tip.first, &entry.tip.second, &entry.nontip.first,
                             &entry.nontip.second})
      if (!out.file.vertices.empty() &&
          std::none_of(out.file.arrows.begin(), out.file.arrows.end(),
                       [&](const SchemeFile::ArrowDecl& a) { return a.name == *name; }))
        throw SchemeError("--set \"" + flag + "\": unknown arrow '" + *name + "'");
    out.file.sets.push_back(std::move(entry));
  }
  auto realized = realize(out.file);
  out.scheme = std::move(realized.scheme);
  out.sets = std::move(realized.sets);
  return out;
}

VarNames make_names(const QuadraticScheme& s, const std::string& rename) {
  if (rename.empty()) return VarNames(s);
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= rename.size()) {
    std::size_t comma = rename.find(',', start);
    if (comma == std::string::npos) comma = rename.size();
    names.push_back(rename.substr(start, comma - start));
    start = comma + 1;
  }
  return VarNames::renamed(s, std::move(names));
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_ideal(const CommonOpts& opts, bool with_invariants) {
  auto loaded = load(opts);
  const auto& s = loaded.scheme;
  auto names = make_names(s, opts.rename);
  auto ideal = variety_ideal(s, opts.threads);
  if (opts.json) {
    Json j = ideal_to_json(s, ideal, names, loaded.name);
    if (with_invariants) {
      auto basis = enumerate_nontips(s.quiver, s.tips);
      Json inv;
      inv["finite"] = basis.finite;
      if (basis.finite) {
        inv["dimension"] = *basis.total;
        inv["cartan_determinant"] = determinant(cartan_matrix(s.quiver, s.tips)).str();
        auto g = global_dimension(s.quiver, s.tips);
        if (g)
          inv["gldim"] = *g;
        else
          inv["gldim"] = "infinite";
      }
      j["invariants"] = std::move(inv);
    }
    emit(j);
  } else {
    for (const auto& g : ideal.generators) std::cout << render_poly(g, names) << '\n';
    std::cout << "variables: " << s.dimension() << '\n';
    if (with_invariants) {
      auto basis = enumerate_nontips(s.quiver, s.tips);
      if (basis.finite) {
        auto g = global_dimension(s.quiver, s.tips);
        std::cout << "dimension: " << *basis.total << '\n';
        std::cout << "cartan determinant: " << determinant(cartan_matrix(s.quiver, s.tips))
                  << '\n';
        std::cout << "gldim: " << (g ? std::to_string(*g) : std::string("infinite")) << '\n';
      } else {
        std::cout << "dimension: infinite\n";
      }
    }
  }
  return 0;
}

int cmd_check(const CommonOpts& opts) {
  auto loaded = load(opts);
  const auto& s = loaded.scheme;
  Point x = Point::zero(s);  // unset coordinates default to 0
  for (const auto& [id, v] : loaded.sets) x[id] = v;
  auto res = buchberger_check(s, x);
  if (opts.json) {
    Json j;
    j["scheme"] = loaded.name;
    j["groebner"] = res.groebner;
    if (!res.groebner) {
      Json cert;
      cert["t"] = s.quiver.path_name(s.tips[res.failed_overlap->t_index]);
      cert["t2"] = s.quiver.path_name(s.tips[res.failed_overlap->t2_index]);
      cert["residual"] = render_element(s.quiver, *res.certificate, *s.order);
      j["certificate"] = std::move(cert);
    }
    emit(j);
  } else {
    std::cout << "GROEBNER: " << (res.groebner ? "yes" : "no") << '\n';
    if (!res.groebner) {
      std::cout << "certificate: Ov(" << s.quiver.path_name(s.tips[res.failed_overlap->t_index])
                << ", " << s.quiver.path_name(s.tips[res.failed_overlap->t2_index])
                << ") reduces to " << render_element(s.quiver, *res.certificate, *s.order)
                << '\n';
    }
  }
  return res.groebner ? 0 : kExitMath;
}

int cmd_basis(const CommonOpts& opts, std::size_t max_length) {
  auto loaded = load(opts);
  const auto& s = loaded.scheme;
  auto basis = enumerate_nontips(s.quiver, s.tips, max_length);
  if (opts.json) {
    Json j;
    j["scheme"] = loaded.name;
    j["finite"] = basis.finite;
    if (basis.finite) j["total"] = *basis.total;
    Json levels = Json::array();
    for (const auto& level : basis.by_length) {
      Json paths = Json::array();
      for (const auto& p : level) paths.push_back(s.quiver.path_name(p));
      levels.push_back(std::move(paths));
    }
    j["by_length"] = std::move(levels);
    emit(j);
  } else {
    for (std::size_t k = 0; k < basis.by_length.size(); ++k) {
      std::cout << "N_" << k << " (" << basis.by_length[k].size() << "):";
      for (const auto& p : basis.by_length[k]) std::cout << ' ' << s.quiver.path_name(p);
      std::cout << '\n';
    }
    if (basis.finite)
      std::cout << "total: " << *basis.total << " (finite)\n";
    else
      std::cout << "total: infinite (listed up to length " << basis.by_length.size() - 1
                << ")\n";
  }
  return 0;
}

int cmd_cartan(const CommonOpts& opts) {
  auto loaded = load(opts);
  const auto& s = loaded.scheme;
  std::vector<std::vector<BigInt>> c;
  try {
    c = cartan_matrix(s.quiver, s.tips);
  } catch (const SchemeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  }
  if (opts.json) {
    Json j;
    j["scheme"] = loaded.name;
    Json rows = Json::array();
    for (const auto& row : c) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.str());
      rows.push_back(std::move(r));
    }
    j["cartan"] = std::move(rows);
    j["determinant"] = determinant(c).str();
    emit(j);
  } else {
    for (const auto& row : c) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
      std::cout << '\n';
    }
    std::cout << "determinant: " << determinant(c) << '\n';
  }
  return 0;
}

int cmd_betti(const CommonOpts& opts, std::size_t max_n) {
  auto loaded = load(opts);
  const auto& s = loaded.scheme;
  auto shape = resolution_shape(s.quiver, s.tips, max_n);
  auto dim_str = [](const std::optional<std::size_t>& d) {
    return d ? std::to_string(*d) : std::string("infinite");
  };
  if (opts.json) {
    Json j;
    j["scheme"] = loaded.name;
    Json degrees = Json::array();
    for (const auto& d : shape.degrees) {
      Json entry;
      entry["n"] = d.n;
      entry["total"] = d.total;
      Json cells = Json::array();
      for (const auto& [v, w, count] : d.ext_dims) {
        Json cell;
        cell["v"] = s.quiver.vertex_name(v);
        cell["w"] = s.quiver.vertex_name(w);
        cell["dim"] = count;
        cells.push_back(std::move(cell));
      }
      entry["ext"] = std::move(cells);
      degrees.push_back(std::move(entry));
    }
    j["betti"] = std::move(degrees);
    j["truncated"] = shape.truncated;
    Json pd, id;
    for (VertexId v = 0; v < static_cast<VertexId>(s.quiver.vertex_count()); ++v) {
      pd[s.quiver.vertex_name(v)] = dim_str(shape.pd_by_vertex[static_cast<std::size_t>(v)]);
      id[s.quiver.vertex_name(v)] = dim_str(shape.id_by_vertex[static_cast<std::size_t>(v)]);
    }
    j["pd"] = std::move(pd);
    j["id"] = std::move(id);
    emit(j);
  } else {
    for (const auto& d : shape.degrees) {
      std::cout << "n=" << d.n << ": total " << d.total;
      for (const auto& [v, w, count] : d.ext_dims)
        std::cout << "  " << s.quiver.vertex_name(v) << "->" << s.quiver.vertex_name(w) << ": "
                  << count;
      std::cout << '\n';
    }
    if (shape.truncated) std::cout << "(stopped at n=" << max_n << ")\n";
    std::cout << "pd:";
    for (VertexId v = 0; v < static_cast<VertexId>(s.quiver.vertex_count()); ++v)
      std::cout << ' ' << s.quiver.vertex_name(v) << '='
                << dim_str(shape.pd_by_vertex[static_cast<std::size_t>(v)]);
    std::cout << "\nid:";
    for (VertexId v = 0; v < static_cast<VertexId>(s.quiver.vertex_count()); ++v)
      std::cout << ' ' << s.quiver.vertex_name(v) << '='
                << dim_str(shape.id_by_vertex[static_cast<std::size_t>(v)]);
    std::cout << '\n';
  }
  return 0;
}

int cmd_gldim(const CommonOpts& opts) {
  auto loaded = load(opts);
  const auto& s = loaded.scheme;
  std::optional<std::size_t> g;
  try {
    g = global_dimension(s.quiver, s.tips);
  } catch (const SchemeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  }
  if (opts.json) {
    Json j;
    j["scheme"] = loaded.name;
    if (g)
      j["gldim"] = *g;
    else
      j["gldim"] = "infinite";
    emit(j);
  } else {
    if (g)
      std::cout << *g << '\n';
    else
      std::cout << "infinite\n";
  }
  return 0;
}

int cmd_specialize(const CommonOpts& opts) {
  auto loaded = load(opts);
  const auto& s = loaded.scheme;
  auto names = make_names(s, opts.rename);
  auto res = specialize(s, loaded.sets, opts.threads);
  if (opts.json) {
    Json j = ideal_to_json(s, res.ideal, names, loaded.name);
    Json free = Json::array();
    for (auto id : res.free_vars) free.push_back(names.by_id(id));
    j["free_variables"] = std::move(free);
    Json dist = Json::array();
    for (std::size_t i = 0; i < s.tips.size(); ++i) {
      Json d;
      d["tip"] = s.quiver.path_name(s.tips[i]);
      d["element"] = render_element(s.quiver, res.distinguished[i], *s.order);
      dist.push_back(std::move(d));
    }
    j["distinguished"] = std::move(dist);
    emit(j);
  } else {
    for (const auto& g : res.ideal.generators) std::cout << render_poly(g, names) << '\n';
    std::cout << "free variables: " << res.free_vars.size() << " of " << s.dimension() << '\n';
    for (std::size_t i = 0; i < s.tips.size(); ++i)
      std::cout << "distinguished: " << render_element(s.quiver, res.distinguished[i], *s.order)
                << '\n';
  }
  return 0;
}

int cmd_op(const CommonOpts& opts) {
  auto loaded = load(opts);
  auto op = opposite_scheme(loaded.scheme);
  if (opts.json) {
    Json j;
    j["scheme"] = loaded.name + "_op";
    Json arrows = Json::array();
    for (const auto& a : op.quiver.arrows()) {
      Json ar;
      ar["name"] = a.name;
      ar["src"] = op.quiver.vertex_name(a.src);
      ar["tgt"] = op.quiver.vertex_name(a.tgt);
      arrows.push_back(std::move(ar));
    }
    j["vertices"] = op.quiver.vertex_names();
    j["arrows"] = std::move(arrows);
    Json tips = Json::array();
    for (const auto& t : op.tips) tips.push_back(op.quiver.path_name(t));
    j["tips"] = std::move(tips);
    Json vars = Json::array();
    for (std::size_t id = 0; id < op.dimension(); ++id) vars.push_back(op.vars.var(id).name);
    j["variables"] = std::move(vars);
    j["order"] = "reversed";
    emit(j);
  } else {
    std::cout << "vertices:";
    for (const auto& v : op.quiver.vertex_names()) std::cout << ' ' << v;
    std::cout << '\n';
    for (const auto& a : op.quiver.arrows())
      std::cout << "arrow " << a.name << ": " << op.quiver.vertex_name(a.src) << " -> "
                << op.quiver.vertex_name(a.tgt) << '\n';
    std::cout << "order: reversed of " << loaded.name << '\n';
    std::cout << "tips:";
    for (std::size_t i = 0; i < op.tips.size(); ++i)
      std::cout << (i ? ", " : " ") << op.quiver.path_name(op.tips[i]);
    std::cout << '\n';
    std::cout << "variables: " << op.dimension() << '\n';
  }
  return 0;
}

int cmd_tensor(const CommonOpts& opts, const std::string& second_file, bool enveloping) {
  auto loaded = load(opts);
  Point xa = Point::zero(loaded.scheme);
  for (const auto& [id, v] : loaded.sets) xa[id] = v;

  TensorScheme tensor;
  if (enveloping) {
    try {
      tensor = enveloping_scheme(loaded.scheme, xa);
    } catch (const SchemeError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitMath;
    }
  } else {
    CommonOpts second = opts;
    second.file = second_file;
    second.set_flags.clear();
    auto loaded_b = load(second);
    Point xb = Point::zero(loaded_b.scheme);
    for (const auto& [id, v] : loaded_b.sets) xb[id] = v;
    tensor = tensor_scheme(loaded.scheme, xa, loaded_b.scheme, xb);
  }
  auto file = scheme_to_file(tensor.scheme, &tensor.point);
  if (opts.json) {
    Json j;
    j["scheme"] = loaded.name + (enveloping ? "_env" : "_tensor");
    j["file"] = render_scheme_file(file);
    j["variables"] = tensor.scheme.dimension();
    j["tips"] = tensor.scheme.tips.size();
    emit(j);
  } else {
    std::cout << render_scheme_file(file);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner varieties of quadratic path-algebra quotients"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::size_t max_length = 8;
  std::size_t max_n = 12;
  std::string second_file;
  bool enveloping = false;

  auto add_common = [&](CLI::App* cmd, bool with_sets = true) {
    cmd->add_option("file", opts.file, "scheme file")->required();
    cmd->add_flag("--json", opts.json, "JSON output");
    cmd->add_option("--threads", opts.threads, "parallel overlap reductions");
    cmd->add_option("--rename", opts.rename, "comma-separated variable names");
    if (with_sets)
      cmd->add_option("--set", opts.set_flags, "coordinate, e.g. \"z.y->y.z=1\"");
  };

  bool with_invariants = false;
  auto* ideal = app.add_subcommand("ideal", "defining ideal of GrAlg(T)");
  add_common(ideal, false);
  ideal->add_flag("--invariants", with_invariants, "append basis/Cartan/gldim summary");
  auto* check = app.add_subcommand("check", "Buchberger criterion at a point");
  add_common(check);
  auto* basis = app.add_subcommand("basis", "nontip basis");
  add_common(basis, false);
  basis->add_option("--max-length", max_length, "cap when the basis is infinite");
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix");
  add_common(cartan, false);
  auto* betti = app.add_subcommand("betti", "Ext dimensions of the simples");
  add_common(betti, false);
  betti->add_option("--max-n", max_n, "largest homological degree");
  auto* gldim = app.add_subcommand("gldim", "global dimension");
  add_common(gldim, false);
  auto* specialize = app.add_subcommand("specialize", "subvariety with frozen coordinates");
  add_common(specialize);
  auto* op = app.add_subcommand("op", "opposite scheme");
  add_common(op, false);
  auto* tensor = app.add_subcommand("tensor", "tensor of two schemes at points");
  add_common(tensor);
  tensor->add_option("second", second_file, "second scheme file");
  tensor->add_flag("--enveloping", enveloping, "tensor with the opposite scheme");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (ideal->parsed()) return cmd_ideal(opts, with_invariants);
    if (check->parsed()) return cmd_check(opts);
    if (basis->parsed()) return cmd_basis(opts, max_length);
    if (cartan->parsed()) return cmd_cartan(opts);
    if (betti->parsed()) return cmd_betti(opts, max_n);
    if (gldim->parsed()) return cmd_gldim(opts);
    if (specialize->parsed()) return cmd_specialize(opts);
    if (op->parsed()) return cmd_op(opts);
    if (tensor->parsed()) {
      if (!enveloping && second_file.empty()) {
        std::cerr << "error: tensor needs a second scheme file or --enveloping\n";
        return kExitInput;
      }
      return cmd_tensor(opts, second_file, enveloping);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SchemeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const QuiverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const OrderError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  }
  return 0;
}
