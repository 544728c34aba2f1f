// Command-line front end. JSON on stdout; exit 0 on success, 2 on domain
// errors (JSON error object on stdout), 1 on malformed input.

#include "liex/contraction.hpp"
#include "liex/error.hpp"
#include "liex/expansion.hpp"
#include "liex/identify.hpp"
#include "liex/io.hpp"
#include "liex/liealg.hpp"
#include "liex/search.hpp"
#include "liex/semigroup.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace liex;

namespace {

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

bool is_file(const std::string& ref) {
  std::error_code ec;
  return ref == "-" || (std::filesystem::exists(ref, ec) && !std::filesystem::is_directory(ref, ec));
}

StructureTensorQ load_algebra(const std::string& ref, const std::optional<std::string>& a,
                              const std::optional<std::string>& b) {
  if (is_file(ref)) return tensor_from_json(read_json(ref));
  if (ref.find('(') != std::string::npos) {
    const auto labels = parse_labels(ref);
    return catalog(labels.front().name, labels.front().a, labels.front().b);
  }
  return catalog(ref, a ? std::optional(parse_rational(*a)) : std::nullopt,
                 b ? std::optional(parse_rational(*b)) : std::nullopt);
}

SemigroupTable load_semigroup(const std::string& ref) {
  if (is_file(ref)) return semigroup_from_json(read_json(ref));
  return builtin_semigroup(ref);
}

LaurentBasisFamily load_family(const std::string& ref) {
  if (is_file(ref)) return family_from_json(read_json(ref));
  return builtin_family(ref);
}

int semigroup_bound() {
  const char* env = std::getenv("LIEX_MAX_ORDER");
  if (!env || !*env) return kDefaultMaxOrder;
  try {
    size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 1) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("LIEX_MAX_ORDER must be a positive integer, got '") + env + "'");
  }
}

std::set<SearchMode> parse_modes(const std::string& text) {
  if (text == "all") return all_search_modes();
  std::set<SearchMode> modes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) modes.insert(parse_search_mode(item));
  }
  if (modes.empty()) throw InputError("no search modes given");
  return modes;
}

Json lie_report_json(const StructureTensorQ& c) {
  const auto report = validate_lie(c);
  if (report.antisymmetry) {
    const auto& w = report.antisymmetry->ijk;
    throw Error("not-antisymmetric", "structure constants are not antisymmetric", {w[0] + 1, w[1] + 1, w[2] + 1});
  }
  if (report.jacobi) {
    const auto& w = report.jacobi->ijk;
    std::ostringstream residual;
    residual << vector_to_json(report.jacobi->residual).dump();
    throw Error("jacobi-violation", "structure constants violate the Jacobi identity",
                {w[0] + 1, w[1] + 1, w[2] + 1}, residual.str());
  }
  Json out{{"valid", true}, {"dim", c.dim()}, {"unimodular", is_unimodular(c)}};
  out["derived_dim"] = derived_algebra(c).dim();
  out["center_dim"] = center(c).dim();
  return out;
}

MatrixQ random_invertible(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    MatrixQ u(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) u(i, j) = entry(rng);
    }
    if (determinant<Rational>(u) != 0) return u;
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact S-expansion, contraction and classification tools for small Lie algebras", "liex"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string input = "-";
  std::optional<std::string> param_a, param_b;
  auto add_algebra = [&](CLI::App* sub, const char* names) {
    sub->add_option(std::string("input,") + names, input, "Catalog label (e.g. sl2R, \"A3.4(a=1/2)\"), JSON file, or - for stdin");
    sub->add_option("--a", param_a, "A3.4 parameter");
    sub->add_option("--b", param_b, "A3.5 parameter");
  };

  auto* cmd_catalog = app.add_subcommand("catalog", "List catalog labels, or print one as tensor JSON");
  std::string catalog_name;
  cmd_catalog->add_option("name", catalog_name, "Catalog label");
  cmd_catalog->add_option("--a", param_a, "A3.4 parameter");
  cmd_catalog->add_option("--b", param_b, "A3.5 parameter");

  auto* cmd_validate = app.add_subcommand("validate", "Check antisymmetry and Jacobi (or a semigroup table)");
  add_algebra(cmd_validate, "-i,--input,--algebra");
  std::string validate_semigroup_ref;
  cmd_validate->add_option("--semigroup", validate_semigroup_ref, "Validate this semigroup (name or file) instead");

  auto* cmd_expand = app.add_subcommand("expand", "S-expansion S x g");
  std::string semigroup_ref;
  cmd_expand->add_option("-s,--semigroup", semigroup_ref, "Semigroup name (S2, S3, S3a, Z<n>) or JSON file")->required();
  add_algebra(cmd_expand, "-i,--input,--algebra");

  auto* cmd_reduce = app.add_subcommand("reduce", "0_S-reduction of S x g, or reduction along a split");
  std::string reduce_mode = "zero", checked_text, hatted_text;
  cmd_reduce->add_option("--mode", reduce_mode, "zero | split")->check(CLI::IsMember({"zero", "split"}));
  cmd_reduce->add_option("-s,--semigroup", semigroup_ref, "Semigroup for --mode zero");
  cmd_reduce->add_option("--checked", checked_text, "Span kept, e.g. \"E1,E2\" (--mode split)");
  cmd_reduce->add_option("--hatted", hatted_text, "Complement projected away (--mode split)");
  add_algebra(cmd_reduce, "-i,--input,--algebra");

  auto* cmd_sub = app.add_subcommand("subalgebra", "Restrict the bracket to a span, in the given basis");
  std::string span_text;
  cmd_sub->add_option("--span", span_text, "Basis vectors, e.g. \"E1,E2,E6\" or \"E1-E2,E3\"")->required();
  add_algebra(cmd_sub, "-i,--input,--algebra");

  auto* cmd_identify = app.add_subcommand("identify", "Classify a 3-dim algebra with a basis-change witness");
  cmd_identify->add_option("--span", span_text, "Identify the subalgebra on this span instead");
  int trials = 0;
  std::uint64_t seed = 1;
  cmd_identify->add_option("--trials", trials, "Also run N random basis-change round trips");
  cmd_identify->add_option("--seed", seed, "Seed for --trials");
  add_algebra(cmd_identify, "-i,--input,--algebra");

  auto* cmd_contract = app.add_subcommand("contract", "eps -> 0 limit under a Laurent basis-change family");
  std::string source_ref, family_ref, target_label, post_ref;
  bool show_parametric = false;
  cmd_contract->add_option("--source", source_ref, "Source algebra (label or file)")->required();
  cmd_contract->add_option("--family", family_ref, "Family: uF, diag:1,0,1, identity:<n>, or JSON file")->required();
  cmd_contract->add_option("--target", target_label, "Expected limit class (label)");
  cmd_contract->add_option("--post", post_ref, "Basis change (JSON matrix file) applied to the limit before comparing");
  cmd_contract->add_flag("--parametric", show_parametric, "Include the eps-dependent constants");

  auto* cmd_search = app.add_subcommand("search", "Look for S-expansion connections source -> target");
  std::string from_ref, to_label, modes_text = "subalgebra";
  int max_order = 2;
  cmd_search->add_option("--from", from_ref, "Source algebra (label or file)")->required();
  cmd_search->add_option("--to", to_label, "Target class, e.g. A2.1+A1 or \"A3.4(a=1/2)\"")->required();
  cmd_search->add_option("--max-order", max_order, "Largest semigroup order");
  cmd_search->add_option("--modes", modes_text, "Comma list of subalgebra, zero_reduce, resonant, or all");

  auto* cmd_graph = app.add_subcommand("graph", "Connectivity matrix between catalog classes");
  std::string labels_text = "all3", dot_path;
  cmd_graph->add_option("--labels", labels_text, "Comma list of labels, or all3");
  cmd_graph->add_option("--max-order", max_order, "Largest semigroup order");
  cmd_graph->add_option("--modes", modes_text, "Comma list of modes, or all");
  cmd_graph->add_option("--dot", dot_path, "Write Graphviz DOT to this file (- for stdout instead of JSON)");

  auto* cmd_enum = app.add_subcommand("enumerate-semigroups", "All Abelian semigroups of one order");
  int order = 1;
  bool up_to_iso = false;
  cmd_enum->add_option("--order", order, "Semigroup order")->required();
  cmd_enum->add_flag("--up-to-iso", up_to_iso, "One representative per isomorphism class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const int bound = semigroup_bound();

    if (*cmd_catalog) {
      if (catalog_name.empty()) {
        emit(Json{{"names", catalog_names()}});
      } else {
        emit(tensor_to_json(load_algebra(catalog_name, param_a, param_b)));
      }
    } else if (*cmd_validate) {
      if (!validate_semigroup_ref.empty()) {
        const auto s = load_semigroup(validate_semigroup_ref);
        const auto report = validate_semigroup(s);
        if (!report.commutativity.empty()) {
          const auto& w = report.commutativity.front();
          throw Error("not-commutative", "semigroup table is not commutative", {w[0] + 1, w[1] + 1});
        }
        if (!report.associativity.empty()) {
          const auto& w = report.associativity.front();
          throw Error("not-associative", "semigroup table is not associative", {w[0] + 1, w[1] + 1, w[2] + 1});
        }
        Json out{{"valid", true}, {"order", s.order()}};
        if (const auto z = zero_element(s)) out["zero"] = *z + 1;
        emit(out);
      } else {
        emit(lie_report_json(load_algebra(input, param_a, param_b)));
      }
    } else if (*cmd_expand) {
      emit(tensor_to_json(s_expand(load_semigroup(semigroup_ref), load_algebra(input, param_a, param_b))));
    } else if (*cmd_reduce) {
      const auto c = load_algebra(input, param_a, param_b);
      if (reduce_mode == "zero") {
        if (semigroup_ref.empty()) throw InputError("--mode zero needs --semigroup");
        emit(tensor_to_json(zero_reduce(load_semigroup(semigroup_ref), c)));
      } else {
        if (checked_text.empty() || hatted_text.empty()) throw InputError("--mode split needs --checked and --hatted");
        emit(tensor_to_json(reduce_decomposition(c, SubspaceQ::from_rows(parse_span(checked_text, c.dim())),
                                                 SubspaceQ::from_rows(parse_span(hatted_text, c.dim())))));
      }
    } else if (*cmd_sub) {
      const auto c = load_algebra(input, param_a, param_b);
      emit(tensor_to_json(subalgebra_in_basis(c, parse_span(span_text, c.dim()))));
    } else if (*cmd_identify) {
      const auto ambient = load_algebra(input, param_a, param_b);
      MatrixQ rows = MatrixQ::Identity(ambient.dim(), ambient.dim());
      StructureTensorQ c = ambient;
      if (!span_text.empty()) {
        rows = parse_span(span_text, ambient.dim());
        c = subalgebra_in_basis(ambient, rows);
      }
      const auto id = identify3(c);
      Json out = identification_to_json(id);
      if (!span_text.empty()) out["basis"] = matrix_to_json(MatrixQ(id.witness * rows));
      out["signature"] = {{"derived_dim", derived_algebra(c).dim()},
                          {"center_dim", center(c).dim()},
                          {"unimodular", is_unimodular(c)}};
      if (trials > 0) {
        std::mt19937_64 rng(seed);
        int passed = 0;
        for (int t = 0; t < trials; ++t) {
          const auto moved = change_basis(c, random_invertible(rng, 3));
          const auto again = identify3(moved);
          if (again.label == id.label && again.a == id.a && again.b == id.b &&
              change_basis(moved, again.witness) == catalog(again.label, again.a, again.b)) {
            ++passed;
          }
        }
        out["trials"] = {{"seed", seed}, {"count", trials}, {"passed", passed}};
      }
      emit(out);
    } else if (*cmd_contract) {
      const auto source = load_algebra(source_ref, std::nullopt, std::nullopt);
      const auto family = load_family(family_ref);
      const auto parametric = transform_parametric(source, family);
      const auto lim = limit(parametric);
      if (!lim.converges()) {
        const auto& d = *lim.divergence;
        throw Error("divergent-limit", "entry diverges as eps -> 0",
                    {static_cast<long>(d.i + 1), static_cast<long>(d.j + 1), static_cast<long>(d.k + 1), d.valuation});
      }
      Json out{{"converges", true}};
      if (const auto v = min_valuation(parametric)) out["min_valuation"] = *v;
      out["limit"] = tensor_to_json(*lim.tensor);
      if (source.dim() == 3) out["limit_class"] = describe(identify3(*lim.tensor));
      if (!target_label.empty()) {
        const auto target = parse_labels(target_label).front();
        std::optional<MatrixQ> post;
        if (!post_ref.empty()) post = matrix_from_json(read_json(post_ref));
        const auto report = verify_contraction(source, family, target.name, target.a, target.b, post);
        out["target"] = target.display();
        out["holds"] = report.holds;
      }
      if (show_parametric) out["parametric"] = laurent_tensor_to_json(parametric);
      emit(out);
    } else if (*cmd_search) {
      const auto source = load_algebra(from_ref, std::nullopt, std::nullopt);
      const auto target = parse_labels(to_label).front();
      const auto result = find_connection(source, target.name, target.a, target.b, max_order, parse_modes(modes_text), bound);
      Json list = Json::array();
      for (const auto& w : result.witnesses) list.push_back(witness_to_json(w));
      emit(Json{{"target", target.display()},
                {"max_order", max_order},
                {"found", !result.witnesses.empty()},
                {"count", result.witnesses.size()},
                {"space", space_to_json(result.space)},
                {"witnesses", list}});
    } else if (*cmd_graph) {
      const auto report = connectivity_matrix(parse_labels(labels_text), max_order, parse_modes(modes_text), bound);
      const std::string dot = to_dot(report);
      if (dot_path == "-") {
        std::cout << dot;
        return 0;
      }
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw InputError("cannot write " + dot_path);
        out << dot;
      }
      Json labels = Json::array();
      for (const auto& l : report.labels) labels.push_back(l.display());
      Json edges = Json::array();
      for (const auto& e : report.edges) {
        Json edge{{"from", report.labels[static_cast<size_t>(e.from)].display()},
                  {"to", report.labels[static_cast<size_t>(e.to)].display()},
                  {"found", e.witness.has_value()}};
        if (e.witness) edge["witness"] = witness_to_json(*e.witness);
        edges.push_back(edge);
      }
      Json spaces = Json::array();
      for (const auto& s : report.spaces) spaces.push_back(space_to_json(s));
      emit(Json{{"labels", labels}, {"max_order", max_order}, {"edges", edges}, {"spaces", spaces}});
    } else if (*cmd_enum) {
      const auto list = enumerate_abelian_semigroups(order, up_to_iso, bound);
      Json tables = Json::array();
      for (const auto& s : list) tables.push_back(semigroup_to_json(s));
      emit(Json{{"order", order}, {"up_to_iso", up_to_iso}, {"count", list.size()}, {"semigroups", tables}});
    }
  } catch (const Error& e) {
    Json out{{"code", e.code()}, {"message", e.what()}};
    if (!e.witness().empty()) out["witness"] = e.witness();
    if (!e.detail().empty()) out["detail"] = e.detail();
    emit(out);
    return 2;
  } catch (const InputError& e) {
    std::cerr << "liex: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "liex: malformed JSON input: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
