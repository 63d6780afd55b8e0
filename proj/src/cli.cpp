#include "gradeforge/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradeforge/io.hpp"

namespace gradeforge::cli {

namespace {

struct Options {
  bool json = false;
  bool table = false;
  std::uint32_t field = 2;
  std::optional<std::uint64_t> budget;

  bool zero = false;
  bool nonzero_only = false;
  bool prefunctors = false;
  bool functors = false;

  std::size_t census_order = 0;
  std::vector<std::string> operands;
  std::string formula;
};

// A command result: the exit code plus what to print in either style.
struct Output {
  std::string json;
  std::string table;
  int code = kOk;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Input being parsed, for diagnostics.
std::string current_input;

io::Document load(std::string const& path) {
  current_input = path;
  auto doc = io::parse_document(read_file(path));
  current_input.clear();
  return doc;
}

std::string where() { return current_input.empty() ? "" : current_input + ": "; }

bool is_category(io::Document const& d) { return d.kind == io::DocumentKind::category; }

FiniteMagma const& as_magma(io::Document const& d, std::string const& path) {
  if (d.kind != io::DocumentKind::magma) {
    throw Error(ErrorCode::parse_error, path + ": expected a magma");
  }
  return std::get<FiniteMagma>(d.payload);
}

FinitePrecategory const& as_category(io::Document const& d, std::string const& path) {
  if (!is_category(d)) throw Error(ErrorCode::parse_error, path + ": expected a category");
  return std::get<FinitePrecategory>(d.payload);
}

std::string join(std::vector<std::size_t> const& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

template <class T>
std::vector<std::size_t> widen(std::vector<T> const& xs) {
  return {xs.begin(), xs.end()};
}

std::string set_text(ElementSet const& s) { return "{" + join(s.members()) + "}"; }

std::string relation_text(PairRelation const& r) {
  std::string s = "{";
  bool first = true;
  for (auto [g, h] : r.pairs()) {
    s += (first ? "(" : " (") + std::to_string(g) + "," + std::to_string(h) + ")";
    first = false;
  }
  return s + "}";
}

std::string family_text(ElementaryFamily const& w) {
  std::string s;
  for (std::size_t h = 0; h < w.parts.size(); ++h)
    s += (h ? " " : "") + std::to_string(h) + ":" + set_text(w.parts[h]);
  return s;
}

std::string count_line(std::size_t n) { return "count " + std::to_string(n) + "\n"; }

template <class T, class F>
std::string lines(std::vector<T> const& xs, F render) {
  std::string s = count_line(xs.size());
  for (auto const& x : xs) s += render(x) + "\n";
  return s;
}

Output census_cmd(Options const& o, Budget const& budget) {
  auto magmas = census(o.census_order, budget);
  Output r{io::emit_magmas(magmas), count_line(magmas.size())};
  for (auto const& m : magmas) r.table += io::print_magma(m) + "\n";
  return r;
}

Output hom_cmd(Options const& o, Budget const& budget) {
  auto g = load(o.operands[0]);
  auto h = load(o.operands[1]);
  auto const& G = as_magma(g, o.operands[0]);
  auto const& H = as_magma(h, o.operands[1]);
  auto maps = o.zero ? enumerate_zero_homs(G, H, budget) : enumerate_homs(G, H, budget);
  return {io::emit_maps(maps), lines(maps, [](ElementMap const& f) { return join(widen(f)); })};
}

Output submagmas_cmd(Options const& o, Budget const& budget) {
  auto g = load(o.operands[0]);
  auto const& G = as_magma(g, o.operands[0]);
  if (o.operands.size() == 1) {
    if (o.zero) {
      throw Error(ErrorCode::missing_zero, "--zero needs a second operand");
    }
    auto sets = enumerate_submagmas(G, budget);
    return {io::emit_sets(sets), lines(sets, set_text)};
  }
  auto h = load(o.operands[1]);
  auto const& H = as_magma(h, o.operands[1]);
  std::vector<PairRelation> relations;
  if (o.zero) {
    relations = enumerate_zero_submagmas(G, H, ZeroRow::minimal, budget);
  } else {
    for (auto const& s : enumerate_submagmas(product_magma(G, H, budget), budget))
      relations.push_back(PairRelation::from_bits(G.order(), H.order(), s));
  }
  return {io::emit_relations(relations), lines(relations, relation_text)};
}

Output functors_cmd(Options const& o, Budget const& budget) {
  auto a = load(o.operands[0]);
  auto b = load(o.operands[1]);
  auto const& from = as_category(a, o.operands[0]);
  auto const& to = as_category(b, o.operands[1]);
  auto maps = o.prefunctors ? enumerate_prefunctors(from, to, budget)
                            : enumerate_functors(from, to, budget);
  return {io::emit_morphism_maps(maps), lines(maps, [](MorphismMap const& f) {
            return "objects " + join(widen(f.objects)) + " | morphisms " +
                   join(widen(f.morphisms));
          })};
}

// Zero variants of magma operands live on the contracted algebra, where the
// magma's zero is the ring's zero.
AlgebraPresentation algebra_of(io::Document const& d, std::uint32_t field, bool contracted) {
  if (is_category(d)) {
    return AlgebraPresentation::category_algebra(std::get<FinitePrecategory>(d.payload), field);
  }
  if (d.kind == io::DocumentKind::magma) {
    auto const& g = std::get<FiniteMagma>(d.payload);
    return contracted ? AlgebraPresentation::contracted_algebra(g, field)
                      : AlgebraPresentation::magma_algebra(g, field);
  }
  throw Error(ErrorCode::parse_error, "algebra must be given by a magma or a category");
}

Output family_cmd(Options const& o, Budget const& budget, bool filters) {
  auto a = load(o.operands[0]);
  auto b = load(o.operands[1]);
  if (is_category(a) != is_category(b)) {
    throw Error(ErrorCode::basis_mismatch, "operands must both be magmas or both categories");
  }
  bool contracted = o.zero && !is_category(a);
  auto algebra = algebra_of(a, o.field, contracted);
  io::FamilyReport report{filters ? "filter" : "grading", "", contracted, {}};
  if (is_category(a)) {
    auto const& from = std::get<FinitePrecategory>(a.payload);
    auto const& to = std::get<FinitePrecategory>(b.payload);
    report.target_text = io::print_category(to);
    report.families =
        filters ? enumerate_elementary_filters(from, to, budget)
                : enumerate_elementary_gradings(
                      from, to, o.prefunctors ? CategoryMaps::prefunctors : CategoryMaps::functors,
                      budget);
  } else {
    auto const& H = as_magma(b, o.operands[1]);
    report.target_text = io::print_magma(H);
    report.families = filters ? enumerate_elementary_filters(algebra, H, o.zero, budget)
                              : enumerate_elementary_gradings(algebra, H, o.zero, budget);
  }
  if (o.nonzero_only) {
    std::erase_if(report.families,
                  [&](ElementaryFamily const& w) { return !is_nonzero(algebra, w).holds; });
  }
  return {io::emit_family_report(report), lines(report.families, family_text)};
}

Output verify_cmd(Options const& o) {
  auto a = load(o.operands[0]);
  current_input = o.operands[1];
  auto report = io::parse_family_report(read_file(o.operands[1]));
  current_input.clear();
  auto algebra = algebra_of(a, o.field, report.contracted);
  std::string required = report.kind == "grading" ? "grading" : "filter";
  if (report.kind != "grading" && report.kind != "filter") {
    throw ParseError(1, 1, "unknown family kind '" + report.kind + "'");
  }

  Output r;
  std::vector<std::string> items;
  for (auto const& w : report.families) {
    auto verdicts = verify_all(algebra, w);
    std::string row;
    for (auto const& v : verdicts) {
      bool needed = v.property == required || v.property == "elementary";
      if ((needed && !v.holds) || !v.agrees()) r.code = kValidationFailure;
      row += (row.empty() ? "" : " ") + v.property + "=" + (v.holds ? "yes" : "no");
      if (!v.agrees()) row += "(span disagrees)";
    }
    items.push_back(io::emit_verdicts(verdicts));
    r.table += row + "\n";
  }
  r.json = io::emit_report(items);
  r.table = count_line(items.size()) + r.table;
  return r;
}

Output roundtrip_cmd(Options const& o, Budget const& budget) {
  auto a = load(o.operands[0]);
  auto b = load(o.operands[1]);
  if (is_category(a) != is_category(b)) {
    throw Error(ErrorCode::basis_mismatch, "operands must both be magmas or both categories");
  }
  auto algebra = algebra_of(a, o.field, o.zero && !is_category(a));
  FiniteMagma target = is_category(b) ? adjoin_zero(std::get<FinitePrecategory>(b.payload))
                                      : std::get<FiniteMagma>(b.payload);
  std::vector<PairRelation> relations;
  if (is_category(a)) {
    auto const& from = std::get<FinitePrecategory>(a.payload);
    auto const& to = std::get<FinitePrecategory>(b.payload);
    for (auto const& s : subprecategories_via_zero_submagmas(from, to, budget))
      relations.push_back(relation_of_subprecategory(from, to, s));
  } else if (o.zero) {
    relations = enumerate_zero_submagmas(algebra.grading_magma(), target, ZeroRow::full, budget);
  } else {
    auto product = product_magma(algebra.grading_magma(), target, budget);
    for (auto const& s : enumerate_submagmas(product, budget))
      relations.push_back(PairRelation::from_bits(product.order() / target.order(),
                                                  target.order(), s));
  }

  Output r;
  std::vector<std::string> items;
  for (auto const& f : relations) {
    auto w = grading_from_relation(algebra, target, f);
    auto back = relation_from_filter(algebra, w);
    bool relation_fixed = back == f;
    bool family_fixed = grading_from_relation(algebra, target, back) == w;
    if (!relation_fixed || !family_fixed) r.code = kValidationFailure;
    nlohmann::json item{{"family_fixed", family_fixed}, {"relation_fixed", relation_fixed}};
    items.push_back(item.dump());
    r.table += relation_text(f) + (relation_fixed && family_fixed ? " ok" : " FAILED") + "\n";
  }
  r.json = io::emit_report(items);
  r.table = count_line(items.size()) + r.table;
  return r;
}

unsigned small_number(std::string const& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v > 1'000'000) {
    throw ParseError(1, 1, "expected a small non-negative integer, got '" + s + "'");
  }
  return static_cast<unsigned>(v);
}

std::vector<unsigned> cyclic_orders(std::string const& s) {
  std::vector<unsigned> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(small_number(part));
  return out;
}

Output count_cmd(Options const& o, Budget const& budget) {
  auto const& p = o.operands;
  auto need = [&](std::size_t n, char const* usage) {
    if (p.size() != n) {
      throw ParseError(1, 1, "count " + o.formula + " takes " + usage);
    }
  };
  CountReport report;
  if (o.formula == "matrix-gradings") {
    need(2, "<n> <q>");
    report = report_matrix_group_gradings(small_number(p[0]), small_number(p[1]), budget);
  } else if (o.formula == "surjections") {
    need(2, "<m> <n>");
    report = report_surjective_functions(small_number(p[0]), small_number(p[1]), budget);
  } else if (o.formula == "abelian-homs") {
    need(2, "<orders of G> <orders of H>, comma separated");
    report = report_abelian_homs(cyclic_orders(p[0]), cyclic_orders(p[1]), budget);
  } else if (o.formula == "subspaces") {
    need(2, "<p> <n>");
    report = report_subspaces(small_number(p[0]), small_number(p[1]), budget);
  } else if (o.formula == "groupoid-functors" || o.formula == "disconnected") {
    need(2, "<source category> <target category>");
    auto a = load(p[0]);
    auto b = load(p[1]);
    auto const& from = as_category(a, p[0]);
    auto const& to = as_category(b, p[1]);
    report = o.formula == "disconnected" ? count_disconnected(from, to, budget)
                                         : count_functors_connected_groupoids(from, to, budget);
  } else {
    throw ParseError(1, 1,
                     "unknown formula '" + o.formula +
                         "' (matrix-gradings, surjections, abelian-homs, subspaces, "
                         "groupoid-functors, disconnected)");
  }

  Output r{io::emit_count_report(report), ""};
  r.table = "formula " + report.formula + "\n";
  for (auto const& [k, v] : report.parameters) r.table += "  " + k + " = " + v + "\n";
  r.table += "closed_form " + report.closed_form.str() + "\n";
  r.table += "brute_force " + (report.brute_force ? report.brute_force->str() : "n/a") + "\n";
  for (auto const& v : report.variants)
    r.table += "variant " + v.name + " " + v.value.str() +
               (v.agrees ? (*v.agrees ? " agrees" : " differs") : "") + "\n";
  return r;
}

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Enumerate magma and category structures and their elementary gradings."};
  app.name("gradeforge");
  app.require_subcommand(1);
  app.fallthrough();
  auto* json_flag = app.add_flag("--json", o.json, "JSON output (default)");
  auto* table_flag = app.add_flag("--table", o.table, "plain text output");
  json_flag->excludes(table_flag);
  app.add_option("--field", o.field, "prime modulus for span checks")->default_val(2);
  app.add_option("--budget", o.budget, "search node budget (overrides GRADEFORGE_BUDGET)")
      ->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "nonisomorphic magmas of a given order");
  census->add_option("n", o.census_order)->required();

  auto* hom = app.add_subcommand("hom", "homomorphisms G -> H");
  hom->add_option("files", o.operands)->required()->expected(2);
  hom->add_flag("--zero", o.zero, "zero homomorphisms");

  auto* sub = app.add_subcommand("submagmas", "submagmas of G, or of G x H");
  sub->add_option("files", o.operands)->required()->expected(1, 2);
  sub->add_flag("--zero", o.zero, "zero submagmas of G x H");

  auto add_map_kind = [&](CLI::App* cmd) {
    auto* pre = cmd->add_flag("--prefunctors", o.prefunctors, "use prefunctors");
    auto* fun = cmd->add_flag("--functors", o.functors, "use functors (default)");
    pre->excludes(fun);
  };

  auto* functors = app.add_subcommand("functors", "functors between categories");
  functors->add_option("files", o.operands)->required()->expected(2);
  add_map_kind(functors);

  auto* gradings = app.add_subcommand("gradings", "elementary gradings");
  gradings->add_option("files", o.operands)->required()->expected(2);
  gradings->add_flag("--zero", o.zero, "zero homomorphisms for magma operands");
  gradings->add_flag("--nonzero-only", o.nonzero_only, "keep nonzero families");
  add_map_kind(gradings);

  auto* filters = app.add_subcommand("filters", "elementary filters");
  filters->add_option("files", o.operands)->required()->expected(2);
  filters->add_flag("--zero", o.zero, "zero submagmas for magma operands");
  filters->add_flag("--nonzero-only", o.nonzero_only, "keep nonzero families");

  auto* verify = app.add_subcommand("verify", "check a family report against an algebra");
  verify->add_option("files", o.operands)->required()->expected(2);

  auto* roundtrip = app.add_subcommand("roundtrip", "check M(F(f)) = f on every submagma");
  roundtrip->add_option("files", o.operands)->required()->expected(2);
  roundtrip->add_flag("--zero", o.zero, "zero submagmas");

  auto* count = app.add_subcommand("count", "closed-form count against brute force");
  count->add_option("formula", o.formula)->required();
  count->add_option("params", o.operands)->required();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "gradeforge: " << e.what() << "\n";
    return kValidationFailure;
  }

  current_input.clear();
  Budget budget = Budget::from_environment();
  if (o.budget) budget.max_nodes = *o.budget;

  try {
    Output r;
    if (*census) r = census_cmd(o, budget);
    else if (*hom) r = hom_cmd(o, budget);
    else if (*sub) r = submagmas_cmd(o, budget);
    else if (*functors) r = functors_cmd(o, budget);
    else if (*gradings) r = family_cmd(o, budget, false);
    else if (*filters) r = family_cmd(o, budget, true);
    else if (*verify) r = verify_cmd(o);
    else if (*roundtrip) r = roundtrip_cmd(o, budget);
    else r = count_cmd(o, budget);
    if (o.table) out << r.table;
    else out << r.json << "\n";
    return r.code;
  } catch (ParseError const& e) {
    err << "gradeforge: " << where() << e.what() << "\n";
    return kParseFailure;
  } catch (Error const& e) {
    err << "gradeforge: " << where() << e.what() << "\n";
    if (e.code() == ErrorCode::size_overflow) return kBudgetExhausted;
    if (e.code() == ErrorCode::parse_error) return kParseFailure;
    return kValidationFailure;
  } catch (std::exception const& e) {
    err << "gradeforge: " << where() << e.what() << "\n";
    return kValidationFailure;
  }
}

}  // namespace gradeforge::cli
