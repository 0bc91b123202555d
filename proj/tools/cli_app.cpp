#include "cli_app.hpp"

#include "sugawara/serialize.hpp"
#include "sugawara/shift.hpp"
#include "sugawara/suga.hpp"
#include "sugawara/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace sugawara::cli {

namespace {

struct Config {
  std::string pyramid_text;
  std::string command;
  std::string format = "json";
  std::string chi_path;
  std::string z_text;
  std::uint64_t seed = 1;
  int workers = 1;
  std::optional<int> s_max;
  std::string automorphism_c;
};

struct Output {
  json doc;
  std::vector<Report> reports;
  std::string text;
};

bool all_passed(const std::vector<Report>& reports)
{
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
}

std::string report_text(const Report& r)
{
  std::ostringstream os;
  os << r.check << " [" << r.pyramid << "]: " << (r.passed() ? "PASS" : "FAIL") << " (" << r.count(Status::pass)
     << " pass, " << r.count(Status::fail) << " fail, " << r.count(Status::vacuous) << " vacuous)\n";
  for (const auto& c : r.cases) {
    if (c.status != Status::fail) continue;
    os << "  " << c.generator;
    if (c.s) os << " s=" << *c.s;
    if (c.k) os << " k=" << *c.k;
    if (c.r) os << " r=" << *c.r;
    if (!c.note.empty()) os << " (" << c.note << ")";
    if (c.difference) os << ": " << to_text(*c.difference);
    os << "\n";
  }
  return os.str();
}

json reports_json(const std::vector<Report>& reports)
{
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

std::string label(const char* name, int k, int r)
{
  return std::string(name) + "_" + std::to_string(k) + "^(" + std::to_string(r) + ")";
}

Output cmd_basis(const Config&, const Pyramid& p)
{
  Output out;
  json basis = json::array(), brackets = json::array(), forms = json::array();
  std::ostringstream text;
  text << "pyramid " << p.to_string() << ", N = " << p.size() << ", dim = " << p.basis().size() << "\n";
  for (const auto& g : p.basis()) {
    basis.push_back(to_string(g));
    text << "  " << to_string(g) << "\n";
  }
  for (const auto& a : p.basis()) {
    for (const auto& b : p.basis()) {
      const LieCombo br = bracket(p, a, b);
      if (!br.is_zero()) {
        json result = json::object();
        std::string line;
        for (const auto& [g, c] : br.terms) {
          result[to_string(g)] = to_string(c);
          line += (line.empty() ? "" : " + ") + std::string(c == 1 ? "" : to_string(c) + " ") + to_string(g);
        }
        brackets.push_back(json{{"a", to_string(a)}, {"b", to_string(b)}, {"result", result}});
        text << "[" << to_string(a) << ", " << to_string(b) << "] = " << line << "\n";
      }
      const Rational f = form(p, a, b);
      if (f != 0) {
        forms.push_back(json{{"a", to_string(a)}, {"b", to_string(b)}, {"value", to_string(f)}});
        text << "<" << to_string(a) << ", " << to_string(b) << "> = " << to_string(f) << "\n";
      }
    }
  }
  out.doc = json{{"pyramid", p.to_string()},
                 {"N", p.size()},
                 {"dimension", p.basis().size()},
                 {"basis", basis},
                 {"brackets", brackets},
                 {"form", forms}};
  out.text = text.str();
  return out;
}

Output cmd_vectors(const Config&, const Pyramid& p)
{
  Pbw engine(p, Mode::affine_critical);
  const SugaTable table = phi_table(engine);
  Output out;
  out.doc = suga_table_to_json(table);
  std::ostringstream text;
  for (const auto& [key, e] : table.entries)
    text << label("phi", key.first, key.second) << (table.is_selected(key.first, key.second) ? " *" : "  ") << " = "
         << to_text(e) << "\n";
  text << table.selected.size() << " selected vectors (marked *)\n";
  out.text = text.str();
  return out;
}

Output cmd_verify(const Config& cfg, const Pyramid& p)
{
  Pbw engine(p, Mode::affine_critical);
  const SugaTable table = phi_table(engine);
  Output out;

  AnnihilationOptions basis_opts;
  basis_opts.s_max = cfg.s_max;
  basis_opts.workers = cfg.workers;
  Report basis = annihilation_check(table, basis_opts);
  AnnihilationOptions family_opts = basis_opts;
  family_opts.family = Family::generating;
  Report family = annihilation_check(table, family_opts);
  Report reduction = family_reduction_check(family, basis);

  out.reports.push_back(std::move(basis));
  out.reports.push_back(std::move(family));
  out.reports.push_back(std::move(reduction));
  out.reports.push_back(delta_ladder(engine, table));
  out.reports.push_back(tau_cross_check(engine, table));
  out.reports.push_back(commutativity_check(p, Mode::affine_critical, labeled_vectors(table), cfg.workers));
  Report rered = rered_consistency(p, sample_states(p, cfg.seed, 4), {1, 2});
  rered.seed = cfg.seed;
  out.reports.push_back(std::move(rered));

  out.doc = json{{"pyramid", p.to_string()}, {"seed", cfg.seed}, {"passed", all_passed(out.reports)},
                 {"reports", reports_json(out.reports)}};
  for (const auto& r : out.reports) out.text += report_text(r);
  return out;
}

Output cmd_center(const Config& cfg, const Pyramid& p)
{
  Pbw finite(p, Mode::finite);
  std::optional<Rational> c;
  if (!cfg.automorphism_c.empty()) c = parse_rational(cfg.automorphism_c);

  Output out;
  json gens = json::array();
  std::vector<Labeled> labeled;
  std::ostringstream text;
  for (auto& g : center_generators(finite)) {
    Element e = c ? apply_automorphism(finite, g.element, *c) : g.element;
    gens.push_back(json{{"k", g.k}, {"r", g.r}, {"element", element_to_json(e)}});
    text << label("Phi", g.k, g.r) << " = " << to_text(e) << "\n";
    labeled.push_back(Labeled{label("Phi", g.k, g.r), g.k, g.r, std::nullopt, std::move(e)});
  }
  out.reports.push_back(centrality_check(p, labeled, cfg.workers));
  out.doc = json{{"pyramid", p.to_string()},
                 {"automorphism_c", c ? json(to_string(*c)) : json(nullptr)},
                 {"generators", gens},
                 {"passed", all_passed(out.reports)},
                 {"reports", reports_json(out.reports)}};
  text << report_text(out.reports.back());
  out.text = text.str();
  return out;
}

Output cmd_shift(const Config& cfg, const Pyramid& p)
{
  Chi chi;
  if (!cfg.chi_path.empty()) {
    std::ifstream in(cfg.chi_path);
    if (!in) throw std::invalid_argument("cannot open chi file '" + cfg.chi_path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("chi file '" + cfg.chi_path + "': " + e.what());
    }
    chi = chi_from_json(j, p);
  } else {
    chi = random_chi(p, cfg.seed);
  }
  std::optional<Rational> z;
  if (!cfg.z_text.empty()) {
    z = parse_rational(cfg.z_text);
    if (*z == 0) throw std::invalid_argument("--z must be nonzero");
  }

  Pbw affine(p, Mode::affine_critical);
  Pbw finite(p, Mode::finite);
  const SugaTable table = phi_table(affine);
  const auto gens = a_chi_generators(finite, table, chi);

  Output out;
  std::ostringstream text;
  std::vector<Labeled> labeled;
  for (const auto& g : gens) {
    const std::string name = label("phi", g.k, g.r) + "_(" + std::to_string(g.m) + ")";
    text << name << " = " << to_text(g.element) << "\n";
    labeled.push_back(Labeled{name, g.k, g.r, g.m, g.element});
  }
  Report comm = commutativity_check(p, Mode::finite, labeled, cfg.workers);
  comm.seed = cfg.seed;
  out.reports.push_back(std::move(comm));

  // algebraic-independence surrogate on the center symbols
  const auto syms = symbols(p);
  std::vector<SymPoly> selected;
  for (const auto& kr : table.selected) {
    auto it = syms.find(kr);
    selected.push_back(it == syms.end() ? SymPoly{} : it->second);
  }
  const int rank = jacobian_rank(p, selected, random_chi(p, cfg.seed));
  Report rank_report{"jacobian-rank", p.to_string(), {}, cfg.seed, 0};
  Case rc;
  rc.generator = "symbols";
  rc.status = rank == p.size() ? Status::pass : Status::fail;
  rc.note = "rank " + std::to_string(rank) + " of " + std::to_string(p.size());
  rank_report.cases.push_back(rc);
  out.reports.push_back(std::move(rank_report));

  out.doc = shift_generators_to_json(p, gens);
  out.doc["chi"] = chi_to_json(chi);
  out.doc["seed"] = cfg.seed;
  out.doc["jacobian_rank"] = rank;
  if (z) {
    json evaluated = json::array();
    for (const auto& [k, r] : table.selected) {
      const Element v = evaluate(rho_chi(finite, table.at(k, r), chi), *z);
      evaluated.push_back(json{{"k", k}, {"r", r}, {"element", element_to_json(v)}});
      text << label("phi", k, r) << " at z = " << to_string(*z) << ": " << to_text(v) << "\n";
    }
    out.doc["z"] = to_string(*z);
    out.doc["evaluated"] = evaluated;
  }
  out.doc["passed"] = all_passed(out.reports);
  out.doc["reports"] = reports_json(out.reports);
  for (const auto& r : out.reports) text << report_text(r);
  out.text = text.str();
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Config cfg;
  CLI::App app{"Segal-Sugawara vectors for centralizers of nilpotents in gl_N"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--pyramid", cfg.pyramid_text, "row lengths, non-decreasing, e.g. 2,3,4")->required();
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--chi", cfg.chi_path, "JSON file {\"E[i,j,r]\": \"p/q\"} (shift)");
  app.add_option("--z", cfg.z_text, "evaluate shift images at this nonzero rational");
  app.add_option("--seed", cfg.seed, "seed for random chi, points and sample states");
  app.add_option("--workers", cfg.workers, "worker threads for independent checks")->check(CLI::Range(1, 256));
  app.add_option("--s-max", cfg.s_max, "largest mode s in annihilation checks")->check(CLI::NonNegativeNumber);
  app.add_option("--automorphism-c", cfg.automorphism_c, "shift E_ii^(0) by c lambda_i (center)");
  const std::pair<const char*, const char*> commands[] = {
      {"basis", "basis, brackets and invariant form of the centralizer"},
      {"vectors", "coefficients of the column-determinant in the vacuum module"},
      {"verify", "annihilation, ladder, cross-check and commutativity reports"},
      {"center", "images in U(a) and their centrality"},
      {"shift", "shifted generators for a character chi and their symbols"},
  };
  for (const auto& [name, description] : commands) app.add_subcommand(name, description);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Output result;
  try {
    const Pyramid p = Pyramid::parse(cfg.pyramid_text);
    if (cfg.command == "basis") result = cmd_basis(cfg, p);
    else if (cfg.command == "vectors") result = cmd_vectors(cfg, p);
    else if (cfg.command == "verify") result = cmd_verify(cfg, p);
    else if (cfg.command == "center") result = cmd_center(cfg, p);
    else result = cmd_shift(cfg, p);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  if (cfg.format == "json")
    out << result.doc.dump(2) << "\n";
  else
    out << result.text;
  return all_passed(result.reports) ? ok : check_failed;
}

}  // namespace sugawara::cli
