#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "scg/error.hpp"
#include "scg/io.hpp"
#include "scg/random.hpp"
#include "scg/symmetry.hpp"
#include "scg/values.hpp"

namespace scg::cli {

namespace {

using io::Json;

constexpr std::size_t kVerifyEfficiencyGames = 50;
constexpr std::size_t kVerifyAxiomGames = 10;

/// Verification failure; carries its own exit code.
struct VerificationFailure {};

/// 6 significant digits; display only.
std::string approx(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_faces(const std::vector<Face>& faces) {
  std::string out;
  for (Face f : faces) {
    if (!out.empty()) out += ' ';
    out += f.to_string();
  }
  return out;
}

std::string vector_string(const RationalVector& v) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v(k).to_string();
  }
  return out + ")";
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k).to_string());
  return out;
}

/// Left-aligned columns separated by two spaces.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, const std::string& indent = "  ") const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line = indent;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct Loaded {
  ComplexPtr complex;
  std::optional<Game> game;
};

Loaded load(const RunConfig& config) {
  Loaded l;
  l.complex = share(io::load_complex(config.complex_path));
  if (config.game_path) l.game = io::load_game(*config.game_path, l.complex);
  return l;
}

std::optional<EfficiencyCoefficients> closed_form_if_applicable(const SimplicialComplex& complex) {
  if (complex.vertices().empty() || !has_pure_links(complex)) return std::nullopt;
  if (!classify_shapley(complex).is_shapley) return std::nullopt;
  return shapley_efficiency_closed_form(complex);
}

void cmd_info(const RunConfig& config, std::ostream& out) {
  const Loaded in = load(config);
  const SimplicialComplex& complex = *in.complex;
  const FVector f = f_vector(complex);
  const ShapleyClassification cls = classify_shapley(complex);
  const bool pure = has_pure_links(complex);

  if (config.output_format == OutputFormat::Json) {
    Json links = Json::object();
    for (const auto& [i, lf] : cls.link_f_vectors) links[std::to_string(i)] = lf.entries;
    Json j{{"n", complex.n()},
           {"rank", complex.rank()},
           {"face_count", complex.face_count()},
           {"facets", io::complex_to_json(complex)["facets"]},
           {"f_vector", f.entries},
           {"link_f_vectors", links},
           {"pure_links", pure},
           {"shapley", cls.is_shapley}};
    if (cls.s_vector) j["s_vector"] = cls.s_vector->entries;
    if (cls.witness) j["witness"] = {cls.witness->first, cls.witness->second};
    out << j.dump(2) << '\n';
    return;
  }

  out << "complex: n=" << complex.n() << " rank=" << complex.rank() << " faces=" << complex.face_count()
      << '\n';
  out << "facets: " << join_faces(complex.facets()) << '\n';
  out << "f-vector: " << f << '\n';
  out << "vertex links:\n";
  TextTable table({"vertex", "link f-vector", "link rank"});
  for (const auto& [i, lf] : cls.link_f_vectors) {
    table.add({std::to_string(i), lf.to_string(), std::to_string(lf.size() - 1)});
  }
  table.print(out);
  out << "pure links: " << yes_no(pure) << '\n';
  if (cls.is_shapley) {
    out << "shapley complex: yes, s = " << *cls.s_vector << '\n';
  } else {
    out << "shapley complex: no (vertices " << cls.witness->first << " and " << cls.witness->second
        << " have link f-vectors " << cls.link_f_vectors.at(cls.witness->first) << " and "
        << cls.link_f_vectors.at(cls.witness->second) << ")\n";
  }
}

void cmd_shapley(const RunConfig& config, std::ostream& out) {
  const Loaded in = load(config);
  const Game& v = *in.game;
  const GroupValue values = shapley_group_value(v);
  const Rational total = values.total();
  const auto closed = closed_form_if_applicable(*in.complex);
  std::optional<Rational> rhs;
  if (closed) rhs = closed->apply(v);

  if (config.output_format == OutputFormat::Json) {
    Json j = io::group_value_to_json(values);
    if (rhs) {
      j["efficiency_rhs"] = rhs->to_string();
      j["efficiency_match"] = (*rhs == total);
    }
    out << j.dump(2) << '\n';
    return;
  }
  TextTable table({"player", "shapley", "approx"});
  for (const auto& [i, value] : values.values) table.add({std::to_string(i), value.to_string(), approx(value)});
  table.print(out);
  out << "sum of values: " << total << " (approx " << approx(total) << ")\n";
  if (rhs) {
    out << "efficiency closed form: " << *rhs << " match: " << yes_no(*rhs == total) << '\n';
  } else {
    out << "efficiency closed form: not applicable (needs an s-Shapley complex with pure links)\n";
  }
}

void cmd_symmetry(const RunConfig& config, std::ostream& out) {
  const Loaded in = load(config);
  const SimplicialComplex& complex = *in.complex;
  std::optional<SymmetryGroup> group;
  if (complex.n() <= kMaxExhaustiveSymmetryN) group = symm_group(complex);
  const auto generators = pi_delta_generators(complex);
  const ContainmentReport containment = check_pi_delta_contained(complex);

  auto verdict = [&](const PiDeltaGenerator& g) -> std::optional<ContainmentViolation> {
    for (const auto& violation : containment.violations) {
      if (violation.generator.perm == g.perm) return violation;
    }
    return std::nullopt;
  };

  if (config.output_format == OutputFormat::Json) {
    Json gens = Json::array();
    for (const auto& g : generators) {
      Json entry = io::permutation_to_json(g.perm);
      entry["cycles"] = g.perm.to_string();
      entry["kind"] = g.kind == GeneratorKind::LinkSwap ? "link_swap" : "transposition";
      entry["vertex"] = g.vertex;
      if (g.kind == GeneratorKind::Transposition) {
        entry["other"] = g.other;
      } else {
        entry["L"] = g.left.vertices();
        entry["T"] = g.right.vertices();
        entry["overlapping"] = g.overlapping;
      }
      const auto v = verdict(g);
      entry["preserves"] = !v.has_value();
      if (v) entry["escape"] = {{"face", v->face.vertices()}, {"image", v->image.vertices()}};
      gens.push_back(std::move(entry));
    }
    Json j{{"n", complex.n()}};
    j["order"] = group ? Json(group->order()) : Json(nullptr);
    j["link_swap_pairing"] = "ascending";
    j["generators"] = std::move(gens);
    j["pi_delta_contained"] = containment.contained;
    out << j.dump(2) << '\n';
    return;
  }
  if (group) {
    out << "Symm: order " << group->order() << '\n';
  } else {
    out << "Symm: not enumerated (n > " << kMaxExhaustiveSymmetryN << ")\n";
  }
  out << "pi generators: " << generators.size()
      << " (link swaps pair L\\T with T\\L in ascending order)\n";
  TextTable table({"generator", "kind", "preserves", "escape"});
  for (const auto& g : generators) {
    const auto v = verdict(g);
    const std::string kind = g.kind == GeneratorKind::Transposition
                                 ? "transposition"
                                 : "link swap i=" + std::to_string(g.vertex) + " " + g.left.to_string() +
                                       "<->" + g.right.to_string() + (g.overlapping ? " (overlap)" : "");
    table.add({g.perm.to_string(), kind, yes_no(!v),
               v ? v->face.to_string() + " -> " + v->image.to_string() : ""});
  }
  table.print(out);
  out << "pi contained in Symm: " << yes_no(containment.contained) << '\n';
}

void cmd_psystem(const RunConfig& config, std::ostream& out) {
  const Loaded in = load(config);
  const SimplicialComplex& complex = *in.complex;
  const PSystem sys = solve_p_system(complex);
  const ShapleyClassification cls = classify_shapley(complex);
  std::optional<RationalVector> candidate;
  bool candidate_ok = false;
  if (cls.is_shapley) {
    candidate = shapley_p_solution(*cls.s_vector);
    candidate_ok = is_zero_vector<Rational>(residual(sys.matrix, *candidate, sys.rhs));
  }
  const auto& sol = sys.solution;

  if (config.output_format == OutputFormat::Json) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < sys.matrix.rows(); ++r) {
      rows.push_back({{"coefficients", vector_json(sys.matrix.row(r).transpose())},
                      {"vertices", sys.row_vertices[static_cast<std::size_t>(r)]}});
    }
    Json j{{"rank", complex.rank()}, {"rows", std::move(rows)}, {"status", to_string(sol.status)}};
    if (sol.particular) j["particular"] = vector_json(*sol.particular);
    Json basis = Json::array();
    for (const auto& z : sol.nullspace_basis) basis.push_back(vector_json(z));
    j["nullspace_basis"] = std::move(basis);
    if (sol.certificate) j["certificate"] = vector_json(*sol.certificate);
    if (candidate) {
      j["shapley_candidate"] = vector_json(*candidate);
      j["shapley_candidate_satisfies"] = candidate_ok;
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "rank r = " << complex.rank() << "; distinct link f-vectors: " << sys.matrix.rows() << '\n';
  TextTable table({"row", "coefficients", "vertices"});
  for (Eigen::Index r = 0; r < sys.matrix.rows(); ++r) {
    std::string verts;
    for (Vertex v : sys.row_vertices[static_cast<std::size_t>(r)]) verts += (verts.empty() ? "" : ",") + std::to_string(v);
    table.add({std::to_string(r + 1), vector_string(sys.matrix.row(r).transpose()), verts});
  }
  table.print(out);
  out << "status: " << to_string(sol.status) << " (rank " << sol.rank << ")\n";
  if (sol.particular) out << "particular (free variables = 0): " << vector_string(*sol.particular) << '\n';
  if (!sol.nullspace_basis.empty()) {
    out << "nullspace basis:\n";
    for (const auto& z : sol.nullspace_basis) out << "  " << vector_string(z) << '\n';
  }
  if (sol.certificate) out << "inconsistency certificate: " << vector_string(*sol.certificate) << '\n';
  if (candidate) {
    out << "shapley candidate p_k = 1/(r s_k): " << vector_string(*candidate)
        << " satisfies system: " << yes_no(candidate_ok) << '\n';
  }
}

void cmd_decompose(const RunConfig& config, std::ostream& out) {
  const Loaded in = load(config);
  std::vector<Vertex> players;
  if (config.player) {
    players.push_back(*config.player);
  } else {
    players = in.complex->vertices();
  }
  Json all = Json::array();
  for (Vertex i : players) {
    const Decomposition d = decompose_shapley(in.complex, i, config.seed);
    if (config.output_format == OutputFormat::Json) {
      Json j{{"player", i}, {"status", to_string(d.status)}};
      Json facets = Json::array();
      for (Face f : d.facets) facets.push_back(f.vertices());
      j["facets"] = std::move(facets);
      if (d.status == DecompositionStatus::Exact) {
        Json weights = Json::object();
        for (const auto& [f, c] : d.facet_weights) weights[f.key()] = c.to_string();
        j["facet_weights"] = std::move(weights);
        j["free_parameters"] = d.free_parameters;
        j["games_checked"] = d.games_checked;
        j["cross_check_passed"] = d.cross_check_passed;
      } else {
        j["certificate"] = vector_json(*d.certificate);
        Json coalitions = Json::array();
        for (Face t : d.coalitions) coalitions.push_back(t.vertices());
        j["coalitions"] = std::move(coalitions);
      }
      all.push_back(std::move(j));
      continue;
    }
    out << "player " << i << ": " << to_string(d.status) << '\n';
    if (d.status == DecompositionStatus::Exact) {
      TextTable table({"facet", "c_F", "approx"});
      for (const auto& [f, c] : d.facet_weights) table.add({f.to_string(), c.to_string(), approx(c)});
      table.print(out);
      out << "  free parameters: " << d.free_parameters << '\n';
      out << "  cross-check: " << d.games_checked << " random games, "
          << (d.cross_check_passed ? "all match" : "MISMATCH") << '\n';
    } else {
      out << "  facets: " << join_faces(d.facets) << '\n';
      out << "  inconsistent combination of coalition equations:\n";
      TextTable table({"coalition", "multiplier"});
      for (std::size_t k = 0; k < d.coalitions.size(); ++k) {
        const Rational& y = (*d.certificate)(static_cast<Eigen::Index>(k));
        if (!y.is_zero()) table.add({d.coalitions[k].to_string(), y.to_string()});
      }
      table.print(out, "    ");
    }
  }
  if (config.output_format == OutputFormat::Json) out << Json{{"decompositions", std::move(all)}}.dump(2) << '\n';
}

void cmd_efficiency(const RunConfig& config, std::ostream& out) {
  const Loaded in = load(config);
  const SimplicialComplex& complex = *in.complex;
  const TableSet tables = canonical_shapley_tables(complex);
  const EfficiencyCoefficients coefficients = efficiency_coefficients(complex, tables);
  const auto closed = closed_form_if_applicable(complex);
  std::optional<EfficiencyCheck> check;
  if (in.game) check = check_efficiency_identity(coefficients, tables, *in.game);

  if (config.output_format == OutputFormat::Json) {
    Json j = io::efficiency_to_json(coefficients);
    if (closed) {
      j["closed_form"] = io::efficiency_to_json(*closed)["coefficients"];
      j["closed_form_match"] = (*closed == coefficients);
    }
    if (check) {
      j["total_value"] = check->total_value.to_string();
      j["coefficient_side"] = check->coefficient_side.to_string();
      j["residual"] = check->residual.to_string();
      j["holds"] = check->holds;
    }
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::string> header{"face", "a_T", "approx"};
  if (closed) header.push_back("closed form");
  TextTable table(header);
  for (const auto& [t, a] : coefficients.coefficients) {
    std::vector<std::string> row{t.to_string(), a.to_string(), approx(a)};
    if (closed) row.push_back(closed->coefficients.at(t).to_string());
    table.add(std::move(row));
  }
  table.print(out);
  if (closed) {
    out << "closed form matches: " << yes_no(*closed == coefficients) << '\n';
  } else {
    out << "closed form: not applicable (needs an s-Shapley complex with pure links)\n";
  }
  if (check) {
    out << "sum of values: " << check->total_value << "; sum a_T v(T): " << check->coefficient_side
        << "; residual: " << check->residual << '\n';
  }
}

void cmd_verify(const RunConfig& config, std::ostream& out) {
  const Loaded in = load(config);
  const SimplicialComplex& complex = *in.complex;
  const TableSet tables = canonical_shapley_tables(complex);
  Json checks = Json::array();
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    all_ok = all_ok && ok;
    checks.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
  };

  bool tables_ok = true;
  for (const auto& [i, t] : tables) tables_ok = tables_ok && t.is_probability();
  report("canonical tables are probability distributions", tables_ok, "");

  const AxiomReport axioms = axiom_suite(in.complex, tables, config.seed, kVerifyAxiomGames);
  for (const auto& p : axioms.players) {
    const std::string who = "player " + std::to_string(p.player) + ": ";
    report(who + "linearity", p.linearity.passed, p.linearity.detail);
    report(who + "star locality", p.star_locality.passed, p.star_locality.detail);
    report(who + "dummy", p.dummy.passed, p.dummy.detail);
    report(who + "monotonicity", p.monotonicity.passed, p.monotonicity.detail);
  }

  const EfficiencyCoefficients coefficients = efficiency_coefficients(complex, tables);
  RationalSampler rng(config.seed);
  std::size_t failures = 0;
  for (std::size_t g = 0; g < kVerifyEfficiencyGames; ++g) {
    if (!check_efficiency_identity(coefficients, tables, random_game(in.complex, rng)).holds) ++failures;
  }
  report("efficiency identity on " + std::to_string(kVerifyEfficiencyGames) + " random games", failures == 0,
         failures ? std::to_string(failures) + " nonzero residuals" : "");
  if (in.game) {
    const EfficiencyCheck c = check_efficiency_identity(coefficients, tables, *in.game);
    report("efficiency identity on the supplied game", c.holds, "residual " + c.residual.to_string());
  }

  if (const auto closed = closed_form_if_applicable(complex)) {
    report("closed-form efficiency coefficients", *closed == coefficients, "");
  }

  if (check_pi_delta_contained(complex).contained) {
    const SymmetryReductionReport sr = check_symmetry_reduction(complex, tables);
    report("weights depend only on coalition size", sr.holds,
           sr.violation ? "player " + std::to_string(sr.violation->player) + " at " +
                              sr.violation->coalition.to_string()
                        : "");
  }

  for (Vertex i : complex.vertices()) {
    const Decomposition d = decompose_shapley(in.complex, i, config.seed);
    if (d.status == DecompositionStatus::Exact && d.games_checked > 0) {
      report("player " + std::to_string(i) + ": facet decomposition reproduces the value", d.cross_check_passed, "");
    }
  }

  if (config.output_format == OutputFormat::Json) {
    out << Json{{"passed", all_ok}, {"checks", checks}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << c["check"].get<std::string>();
      const auto detail = c["detail"].get<std::string>();
      if (!c["passed"].get<bool>() && !detail.empty()) out << " (" << detail << ")";
      out << '\n';
    }
    out << (all_ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  if (!all_ok) throw VerificationFailure{};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::TooManyVertices:
    case ErrorCode::GameFaceNotInComplex:
    case ErrorCode::InvalidPermutation:
      return kConfigError;
    default:
      return kPreconditionViolated;
  }
}

std::string single_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  // Assemble everything first so a failure never leaves partial output.
  std::ostringstream buffer;
  int code = kSuccess;
  try {
    switch (config.command) {
      case Command::Info: cmd_info(config, buffer); break;
      case Command::Shapley: cmd_shapley(config, buffer); break;
      case Command::Symmetry: cmd_symmetry(config, buffer); break;
      case Command::PSystem: cmd_psystem(config, buffer); break;
      case Command::Decompose: cmd_decompose(config, buffer); break;
      case Command::Verify: cmd_verify(config, buffer); break;
      case Command::Efficiency: cmd_efficiency(config, buffer); break;
    }
  } catch (const VerificationFailure&) {
    out << buffer.str();
    err << "error[VerificationFailed]: at least one check failed\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << single_line(e.what()) << '\n';
    return exit_code_for(e.code());
  }
  out << buffer.str();
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cooperative-game analysis on simplicial complexes", "scgame"};
  app.require_subcommand(1);
  RunConfig config;
  std::string game_path;
  int player = 0;
  std::string format = "table";

  const std::map<std::string, OutputFormat> formats{{"table", OutputFormat::Table}, {"json", OutputFormat::Json}};

  struct Spec {
    const char* name;
    const char* help;
    Command command;
    bool needs_game;
    bool accepts_game;
    bool accepts_player;
  };
  const std::vector<Spec> specs{
      {"info", "f-vector, vertex links, pure links and Shapley classification", Command::Info, false, false, false},
      {"shapley", "generalized Shapley value of every player", Command::Shapley, true, true, false},
      {"symmetry", "Symm group order and the pi generators", Command::Symmetry, false, false, false},
      {"psystem", "common-probability linear system over link f-vectors", Command::PSystem, false, false, false},
      {"decompose", "write the Shapley value through facet-restricted classical values", Command::Decompose, false,
       false, true},
      {"verify", "axiom, efficiency and decomposition checks on seeded random games", Command::Verify, false, true,
       false},
      {"efficiency", "efficiency coefficients of the Shapley group value", Command::Efficiency, false, true, false},
  };

  std::vector<std::pair<CLI::App*, Command>> subs;
  std::map<CLI::App*, CLI::Option*> game_opts;
  std::map<CLI::App*, CLI::Option*> player_opts;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--complex", config.complex_path, "complex JSON file")->required();
    sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--seed", config.seed, "seed for randomized checks");
    if (s.accepts_game) {
      auto* opt = sub->add_option("--game", game_path, "game JSON file");
      if (s.needs_game) opt->required();
      game_opts[sub] = opt;
    }
    if (s.accepts_player) player_opts[sub] = sub->add_option("--player", player, "vertex id");
    subs.emplace_back(sub, s.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error[ConfigError]: " << single_line(e.what()) << '\n';
    return kConfigError;
  }

  for (const auto& [sub, command] : subs) {
    if (!sub->parsed()) continue;
    config.command = command;
    if (game_opts.contains(sub) && game_opts[sub]->count() > 0) config.game_path = game_path;
    if (player_opts.contains(sub) && player_opts[sub]->count() > 0) config.player = player;
  }
  config.output_format = formats.at(format);
  return execute(config, out, err);
}

}  // namespace scg::cli
