// Command-line surface over the shiftcover library: hom counting, transfer
// matrices, cover count tables, shift equivalence checks, and graph export.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 budget or limit
// exceeded, 4 consistency/divisibility failure, 5 malformed shift matrix
// given to sse.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shiftcover/shiftcover.hpp"

using namespace shiftcover;

namespace {

// Thrown where a specific documented exit code applies.
struct CliExit {
  int code;
  std::string message;
};

std::uint64_t budget_limit() {
  const char* v = std::getenv("SHIFTCOVER_BUDGET");
  if (v == nullptr || *v == '\0') return kDefaultWorkBudget;
  const std::string text(v);
  try {
    std::size_t pos = 0;
    const unsigned long long parsed = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return parsed;
  } catch (const std::exception&) {
    throw ParseError("SHIFTCOVER_BUDGET must be an unsigned integer, got '" + text + "'");
  }
}

FiniteGroup load_group(const std::string& spec) {
  if (spec.find('(') != std::string::npos) return named_group(spec);
  std::ifstream in(spec);
  if (!in) throw CliExit{1, "cannot open group file '" + spec + "'"};
  return read_group(in);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliExit{1, "cannot open presentation file '" + path + "'"};
  return read_presentation(in);
}

IntMat load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliExit{1, "cannot open matrix file '" + path + "'"};
  return read_matrix(in);
}

// --- json helpers; all numbers are emitted exactly -------------------------

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      std::ostringstream os;
      os << "\\u00" << std::hex << (static_cast<unsigned>(c) >> 4) << (static_cast<unsigned>(c) & 0xf);
      out += os.str();
    } else {
      out += c;
    }
  }
  return out;
}

void json_int_array(std::ostream& out, const std::vector<Int>& v) {
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
}

void json_poly(std::ostream& out, const IntPoly& p) { json_int_array(out, p.coeffs()); }

void json_rat_poly(std::ostream& out, const RatPoly& p) {
  out << "[";
  const auto& cs = p.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::ostringstream os;
    os << cs[i];
    out << (i ? "," : "") << "\"" << json_escape(os.str()) << "\"";
  }
  out << "]";
}

void json_label_array(std::ostream& out, const std::vector<Images>& labels) {
  out << "[";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << (i ? "," : "") << "\"" << json_escape(format_images(labels[i])) << "\"";
  out << "]";
}

// --- shared pipeline input: cobordism file, knot file, builtin, or braid ---

struct InputOptions {
  std::string cobordism_path;
  std::string knot_path;
  std::string builtin_name;
  std::string braid_text;
  int strands = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& io, bool allow_cobordism) {
  auto* grp = cmd->add_option_group("input", "exactly one input source");
  if (allow_cobordism)
    grp->add_option("--cobordism", io.cobordism_path, "cobordism data file")
        ->check(CLI::ExistingFile);
  grp->add_option("--knot", io.knot_path, "fibered knot file")->check(CLI::ExistingFile);
  grp->add_option("--builtin", io.builtin_name, "builtin knot: trefoil or figure8");
  grp->add_option("--braid", io.braid_text, "braid word, e.g. \"1 1 1\"");
  grp->require_option(1);
  cmd->add_option("--strands", io.strands, "strand count, required with --braid");
}

struct PipelineInput {
  CobordismData cob;
  WordMap action;  // the free-group map behind a twisted product, when known
  int rank = 0;
  int mu = 1;
  bool has_action = false;
};

PipelineInput resolve_input(const InputOptions& io) {
  PipelineInput in;
  if (!io.cobordism_path.empty()) {
    std::ifstream f(io.cobordism_path);
    if (!f) throw CliExit{1, "cannot open cobordism file '" + io.cobordism_path + "'"};
    in.cob = read_cobordism(f);
    return in;
  }
  FiberedKnotData k;
  if (!io.knot_path.empty()) {
    std::ifstream f(io.knot_path);
    if (!f) throw CliExit{1, "cannot open knot file '" + io.knot_path + "'"};
    k = read_knot(f);
  } else if (!io.builtin_name.empty()) {
    k = builtin_fibered(io.builtin_name);
  } else {
    if (io.strands < 2) throw CliExit{1, "--braid requires --strands with at least 2 strands"};
    std::istringstream ws(io.braid_text);
    const BraidWord braid{io.strands, parse_word_tokens(ws, "braid word")};
    k.rank = io.strands;
    k.monodromy = braid_to_artin(braid);
    k.mu = 1;
    return {twisted_product(k.rank, k.monodromy, Theory::relative), k.monodromy, k.rank, k.mu,
            true};
  }
  return {fibered_to_cobordism(k, Theory::relative), k.monodromy, k.rank, k.mu, true};
}

// --- subcommands ------------------------------------------------------------

void cmd_homs(const std::string& group_spec, const std::string& pres_path, bool want_list,
              bool want_classes, const std::string& format) {
  const FiniteGroup g = load_group(group_spec);
  const Presentation p = load_presentation(pres_path);
  WorkBudget budget(budget_limit());
  const std::vector<Images> homs = enumerate_homs(p, g, budget);
  std::vector<std::vector<int>> orbits;
  if (want_classes) orbits = hom_classes(homs, g);

  if (format == "json") {
    std::cout << "{\"command\":\"homs\",\"hom_count\":" << homs.size();
    if (want_list) {
      std::cout << ",\"homs\":";
      json_label_array(std::cout, homs);
    }
    if (want_classes) {
      std::cout << ",\"class_count\":" << orbits.size() << ",\"classes\":[";
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        const Images& rep = homs[static_cast<std::size_t>(orbits[i].front())];
        std::cout << (i ? "," : "") << "{\"representative\":\"" << json_escape(format_images(rep))
                  << "\",\"size\":" << orbits[i].size() << "}";
      }
      std::cout << "]";
    }
    std::cout << "}\n";
    return;
  }
  std::cout << "homs " << homs.size() << "\n";
  if (want_list)
    for (const Images& h : homs) std::cout << "hom " << format_images(h) << "\n";
  if (want_classes) {
    std::cout << "classes " << orbits.size() << "\n";
    for (std::size_t i = 0; i < orbits.size(); ++i)
      std::cout << "class " << i << " size " << orbits[i].size() << " rep "
                << format_images(homs[static_cast<std::size_t>(orbits[i].front())]) << "\n";
  }
}

void cmd_classes(const std::string& group_spec, const std::string& format) {
  const FiniteGroup g = load_group(group_spec);
  const ConjClassTable t = conjugacy_classes(g);
  if (format == "json") {
    std::cout << "{\"command\":\"classes\",\"order\":" << g.order
              << ",\"class_count\":" << t.representative.size() << ",\"classes\":[";
    for (std::size_t c = 0; c < t.representative.size(); ++c) {
      const int rep = t.representative[c];
      std::cout << (c ? "," : "") << "{\"representative\":" << rep << ",\"size\":" << t.class_size[c]
                << ",\"centralizer\":" << t.centralizer_order[static_cast<std::size_t>(rep)] << "}";
    }
    std::cout << "]}\n";
    return;
  }
  std::cout << "order " << g.order << "\n";
  std::cout << "classes " << t.representative.size() << "\n";
  for (std::size_t c = 0; c < t.representative.size(); ++c) {
    const int rep = t.representative[c];
    std::cout << "class " << c << " rep " << rep << " size " << t.class_size[c] << " centralizer "
              << t.centralizer_order[static_cast<std::size_t>(rep)] << "\n";
  }
}

void cmd_transfer(const InputOptions& io, const std::string& group_spec,
                  const std::string& theory_flag, const std::string& format) {
  const PipelineInput in = resolve_input(io);
  const FiniteGroup g = load_group(group_spec);
  Theory theory = in.cob.theory;
  if (!theory_flag.empty()) theory = parse_theory(theory_flag);
  WorkBudget budget(budget_limit());
  const TransferMatrix m = theory == Theory::closed ? transfer_matrix(in.cob, g, budget)
                                                    : transfer_matrix_relative(in.cob, g, budget);
  if (format == "json") {
    std::cout << "{\"command\":\"transfer\",\"theory\":\"" << theory_name(m.theory)
              << "\",\"rows\":";
    json_label_array(std::cout, m.row_basis);
    std::cout << ",\"cols\":";
    json_label_array(std::cout, m.col_basis);
    std::cout << ",\"entries\":";
    std::vector<Int> flat;
    flat.reserve(m.entries.rows() * m.entries.cols());
    for (std::size_t i = 0; i < m.entries.rows(); ++i)
      for (std::size_t j = 0; j < m.entries.cols(); ++j) flat.push_back(m.entries(i, j));
    json_int_array(std::cout, flat);
    std::cout << "}\n";
    return;
  }
  write_transfer_matrix(std::cout, m);
}

void cmd_counts(const InputOptions& io, const std::string& group_spec, int dmax, int mu_flag,
                bool verify, const std::string& format) {
  const PipelineInput in = resolve_input(io);
  const FiniteGroup g = load_group(group_spec);
  WorkBudget budget(budget_limit());
  const TransferMatrix m = transfer_matrix_relative(in.cob, g, budget);
  const int mu = mu_flag > 0 ? mu_flag : in.mu;
  const std::vector<Int> traces = periodic_point_counts(m, dmax);
  const std::vector<Int> counts = branched_cover_counts(m, g, mu, dmax);
  const IntPoly cp = char_poly(m);

  bool recursion_ok = false;
  int checked_through = 0;
  if (verify) {
    checked_through = std::max(dmax, 2 * cp.degree() + 4);
    const RecursionCheck rc = verify_recursion(periodic_point_counts(m, checked_through), cp);
    if (!rc.ok)
      throw ConsistencyError("trace sequence violates its own characteristic recursion at d = " +
                             std::to_string(rc.first_violation));
    recursion_ok = true;
  }

  if (format == "json") {
    std::cout << "{\"command\":\"counts\",\"group_order\":" << g.order << ",\"mu\":" << mu
              << ",\"dmax\":" << dmax << ",\"traces\":";
    json_int_array(std::cout, traces);
    std::cout << ",\"counts\":";
    json_int_array(std::cout, counts);
    std::cout << ",\"char_poly\":";
    json_poly(std::cout, cp);
    if (verify)
      std::cout << ",\"recursion_ok\":" << (recursion_ok ? "true" : "false")
                << ",\"recursion_checked_through\":" << checked_through;
    std::cout << "}\n";
    return;
  }
  std::cout << "# d trace count\n";
  for (int d = 1; d <= dmax; ++d)
    std::cout << d << " " << traces[static_cast<std::size_t>(d - 1)] << " "
              << counts[static_cast<std::size_t>(d - 1)] << "\n";
  std::cout << "char_poly " << cp.to_string("t") << "\n";
  if (verify) std::cout << "recursion ok through d=" << checked_through << "\n";
}

void cmd_sse(const std::string& a_path, const std::string& b_path, const SSESearchBounds& bounds,
             const std::string& format) {
  IntMat a, b;
  try {
    a = NNMatrix(load_matrix(a_path)).mat();
    b = NNMatrix(load_matrix(b_path)).mat();
  } catch (const CliExit&) {
    throw;
  } catch (const Error& e) {
    throw CliExit{5, std::string("malformed shift matrix: ") + e.what()};
  }
  const ShiftInvariants ia = shift_invariants(a);
  const ShiftInvariants ib = shift_invariants(b);
  const InvariantComparison cmp = invariants_agree(ia, ib);

  static const char* kFields[] = {"zeta", "char_poly_away_from_zero", "bowen_franks",
                                  "invertible_part"};
  auto differs = [&](const char* f) {
    for (const std::string& d : cmp.disagreeing)
      if (d == f) return true;
    return false;
  };

  SSESearchResult result;
  if (cmp.agree) result = sse_search(a, b, bounds);
  const bool found = result.certificate.has_value();

  if (format == "json") {
    std::cout << "{\"command\":\"sse\",\"invariants_agree\":" << (cmp.agree ? "true" : "false")
              << ",\"disagreeing\":[";
    for (std::size_t i = 0; i < cmp.disagreeing.size(); ++i)
      std::cout << (i ? "," : "") << "\"" << json_escape(cmp.disagreeing[i]) << "\"";
    std::cout << "],\"verdict\":\""
              << (!cmp.agree ? "not_sse" : (found ? "certificate" : "unknown")) << "\"";
    if (found) std::cout << ",\"steps\":" << result.certificate->steps.size();
    if (cmp.agree)
      std::cout << ",\"states_visited\":" << result.states_visited << ",\"bounds_hit\":"
                << (result.bounds_hit ? "true" : "false");
    std::cout << "}\n";
    return;
  }

  for (const char* f : kFields)
    std::cout << "invariant " << f << (differs(f) ? " differ" : " agree") << "\n";
  if (!cmp.agree) {
    std::cout << "NOT SSE (" << cmp.disagreeing.front() << ")\n";
    return;
  }
  if (found) {
    const SSECertificate& cert = *result.certificate;
    std::cout << "SSE certificate steps " << cert.steps.size() << "\n";
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      const SSEStep& st = cert.steps[i];
      std::cout << "step " << i << (st.forward ? " forward" : " backward") << "\n";
      std::cout << "R:\n";
      write_matrix(std::cout, st.move.r);
      std::cout << "S:\n";
      write_matrix(std::cout, st.move.s);
    }
  } else {
    std::cout << "unknown within bounds\n";
    std::cout << "states_visited " << result.states_visited << "\n";
    std::cout << "bounds_hit " << (result.bounds_hit ? "yes" : "no") << "\n";
  }
}

void cmd_invariants(const std::string& path, const std::string& format) {
  const IntMat a = load_matrix(path);
  const ShiftInvariants inv = shift_invariants(a);
  if (format == "json") {
    std::cout << "{\"command\":\"invariants\",\"zeta_denominator\":";
    json_poly(std::cout, inv.zeta_denominator);
    std::cout << ",\"char_poly_away_from_zero\":";
    json_poly(std::cout, inv.cp_away_from_zero);
    std::cout << ",\"bowen_franks\":";
    json_int_array(std::cout, inv.bowen_franks);
    std::cout << ",\"invertible_part\":[";
    for (std::size_t i = 0; i < inv.invertible_part.size(); ++i) {
      std::cout << (i ? "," : "");
      json_rat_poly(std::cout, inv.invertible_part[i]);
    }
    std::cout << "]}\n";
    return;
  }
  std::cout << "zeta_denominator " << inv.zeta_denominator.to_string("t") << "\n";
  std::cout << "char_poly_away_from_zero " << inv.cp_away_from_zero.to_string("t") << "\n";
  std::cout << "bowen_franks";
  for (const Int& d : inv.bowen_franks) std::cout << " " << d;
  std::cout << "\n";
  if (inv.invertible_part.empty()) {
    std::cout << "invertible_part none\n";
  } else {
    for (const RatPoly& f : inv.invertible_part)
      std::cout << "invertible_part " << f.to_string("t") << "\n";
  }
}

void cmd_graph(const InputOptions& io, const std::string& group_spec, bool folded, bool labels,
               const std::string& dot_path) {
  const PipelineInput in = resolve_input(io);
  const FiniteGroup g = load_group(group_spec);
  WorkBudget budget(budget_limit());
  const TransferMatrix m = transfer_matrix_relative(in.cob, g, budget, labels && !folded);
  DirectedMultigraph graph = graph_hat(m);
  if (folded) graph = graph_folded(graph, g);
  const std::string name = folded ? "folded" : "cover";
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw CliExit{1, "cannot open output file '" + dot_path + "'"};
    write_dot(out, graph, name);
    std::cout << "vertices " << graph.vertex_labels.size() << "\n";
    std::cout << "edges " << graph.edges.size() << "\n";
    std::cout << "wrote " << dot_path << "\n";
    return;
  }
  write_dot(std::cout, graph, name);
}

void cmd_oracle(const InputOptions& io, const std::string& group_spec,
                const std::string& theory_flag, int dmax, const std::string& format) {
  const PipelineInput in = resolve_input(io);
  if (!in.has_action) throw CliExit{1, "oracle needs a knot, builtin, or braid input"};
  const FiniteGroup g = load_group(group_spec);
  const Theory theory = theory_flag.empty() ? Theory::relative : parse_theory(theory_flag);
  WorkBudget budget(budget_limit());
  const TransferMatrix m = theory == Theory::closed ? transfer_matrix(in.cob, g, budget)
                                                    : transfer_matrix_relative(in.cob, g, budget);
  std::vector<Int> lhs, rhs;
  for (int d = 1; d <= dmax; ++d) {
    lhs.push_back(cover_count(m, d, g));
    const Presentation direct = theory == Theory::closed
                                    ? mapping_torus_presentation(in.rank, in.action, d)
                                    : branched_quotient_presentation(in.rank, in.action, d);
    rhs.push_back(Int(enumerate_homs(direct, g, budget).size()));
  }
  bool all_match = true;
  for (int d = 1; d <= dmax; ++d)
    all_match = all_match && lhs[static_cast<std::size_t>(d - 1)] == rhs[static_cast<std::size_t>(d - 1)];

  if (format == "json") {
    std::cout << "{\"command\":\"oracle\",\"theory\":\"" << theory_name(theory) << "\",\"rows\":[";
    for (int d = 1; d <= dmax; ++d) {
      const std::size_t i = static_cast<std::size_t>(d - 1);
      std::cout << (d > 1 ? "," : "") << "{\"d\":" << d << ",\"transfer\":" << lhs[i]
                << ",\"direct\":" << rhs[i] << ",\"match\":" << (lhs[i] == rhs[i] ? "true" : "false")
                << "}";
    }
    std::cout << "],\"all_match\":" << (all_match ? "true" : "false") << "}\n";
  } else {
    std::cout << "# d transfer direct match\n";
    for (int d = 1; d <= dmax; ++d) {
      const std::size_t i = static_cast<std::size_t>(d - 1);
      std::cout << d << " " << lhs[i] << " " << rhs[i] << " "
                << (lhs[i] == rhs[i] ? "yes" : "NO") << "\n";
    }
    std::cout << (all_match ? "all match" : "MISMATCH") << "\n";
  }
  if (!all_match)
    throw ConsistencyError("transfer trace disagrees with direct enumeration");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group transfer matrices for cyclic covers and strong shift equivalence"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto format_check = CLI::IsMember({"text", "json"});

  auto* homs = app.add_subcommand("homs", "count homomorphisms of a presentation into a group");
  std::string homs_group, homs_pres;
  bool homs_list = false, homs_classes = false;
  homs->add_option("--group", homs_group, "group file or name like cyclic(3)")->required();
  homs->add_option("--presentation", homs_pres, "presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  homs->add_flag("--list", homs_list, "list every homomorphism");
  homs->add_flag("--classes", homs_classes, "also report conjugation orbits");
  homs->add_option("--format", format, "text or json")->check(format_check);

  auto* classes = app.add_subcommand("classes", "conjugacy classes of a group");
  std::string classes_group;
  classes->add_option("--group", classes_group, "group file or name")->required();
  classes->add_option("--format", format, "text or json")->check(format_check);

  auto* transfer = app.add_subcommand("transfer", "transfer matrix of a cobordism over a group");
  InputOptions transfer_in;
  std::string transfer_group, transfer_theory;
  add_input_options(transfer, transfer_in, true);
  transfer->add_option("--group", transfer_group, "group file or name")->required();
  transfer->add_option("--theory", transfer_theory, "closed or relative")
      ->check(CLI::IsMember({"closed", "relative"}));
  transfer->add_option("--format", format, "text or json")->check(format_check);

  auto* counts = app.add_subcommand("counts", "cyclic branched cover hom counts");
  InputOptions counts_in;
  std::string counts_group;
  int counts_dmax = 6, counts_mu = 0;
  bool counts_verify = false;
  add_input_options(counts, counts_in, true);
  counts->add_option("--group", counts_group, "group file or name")->required();
  counts->add_option("--dmax", counts_dmax, "largest cover degree")->check(CLI::PositiveNumber);
  counts->add_option("--mu", counts_mu, "branch component count override")
      ->check(CLI::PositiveNumber);
  counts->add_flag("--verify-recursion", counts_verify,
                   "check the characteristic-polynomial recursion");
  counts->add_option("--format", format, "text or json")->check(format_check);

  auto* sse = app.add_subcommand("sse", "strong shift equivalence: invariants then bounded search");
  std::string sse_a, sse_b;
  SSESearchBounds bounds;
  long long entry_bound = 3;
  sse->add_option("matrix_a", sse_a, "first shift matrix file")->required();
  sse->add_option("matrix_b", sse_b, "second shift matrix file")->required();
  sse->add_option("--max-depth", bounds.max_depth, "longest move chain")->check(CLI::PositiveNumber);
  sse->add_option("--max-inner-dim", bounds.max_inner_dim, "largest inner dimension")
      ->check(CLI::PositiveNumber);
  sse->add_option("--entry-bound", entry_bound, "largest factor entry")->check(CLI::PositiveNumber);
  sse->add_option("--max-states", bounds.max_states, "state cap for the search");
  sse->add_option("--max-work", bounds.max_work, "factor-candidate cap for the search");
  sse->add_option("--format", format, "text or json")->check(format_check);

  auto* invariants = app.add_subcommand("invariants", "shift equivalence invariants of a matrix");
  std::string inv_path;
  invariants->add_option("matrix", inv_path, "shift matrix file")->required();
  invariants->add_option("--format", format, "text or json")->check(format_check);

  auto* graph = app.add_subcommand("graph", "covering multigraph in DOT form");
  InputOptions graph_in;
  std::string graph_group, graph_dot;
  bool graph_folded_flag = false, graph_labels = false;
  add_input_options(graph, graph_in, true);
  graph->add_option("--group", graph_group, "group file or name")->required();
  graph->add_flag("--folded", graph_folded_flag, "fold by the conjugation action");
  graph->add_flag("--labels", graph_labels, "label edges with total-space homs");
  graph->add_option("--dot", graph_dot, "write DOT here instead of stdout");

  auto* oracle = app.add_subcommand(
      "oracle", "compare transfer-matrix counts against direct enumeration");
  InputOptions oracle_in;
  std::string oracle_group, oracle_theory;
  int oracle_dmax = 4;
  add_input_options(oracle, oracle_in, false);
  oracle->add_option("--group", oracle_group, "group file or name")->required();
  oracle->add_option("--theory", oracle_theory, "closed or relative")
      ->check(CLI::IsMember({"closed", "relative"}));
  oracle->add_option("--dmax", oracle_dmax, "largest cover degree")->check(CLI::PositiveNumber);
  oracle->add_option("--format", format, "text or json")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    bounds.entry_bound = Int(entry_bound);
    if (homs->parsed()) {
      cmd_homs(homs_group, homs_pres, homs_list, homs_classes, format);
    } else if (classes->parsed()) {
      cmd_classes(classes_group, format);
    } else if (transfer->parsed()) {
      cmd_transfer(transfer_in, transfer_group, transfer_theory, format);
    } else if (counts->parsed()) {
      cmd_counts(counts_in, counts_group, counts_dmax, counts_mu, counts_verify, format);
    } else if (sse->parsed()) {
      cmd_sse(sse_a, sse_b, bounds, format);
    } else if (invariants->parsed()) {
      cmd_invariants(inv_path, format);
    } else if (graph->parsed()) {
      cmd_graph(graph_in, graph_group, graph_folded_flag, graph_labels, graph_dot);
    } else if (oracle->parsed()) {
      cmd_oracle(oracle_in, oracle_group, oracle_theory, oracle_dmax, format);
    }
    return 0;
  } catch (const CliExit& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
