#include "recon/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "recon/catalog.hpp"
#include "recon/confusability.hpp"
#include "recon/constructions.hpp"
#include "recon/counting.hpp"
#include "recon/error.hpp"
#include "recon/oracle.hpp"
#include "recon/reconstruct.hpp"

namespace recon::cli {

namespace {

struct VerificationFailure {};

LabeledGraph load_labeled(const std::string& path, std::size_t k) {
  GraphText text = read_graph_file(path);
  if (!text.labels) fail(ErrorCode::UsageError, path + " has no labels line");
  return labeled_from_text(text, k);
}

std::string status_line(const ReconstructionResult& r) {
  return "RESULT " + to_string(r.status) + " queries=" + std::to_string(r.sum_queries) + "/" +
         std::to_string(r.multiset_queries);
}

// reconstruct --graph <file> --algo <name|auto|brute> --k <int>
struct ReconstructArgs {
  std::string graph;
  std::string algo = "auto";
  std::size_t k = 0;
  bool verify = false;
};

int do_reconstruct(const ReconstructArgs& a, std::ostream& out) {
  LabeledGraph hidden = load_labeled(a.graph, a.k);
  std::string name = a.algo == "auto" ? choose_algorithm(hidden.graph, hidden.alphabet.size()) : a.algo;
  QueryLedger ledger(hidden);
  ReconstructionResult r = reconstruct_named(ledger, name);
  out << "ALGO " << name << "\n";
  for (const auto& q : r.transcript) out << report_line(q) << "\n";
  out << "LABELS " << hidden.alphabet.format(r.labeling) << "\n";
  if (r.status == Status::AmbiguousWitness)
    for (const auto& c : r.candidates) out << "CANDIDATE " << hidden.alphabet.format(c) << "\n";
  out << status_line(r) << "\n";
  if (a.verify) {
    bool ok = r.status == Status::Unique && labelings_isomorphic(hidden.graph, r.labeling, hidden.labeling);
    out << "VERIFIED isomorphic=" << (ok ? "true" : "false") << "\n";
    if (!ok) throw VerificationFailure{};
  }
  return kOk;
}

// scan --order <n> [--trees-only] [--sum] [--verify], or --family <spec>
struct ScanArgs {
  int order = 0;
  std::string family;
  bool trees_only = false;
  bool sum = false;
  bool verify = false;
};

int do_scan(const ScanArgs& a, std::ostream& out) {
  ScanReport report;
  if (!a.family.empty()) {
    FamilySpec spec = parse_family(a.family);
    report = survey({generate(spec)}, {spec.to_string()});
  } else {
    if (a.order < 1) fail(ErrorCode::UsageError, "scan needs --order or --family");
    report = survey_order(a.order, a.trees_only);
  }
  bool all_ok = true;
  for (const auto& e : report.entries) {
    std::size_t k = 2;
    for (const auto* w : {e.witness ? &*e.witness : nullptr, e.sum_witness ? &*e.sum_witness : nullptr})
      if (w)
        for (const auto* l : {&w->first, &w->second})
          for (Symbol s : *l) k = std::max<std::size_t>(k, s + 1u);
    Alphabet alphabet = Alphabet::standard(k);
    out << "CARRIER " << e.id << " name=" << identify(e.carrier) << " edges=" << format_edges(e.carrier) << "\n";
    out << "CLASS " << e.id << " " << to_string(e.verdict) << "\n";
    if (e.witness)
      out << "WITNESS " << e.id << " " << alphabet.format(e.witness->first) << " " << alphabet.format(e.witness->second)
          << "\n";
    if (a.sum && e.sum_witness)
      out << "SUMWITNESS " << e.id << " " << alphabet.format(e.sum_witness->first) << " "
          << alphabet.format(e.sum_witness->second) << "\n";
    if (a.verify) {
      bool ok = verify_entry(e);
      all_ok = all_ok && ok;
      out << "VERIFIED " << e.id << " " << (ok ? "ok" : "failed") << "\n";
    }
  }
  out << "SUMMARY carriers=" << report.entries.size()
      << " confusable=" << report.with_verdict(Verdict::Confusable).size()
      << " reconstructable-not-sum=" << report.with_verdict(Verdict::ReconstructableNotSum).size()
      << " sum-reconstructable=" << report.with_verdict(Verdict::SumReconstructable).size() << "\n";
  if (!all_ok) throw VerificationFailure{};
  return kOk;
}

// construct --kind {interleave|tm-pair|attach|star-family} ...
struct ConstructArgs {
  std::string kind;
  std::string p1, p2;
  int p = 1;
  std::string graph;
  int x = 0;
  std::size_t k = 2;
  int m = 3;
  std::string bits;
  std::string out_dir;
  bool verify = false;
};

void emit(const ConstructArgs& a, std::ostream& out, const std::string& name, const LabeledGraph& lg) {
  std::string text = serialize_graph(lg);
  if (a.out_dir.empty()) {
    out << "# " << name << "\n" << text;
    return;
  }
  std::filesystem::create_directories(a.out_dir);
  std::string path = (std::filesystem::path(a.out_dir) / (name + ".g")).string();
  write_text_file(path, text);
  out << "WROTE " << path << "\n";
}

int do_construct(const ConstructArgs& a, std::ostream& out) {
  std::vector<std::pair<std::string, LabeledGraph>> graphs;
  if (a.kind == "interleave") {
    Alphabet alphabet = Alphabet::standard(std::max<std::size_t>(a.k, 2));
    auto pair = interleaved_pair(alphabet.parse(a.p1), alphabet.parse(a.p2), alphabet.size());
    graphs = {{"interleave-1", pair.first}, {"interleave-2", pair.second}};
  } else if (a.kind == "tm-pair") {
    auto pair = tm_pair(a.p);
    graphs = {{"tm-pair-1", pair.first}, {"tm-pair-2", pair.second}};
  } else if (a.kind == "attach") {
    if (a.graph.empty()) fail(ErrorCode::UsageError, "attach needs --graph");
    LabeledGraph base = load_labeled(a.graph, 0);
    auto pair = attach_at_center(base, a.x, base.alphabet.parse(a.p1), base.alphabet.parse(a.p2));
    graphs = {{"attach-1", pair.first}, {"attach-2", pair.second}};
  } else if (a.kind == "star-family") {
    std::vector<bool> bits;
    for (char c : a.bits) {
      if (c != '0' && c != '1') fail(ErrorCode::UsageError, "--bits takes a 0/1 string");
      bits.push_back(c == '1');
    }
    graphs = {{"star-family-" + (a.bits.empty() ? std::string("none") : a.bits), subdivided_star_family(a.k, a.m, bits)}};
    if (a.verify) {
      std::vector<bool> zero(bits.size(), false);
      graphs.emplace_back("star-family-base", subdivided_star_family(a.k, a.m, zero));
    }
  } else {
    fail(ErrorCode::UsageError, "unknown construction kind '" + a.kind + "'");
  }
  for (const auto& [name, lg] : graphs) emit(a, out, name, lg);
  if (a.verify) {
    bool ok = equicomposable(graphs[0].second, graphs[1].second);
    out << "VERIFIED equicomposable=" << (ok ? "true" : "false") << "\n";
    if (!ok) throw VerificationFailure{};
  }
  return kOk;
}

// count --family <spec> --k <int> [--enumerate]
int do_count(const std::string& family, std::size_t k, bool enumerate, std::ostream& out) {
  FamilySpec spec = parse_family(family);
  CountResult r = enumerate ? chi_enumerate(generate(spec), k, spec.to_string()) : chi_closed(spec, k);
  out << report_line(r) << "\n";
  return kOk;
}

// atlas --order <n> [--trees-only] --out <dir>
int do_atlas(int order, bool trees_only, const std::string& dir, std::ostream& out) {
  std::vector<Graph> graphs = trees_only ? enumerate_trees(order) : enumerate_connected_graphs(order);
  std::string family = trees_only ? "tree" : "graph";
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::string name = family + "-" + std::to_string(order) + "-" + std::to_string(i + 1) + ".g";
    std::string path = (std::filesystem::path(dir) / name).string();
    write_text_file(path, serialize_graph(graphs[i]));
    out << "WROTE " << path << "\n";
  }
  out << "ATLAS " << family << " " << order << " " << graphs.size() << "\n";
  return kOk;
}

// oracle --graph <file>: answers "M <t>" and "S <t>" lines from `in`.
int do_oracle(const std::string& graph, std::size_t k, std::ostream& out, std::istream& in) {
  QueryLedger ledger(load_labeled(graph, k));
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string kind;
    int t = 0;
    if (!(words >> kind)) continue;
    try {
      if (!(words >> t) || (kind != "M" && kind != "S"))
        fail(ErrorCode::ParseError, "expected 'M <t>' or 'S <t>', got '" + line + "'");
      if (kind == "M")
        out << fingerprint(ledger.multiset_query(t)) << "\n";
      else
        out << ledger.sum_query(t).to_string() << "\n";
    } catch (const Error& e) {
      out << "ERROR " << to_string(e.code()) << " " << e.what() << "\n";
    }
    out.flush();
  }
  out << "TOTAL queries=" << ledger.total(QueryKind::Sum) << "/" << ledger.total(QueryKind::Multiset) << "\n";
  return kOk;
}

bool usage_class(ErrorCode code) {
  return code == ErrorCode::UsageError || code == ErrorCode::ParseError || code == ErrorCode::IoError ||
         code == ErrorCode::InvalidSpec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in) {
  CLI::App app{"Composition-query reconstruction of labeled graphs", "recon"};
  app.require_subcommand(1);

  ReconstructArgs ra;
  auto* rec = app.add_subcommand("reconstruct", "Recover a hidden labeling through oracle queries");
  rec->add_option("--graph", ra.graph, "Labeled graph file")->required();
  rec->add_option("--algo", ra.algo, "Algorithm name, auto or brute");
  rec->add_option("--k", ra.k, "Alphabet size (0 infers it from the labels)");
  rec->add_flag("--verify", ra.verify, "Check the result against the hidden labeling");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Classify every carrier of one order");
  scan->add_option("--order", sa.order, "Carrier order");
  scan->add_option("--family", sa.family, "Classify one family member instead, e.g. tail:4");
  scan->add_flag("--trees-only", sa.trees_only, "Trees only");
  scan->add_flag("--sum", sa.sum, "Also print sum-only witnesses");
  scan->add_flag("--verify", sa.verify, "Re-check every witness");

  ConstructArgs ca;
  auto* con = app.add_subcommand("construct", "Build equicomposable labeled graphs");
  con->add_option("--kind", ca.kind, "interleave, tm-pair, attach or star-family")->required();
  con->add_option("--p1", ca.p1, "Outer path word");
  con->add_option("--p2", ca.p2, "Interleaved word");
  con->add_option("--p", ca.p, "T_{2p} parameter");
  con->add_option("--graph", ca.graph, "Base graph file for attach");
  con->add_option("--x", ca.x, "Attachment vertex of the base graph");
  con->add_option("--k", ca.k, "Alphabet size");
  con->add_option("--m", ca.m, "Class path length for star-family");
  con->add_option("--bits", ca.bits, "Choice bits for star-family");
  con->add_option("--out", ca.out_dir, "Directory for the graph files");
  con->add_flag("--verify", ca.verify, "Check equicomposability");

  std::string family;
  std::size_t count_k = 2;
  bool enumerate = false;
  auto* cnt = app.add_subcommand("count", "Count non-isomorphic labelings");
  cnt->add_option("--family", family, "Family spec, e.g. path:4")->required();
  cnt->add_option("--k", count_k, "Alphabet size")->required();
  cnt->add_flag("--enumerate", enumerate, "Count by orbit enumeration");

  int atlas_order = 0;
  bool atlas_trees = false;
  std::string atlas_dir;
  auto* atl = app.add_subcommand("atlas", "Write every connected graph or tree of one order");
  atl->add_option("--order", atlas_order, "Order")->required();
  atl->add_flag("--trees-only", atlas_trees, "Trees only");
  atl->add_option("--out", atlas_dir, "Output directory")->required();

  std::string oracle_graph;
  std::size_t oracle_k = 0;
  auto* ora = app.add_subcommand("oracle", "Answer M <t> / S <t> queries read from stdin");
  ora->add_option("--graph", oracle_graph, "Labeled graph file")->required();
  ora->add_option("--k", oracle_k, "Alphabet size (0 infers it from the labels)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << "ERROR UsageError " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (rec->parsed()) return do_reconstruct(ra, out);
    if (scan->parsed()) return do_scan(sa, out);
    if (con->parsed()) return do_construct(ca, out);
    if (cnt->parsed()) return do_count(family, count_k, enumerate, out);
    if (atl->parsed()) return do_atlas(atlas_order, atlas_trees, atlas_dir, out);
    if (ora->parsed()) return do_oracle(oracle_graph, oracle_k, out, in);
  } catch (const VerificationFailure&) {
    return kVerificationFailed;
  } catch (const Error& e) {
    out << "ERROR " << to_string(e.code()) << " " << e.what() << "\n";
    return usage_class(e.code()) ? kUsage : kVerificationFailed;
  } catch (const std::filesystem::filesystem_error& e) {
    out << "ERROR IoError " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace recon::cli
