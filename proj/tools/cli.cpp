#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "kgap/acceptance.hpp"
#include "kgap/dilator.hpp"
#include "kgap/error.hpp"
#include "kgap/fixed_point.hpp"
#include "kgap/gap_order.hpp"
#include "kgap/min_bad.hpp"
#include "kgap/term_io.hpp"
#include "kgap/tree_gap.hpp"

namespace kgap::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string dilator = "multiset";
  std::string nu = "3";
  std::string labels = "0,1,2";
  std::uint64_t max_length = 5;
  std::size_t budget = 2;
  std::string format = "text";
  std::size_t chain_length = 4;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return json::parse(in);
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    std::string part = trim(text.substr(start, end - start));
    if (!part.empty()) out.push_back(std::move(part));
    start = end + 1;
  }
  return out;
}

FinitePoset z_order_from(const std::string& arg) {
  const auto colon = arg.find(':');
  const std::string kind = arg.substr(0, colon);
  if (colon != std::string::npos && (kind == "chain" || kind == "antichain")) {
    const std::string count = arg.substr(colon + 1);
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad Z order size '" + count + "'");
    }
    const std::size_t n = std::stoul(count);
    return kind == "chain" ? FinitePoset::chain(n) : FinitePoset::antichain(n);
  }
  FinitePoset z = poset_from_json(read_json_file(arg));
  if (const auto v = validate_poset(z); !v.empty()) {
    throw UsageError("Z order is not a partial order: " + v.front().law + "(" + v.front().witness + ")");
  }
  return z;
}

std::shared_ptr<const Dilator> dilator_from(const std::string& name) {
  if (name.rfind("cons:", 0) == 0) {
    return std::make_shared<LabeledConsDilator>(z_order_from(name.substr(5)));
  }
  if (name == "multiset" || name == "oneplus" || name == "multiset-relaxed") {
    return make_dilator(name);
  }
  throw UsageError("unknown dilator '" + name + "' (multiset, oneplus, cons:<Z-file>)");
}

class Session {
 public:
  explicit Session(const Config& c) : config(c), nu(Ordinal::parse(c.nu)) {
    if (c.budget < 1) throw UsageError("budget must be at least 1");
    if (c.format != "text" && c.format != "json" && c.format != "dot") {
      throw UsageError("format must be text, json or dot");
    }
  }

  TermStore& store() {
    if (!store_) store_ = std::make_unique<TermStore>(dilator_from(config.dilator), nu);
    return *store_;
  }

  std::vector<Ordinal> labels() const {
    std::vector<Ordinal> out;
    for (const auto& part : split(config.labels, ',')) out.push_back(Ordinal::parse(part));
    if (out.empty()) throw UsageError("label list is empty");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<TermId> fragment() {
    const auto ls = labels();
    return enumerate_terms(store(), ls, config.max_length, config.budget);
  }

  bool json_out() const { return config.format == "json"; }
  bool dot_out() const { return config.format == "dot"; }

  Config config;
  Ordinal nu;

 private:
  std::unique_ptr<TermStore> store_;
};

const char* verdict(bool leq) { return leq ? "LEQ" : "NLEQ"; }

void check_tree_labels(const LabeledTree& t, const Ordinal& nu) {
  if (!(t.label < nu)) {
    throw Error(Errc::label_out_of_range,
                "label " + t.label.to_string() + " is not below " + nu.to_string());
  }
  for (const auto& c : t.children) check_tree_labels(c, nu);
}

void print_trace(const TermStore& store, const LeqTrace& t, std::ostream& out, int depth) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << '[' << verdict(t.result)
      << "] " << format_term(store, t.s) << " <= " << format_term(store, t.t) << ": ";
  if (!t.label_ok) {
    out << "label " << store.node(t.s).label.to_string() << " > "
        << store.node(t.t).label.to_string() << '\n';
    return;
  }
  out << "(i) " << (t.clause_i ? "holds" : "fails") << "; (ii) ";
  if (t.witness) {
    out << "holds via " << format_term(store, *t.witness);
  } else {
    out << "fails";
  }
  out << '\n';
  for (const auto& c : t.children) print_trace(store, c, out, depth + 1);
}

json trace_json(const TermStore& store, const LeqTrace& t) {
  json j = {{"s", format_term(store, t.s)},
            {"t", format_term(store, t.t)},
            {"result", t.result},
            {"label", t.label_ok},
            {"clause_i", t.clause_i},
            {"clause_ii", t.clause_ii}};
  if (t.witness) j["witness"] = format_term(store, *t.witness);
  json kids = json::array();
  for (const auto& c : t.children) kids.push_back(trace_json(store, c));
  j["children"] = std::move(kids);
  return j;
}

int cmd_cmp(Session& session, const std::string& a, const std::string& b, bool explain,
            std::ostream& out) {
  const bool trees = a.find('[') != std::string::npos || b.find('[') != std::string::npos;
  bool result = false;
  std::unique_ptr<TermStore> tree_store;
  TermStore* store = nullptr;
  TermId s = 0;
  TermId t = 0;
  if (trees) {
    const LabeledTree ts = LabeledTree::parse(a);
    const LabeledTree tt = LabeledTree::parse(b);
    check_tree_labels(ts, session.nu);
    check_tree_labels(tt, session.nu);
    result = gap_leq(ts, tt);
    if (explain) {
      tree_store = std::make_unique<TermStore>(make_dilator("multiset"), session.nu);
      store = tree_store.get();
      s = tree_to_term(*store, ts);
      t = tree_to_term(*store, tt);
    }
  } else {
    store = &session.store();
    s = parse_term(*store, a);
    t = parse_term(*store, b);
    result = store->leq(s, t);
  }
  if (session.json_out()) {
    json j = {{"result", verdict(result)}, {"leq", result}};
    if (explain) j["trace"] = trace_json(*store, store->explain(s, t));
    out << j.dump(2) << '\n';
  } else {
    out << verdict(result) << '\n';
    if (explain) print_trace(*store, store->explain(s, t), out, 0);
  }
  return result ? kOk : kNo;
}

int cmd_enum(Session& session, const std::string& relation, std::ostream& out) {
  const auto terms = session.fragment();
  TermStore& store = session.store();
  if (session.dot_out()) {
    out << (relation == "gap" ? ll_dot(store, terms) : hasse_dot(store, terms));
  } else if (session.json_out()) {
    json list = json::array();
    for (const TermId t : terms) {
      const TermNode& n = store.node(t);
      list.push_back({{"term", format_term(store, t)},
                      {"label", n.label.to_string()},
                      {"length", n.length},
                      {"height", n.height}});
    }
    out << json{{"count", terms.size()}, {"terms", std::move(list)}}.dump(2) << '\n';
  } else {
    out << "count " << terms.size() << '\n';
    for (const TermId t : terms) out << format_term(store, t) << '\n';
  }
  return kOk;
}

int cmd_axioms(Session& session, const std::string& fault, std::ostream& out) {
  const auto terms = session.fragment();
  TermStore& store = session.store();
  if (!fault.empty() && fault != "antisym") throw UsageError("unknown fault '" + fault + "'");

  std::vector<std::pair<Element, Element>> pairs;
  for (const TermId a : terms) {
    for (const TermId b : terms) {
      if (store.leq(a, b)) pairs.emplace_back(a, b);
    }
  }
  if (fault == "antisym") {
    const auto strict = std::find_if(pairs.begin(), pairs.end(),
                                     [](const auto& p) { return p.first != p.second; });
    if (strict != pairs.end()) pairs.emplace_back(strict->second, strict->first);
  }
  std::vector<Violation> all = validate_poset(FinitePoset::from_pairs(terms, pairs));
  for (auto& v : all) {
    std::string readable;
    for (const auto& id : split(v.witness, ',')) {
      if (!readable.empty()) readable += " , ";
      readable += format_term(store, static_cast<TermId>(std::stoul(id)));
    }
    v.witness = readable;
  }
  for (const auto& v : check_height_criterion(store, terms)) all.push_back(v);
  const GapFragment gap(store, terms);
  for (const auto& v : check_gap_axioms(gap, session.config.chain_length)) all.push_back(v);
  std::vector<Ordinal> gammas = session.labels();
  for (const auto& v : check_k_set_laws(store, terms, gammas)) all.push_back(v);

  static const char* const kLaws[] = {"reflexivity", "antisymmetry", "transitivity",
                                      "height",      "axiom_i",      "axiom_ii",
                                      "axiom_iii",   "axiom_iv",     "axiom_v",
                                      "kset_monotone", "kset_idempotent"};
  bool ok = true;
  json report = json::array();
  if (!session.json_out()) out << "fragment " << terms.size() << " terms\n";
  for (const char* law : kLaws) {
    std::vector<std::string> witnesses;
    for (const auto& v : all) {
      if (v.law == law) witnesses.push_back(v.witness);
    }
    ok = ok && witnesses.empty();
    if (session.json_out()) {
      report.push_back({{"axiom", law}, {"pass", witnesses.empty()}, {"witnesses", witnesses}});
    } else if (witnesses.empty()) {
      out << "PASS " << law << '\n';
    } else {
      out << "FAIL " << law << ": " << witnesses.front();
      if (witnesses.size() > 1) out << " (+" << witnesses.size() - 1 << " more)";
      out << '\n';
    }
  }
  if (session.json_out()) {
    out << json{{"fragment", terms.size()}, {"pass", ok}, {"axioms", std::move(report)}}.dump(2)
        << '\n';
  }
  return ok ? kOk : kNo;
}

void print_terms(Session& session, const std::vector<TermId>& ids, std::ostream& out) {
  TermStore& store = session.store();
  if (session.json_out()) {
    json list = json::array();
    for (const TermId t : ids) list.push_back(format_term(store, t));
    out << list.dump(2) << '\n';
    return;
  }
  for (const TermId t : ids) out << format_term(store, t) << '\n';
}

LabelMap parse_label_map(const std::string& text) {
  LabelMap map;
  for (const auto& entry : split(text, ',')) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos) throw UsageError("label map entries look like 0:1");
    map.emplace(Ordinal::parse(trim(entry.substr(0, colon))),
                Ordinal::parse(trim(entry.substr(colon + 1))));
  }
  if (map.empty()) throw UsageError("label map is empty");
  return map;
}

std::string strip_angles(std::string text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    text = text.substr(1, text.size() - 2);
  }
  return text;
}

ZSequence parse_z_sequence(const std::string& text, const FinitePoset& z) {
  ZSequence seq;
  for (const auto& part : split(strip_angles(text), ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(part, &used);
    if (used != part.size() || !z.contains(static_cast<Element>(v))) {
      throw UsageError("'" + part + "' is not an element of Z");
    }
    seq.push_back(static_cast<Element>(v));
  }
  return seq;
}

std::string format_z_sequence(const ZSequence& seq) {
  std::string out = "<";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(seq[i]);
  }
  return out + ">";
}

int cmd_higman(Session& session, const std::string& z_arg, const std::vector<std::string>& values,
               std::ostream& out) {
  FinitePoset z;
  if (!z_arg.empty()) {
    z = z_order_from(z_arg);
  } else if (session.config.dilator.rfind("cons:", 0) == 0) {
    z = z_order_from(session.config.dilator.substr(5));
  } else {
    z = FinitePoset::antichain(2);
  }
  TermStore store(std::make_shared<LabeledConsDilator>(z), Ordinal::nat(1));
  auto to_term = [&](const std::string& v) {
    return v.find('*') != std::string::npos ? parse_term(store, v)
                                            : higman_to_term(store, parse_z_sequence(v, z));
  };
  if (values.size() == 1) {
    const std::string& v = values.front();
    if (v.find('*') != std::string::npos) {
      out << format_z_sequence(term_to_higman(store, parse_term(store, v))) << '\n';
    } else {
      out << format_term(store, higman_to_term(store, parse_z_sequence(v, z))) << '\n';
    }
    return kOk;
  }
  const TermId a = to_term(values[0]);
  const TermId b = to_term(values[1]);
  const bool seq_leq = higman_leq(z, term_to_higman(store, a), term_to_higman(store, b));
  const bool term_leq = store.leq(a, b);
  out << "higman " << verdict(seq_leq) << "\nterms " << verdict(term_leq) << '\n';
  return term_leq ? kOk : kNo;
}

LabelSequence parse_label_sequence(const std::string& text) {
  LabelSequence seq;
  for (const auto& part : split(strip_angles(text), ',')) seq.push_back(Ordinal::parse(part));
  return seq;
}

int cmd_omeganu(Session& session, const std::vector<std::string>& values, std::ostream& out) {
  TermStore store(make_dilator("oneplus"), session.nu);
  const LabelSequence a = parse_label_sequence(values[0]);
  const TermId ta = omega_nu_embed(store, a);
  if (values.size() == 1) {
    out << format_term(store, ta) << '\n';
    return kOk;
  }
  const LabelSequence b = parse_label_sequence(values[1]);
  const TermId tb = omega_nu_embed(store, b);
  const bool term_leq = store.leq(ta, tb);
  out << "lex " << verdict(omega_nu_leq(a, b)) << "\nterms " << verdict(term_leq) << '\n';
  return term_leq ? kOk : kNo;
}

int cmd_minbad(Session& session, const std::string& path, const std::string& beta_text,
               std::size_t depth, bool brute, std::ostream& out) {
  TermStore& store = session.store();
  const PrefixTree tree = prefix_tree_from_json(store, read_json_file(path));
  const Ordinal beta = Ordinal::parse(beta_text);
  const FiniteSeq g = brute ? brute_min_branch(store, tree, beta, depth)
                            : beta_minimal_branch(store, tree, beta, depth);
  const bool certified = !smaller_branch(store, tree, beta, depth, g).has_value();
  if (session.json_out()) {
    json entries = json::array();
    for (const auto& e : g.entries()) {
      entries.push_back({{"index", e.index},
                         {"term", format_term(store, e.value)},
                         {"p_beta", p_beta(beta, store, e.value).to_string()}});
    }
    out << json{{"branch", std::move(entries)}, {"certified", certified}}.dump(2) << '\n';
  } else {
    out << "branch " << g.size() << '\n';
    for (const auto& e : g.entries()) {
      out << e.index << ' ' << format_term(store, e.value) << " p="
          << p_beta(beta, store, e.value).to_string() << '\n';
    }
    out << (certified ? "certified: no smaller branch\n" : "NOT certified\n");
  }
  return certified ? kOk : kNo;
}

int cmd_antichain(Session& session, std::size_t size, bool greedy, std::ostream& out) {
  const auto terms = session.fragment();
  const auto found = find_antichain(session.store(), terms, size, !greedy);
  if (!found) {
    if (session.json_out()) {
      out << "null\n";
    } else {
      out << "none\n";
    }
    return kNo;
  }
  print_terms(session, *found, out);
  return kOk;
}

int cmd_selftest(bool quick, const std::string& fault, const std::vector<std::string>& only,
                 std::ostream& out) {
  SuiteOptions options;
  options.quick = quick;
  options.inject_fault = fault;
  if (!fault.empty() && fault != "antisym") throw UsageError("unknown fault '" + fault + "'");
  const auto ids = only.empty() ? suite_ids() : only;
  bool ok = true;
  double total = 0;
  for (const auto& id : ids) {
    const SuiteResult r = run_suite(id, options);
    ok = ok && r.passed;
    total += r.seconds;
    out << (r.passed ? "PASS " : "FAIL ") << r.number << ' ' << r.id << " checked=" << r.checked
        << " time=" << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    for (const auto& v : r.violations) out << "  " << v << '\n';
  }
  out << "selftest " << (ok ? "PASS" : "FAIL") << " total=" << std::fixed << std::setprecision(2)
      << total << "s\n";
  return ok ? kOk : kNo;
}

void apply_config_file(const std::string& path, Config& cfg, const std::vector<CLI::Option*>& given) {
  const json j = read_json_file(path);
  auto explicit_flag = [&](const char* name) {
    return std::any_of(given.begin(), given.end(), [&](const CLI::Option* o) {
      return o->check_lname(name) && o->count() > 0;
    });
  };
  if (j.contains("dilator") && !explicit_flag("dilator")) cfg.dilator = j["dilator"];
  if (j.contains("nu") && !explicit_flag("nu")) cfg.nu = j["nu"];
  if (j.contains("labels") && !explicit_flag("labels")) {
    if (j["labels"].is_array()) {
      cfg.labels.clear();
      for (const auto& l : j["labels"]) {
        if (!cfg.labels.empty()) cfg.labels += ',';
        cfg.labels += l.is_string() ? l.get<std::string>() : l.dump();
      }
    } else {
      cfg.labels = j["labels"];
    }
  }
  if (j.contains("max_length") && !explicit_flag("max-length")) cfg.max_length = j["max_length"];
  if (j.contains("budget") && !explicit_flag("budget")) cfg.budget = j["budget"];
  if (j.contains("format") && !explicit_flag("format")) cfg.format = j["format"];
  if (j.contains("chain_length") && !explicit_flag("chain-length")) {
    cfg.chain_length = j["chain_length"];
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gap embeddability, dilator fixed points and gap orders on finite fragments",
               "kgap"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string config_path;
  std::vector<CLI::Option*> shared;
  shared.push_back(app.add_option("--dilator", cfg.dilator, "multiset | oneplus | cons:<Z-file>")
                       ->capture_default_str());
  shared.push_back(app.add_option("--nu", cfg.nu, "label bound (ordinal)")->capture_default_str());
  shared.push_back(
      app.add_option("--labels", cfg.labels, "comma-separated labels")->capture_default_str());
  shared.push_back(
      app.add_option("--max-length", cfg.max_length, "largest term length")->capture_default_str());
  shared.push_back(
      app.add_option("--budget", cfg.budget, "largest multiset payload")->capture_default_str());
  shared.push_back(
      app.add_option("--format", cfg.format, "text | json | dot")->capture_default_str());
  shared.push_back(app.add_option("--chain-length", cfg.chain_length, "chain bound for axiom (iii)")
                       ->capture_default_str());
  app.add_option("--config", config_path, "JSON file with the options above");

  std::string a;
  std::string b;
  bool explain = false;
  auto* cmp = app.add_subcommand("cmp", "compare two terms or two trees");
  cmp->add_option("s", a)->required();
  cmp->add_option("t", b)->required();
  cmp->add_flag("--explain", explain, "print the clause trace");

  std::string relation = "order";
  auto* enumerate = app.add_subcommand("enum", "list the fragment");
  enumerate->add_option("--relation", relation, "order | gap (for dot output)")
      ->check(CLI::IsMember({"order", "gap"}));

  std::string fault;
  auto* axioms = app.add_subcommand("axioms", "check order and gap-order axioms on the fragment");
  axioms->add_option("--inject-fault", fault, "corrupt the order (antisym)");

  std::string gamma;
  std::string term;
  auto* kset = app.add_subcommand("kset", "K_gamma of a term");
  kset->add_option("gamma", gamma)->required();
  kset->add_option("term", term)->required();

  auto* ll_cmd = app.add_subcommand("ll", "decide s << t");
  ll_cmd->add_option("s", a)->required();
  ll_cmd->add_option("t", b)->required();

  auto* rank_cmd = app.add_subcommand("rank", "rank of a term under <<");
  rank_cmd->add_option("term", term)->required();

  std::string beta = "0";
  auto* pbeta = app.add_subcommand("pbeta", "omega * q_beta + rank");
  pbeta->add_option("beta", beta)->required();
  pbeta->add_option("term", term)->required();

  std::string map_text;
  std::string target_nu;
  auto* embed = app.add_subcommand("embed", "embed a term along a label map");
  embed->add_option("--map", map_text, "e.g. 0:1,1:2")->required();
  embed->add_option("--target-nu", target_nu, "label bound of the target (default: --nu)");
  embed->add_option("term", term)->required();

  std::string z_arg;
  std::vector<std::string> values;
  auto* higman = app.add_subcommand("higman", "sequences over Z <-> cons terms");
  higman->add_option("--z", z_arg, "chain:N | antichain:N | poset JSON file");
  higman->add_option("values", values, "sequence like <0,1> or term; two values compare")
      ->required()
      ->expected(1, 2);

  auto* omeganu = app.add_subcommand("omeganu", "decreasing label sequences -> 1+X terms");
  omeganu->add_option("values", values, "sequence like <2,1,0>; two values compare")
      ->required()
      ->expected(1, 2);

  std::string tree_file;
  std::size_t depth = 0;
  bool brute = false;
  auto* minbad = app.add_subcommand("minbad", "beta-minimal branch of a prefix tree");
  minbad->add_option("tree", tree_file, "prefix tree JSON")->required();
  minbad->add_option("--beta", beta)->capture_default_str();
  minbad->add_option("--depth", depth)->required();
  minbad->add_flag("--brute", brute, "enumerate all branches instead of greedy selection");

  std::size_t size = 2;
  bool greedy = false;
  auto* antichain = app.add_subcommand("antichain", "find an antichain in the fragment");
  antichain->add_option("--size", size)->capture_default_str();
  antichain->add_flag("--greedy", greedy, "greedy search (may miss)");

  bool quick = false;
  std::vector<std::string> suites;
  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  selftest->add_flag("--quick", quick, "smaller instances");
  selftest->add_option("--inject-fault", fault, "corrupt the order (antisym)");
  selftest->add_option("--suite", suites, "run only these suites")
      ->check(CLI::IsMember(suite_ids()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path, cfg, shared);
    Session session(cfg);
    if (*cmp) return cmd_cmp(session, a, b, explain, out);
    if (*enumerate) return cmd_enum(session, relation, out);
    if (*axioms) return cmd_axioms(session, fault, out);
    if (*kset) {
      const TermId t = parse_term(session.store(), term);
      auto ids = k_set(session.store(), Ordinal::parse(gamma), t);
      session.store().sort_canonically(ids);
      print_terms(session, ids, out);
      return kOk;
    }
    if (*ll_cmd) {
      TermStore& store = session.store();
      const TermId s = parse_term(store, a);
      const TermId t = parse_term(store, b);
      const bool result = ll(store, s, t);
      out << (result ? "true" : "false") << '\n';
      return result ? kOk : kNo;
    }
    if (*rank_cmd) {
      out << rank(session.store(), parse_term(session.store(), term)) << '\n';
      return kOk;
    }
    if (*pbeta) {
      const TermId t = parse_term(session.store(), term);
      out << p_beta(Ordinal::parse(beta), session.store(), t).to_string() << '\n';
      return kOk;
    }
    if (*embed) {
      TermStore& source = session.store();
      const TermId t = parse_term(source, term);
      TermStore target(source.dilator_ptr(),
                       target_nu.empty() ? session.nu : Ordinal::parse(target_nu));
      out << format_term(target, embed_into_larger(parse_label_map(map_text), source, t, target))
          << '\n';
      return kOk;
    }
    if (*higman) return cmd_higman(session, z_arg, values, out);
    if (*omeganu) return cmd_omeganu(session, values, out);
    if (*minbad) return cmd_minbad(session, tree_file, beta, depth, brute, out);
    if (*antichain) return cmd_antichain(session, size, greedy, out);
    if (*selftest) return cmd_selftest(quick, fault, suites, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kgap::cli
