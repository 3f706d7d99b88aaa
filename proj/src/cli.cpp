#include "monoid_ramsey/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "monoid_ramsey/boolmat_analysis.hpp"
#include "monoid_ramsey/errors.hpp"
#include "monoid_ramsey/families.hpp"
#include "monoid_ramsey/green.hpp"
#include "monoid_ramsey/io.hpp"
#include "monoid_ramsey/ramsey.hpp"

namespace monoid_ramsey {

namespace {

using json = nlohmann::json;

// What a subcommand produces: a machine-readable input/result pair and the
// human-readable text.
struct Report {
  json input = json::object();
  json result = json::object();
  std::ostringstream text;
  int exit_code = kExitSuccess;
};

struct GlobalOptions {
  bool json = false;
  std::optional<unsigned> threads;
  std::uint64_t seed = 1;
};

unsigned resolve_threads(const GlobalOptions& g) {
  if (g.threads) return *g.threads;
  if (const char* env = std::getenv("MONOID_RAMSEY_THREADS")) {
    unsigned value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
      throw UsageError("MONOID_RAMSEY_THREADS must be a positive integer");
    }
    return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

json labels(const FiniteMonoid& m, std::span<const Index> elements) {
  json out = json::array();
  for (Index a : elements) out.push_back(static_cast<std::size_t>(a) + m.label_base());
  return out;
}

std::string joined_labels(const FiniteMonoid& m, std::span<const Index> elements) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ' ';
    out += format_label(m, elements[i]);
  }
  return out;
}

std::string joined_cuts(const KDecomposition& d) {
  std::string out;
  for (std::size_t i = 0; i < d.cuts.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(d.cuts[i]);
  }
  return out;
}

// Monoid given either positionally or through --monoid.
struct MonoidArgument {
  std::string positional;
  std::string option;

  void attach(CLI::App* sub) {
    sub->add_option("spec", positional, "monoid spec, e.g. max:3 or table:<path>");
    sub->add_option("--monoid", option, "monoid spec");
  }
  MonoidSpec spec() const {
    if (positional.empty() == option.empty()) {
      throw UsageError("give the monoid either positionally or with --monoid");
    }
    return parse_monoid_spec(positional.empty() ? option : positional);
  }
};

void green_command(const MonoidSpec& spec, Report& r) {
  const FiniteMonoid m = build_monoid(spec);
  const GreenStructure g = green_structure(m);
  const RegularChain chain = longest_regular_chain(g);
  r.input = {{"monoid", spec.to_string()}};
  r.result = {{"elements", m.size()},
              {"d_classes", g.dclass_count()},
              {"regular_d_classes", g.regular_count()},
              {"h_classes", g.hclass_count()},
              {"regular_d_length", chain.length()}};
  r.text << "elements: " << m.size() << '\n'
         << "D-classes: " << g.dclass_count() << '\n'
         << "regular D-classes: " << g.regular_count() << '\n'
         << "H-classes: " << g.hclass_count() << '\n'
         << "regular D-length: " << chain.length() << '\n';
}

void dlength_command(const MonoidSpec& spec, bool witness, Report& r) {
  const FiniteMonoid m = build_monoid(spec);
  const GreenStructure g = green_structure(m);
  const RegularChain chain = longest_regular_chain(g);
  r.input = {{"monoid", spec.to_string()}, {"witness", witness}};
  r.result = {{"regular_d_length", chain.length()}};
  r.text << chain.length() << '\n';
  if (witness) {
    const MaxEmbedding e = chain_to_monomorphism(m, g, chain.classes);
    if (auto defect = max_embedding_defect(m, e)) {
      throw InternalError("chain produced an invalid embedding: " + *defect);
    }
    r.result["embedding"] = labels(m, e.images);
    r.text << "embedding: " << joined_labels(m, e.images) << '\n';
  }
}

Word load_word(const FiniteMonoid& m, const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::istringstream in(read_file(arg));
    return parse_word(m, in);
  }
  return parse_inline_word(m, arg);
}

void report_decomposition(const FiniteMonoid& m, const std::string& algorithm,
                          const std::optional<RamseyDecomposition>& d, Report& r) {
  r.result["algorithm"] = algorithm;
  r.result["found"] = d.has_value();
  r.text << "algorithm: " << algorithm << '\n';
  if (!d) {
    r.text << "no Ramsey decomposition\n";
    return;
  }
  r.result["cuts"] = d->decomposition.cuts;
  r.result["idempotent"] = static_cast<std::size_t>(d->idempotent) + m.label_base();
  r.text << "cuts: " << joined_cuts(d->decomposition) << '\n'
         << "idempotent: " << format_label(m, d->idempotent) << '\n';
}

struct DecomposeArgs {
  std::string monoid;
  std::string word;
  std::size_t k = 0;
  std::string algorithm = "auto";
  std::optional<std::size_t> n;
};

void decompose_command(const DecomposeArgs& a, Report& r) {
  const MonoidSpec spec = parse_monoid_spec(a.monoid);
  const FiniteMonoid m = build_monoid(spec);
  const Word u = load_word(m, a.word);
  r.input = {{"monoid", spec.to_string()}, {"word", labels(m, u)},
             {"k", a.k}, {"alg", a.algorithm}};
  if (a.k == 0) throw UsageError("--k must be positive");
  const bool is_max = spec.kind == MonoidSpec::Kind::kMax;

  auto checked = [&](RamseyDecomposition d) {
    if (!is_ramsey(m, u, d.decomposition)) {
      throw InternalError("extracted decomposition is not Ramsey");
    }
    return std::optional<RamseyDecomposition>(std::move(d));
  };
  auto max_length = [&] {
    std::optional<std::size_t> len = 1;
    for (std::size_t i = 0; i < spec.parameter && len; ++i) {
      if (*len > std::numeric_limits<std::size_t>::max() / a.k) len.reset();
      else *len *= a.k;
    }
    return len;
  };

  std::string alg = a.algorithm;
  if (alg == "auto") {
    const auto max_len = is_max ? max_length() : std::nullopt;
    if (m.is_group() && u.size() >= a.k * m.size()) {
      alg = "1";
    } else if (is_max && max_len && u.size() >= *max_len) {
      alg = "2";
    } else {
      report_decomposition(m, "exact", has_ramsey_decomposition(m, u, a.k), r);
      return;
    }
  }
  if (alg == "1") {
    report_decomposition(m, "1", checked(prefix_sequence_decomposition(m, u, a.k)), r);
  } else if (alg == "2") {
    if (!is_max) throw UsageError("algorithm 2 needs a max:<n> monoid");
    report_decomposition(
        m, "2", checked(divide_and_conquer_decomposition(spec.parameter, u, a.k)), r);
  } else if (alg == "3") {
    const KDecomposition d = absorbing_decomposition(m, u, a.k);
    const Index x = reduce(m, std::span(u).first(d.cuts.front()));
    const Index z = reduce(m, std::span(u).subspan(d.cuts.back()));
    r.result = {{"algorithm", "3"}, {"cuts", d.cuts},
                {"prefix_reduction", static_cast<std::size_t>(x) + m.label_base()},
                {"suffix_reduction", static_cast<std::size_t>(z) + m.label_base()}};
    r.text << "algorithm: 3\n"
           << "cuts: " << joined_cuts(d) << '\n'
           << "prefix reduction: " << format_label(m, x) << '\n'
           << "suffix reduction: " << format_label(m, z) << '\n';
  } else if (alg == "4") {
    std::size_t n = 0;
    if (a.n) {
      n = *a.n;
    } else {
      // The deepest descent the word is long enough for.
      while (true) {
        auto next = descent_word_length(m.size(), a.k, n + 1);
        if (!next || *next > u.size()) break;
        ++n;
      }
    }
    const DescentOutcome outcome = ramsey_or_embedding(m, u, a.k, n);
    r.input["n"] = n;
    if (outcome.found_decomposition()) {
      report_decomposition(m, "4", checked(outcome.decomposition()), r);
    } else {
      const auto& images = outcome.embedding().images;
      r.result = {{"algorithm", "4"}, {"found", false}, {"embedding", labels(m, images)}};
      r.text << "algorithm: 4\n"
             << "no Ramsey decomposition; embedding: " << joined_labels(m, images) << '\n';
    }
  } else {
    throw UsageError("--alg must be auto, 1, 2, 3 or 4");
  }
}

void witness_command(const std::string& monoid, std::size_t k, Report& r) {
  const MonoidSpec spec = parse_monoid_spec(monoid);
  const FiniteMonoid m = build_monoid(spec);
  Word w;
  std::string construction;
  if (spec.kind == MonoidSpec::Kind::kMax) {
    w = max_witness(spec.parameter, k);
    construction = "max";
  } else if (m.is_group()) {
    w = group_witness(m, k);
    construction = "group";
  } else {
    w = embedded_witness(m, k);
    construction = "embedding";
  }
  r.input = {{"monoid", spec.to_string()}, {"k", k}};
  r.result = {{"construction", construction}, {"length", w.size()}, {"word", labels(m, w)}};
  r.text << format_word(m, w) << '\n';
}

void oracle_command(const std::string& monoid, std::size_t k, std::size_t max_len,
                    unsigned threads, Report& r) {
  const MonoidSpec spec = parse_monoid_spec(monoid);
  const FiniteMonoid m = build_monoid(spec);
  r.input = {{"monoid", spec.to_string()}, {"k", k}, {"max_len", max_len}};
  const auto found = ramsey_oracle(m, k, OracleOptions{max_len, threads});
  if (!found) {
    r.result = {{"value", nullptr}, {"exceeds", max_len}};
    r.text << "> " << max_len << '\n';
    return;
  }
  r.result = {{"value", found->value}, {"counterexample", labels(m, found->counterexample)}};
  r.text << found->value << '\n'
         << "counterexample: " << format_word(m, found->counterexample) << '\n';
}

void bounds_command(const std::string& monoid, std::size_t k, Report& r) {
  const MonoidSpec spec = parse_monoid_spec(monoid);
  const FiniteMonoid m = build_monoid(spec);
  const RamseyBounds b = ramsey_bounds(m, k);
  r.input = {{"monoid", spec.to_string()}, {"k", k}};
  // Decimal strings: the upper bound overflows every fixed-width type quickly.
  r.result = {{"regular_d_length", b.regular_d_length},
              {"lower", b.lower.str()},
              {"upper", b.upper.str()}};
  r.text << "regular D-length: " << b.regular_d_length << '\n'
         << "lower: " << b.lower << '\n'
         << "upper: " << b.upper << '\n';
}

std::vector<std::string> matrix_rows(const BoolMatrix& a) {
  std::vector<std::string> rows;
  std::istringstream in(a.to_string());
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  return rows;
}

void boolmat_analyze(const std::string& path, Report& r) {
  std::istringstream in(read_file(path));
  const std::vector<BoolMatrix> matrices = parse_matrices(in);
  r.input = {{"file", path}};
  json list = json::array();
  for (std::size_t idx = 0; idx < matrices.size(); ++idx) {
    const BoolMatrix& a = matrices[idx];
    json entry = {{"rows", matrix_rows(a)},
                  {"idempotent", is_idempotent(a)},
                  {"stable", is_stable(a)}};
    if (idx) r.text << '\n';
    r.text << "matrix " << idx + 1 << '\n'
           << "idempotent: " << (is_idempotent(a) ? "yes" : "no") << '\n'
           << "stable: " << (is_stable(a) ? "yes" : "no") << '\n';
    if (is_idempotent(a)) {
      json sets = json::array();
      r.text << "positive sets:";
      for (std::uint64_t s : positive_sets(a).sets) {
        sets.push_back(format_index_set(s));
        r.text << ' ' << format_index_set(s);
      }
      json pairs = json::array();
      r.text << "\nfree pairs:";
      for (const FreePair& p : free_pairs(a)) {
        pairs.push_back({p.first + 1, p.second + 1});
        r.text << " {" << p.first + 1 << ',' << p.second + 1 << '}';
      }
      const ArrowRelation rel = arrow_relation(a);
      entry["positive_sets"] = sets;
      entry["free_pairs"] = pairs;
      entry["arrow"] = matrix_rows(rel.holds);
      r.text << "\narrow relation:\n" << rel.holds.to_string() << '\n';
    }
    list.push_back(std::move(entry));
  }
  r.result = {{"matrices", list}};
}

void boolmat_phi(std::size_t n, Report& r) {
  if (n == 0 || n > BoolMatrix::kMaxDim) throw UsageError("--n must be in [1, 64]");
  const std::vector<BoolMatrix> chain = max_monoid_boolmat_chain(n);
  r.input = {{"n", n}};
  json list = json::array();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const CountPair c = count_pair(chain[i]);
    list.push_back({{"rows", matrix_rows(chain[i])},
                    {"positive_sets", c.positive_sets},
                    {"free_pairs", c.free_pairs}});
    if (i) r.text << '\n';
    r.text << format_matrix(chain[i]);
  }
  r.result = {{"count", chain.size()},
              {"monomorphism", verify_monomorphism(chain)},
              {"matrices", list}};
}

void boolmat_fuzz(std::size_t n, std::size_t trials, std::uint64_t seed,
                  unsigned threads, Report& r) {
  const auto tallies = run_property_fuzz(n, trials, seed, threads);
  r.input = {{"n", n}, {"trials", trials}, {"seed", seed}};
  json list = json::array();
  for (const PropertyTally& t : tallies) {
    list.push_back({{"property", t.name}, {"passed", t.passed}, {"failed", t.failed}});
    r.text << (t.failed ? "FAIL " : "ok   ") << t.name << ": " << t.passed
           << " passed, " << t.failed << " failed\n";
    if (t.failed) r.exit_code = kExitInternal;
  }
  r.result = {{"properties", list}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Ramsey decompositions, regular D-length and Boolean matrix chains",
               "monoid-ramsey"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--json", global.json, "print one JSON document");
  app.add_option("--threads", global.threads,
                 "worker threads (default: MONOID_RAMSEY_THREADS or all cores)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", global.seed, "random seed");

  std::string command;
  std::function<void(Report&)> action;

  MonoidArgument green_arg;
  auto* green = app.add_subcommand("green", "Green's classes and regular D-length");
  green_arg.attach(green);
  green->callback([&] {
    command = "green";
    action = [&](Report& r) { green_command(green_arg.spec(), r); };
  });

  MonoidArgument dlength_arg;
  bool want_embedding = false;
  auto* dlength = app.add_subcommand("dlength", "regular D-length");
  dlength_arg.attach(dlength);
  dlength->add_flag("--witness", want_embedding, "also print an embedded max monoid");
  dlength->callback([&] {
    command = "dlength";
    action = [&](Report& r) { dlength_command(dlength_arg.spec(), want_embedding, r); };
  });

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "find a Ramsey k-decomposition");
  decompose->add_option("--monoid", dec.monoid, "monoid spec")->required();
  decompose->add_option("--word", dec.word, "word file or comma-separated labels")
      ->required();
  decompose->add_option("--k", dec.k, "number of middle factors")->required();
  decompose->add_option("--alg", dec.algorithm, "auto, 1, 2, 3 or 4");
  decompose->add_option("--n", dec.n, "descent depth for algorithm 4");
  decompose->callback([&] {
    command = "decompose";
    action = [&](Report& r) { decompose_command(dec, r); };
  });

  std::string witness_monoid;
  std::size_t witness_k = 0;
  auto* witness = app.add_subcommand("witness", "long word without a Ramsey k-decomposition");
  witness->add_option("--monoid", witness_monoid, "monoid spec")->required();
  witness->add_option("--k", witness_k, "k")->required()->check(CLI::PositiveNumber);
  witness->callback([&] {
    command = "witness";
    action = [&](Report& r) { witness_command(witness_monoid, witness_k, r); };
  });

  std::string oracle_monoid;
  std::size_t oracle_k = 0;
  std::size_t oracle_max_len = 0;
  auto* oracle = app.add_subcommand("oracle", "exact Ramsey value by enumeration");
  oracle->add_option("--monoid", oracle_monoid, "monoid spec")->required();
  oracle->add_option("--k", oracle_k, "k")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--max-len", oracle_max_len, "longest word length to try")
      ->required();
  oracle->callback([&] {
    command = "oracle";
    action = [&](Report& r) {
      oracle_command(oracle_monoid, oracle_k, oracle_max_len, resolve_threads(global), r);
    };
  });

  std::string bounds_monoid;
  std::size_t bounds_k = 0;
  auto* bounds = app.add_subcommand("bounds", "lower and upper bound on the Ramsey value");
  bounds->add_option("--monoid", bounds_monoid, "monoid spec")->required();
  bounds->add_option("--k", bounds_k, "k")->required()->check(CLI::PositiveNumber);
  bounds->callback([&] {
    command = "bounds";
    action = [&](Report& r) { bounds_command(bounds_monoid, bounds_k, r); };
  });

  auto* boolmat = app.add_subcommand("boolmat", "idempotent Boolean matrices");
  boolmat->require_subcommand(1);
  std::string analyze_path;
  auto* analyze = boolmat->add_subcommand("analyze", "structure of matrices in a file");
  analyze->add_option("file", analyze_path, "matrix file")->required();
  analyze->callback([&] {
    command = "boolmat analyze";
    action = [&](Report& r) { boolmat_analyze(analyze_path, r); };
  });
  std::size_t phi_n = 0;
  auto* phi = boolmat->add_subcommand("phi", "chain of (n^2+n+2)/2 matrices");
  phi->add_option("--n", phi_n, "dimension")->required();
  phi->callback([&] {
    command = "boolmat phi";
    action = [&](Report& r) { boolmat_phi(phi_n, r); };
  });
  std::size_t fuzz_n = 0;
  std::size_t fuzz_trials = 10000;
  auto* fuzz = boolmat->add_subcommand("fuzz", "randomized property checks");
  fuzz->add_option("--n", fuzz_n, "dimension")->required();
  fuzz->add_option("--trials", fuzz_trials, "number of random idempotents");
  fuzz->callback([&] {
    command = "boolmat fuzz";
    action = [&](Report& r) {
      boolmat_fuzz(fuzz_n, fuzz_trials, global.seed, resolve_threads(global), r);
    };
  });

  try {
    // CLI11 consumes the argument vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    action(report);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;

  if (global.json) {
    const json doc = {{"command", command},
                      {"input", report.input},
                      {"result", report.result},
                      {"timing_ms", elapsed.count()}};
    out << doc.dump(2) << '\n';
  } else {
    out << report.text.str();
  }
  return report.exit_code;
}

}  // namespace monoid_ramsey
