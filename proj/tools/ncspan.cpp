// ncspan: command-line front end for span-of-values analysis of
// noncommutative polynomials on M_d(Q).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncspan/ncspan.hpp"
#include "ncspan/report.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kUndetermined = 64,
};

struct Options {
  std::string poly;
  std::size_t dim = 2;
  std::size_t dmax = 4;
  std::uint64_t seed = ncspan::kDefaultSeed;
  std::size_t max_samples = 0;
  long coeff_bound = 10;
  std::size_t stability_window = 50;
  std::string format = "json";
  std::string target;
  std::string corpus;

  ncspan::SampleConfig config() const {
    ncspan::SampleConfig cfg;
    cfg.seed = seed;
    cfg.max_samples = max_samples;
    cfg.coeff_bound = coeff_bound;
    cfg.stability_window = stability_window;
    return cfg;
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NCSPAN_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed NCSPAN_SEED\n";
    }
  }
  return ncspan::kDefaultSeed;
}

void emit(const ncspan::json::Json& doc, const Options& opt, const std::string& text) {
  if (opt.format == "text") std::cout << text;
  else std::cout << doc.dump(2) << '\n';
}

int run_classify(const Options& opt) {
  auto f = ncspan::parse(opt.poly);
  auto rep = ncspan::classify_span(f, opt.dim, opt.config());
  auto flags = ncspan::check_consistency(rep);
  std::ostringstream text;
  text << "polynomial:     " << ncspan::print(f) << '\n'
       << "dim:            " << rep.d << '\n'
       << "classification: " << to_string(rep.classification) << '\n'
       << "rank:           " << rep.basis.rank() << '\n'
       << "samples used:   " << rep.samples_used << '\n'
       << "lie ideal:      " << (flags.lie_ideal ? "yes" : "NO") << '\n'
       << "exclusion rule: " << to_string(flags.exclusion) << '\n'
       << "commutator rule:" << ' ' << to_string(flags.commutator_rule) << '\n'
       << "saturation:     " << (flags.saturation_certified ? "certified" : "stability-window")
       << '\n';
  emit(ncspan::json::span_report(rep), opt, text.str());
  return rep.classification == ncspan::Classification::Undetermined ? kUndetermined : kOk;
}

int run_witness(const Options& opt) {
  auto f = ncspan::parse(opt.poly);
  auto d = ncspan::find_witness_dimension(f, opt.dmax, opt.config());
  std::string text = d ? std::to_string(*d) + "\n" : std::string("absent\n");
  emit(ncspan::json::witness_dimension(f, opt.dmax, d, opt.seed), opt, text);
  return d ? kOk : kNegative;
}

int run_linearize(const Options& opt) {
  auto f = ncspan::parse(opt.poly);
  auto red = ncspan::reduce_to_multilinear(f, ncspan::nontriviality_oracle(opt.dim, opt.config()));
  std::ostringstream text;
  text << "input:  " << ncspan::print(red.input) << '\n';
  for (const auto& s : red.steps)
    text << "  " << to_string(s.kind) << " X" << s.variable << " (" << s.detail << "): "
         << ncspan::print(s.after) << '\n';
  text << "output: " << ncspan::print(red.output) << '\n';
  emit(ncspan::json::reduction(red, opt.dim), opt, text.str());
  return kOk;
}

int run_commtest(const Options& opt) {
  auto f = ncspan::parse(opt.poly);
  auto t = ncspan::commutator_test(f);
  std::string text = t.is_sum_of_commutators ? "true\n" : "false\n";
  if (t.offending_class)
    text += "offending class: " +
            (t.offending_class->empty() ? std::string("1")
                                        : ncspan::detail::word_text(*t.offending_class)) +
            " (coefficient sum " + t.class_sum.get_str() + ")\n";
  emit(ncspan::json::commutator_report(f, t), opt, text);
  return kOk;
}

int run_decompose(const Options& opt) {
  auto f = ncspan::parse(opt.poly);
  auto target = ncspan::parse_matrix(opt.target);
  auto rep = ncspan::classify_span(f, opt.dim, opt.config());
  auto terms = ncspan::decompose_target(rep, target);
  std::ostringstream text;
  for (const auto& t : terms) {
    text << t.weight.get_str() << " * f(";
    for (std::size_t k = 0; k < t.inputs.size(); ++k)
      text << (k ? ", " : "") << '[' << ncspan::print_matrix(t.inputs[k]) << ']';
    text << ")\n";
  }
  emit(ncspan::json::decomposition(rep, target, terms), opt, text.str());
  return kOk;
}

int run_suite(const Options& opt) {
  std::ifstream in(opt.corpus);
  if (!in) {
    std::cerr << "cannot open corpus file " << opt.corpus << '\n';
    return kUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto corpus = ncspan::parse_corpus(buf.str());
  auto res = ncspan::run_suite(corpus, opt.dim, opt.config());
  std::ostringstream text;
  for (const auto& e : res.entries)
    text << (e.violated() ? "VIOLATION " : "ok        ") << to_string(e.report.classification)
         << "  " << ncspan::print(e.f) << '\n';
  text << res.entries.size() << " polynomials, " << res.violations() << " violations, "
       << res.undetermined() << " undetermined\n";
  emit(ncspan::json::suite(res, opt.seed), opt, text.str());
  if (res.violations()) return kNegative;
  return res.undetermined() ? kUndetermined : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Span of values of noncommutative polynomials on matrix algebras"};
  app.require_subcommand(1);
  Options opt;
  opt.seed = default_seed();

  auto sampling = [&opt](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "random seed (default: $NCSPAN_SEED or built-in)");
    sub->add_option("--max-samples", opt.max_samples, "sampling budget (default 64*d^2)");
    sub->add_option("--coeff-bound", opt.coeff_bound, "random entries lie in [-B, B]")
        ->check(CLI::PositiveNumber);
    sub->add_option("--stability-window", opt.stability_window,
                    "samples without rank growth before stopping")
        ->check(CLI::PositiveNumber);
  };
  auto common = [&opt](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto poly = [&opt](CLI::App* sub) {
    sub->add_option("--poly", opt.poly, "polynomial, e.g. \"X1*X2 - X2*X1\"")->required();
  };
  auto dim = [&opt](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--dim", opt.dim, "matrix size d")->check(CLI::PositiveNumber);
    if (required) o->required();
  };

  auto* classify = app.add_subcommand("classify", "classify Span f(M_d)");
  poly(classify), dim(classify, true), sampling(classify), common(classify);

  auto* witness = app.add_subcommand("witness", "smallest d where f is neither identity nor central");
  poly(witness), sampling(witness), common(witness);
  witness->add_option("--dmax", opt.dmax, "largest d to try")->required()->check(CLI::PositiveNumber);

  auto* linearize = app.add_subcommand("linearize", "reduce f to a multilinear polynomial");
  poly(linearize), dim(linearize, true), sampling(linearize), common(linearize);

  auto* commtest = app.add_subcommand("commtest", "is f a sum of commutators");
  poly(commtest), common(commtest);

  auto* decompose = app.add_subcommand("decompose", "write a target matrix as a combination of values");
  poly(decompose), dim(decompose, true), sampling(decompose), common(decompose);
  decompose->add_option("--target", opt.target, "matrix literal, rows ';' entries ','")->required();

  auto* suite = app.add_subcommand("suite", "batch consistency report over a corpus file");
  suite->add_option("--corpus", opt.corpus, "one polynomial per line, '#' comments")->required();
  dim(suite, true), sampling(suite), common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return run_classify(opt);
    if (*witness) return run_witness(opt);
    if (*linearize) return run_linearize(opt);
    if (*commtest) return run_commtest(opt);
    if (*decompose) return run_decompose(opt);
    if (*suite) return run_suite(opt);
  } catch (const ncspan::SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ncspan::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ncspan::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  }
  return kUsage;
}
