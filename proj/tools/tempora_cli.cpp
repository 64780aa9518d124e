// Command-line front end over the tempora headers.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tempora/tempora.hpp"

namespace {

using tempora::json_io::Json;

enum ExitCode { kOk = 0, kSyntax = 1, kSemantic = 2, kInternal = 3 };

tempora::Term checked_term(const std::string& text) {
  auto t = tempora::parse(text);
  tempora::typecheck(t);
  return t;
}

tempora::Variance parse_variance(const std::string& v) {
  return v == "contra" ? tempora::Variance::Contravariant : tempora::Variance::Covariant;
}

std::optional<tempora::SpanConfig> parse_basepoint(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // "t,d;t,d;..."
  std::vector<tempora::TimeSpan> spans;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw tempora::SyntaxError("basepoint entries are 'onset,duration'");
    const auto d = tempora::parse_rational(item.substr(comma + 1));
    if (d <= 0) throw tempora::SemanticError("basepoint duration must be strictly positive");
    spans.emplace_back(tempora::parse_rational(item.substr(0, comma)), d);
  }
  return tempora::SpanConfig(std::move(spans));
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw tempora::SemanticError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::uint64_t seed_or_env(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  if (const char* env = std::getenv("TEMPORA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw tempora::SyntaxError(std::string("TEMPORA_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

int cmd_normalize(const std::string& text, const std::string& out) {
  const auto t = checked_term(text);
  const auto ar = tempora::typecheck(t);
  Json j;
  std::string pretty;
  if (ar.dom == ar.cod && !t.contains_box()) {
    const auto nf = tempora::normalize_endo(t);
    j = tempora::json_io::encode(nf);
    pretty = tempora::to_string(nf);
  } else {
    const auto nf = tempora::normalize_bracket(t);
    j = tempora::json_io::encode(nf);
    pretty = tempora::to_string(nf);
  }
  if (out != "text") std::cout << j.dump() << "\n";
  if (out != "json") std::cout << pretty << "\n";
  return kOk;
}

int cmd_eq(const std::string& a, const std::string& b) {
  std::cout << (tempora::terms_equal(checked_term(a), checked_term(b)) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_generate(const std::string& initial, const std::string& gen, std::size_t steps, const std::string& variance,
                 const std::string& out, const std::string& basepoint) {
  const auto score = tempora::iterate_generate(checked_term(initial), checked_term(gen), steps,
                                               parse_variance(variance), parse_basepoint(basepoint));
  if (out == "text") {
    std::cout << tempora::render_score_text(score);
  } else {
    std::cout << tempora::json_io::encode(score).dump(2) << "\n";
  }
  return kOk;
}

int cmd_score(const std::string& text, const std::string& out, const std::string& basepoint) {
  const auto nf = tempora::normalize_bracket(checked_term(text));
  const auto score = tempora::assemble_score({tempora::interpret(nf, parse_basepoint(basepoint))});
  if (out == "text") {
    std::cout << tempora::render_score_text(score);
  } else {
    std::cout << tempora::json_io::encode(score).dump(2) << "\n";
  }
  return kOk;
}

int cmd_analyze(const std::string& path, const std::string& variance, const std::string& basepoint) {
  const auto text = read_input(path);
  tempora::RhythmScore score;
  try {
    score = tempora::json_io::decode_score(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw tempora::SyntaxError(std::string("invalid score JSON: ") + e.what());
  }
  const auto analysis = tempora::analyze(score, parse_variance(variance), parse_basepoint(basepoint));
  std::cout << tempora::json_io::encode(analysis).dump(2) << "\n";
  return kOk;
}

int cmd_diagram(const std::string& text, const std::string& format) {
  const auto t = checked_term(text);
  std::cout << (format == "ascii" ? tempora::render_ascii(t) : tempora::render_dot(t));
  return kOk;
}

int cmd_verify(std::size_t samples, const std::optional<std::uint64_t>& seed, const std::string& perturb) {
  tempora::NormalizeOptions opts;
  if (perturb == "r1") opts.rules.r1 = tempora::RuleTable::R1::LeftLeafOnly;
  const auto report = tempora::verify_relations(samples, seed_or_env(seed), opts);
  std::cout << report.text() << "\n";
  return report.ok() ? kOk : kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tempora: transformations of time-spans on multiple timelines"};
  app.require_subcommand(1);

  std::string term_a, term_b, out = "both", format = "dot", variance = "cov", initial, gen, path = "-", basepoint,
                                  perturb;
  std::size_t steps = 1, samples = 100;
  std::optional<std::uint64_t> seed;

  auto* normalize = app.add_subcommand("normalize", "print the normal form of a term");
  normalize->add_option("term", term_a, "term text")->required();
  normalize->add_option("--out", out, "json, text or both")->check(CLI::IsMember({"json", "text", "both"}));

  auto* eq = app.add_subcommand("eq", "decide equality of two terms");
  eq->add_option("a", term_a)->required();
  eq->add_option("b", term_b)->required();

  auto* generate = app.add_subcommand("generate", "iterate a generator on an initial morphism");
  generate->add_option("--initial", initial)->required();
  generate->add_option("--gen", gen)->required();
  generate->add_option("--steps", steps)->check(CLI::PositiveNumber);
  generate->add_option("--variance", variance)->check(CLI::IsMember({"cov", "contra"}));
  generate->add_option("--out", out, "json or text")->check(CLI::IsMember({"json", "text", "both"}));
  generate->add_option("--basepoint", basepoint, "identity spans per timeline, 't,d;t,d'");

  auto* analyze = app.add_subcommand("analyze", "recover step intervals from a score");
  analyze->add_option("score", path, "score JSON file, '-' for stdin");
  analyze->add_option("--variance", variance)->check(CLI::IsMember({"cov", "contra"}));
  analyze->add_option("--basepoint", basepoint);

  auto* diagram = app.add_subcommand("diagram", "render a string diagram");
  diagram->add_option("term", term_a)->required();
  diagram->add_option("--format", format)->check(CLI::IsMember({"dot", "ascii"}));

  auto* score = app.add_subcommand("score", "interpret one morphism as time-spans");
  score->add_option("term", term_a)->required();
  score->add_option("--out", out)->check(CLI::IsMember({"json", "text", "both"}));
  score->add_option("--basepoint", basepoint);

  auto* verify = app.add_subcommand("verify-relations", "check the bracket relations on random decorations");
  verify->add_option("--n-samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed (falls back to TEMPORA_SEED)");
  verify->add_option("--perturb", perturb)->group("")->check(CLI::IsMember({"", "r1"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSyntax;
  }

  try {
    if (*normalize) return cmd_normalize(term_a, out);
    if (*eq) return cmd_eq(term_a, term_b);
    if (*generate) return cmd_generate(initial, gen, steps, variance, out == "both" ? "json" : out, basepoint);
    if (*analyze) return cmd_analyze(path, variance, basepoint);
    if (*diagram) return cmd_diagram(term_a, format);
    if (*score) return cmd_score(term_a, out == "both" ? "json" : out, basepoint);
    if (*verify) return cmd_verify(samples, seed, perturb);
  } catch (const tempora::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kSyntax;
  } catch (const tempora::SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
