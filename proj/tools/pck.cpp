#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pck/algebra_file.hpp"
#include "pck/corpus.hpp"
#include "pck/errors.hpp"
#include "pck/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kPrecondition = 2;

struct Settings {
  std::string file;
  std::string format = "json";
  int threads = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> witness;
  bool list = false;
  std::string emit;
};

int report_load_error(const pck::LoadError& e) {
  std::cerr << "error: " << pck::to_string(e.kind()) << " at " << (e.location().empty() ? "/" : e.location()) << ": "
            << e.what() << "\n";
  return kInvalid;
}

int run(const std::string& command, const Settings& s) {
  using namespace pck;
  const CheckOptions opts{s.threads};
  const ReportFormat format = s.format == "text" ? ReportFormat::text : ReportFormat::json;

  if (command == "corpus") {
    if (s.list) {
      for (const auto& entry : builtin_corpus()) std::cout << entry.name << "\t" << entry.description << "\n";
      return kOk;
    }
    const auto entry = corpus_entry(s.emit);
    if (!entry) {
      std::cerr << "error: no corpus entry named '" << s.emit << "'\n";
      return kInvalid;
    }
    std::cout << serialize_algebra(entry->algebra);
    return kOk;
  }

  const std::string text = read_file(s.file);
  AnalysisReport r;

  if (command == "validate") {
    const PoissonColorAlgebra a = parse_algebra_unchecked(text);
    r.bicharacter = bichar_validate(a.g_spec(), a.bichar());
    r.axioms = validate_all(a, opts);
    std::cout << emit_report(a, r, format);
    return r.bicharacter->valid && r.axioms->passed() ? kOk : kInvalid;
  }

  const PoissonColorAlgebra a = parse_algebra(text, opts);
  int code = kOk;
  if (command == "support") {
    r.support = compute_supports(a);
  } else if (command == "center") {
    r.center = compute_center(a);
  } else if (command == "simplicity") {
    r.simplicity = analyze_simplicity(a, s.seed);
    const auto& v = *r.simplicity;
    if (v.criterion_applicable && v.center_zero && v.p1_condition) r.simple_decomposition = simple_decomposition(a, s.seed);
  } else {
    r.support = compute_supports(a);
    if (!check_symmetric_support(*r.support)) {
      r.notes.push_back("Lambda-support is not symmetric; connection classes and decomposition are undefined");
      code = kPrecondition;
    } else {
      r.classes = connection_classes(*r.support);
      if (command == "classes" && !s.witness.empty()) {
        const GroupElement from = parse_multiplicative(a.lambda_spec(), s.witness.at(0));
        const GroupElement to = parse_multiplicative(a.lambda_spec(), s.witness.at(1));
        r.queries.push_back({from, to, is_connected(*r.support, from, to)});
      }
      if (command == "decompose") r.decomposition = decompose(a);
    }
  }
  std::cout << emit_report(a, r, format);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pck: analysis of finite-dimensional graded Poisson color algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--threads", s.threads, "worker threads for axiom checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "seed for the sampling oracle");
  app.add_option("--format", s.format, "report format")->check(CLI::IsMember({"json", "text"}));

  const auto file_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", s.file, "algebra file")->required();
    return sub;
  };
  file_command("validate", "check the bi-character and every axiom");
  file_command("support", "Lambda- and G-supports");
  auto* classes = file_command("classes", "connection classes of the Lambda-support");
  classes->add_option("--witness", s.witness, "connection witness between two degrees")->expected(2);
  file_command("decompose", "decomposition into U and the ideals I_[l]");
  file_command("simplicity", "gr-simplicity criterion and oracle");
  file_command("center", "center of the algebra");
  auto* corpus = app.add_subcommand("corpus", "built-in example algebras");
  auto* list = corpus->add_flag("--list", s.list, "list corpus names");
  auto* emit = corpus->add_option("--emit", s.emit, "print a corpus algebra as a file");
  list->excludes(emit);
  corpus->require_option(1);

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, s);
  } catch (const pck::LoadError& e) {
    return report_load_error(e);
  } catch (const pck::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const pck::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
