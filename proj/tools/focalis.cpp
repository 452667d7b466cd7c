#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "focalis/verify.hpp"

using namespace focalis;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDegenerate = 2, kAmbiguous = 3 };

std::uint64_t default_seed() {
  if (const char* s = std::getenv("FOCALIS_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError(std::string("FOCALIS_SEED is not an integer: ") + s);
    }
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int exit_code(const std::string& kind) {
  if (kind == "DegenerateCongruence") return kDegenerate;
  if (kind == "AmbiguousVerdict") return kAmbiguous;
  return kUsage;
}

struct AnalyzeArgs {
  std::string input, gallery, mode = "sampled", format = "text";
  int samples = 25;
  std::optional<std::uint64_t> seed;
};

int cmd_analyze(const AnalyzeArgs& a) {
  Mode mode = a.mode == "symbolic" ? Mode::Symbolic : Mode::Sampled;
  std::uint64_t seed = 0;
  std::string label = a.gallery.empty() ? a.input : "gallery:" + a.gallery;
  auto fail = [&](const std::string& kind, const std::string& msg) {
    if (a.format == "json") std::cout << error_report(label, mode, seed, kind, msg).dump(2) << "\n";
    std::cerr << "focalis: " << kind << ": " << msg << "\n";
    return exit_code(kind);
  };
  try {
    seed = a.seed ? *a.seed : default_seed();
    ClassifyOptions opt;
    opt.samples = a.samples;
    opt.seed = seed;
    opt.mode = mode;
    PlaneFrame f;
    std::string name = a.gallery;
    if (name.empty() && a.input.rfind("gallery:", 0) == 0) name = a.input.substr(8);
    if (!name.empty()) {
      GalleryItem it = gallery_item(name);
      f = it.frame;
      opt.construction_sub = it.construction_sub;
    } else {
      f = parse_congruence(read_file(a.input));
    }
    AnalysisReport r = classify(f, opt);
    r.input = label;
    if (a.format == "json") std::cout << to_json(r).dump(2) << "\n";
    else std::cout << to_text(r);
    if (r.error) {
      std::cerr << "focalis: " << r.error->kind << ": " << r.error->message << "\n";
      return exit_code(r.error->kind);
    }
    return kOk;
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  }
}

int cmd_verify(const std::string& suite, std::optional<std::uint64_t> seed_arg, int samples,
               const std::string& evidence) {
  try {
    std::uint64_t seed = seed_arg ? *seed_arg : default_seed();
    SuiteResult r = run_suite(suite, seed, samples);
    std::cout << suite_table(r);
    if (!evidence.empty()) {
      std::ofstream out(evidence);
      if (!out) throw UsageError("cannot write " + evidence);
      out << r.evidence.dump(2) << "\n";
    }
    return r.passed() ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "focalis: " << e.kind() << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

std::string expected_str(const GalleryItem& it) {
  std::string s = to_string(it.expected_class);
  if (it.expected_sub != SubClass::None) s += "{" + to_string(it.expected_sub) + "}";
  if (it.expected_segre) s += ", " + to_string(*it.expected_segre);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"focalis: focal loci and classification of plane congruences in P4"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  std::uint64_t seed_value = 0;
  auto* analyze = app.add_subcommand("analyze", "classify a congruence");
  auto* in_opt = analyze->add_option("--input", aa.input, "PLANECONGRUENCE v1 file (or gallery:NAME)");
  auto* gal_opt = analyze->add_option("--gallery", aa.gallery, "gallery item name");
  in_opt->excludes(gal_opt);
  analyze->add_option("--samples", aa.samples, "number of samples")->check(CLI::Range(3, 10000));
  auto* seed_opt = analyze->add_option("--seed", seed_value, "sampling seed (default FOCALIS_SEED or 0)");
  analyze->add_option("--mode", aa.mode, "sampled or symbolic")->check(CLI::IsMember({"sampled", "symbolic"}));
  analyze->add_option("--format", aa.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string suite, evidence;
  int vsamples = 25;
  std::uint64_t vseed = 0;
  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("--suite", suite, "segre, taxonomy or invariants")->required()->check(CLI::IsMember(kSuites));
  auto* vseed_opt = verify->add_option("--seed", vseed, "sampling seed");
  verify->add_option("--samples", vsamples, "samples per analysis")->check(CLI::Range(3, 10000));
  verify->add_option("--evidence", evidence, "write the JSON evidence to this file");

  auto* gallery = app.add_subcommand("gallery", "list, show or export gallery items");
  gallery->require_subcommand(1);
  auto* glist = gallery->add_subcommand("list", "names and expected classes");
  std::string show_name, export_name, export_path;
  auto* gshow = gallery->add_subcommand("show", "print a frame");
  gshow->add_option("name", show_name)->required();
  auto* gexport = gallery->add_subcommand("export", "write a frame to a file");
  gexport->add_option("name", export_name)->required();
  gexport->add_option("path", export_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*analyze) {
    if (aa.input.empty() && aa.gallery.empty()) {
      std::cerr << "focalis: UsageError: analyze needs --input or --gallery\n";
      return kUsage;
    }
    if (*seed_opt) aa.seed = seed_value;
    return cmd_analyze(aa);
  }
  if (*verify) return cmd_verify(suite, *vseed_opt ? std::optional(vseed) : std::nullopt, vsamples, evidence);
  try {
    if (*glist) {
      for (const auto& it : gallery_items()) std::cout << it.name << "  " << expected_str(it) << "\n";
    } else if (*gshow) {
      auto it = gallery_item(show_name);
      std::cout << print_congruence(it.frame, it.name);
    } else if (*gexport) {
      auto it = gallery_item(export_name);
      std::ofstream out(export_path);
      if (!out) throw UsageError("cannot write " + export_path);
      out << print_congruence(it.frame, it.name);
    }
  } catch (const Error& e) {
    std::cerr << "focalis: " << e.kind() << ": " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
