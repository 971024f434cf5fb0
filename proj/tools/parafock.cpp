#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "parafock/io.hpp"
#include "parafock/verify.hpp"
#include "parafock/words.hpp"

namespace {

using namespace parafock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitIo = 3;

struct Options {
  int p = 1;
  int max_m = 6;
  int m = -1;
  int n = -1;
  int threads = int(std::max(1u, std::thread::hardware_concurrency()));
  bool ortho = false;
  std::string out;
  std::string format;
  std::string expr;
  std::string ket;
  std::string fault;
};

void emit(const Options& opt, const std::string& content) {
  if (opt.out.empty())
    std::cout << content;
  else
    write_text_file(opt.out, content);
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int cmd_build(const Options& opt) {
  if (opt.format != "json") return usage_error("build supports only --format json");
  emit(opt, render(build_document(ParaOrder(opt.p), Truncation(opt.max_m))));
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  if (opt.format != "json" && opt.format != "text")
    return usage_error("verify supports --format json|text");
  if (opt.max_m < 3)
    return usage_error("verify needs --max-m >= 3 so the relation sweep has a domain");

  LadderAction action{ParaOrder(opt.p)};
  if (!opt.fault.empty()) {
    const auto fault = fault_by_name(opt.fault);
    if (!fault) {
      std::string names;
      for (const Fault& f : fault_catalog()) names += "\n  " + f.name;
      return usage_error("unknown fault '" + opt.fault + "'; catalog:" + names);
    }
    action = LadderAction{ParaOrder(opt.p), *fault};
  }

  const std::vector<Report> reports = run_all_suites(action, opt.max_m, opt.threads);

  if (opt.format == "json") {
    Json doc{{"all_passed", all_passed(reports)},
             {"max_m", opt.max_m},
             {"p", opt.p},
             {"suites", json_of(reports)}};
    if (!opt.fault.empty()) doc["injected_fault"] = opt.fault;
    emit(opt, render(doc));
  } else {
    std::string text;
    for (const Report& r : reports) text += to_string(r) + "\n";
    emit(opt, text);
  }
  return all_passed(reports) ? kExitOk : kExitVerificationFailure;
}

int cmd_gram(const Options& opt) {
  if (opt.format != "json" && opt.format != "text")
    return usage_error("gram supports --format json|text");
  if ((opt.m >= 0) != (opt.n >= 0))
    return usage_error("--m and --n go together; give both or neither");
  const ParaOrder p(opt.p);

  if (opt.m >= 0) {
    const RationalMatrix g = sector_gram(p, opt.m, opt.n);
    if (opt.format == "text") {
      emit(opt, to_string(g) + "\n");
      return kExitOk;
    }
    Json doc{{"dim", subspace_dim(p, opt.m, opt.n)},
             {"gram", json_of(g)},
             {"m", opt.m},
             {"n", opt.n},
             {"p", opt.p}};
    if (opt.ortho) doc["ortho"] = ortho_document(p, opt.m, opt.n);
    emit(opt, render(doc));
    return kExitOk;
  }

  const Truncation t(opt.max_m);
  const RationalMatrix g = window_gram(p, t);
  if (opt.format == "text") {
    emit(opt, to_string(g) + "\n");
    return kExitOk;
  }
  Json basis = Json::array();
  for (const BasisIndex& idx : canonical_basis(p, t)) basis.push_back(to_string(idx));
  Json doc{{"basis", std::move(basis)},
           {"gram", json_of(g)},
           {"max_m", opt.max_m},
           {"p", opt.p},
           {"total_dim", window_dimension(p, t)}};
  if (opt.ortho) {
    Json sectors = Json::array();
    for (int m = 0; m <= t.max_m; ++m)
      for (int n = 0; n <= p.value; ++n)
        if (subspace_dim(p, m, n) > 0) sectors.push_back(ortho_document(p, m, n));
    doc["ortho"] = std::move(sectors);
  }
  emit(opt, render(doc));
  return kExitOk;
}

int cmd_spectrum(const Options& opt) {
  if (opt.format != "json" && opt.format != "text")
    return usage_error("spectrum supports --format json|text");
  const Json doc = spectrum_document(ParaOrder(opt.p), Truncation(opt.max_m));
  if (opt.format == "json") {
    emit(opt, render(doc));
    return kExitOk;
  }
  std::string text = "sector  dim  N_b  N_f  N_s values\n";
  for (const Json& sector : doc.at("sectors")) {
    text += "(" + std::to_string(int(sector.at("m"))) + "," +
            std::to_string(int(sector.at("n"))) + ")     " +
            std::to_string(int(sector.at("dim"))) + "    " +
            std::to_string(int(sector.at("N_b"))) + "    " +
            std::to_string(int(sector.at("N_f"))) + "    ";
    for (const Json& v : sector.at("N_s_values")) text += std::string(v) + " ";
    text += "\n";
  }
  emit(opt, text);
  return kExitOk;
}

int cmd_eval(const Options& opt) {
  if (opt.format != "json" && opt.format != "text")
    return usage_error("eval supports --format json|text");
  const ParaOrder p(opt.p);
  const AlgebraElement element = parse_element(p, opt.expr);
  const VectorExpr ket = parse_ket(p, opt.ket);
  const VectorExpr result = evaluate(p, element, ket);
  if (opt.format == "text") {
    emit(opt, to_string(result) + "\n");
  } else {
    emit(opt, render(Json{{"expr", opt.expr},
                          {"ket", opt.ket},
                          {"p", opt.p},
                          {"result", json_of(result)},
                          {"result_text", to_string(result)}}));
  }
  return kExitOk;
}

int cmd_diagram(const Options& opt) {
  const ParaOrder p(opt.p);
  const Truncation t(opt.max_m);
  if (opt.format == "text")
    emit(opt, diagram_text(p, t));
  else if (opt.format == "dot")
    emit(opt, diagram_dot(p, t));
  else if (opt.format == "json")
    emit(opt, render(diagram_document(p, t)));
  else
    return usage_error("diagram supports --format text|dot|json");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fock-like representations of the relative parabose set P_BF(1,1)"};
  app.require_subcommand(1);

  Options opt;

  const auto add_common = [&](CLI::App* sub, const char* default_format) {
    sub->add_option("--p", opt.p, "parastatistics order (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", opt.out, "write output to this path instead of stdout");
    // All subcommands share one Options object, so the per-subcommand
    // default format is applied at dispatch time, not here.
    sub->add_option("--format", opt.format, "output format")
        ->default_str(default_format);
    return sub;
  };
  const auto add_max_m = [&](CLI::App* sub) {
    sub->add_option("--max-m", opt.max_m, "parabosonic window bound (m <= max_m)")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* build = add_common(app.add_subcommand("build", "export basis and operator matrices"), "json");
  add_max_m(build);

  CLI::App* verify = add_common(app.add_subcommand("verify", "run all verification suites"), "json");
  add_max_m(verify);
  verify->add_option("--threads", opt.threads, "worker threads for the relation sweep")
      ->check(CLI::PositiveNumber);
#ifdef PARAFOCK_WITH_FAULT_INJECTION
  verify->add_option("--inject-fault", opt.fault,
                     "corrupt one action coefficient (test builds only)");
#endif

  CLI::App* gram = add_common(app.add_subcommand("gram", "print exact Gram matrices"), "json");
  add_max_m(gram);
  gram->add_option("--m", opt.m, "sector row index");
  gram->add_option("--n", opt.n, "sector column index");
  gram->add_flag("--ortho", opt.ortho, "include the orthonormal-basis payload");

  CLI::App* spectrum = add_common(app.add_subcommand("spectrum", "per-sector number-operator data"), "json");
  add_max_m(spectrum);

  CLI::App* eval = add_common(app.add_subcommand("eval", "evaluate an expression on a ket"), "text");
  eval->add_option("--expr", opt.expr, "algebra expression, e.g. \"[{b+,b-},f+]\"")
      ->required();
  eval->add_option("--ket", opt.ket, "ket, e.g. \"|0>\" or \"|1,1,beta>\"")->required();

  CLI::App* diagram = add_common(app.add_subcommand("diagram", "sector ladder diagram"), "text");
  add_max_m(diagram);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto dispatch = [&](CLI::App* sub, const char* default_format,
                            int (*command)(const Options&)) {
    if (sub->count("--format") == 0) opt.format = default_format;
    return command(opt);
  };

  try {
    if (build->parsed()) return dispatch(build, "json", cmd_build);
    if (verify->parsed()) return dispatch(verify, "json", cmd_verify);
    if (gram->parsed()) return dispatch(gram, "json", cmd_gram);
    if (spectrum->parsed()) return dispatch(spectrum, "json", cmd_spectrum);
    if (eval->parsed()) return dispatch(eval, "text", cmd_eval);
    if (diagram->parsed()) return dispatch(diagram, "text", cmd_diagram);
    return usage_error("no subcommand given");
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.pos << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
