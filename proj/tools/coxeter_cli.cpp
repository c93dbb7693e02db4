#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxeter/coxeter.hpp"
#include "coxeter/serialize.hpp"

namespace {

struct GroupOptions {
  std::string type_symbol;
  std::string matrix_path;
  uint64_t root_cap = coxeter::kDefaultRootCap;
};

void add_group_options(CLI::App* cmd, GroupOptions& opts) {
  auto* type_opt = cmd->add_option("--type", opts.type_symbol,
                                   "Type symbol, e.g. A3, B4, F4, H3, I2(7)");
  auto* matrix_opt =
      cmd->add_option("--matrix", opts.matrix_path, "Path to a Coxeter matrix JSON file");
  type_opt->excludes(matrix_opt);
  cmd->callback([type_opt, matrix_opt]() {
    if (type_opt->count() == 0 && matrix_opt->count() == 0)
      throw CLI::RequiredError("--type or --matrix");
  });
}

coxeter::Group build_from_options(const GroupOptions& opts) {
  coxeter::CoxeterMatrix cm = opts.matrix_path.empty()
                                  ? coxeter::parse_type_symbol(opts.type_symbol)
                                  : coxeter::matrix_from_file(opts.matrix_path);
  return coxeter::build_group(cm, opts.root_cap);
}

// Optional human-readable cycle annotation, type A only.
std::string annotate(const coxeter::Group& g, const coxeter::Element& e, bool cycles) {
  if (!cycles || !coxeter::is_type_a(g.matrix))
    return {};
  return "  " + coxeter::cycle_notation(coxeter::permutation_of(g, e));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Coxeter groups: lengths, involution products, excess, "
               "spartan pairs, and zero-excess conjugacy witnesses"};
  app.require_subcommand(1);

  GroupOptions opts;
  std::string element_word;
  std::string format = "text";
  int parallel = 1;
  bool cycles = false;

  auto add_common = [&](CLI::App* cmd, bool needs_element) {
    add_group_options(cmd, opts);
    cmd->add_option("--format", format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--root-cap", opts.root_cap, "Positive-root closure cap");
    cmd->add_flag("--cycles", cycles, "Annotate elements with cycle notation (type A)");
    if (needs_element)
      cmd->add_option("--element", element_word, "Element as a word, e.g. \"1 2 3\"")
          ->required();
    return cmd;
  };

  CLI::App* info = add_common(app.add_subcommand("info", "Group summary"), false);
  CLI::App* length_cmd =
      add_common(app.add_subcommand("length", "Length of an element"), true);
  CLI::App* excess_cmd =
      add_common(app.add_subcommand("excess", "Excess of an element"), true);
  CLI::App* pairs_cmd =
      add_common(app.add_subcommand("pairs", "Spartan pairs of an element"), true);
  CLI::App* dist_cmd =
      add_common(app.add_subcommand("distribution", "Excess histogram of the group"), false);
  dist_cmd->add_option("--parallel", parallel, "Worker thread count");
  CLI::App* witness_cmd = add_common(
      app.add_subcommand("witness", "Zero-excess witness for an element's class"), true);
  CLI::App* classes_cmd =
      add_common(app.add_subcommand("classes", "Conjugacy class report"), false);
  CLI::App* verify_cmd =
      add_common(app.add_subcommand("verify", "Run the invariant battery"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    coxeter::Group g = build_from_options(opts);
    auto element = [&]() {
      return coxeter::element_from_word(g, coxeter::parse_word(element_word));
    };

    if (info->parsed()) {
      size_t involutions = coxeter::enumerate_involutions(g).size();
      if (format == "json") {
        nlohmann::json j{{"rank", g.rank()},
                         {"order", g.order},
                         {"positive_roots", g.num_positive_roots()},
                         {"involutions", involutions},
                         {"longest_length", coxeter::length(g, g.longest)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "rank:           " << g.rank() << "\n"
                  << "order:          " << g.order << "\n"
                  << "positive roots: " << g.num_positive_roots() << "\n"
                  << "involutions:    " << involutions << "\n"
                  << "longest length: " << coxeter::length(g, g.longest) << "\n";
      }
    } else if (length_cmd->parsed()) {
      std::cout << coxeter::length(g, element()) << "\n";
    } else if (excess_cmd->parsed()) {
      std::cout << coxeter::excess(g, element()) << "\n";
    } else if (pairs_cmd->parsed()) {
      coxeter::Element w = element();
      auto pairs = coxeter::spartan_pairs(g, w);
      if (format == "json") {
        std::cout << coxeter::spartan_report_json(g, w, pairs).dump(2) << "\n";
      } else {
        std::cout << "excess: " << pairs.front().defect << "\n";
        for (const auto& p : pairs)
          std::cout << "x: " << coxeter::word_of(g, p.x) << annotate(g, p.x, cycles)
                    << "  y: " << coxeter::word_of(g, p.y) << annotate(g, p.y, cycles)
                    << "\n";
      }
    } else if (dist_cmd->parsed()) {
      coxeter::ExcessDistribution dist = coxeter::excess_distribution(g, parallel);
      if (format == "csv") {
        std::cout << coxeter::distribution_csv(dist);
      } else if (format == "json") {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [e, c] : dist.counts)
          j[std::to_string(e)] = c;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [e, c] : dist.counts)
          std::cout << "excess " << e << ": " << c << "\n";
      }
    } else if (witness_cmd->parsed()) {
      coxeter::Element w = element();
      coxeter::WitnessCertificate cert = coxeter::zero_excess_witness(g, w);
      if (format == "json") {
        std::cout << coxeter::to_json(g, cert).dump(2) << "\n";
      } else {
        std::cout << "w:          " << coxeter::word_of(g, cert.input)
                  << annotate(g, cert.input, cycles) << "\n"
                  << "w_star:     " << coxeter::word_of(g, cert.w_star)
                  << annotate(g, cert.w_star, cycles) << "\n"
                  << "sigma:      " << coxeter::word_of(g, cert.sigma)
                  << annotate(g, cert.sigma, cycles) << "\n"
                  << "tau:        " << coxeter::word_of(g, cert.tau)
                  << annotate(g, cert.tau, cycles) << "\n"
                  << "conjugator: " << coxeter::word_of(g, cert.conjugator) << "\n";
      }
    } else if (classes_cmd->parsed()) {
      auto classes = coxeter::class_representatives(g);
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& cls : classes)
          arr.push_back(coxeter::class_report_json(g, cls));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& cls : classes)
          std::cout << "rep: " << coxeter::word_of(g, cls.representative)
                    << annotate(g, cls.representative, cycles)
                    << "  size: " << cls.members.size()
                    << "  cuspidal: " << (cls.cuspidal ? "yes" : "no") << "\n";
      }
    } else if (verify_cmd->parsed()) {
      if (!coxeter::verify_group(g, std::cout))
        return 1;
    }
    return 0;
  } catch (const coxeter::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
