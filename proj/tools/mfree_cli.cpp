// mfree: bases and exponents of modules of higher order differential
// operators for plane and 3-space central arrangements.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "mfree/cli.hpp"
#include "mfree/errors.hpp"

namespace {

struct Options {
  int m = 0;
  std::string extension = "auto";
  int max_degree = -1;
  std::string format = "json";
  std::string input_path;
  std::size_t dim = 0;
  std::string exponents;
  std::vector<std::string> forms;
};

void add_options(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "operator order m >= 0");
  sub->add_option("--extension", o.extension, "auto, or added hyperplanes \"f1; f2; ...\"");
  sub->add_option("--max-degree", o.max_degree, "largest coefficient degree for the oracle");
  sub->add_option("--format", o.format, "json or text");
  sub->add_option("--input", o.input_path, "arrangement file (JSON or forms), '-' for stdin");
  sub->add_option("--dim", o.dim, "ambient dimension l when the input does not state it (default 3)");
  sub->add_option("--exponents", o.exponents, "candidate exponents \"e1,e2,...\" compared by the oracle command");
  sub->add_option("forms", o.forms, "inline linear forms, e.g. x1 x2 x3 x1-x2");
}

std::string read_input(const Options& o) {
  if (!o.input_path.empty()) {
    if (!o.forms.empty()) throw mfree::UserError("give either --input or inline forms, not both");
    if (o.input_path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(o.input_path);
    if (!in) throw mfree::UserError("--input: cannot read '" + o.input_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::string joined;
  for (const auto& f : o.forms) joined += (joined.empty() ? "" : "; ") + f;
  return joined;
}

std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int e = std::stoi(item, &used);
      if (used != item.size() || e < 0) throw std::invalid_argument(item);
      out.push_back(e);
    } catch (const std::exception&) {
      throw mfree::UserError("--exponents: '" + item + "' is not a nonnegative integer");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free bases and m-exponents of central arrangements"};
  app.require_subcommand(1);
  Options o;
  const std::pair<const char*, const char*> commands[] = {
      {"lattice", "one-dimensional flats and their coordinate data"},
      {"exponents", "closed-form m-exponents"},
      {"basis", "explicit free basis of order-m operators, Saito-verified"},
      {"verify", "basis plus membership, Saito, dual pair, identities and Hilbert oracle"},
      {"identities", "counting identities for the extended arrangement"},
      {"oracle", "dimensions of the degree-d pieces, optionally against --exponents"},
  };
  for (const auto& [name, help] : commands) add_options(app.add_subcommand(name, help), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    mfree::RunConfig config;
    config.command = *mfree::parse_command(app.get_subcommands().front()->get_name());
    config.m = o.m;
    config.extension = o.extension;
    if (o.max_degree >= 0) config.max_degree = o.max_degree;
    const auto format = mfree::parse_format(o.format);
    if (!format) throw mfree::UserError("--format must be json or text");
    config.format = *format;
    if (o.dim != 0) config.dim = o.dim;
    if (!o.exponents.empty()) config.exponents = parse_exponents(o.exponents);
    if (o.m < 0) throw mfree::BadM("--m must be nonnegative");
    const auto result = mfree::run(config, read_input(o));
    std::string out = mfree::emit_report(result, config.format);
    if (out.empty() || out.back() != '\n') out += '\n';
    std::cout << out;
    return result.exit_code;
  } catch (const mfree::UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  }
}
