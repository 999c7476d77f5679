#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mfree/arrangement.hpp"
#include "mfree/exponents.hpp"
#include "mfree/freebasis.hpp"

namespace mfree {

enum class Command { Lattice, Exponents, Basis, Verify, Identities, Oracle };
enum class Format { Json, Text };

struct RunConfig {
  Command command = Command::Lattice;
  int m = 0;
  std::string extension = "auto";  // "auto" or "f1; f2; ..."
  std::optional<int> max_degree;
  Format format = Format::Json;
  std::optional<std::size_t> dim;     // ambient dimension when the input does not state it
  std::optional<std::vector<int>> exponents;  // candidate multiset for `oracle`
};

struct RunResult {
  nlohmann::json report;
  std::string text;  // human-readable rendering
  int exit_code = 0;
};

std::optional<Command> parse_command(std::string_view name);
std::optional<Format> parse_format(std::string_view name);

// Parses the input and dispatches. UserError and VerificationError propagate;
// a completed run with an inconsistent check returns exit_code 2.
RunResult run(const RunConfig& config, std::string_view input);

std::string emit_report(const RunResult& result, Format format);

// Library-level helpers shared with the bindings.
std::optional<std::vector<Hyperplane>> parse_extension(std::string_view text, std::size_t dim);
ExponentMultiset exponents_for(const Arrangement& a, int m);
FreeBasis basis_for(const Arrangement& a, int m, const std::optional<std::vector<Hyperplane>>& given,
                    const BuildOptions& options = {}, ExtendedArrangement* extension_out = nullptr);

nlohmann::json to_json(const DiffOp& op);
nlohmann::json to_json(const FreeBasis& basis);

}  // namespace mfree
