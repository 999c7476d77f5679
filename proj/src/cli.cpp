#include "mfree/cli.hpp"

#include <algorithm>
#include <sstream>

#include "mfree/errors.hpp"
#include "mfree/flat.hpp"
#include "mfree/verify.hpp"

namespace mfree {

using nlohmann::json;

namespace {

json direction_json(std::span<const std::int64_t> v) { return json(std::vector<std::int64_t>(v.begin(), v.end())); }

std::string direction_text(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

json extension_json(const ExtendedArrangement& e, bool automatic) {
  json added = json::array();
  for (const auto& h : e.added) added.push_back(h.to_string());
  return {{"mode", automatic ? "auto" : "given"}, {"added", added}, {"condition_a", e.condition_a}};
}

RunResult lattice(const Arrangement& a) {
  const auto rk = rank_and_kernel(a);
  json hyperplanes = json::array();
  json forms = json::array();
  for (const auto& h : a.hyperplanes()) {
    hyperplanes.push_back(direction_json(h.normal()));
    forms.push_back(h.to_string());
  }
  json flats = json::array();
  std::string text = "[";
  const auto list = dim1_flats(a);
  for (std::size_t f = 0; f < list.size(); ++f) {
    const auto& x = list[f];
    json delta = json::array();
    for (const auto& c : x.delta) delta.push_back(to_string(c));
    json kernel = json::array();
    for (const auto& k : x.kernel_coords) kernel.push_back(k.to_string());
    flats.push_back({{"direction", direction_json(x.direction)},
                     {"localization", x.local_indices},
                     {"delta", delta},
                     {"y_section", x.y_section.to_string()},
                     {"kernel_coords", kernel}});
    text += (f ? ", " : "") + direction_text(x.direction) + " {";
    for (std::size_t i = 0; i < x.local_indices.size(); ++i)
      text += (i ? "," : "") + std::to_string(x.local_indices[i] + 1);
    text += "}";
  }
  text += "]";
  RunResult r;
  r.report = {{"l", a.dim()},         {"n", a.size()},   {"rank", rk.rank}, {"essential", rk.rank == a.dim()},
              {"hyperplanes", hyperplanes}, {"forms", forms}, {"flats", flats}};
  r.text = text;
  return r;
}

RunResult exponents_cmd(const Arrangement& a, int m) {
  const auto ex = exponents_for(a, m);
  RunResult r;
  r.report = {{"m", m},
              {"exponents", ex.entries},
              {"source", "closed-form"},
              {"count", ex.entries.size()},
              {"s_m", sym_dim(m, static_cast<std::int64_t>(a.dim()))},
              {"sum", ex.sum()}};
  if (a.dim() == 3 && is_essential(a))
    r.report["expected_sum"] = static_cast<std::int64_t>(a.size()) * binomial(m + 1, 2);
  r.text = ex.to_string();
  return r;
}

std::string basis_text(const FreeBasis& basis, int m) {
  std::ostringstream out;
  out << "exponents " << basis.exponents(m).to_string() << "\n";
  if (basis.saito) out << "saito t=" << basis.saito->t << " c=" << to_string(basis.saito->c) << "\n";
  for (std::size_t i = 0; i < basis.operators.size(); ++i) {
    const auto& p = basis.provenance[i];
    out << "deg " << basis.degrees[i] << " X=" << direction_text(p.flat_direction) << " j=" << p.j << " g="
        << p.gen_index << ": " << basis.operators[i].to_pretty_string() << "\n";
  }
  return out.str();
}

RunResult basis_cmd(const Arrangement& a, const RunConfig& config) {
  const auto given = parse_extension(config.extension, a.dim());
  ExtendedArrangement e;
  const FreeBasis basis = basis_for(a, config.m, given, {}, &e);
  RunResult r;
  r.report = to_json(basis);
  r.report["m"] = config.m;
  if (a.dim() == 3 && is_essential(a)) r.report["extension"] = extension_json(e, !given);
  r.text = basis_text(basis, config.m);
  return r;
}

json oracle_rows(const OracleReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) rows.push_back({{"d", row.d}, {"actual", row.actual}, {"predicted", row.predicted}});
  return rows;
}

std::string oracle_text(const OracleReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows)
    out << "d=" << row.d << " dim=" << row.actual << " predicted=" << row.predicted << "\n";
  out << (report.consistent ? "consistent" : "inconsistent") << "\n";
  return out.str();
}

json identities_json(const IdentityReport& r, bool annihilation) {
  json j = {{"s_m", r.s_m},
            {"sum_s_ix", r.sum_s_ix},
            {"double_count", {{"lhs", r.double_lhs}, {"rhs", r.double_rhs}}},
            {"degrees_ok", r.degrees_ok},
            {"annihilation", annihilation}};
  if (r.flat_count_checked)
    j["flat_count"] = {{"actual", r.flat_count}, {"formula", r.flat_count_formula}};
  else
    j["flat_count"] = nullptr;
  return j;
}

RunResult verify_cmd(const Arrangement& a, const RunConfig& config) {
  const auto given = parse_extension(config.extension, a.dim());
  ExtendedArrangement e;
  const FreeBasis basis = basis_for(a, config.m, given, {}, &e);
  const auto ex = basis.exponents(config.m);
  const int top = ex.entries.empty() ? 0 : ex.entries.back();
  const int d_max = config.max_degree.value_or(top + 2);
  const auto oracle = hilbert_check(a, config.m, ex.entries, d_max);
  RunResult r;
  r.report = {{"m", config.m},
              {"exponents", ex.entries},
              {"membership", "passed"},
              {"saito", {{"t", basis.saito->t}, {"c", to_string(basis.saito->c)}}},
              {"oracle", oracle.consistent ? "consistent" : "inconsistent"},
              {"oracle_table", oracle_rows(oracle)}};
  std::ostringstream text;
  text << "exponents " << ex.to_string() << "\nmembership passed\nsaito t=" << basis.saito->t
       << " c=" << to_string(basis.saito->c) << "\n" << oracle_text(oracle);
  bool ok = oracle.consistent;
  if (a.dim() == 3 && is_essential(a)) {
    r.report["extension"] = extension_json(e, !given);
    const bool annihilation = annihilation_check(e);
    r.report["identities"] = identities_json(check_identities(e), annihilation);
    const auto pairing = pairing_matrix(dual_pair(e));
    const bool unitriangular = pairing.is_unit_lower_triangular();
    r.report["dual_pair"] = {{"identity", pairing.is_identity()}, {"unit_lower_triangular", unitriangular}};
    text << "identities passed\ndual pair " << (pairing.is_identity() ? "identity" : "unit lower triangular")
         << "\n";
    ok = ok && annihilation && unitriangular;
  }
  r.text = text.str();
  r.exit_code = ok ? 0 : 2;
  return r;
}

RunResult identities_cmd(const Arrangement& a, const RunConfig& config) {
  const auto e = extend(a, config.m, parse_extension(config.extension, a.dim()));
  const auto report = check_identities(e);
  const bool annihilation = annihilation_check(e);
  RunResult r;
  r.report = identities_json(report, annihilation);
  r.report["m"] = config.m;
  r.report["extension"] = extension_json(e, config.extension == "auto");
  std::ostringstream text;
  text << "s_m(3) = " << report.s_m << " = " << report.sum_s_ix << "\n(n~-1)n = " << report.double_lhs << " = "
       << report.double_rhs << "\n";
  if (report.flat_count_checked)
    text << "flats = " << report.flat_count << " = " << report.flat_count_formula << "\n";
  text << "annihilation " << (annihilation ? "holds" : "fails") << "\n";
  r.text = text.str();
  r.exit_code = annihilation ? 0 : 2;
  return r;
}

RunResult oracle_cmd(const Arrangement& a, const RunConfig& config) {
  if (!config.max_degree) throw UserError("--max-degree is required for the oracle command");
  std::vector<std::int64_t> dims;
  for (int d = 0; d <= *config.max_degree; ++d) dims.push_back(oracle_dim(a, config.m, d));
  RunResult r;
  r.report = {{"m", config.m}, {"dims", dims}};
  std::ostringstream text;
  if (config.exponents) {
    const auto report = hilbert_compare(dims, *config.exponents, a.dim());
    auto sorted = *config.exponents;
    std::sort(sorted.begin(), sorted.end());
    r.report["exponents"] = sorted;
    r.report["oracle"] = report.consistent ? "consistent" : "inconsistent";
    r.report["oracle_table"] = oracle_rows(report);
    text << oracle_text(report);
    r.exit_code = report.consistent ? 0 : 2;
  } else {
    for (std::size_t d = 0; d < dims.size(); ++d) text << "d=" << d << " dim=" << dims[d] << "\n";
  }
  r.text = text.str();
  return r;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "lattice") return Command::Lattice;
  if (name == "exponents") return Command::Exponents;
  if (name == "basis") return Command::Basis;
  if (name == "verify") return Command::Verify;
  if (name == "identities") return Command::Identities;
  if (name == "oracle") return Command::Oracle;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  return std::nullopt;
}

std::optional<std::vector<Hyperplane>> parse_extension(std::string_view text, std::size_t dim) {
  if (text == "auto") return std::nullopt;
  return parse_arrangement(text, dim).hyperplanes();
}

ExponentMultiset exponents_for(const Arrangement& a, int m) {
  if (m < 0) throw BadM("--m must be nonnegative");
  if (a.dim() == 2) return exp_2arr(static_cast<int>(a.size()), m);
  if (is_essential(a)) return exp_3arr_closed(a, m);
  return exp_nonessential(a, m);
}

FreeBasis basis_for(const Arrangement& a, int m, const std::optional<std::vector<Hyperplane>>& given,
                    const BuildOptions& options, ExtendedArrangement* extension_out) {
  if (m < 0) throw BadM("--m must be nonnegative");
  if (a.dim() == 2) return basis_plane(a, m, options);
  if (!is_essential(a)) return basis_nonessential(a, m, options);
  ExtendedArrangement e = extend(a, m, given);
  FreeBasis basis = basis_3arr(e, options);
  if (extension_out) *extension_out = std::move(e);
  return basis;
}

json to_json(const DiffOp& op) {
  json terms = json::array();
  for (const auto& [a, f] : op.coeffs()) terms.push_back(json::array({a.to_vector(), f.to_canonical_string()}));
  return terms;
}

json to_json(const FreeBasis& basis) {
  json ops = json::array();
  for (std::size_t i = 0; i < basis.operators.size(); ++i) {
    const auto& p = basis.provenance[i];
    ops.push_back({{"degree", basis.degrees[i]},
                   {"provenance", {{"flat_direction", p.flat_direction}, {"j", p.j}, {"gen_index", p.gen_index}}},
                   {"terms", to_json(basis.operators[i])}});
  }
  auto degrees = basis.degrees;
  std::sort(degrees.begin(), degrees.end());
  json j = {{"operators", ops}, {"exponents", degrees}};
  if (basis.saito) j["saito"] = {{"t", basis.saito->t}, {"c", to_string(basis.saito->c)}};
  return j;
}

RunResult run(const RunConfig& config, std::string_view input) {
  if (config.m < 0) throw BadM("--m must be nonnegative");
  if (config.max_degree && *config.max_degree < 0) throw UserError("--max-degree must be nonnegative");
  const Arrangement a = parse_arrangement(input, config.dim);
  switch (config.command) {
    case Command::Lattice: return lattice(a);
    case Command::Exponents: return exponents_cmd(a, config.m);
    case Command::Basis: return basis_cmd(a, config);
    case Command::Verify: return verify_cmd(a, config);
    case Command::Identities: return identities_cmd(a, config);
    case Command::Oracle: return oracle_cmd(a, config);
  }
  throw UserError("unknown command");
}

std::string emit_report(const RunResult& result, Format format) {
  if (format == Format::Text) return result.text;
  return result.report.dump() + "\n";
}

}  // namespace mfree
