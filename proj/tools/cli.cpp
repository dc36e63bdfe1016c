#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "artin/caps.hpp"
#include "artin/center.hpp"
#include "artin/error.hpp"
#include "artin/mcg.hpp"
#include "artin/monoid.hpp"
#include "artin/roots.hpp"
#include "artin/theory.hpp"

namespace artin::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json };

struct NamedGroup {
  FamilySpec spec;
  std::string label;
};

// `braid:K` names the braid group on K strands, i.e. A_{K-1}.
NamedGroup resolve_group(const std::string& text) {
  std::string lowered;
  for (char c : text) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const std::string prefix = "braid:";
  if (lowered.rfind(prefix, 0) != 0) {
    FamilySpec spec = parse_group_spec(text);
    return {spec, render(spec)};
  }
  const std::string digits = lowered.substr(prefix.size());
  int strands = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), strands);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("bad braid group '" + text + "', expected braid:K");
  }
  if (strands < 2) throw RangeError("braid groups need at least 2 strands, got " + digits);
  FamilySpec spec = make_spec(Family::A, strands - 1);
  return {spec, render(spec) + " (braid:" + std::to_string(strands) + ")"};
}

Family parse_family(const std::string& text) {
  std::string up;
  for (char c : text) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "A") return Family::A;
  if (up == "B") return Family::B;
  if (up == "D") return Family::D;
  if (up == "I2") return Family::I2;
  throw ParseError("unknown family '" + text + "', expected A, B, D or I2");
}

int smallest_param(Family family) {
  switch (family) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::D: return 4;
    case Family::I2: return 3;
    default: throw UnsupportedGroup("tables cover the A, B, D and I2 families only");
  }
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

std::string center_symbol(bool squared, Format format) {
  if (format == Format::Json) return squared ? "Delta^2" : "Delta";
  return squared ? "Δ²" : "Δ";
}

json table_json(Family family, int max_param) {
  json rows = json::array();
  for (int p = smallest_param(family); p <= max_param; ++p) {
    CenterData data = center_data(make_spec(family, p));
    json row{{"group", render(data.spec)},
             {"rank", data.rank},
             {"h", data.h},
             {"center", center_symbol(data.cG_is_delta_squared, Format::Json)},
             {"lambda", data.lambda_cG()}};
    if (has_rank_one_caveat(data.spec)) row["note"] = kRankOneCaveat;
    rows.push_back(std::move(row));
  }
  return json{{"family", std::string(family_name(family))}, {"rows", rows}};
}

void print_key_values(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  auto display_width = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  };
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, display_width(key));
  for (const auto& [key, value] : rows) {
    out << key << std::string(width + 2 - display_width(key), ' ') << value << '\n';
  }
}

struct Context {
  std::ostream& out;
  Format format;
  Caps caps;
};

void emit(Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

void cmd_nf(Context& ctx, const std::string& group, const std::string& word_text) {
  NamedGroup g = resolve_group(group);
  ArtinMonoid monoid(g.spec);
  Word word = parse_word(word_text, monoid.rank());
  NormalForm nf = monoid.normal_form(word);
  if (ctx.format == Format::Text) {
    ctx.out << monoid.render(nf) << '\n';
    return;
  }
  json factors = json::array();
  for (const CoxElement& f : nf.factors) factors.push_back(render_word(monoid.coxeter().reduced_word(f)));
  emit(ctx, json{{"group", g.label},
                 {"word", render_word(word)},
                 {"deltaPower", nf.delta_power},
                 {"factors", factors},
                 {"normalForm", monoid.render(nf)}});
}

void cmd_equal(Context& ctx, const std::string& group, const std::string& w1_text,
               const std::string& w2_text, const std::string& method) {
  NamedGroup g = resolve_group(group);
  ArtinMonoid monoid(g.spec);
  Word w1 = parse_word(w1_text, monoid.rank());
  Word w2 = parse_word(w2_text, monoid.rank());
  std::optional<bool> by_nf;
  std::optional<bool> by_bfs;
  if (method != "bfs") by_nf = monoid.equal_positive(w1, w2);
  if (method != "nf") by_bfs = monoid.equal_positive_bfs(w1, w2, ctx.caps.bfs_length);
  if (by_nf && by_bfs && *by_nf != *by_bfs) {
    throw Error(std::string("deciders disagree: normal form says ") + yes_no(*by_nf) +
                ", rewriting closure says " + yes_no(*by_bfs));
  }
  const bool equal = by_nf ? *by_nf : *by_bfs;
  if (ctx.format == Format::Text) {
    ctx.out << (equal ? "equal" : "not equal");
    if (method == "both") ctx.out << " (nf and bfs agree)";
    ctx.out << '\n';
    return;
  }
  json deciders = json::object();
  if (by_nf) deciders["nf"] = *by_nf;
  if (by_bfs) deciders["bfs"] = *by_bfs;
  emit(ctx, json{{"group", g.label},
                 {"w1", render_word(w1)},
                 {"w2", render_word(w2)},
                 {"method", method},
                 {"equal", equal},
                 {"deciders", deciders}});
}

void cmd_center(Context& ctx, const std::string& group) {
  NamedGroup g = resolve_group(group);
  CenterData data = center_data(g.spec);
  const bool caveat = has_rank_one_caveat(g.spec);
  if (ctx.format == Format::Json) {
    json j{{"group", g.label},
           {"rank", data.rank},
           {"h", data.h},
           {"J1", render_word(data.J1word)},
           {"J2", render_word(data.J2word)},
           {"J", render_word(data.Jword)},
           {"delta", render_word(data.delta)},
           {"cG", render_word(data.cG)},
           {"cGIsDeltaSquared", data.cG_is_delta_squared},
           {"lambda", data.lambda_cG()}};
    if (caveat) j["note"] = kRankOneCaveat;
    emit(ctx, j);
    return;
  }
  print_key_values(ctx.out, {{"group", g.label},
                             {"rank", std::to_string(data.rank)},
                             {"h", std::to_string(data.h)},
                             {"J1", render_word(data.J1word)},
                             {"J2", render_word(data.J2word)},
                             {"J", render_word(data.Jword)},
                             {"Δ", render_word(data.delta)},
                             {"c_G", center_symbol(data.cG_is_delta_squared, Format::Text) + " = " +
                                         render_word(data.cG)},
                             {"λ(c_G)", std::to_string(data.lambda_cG())}});
  if (caveat) ctx.out << "note: " << kRankOneCaveat << '\n';
}

void cmd_delta(Context& ctx, const std::string& group) {
  NamedGroup g = resolve_group(group);
  CenterData data = center_data(g.spec);
  DeltaIdentityReport report = verify_delta_identities(g.spec);
  if (ctx.format == Format::Json) {
    json j{{"group", g.label},
           {"h", data.h},
           {"delta", render_word(data.delta)},
           {"deltaSquaredIsJPower", report.delta_squared_is_j_power},
           {"centerGeneratorCentral", report.center_generator_central},
           {"passed", report.passed()}};
    if (report.delta_is_j_half_power) j["deltaIsJHalfPower"] = *report.delta_is_j_half_power;
    emit(ctx, j);
  } else {
    print_key_values(ctx.out,
                     {{"group", g.label},
                      {"h", std::to_string(data.h)},
                      {"Δ", render_word(data.delta)},
                      {"Δ² = J^h", yes_no(report.delta_squared_is_j_power)},
                      {"c_G central", yes_no(report.center_generator_central)},
                      {"Δ = J^(h/2)", report.delta_is_j_half_power
                                          ? yes_no(*report.delta_is_j_half_power)
                                          : "n/a (c_G = Δ²)"}});
  }
  if (!report.passed()) throw Error("identity check failed for " + g.label);
}

void cmd_root(Context& ctx, const std::string& group, int k) {
  NamedGroup g = resolve_group(group);
  RootOptions options;
  options.caps = ctx.caps;
  RootAnswer answer = has_kth_root(g.spec, k, options);
  if (ctx.format == Format::Json) {
    json j = to_json(answer);
    j["group"] = g.label;
    emit(ctx, j);
    return;
  }
  ctx.out << to_string(answer.decision) << " (" << to_string(answer.method) << ")";
  if (answer.witness) ctx.out << " witness: " << render_word(*answer.witness);
  ctx.out << '\n';
}

void cmd_spectrum(Context& ctx, const std::string& group, std::optional<int> kmax) {
  NamedGroup g = resolve_group(group);
  if (kmax && *kmax < 1) throw RangeError("--kmax must be positive");
  RootOptions options;
  options.caps = ctx.caps;
  RootSpectrum spectrum = root_spectrum(g.spec, kmax, options);
  if (ctx.format == Format::Json) {
    json j = to_json(spectrum);
    j["group"] = g.label;
    emit(ctx, j);
    return;
  }
  ctx.out << g.label << ": {";
  for (std::size_t i = 0; i < spectrum.members.size(); ++i) {
    ctx.out << (i ? ", " : "") << spectrum.members[i];
  }
  ctx.out << "} (k <= " << spectrum.search_bound << ")\n";
}

void print_verdict(Context& ctx, const EquivalenceVerdict& verdict, bool verbose) {
  if (ctx.format == Format::Json) {
    json j = to_json(verdict);
    if (verbose && verdict.sentence && is_kahr(*verdict.sentence)) j["justification"] = kPhiReduction;
    emit(ctx, j);
    return;
  }
  ctx.out << to_string(verdict.kind);
  if (verdict.sentence && verdict.holds_in) {
    const std::size_t side = *verdict.holds_in == VerdictSide::Left ? 0 : 1;
    ctx.out << ": " << render(*verdict.sentence) << " holds in " << verdict.groups[side]
            << " and fails in " << verdict.groups[1 - side];
  }
  ctx.out << " (basis " << to_string(verdict.basis) << ", exponents " << verdict.exponents[0]
          << " vs " << verdict.exponents[1] << ")\n";
  if (verbose && verdict.sentence && is_kahr(*verdict.sentence)) {
    ctx.out << "justification: " << kPhiReduction << '\n';
  }
}

void cmd_distinguish(Context& ctx, const std::string& left, const std::string& right, bool verbose) {
  NamedGroup a = resolve_group(left);
  NamedGroup b = resolve_group(right);
  RootOptions options;
  options.caps = ctx.caps;
  EquivalenceVerdict verdict = distinguish(a.spec, b.spec, options);
  verdict.groups = {a.label, b.label};
  print_verdict(ctx, verdict, verbose);
}

void cmd_table(Context& ctx, const std::string& family_text, int max_param) {
  Family family = parse_family(family_text);
  if (ctx.format == Format::Json) {
    emit(ctx, table_json(family, max_param));
  } else {
    ctx.out << render_table(family, max_param);
  }
}

void cmd_mcg(Context& ctx, int g, int h) {
  EquivalenceVerdict verdict = distinguish_mcg(make_genus(g), make_genus(h));
  print_verdict(ctx, verdict, false);
}

void cmd_validate(Context& ctx, const std::string& path) {
  CoxeterMatrix matrix = read_matrix_file(path);
  ValidationReport report = validate(matrix);
  std::optional<FamilySpec> family = report.valid() ? identify_family(matrix) : std::nullopt;
  if (ctx.format == Format::Json) {
    json j{{"rank", matrix.rank()},
           {"valid", report.valid()},
           {"connected", report.connected},
           {"tree", report.tree},
           {"finiteEntries", report.finite_entries},
           {"violations", report.violations}};
    if (family) j["family"] = render(*family);
    emit(ctx, j);
  } else {
    print_key_values(ctx.out, {{"rank", std::to_string(matrix.rank())},
                               {"valid", yes_no(report.valid())},
                               {"connected", yes_no(report.connected)},
                               {"tree", yes_no(report.tree)},
                               {"finite entries", yes_no(report.finite_entries)},
                               {"family", family ? render(*family) : "-"}});
    for (const std::string& v : report.violations) ctx.out << "violation: " << v << '\n';
  }
  if (!report.valid()) throw Error("matrix violates the Coxeter matrix conditions");
}

}  // namespace

std::string render_table(Family family, int max_param) {
  const int first = smallest_param(family);
  if (max_param < first) {
    throw RangeError("family " + std::string(family_name(family)) + " starts at parameter " +
                     std::to_string(first));
  }
  std::ostringstream out;
  out << std::left << std::setw(8) << "group" << std::setw(6) << "rank" << std::setw(6) << "h"
      << std::setw(8) << "center" << "lambda(c_G)\n";
  bool caveat = false;
  for (int p = first; p <= max_param; ++p) {
    CenterData data = center_data(make_spec(family, p));
    // Δ and Δ² are multibyte; pad by display width.
    const std::string symbol = center_symbol(data.cG_is_delta_squared, Format::Text);
    const int symbol_width = data.cG_is_delta_squared ? 2 : 1;
    out << std::setw(8) << render(data.spec) << std::setw(6) << data.rank << std::setw(6) << data.h
        << symbol << std::string(static_cast<std::size_t>(8 - symbol_width), ' ') << data.lambda_cG();
    if (has_rank_one_caveat(data.spec)) {
      out << " *";
      caveat = true;
    }
    out << '\n';
  }
  if (caveat) out << "* " << kRankOneCaveat << '\n';
  return out.str();
}

CoxeterMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::vector<std::string> row;
    std::string token;
    while (tokens >> token) row.push_back(token);
    if (!row.empty()) lines.push_back(std::move(row));
  }
  if (lines.empty()) throw ParseError("matrix file is empty");

  auto positive = [](const std::string& token, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
      throw ParseError(std::string("bad ") + what + " '" + token + "'");
    }
    return value;
  };

  if (lines[0].size() != 1) throw ParseError("first line must hold the rank only");
  const int n = positive(lines[0][0], "rank");
  if (n > kMaxRank) throw RangeError("rank " + std::to_string(n) + " exceeds " + std::to_string(kMaxRank));
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto& row = lines[static_cast<std::size_t>(i)];
    if (row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (const std::string& token : row) {
      entries.push_back(token == "inf" ? CoxeterMatrix::kInfinity : positive(token, "entry"));
    }
  }
  return CoxeterMatrix(n, std::move(entries));
}

CoxeterMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read matrix file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in Artin groups of finite type", "artin"};
  app.require_subcommand(1);

  std::string format_text;
  auto add_format = [&format_text](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string group, word, w1, w2, method = "nf", family, matrix_path, left, right;
  int k = 0, max_param = 0, genus_g = 0, genus_h = 0;
  std::optional<int> kmax;
  bool verbose = false;

  auto* nf = app.add_subcommand("nf", "Left-greedy normal form of a positive word");
  nf->add_option("--group", group, "Group spec, e.g. A3, I2(5) or braid:4")->required();
  nf->add_option("--word", word, "Generator indices, e.g. \"1 2 1\"")->required();
  add_format(nf);

  auto* equal = app.add_subcommand("equal", "Decide equality of two positive words");
  equal->add_option("--group", group)->required();
  equal->add_option("--w1", w1)->required();
  equal->add_option("--w2", w2)->required();
  equal->add_option("--method", method)->check(CLI::IsMember({"nf", "bfs", "both"}));
  add_format(equal);

  auto* center = app.add_subcommand("center", "Bipartition words, Delta and the center generator");
  center->add_option("--group", group)->required();
  add_format(center);

  auto* delta = app.add_subcommand("delta", "Delta and the checks of its defining identities");
  delta->add_option("--group", group)->required();
  add_format(delta);

  auto* root = app.add_subcommand("root", "Does the center generator have a k-th root?");
  root->add_option("--group", group)->required();
  root->add_option("--k", k)->required();
  add_format(root);

  auto* spectrum = app.add_subcommand("spectrum", "All k for which the center generator has a k-th root");
  spectrum->add_option("--group", group)->required();
  spectrum->add_option("--kmax", kmax);
  add_format(spectrum);

  auto* dist = app.add_subcommand("distinguish", "Sentence separating two Artin groups");
  dist->add_option("SPEC1", left)->required();
  dist->add_option("SPEC2", right)->required();
  dist->add_flag("--verbose", verbose, "Include the reduction behind the sentence");
  add_format(dist);

  auto* table = app.add_subcommand("table", "Rank, h, center generator and its length per family");
  table->add_option("--family", family, "A, B, D or I2")->required();
  table->add_option("--max", max_param)->required();
  add_format(table);

  auto* mcg = app.add_subcommand("mcg", "Sentence separating two mapping class groups");
  mcg->add_option("G", genus_g)->required();
  mcg->add_option("H", genus_h)->required();
  add_format(mcg);

  auto* validate_cmd = app.add_subcommand("validate", "Check a Coxeter matrix file");
  validate_cmd->add_option("--matrix", matrix_path)->required();
  add_format(validate_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool json_default = root->parsed() || spectrum->parsed() || dist->parsed() || mcg->parsed();
  Format format = json_default ? Format::Json : Format::Text;
  if (!format_text.empty()) format = format_text == "json" ? Format::Json : Format::Text;

  try {
    Context ctx{out, format, caps_from_environment()};
    if (nf->parsed()) cmd_nf(ctx, group, word);
    else if (equal->parsed()) cmd_equal(ctx, group, w1, w2, method);
    else if (center->parsed()) cmd_center(ctx, group);
    else if (delta->parsed()) cmd_delta(ctx, group);
    else if (root->parsed()) cmd_root(ctx, group, k);
    else if (spectrum->parsed()) cmd_spectrum(ctx, group, kmax);
    else if (dist->parsed()) cmd_distinguish(ctx, left, right, verbose);
    else if (table->parsed()) cmd_table(ctx, family, max_param);
    else if (mcg->parsed()) cmd_mcg(ctx, genus_g, genus_h);
    else if (validate_cmd->parsed()) cmd_validate(ctx, matrix_path);
  } catch (const Error& e) {
    err << "artin: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace artin::cli
