#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "charrig/errors.hpp"
#include "charrig/family_io.hpp"
#include "charrig/json_codec.hpp"
#include "charrig/rigidity.hpp"
#include "charrig/weyl_oracle.hpp"

namespace charrig::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int rank = 0;
  std::int64_t bound = 0;
  std::string format = "json";
  std::string cache_dir;
};

std::vector<int> parse_coords(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed weight '" + text + "'");
    }
    if (used != item.size()) throw InputError("malformed weight '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty weight");
  return out;
}

DominantWeight parse_dominant(Rank l, const std::string& text) {
  const auto c = parse_coords(text);
  if (static_cast<int>(c.size()) != l.value()) {
    throw InputError("weight '" + text + "' needs " + std::to_string(l.value()) + " coordinates");
  }
  for (int x : c) {
    if (x < 0) throw InputError("weight '" + text + "' is not dominant");
  }
  return dominant_from_fundamental(l, c);
}

std::string coords_str(const Weight& w) {
  std::string s;
  const auto c = w.fundamental();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

Rank make_rank(int r) {
  if (r < 1) throw InputError("--rank must be >= 1");
  return Rank(r);
}

std::optional<std::filesystem::path> cache_path(const Options& o) {
  if (const char* env = std::getenv("CHARRIG_CACHE"); env && *env) return std::filesystem::path(env);
  if (!o.cache_dir.empty()) return std::filesystem::path(o.cache_dir);
  return std::nullopt;
}

CharacterFamily load_family(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return family_from_json(parse_document(text));
}

// ---------------------------------------------------------------------------

int cmd_char(const Options& o, const std::string& weight, std::ostream& out) {
  const Rank l = make_rank(o.rank);
  const auto la = parse_dominant(l, weight);
  CharacterTable table(cache_path(o));
  const auto& ch = table.character(la);
  const auto mt = multiplicity_table(la, ch);
  const Coefficient dim = weyl_dim(la);

  if (o.format == "tsv") {
    out << "mu\tmultiplicity\torbit_size\n";
    for (const auto& [mu, m] : mt.mults) out << coords_str(mu.weight()) << '\t' << m << '\t' << orbit_size(mu) << '\n';
    out << "dimension\t" << dim << '\n';
    return kOk;
  }
  Json doc;
  doc["rank"] = l.value();
  doc["lambda"] = weight_to_json(la.weight());
  Json rows = Json::array();
  for (const auto& [mu, m] : mt.mults) {
    Json r;
    r["mu"] = weight_to_json(mu.weight());
    r["multiplicity"] = coefficient_to_json(m);
    r["orbit_size"] = orbit_size(mu);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["dimension"] = coefficient_to_json(dim);
  out << dump_document(doc);
  return kOk;
}

int cmd_tensor(const Options& o, const std::string& mu_text, const std::string& nu_text, std::ostream& out) {
  const Rank l = make_rank(o.rank);
  const auto mu = parse_dominant(l, mu_text);
  const auto nu = parse_dominant(l, nu_text);
  CharacterTable table(cache_path(o));
  const auto row = table.tensor_decompose(mu, nu);
  const Coefficient lhs = weyl_dim(mu) * weyl_dim(nu);
  Coefficient rhs = 0;
  for (const auto& [la, c] : row) rhs += c * weyl_dim(la);

  if (o.format == "tsv") {
    out << "lambda\tcoefficient\tdim\n";
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      out << coords_str(it->first.weight()) << '\t' << it->second << '\t' << weyl_dim(it->first) << '\n';
    }
    out << "dimension_identity\t" << lhs << '\t' << rhs << '\n';
    return kOk;
  }
  Json doc;
  doc["rank"] = l.value();
  doc["mu"] = weight_to_json(mu.weight());
  doc["nu"] = weight_to_json(nu.weight());
  Json rows = Json::array();
  for (auto it = row.rbegin(); it != row.rend(); ++it) {
    Json r;
    r["lambda"] = weight_to_json(it->first.weight());
    r["coefficient"] = coefficient_to_json(it->second);
    r["dim"] = coefficient_to_json(weyl_dim(it->first));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  Json ident;
  ident["product_dim"] = coefficient_to_json(lhs);
  ident["sum_dim"] = coefficient_to_json(rhs);
  ident["holds"] = lhs == rhs;
  doc["dimension_identity"] = std::move(ident);
  out << dump_document(doc);
  return kOk;
}

int cmd_reconstruct(const Options& o, const std::string& oracle_kind, const std::string& table_path,
                    const std::string& out_path, std::ostream& out) {
  const Rank l = make_rank(o.rank);
  if (o.bound < 0) throw InputError("--bound must be >= 0");
  CharacterTable table(cache_path(o));

  std::optional<CharacterFamily> fam;
  if (oracle_kind == "lr") {
    LrOracle oracle(table);
    fam = reconstruct_family(oracle, l, o.bound);
  } else {
    if (table_path.empty()) throw InputError("--oracle file requires --table");
    std::string text;
    try {
      text = read_text_file(table_path);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    const auto stored = table_from_json(parse_document(text));
    if (stored.rank() != l) throw InputError("table rank does not match --rank");
    TableOracle oracle(stored);
    fam = reconstruct_family(oracle, l, o.bound);
  }
  if (!out_path.empty()) write_text_file(out_path, dump_document(family_to_json(*fam)));

  struct DiffRow {
    DominantWeight la, mu;
    Coefficient got, want;
  };
  std::vector<DiffRow> diff;
  for (const auto& [la, f] : fam->members()) {
    const auto& ch = table.character(la);
    for (const auto& mu : saturated_dominants(la)) {
      if (f.coefficient(mu) != ch.coefficient(mu)) diff.push_back({la, mu, f.coefficient(mu), ch.coefficient(mu)});
    }
  }

  if (o.format == "tsv") {
    out << "lambda\tmu\treconstructed\tweyl\n";
    for (const auto& d : diff) {
      out << coords_str(d.la.weight()) << '\t' << coords_str(d.mu.weight()) << '\t' << d.got << '\t' << d.want << '\n';
    }
    out << "members\t" << fam->members().size() << "\ndiff\t" << diff.size() << '\n';
  } else {
    Json doc;
    doc["rank"] = l.value();
    doc["bound"] = o.bound;
    doc["oracle"] = oracle_kind;
    doc["members"] = fam->members().size();
    Json rows = Json::array();
    for (const auto& d : diff) {
      Json r;
      r["lambda"] = weight_to_json(d.la.weight());
      r["mu"] = weight_to_json(d.mu.weight());
      r["reconstructed"] = coefficient_to_json(d.got);
      r["weyl"] = coefficient_to_json(d.want);
      rows.push_back(std::move(r));
    }
    doc["diff"] = std::move(rows);
    out << dump_document(doc);
  }
  return diff.empty() ? kOk : kMathFailure;
}

int cmd_verify(const Options& o, const std::string& family_path, std::ostream& out) {
  const CharacterFamily fam = load_family(family_path);
  if (o.rank != 0 && o.rank != fam.rank().value()) throw InputError("--rank does not match the family file");
  CharacterTable table(cache_path(o));
  const TheoremVerdict v = verify_theorem(fam, table);
  const auto& r = v.report;
  const char* c1 = r.condition1_pass() ? "pass" : "fail";
  const char* c2 = r.condition2_pass() ? "pass" : "fail";
  const std::string equal = !v.members_equal ? "not_compared" : (*v.members_equal ? "equal" : "unequal");

  if (o.format == "tsv") {
    out << "condition\tverdict\tchecked\tviolations\tskipped\n";
    out << "1\t" << c1 << '\t' << r.condition1_checked << '\t' << r.condition1_violations.size() << "\t0\n";
    out << "2\t" << c2 << '\t' << r.condition2_checked << '\t' << r.condition2_violations.size() << '\t'
        << r.skipped.size() << '\n';
    out << "members\t" << equal << '\n';
  } else {
    Json doc;
    doc["rank"] = fam.rank().value();
    doc["bound"] = fam.bound();
    Json j1;
    j1["verdict"] = c1;
    j1["checked"] = r.condition1_checked;
    Json v1 = Json::array();
    for (const auto& x : r.condition1_violations) {
      Json e;
      e["lambda"] = weight_to_json(x.lambda.weight());
      e["mu"] = weight_to_json(x.mu.weight());
      e["expected"] = coefficient_to_json(x.expected);
      e["found"] = coefficient_to_json(x.found);
      v1.push_back(std::move(e));
    }
    j1["violations"] = std::move(v1);
    Json j2;
    j2["verdict"] = c2;
    j2["checked"] = r.condition2_checked;
    j2["skipped"] = r.skipped.size();
    Json v2 = Json::array();
    for (const auto& x : r.condition2_violations) {
      Json e;
      e["mu"] = weight_to_json(x.mu.weight());
      e["nu"] = weight_to_json(x.nu.weight());
      e["lambda"] = weight_to_json(x.lambda.weight());
      e["lhs"] = coefficient_to_json(x.lhs);
      e["rhs"] = coefficient_to_json(x.rhs);
      v2.push_back(std::move(e));
    }
    j2["violations"] = std::move(v2);
    doc["condition1"] = std::move(j1);
    doc["condition2"] = std::move(j2);
    doc["members"] = equal;
    out << dump_document(doc);
  }
  return v.conditions_pass() ? kOk : kMathFailure;
}

struct PerturbArgs {
  std::string lambda;
  std::string at;
  long long delta = 0;
  std::string out;
  int random = 0;
  std::optional<std::uint64_t> seed;
};

int cmd_perturb(const Options& o, const PerturbArgs& a, std::ostream& out) {
  const Rank l = make_rank(o.rank);
  if (o.bound < 0) throw InputError("--bound must be >= 0");
  CharacterTable table(cache_path(o));
  const CharacterFamily base = weyl_family(l, o.bound, table);

  if (a.random > 0) {
    if (!a.seed) throw InputError("--random requires --seed");
    if (a.out.empty()) throw InputError("--random requires --out <directory>");
    std::vector<std::pair<DominantWeight, DominantWeight>> sites;
    for (const auto& [la, f] : base.members()) {
      for (const auto& mu : saturated_dominants(la)) {
        if (mu != la) sites.emplace_back(la, mu);
      }
    }
    if (sites.empty()) throw InputError("no perturbation sites below bound " + std::to_string(o.bound));
    constexpr int kDeltas[] = {-3, -2, -1, 1, 2, 3};
    std::mt19937_64 rng(*a.seed);
    std::filesystem::create_directories(a.out);
    Json manifest;
    manifest["rank"] = l.value();
    manifest["bound"] = o.bound;
    manifest["seed"] = *a.seed;
    Json files = Json::array();
    for (int k = 0; k < a.random; ++k) {
      const auto& [la, mu] = sites[rng() % sites.size()];
      const int delta = kDeltas[rng() % std::size(kDeltas)];
      std::ostringstream name;
      name << "perturb_" << std::setw(3) << std::setfill('0') << k << ".json";
      write_text_file(std::filesystem::path(a.out) / name.str(),
                      dump_document(family_to_json(perturb_family(base, la, mu, delta))));
      Json e;
      e["file"] = name.str();
      e["lambda"] = weight_to_json(la.weight());
      e["mu"] = weight_to_json(mu.weight());
      e["delta"] = delta;
      files.push_back(std::move(e));
    }
    manifest["files"] = std::move(files);
    out << dump_document(manifest);
    return kOk;
  }

  if (a.lambda.empty() || a.at.empty()) throw InputError("perturb needs --lambda and --at (or --random)");
  if (a.delta == 0) throw InputError("--delta must be nonzero");
  const auto la = parse_dominant(l, a.lambda);
  const auto mu = parse_dominant(l, a.at);
  const std::string doc = dump_document(family_to_json(perturb_family(base, la, mu, Coefficient(a.delta))));
  if (a.out.empty()) {
    out << doc;
  } else {
    write_text_file(a.out, doc);
  }
  return kOk;
}

int cmd_table(const Options& o, const std::string& out_path, std::ostream& out) {
  const Rank l = make_rank(o.rank);
  if (o.bound < 0) throw InputError("--bound must be >= 0");
  CharacterTable table(cache_path(o));
  const std::string doc = dump_document(table_to_json(StructureConstantTable::littlewood_richardson(l, o.bound, table)));
  if (out_path.empty()) {
    out << doc;
  } else {
    write_text_file(out_path, doc);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters, tensor products and rigidity checks for type A Lie algebras", "charrig"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cache-dir", o.cache_dir, "Persistent character cache (CHARRIG_CACHE overrides)");

  std::string weight, mu, nu, oracle = "lr", table_path, out_path, family_path;
  PerturbArgs pa;

  auto* c_char = app.add_subcommand("char", "Weight multiplicities of V(lambda)");
  c_char->add_option("--rank", o.rank)->required();
  c_char->add_option("--weight", weight, "Fundamental coordinates, e.g. 1,1")->required();

  auto* c_tensor = app.add_subcommand("tensor", "Decompose V(mu) x V(nu)");
  c_tensor->add_option("--rank", o.rank)->required();
  c_tensor->add_option("--mu", mu)->required();
  c_tensor->add_option("--nu", nu)->required();

  auto* c_rec = app.add_subcommand("reconstruct", "Rebuild the character family from structure constants");
  c_rec->add_option("--rank", o.rank)->required();
  c_rec->add_option("--bound", o.bound)->required();
  c_rec->add_option("--oracle", oracle)->check(CLI::IsMember({"lr", "file"}));
  c_rec->add_option("--table", table_path, "Structure constant table for --oracle file");
  c_rec->add_option("--out", out_path, "Write the reconstructed family here");

  auto* c_verify = app.add_subcommand("verify", "Check both rigidity conditions on a family file");
  c_verify->add_option("--rank", o.rank);
  c_verify->add_option("--family", family_path)->required();

  auto* c_perturb = app.add_subcommand("perturb", "Write a perturbed copy of the Weyl character family");
  c_perturb->add_option("--rank", o.rank)->required();
  c_perturb->add_option("--bound", o.bound)->required();
  c_perturb->add_option("--lambda", pa.lambda);
  c_perturb->add_option("--at", pa.at, "Dominant weight whose coefficient in f_lambda changes");
  c_perturb->add_option("--delta", pa.delta);
  c_perturb->add_option("--out", pa.out, "Output file, or directory with --random");
  c_perturb->add_option("--random", pa.random, "Batch mode: number of random single-site perturbations");
  c_perturb->add_option("--seed", pa.seed);

  auto* c_table = app.add_subcommand("table", "Write the Littlewood-Richardson structure constant table");
  c_table->add_option("--rank", o.rank)->required();
  c_table->add_option("--bound", o.bound)->required();
  c_table->add_option("--out", out_path);

  // The first-class options are accepted after the subcommand as well.
  for (auto* sub : {c_char, c_tensor, c_rec, c_verify, c_perturb, c_table}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (c_char->parsed()) return cmd_char(o, weight, out);
    if (c_tensor->parsed()) return cmd_tensor(o, mu, nu, out);
    if (c_rec->parsed()) return cmd_reconstruct(o, oracle, table_path, out_path, out);
    if (c_verify->parsed()) return cmd_verify(o, family_path, out);
    if (c_perturb->parsed()) return cmd_perturb(o, pa, out);
    if (c_table->parsed()) return cmd_table(o, out_path, out);
  } catch (const OracleIncomplete& e) {
    err << "charrig: oracle incomplete: " << e.what() << '\n';
    return kOracleIncomplete;
  } catch (const std::exception& e) {
    err << "charrig: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace charrig::cli
