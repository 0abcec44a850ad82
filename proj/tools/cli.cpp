#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "wreathhom/counting.hpp"
#include "wreathhom/error.hpp"
#include "wreathhom/json_io.hpp"
#include "wreathhom/oracle.hpp"
#include "wreathhom/sampler.hpp"

namespace wreathhom::cli {

namespace {

std::size_t parse_positive(const std::string &text, const char *what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos != text.size() || v == 0)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a positive integer, got '" +
                                                text + "'");
  return static_cast<std::size_t>(v);
}

std::size_t element_cap(const JobConfig &cfg) {
  if (cfg.cap) {
    if (*cfg.cap == 0) throw Error(ErrorKind::InvalidArgument, "--cap must be positive");
    return *cfg.cap;
  }
  if (const char *env = std::getenv("WREATHHOM_CAP")) return parse_positive(env, "WREATHHOM_CAP");
  return kDefaultElementCap;
}

FiniteGroup resolve_group(const JobConfig &cfg) {
  const auto names = builtin_group_names();
  if (std::find(names.begin(), names.end(), cfg.group) != names.end()) {
    FiniteGroup g = builtin_group(cfg.group);
    if (g.order() > element_cap(cfg))
      throw Error(ErrorKind::CapExceeded, "group order exceeds the element cap");
    return g;
  }
  if (std::filesystem::exists(cfg.group)) return build_group(load_group_spec(cfg.group), element_cap(cfg));
  std::string list;
  for (const auto &n : names) list += (list.empty() ? "" : ", ") + n;
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin group '" + cfg.group +
                                             "' and no such file (builtins: " + list + ")");
}

AbelianGroup resolve_coefficients(const JobConfig &cfg) {
  if (cfg.a_file) {
    std::ifstream in(*cfg.a_file);
    if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open '" + cfg.a_file->string() + "'");
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorKind::InvalidSpec, std::string("cannot parse coefficient group: ") + e.what());
    }
    return abelian_group_from_json(j);
  }
  return AbelianGroup::from_cyclic_orders(cfg.a_factors);
}

std::pair<std::size_t, std::size_t> resolve_range(const JobConfig &cfg) {
  if (cfg.n && cfg.n_range) throw Error(ErrorKind::InvalidArgument, "give --n or --n-range, not both");
  if (cfg.n) return {*cfg.n, *cfg.n};
  if (!cfg.n_range) throw Error(ErrorKind::InvalidArgument, "--n or --n-range is required");
  const std::string &r = *cfg.n_range;
  auto colon = r.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::InvalidArgument, "--n-range must look like lo:hi");
  std::size_t lo = 0, hi = 0;
  try {
    lo = std::stoull(r.substr(0, colon));
    hi = std::stoull(r.substr(colon + 1));
  } catch (const std::exception &) {
    throw Error(ErrorKind::InvalidArgument, "--n-range must look like lo:hi");
  }
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "--n-range is empty");
  return {lo, hi};
}

class Emitter {
 public:
  Emitter(std::ostream &os, std::string format) : os_(os), format_(std::move(format)) {
    if (format_ != "jsonl" && format_ != "json")
      throw Error(ErrorKind::InvalidArgument, "--format must be jsonl or json");
  }

  void emit(Json record) {
    if (format_ == "jsonl")
      os_ << record.dump() << '\n';
    else
      collected_.push_back(std::move(record));
  }

  void finish() {
    if (format_ == "json") os_ << collected_.dump(2) << '\n';
    os_.flush();
  }

 private:
  std::ostream &os_;
  std::string format_;
  Json collected_ = Json::array();
};

Json factors_json(const AbelianGroup &a) { return a.invariant_factors(); }

int run_count(const JobConfig &cfg, Emitter &emit) {
  auto [lo, hi] = resolve_range(cfg);
  auto model = build_wreath_model(resolve_group(cfg), resolve_coefficients(cfg));
  auto table = count_table(model, hi);
  for (std::size_t n = lo; n <= hi; ++n) {
    Json j;
    j["n"] = n;
    j["count"] = to_decimal(table.t[n]);
    emit.emit(std::move(j));
  }
  return kOk;
}

int run_pfree(const JobConfig &cfg, Emitter &emit) {
  auto [lo, hi] = resolve_range(cfg);
  auto model = build_wreath_model(resolve_group(cfg), resolve_coefficients(cfg));
  auto probs = fixed_point_free_probabilities(model, hi);
  for (std::size_t n = lo; n <= hi; ++n) {
    Json j;
    j["n"] = n;
    j["p"] = to_string(probs[n]);
    emit.emit(std::move(j));
  }
  return kOk;
}

int run_delta(const JobConfig &cfg, Emitter &emit) {
  auto [lo, hi] = resolve_range(cfg);
  auto model = build_wreath_model(resolve_group(cfg), resolve_coefficients(cfg));
  auto series = delta_series(model, hi);
  auto probs = fixed_point_free_probabilities(model, hi);
  for (std::size_t n = lo; n <= hi; ++n) {
    Json j;
    j["n"] = n;
    Json fibers = Json::array(), ps = Json::array();
    for (const auto &f : series[n].fiber_counts) fibers.push_back(to_decimal(f));
    for (const auto &p : series[n].probs) ps.push_back(to_string(p));
    j["fibers"] = std::move(fibers);
    j["probs"] = std::move(ps);
    j["supDistance"] = to_string(sup_distance_to_uniform(series[n]));
    j["p"] = to_string(probs[n]);
    emit.emit(std::move(j));
  }
  return kOk;
}

int run_weyl(const JobConfig &cfg, Emitter &emit) {
  auto [lo, hi] = resolve_range(cfg);
  auto model = build_wreath_model(resolve_group(cfg), AbelianGroup({2}));
  auto classes = subgroup_classes(model.group);
  Rational limit(1, static_cast<unsigned long>(1 + index_two_subgroup_count(classes)));
  auto series = delta_series(model, hi);
  for (std::size_t n = lo; n <= hi; ++n) {
    Rational ratio(series[n].fiber_counts[0], series[n].total());
    ratio.canonicalize();
    Json j;
    j["n"] = n;
    j["count"] = to_decimal(series[n].fiber_counts[0]);
    j["ratio"] = to_string(ratio);
    j["limit"] = to_string(limit);
    emit.emit(std::move(j));
  }
  return kOk;
}

int run_sample(const JobConfig &cfg, Emitter &emit) {
  if (!cfg.n) throw Error(ErrorKind::InvalidArgument, "sample needs --n");
  auto model = build_wreath_model(resolve_group(cfg), resolve_coefficients(cfg));
  HomSampler sampler(model, *cfg.n);
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.samples; ++i) emit.emit(to_json(sampler.sample_hom(rng)));
  return kOk;
}

int run_orbits(const JobConfig &cfg, Emitter &emit) {
  auto model = build_wreath_model(resolve_group(cfg), resolve_coefficients(cfg));
  for (const auto &type : model.orbit_types) {
    Json j = to_json(type.data);
    j["subgroupOrder"] = type.subgroup.order();
    j["normalizerOrder"] = type.subgroup.normalizer_order;
    j["conjugates"] = type.subgroup.class_size;
    j["abelianization"] = factors_json(type.abelianization.group);
    emit.emit(std::move(j));
  }
  return kOk;
}

int run_oracle_check(const JobConfig &cfg, Emitter &emit) {
  std::vector<std::string> groups{"C1", "C2", "C3", "C4", "V4", "S3"};
  std::vector<AbelianGroup> coefficient_groups{AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({2, 2})};
  if (cfg.group_given) groups = {cfg.group};
  if (cfg.a_given) coefficient_groups = {resolve_coefficients(cfg)};

  std::size_t cases = 0, failures = 0;
  for (const auto &name : groups) {
    JobConfig one = cfg;
    one.group = name;
    FiniteGroup group = resolve_group(one);
    for (const auto &A : coefficient_groups) {
      auto model = build_wreath_model(group, A);
      for (std::size_t n = 1; n <= cfg.oracle_n_max; ++n) {
        long double size = 1;
        for (std::size_t i = 1; i <= n; ++i) size *= static_cast<long double>(i * A.order());
        if (size > ExplicitWreath::kDefaultCap) continue;
        auto oracle = oracle_delta(model, n);
        auto exact = delta_distribution(model, n);
        BigInt direct = hom_count_direct(model, n);
        BigInt wreath = hom_count_wreath(model, n);
        bool fibers_match = oracle.fiber_counts == exact.fiber_counts;
        bool ok = fibers_match && direct == wreath && wreath == oracle.total();
        ++cases;
        if (!ok) ++failures;
        Json j;
        j["group"] = name;
        j["A"] = factors_json(A);
        j["n"] = n;
        j["oracle"] = to_decimal(oracle.total());
        j["direct"] = to_decimal(direct);
        j["wreath"] = to_decimal(wreath);
        j["fibersMatch"] = fibers_match;
        j["ok"] = ok;
        emit.emit(std::move(j));
      }
    }
  }
  Json summary;
  summary["cases"] = cases;
  summary["failures"] = failures;
  summary["ok"] = failures == 0;
  emit.emit(std::move(summary));
  return failures == 0 ? kOk : kVerificationFailed;
}

int run_fit_decay(const JobConfig &cfg, Emitter &emit) {
  JobConfig ranged = cfg;
  if (!ranged.n && !ranged.n_range) ranged.n_range = "50:300";
  auto [lo, hi] = resolve_range(ranged);
  auto model = build_wreath_model(resolve_group(cfg), resolve_coefficients(cfg));
  auto fit = fit_decay(model, lo, hi);
  auto constant = decay_constant(model);
  Json j;
  j["group"] = model.group.name();
  j["A"] = factors_json(model.coefficients);
  j["d"] = model.group.order();
  j["nLo"] = lo;
  j["nHi"] = hi;
  j["points"] = fit.points;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["decayConstant"] = constant.value;
  j["conservativeConstant"] = to_string(constant.conservative);
  emit.emit(std::move(j));
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return kCapExceeded;
    case ErrorKind::UnknownBuiltin: return kUnknownBuiltin;
    case ErrorKind::IntegralityViolation: return kIntegrality;
    default: return kBadInput;
  }
}

}  // namespace

int execute(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  JobConfig cfg;
  CLI::App app{"Exact counting, distribution and sampling of homomorphisms G -> A wr S_n", "wreathhom"};
  app.require_subcommand(1);

  struct Flags {
    bool group, a, range, seed, out, caps;
  };
  auto add = [&](const std::string &name, const std::string &help, Flags f) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->add_option("--format", cfg.format, "jsonl (default) or json");
    if (f.group)
      sub->add_option("--group", cfg.group, "builtin name (C1 C2 C3 C4 V4 S3 D4 Q8) or GroupSpec JSON path");
    if (f.a) {
      sub->add_option("--A", cfg.a_factors, "cyclic orders of the coefficient group, e.g. 2,2")
          ->delimiter(',');
      sub->add_option("--A-file", cfg.a_file, "AbelianGroup JSON file");
    }
    if (f.range) {
      sub->add_option("--n", cfg.n, "degree n");
      sub->add_option("--n-range", cfg.n_range, "inclusive range lo:hi");
    }
    if (f.seed) {
      sub->add_option("--seed", cfg.seed, "random seed");
      sub->add_option("--samples", cfg.samples, "number of draws");
    }
    if (f.out) sub->add_option("--out", cfg.out, "output file (default stdout)");
    if (f.caps) sub->add_option("--cap", cfg.cap, "group element cap (env WREATHHOM_CAP)");
    return sub;
  };
  add("count", "|Hom(G, A wr S_n)| per n", {true, true, true, false, true, true});
  add("pfree", "probability that the permutation image has no fixed point", {true, true, true, false, true, true});
  add("delta", "exact distribution of the fold map and its distance to uniform", {true, true, true, false, true, true});
  add("weyl", "|Hom(G, W_n)| for the type-D Weyl group and its ratio to |Hom(G, C2 wr S_n)|",
      {true, false, true, false, true, true});
  add("sample", "uniform random homomorphisms as JSON lines", {true, true, true, true, true, true});
  auto *oracle = add("oracle-check", "brute-force verification on the desk suite", {true, true, false, false, true, true});
  oracle->add_option("--n-max", cfg.oracle_n_max, "largest n to enumerate (default 4)");
  add("fit-decay", "least-squares fit of log p_n against n^(1/|G|)", {true, true, true, false, true, true});
  add("orbits", "per-orbit-type counting data", {true, true, false, false, true, true});

  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App *sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  auto given = [&](const char *name) {
    const CLI::Option *opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  cfg.group_given = given("--group");
  cfg.a_given = given("--A") || given("--A-file");

  try {
    std::unique_ptr<std::ofstream> file;
    std::ostream *os = &out;
    if (cfg.out) {
      file = std::make_unique<std::ofstream>(*cfg.out);
      if (!*file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + cfg.out->string() + "'");
      os = file.get();
    }
    Emitter emit(*os, cfg.format);
    int code = kOk;
    if (cfg.command == "count") code = run_count(cfg, emit);
    else if (cfg.command == "pfree") code = run_pfree(cfg, emit);
    else if (cfg.command == "delta") code = run_delta(cfg, emit);
    else if (cfg.command == "weyl") code = run_weyl(cfg, emit);
    else if (cfg.command == "sample") code = run_sample(cfg, emit);
    else if (cfg.command == "oracle-check") code = run_oracle_check(cfg, emit);
    else if (cfg.command == "fit-decay") code = run_fit_decay(cfg, emit);
    else if (cfg.command == "orbits") code = run_orbits(cfg, emit);
    emit.finish();
    return code;
  } catch (const Error &e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace wreathhom::cli
