// hcoh: cohomology of the Heisenberg algebras h_m with adjoint coefficients.
//
// Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 usage error.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "hcoh/checks.hpp"
#include "hcoh/serialize.hpp"

using namespace hcoh;
using nlohmann::json;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  int max_m = 4, max_p = 7, max_k = 2;
};

struct Options {
  std::string p, k, m;
  std::vector<std::string> lambdas;
  std::string format = "text";
  std::string suite = "all";
  std::string space;
  std::string pair;
  long long index = -1;
  unsigned seed = 1;
  int jobs = 1;
  bool corrupt = false;
  Limits limits;
};

struct Config {
  int p, k, m;
  std::string lambda;
};

// "3", "2,3,5" or "1..4"; ranges of primes skip composites.
std::vector<int> parse_values(const std::string& text, const char* flag, bool primes) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    try {
      size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + flag + ": cannot parse '" + s + "'");
    }
  };
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
    if (lo > hi) throw UsageError(std::string("--") + flag + ": empty range " + item);
    for (int v = lo; v <= hi; ++v)
      if (!primes || gf::is_prime(v)) out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("--") + flag + ": no values");
  return out;
}

std::vector<Config> expand(const Options& o, int min_m) {
  const auto ps = parse_values(o.p, "p", true), ks = parse_values(o.k, "k", false), ms = parse_values(o.m, "m", false);
  std::vector<Config> out;
  for (int p : ps) {
    if (!gf::is_prime(p)) throw UsageError("--p: " + std::to_string(p) + " is not prime");
    if (p > o.limits.max_p) throw UsageError("--p: " + std::to_string(p) + " exceeds the limit " + std::to_string(o.limits.max_p));
    for (int k : ks) {
      if (k < 1 || k > o.limits.max_k) throw UsageError("--k: " + std::to_string(k) + " outside 1.." + std::to_string(o.limits.max_k));
      for (int m : ms) {
        if (m < min_m || m > o.limits.max_m)
          throw UsageError("--m: " + std::to_string(m) + " outside " + std::to_string(min_m) + ".." + std::to_string(o.limits.max_m));
        for (const auto& l : o.lambdas) out.push_back({p, k, m, l});
      }
    }
  }
  return out;
}

Heisenberg build(const Config& c, bool corrupt) {
  const Field f = Field::make(c.p, c.k);
  Heisenberg h(f, c.m, parse_lambda(f, c.m, c.lambda));
  return corrupt ? h.corrupted() : h;
}

// Runs fn over every config on `jobs` threads; results keep config order.
template <class R>
std::vector<R> run_all(const std::vector<Config>& cs, int jobs, const std::function<R(const Config&)>& fn) {
  std::vector<R> out(cs.size());
  std::vector<std::exception_ptr> errs(cs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < cs.size();) {
      try {
        out[i] = fn(cs[i]);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(cs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

json config_json(const Config& c) { return {{"p", c.p}, {"k", c.k}, {"m", c.m}, {"lambda", c.lambda}}; }

std::string config_text(const Config& c) {
  return "p=" + std::to_string(c.p) + " k=" + std::to_string(c.k) + " m=" + std::to_string(c.m) + " lambda=" + c.lambda;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void csv_row(std::ostream& os, const Config& c, const std::string& space, const std::string& computed,
             const std::string& predicted, bool match) {
  os << c.p << ',' << c.k << ',' << c.m << ',' << csv_field(c.lambda) << ',' << csv_field(space) << ',' << computed
     << ',' << predicted << ',' << (match ? "true" : "false") << '\n';
}

constexpr const char* kCsvHeader = "p,k,m,lambda,space,computed,predicted,match\n";

std::string predicted_text(const Verdict& v) { return v.predicted_dim ? std::to_string(*v.predicted_dim) : "-"; }

// ---- dims ----

int cmd_dims(const Options& o) {
  const auto cs = expand(o, 1);
  const auto rows = run_all<std::vector<Verdict>>(cs, o.jobs, [&](const Config& c) { return verify(build(c, o.corrupt)); });
  bool ok = true;
  for (const auto& r : rows)
    for (const auto& v : r) ok = ok && v.pass;

  if (o.format == "json") {
    json out = json::array();
    for (size_t i = 0; i < cs.size(); ++i) {
      json row = config_json(cs[i]);
      row["spaces"] = json::array();
      for (const auto& v : rows[i]) row["spaces"].push_back(io::verdict_to_json(v));
      out.push_back(row);
    }
    std::cout << out.dump(2) << '\n';
  } else if (o.format == "csv") {
    std::cout << kCsvHeader;
    for (size_t i = 0; i < cs.size(); ++i)
      for (const auto& v : rows[i]) csv_row(std::cout, cs[i], to_string(v.space), std::to_string(v.computed_dim), predicted_text(v), v.pass);
  } else {
    for (size_t i = 0; i < cs.size(); ++i) {
      std::cout << config_text(cs[i]) << ":";
      for (const auto& v : rows[i])
        std::cout << "  " << to_string(v.space) << " " << v.computed_dim << "/" << predicted_text(v) << (v.pass ? "" : " MISMATCH");
      std::cout << '\n';
      for (const auto& v : rows[i])
        if (!v.pass)
          for (const auto& d : v.diagnostics) std::cout << "    " << to_string(v.space) << ": " << d << '\n';
    }
    std::cout << (ok ? "all dimensions match\n" : "mismatches found\n");
  }
  return ok ? 0 : kMismatch;
}

// ---- basis ----

std::vector<Vec> representatives(const Heisenberg& h, Space s) {
  auto rows = [](const Subspace& sp) {
    std::vector<Vec> out;
    for (size_t r = 0; r < sp.dim(); ++r) out.push_back(sp.basis().row_vec(r));
    return out;
  };
  auto reps = [&](const Quotient& q) { return rows(q.representatives()); };
  switch (s) {
    case Space::H1: return reps(h1_space(h).quotient);
    case Space::H2: return reps(h2_space(h).quotient);
    case Space::H1Star: return reps(h1_star_space(h).quotient);
    case Space::H2Star: return reps(RestrictedComplex(h).h2_star().quotient);
    case Space::Hp0: return rows(h_p0_space(h));
  }
  return {};
}

json rep_json(const Heisenberg& h, Space s, const Vec& v) {
  switch (s) {
    case Space::H1:
    case Space::H1Star: return io::cochain_to_json(h, Cochain{1, v});
    case Space::H2: return io::cochain_to_json(h, Cochain{2, v});
    case Space::H2Star: return io::pair_to_json(h, pair_from_coords(h, v));
    case Space::Hp0: {
      // coordinates along ebar^i_n
      CompatiblePair pr{Cochain{2, Vec(CochainSpace(h.dim(), 2).dim(), 0)}, {}};
      for (int i = 1; i <= h.dim(); ++i) {
        AlgebraElement x = h.zero();
        x.coords.back() = v[static_cast<size_t>(i - 1)];
        pr.omega.push_back(x);
      }
      return io::pair_to_json(h, pr)["omega"];
    }
  }
  return nullptr;
}

std::string rep_text(const Heisenberg& h, Space s, const Vec& v) {
  switch (s) {
    case Space::H1:
    case Space::H1Star: return format_cochain(h.field(), CochainSpace(h.dim(), 1), v);
    case Space::H2: return format_cochain(h.field(), CochainSpace(h.dim(), 2), v);
    case Space::H2Star: return format_pair(h, v);
    case Space::Hp0: {
      Vec pair(restricted2_dim(h), 0);
      for (int i = 1; i <= h.dim(); ++i) pair[omega_position(h, i, h.dim())] = v[static_cast<size_t>(i - 1)];
      return format_pair(h, pair);
    }
  }
  return {};
}

int cmd_basis(const Options& o) {
  const Space s = parse_space(o.space);
  const auto cs = expand(o, 0);
  if (cs.size() != 1) throw UsageError("basis takes a single configuration");
  const auto& c = cs.front();
  const Heisenberg h = build(c, o.corrupt);
  if (h.m() == 0 && (s == Space::H2Star || s == Space::Hp0 || s == Space::H1Star))
    throw UsageError("restricted spaces need m >= 1");
  const auto reps = representatives(h, s);
  if (o.format == "json") {
    json out = config_json(c);
    out["space"] = to_string(s);
    out["dim"] = reps.size();
    out["representatives"] = json::array();
    for (const auto& v : reps) out["representatives"].push_back(rep_json(h, s, v));
    std::cout << out.dump(2) << '\n';
  } else if (o.format == "csv") {
    std::cout << "index,representative\n";
    for (size_t i = 0; i < reps.size(); ++i) std::cout << i << ',' << csv_field(rep_text(h, s, reps[i])) << '\n';
  } else {
    std::cout << config_text(c) << " " << to_string(s) << " dim " << reps.size() << '\n';
    for (size_t i = 0; i < reps.size(); ++i) std::cout << "  [" << i << "] " << rep_text(h, s, reps[i]) << '\n';
  }
  return 0;
}

// ---- verify ----

struct SuiteResult {
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, Check>> checks;  // suite, check
};

int cmd_verify(const Options& o) {
  static const std::vector<std::string> suites{"all", "theorems", "complex", "compat", "sixterm"};
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    throw UsageError("--suite must be one of all, theorems, complex, compat, sixterm");
  const auto cs = expand(o, 1);
  auto want = [&](const char* s) { return o.suite == "all" || o.suite == s; };
  const auto results = run_all<SuiteResult>(cs, o.jobs, [&](const Config& c) {
    SuiteResult r;
    const Heisenberg h = build(c, o.corrupt);
    if (want("complex"))
      for (auto& ch : complex_checks(h)) r.checks.emplace_back("complex", std::move(ch));
    std::optional<RestrictedComplex> rc;
    try {
      rc.emplace(h);
    } catch (const Error& e) {
      // a broken complex has no cohomology to compare
      r.checks.emplace_back("complex", Check{"cohomology", false, e.what()});
      return r;
    }
    if (want("theorems")) r.verdicts = verify(*rc);
    if (want("complex") && c.m <= 3)
      for (auto& ch : oracle_checks(rc->ordinary())) r.checks.emplace_back("complex", std::move(ch));
    if (want("compat"))
      for (auto& ch : compat_checks(rc->ordinary(), o.seed)) r.checks.emplace_back("compat", std::move(ch));
    if (want("sixterm") && c.m >= 2)
      for (auto& ch : sixterm_checks(*rc)) r.checks.emplace_back("sixterm", std::move(ch));
    return r;
  });

  size_t passed = 0, failed = 0;
  for (const auto& r : results) {
    for (const auto& v : r.verdicts) (v.pass ? passed : failed)++;
    for (const auto& [suite, ch] : r.checks) (ch.pass ? passed : failed)++;
  }

  if (o.format == "json") {
    json rows = json::array();
    for (size_t i = 0; i < cs.size(); ++i) {
      json row = config_json(cs[i]);
      row["theorems"] = json::array();
      for (const auto& v : results[i].verdicts) row["theorems"].push_back(io::verdict_to_json(v));
      row["checks"] = json::array();
      for (const auto& [suite, ch] : results[i].checks)
        row["checks"].push_back({{"suite", suite}, {"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
      rows.push_back(row);
    }
    std::cout << json{{"configurations", rows}, {"passed", passed}, {"failed", failed}}.dump(2) << '\n';
  } else if (o.format == "csv") {
    std::cout << kCsvHeader;
    for (size_t i = 0; i < cs.size(); ++i) {
      for (const auto& v : results[i].verdicts)
        csv_row(std::cout, cs[i], to_string(v.space), std::to_string(v.computed_dim), predicted_text(v), v.pass);
      for (const auto& [suite, ch] : results[i].checks)
        csv_row(std::cout, cs[i], suite + ":" + ch.name, ch.pass ? "pass" : "fail", "pass", ch.pass);
    }
  } else {
    for (size_t i = 0; i < cs.size(); ++i) {
      const std::string where = config_text(cs[i]);
      for (const auto& v : results[i].verdicts) {
        std::cout << (v.pass ? "PASS " : "FAIL ") << where << " theorems " << to_string(v.space) << " " << v.computed_dim
                  << "/" << predicted_text(v) << (v.covered ? "" : " (not covered by theorem)") << '\n';
        if (!v.pass)
          for (const auto& d : v.diagnostics) std::cout << "     " << d << '\n';
      }
      for (const auto& [suite, ch] : results[i].checks)
        std::cout << (ch.pass ? "PASS " : "FAIL ") << where << " " << suite << " " << ch.name << ": " << ch.detail << '\n';
    }
    std::cout << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : kMismatch;
}

// ---- deform ----

std::string read_pair_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_deform(const Options& o) {
  if ((o.index >= 0) == !o.pair.empty()) throw UsageError("deform needs exactly one of --index or --pair");
  const auto cs = expand(o, 1);
  if (cs.size() != 1) throw UsageError("deform takes a single configuration");
  const auto& c = cs.front();
  const Heisenberg h = build(c, o.corrupt);
  const RestrictedComplex rc(h);

  CompatiblePair pair;
  if (o.index >= 0) {
    const auto& q = rc.h2_star().quotient;
    if (static_cast<size_t>(o.index) >= q.dim())
      throw UsageError("--index " + std::to_string(o.index) + " out of range (H2* has dim " + std::to_string(q.dim()) + ")");
    pair = pair_from_coords(h, q.representative(static_cast<size_t>(o.index)));
  } else {
    json j;
    try {
      j = json::parse(read_pair_text(o.pair));
    } catch (const json::exception& e) {
      throw UsageError(std::string("--pair: ") + e.what());
    }
    pair = io::pair_from_json(h, j);
  }

  const Vec coords = pair_coords(h, pair);
  if (!rc.is_restricted_cocycle(coords)) {
    const auto report = verify_axioms(DualDeformation::unchecked(h, pair), o.seed);
    std::string why = report.witnesses.empty() ? "no axiom witness found" : report.witnesses.front();
    if (o.format == "json")
      std::cout << json{{"error", "pair is not a restricted 2-cocycle"}, {"witness", why}, {"axioms", io::axioms_to_json(report)}}.dump(2)
                << '\n';
    else
      std::cerr << "error: pair is not a restricted 2-cocycle; " << why << '\n';
    return kMismatch;
  }

  const auto d = deform(rc, pair);
  const auto report = verify_axioms(d, o.seed);
  const auto cls = classify(rc, coords);
  const std::string status = std::string(cls.trivial ? "trivial" : "nontrivial") + (cls.ordinary_trivial ? ", ordinary-trivial" : "");

  if (o.format == "json") {
    json out = config_json(c);
    out["pair"] = io::pair_to_json(h, pair);
    out["deformation"] = io::deformation_to_json(d);
    out["axioms"] = io::axioms_to_json(report);
    out["trivial"] = cls.trivial;
    out["ordinary_trivial"] = cls.ordinary_trivial;
    out["status"] = status;
    std::cout << out.dump(2) << '\n';
  } else {
    const json dump = io::deformation_to_json(d);
    std::cout << config_text(c) << '\n' << "pair: " << format_pair(h, coords) << '\n';
    std::cout << "bracket:";
    for (const auto& e : dump["bracket"]) std::cout << ' ' << e.dump();
    std::cout << "\npmap:";
    for (const auto& e : dump["pmap"]) std::cout << ' ' << e.dump();
    std::cout << "\naxioms: bracket " << (report.bracket_ok ? "ok" : "FAIL") << ", ad " << (report.ad_ok ? "ok" : "FAIL")
              << ", semilinear " << (report.semilinear_ok ? "ok" : "FAIL") << ", jacobson "
              << (report.jacobson_checked ? (report.jacobson_ok ? "ok" : "FAIL") : "not checked") << '\n';
    for (const auto& w : report.witnesses) std::cout << "  " << w << '\n';
    std::cout << "class: " << status << '\n';
  }
  return report.ok() ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinary and restricted cohomology of Heisenberg algebras with adjoint coefficients"};
  app.require_subcommand(1);

  Options dims_o;
  dims_o.p = "3";
  dims_o.k = "1";
  dims_o.m = "2";
  dims_o.lambdas = {"zero"};
  Options basis_o = dims_o, deform_o = dims_o, verify_o;
  verify_o.p = "2,3,5";
  verify_o.k = "1,2";
  verify_o.m = "1..3";
  verify_o.lambdas = {"zero", "e1", "central"};

  auto common = [](CLI::App* sub, Options& o) {
    sub->add_option("--p", o.p, "characteristic: value, list or a..b range")->capture_default_str();
    sub->add_option("--k", o.k, "field degree: value, list or range")->capture_default_str();
    sub->add_option("--m", o.m, "Heisenberg rank: value, list or range")->capture_default_str();
    sub->add_option("--lambda", o.lambdas, "zero, e<i>, central or c1,..,cn (repeatable)")->capture_default_str();
    sub->add_option("--format", o.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for random trials")->capture_default_str();
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--max-m", o.limits.max_m, "upper bound on m")->capture_default_str();
    sub->add_option("--max-p", o.limits.max_p, "upper bound on p")->capture_default_str();
    sub->add_option("--max-k", o.limits.max_k, "upper bound on k")->capture_default_str();
    sub->add_flag("--corrupt-canary", o.corrupt, "flip one structure constant (self-test)")->group("");
  };

  auto* dims = app.add_subcommand("dims", "computed and predicted dimensions");
  auto* basis = app.add_subcommand("basis", "coset representatives of a cohomology space");
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  auto* deform_cmd = app.add_subcommand("deform", "first-order restricted deformation of a cocycle");
  common(dims, dims_o);
  common(basis, basis_o);
  common(verify_cmd, verify_o);
  common(deform_cmd, deform_o);

  basis->add_option("--space", basis_o.space, "h1, h2, h1star, h2star or hp0")->required();
  verify_cmd->add_option("--suite", verify_o.suite, "all, theorems, complex, compat or sixterm")->capture_default_str();
  deform_cmd->add_option("--index", deform_o.index, "index into the basis --space h2star list");
  deform_cmd->add_option("--pair", deform_o.pair, "inline JSON pair, or @file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*dims) return cmd_dims(dims_o);
    if (*basis) return cmd_basis(basis_o);
    if (*verify_cmd) return cmd_verify(verify_o);
    if (*deform_cmd) return cmd_deform(deform_o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    // inconsistent linear algebra means the algebra itself is broken
    return e.code() == Errc::not_a_cocycle || e.code() == Errc::not_a_subspace ? kMismatch : kUsage;
  }
  return kUsage;
}
