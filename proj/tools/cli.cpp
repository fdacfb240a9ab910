#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "codebounds/bounds.hpp"
#include "codebounds/code_io.hpp"
#include "codebounds/nets.hpp"
#include "codebounds/pipelines.hpp"
#include "codebounds/search.hpp"

namespace codebounds::cli {

namespace fs = std::filesystem;

namespace {

// Beyond these an enumeration needs an explicit --budget.
constexpr std::uint64_t kDeskWordSpace = 1ULL << 20;
constexpr int kDeskSize = 32;

struct Failure {
  int code;
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure{2, "cannot write " + tmp.string()};
    f << content;
    if (!f.flush()) throw Failure{2, "write failed: " + tmp.string()};
  }
  fs::rename(tmp, path);
}

void emit(const std::string& out_path, const std::string& content, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
  } else {
    write_atomic(out_path, content);
  }
}

std::optional<std::uint64_t> env_budget() {
  const char* v = std::getenv("CODEBOUNDS_BUDGET");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw Failure{2, "CODEBOUNDS_BUDGET must be a positive integer"};
  return n;
}

int cmd_bound(int q, int n, int d, const std::string& method, std::ostream& out) {
  const CodeParams p(q, n, d);
  if (method == "plotkin") {
    const auto v = plotkin_bound(p);
    out << (v ? std::to_string(*v) : "inapplicable") << "\n";
  } else if (method == "recursion") {
    if (n - 1 < d) {
      out << "inapplicable\n";
    } else {
      const auto inner = best_bound(CodeParams(q, n - 1, d));
      out << column_recursion_bound(q, inner.value) << "  (" << q << " x " << inner.value << " from " << inner.method
          << ")\n";
    }
  } else if (method == "divisibility") {
    const auto c = divisibility_bound(p);
    if (!c) {
      out << "inapplicable\n";
    } else {
      out << c->bound << "\n";
      out << "m " << c->m << "\n";
      for (const auto& [r, v] : c->phi) out << "phi(" << r << ") " << v << "\n";
      out << "r " << c->chosen_r << "\n";
      out << "irregular pairs: lower " << c->lower_pairs << ", upper " << c->upper_pairs << " (" << c->upper_form
          << ")\n";
    }
  } else {
    const auto b = best_bound(p);
    out << b.value << "  (" << b.method << ")\n";
  }
  return 0;
}

int cmd_enumerate(int q, int n, int d, int m, const std::string& out_dir, std::optional<std::uint64_t> budget,
                  int threads, long long time_limit, std::ostream& out, std::ostream& err) {
  const CodeParams p(q, n, d);
  if (!budget) budget = env_budget();
  if (!budget) {
    std::uint64_t space = 1;
    bool big = m > kDeskSize;
    for (int i = 0; i < n && !big; ++i) {
      space *= static_cast<std::uint64_t>(q);
      big = space > kDeskWordSpace;
    }
    if (big) {
      err << "refused: (" << n << "," << d << ")_" << q << " with M=" << m
          << " is beyond desk scale; pass --budget N to run anyway\n";
      return 2;
    }
  }
  EnumerationTask task{p, m};
  task.threads = threads;
  if (budget) task.limits.max_nodes = *budget;
  task.limits.max_time = std::chrono::seconds(time_limit);

  EnumerationResult res;
  try {
    res = run_enumeration(task);
  } catch (const BudgetExceeded& e) {
    err << "partial: " << e.partial() << " classes found before: " << e.what() << "\n";
    return 2;
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (std::size_t i = 0; i < res.classes.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "class_%04zu.code", i + 1);
      write_atomic(fs::path(out_dir) / name, emit_code(res.classes[i]));
    }
    ClassList list{q, n, d, m, kGeneratorVersion, res.classes};
    write_atomic(fs::path(out_dir) / "index.txt", emit_class_list(list));
  }
  out << "count " << res.classes.size() << "\n";
  return 0;
}

int cmd_net(const std::string& action, const std::string& in, const std::string& out_path, std::ostream& out) {
  if (action == "check") {
    const SymmetricNet net = parse_net(slurp(in));
    const auto r = verify_net_axioms(net);
    out << "net mu=" << net.mu() << " q=" << net.q() << " points=" << net.size() << "\n";
    out << "block sizes " << (r.block_sizes ? "ok" : "FAIL") << "\n";
    out << "s1 " << (r.s1 ? "ok" : "FAIL") << "\n";
    out << "s2 " << (r.s2 ? "ok" : "FAIL") << "\n";
    out << "s3 " << (r.s3 ? "ok" : "FAIL") << "\n";
    out << "s' " << (r.s_prime ? "ok" : "FAIL") << (r.s_prime_agrees ? "" : " (differs from s2 and s3)") << "\n";
    if (!r.all()) {
      out << "axioms FAIL\n";
      return 2;
    }
    out << "gram " << (gram_check(net) ? "ok" : "FAIL") << "\n";
    out << "axioms ok\n";
    return 0;
  }
  if (action == "to-code") {
    emit(out_path, emit_code(net_to_code(parse_net(slurp(in)))), out);
    return 0;
  }
  if (action == "from-code") {
    emit(out_path, emit_net(code_to_net(parse_code(slurp(in)))), out);
    return 0;
  }
  if (action == "gh-expand") {
    emit(out_path, emit_net(gh_expand(parse_gh(slurp(in)))), out);
    return 0;
  }
  throw Failure{2, "unknown net action '" + action + "' (check, to-code, from-code, gh-expand)"};
}

int cmd_verify(const std::string& id, bool json, const std::string& out_dir, int threads, std::ostream& out) {
  PipelineOptions opt;
  opt.threads = threads;
  if (auto b = env_budget()) opt.limits.max_nodes = *b;
  const Certificate c = run_pipeline(id, opt);
  const std::string js = c.to_json().dump(2) + "\n";
  const std::string txt = c.to_text();
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_atomic(fs::path(out_dir) / (id + ".cert.json"), js);
    write_atomic(fs::path(out_dir) / (id + ".cert.txt"), txt);
  }
  out << (json ? js : txt);
  switch (c.verdict) {
    case Verdict::Verified:
      return 0;
    case Verdict::Refuted:
      return 1;
    case Verdict::Inapplicable:
      return 2;
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds, enumeration and net conversions for q-ary codes", "codebounds"};
  app.require_subcommand(1);

  int q = 0, n = 0, d = 0, m = 0, threads = 0;
  long long time_limit = 600;
  std::string method = "best", out_dir, action, in_path, out_path, theorem;
  std::optional<std::uint64_t> budget;
  bool json = false;

  auto* bound = app.add_subcommand("bound", "upper bound on A_q(n,d)");
  bound->add_option("q", q)->required();
  bound->add_option("n", n)->required();
  bound->add_option("d", d)->required();
  bound->add_option("--method", method)->check(CLI::IsMember({"plotkin", "recursion", "divisibility", "best"}));

  auto* enumerate = app.add_subcommand("enumerate", "all (n,d)_q codes of size M up to equivalence");
  enumerate->add_option("q", q)->required();
  enumerate->add_option("n", n)->required();
  enumerate->add_option("d", d)->required();
  enumerate->add_option("M", m)->required();
  enumerate->add_option("--out", out_dir, "directory for class files and index.txt");
  enumerate->add_option("--budget", budget, "search node budget; also lifts the desk-scale guard");
  enumerate->add_option("--threads", threads, "worker threads (0 = all cores)");
  enumerate->add_option("--time-limit", time_limit, "seconds before the search gives up");

  auto* net = app.add_subcommand("net", "symmetric nets and generalized Hadamard matrices");
  net->add_option("action", action, "check | to-code | from-code | gh-expand")->required();
  net->add_option("input", in_path)->required();
  net->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "re-run a bound proof and emit its certificate");
  verify->add_option("theorem", theorem, "a5_8_6 | a3_16_11 | a4_9_6 | divisibility_family")->required();
  verify->add_flag("--json", json, "print the JSON certificate");
  verify->add_option("--out", out_dir, "directory for <id>.cert.json and <id>.cert.txt");
  verify->add_option("--threads", threads, "worker threads (0 = all cores)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*bound) return cmd_bound(q, n, d, method, out);
    if (*enumerate) return cmd_enumerate(q, n, d, m, out_dir, budget, threads, time_limit, out, err);
    if (*net) return cmd_net(action, in_path, out_path, out);
    if (*verify) {
      const auto& ids = theorem_ids();
      if (std::find(ids.begin(), ids.end(), theorem) == ids.end()) {
        err << "error: unknown theorem id '" << theorem << "'\n";
        return 2;
      }
      return cmd_verify(theorem, json, out_dir, threads, out);
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "parse error (" << to_string(e.kind()) << ") at " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace codebounds::cli
