#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>

#include "codebounds/bounds.hpp"
#include "codebounds/canonical.hpp"
#include "codebounds/nets.hpp"
#include "codebounds/pipelines.hpp"

namespace codebounds {

namespace {

// Builds a certificate step by step. A failed check makes the verdict
// refuted; an exception thrown by the body makes it inapplicable.
class Builder {
 public:
  Builder(std::string id, const PipelineOptions& opt) : start_(std::chrono::steady_clock::now()) {
    cert_.theorem_id = std::move(id);
    cert_.environment["generator"] = kGeneratorVersion;
    cert_.environment["threads"] = opt.threads > 0 ? opt.threads : omp_get_max_threads();
    cert_.environment["max_nodes"] = opt.limits.max_nodes;
    cert_.environment["max_time_s"] = opt.limits.max_time.count();
  }

  void input(std::string name, ordered_json value, std::string provenance) {
    cert_.inputs.push_back({std::move(name), std::move(value), std::move(provenance)});
  }

  bool step(std::string id, std::string desc, std::string op, ordered_json data, bool ok) {
    cert_.steps.push_back({std::move(id), std::move(desc), std::move(op), std::move(data), ok});
    if (!ok) failed_ = true;
    return ok;
  }

  void step(CertStep s) {
    if (!s.ok) failed_ = true;
    cert_.steps.push_back(std::move(s));
  }

  void set_bound(long long v) { cert_.bound = v; }

  template <typename Body>
  Certificate run(Body&& body) {
    try {
      const bool concluded = body(*this);
      if (failed_) {
        cert_.verdict = Verdict::Refuted;
        cert_.bound.reset();
      } else {
        cert_.verdict = concluded ? Verdict::Verified : Verdict::Inapplicable;
        if (!concluded) cert_.bound.reset();
      }
    } catch (const std::exception& e) {
      step("error", "pipeline aborted", "exception", {{"what", e.what()}}, false);
      cert_.verdict = Verdict::Inapplicable;
      cert_.bound.reset();
    }
    if (cert_.bound) cert_.steps.back().data["bound"] = *cert_.bound;
    cert_.environment["elapsed_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return cert_;
  }

 private:
  Certificate cert_;
  bool failed_ = false;
  std::chrono::steady_clock::time_point start_;
};

EnumerationTask task(int q, int n, int d, int m, const PipelineOptions& opt) {
  EnumerationTask t{CodeParams(q, n, d), m};
  t.limits = opt.limits;
  t.threads = opt.threads;
  return t;
}

bool balanced_columns(const Code& c) {
  const auto prof = column_profile(c);
  for (int j = 0; j < c.n(); ++j) {
    for (int a = 0; a < c.q(); ++a) {
      if (static_cast<std::size_t>(prof.count(static_cast<Symbol>(a), j)) * c.q() != c.size()) return false;
    }
  }
  return true;
}

bool equidistant(const Code& c, int d) {
  const auto ds = distance_multiset(c);
  return std::all_of(ds.begin(), ds.end(), [d](int x) { return x == d; });
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// GH(8, V4) with e, a, b, c as 0, 1, 2, 3.
const std::vector<std::vector<int>> kKleinGh = {
    {0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 2, 2, 3, 3}, {0, 2, 0, 2, 3, 1, 3, 1}, {0, 3, 3, 0, 1, 2, 2, 1},
    {0, 1, 2, 3, 0, 1, 2, 3}, {0, 3, 2, 1, 3, 0, 1, 2}, {0, 2, 1, 3, 1, 3, 0, 2}, {0, 1, 3, 2, 2, 3, 1, 0},
};

}  // namespace

Certificate verify_a5_8_6(const PipelineOptions& opt) {
  Builder b("a5_8_6", opt);
  return b.run([&](Builder& b) -> bool {
    const long long published_classes = 7;
    const std::vector<long long> published_h = {10, 8, 7, 7, 8, 10, 6, 3, 1, 0, 0};  // k = 5..15
    b.input("kirkman_class_count", published_classes, "number of nonisomorphic Kirkman triple systems on 15 points");
    b.input("h_table_k5_to_k15", published_h, "published h(k) values for (7,6)_5 codes");
    const CodeParams inner(5, 7, 6);

    // (1) Kirkman classes.
    const auto k15 = run_enumeration(task(5, 7, 6, 15, opt));
    bool forced = equidistance_forced(inner, 15);
    bool structured = true;
    for (const auto& c : k15.classes) structured = structured && equidistant(c, 6) && balanced_columns(c);
    if (!b.step("kirkman_classes", "all (7,6)_5 codes of size 15 up to equivalence", "enumerate_codes(5,7,6,M=15)",
                {{"count", k15.classes.size()},
                 {"nodes", k15.stats.nodes},
                 {"equidistance_forced", forced},
                 {"all_equidistant_balanced", structured}},
                static_cast<long long>(k15.classes.size()) == published_classes && forced && structured)) {
      return false;
    }

    // (2) Size-14 classes: deletion, direct enumeration, and extension back.
    const auto by_deletion = codes_by_deletion(k15.classes);
    const auto direct = run_enumeration(task(5, 7, 6, 14, opt));
    std::set<Code> kirkman(k15.classes.begin(), k15.classes.end());
    bool extends = true;
    for (const auto& c : by_deletion) extends = extends && kirkman.count(canonical_form(extend_deficient(c, 6))) == 1;
    const bool same = by_deletion == direct.classes;
    if (!b.step("size14_classes", "size-14 classes by deletion agree with direct enumeration and extend to size 15",
                "codes_by_deletion + enumerate_codes(5,7,6,M=14) + extend_deficient",
                {{"by_deletion", by_deletion.size()},
                 {"direct", direct.classes.size()},
                 {"identical", same},
                 {"at_most_7x15", by_deletion.size() <= 105},
                 {"all_extend_to_kirkman", extends}},
                same && extends && by_deletion.size() <= 105)) {
      return false;
    }

    // (3) alpha statistics.
    ordered_json rows = ordered_json::array();
    bool alpha_ok = true;
    std::uint64_t max15_a1 = 0, max14_a0 = 0, max14_le1 = 0;
    auto audit = [&](const std::vector<Code>& classes, int size) {
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto st = alpha_stats(classes[i], 6);
        const auto a0 = st.count(0), a1 = st.count(1), a2 = st.count(2);
        bool ok = size == 15 ? (a0 == 0 && a1 <= 21 && a2 == 0) : (a0 <= 8 && a0 + a1 <= 39);
        if (size == 15) {
          max15_a1 = std::max(max15_a1, a1);
        } else {
          max14_a0 = std::max(max14_a0, a0);
          max14_le1 = std::max(max14_le1, a0 + a1);
        }
        alpha_ok = alpha_ok && ok;
        rows.push_back({{"size", size}, {"class", i}, {"S", st.s_size}, {"alpha0", a0}, {"alpha1", a1},
                        {"alpha2", a2}, {"ok", ok}});
      }
    };
    audit(k15.classes, 15);
    audit(by_deletion, 14);
    if (!b.step("alpha_stats",
                "size 15: #{a=0}=0, #{a=1}<=21, #{a=2}=0; size 14: #{a=0}<=8, #{a<=1}<=39",
                "alpha_stats(D, 6) over every class",
                {{"max_alpha1_size15", max15_a1},
                 {"max_alpha0_size14", max14_a0},
                 {"max_alpha_le1_size14", max14_le1},
                 {"classes", rows}},
                alpha_ok)) {
      return false;
    }

    // (4) h(k).
    std::vector<long long> h;
    for (int k = 5; k <= 15; ++k) h.push_back(h_table(inner, k));
    if (!b.step("h_table", "h(k) = max(0, L - R) for (7,6)_5 codes of size k = 5..15", "h_table(5,7,6,k)",
                {{"computed", h}, {"matches_published", h == published_h}}, h == published_h)) {
      return false;
    }

    // (5) The profile inequality.
    CertStep ineq = profile_inequality_step();
    const bool ineq_ok = ineq.ok;
    b.step(std::move(ineq));
    if (!ineq_ok) return false;

    // (6) Only the all-13 profile survives.
    const auto tuples = profile_tuples();
    ordered_json zero = ordered_json::array();
    bool only_balanced = true;
    for (const auto& a : tuples) {
      if (f_eval(a[15], a[14]) != 0) continue;
      zero.push_back(a[13]);
      only_balanced = only_balanced && a[13] == 5;
    }
    only_balanced = only_balanced && zero.size() == 1;
    const long long registry15 = registry_lookup(5, 7, 6).value().value;
    b.input("A_5(7,6)", registry15, registry_lookup(5, 7, 6)->provenance);
    const long long forced_block = ceil_div(66, 5);
    const bool conclude = only_balanced && forced_block == 14 && registry15 == 15 && f_eval(0, 0) == 0;
    b.step("conclusion",
           "in a size-65 code the column with largest f must have f = 0, so every column is 13,13,13,13,13; a size-66 "
           "code has a 14- or 15-block and a size-65 subcode containing it",
           "f_eval over profile_tuples; pigeonhole ceil(66/5)",
           {{"profiles_with_f_zero", zero.size()},
            {"only_all_13", only_balanced},
            {"block_forced_at_66", forced_block},
            {"max_block", registry15}},
           conclude);
    if (!conclude) return false;
    b.set_bound(65);
    return true;
  });
}

Certificate verify_a3_16_11(const PipelineOptions& opt) {
  Builder b("a3_16_11", opt);
  return b.run([&](Builder& b) -> bool {
    const auto entry = registry_lookup(3, 15, 11);
    if (!entry) {
      b.step("registry", "A_3(15,11) is needed", "registry_lookup(3,15,11)", {{"found", false}}, true);
      return false;
    }
    b.input("A_3(15,11)", entry->value, entry->provenance);
    const long long a15 = entry->value;
    b.step("registry", "A_3(15,11) from the known-values registry", "registry_lookup(3,15,11)",
           {{"value", a15}, {"exact", entry->exact}}, a15 == 10);

    const CodeParams inner(3, 15, 11);
    const auto pc = pair_count_bounds(inner, a15);
    if (!b.step("equidistance", "a (15,11)_3 code of size 10 is equidistant (L = R)",
                "pair_count_bounds(3,15,11,10)", {{"L", pc.L}, {"R", pc.R}, {"forced", pc.budget == 0}},
                pc.budget == 0)) {
      return false;
    }

    // Hypothetical (16,11)_3 code of size 30 containing the all-ones word.
    const long long size = 30, n = 16, d = 11, q = 3;
    const long long per_column = size / q;
    const bool exact_per_column = per_column * q == size && per_column == a15;
    const long long total_by_columns = n * per_column;
    // Two words sharing a symbol lie in a common block, where the projected
    // distance is exactly d; otherwise they differ everywhere.
    const std::vector<long long> distances{d, n};
    std::set<long long> ones_other;
    for (long long dist : distances) ones_other.insert(n - dist);
    std::set<long long> residues;
    for (long long t = 0; t <= size - 1; ++t) residues.insert((n + 5 * t) % 5);  // t words with five ones
    const bool per_word_ok = ones_other == std::set<long long>{0, 5};
    const bool contradiction = total_by_columns % 5 == 0 && residues == std::set<long long>{1};
    b.step("counting",
           "ones counted by columns give 16*10 = 160 = 0 mod 5; counted by words 16 + 5t = 1 mod 5",
           "modular arithmetic on a size-30 code containing the all-ones word",
           {{"ones_per_column", per_column},
            {"forced_by_size", exact_per_column},
            {"total_by_columns", total_by_columns},
            {"total_by_columns_mod5", total_by_columns % 5},
            {"ones_in_other_words", std::vector<long long>(ones_other.begin(), ones_other.end())},
            {"all_ones_word", n},
            {"total_by_words_mod5", std::vector<long long>(residues.begin(), residues.end())},
            {"contradiction", contradiction}},
           exact_per_column && per_word_ok && contradiction);
    b.set_bound(size - 1);
    return true;
  });
}

Certificate verify_a4_9_6(const PipelineOptions& opt) {
  Builder b("a4_9_6", opt);
  return b.run([&](Builder& b) -> bool {
    // (1) The 32-word code from GH(8, V4).
    const GeneralizedHadamard gh(FiniteGroup::klein4(), kKleinGh);
    const bool gh_ok = verify_gh(gh);
    if (!gh_ok) {
      b.step("gh_code", "GH(8,V4) expands to a symmetric (2,4)-net", "verify_gh", {{"gh", false}}, false);
      return false;
    }
    const SymmetricNet net = gh_expand(gh);
    const auto axioms = verify_net_axioms(net);
    const bool gram = gram_check(net);
    const Code top = net_to_code(net);
    const int dmin = min_distance(top);
    const bool round_trip = canonical_form(net_to_code(code_to_net(top))) == canonical_form(top);
    if (!b.step("gh_code", "GH(8,V4) -> symmetric (2,4)-net -> (8,6)_4 code of size 32",
                "verify_gh + gh_expand + verify_net_axioms + gram_check + net_to_code",
                {{"gh", gh_ok},
                 {"axioms", axioms.all()},
                 {"gram", gram},
                 {"size", top.size()},
                 {"min_distance", dmin},
                 {"round_trip", round_trip}},
                axioms.all() && gram && top.size() == 32 && dmin == 6 && round_trip)) {
      return false;
    }

    // (2) Uniqueness of the size-32 code.
    const auto entry = registry_lookup(4, 8, 6);
    if (!entry) return false;
    b.input("A_4(8,6)", entry->value, entry->provenance);
    const long long plotkin7 = plotkin_bound(CodeParams(4, 7, 6)).value_or(-1);
    b.step("uniqueness", "the size-32 (8,6)_4 code is unique up to equivalence; A_4(8,6) <= 4 A_4(7,6) = 32",
           "registry_lookup(4,8,6) + plotkin_bound(4,7,6)",
           {{"A_4(8,6)", entry->value}, {"plotkin_A_4(7,6)", plotkin7}, {"recursion", 4 * plotkin7}},
           entry->value == 32 && 4 * plotkin7 == 32);

    // (3) Size-31 classes by deletion; each extends back to the 32-word code.
    const auto d31 = codes_by_deletion({top});
    const Code top_canon = canonical_form(top);
    bool extends = true;
    for (const auto& c : d31) extends = extends && canonical_form(extend_deficient(c, 6)) == top_canon;
    if (!b.step("size31_classes", "size-31 classes by deletion; each extends to the size-32 code",
                "codes_by_deletion + extend_deficient",
                {{"count", d31.size()}, {"at_most_32", d31.size() <= 32}, {"all_extend", extends}},
                d31.size() <= 32 && extends)) {
      return false;
    }

    // (4) Candidate counts.
    ordered_json counts = ordered_json::array();
    std::uint64_t max_count = 0;
    bool published = true, below_block = true, counting = true;
    auto check = [&](const Code& c) {
      const auto k = candidate_count(c, 5);
      max_count = std::max(max_count, k);
      published = published && k <= 25;
      below_block = below_block && k < 31;
      // Words outside a block B project to distinct words at distance >= 5
      // from B's projection, so |C| - |B| <= count.
      counting = counting && k < 120 - c.size();
      counts.push_back({{"size", c.size()}, {"count", k}});
    };
    check(top);
    for (const auto& c : d31) check(c);
    if (!b.step("candidate_counts", "|{u : d(u,w) >= 5 for all w in D}| for D of size 32 and every size-31 class",
                "candidate_count(D, 5)",
                {{"max", max_count},
                 {"all_le_25", published},
                 {"all_lt_31", below_block},
                 {"all_lt_120_minus_block", counting},
                 {"counts", counts}},
                published && below_block && counting)) {
      return false;
    }

    // (5) Conclusion.
    const long long forced = ceil_div(121, 4);
    b.step("conclusion",
           "a size-121 code has a 31- or 32-block, hence a size-120 subcode containing one, which the counts exclude",
           "pigeonhole ceil(121/4)", {{"block_forced_at_121", forced}, {"max_block", entry->value}},
           forced == 31 && entry->value == 32);
    b.set_bound(120);
    return true;
  });
}

namespace {

Certificate cached(const std::string& id, const PipelineOptions& opt) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, int, std::uint64_t, long long>, Certificate> cache;
  const auto key = std::make_tuple(id, opt.threads, opt.limits.max_nodes, opt.limits.max_time.count());
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Certificate c = id == "a5_8_6" ? verify_a5_8_6(opt) : id == "a4_9_6" ? verify_a4_9_6(opt) : verify_a3_16_11(opt);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, c);
  return c;
}

ordered_json divisibility_json(const DivisibilityCertificate& c) {
  ordered_json phi = ordered_json::object();
  for (const auto& [r, v] : c.phi) phi[std::to_string(r)] = v;
  ordered_json l = ordered_json::object();
  for (const auto& [s, v] : c.l_values) l[std::to_string(s)] = v;
  return {{"m", c.m},         {"phi", phi},           {"chosen_r", c.chosen_r}, {"l", l},
          {"lower", c.lower_pairs}, {"upper", c.upper_pairs}, {"bound", c.bound}};
}

}  // namespace

Certificate verify_divisibility_family(const PipelineOptions& opt) {
  Builder b("divisibility_family", opt);
  return b.run([&](Builder& b) -> bool {
    const std::vector<long long> published = {65, 325, 1625, 8125, 120, 480, 60, 240, 29};
    b.input("new_bound_column", published, "published table of new upper bounds");

    const auto c586 = divisibility_bound(CodeParams(5, 8, 6));
    const auto corollary = corollary_q_plus_3(5);
    const bool ok586 = c586 && c586->bound == 70 && c586->chosen_r == 4 && c586->phi.at(4) == -98 &&
                       corollary == 70LL;
    b.step("divisibility_5_8_6", "largest r with phi(r) < 0 gives A_5(8,6) <= mq^2 - r - 1",
           "divisibility_bound(5,8,6) + corollary_q_plus_3(5)",
           {{"certificate", c586 ? divisibility_json(*c586) : ordered_json(nullptr)},
            {"closed_form_q_plus_3", corollary ? ordered_json(*corollary) : ordered_json(nullptr)}},
           ok586);

    const auto c4118 = divisibility_bound(CodeParams(4, 11, 8));
    const bool ok4118 = c4118 && c4118->bound == 60 && c4118->chosen_r == 3 && c4118->phi.at(3) == -16;
    b.step("divisibility_4_11_8", "largest r with phi(r) < 0 gives A_4(11,8) <= mq^2 - r - 1",
           "divisibility_bound(4,11,8)", {{"certificate", c4118 ? divisibility_json(*c4118) : ordered_json(nullptr)}},
           ok4118);
    if (!ok586 || !ok4118) return false;

    std::map<std::string, long long> sub;
    ordered_json verdicts = ordered_json::object();
    bool subs_ok = true;
    for (const std::string id : {"a5_8_6", "a4_9_6", "a3_16_11"}) {
      const Certificate c = cached(id, opt);
      verdicts[id] = {{"verdict", to_string(c.verdict)}, {"bound", c.bound ? ordered_json(*c.bound) : nullptr}};
      b.input(id, c.bound ? ordered_json(*c.bound) : ordered_json(nullptr), "certificate " + id);
      subs_ok = subs_ok && c.verdict == Verdict::Verified && c.bound;
      if (c.bound) sub[id] = *c.bound;
    }
    if (!b.step("pipelines", "bounds certified by the other pipelines", "verify a5_8_6, a4_9_6, a3_16_11", verdicts,
                subs_ok)) {
      return false;
    }

    struct Row {
      int q, n, d;
      long long value;
      std::string method;
    };
    std::vector<Row> rows;
    long long a5 = sub["a5_8_6"];
    rows.push_back({5, 8, 6, a5, "a5_8_6"});
    for (int n = 9; n <= 11; ++n) {
      a5 = column_recursion_bound(5, a5);
      rows.push_back({5, n, 6, a5, "recursion"});
    }
    rows.push_back({4, 9, 6, sub["a4_9_6"], "a4_9_6"});
    rows.push_back({4, 10, 6, column_recursion_bound(4, sub["a4_9_6"]), "recursion"});
    rows.push_back({4, 11, 8, c4118->bound, "divisibility"});
    rows.push_back({4, 12, 8, column_recursion_bound(4, c4118->bound), "recursion"});
    rows.push_back({3, 16, 11, sub["a3_16_11"], "a3_16_11"});

    ordered_json table = ordered_json::array();
    std::vector<long long> column;
    for (const auto& r : rows) {
      column.push_back(r.value);
      table.push_back({{"q", r.q}, {"n", r.n}, {"d", r.d}, {"bound", r.value}, {"method", r.method}});
    }
    const bool match = column == published;
    b.step("table", "composed bounds against the published column", "column_recursion_bound",
           {{"rows", table}, {"matches_published", match}}, match);
    return match;
  });
}

Certificate run_pipeline(const std::string& theorem_id, const PipelineOptions& opt) {
  if (theorem_id == "a5_8_6") return verify_a5_8_6(opt);
  if (theorem_id == "a3_16_11") return verify_a3_16_11(opt);
  if (theorem_id == "a4_9_6") return verify_a4_9_6(opt);
  if (theorem_id == "divisibility_family") return verify_divisibility_family(opt);
  throw PreconditionError("unknown theorem id '" + theorem_id + "'");
}

}  // namespace codebounds
