// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qgkit/bowtie.hpp"
#include "qgkit/cli.hpp"
#include "qgkit/exact_factorization.hpp"
#include "qgkit/io.hpp"
#include "qgkit/stock.hpp"
#include "qgkit/whq.hpp"

#ifndef QGKIT_FIXTURE_DIR
#define QGKIT_FIXTURE_DIR "data/fixtures"
#endif

namespace fs = std::filesystem;
using namespace qgkit;
using Clock = std::chrono::steady_clock;

namespace {

const linalg::RationalField kQ;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Collects the reasons a criterion failed; the first few are printed.
struct Outcome {
  std::vector<std::string> problems;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void require(const StructureReport& r, const std::string& what) {
    if (r.passed()) return;
    for (const auto& c : r.checks()) {
      if (!c.passed()) {
        problems.push_back(what + ": " + r.name() + " " + c.tag + " (" + std::to_string(c.violations.size()) +
                           " violations)");
        return;
      }
    }
  }
};

bool has_witness(const CheckResult& c, const std::vector<std::uint64_t>& w) {
  if (w.empty()) return !c.violations.empty();
  return std::any_of(c.violations.begin(), c.violations.end(), [&](const Violation& v) { return v.witness == w; });
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

// ---- criteria ---------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  std::size_t count = 0;
  for (const auto& [name, q] : stock::builder_instances()) {
    const auto t = Clock::now();
    o.require(check_quasigroupoid(q.data()), name);
    o.require(derived_identity_suite(q), name);
    const double s = seconds_since(t);
    worst = std::max(worst, s);
    o.require(s < 1.0, name + " took " + std::to_string(s) + " s");
    ++count;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu instances, slowest %.3f s", count, worst);
  o.summary = buf;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t = Clock::now();
  std::size_t printed_pass = 0, printed_fail = 0, total = 0;
  bool right_family = false, left_family = false, nonassociative = false;
  for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
    ++total;
    if (name.rfind("discrete-right/", 0) == 0) right_family = true;
    if (name.rfind("action-left/", 0) == 0) left_family = true;
    if (!is_associative(mp.a()) || !is_associative(mp.h())) nonassociative = true;
    o.require(check_matched_pair(mp.data()), name);
    o.require(matched_pair_identity_suite(mp), name);
    auto mixed = mixed_associativity_suite(mp);
    o.require(mixed.report, name);
    (mixed.printed.passed() ? printed_pass : printed_fail) += 1;
    o.require(theta_suite(mp), name);
  }
  const double s = seconds_since(t);
  o.require(total >= 5, "fewer than five matched pairs");
  o.require(right_family && left_family, "a canonical family is missing");
  o.require(nonassociative, "no pair built on a nonassociative quasigroupoid");
  o.require(s < 5.0, "took " + std::to_string(s) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu pairs, %.3f s, printed AHH form holds on %zu and fails on %zu", total, s,
                printed_pass, printed_fail);
  o.summary = buf;
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
    ++total;
    const auto d = double_cross_product(mp);
    o.require(check_quasigroupoid(d.quasigroupoid.data()), name);
    const auto ia = inclusion_a(mp, d);
    const auto ih = inclusion_h(mp, d);
    o.require(check_morphism(ia), name + " i^A");
    o.require(check_morphism(ih), name + " i^H");
    o.require(is_injective(ia), name + " i^A not injective");
    o.require(is_injective(ih), name + " i^H not injective");
  }
  o.summary = std::to_string(total) + " double cross products";
  return o;
}

// Arrow sets of the images of both inclusions, per candidate.
std::vector<std::pair<std::vector<Arrow>, std::vector<Arrow>>> images(const std::vector<FactorizationCandidate>& cs) {
  std::vector<std::pair<std::vector<Arrow>, std::vector<Arrow>>> out;
  for (const auto& c : cs) {
    auto a = c.ia.arrow_map;
    auto h = c.ih.arrow_map;
    std::sort(a.begin(), a.end());
    std::sort(h.begin(), h.end());
    out.emplace_back(a, h);
  }
  return out;
}

Outcome criterion4() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
    ++total;
    const auto c = canonical_factorization(mp);
    o.require(check_exact_factorization(c).report, name);
    const auto rec = reconstruct_matched_pair(c);
    o.require(rec.mp.data().left == mp.data().left, name + " φ_A differs after reconstruction");
    o.require(rec.mp.data().right == mp.data().right, name + " φ_H differs after reconstruction");
    o.require(check_morphism(rec.gamma), name + " γ");
    o.require(is_isomorphism(rec.gamma), name + " γ is not an isomorphism");
  }
  // discrete{0,1}: only [B, B]. coarse{0,1}: [D, B] and [B, D] with D the identities.
  using Sets = std::vector<std::pair<std::vector<Arrow>, std::vector<Arrow>>>;
  const Sets discrete_expected{{{0, 1}, {0, 1}}};
  const Sets coarse_expected{{{0, 3}, {0, 1, 2, 3}}, {{0, 1, 2, 3}, {0, 3}}};
  auto sorted = [](Sets s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  o.require(sorted(images(enumerate_factorizations(discrete_groupoid(2), 16))) == discrete_expected,
            "discrete{0,1} factorizations");
  o.require(sorted(images(enumerate_factorizations(coarse_groupoid(2), 16))) == sorted(coarse_expected),
            "coarse{0,1} factorizations");
  o.summary = std::to_string(total) + " round trips, enumeration on discrete{0,1} and coarse{0,1}";
  return o;
}

// Every quasigroupoid used by criteria 1..4 with at most 50 arrows.
std::vector<stock::NamedQuasigroupoid> whq_instances() {
  std::vector<stock::NamedQuasigroupoid> out;
  for (auto& b : stock::builder_instances()) {
    if (b.q.arrows() <= 50) out.push_back(b);
  }
  for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
    for (auto q : {mp.a(), mp.h(), double_cross_product(mp).quasigroupoid}) {
      if (q.arrows() <= 50) out.push_back({name, q});
    }
  }
  return out;
}

Outcome criterion5() {
  Outcome o;
  const auto t = Clock::now();
  std::size_t total = 0;
  std::uint32_t largest = 0;
  for (const auto& [name, b] : whq_instances()) {
    ++total;
    largest = std::max(largest, b.arrows());
    const auto d = magma_of_quasigroupoid(b, kQ);
    const auto w = check_whq(d);
    o.require(w.report, name);
    o.require(derived_property_suite(d), name);
    for (Arrow a = 0; a < b.arrows(); ++a) {
      const auto target = linalg::basis_vector<mpq_class>(b.identity(b.target(a)), 1);
      const auto source = linalg::basis_vector<mpq_class>(b.identity(b.source(a)), 1);
      o.require(w.projections.pi_l.cols[a] == target, name + " Π^L(" + std::to_string(a) + ")");
      o.require(w.projections.pi_r.cols[a] == source, name + " Π^R(" + std::to_string(a) + ")");
    }
  }
  const double s = seconds_since(t);
  o.require(s < 10.0, "took " + std::to_string(s) + " s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu magmas, largest %u arrows, %.3f s", total, largest, s);
  o.summary = buf;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t total = 0;
  std::uint64_t largest = 0;
  for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
    ++total;
    const auto v = verify_canonical_iso(mp, kQ);
    largest = std::max(largest, v.f.dom);
    o.require(v.bijective, name + " f is not bijective");
    o.require(v.morphism, name);
    o.require(v.transport, name);
    o.require(!v.transport.checks().empty(), name + " transport compared nothing");
  }
  o.summary = std::to_string(total) + " pairs, largest dimension " + std::to_string(largest);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto [name, mp] = stock::quasigroup_case_pair();
  o.require(mp.a().objects() == 1 && mp.h().objects() == 1, "pair is not one-object");
  const auto dcp = magma_of_quasigroupoid(double_cross_product(mp).quasigroupoid, kQ);
  const auto bm = bowtie_whq(mp, kQ);
  o.require(check_whq(dcp).report, "K[A⋈H]");
  o.require(check_whq(bm.whq).report, "K[A]⋈K[H]");
  o.require(is_hopf_quasigroup(dcp), "K[A⋈H] is not a Hopf quasigroup");
  o.require(is_hopf_quasigroup(bm.whq), "K[A]⋈K[H] is not a Hopf quasigroup");
  o.require(is_hopf_quasigroup(magma_of_quasigroupoid(mp.a(), kQ)), "K[A] is not a Hopf quasigroup");
  o.require(is_hopf_quasigroup(magma_of_quasigroupoid(mp.h(), kQ)), "K[H] is not a Hopf quasigroup");
  const auto v = verify_canonical_iso(mp, kQ);
  o.require(v.bijective, "f is not bijective");
  o.require(v.morphism, "f");
  o.require(v.transport, "f");
  o.summary = name + ", dimension " + std::to_string(bm.whq.n);
  return o;
}

// For K[Q] with group-like basis, antipode values s(u) in Q and unit e, the
// antipode identities reduce to element arithmetic. Returns the witnesses
// each tag must report.
std::map<std::string, std::set<std::vector<std::uint64_t>>> d4_oracle(const FiniteQuasigroup& q,
                                                                        const std::vector<Element>& s) {
  std::map<std::string, std::set<std::vector<std::uint64_t>>> bad;
  const Element e = q.identity();
  auto m = [&](Element a, Element b) { return q.mul(a, b); };
  for (Element h = 0; h < q.order(); ++h) {
    if (m(h, s[h]) != e) bad["d4-1"].insert({h});
    if (m(s[h], h) != e) bad["d4-2"].insert({h});
    if (m(s[h], m(h, s[h])) != s[h] || m(m(s[h], h), s[h]) != s[h]) bad["d4-3"].insert({h});
    for (Element g = 0; g < q.order(); ++g) {
      if (m(s[h], m(h, g)) != m(m(s[h], h), g)) bad["d4-4"].insert({h, g});
      if (m(h, m(s[h], g)) != m(m(h, s[h]), g)) bad["d4-5"].insert({h, g});
      if (m(m(h, g), s[g]) != m(h, m(g, s[g]))) bad["d4-6"].insert({h, g});
      if (m(m(h, s[g]), g) != m(h, m(s[g], g))) bad["d4-7"].insert({h, g});
    }
  }
  return bad;
}

Outcome criterion8() {
  Outcome o;
  const fs::path dir = fs::path(QGKIT_FIXTURE_DIR) / "corrupted";
  std::set<std::string> covered;
  std::set<std::string> fixtures;

  auto judge = [&](const std::string& family, const std::string& name, const std::string& tag,
                   const std::vector<std::uint64_t>& witness, const StructureReport& r) {
    const auto* c = r.find(tag);
    if (c == nullptr || c->passed()) {
      o.problems.push_back(name + " not rejected under " + tag);
    } else if (!has_witness(*c, witness)) {
      o.problems.push_back(name + " rejected under " + tag + " without the expected witness");
    } else {
      covered.insert(family + ":" + tag);
    }
  };
  // The committed file must be the document of the in-memory fixture.
  auto on_disk = [&](const std::string& file, const std::string& text) {
    const fs::path p = dir / file;
    if (!fs::exists(p)) {
      o.problems.push_back("missing fixture " + p.string());
    } else if (slurp(p) != text) {
      o.problems.push_back("stale fixture " + p.string());
    } else {
      fixtures.insert(file);
    }
  };
  auto slug = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (std::isalnum(static_cast<unsigned char>(c))) {
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      } else if (!out.empty() && out.back() != '-') {
        out += '-';
      }
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out + ".json";
  };

  for (const auto& m : stock::quasigroupoid_mutants()) {
    on_disk(slug(m.tag + " " + m.name), io::emit(m.data));
    const auto doc = io::read_file((dir / slug(m.tag + " " + m.name)).string());
    judge("qgpd", m.name, m.tag, m.witness, check_quasigroupoid(std::get<QuasigroupoidData>(doc)));
  }
  for (const auto& m : stock::matched_pair_mutants()) {
    on_disk(slug(m.tag + " " + m.name), io::emit(io::to_doc(m.data)));
    const auto doc = io::read_file((dir / slug(m.tag + " " + m.name)).string());
    const auto data = io::to_matched_pair_data(std::get<io::MatchedPairDoc>(doc));
    StructureReport r;
    try {
      r = check_matched_pair(data);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ActionInvalid && e.report()) r = *e.report();
    }
    judge("action", m.name, m.tag, m.witness, r);
  }
  for (const auto& m : stock::whq_mutants()) {
    const std::string file = slug(m.tag.substr(0, 2) + " " + m.name);
    on_disk(file, io::emit(io::to_doc(m.data)));
    const auto doc = io::read_file((dir / file).string());
    const auto d = io::to_magma(std::get<io::WhqDoc>(doc), kQ);
    const auto r = check_whq(d).report;
    if (m.tag.rfind("d4", 0) == 0) {
      // Witnesses come from element arithmetic on M(S3,2) with the moved antipode.
      const auto q = stock::ms3();
      std::vector<Element> s(q.order());
      for (Element u = 0; u < q.order(); ++u) {
        const auto& col = d.antipode.cols[u];
        s[u] = col.entries.size() == 1 ? static_cast<Element>(col.entries[0].first) : kUndefined;
      }
      if (std::find(s.begin(), s.end(), kUndefined) != s.end()) {
        o.problems.push_back(m.name + " antipode does not permute the basis");
        continue;
      }
      const auto expected = d4_oracle(q, s)[m.tag];
      const auto* c = r.find(m.tag);
      std::set<std::vector<std::uint64_t>> got;
      if (c) {
        for (const auto& v : c->violations) got.insert(v.witness);
      }
      if (expected.empty() || got != expected) {
        o.problems.push_back(m.name + " " + m.tag + " witnesses disagree with element arithmetic");
      } else {
        covered.insert("whq:" + m.tag);
      }
    } else {
      judge("whq", m.name, m.tag, m.witness, r);
    }
  }
  for (const auto& m : stock::whq_morphism_mutants()) {
    judge("morphism", m.name, m.tag, m.witness, check_whq_morphism(m.data.f, m.data.source, m.data.target));
  }

  std::vector<std::string> required;
  for (const char* t : {"a1", "a2-1", "a2-2", "a2-3"}) required.push_back(std::string("qgpd:") + t);
  for (const char* t : {"c1", "c2", "c3", "d1", "d2", "d3", "e1", "e2", "e3"}) required.push_back(std::string("action:") + t);
  for (const char* t : {"d1", "d2", "d3", "d4-1", "d4-2", "d4-3", "d4-4", "d4-5", "d4-6", "d4-7"}) {
    required.push_back(std::string("whq:") + t);
  }
  for (const char* t : {"mkl1", "mkl2", "mkl3", "mkl4"}) required.push_back(std::string("morphism:") + t);
  std::size_t hit = 0;
  for (const auto& r : required) {
    if (covered.count(r)) {
      ++hit;
    } else {
      o.problems.push_back("tag without a rejecting fixture: " + r);
    }
  }
  o.summary = std::to_string(hit) + "/" + std::to_string(required.size()) + " tags, " + std::to_string(fixtures.size()) +
              " committed fixtures match";
  return o;
}

std::string run_suite(const std::vector<fs::path>& files, const std::string& format) {
  std::ostringstream out, err;
  for (const auto& f : files) {
    out << "== " << f.filename().string() << "\n";
    const int code = cli::run({"suite", f.string(), "--format=" + format}, out, err);
    out << "exit " << code << "\n";
  }
  return out.str() + err.str();
}

Outcome criterion9() {
  Outcome o;
  std::vector<fs::path> files;
  for (const char* sub : {"valid", "corrupted"}) {
    for (const auto& e : fs::directory_iterator(fs::path(QGKIT_FIXTURE_DIR) / sub)) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  o.require(!files.empty(), "no fixtures found");
  std::size_t bytes = 0;
  for (const char* format : {"human", "machine"}) {
    const auto first = run_suite(files, format);
    const auto second = run_suite(files, format);
    o.require(first == second, std::string(format) + " reports differ between runs");
    bytes += first.size();
  }
  o.summary = std::to_string(files.size()) + " documents, " + std::to_string(bytes) + " bytes of reports per run";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"quasigroupoid axiom soundness", criterion1},
      {"matched-pair suite", criterion2},
      {"double cross product validity", criterion3},
      {"exact factorization round trip", criterion4},
      {"weak Hopf quasigroup axioms", criterion5},
      {"canonical isomorphism oracle equivalence", criterion6},
      {"quasigroup case", criterion7},
      {"negative-path coverage", criterion8},
      {"determinism", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.problems.push_back(std::string("threw ") + e.what());
    }
    const bool ok = o.problems.empty();
    if (!ok) ++failed;
    std::printf("%s %zu %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.summary.c_str(), seconds_since(t));
    for (std::size_t k = 0; k < o.problems.size() && k < 5; ++k) std::printf("    %s\n", o.problems[k].c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
