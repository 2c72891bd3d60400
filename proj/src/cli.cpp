#include "qgkit/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgkit/bowtie.hpp"
#include "qgkit/error.hpp"
#include "qgkit/exact_factorization.hpp"
#include "qgkit/io.hpp"
#include "qgkit/matched_pair.hpp"
#include "qgkit/whq.hpp"

namespace qgkit::cli {

namespace {

using linalg::PrimeField;
using linalg::RationalField;

struct Options {
  std::string format = "human";
  std::string only;
  std::string field = "Q";
  std::string output;
  std::uint32_t max_arrows = 16;
};

// Reports collected by a command. Recorded reports are shown but do not
// count towards the exit status.
class Sink {
 public:
  explicit Sink(const Options& o) : opt_(o) {}

  void add(const StructureReport& r) { entries_.push_back({r, true}); }
  void record(const StructureReport& r) { entries_.push_back({r, false}); }
  void note(std::string line) { notes_.push_back(std::move(line)); }

  std::uint64_t violations() const {
    std::uint64_t n = 0;
    for (const auto& [r, counted] : entries_) {
      if (!counted) continue;
      for (const auto& c : r.checks()) {
        if (selected(c)) n += c.violations.size();
      }
    }
    return n;
  }

  bool any_selected() const {
    for (const auto& [r, counted] : entries_) {
      for (const auto& c : r.checks()) {
        if (selected(c)) return true;
      }
    }
    return false;
  }

  std::string render() const { return opt_.format == "machine" ? machine() : human(); }

 private:
  bool selected(const CheckResult& c) const { return opt_.only.empty() || c.tag == opt_.only; }

  static std::string witness_text(const Violation& v) {
    std::string s;
    for (std::size_t i = 0; i < v.witness.size(); ++i) s += (i ? "," : "") + std::to_string(v.witness[i]);
    return s.empty() ? "-" : s;
  }

  static std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

  std::string human() const {
    std::ostringstream os;
    for (const auto& n : notes_) os << n << "\n";
    for (const auto& [r, counted] : entries_) {
      bool header = false;
      for (const auto& c : r.checks()) {
        if (!selected(c)) continue;
        if (!header) {
          os << "# " << r.name() << (counted ? "" : " (recorded, not counted)") << "\n";
          header = true;
        }
        if (!counted) {
          os << "INFO axiom=" << c.tag << " outcome=" << (c.passed() ? "PASS" : "FAIL") << " checked=" << c.evaluated;
          if (!c.passed()) os << " witness=" << witness_text(c.violations.front()) << " violations=" << c.violations.size();
          os << "\n";
        } else if (c.passed()) {
          os << "PASS axiom=" << c.tag << " checked=" << c.evaluated << "\n";
        } else {
          const auto& v = c.violations.front();
          os << "FAIL axiom=" << c.tag << " witness=" << witness_text(v) << " violations=" << c.violations.size()
             << " checked=" << c.evaluated;
          if (!v.detail.empty()) os << " detail=" << quoted(v.detail);
          os << "\n";
        }
      }
    }
    const auto n = violations();
    os << (n == 0 ? "PASS " : "FAIL ") << n << " violations\n";
    return os.str();
  }

  std::string machine() const {
    using nlohmann::json;
    json reports = json::array();
    for (const auto& [r, counted] : entries_) {
      json checks = json::array();
      for (const auto& c : r.checks()) {
        if (!selected(c)) continue;
        json vs = json::array();
        for (const auto& v : c.violations) vs.push_back({{"witness", v.witness}, {"detail", v.detail}});
        checks.push_back({{"axiom", c.tag}, {"checked", c.evaluated}, {"violations", vs}});
      }
      if (checks.empty()) continue;
      reports.push_back({{"name", r.name()}, {"counted", counted}, {"checks", checks}});
    }
    const auto n = violations();
    json doc = {{"notes", notes_}, {"reports", reports}, {"violations", n}, {"status", n == 0 ? "PASS" : "FAIL"}};
    return doc.dump(2) + "\n";
  }

  const Options& opt_;
  std::vector<std::pair<StructureReport, bool>> entries_;
  std::vector<std::string> notes_;
};

// A validation failure that produced a report: shown, exit 1.
struct Rejected {
  StructureReport report;
};

template <class Fn>
auto or_rejected(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.report()) throw Rejected{*e.report()};
    throw;
  }
}

StructureReport single(const std::string& name, const std::string& tag, bool ok, const std::string& detail = {}) {
  StructureReport r(name);
  r.check(tag).expect(ok, {}, detail);
  return r;
}

std::string join(const std::vector<Arrow>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---- per-kind suites ------------------------------------------------------

template <class F>
void whq_suite(Sink& sink, const MagmaCoalgebra<F>& d, bool full) {
  auto w = or_rejected([&] { return check_whq(d); });
  sink.add(w.report);
  if (!full || !w.report.passed()) return;
  sink.add(derived_property_suite(d));
  sink.record(hopf_report(d));
}

template <class F>
void quasigroupoid_suite(Sink& sink, const Quasigroupoid& q, const F& field) {
  sink.add(check_quasigroupoid(q.data()));
  sink.add(derived_identity_suite(q));
  whq_suite(sink, magma_of_quasigroupoid(q, field), true);
}

void factorization_suite(Sink& sink, const FactorizationCandidate& c, bool full) {
  auto fc = or_rejected([&] { return check_exact_factorization(c); });
  sink.add(fc.report);
  sink.record(fc.printed);
  if (!full || !fc.report.passed()) return;
  auto rec = reconstruct_matched_pair(c);
  StructureReport r("reconstruction");
  r.check("dcp-valid").expect(check_quasigroupoid(rec.dcp.quasigroupoid.data()).passed(), {});
  r.check("isomorphism").expect(check_morphism(rec.gamma).passed() && is_isomorphism(rec.gamma), {});
  sink.add(r);
}

template <class F>
void matched_pair_suite(Sink& sink, const MatchedPair& mp, const F& field) {
  sink.add(check_matched_pair(mp.data()));
  sink.add(matched_pair_identity_suite(mp));
  auto mixed = mixed_associativity_suite(mp);
  sink.add(mixed.report);
  sink.record(mixed.printed);
  sink.add(theta_suite(mp));

  const auto dcp = double_cross_product(mp);
  auto dr = check_quasigroupoid(dcp.quasigroupoid.data());
  dr.set_name("double-cross-product");
  sink.add(dr);
  for (const auto& [name, inc] : {std::pair{"inclusion-A", inclusion_a(mp, dcp)}, std::pair{"inclusion-H", inclusion_h(mp, dcp)}}) {
    auto r = check_morphism(inc);
    r.set_name(name);
    r.check("injective").expect(is_injective(inc), {});
    sink.add(r);
  }

  const auto canon = canonical_factorization(mp);
  factorization_suite(sink, canon, false);
  {
    auto rec = reconstruct_matched_pair(canon);
    StructureReport r("reconstruction");
    r.check("left-action-equal").expect(rec.mp.data().left == mp.data().left, {});
    r.check("right-action-equal").expect(rec.mp.data().right == mp.data().right, {});
    r.check("isomorphism").expect(check_morphism(rec.gamma).passed() && is_isomorphism(rec.gamma), {});
    sink.add(r);
  }

  sink.add(module_law_report(mp, field));
  const auto bm = bowtie_whq(mp, field);
  auto bw = check_whq(bm.whq).report;
  bw.set_name("bowtie-whq");
  sink.add(bw);
  if (bw.passed()) sink.add(bowtie_projection_report(bm));
  auto iso = verify_canonical_iso(mp, field);
  sink.add(iso.morphism);
  sink.add(iso.transport);
}

// ---- commands ---------------------------------------------------------------

template <class F>
int dispatch(const std::string& command, const std::string& what, const std::string& file, const Options& opt,
             const F& field, std::ostream& out) {
  Sink sink(opt);
  const io::Document doc = io::read_file(file);
  const std::string kind = io::kind_name(doc);
  auto need = [&](const char* k) {
    if (kind != k) throw Error(ErrorCode::SchemaError, command + " expects a " + k + " document, got " + kind);
  };
  auto emit = [&](const io::Document& d) {
    const std::string text = io::emit(d);
    if (opt.output.empty()) {
      out << text;
    } else {
      std::ofstream f(opt.output, std::ios::binary);
      if (!f) throw Error(ErrorCode::SchemaError, "cannot write " + opt.output);
      f << text;
    }
    return kPass;
  };

  if (command == "build") {
    if (what == "magma") {
      need("quasigroupoid");
      const auto q = or_rejected([&] { return Quasigroupoid::create(std::get<QuasigroupoidData>(doc)); });
      return emit(io::to_doc(magma_of_quasigroupoid(q, field)));
    }
    need("matched-pair");
    const auto mp = or_rejected([&] {
      return MatchedPair::create(io::to_matched_pair_data(std::get<io::MatchedPairDoc>(doc)));
    });
    if (what == "dcp") return emit(io::to_doc(double_cross_product(mp).quasigroupoid));
    return emit(io::to_doc(bowtie_whq(mp, field).whq));
  }

  try {
    if (command == "validate" || command == "suite") {
      const bool full = command == "suite";
      if (auto* d = std::get_if<io::QuasigroupDoc>(&doc)) {
        auto qc = check_quasigroup(d->order, d->table, d->identity);
        sink.add(qc.report);
        if (qc.report.passed()) {
          const auto q = io::to_quasigroup(*d);
          sink.add(derived_inverse_identities(q));
          if (full) sink.record(single("associativity", "associative", is_associative(q)));
        }
      } else if (auto* d = std::get_if<QuasigroupoidData>(&doc)) {
        auto r = check_quasigroupoid(*d);
        if (!full || !r.passed()) {
          sink.add(r);
        } else {
          quasigroupoid_suite(sink, Quasigroupoid::create(*d), field);
        }
      } else if (auto* d = std::get_if<io::ActionDoc>(&doc)) {
        const auto q = or_rejected([&] { return io::to_quasigroup(d->quasigroup); });
        auto r = check_action_on_set(q, d->points, d->psi);
        sink.add(r);
        if (full && r.passed()) quasigroupoid_suite(sink, from_quasigroup_action(q, d->points, d->psi), field);
      } else if (auto* d = std::get_if<io::MatchedPairDoc>(&doc)) {
        const auto data = or_rejected([&] { return io::to_matched_pair_data(*d); });
        auto r = or_rejected([&] { return check_matched_pair(data); });
        if (!full || !r.passed()) {
          sink.add(r);
        } else {
          matched_pair_suite(sink, MatchedPair::create(data), field);
        }
      } else if (auto* d = std::get_if<io::FactorizationDoc>(&doc)) {
        factorization_suite(sink, or_rejected([&] { return io::to_candidate(*d); }), full);
      } else {
        whq_suite(sink, io::to_magma(std::get<io::WhqDoc>(doc), field), full);
      }
    } else if (command == "check-whq") {
      need("whq");
      whq_suite(sink, io::to_magma(std::get<io::WhqDoc>(doc), field), true);
    } else if (command == "factorize") {
      need("quasigroupoid");
      const auto q = or_rejected([&] { return Quasigroupoid::create(std::get<QuasigroupoidData>(doc)); });
      const auto found = enumerate_factorizations(q, opt.max_arrows);
      sink.note("factorizations " + std::to_string(found.size()));
      for (std::size_t i = 0; i < found.size(); ++i) {
        sink.note("factorization " + std::to_string(i) + " A=" + join(found[i].ia.arrow_map) +
                  " H=" + join(found[i].ih.arrow_map));
        auto fc = check_exact_factorization(found[i]);
        fc.report.set_name("factorization-" + std::to_string(i));
        sink.add(fc.report);
      }
    } else if (command == "check-iso") {
      need("matched-pair");
      const auto mp = or_rejected([&] {
        return MatchedPair::create(io::to_matched_pair_data(std::get<io::MatchedPairDoc>(doc)));
      });
      sink.add(module_law_report(mp, field));
      const auto bm = bowtie_whq(mp, field);
      auto bw = check_whq(bm.whq).report;
      bw.set_name("bowtie-whq");
      sink.add(bw);
      auto iso = verify_canonical_iso(mp, field);
      sink.note("dimension " + std::to_string(bm.whq.n) + " bijective " + (iso.bijective ? "yes" : "no"));
      sink.add(iso.morphism);
      sink.add(iso.transport);
      if (hopf_report(bm.whq).passed() && hopf_report(magma_of_quasigroupoid(double_cross_product(mp).quasigroupoid, field)).passed()) {
        sink.note("both sides are Hopf quasigroups");
      }
    }
  } catch (const Rejected& r) {
    sink.add(r.report);
  }

  if (!opt.only.empty() && !sink.any_selected()) {
    throw Error(ErrorCode::SchemaError, "no check named " + opt.only);
  }
  out << sink.render();
  return sink.violations() == 0 ? kPass : kViolations;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Quasigroupoids, matched pairs and weak Hopf quasigroups", "qgkit");
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--only", opt.only, "Report only the check with this axiom tag");
  app.add_option("--field", opt.field, "Coefficient field: Q or GF<p>");

  std::string file, what;
  auto* validate = app.add_subcommand("validate", "Run the axiom checker matching the document kind");
  auto* build = app.add_subcommand("build", "Construct dcp | magma | bowtie and emit it as a document");
  auto* check_whq_cmd = app.add_subcommand("check-whq", "Check a weak Hopf quasigroup document");
  auto* factorize = app.add_subcommand("factorize", "List the exact factorizations of a quasigroupoid");
  auto* check_iso = app.add_subcommand("check-iso", "Verify the canonical isomorphism for a matched pair");
  auto* suite = app.add_subcommand("suite", "Run every applicable suite");
  build->add_option("what", what, "dcp, magma or bowtie")->required()->check(CLI::IsMember({"dcp", "magma", "bowtie"}));
  build->add_option("-o,--output", opt.output, "Write the document here instead of stdout");
  factorize->add_option("--max-arrows", opt.max_arrows, "Refuse inputs with more arrows than this");
  for (auto* sub : {validate, build, check_whq_cmd, factorize, check_iso, suite}) {
    sub->add_option("file", file, "Input document")->required();
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    if (opt.field == "Q") return dispatch(command, what, file, opt, RationalField{}, out);
    if (opt.field.rfind("GF", 0) == 0) {
      const std::string digits = opt.field.substr(2);
      if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::SchemaError, "bad field " + opt.field);
      }
      const auto p = std::stoull(digits);
      if (p >= (1ull << 31) || !linalg::is_prime(static_cast<std::uint32_t>(p))) {
        throw Error(ErrorCode::SchemaError, "GF needs a prime below 2^31, got " + digits);
      }
      return dispatch(command, what, file, opt, PrimeField{static_cast<std::uint32_t>(p)}, out);
    }
    throw Error(ErrorCode::SchemaError, "unknown field " + opt.field);
  } catch (const Rejected& r) {
    Sink sink(opt);
    sink.add(r.report);
    out << sink.render();
    return kViolations;
  } catch (const Error& e) {
    if (e.report()) {
      Sink sink(opt);
      sink.add(*e.report());
      out << sink.render();
      return kViolations;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace qgkit::cli
