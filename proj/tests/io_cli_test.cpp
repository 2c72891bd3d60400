#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qgkit/cli.hpp"
#include "qgkit/error.hpp"
#include "qgkit/io.hpp"
#include "qgkit/stock.hpp"

namespace fs = std::filesystem;
using namespace qgkit;

namespace {

const fs::path kFixtures = QGKIT_FIXTURE_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<fs::path> files_in(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qgkit-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string expect_error(const std::string& text, ErrorCode code) {
  try {
    io::parse(text);
  } catch (const Error& e) {
    CHECK(e.code() == code);
    return e.what();
  }
  FAIL("document accepted");
  return {};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("committed documents are canonical") {
    for (const char* sub : {"valid", "corrupted"}) {
      for (const auto& p : files_in(kFixtures / sub)) {
        CAPTURE(p.string());
        const std::string text = slurp(p);
        CHECK(io::emit(io::parse(text)) == text);
      }
    }
  }

  TEST_CASE("quasigroupoids round trip through documents") {
    for (const auto& [name, q] : stock::builder_instances()) {
      CAPTURE(name);
      const auto doc = io::parse(io::emit(io::to_doc(q)));
      CHECK(Quasigroupoid::create(std::get<QuasigroupoidData>(doc)) == q);
    }
  }

  TEST_CASE("matched pairs, factorizations and magmas round trip") {
    const linalg::RationalField k;
    for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
      CAPTURE(name);
      const auto doc = std::get<io::MatchedPairDoc>(io::parse(io::emit(io::to_doc(mp.data()))));
      const auto back = io::to_matched_pair_data(doc);
      CHECK(back.left == mp.data().left);
      CHECK(back.right == mp.data().right);
      if (mp.a().arrows() * mp.h().arrows() > 16) continue;
      const auto c = canonical_factorization(mp);
      const auto fd = std::get<io::FactorizationDoc>(io::parse(io::emit(io::to_doc(c))));
      const auto c2 = io::to_candidate(fd);
      CHECK(c2.ia.arrow_map == c.ia.arrow_map);
      CHECK(c2.ih.arrow_map == c.ih.arrow_map);
    }
    const auto m = magma_of_quasigroupoid(coarse_groupoid(2), k);
    const auto back = io::to_magma(std::get<io::WhqDoc>(io::parse(io::emit(io::to_doc(m)))), k);
    CHECK(back.unit == m.unit);
    CHECK(linalg::map_equal(back.product, m.product));
    CHECK(linalg::map_equal(back.coproduct, m.coproduct));
    CHECK(linalg::map_equal(back.antipode, m.antipode));
    const auto q = stock::ms3();
    CHECK(io::to_quasigroup(std::get<io::QuasigroupDoc>(io::parse(io::emit(io::to_doc(q))))) == q);
  }

  TEST_CASE("discrete two-point document") {
    const auto doc = io::read_file((kFixtures / "valid" / "quasigroupoid-discrete-2.json").string());
    CHECK(io::kind_name(doc) == "quasigroupoid");
    const auto& d = std::get<QuasigroupoidData>(doc);
    CHECK(d.objects == 2);
    CHECK(d.arrows() == 2);
    CHECK(d.product.size() == 2);
    CHECK(d.identity == std::vector<Arrow>{0, 1});
  }

  TEST_CASE("range errors name the offending pair") {
    auto d = coarse_groupoid(2).data();
    d.product.push_back({1, 1, 1});
    const std::string msg = expect_error(io::emit(d), ErrorCode::RangeError);
    CHECK(msg.find("(1,1)") != std::string::npos);
    auto oob = coarse_groupoid(2).data();
    oob.inverse[0] = 9;
    expect_error(io::emit(oob), ErrorCode::RangeError);
  }

  TEST_CASE("schema errors") {
    const std::string good = io::emit(io::to_doc(discrete_groupoid(1)));
    CHECK(expect_error("{\n\"kind\": ", ErrorCode::SchemaError).find("line") != std::string::npos);
    auto j = nlohmann::json::parse(good);
    j["extra"] = 1;
    CHECK(expect_error(j.dump(), ErrorCode::SchemaError).find("extra") != std::string::npos);
    j = nlohmann::json::parse(good);
    j.erase("version");
    expect_error(j.dump(), ErrorCode::SchemaError);
    j = nlohmann::json::parse(good);
    j["kind"] = "monoid";
    expect_error(j.dump(), ErrorCode::SchemaError);
    j = nlohmann::json::parse(good);
    j["objects"] = "one";
    expect_error(j.dump(), ErrorCode::SchemaError);
    CHECK_THROWS_AS(io::read_file((kFixtures / "no-such-file.json").string()), Error);
  }

  TEST_CASE("generator output matches the committed fixtures") {
    const fs::path regenerated = QGKIT_REGENERATED_DIR;
    REQUIRE(fs::exists(regenerated));
    for (const char* sub : {"valid", "corrupted"}) {
      std::set<std::string> committed, fresh;
      for (const auto& p : files_in(kFixtures / sub)) committed.insert(p.filename().string());
      for (const auto& p : files_in(regenerated / sub)) fresh.insert(p.filename().string());
      CHECK(committed == fresh);
      for (const auto& name : committed) {
        if (!fresh.count(name)) continue;
        CAPTURE(name);
        CHECK(slurp(kFixtures / sub / name) == slurp(regenerated / sub / name));
      }
    }
  }
}

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    const auto valid = (kFixtures / "valid" / "quasigroupoid-coarse-2.json").string();
    const auto corrupt = (kFixtures / "corrupted" / "a1-coarse2-identity-not-loop.json").string();
    CHECK(run({"validate", valid}).code == cli::kPass);
    const auto bad = run({"validate", corrupt});
    CHECK(bad.code == cli::kViolations);
    CHECK(bad.out.find("FAIL axiom=a1 witness=0") != std::string::npos);
    CHECK(run({"validate", (kFixtures / "missing.json").string()}).code == cli::kInputError);
    CHECK(run({"frobnicate", valid}).code == cli::kInputError);
    CHECK(run({"validate"}).code == cli::kInputError);
    CHECK(run({"validate", valid, "--field=GF4"}).code == cli::kInputError);
    CHECK(run({"validate", valid, "--field=R"}).code == cli::kInputError);
    CHECK(run({"validate", valid, "--format=xml"}).code == cli::kInputError);
    CHECK(run({"validate", valid, "--only", "nope"}).code == cli::kInputError);
    CHECK(run({"check-whq", valid}).code == cli::kInputError);
  }

  TEST_CASE("every corrupted fixture is rejected and every valid one passes") {
    for (const auto& p : files_in(kFixtures / "corrupted")) {
      CAPTURE(p.string());
      const auto r = run({"validate", p.string()});
      CHECK(r.code == cli::kViolations);
      // The file name starts with the tag the fixture targets.
      const std::string name = p.filename().string();
      std::string tag = name.substr(0, name.find('-'));
      if (std::isdigit(static_cast<unsigned char>(name[tag.size() + 1]))) tag = name.substr(0, tag.size() + 2);
      CHECK(r.out.find("FAIL axiom=" + tag) != std::string::npos);
    }
    for (const auto& p : files_in(kFixtures / "valid")) {
      CAPTURE(p.string());
      const auto r = run({"suite", p.string()});
      CHECK(r.code == cli::kPass);
      CHECK(r.out.find("PASS 0 violations") != std::string::npos);
    }
  }

  TEST_CASE("machine reports are JSON and agree with the human report") {
    const auto corrupt = (kFixtures / "corrupted" / "e2-z2-permutes-z3-non-automorphically.json").string();
    const auto machine = run({"validate", corrupt, "--format=machine"});
    const auto j = nlohmann::json::parse(machine.out);
    CHECK(j["status"] == "FAIL");
    CHECK(j["violations"].get<int>() > 0);
    const auto human = run({"validate", corrupt});
    CHECK(human.out.find("FAIL " + std::to_string(j["violations"].get<int>()) + " violations") != std::string::npos);
    const auto only = run({"validate", corrupt, "--only", "e2", "--format=machine"});
    const auto jo = nlohmann::json::parse(only.out);
    for (const auto& r : jo["reports"]) {
      for (const auto& c : r["checks"]) CHECK(c["axiom"] == "e2");
    }
  }

  TEST_CASE("reports are deterministic") {
    for (const auto& p : files_in(kFixtures / "valid")) {
      const auto a = run({"suite", p.string(), "--format=machine"});
      const auto b = run({"suite", p.string(), "--format=machine"});
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("check-iso and factorize") {
    const auto z3 = run({"check-iso", (kFixtures / "valid" / "matched-pair-action-left-z3-translation-3.json").string()});
    CHECK(z3.code == cli::kPass);
    CHECK(z3.out.find("bijective yes") != std::string::npos);
    const auto gf = run({"check-iso", (kFixtures / "valid" / "matched-pair-trivial-z2-m-s3-2.json").string(),
                         "--field=GF7"});
    CHECK(gf.code == cli::kPass);
    CHECK(gf.out.find("both sides are Hopf quasigroups") != std::string::npos);
    const auto f = run({"factorize", (kFixtures / "valid" / "quasigroupoid-discrete-2.json").string()});
    CHECK(f.code == cli::kPass);
    CHECK(f.out.find("factorizations 1\n") != std::string::npos);
    const auto c = run({"factorize", (kFixtures / "valid" / "quasigroupoid-coarse-2.json").string()});
    CHECK(c.out.find("factorizations 2\n") != std::string::npos);
    CHECK(run({"factorize", (kFixtures / "valid" / "quasigroupoid-coarse-3.json").string(), "--max-arrows", "4"}).code ==
          cli::kInputError);
  }

  TEST_CASE("build emits documents that validate") {
    const auto mp = (kFixtures / "valid" / "matched-pair-discrete-right-pair-z2-2.json").string();
    const auto dcp = scratch("dcp.json").string();
    CHECK(run({"build", "dcp", mp, "-o", dcp}).code == cli::kPass);
    CHECK(run({"suite", dcp}).code == cli::kPass);
    const auto bowtie = run({"build", "bowtie", mp});
    CHECK(bowtie.code == cli::kPass);
    CHECK(io::kind_name(io::parse(bowtie.out)) == "whq");
    const auto magma = scratch("magma.json").string();
    CHECK(run({"build", "magma", dcp, "-o", magma}).code == cli::kPass);
    CHECK(run({"check-whq", magma}).code == cli::kPass);
    CHECK(run({"build", "magma", mp}).code == cli::kInputError);
  }
}
