// Writes the document fixtures under the given directory (default
// data/fixtures): valid instances and the corrupted mutants.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "qgkit/bowtie.hpp"
#include "qgkit/exact_factorization.hpp"
#include "qgkit/io.hpp"
#include "qgkit/stock.hpp"

namespace fs = std::filesystem;
using namespace qgkit;

namespace {

std::string slug(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!s.empty() && s.back() != '-') {
      s += '-';
    }
  }
  while (!s.empty() && s.back() == '-') s.pop_back();
  return s;
}

void write(const fs::path& dir, const std::string& name, const io::Document& d) {
  std::ofstream f(dir / (slug(name) + ".json"), std::ios::binary);
  f << io::emit(d);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? argv[1] : "data/fixtures";
  const fs::path valid = root / "valid";
  const fs::path corrupt = root / "corrupted";
  fs::create_directories(valid);
  fs::create_directories(corrupt);
  const linalg::RationalField q;

  write(valid, "quasigroup M(S3,2)", io::to_doc(stock::ms3()));
  write(valid, "quasigroup Z3", io::to_doc(cyclic_group(3)));
  write(valid, "action Z3 translation", io::to_doc(cyclic_group(3), 3, left_translation(cyclic_group(3))));
  write(valid, "action M(S3,2) parity", io::to_doc(stock::ms3(), 2, stock::ms3_parity_action()));
  for (const auto& [name, b] : stock::builder_instances()) {
    if (b.arrows() <= 12) write(valid, "quasigroupoid " + name, io::to_doc(b));
  }
  for (const auto& [name, mp] : stock::acceptance_matched_pairs()) {
    write(valid, "matched-pair " + name, io::to_doc(mp.data()));
    if (mp.a().arrows() * mp.h().arrows() <= 16) {
      write(valid, "factorization " + name, io::to_doc(canonical_factorization(mp)));
      write(valid, "whq bowtie " + name, io::to_doc(bowtie_whq(mp, q).whq));
    }
  }
  write(valid, "whq coarse2", io::to_doc(magma_of_quasigroupoid(coarse_groupoid(2), q)));

  for (const auto& m : stock::quasigroupoid_mutants()) write(corrupt, m.tag + " " + m.name, m.data);
  for (const auto& m : stock::matched_pair_mutants()) write(corrupt, m.tag + " " + m.name, io::to_doc(m.data));
  std::set<std::string> seen;
  for (const auto& m : stock::whq_mutants()) {
    if (!seen.insert(m.name).second) continue;
    write(corrupt, m.tag.substr(0, 2) + " " + m.name, io::to_doc(m.data));
  }
  {
    auto d = magma_of_quasigroupoid(coarse_groupoid(2), q);
    d.antipode.cols[1] = linalg::basis_vector<mpq_class>(1, 1);
    write(corrupt, "d4 coarse2 antipode fixed point", io::to_doc(d));
  }
  std::cout << "fixtures written to " << root.string() << "\n";
  return 0;
}
