#include "mub/basis_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace mub {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

}  // namespace

std::string basis_to_json_string(const MubFamily& fam) {
  ordered doc;
  doc["n"] = fam.dimension();
  doc["m"] = fam.basis_count();
  ordered bases = ordered::array();
  for (const auto& basis : fam.bases()) {
    ordered jb = ordered::array();
    for (const auto& v : basis) {
      ordered jv = ordered::array();
      for (const cplx& z : v) jv.push_back(ordered::array({z.real(), z.imag()}));
      jb.push_back(std::move(jv));
    }
    bases.push_back(std::move(jb));
  }
  doc["bases"] = std::move(bases);
  return doc.dump();
}

MubFamily basis_from_json_string(const std::string& text) {
  const json doc = json::parse(text);
  const int n = doc.at("n").get<int>();
  const int m = doc.at("m").get<int>();
  const json& jbases = doc.at("bases");
  if (static_cast<int>(jbases.size()) != m)
    throw std::invalid_argument("basis file: basis count mismatch");
  std::vector<std::vector<std::vector<cplx>>> bases;
  bases.reserve(m);
  for (const json& jb : jbases) {
    if (static_cast<int>(jb.size()) != n)
      throw std::invalid_argument("basis file: vector count mismatch");
    std::vector<std::vector<cplx>> basis;
    basis.reserve(n);
    for (const json& jv : jb) {
      if (static_cast<int>(jv.size()) != n)
        throw std::invalid_argument("basis file: vector dimension mismatch");
      std::vector<cplx> v;
      v.reserve(n);
      for (const json& jz : jv) {
        if (jz.size() != 2) throw std::invalid_argument("basis file: bad complex entry");
        v.emplace_back(jz[0].get<double>(), jz[1].get<double>());
      }
      basis.push_back(std::move(v));
    }
    bases.push_back(std::move(basis));
  }
  return MubFamily(std::move(bases));
}

void write_basis_file(const std::string& path, const MubFamily& fam) {
  write_text_file(path, basis_to_json_string(fam) + "\n");
}

MubFamily read_basis_file(const std::string& path) {
  return basis_from_json_string(read_text_file(path));
}

std::string sample_sidecar_json_string(const SampleMatrix& sample) {
  ordered doc;
  doc["seed"] = sample.seed();
  doc["n"] = sample.dimension();
  doc["m"] = sample.basis_count();
  doc["p"] = sample.row_count();
  doc["y"] = static_cast<double>(sample.row_count()) / sample.dimension();
  ordered prov = ordered::array();
  for (const RowProvenance& r : sample.provenance())
    prov.push_back(ordered::array({r.basis, r.index}));
  doc["provenance"] = std::move(prov);
  return doc.dump();
}

void write_sample_sidecar(const std::string& path, const SampleMatrix& sample) {
  write_text_file(path, sample_sidecar_json_string(sample) + "\n");
}

}  // namespace mub
