#pragma once

#include <string>

#include "mub/family.hpp"
#include "mub/sampling.hpp"

namespace mub {

// Basis file schema:
//   { "n": int, "m": int, "bases": [ m x [ n x [ n x [re, im] ] ] ] }
std::string basis_to_json_string(const MubFamily& fam);
MubFamily basis_from_json_string(const std::string& text);

void write_basis_file(const std::string& path, const MubFamily& fam);
MubFamily read_basis_file(const std::string& path);

// Sample sidecar schema:
//   { "seed": uint, "n": int, "m": int, "p": int, "y": real,
//     "provenance": [ p x [basis, index] ] }
std::string sample_sidecar_json_string(const SampleMatrix& sample);
void write_sample_sidecar(const std::string& path, const SampleMatrix& sample);

}  // namespace mub
