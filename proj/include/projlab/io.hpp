#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "projlab/complement.hpp"
#include "projlab/lattice.hpp"
#include "projlab/linear.hpp"
#include "projlab/projspace.hpp"

// Text and JSON formats for subspaces, sets, maps and addition tables.
//
//   k=2              subspace literal: dimension, then k RREF rows of n digits
//   101
//   011
//
//   subspaceset q=2 n=3 count=16      followed by count literals in canonical order
//   subspacemap q=2 n=3 count=16      followed by count lines "<index> <image>"
//   addtable count=8                  followed by count lines of count indices
//   latticemap count=16               followed by count lines "<element> <image>"
//
// Maps and tables index a companion subspaceset file. Digit literals limit
// the text formats to q <= 9.
namespace projlab::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string encode_subspace(const Subspace& x);
/// Throws ParseError; non-RREF rows are rejected as "not in canonical form".
Subspace decode_subspace(const std::string& text, const Ambient& ambient);

std::string encode_set(const SubspaceSet& set);
/// Members must be strictly increasing in canonical order.
SubspaceSet decode_set(const std::string& text);

std::string encode_map(const SubspaceMap& f);
SubspaceMap decode_map(const std::string& text, const SubspaceSet& domain);

std::string encode_table(const AdditionTable& t);
AdditionTable decode_table(const std::string& text, const SubspaceSet& code);

std::string encode_lattice_map(const LatticeMap& f);
/// Requires a bijection of 0..size-1.
LatticeMap decode_lattice_map(const std::string& text, std::size_t size);

nlohmann::json set_to_json(const SubspaceSet& set);
/// Throws std::invalid_argument on malformed or non-canonical content.
SubspaceSet set_from_json(const nlohmann::json& j);
nlohmann::json map_to_json(const SubspaceMap& f);
SubspaceMap map_from_json(const nlohmann::json& j, const SubspaceSet& domain);
nlohmann::json table_to_json(const AdditionTable& t);
AdditionTable table_from_json(const nlohmann::json& j, const SubspaceSet& code);
nlohmann::json lattice_map_to_json(const LatticeMap& f);
LatticeMap lattice_map_from_json(const nlohmann::json& j, std::size_t size);

/// Whole-file helpers; throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace projlab::io
