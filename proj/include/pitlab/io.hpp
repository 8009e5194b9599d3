#ifndef PITLAB_IO_HPP
#define PITLAB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "pitlab/circuit.hpp"
#include "pitlab/errors.hpp"
#include "pitlab/incidence.hpp"

namespace pitlab {

// Coefficient grammar: "<rat>", "<rat>+<rat>w", "<rat>-<rat>w" or "<rat>w",
// where <rat> is an optionally signed integer or p/q and w denotes sqrt(d).
FieldElem parse_coeff(const std::string& token, int line = 0);

// Circuit text format (line oriented, '#' comments):
//   circuit vars=<n> [ext=<d>] [homogeneous]
//   term [scale=<coeff>]
//   lin: c1, c2, ..., cn
//   quad: c11, c12, ..., c1n, c22, ..., cnn
//   poly deg=<t>: (coeff, e1 e2 ... en) ...
// A header ext=<d> switches the process extension before coefficients parse.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

// Polynomial list format: header "polys vars=<n> [ext=<d>]" followed by
// factor lines in the same grammar.
std::vector<Poly> parse_poly_list(const std::string& text, int* vars_out = nullptr);
std::string serialize_poly_list(const std::vector<Poly>& polys, int vars);

// Configuration format: header "points vars=<n> [ext=<d>]", then "set <name>"
// headers followed by "(c1, c2, ..., cn)" point lines.
Configuration parse_configuration(const std::string& text);
std::string serialize_configuration(const Configuration& cfg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pitlab

#endif  // PITLAB_IO_HPP
