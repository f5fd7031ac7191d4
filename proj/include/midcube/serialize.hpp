#ifndef MIDCUBE_SERIALIZE_HPP
#define MIDCUBE_SERIALIZE_HPP

#include "midcube/exactla.hpp"
#include "midcube/graphs.hpp"
#include "midcube/hamiltonian.hpp"
#include "midcube/spectrum.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace midcube {

/// Raised by the text parsers on malformed input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Subset& s);

/// "p <vertices> <edges>" then one "e u v" line per edge, u < v, sorted.
void write_edge_list(std::ostream& out, const SparseGraph& g);
SparseGraph read_edge_list(std::istream& in);

/// {"num_vertices": N, "edges": [[u, v], ...], "labels": [[1, 3], ...]}
nlohmann::json graph_to_json(const SparseGraph& g);

/// "rows cols" then one line per row; entries are "num/den", or bare
/// integers when the denominator is 1.
void write_matrix(std::ostream& out, const RationalMatrix& m);
void write_matrix(std::ostream& out, const IntMatrix& m);
RationalMatrix read_matrix(std::istream& in);

/// "k r eigenvalue rows cols" followed by the matrix text.
void write_block(std::ostream& out, const EigenbasisBlock& block);
EigenbasisBlock read_block(std::istream& in);

/// {"order": N, "eigenvalues": [{"value": v, "multiplicity": "m"}, ...]},
/// ascending by value, multiplicities as decimal strings. An order beyond
/// 64 bits is written as a decimal string too.
nlohmann::json spectrum_to_json(const SpectrumTable& table);
SpectrumTable spectrum_from_json(const nlohmann::json& j);

/// {"order": N, "cycle": [v0, v1, ...]}, plus "labels" when the graph has them.
nlohmann::json certificate_to_json(const CycleCertificate& c, const SparseGraph& g);
CycleCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace midcube

#endif  // MIDCUBE_SERIALIZE_HPP
