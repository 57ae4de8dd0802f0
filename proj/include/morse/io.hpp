#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "morse/extension_flow.hpp"
#include "morse/homology.hpp"
#include "morse/morse_sequence.hpp"
#include "morse/reference_maps.hpp"
#include "morse/vector_fields.hpp"

namespace morse::io {

using Json = nlohmann::ordered_json;

/// Facet-list text: `#` starts a comment, every other nonblank line is one
/// facet given as whitespace-separated nonnegative integers. Errors carry
/// the line number.
Complex read_cplx(std::istream& in);
Complex read_cplx_file(const std::string& path);
void write_cplx(std::ostream& out, const Complex& k);

/// One item per line: {"op":"fill","simplex":[...]} or
/// {"op":"expand","sigma":[...],"tau":[...]}. Without a target, the target
/// is the set of simplices named in the items, which must form a complex.
MorseSequence read_sequence(std::istream& in, const std::optional<Complex>& target = std::nullopt);
MorseSequence read_sequence_file(const std::string& path, const std::optional<Complex>& target = std::nullopt);
void write_sequence(std::ostream& out, const MorseSequence& seq);

/// {"pairs":[{"sigma":[...],"tau":[...]}, ...]}
VectorField read_vector_field(std::istream& in);
Json vector_field_json(const VectorField& v);

/// One line per face: `<value> <vertices...>`; every face of k needs a value.
MorseFunction read_morse_function(std::istream& in, const Complex& k);
void write_morse_function(std::ostream& out, const MorseFunction& f);

Json simplex_json(const Simplex& s);
Json chain_json(const Complex& k, const IdChain& c);
/// {"basis":[[simplex,...] per degree], "boundary":[[column,...] per degree]}
/// where each column lists the row indices of its nonzero entries.
Json presented_json(const PresentedChainComplex& cc);
/// [{"simplex":..., "role":..., "reference":[...], "coreference":[...]}, ...]
Json frames_json(const IndexedSequence& seq, const Frame& ref, const Frame& coref);
/// {"extension":[{"critical":..., "chain":[...]}], "coextension":[...]}
Json extension_tables_json(const IndexedSequence& seq, const ExtensionMap& ext, const ExtensionMap& coext);

/// Gradient field as a directed graph: lower face -> upper face for every
/// pair, upper face -> its other boundary faces, critical faces boxed.
void write_dot(std::ostream& out, const IndexedSequence& seq);
/// One item per line in plain text.
void write_text(std::ostream& out, const MorseSequence& seq);

}  // namespace morse::io
