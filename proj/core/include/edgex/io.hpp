#ifndef EDGEX_IO_HPP
#define EDGEX_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgex/network.hpp"

namespace edgex {

// Parse failure with the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Maps file tokens to raw integer ids in first-appearance order. Emitted
// alongside outputs so canonical ids can be traced back to the original
// names.
struct TokenDictionary {
    std::vector<std::string> tokens;  // tokens[i] is the token for raw id i+1

    RawId id_of(const std::string& token) const;  // 0 when unknown
};

// Interaction file: one interaction per line, whitespace-separated vertex
// tokens, line order = edge labels. '#' starts a comment line, blank lines
// are ignored, '%' lines are headers. A two-column edge list is the binary
// special case.
struct InteractionFile {
    std::vector<std::vector<RawId>> interactions;
    TokenDictionary dictionary;
    std::vector<std::string> headers;  // raw '%' lines, without the '%'
};

InteractionFile read_interaction_file(std::istream& in);
InteractionFile read_interaction_file(const std::string& path);

// Canonical network serialization: '%edgex v=<v> e=<e> directed=<0|1>'
// followed by one edge per line with canonical integer ids. extra_headers
// are emitted as additional '%' lines (provenance).
void write_network(std::ostream& out, const EdgeLabeledNetwork& net,
                   const std::vector<std::string>& extra_headers = {});
void write_network(const std::string& path, const EdgeLabeledNetwork& net,
                   const std::vector<std::string>& extra_headers = {});

// Reads a canonical network file (or any interaction file; the content is
// canonicalized). When the %edgex header is present, `directed` comes from
// it unless overridden by the caller; files without the header default to
// the `fallback_directed` flag.
EdgeLabeledNetwork read_network(const std::string& path, bool fallback_directed = true);

void write_dictionary(const std::string& path, const TokenDictionary& dict);

// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex. Provenance
// only, not cryptographic.
std::string file_digest(const std::string& path);

}  // namespace edgex

#endif
