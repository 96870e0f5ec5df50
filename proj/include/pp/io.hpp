#pragma once

#include <iosfwd>

#include "pp/pump.hpp"

namespace pp {

// Structured-text (JSON) formats. All numbers are decimal strings so that
// big-integer values survive round trips; object keys are emitted sorted for
// byte-stable output.

std::string protocol_to_json(const Protocol& p);
Protocol protocol_from_json(const std::string& text);  // throws ParseError

std::string certificate_to_json(const Protocol& p, const Certificate& cert);
Certificate certificate_from_json(const Protocol& p, const std::string& text);

std::string decomposition_to_json(const Protocol& p, const IdealDecomposition& d);

std::string matrix_to_json(const DiophSystem& sys);
DiophSystem matrix_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pp
