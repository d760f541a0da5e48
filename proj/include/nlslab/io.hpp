#pragma once
/// \file io.hpp
/// Field serialization (binary container and CSV) and deterministic number
/// formatting. All artifact writers in this project format doubles with the
/// shortest round-trip decimal representation, so identical inputs produce
/// byte-identical files.

#include <string>

#include "nlslab/grid.hpp"

namespace nlslab {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

/// Binary container: magic "RFLD", uint32 endianness tag 0x01020304, double
/// R, uint64 M, then (M-1) interleaved re/im 64-bit floats.
void write_field_binary(const std::string& path, const RadialField& u);
RadialField read_field_binary(const std::string& path);

/// CSV with header "r,re,im", one row per interior node.
std::string field_csv(const RadialField& u);
void write_field_csv(const std::string& path, const RadialField& u);

/// Write a whole text file (parent directory must exist).
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace nlslab
