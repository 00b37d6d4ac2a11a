#ifndef FBLAB_FIELD_IO_HPP
#define FBLAB_FIELD_IO_HPP

#include <string>

#include "fblab/grid.hpp"

namespace fblab {

// Field persistence: <base>.json carries the header, <base>.bin the raw
// little-endian f64 node data (node-major, component-minor, axis 0 fastest).
// Round-trips bit-exactly.
void write_field(const VectorField& u, const std::string& base_path);
VectorField read_field(const std::string& base_path);

} // namespace fblab

#endif
