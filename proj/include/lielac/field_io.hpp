#pragma once

#include "lielac/fields.hpp"

#include <string>

namespace lielac {

/// Writes `x,u` rows plus a `<path>.meta.json` sidecar {time, periodic, domain}.
void write_field_csv(const std::string& path, const Field1D& f);

/// Writes `x,y,u` rows plus the sidecar.
void write_field_csv(const std::string& path, const Field2D& f);

Field1D read_field1d_csv(const std::string& path);
Field2D read_field2d_csv(const std::string& path);

} // namespace lielac
