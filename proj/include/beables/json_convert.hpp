#pragma once

#include <json.hpp>

#include "beables/matrix.hpp"

namespace beables {

// Serialization convention shared by every module: complex scalars as
// two-element arrays [re, im]; matrices as row-major nested arrays.
using Json = nlohmann::ordered_json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j, const std::string& path);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& path);

}  // namespace beables
