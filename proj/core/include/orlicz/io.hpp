#pragma once

#include <string>
#include <string_view>

#include "orlicz/maps.hpp"
#include "orlicz/measure.hpp"
#include "orlicz/profile.hpp"
#include "orlicz/quantum.hpp"
#include "orlicz/young.hpp"

namespace orlicz::io {

// Profiles:  {"steps": [[level, length], ...],
//             "head": {"kind": "log" | "inverse_power", "scale", "exponent", "end"},
//             "tail": {"kind": "zero" | "exponential" | "power", "params": {...}}}
// Matrices:  {"dim": n, "entries": [[re, im], ...]}   (row-major)
// Maps:      {"kind": "pinching", "partition": [[0, 1], [2]]}
//            {"kind": "kraus", "kraus": [matrix, ...]}
//            {"kind": "unitary_conjugation", "unitary": matrix}
// Malformed input raises DomainError.

DecreasingProfile parse_profile(std::string_view json);
std::string profile_to_json(const DecreasingProfile& p);

MatrixObservable parse_matrix(std::string_view json);
std::string matrix_to_json(const MatrixObservable& a);

PositiveMap parse_map(std::string_view json);

std::string read_file(const std::string& path);
DecreasingProfile load_profile(const std::string& path);
MatrixObservable load_matrix(const std::string& path);
PositiveMap load_map(const std::string& path);
SimpleFunction load_simple_function(const std::string& path,
                                    MeasureSpaceDesc space = MeasureSpaceDesc::sigma_finite());
/// Catalog name, or a path to a two-column tabulated density.
YoungFunction load_young(const std::string& spec);

}  // namespace orlicz::io
