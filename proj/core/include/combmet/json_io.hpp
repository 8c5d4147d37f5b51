#ifndef COMBMET_JSON_IO_HPP
#define COMBMET_JSON_IO_HPP

#include <string>
#include <vector>

#include "combmet/code.hpp"
#include "combmet/covering.hpp"
#include "combmet/gf.hpp"

namespace combmet {

struct LoadedCovering {
    Covering covering;
    /// 1-based sets dropped by normalization, in input order.
    std::vector<std::vector<int>> dropped;
};

/// Covering spec: {"n": <int>, "sets": [[<1-based ints>], ...]}.
/// The loader normalizes and records which sets were dropped as redundant.
LoadedCovering parse_covering(const std::string& json_text);
LoadedCovering load_covering_file(const std::string& path);
std::string covering_to_json(const Covering& f, const std::vector<std::vector<int>>& dropped);

/// Code spec: {"q": <int>, "n": <int>, "generators": [[ints], ...]}.
LinearCode parse_code(const std::string& json_text);
LinearCode load_code_file(const std::string& path);
std::string code_to_json(const LinearCode& c);

/// Matrix spec: {"q": <int>, "matrix": [[ints], ...]} (rows of equal length).
Matrix parse_matrix(const std::string& json_text);
Matrix load_matrix_file(const std::string& path);
std::string matrix_to_json(const Matrix& m);

}  // namespace combmet

#endif
