#include "combmet/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "combmet/errors.hpp"

namespace combmet {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(std::string("invalid JSON in ") + what);
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

LoadedCovering parse_covering(const std::string& json_text) {
    json j = parse_or_throw(json_text, "covering spec");
    if (!j.contains("n") || !j.contains("sets"))
        throw Error("covering spec needs \"n\" and \"sets\"");
    const int n = j.at("n").get<int>();
    std::vector<std::vector<int>> sets = j.at("sets").get<std::vector<std::vector<int>>>();
    NormalizeResult res = normalize(n, sets);
    LoadedCovering out{res.covering, {}};
    for (auto mask : res.dropped) out.dropped.push_back(indices_from_mask(mask));
    return out;
}

LoadedCovering load_covering_file(const std::string& path) {
    return parse_covering(slurp(path));
}

std::string covering_to_json(const Covering& f,
                             const std::vector<std::vector<int>>& dropped) {
    json j;
    j["n"] = f.n();
    j["sets"] = f.sets();
    j["dropped"] = dropped;
    return j.dump();
}

LinearCode parse_code(const std::string& json_text) {
    json j = parse_or_throw(json_text, "code spec");
    if (!j.contains("q") || !j.contains("n") || !j.contains("generators"))
        throw Error("code spec needs \"q\", \"n\" and \"generators\"");
    FieldContext ctx(j.at("q").get<int>());
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Vector> rows;
    for (const auto& row : j.at("generators")) {
        std::vector<std::uint8_t> entries;
        for (const auto& v : row) {
            const long long x = v.get<long long>();
            entries.push_back(ctx.reduce(x));
        }
        if (entries.size() != n) throw Error("generator row length != n");
        rows.emplace_back(ctx, std::move(entries));
    }
    return LinearCode::from_generators(ctx, n, rows);
}

LinearCode load_code_file(const std::string& path) { return parse_code(slurp(path)); }

std::string code_to_json(const LinearCode& c) {
    json j;
    j["q"] = c.context().q();
    j["n"] = c.length();
    json rows = json::array();
    for (std::size_t i = 0; i < c.dim(); ++i) {
        json row = json::array();
        for (std::size_t t = 0; t < c.length(); ++t) row.push_back(c.generator().at(i, t));
        rows.push_back(std::move(row));
    }
    j["generators"] = std::move(rows);
    return j.dump();
}

Matrix parse_matrix(const std::string& json_text) {
    json j = parse_or_throw(json_text, "matrix spec");
    if (!j.contains("q") || !j.contains("matrix"))
        throw Error("matrix spec needs \"q\" and \"matrix\"");
    FieldContext ctx(j.at("q").get<int>());
    const auto& rows = j.at("matrix");
    if (rows.empty()) throw Error("matrix spec is empty");
    const std::size_t cols = rows.front().size();
    std::vector<std::uint8_t> entries;
    for (const auto& row : rows) {
        if (row.size() != cols) throw Error("ragged matrix rows");
        for (const auto& v : row) entries.push_back(ctx.reduce(v.get<long long>()));
    }
    return Matrix(ctx, rows.size(), cols, std::move(entries));
}

Matrix load_matrix_file(const std::string& path) { return parse_matrix(slurp(path)); }

std::string matrix_to_json(const Matrix& m) {
    json j;
    j["q"] = m.context().q();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t t = 0; t < m.cols(); ++t) row.push_back(m.at(i, t));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j.dump();
}

}  // namespace combmet
