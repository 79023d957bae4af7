#include "ccpair/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ccpair {

namespace {
// Strips '#' comments and returns the next nonempty line.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) return true;
    }
    return false;
}
} // namespace

LinearCode parse_matrix(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) raise(ErrorCode::BadInput, "matrix file is empty");
    std::istringstream header(line);
    std::string field_spec;
    size_t n = 0, k = 0;
    if (!(header >> field_spec >> n >> k))
        raise(ErrorCode::BadInput, "matrix header must be 'q n k'");
    Field field = Field::parse(field_spec);

    Matrix gen(field, k, n);
    for (size_t r = 0; r < k; ++r) {
        if (!next_content_line(in, line))
            raise(ErrorCode::BadInput, "matrix file ends after " + std::to_string(r) + " rows");
        std::istringstream row(line);
        for (size_t c = 0; c < n; ++c) {
            long long v;
            if (!(row >> v))
                raise(ErrorCode::BadInput, "row " + std::to_string(r) + " has fewer than n entries");
            if (v < 0 || static_cast<uint64_t>(v) >= field.order())
                raise(ErrorCode::BadInput, "element code out of range: " + std::to_string(v));
            gen.set(r, c, static_cast<uint32_t>(v));
        }
        long long extra;
        if (row >> extra) raise(ErrorCode::BadInput, "row " + std::to_string(r) + " has extra entries");
    }
    LinearCode code(field, n, gen);
    if (code.k() != k)
        raise(ErrorCode::BadInput, "generator rows are dependent: rank " +
                                       std::to_string(code.k()) + " != declared k " +
                                       std::to_string(k));
    return code;
}

LinearCode read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::BadInput, "cannot open matrix file: " + path);
    return parse_matrix(in);
}

void write_matrix(std::ostream& out, const LinearCode& code, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << code.field().spec() << " " << code.n() << " " << code.k() << "\n";
    for (size_t r = 0; r < code.k(); ++r) {
        for (size_t c = 0; c < code.n(); ++c) {
            if (c) out << " ";
            out << code.generator().at(r, c);
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const LinearCode& code,
                       const std::string& comment) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::BadInput, "cannot write matrix file: " + path);
    write_matrix(out, code, comment);
}

PairBundle load_pair_bundle(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) raise(ErrorCode::BadInput, "cannot open pair manifest: " + manifest_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::BadInput, std::string("bad manifest JSON: ") + e.what());
    }
    std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
    try {
        std::string name = j.value("name", "pair");
        Field field = Field::parse(j.at("field").get<std::string>());
        size_t n = j.at("n").get<size_t>();
        LinearCode c1 = read_matrix_file((base / j.at("c1").get<std::string>()).string());
        LinearCode c2 = read_matrix_file((base / j.at("c2").get<std::string>()).string());
        if (!c1.field().same(field) || !c2.field().same(field))
            raise(ErrorCode::MismatchedField, "matrix files disagree with the manifest field");
        if (c1.n() != n || c2.n() != n)
            raise(ErrorCode::LengthMismatch, "matrix files disagree with the manifest length");
        return PairBundle{name, ConjugatePair(c1, c2)};
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::BadInput, std::string("manifest is missing fields: ") + e.what());
    }
}

std::string write_pair_bundle(const std::string& dir, const std::string& name,
                              const ConjugatePair& pair) {
    std::filesystem::path base(dir);
    std::filesystem::create_directories(base);
    std::string c1_name = name + "_c1.mat";
    std::string c2_name = name + "_c2.mat";
    write_matrix_file((base / c1_name).string(), pair.c1(), name + " C1");
    write_matrix_file((base / c2_name).string(), pair.c2(), name + " C2");
    nlohmann::ordered_json j;
    j["name"] = name;
    j["field"] = pair.field().spec();
    j["n"] = pair.n();
    j["c1"] = c1_name;
    j["c2"] = c2_name;
    std::filesystem::path manifest = base / (name + ".json");
    std::ofstream out(manifest);
    if (!out) raise(ErrorCode::BadInput, "cannot write manifest: " + manifest.string());
    out << j.dump(2) << "\n";
    return manifest.string();
}

} // namespace ccpair
