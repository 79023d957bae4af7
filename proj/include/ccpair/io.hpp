#pragma once

#include <iosfwd>
#include <string>

#include "ccpair/conjugate_pair.hpp"

namespace ccpair {

// Text matrix format: optional '#' comments, then a header line "q n k" with
// q written as "p^m", then k rows of n integer-encoded elements.
LinearCode parse_matrix(std::istream& in);
LinearCode read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const LinearCode& code, const std::string& comment = "");
void write_matrix_file(const std::string& path, const LinearCode& code,
                       const std::string& comment = "");

// A pair bundle is a JSON manifest naming the field, length, and the two
// matrix files (paths relative to the manifest).
struct PairBundle {
    std::string name;
    ConjugatePair pair;
};
PairBundle load_pair_bundle(const std::string& manifest_path);
// Writes <name>.json plus <name>_c1.mat / <name>_c2.mat under dir and
// returns the manifest path.
std::string write_pair_bundle(const std::string& dir, const std::string& name,
                              const ConjugatePair& pair);

} // namespace ccpair
