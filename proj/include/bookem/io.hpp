#pragma once

#include <string>

#include "bookem/book_embedding.hpp"
#include "bookem/kframed.hpp"
#include "bookem/map_graph.hpp"

namespace bookem {

// All documents are canonical JSON (alphabetical keys, two-space indent,
// trailing newline): serialize(parse(serialize(x))) is byte-identical.
// Faces are referenced by their boundary vertex cycle, canonicalized to
// start at the smallest id with the smaller second element.

std::string serialize_instance(const KFramedDrawing &d);
KFramedDrawing parse_instance(const std::string &text); // throws InputError

std::string serialize_embedding(const BookEmbedding &e, const PageRegistry &reg, int bound,
                                const std::string &validator_status);
struct EmbeddingDocument {
    BookEmbedding embedding;
    int k = 0;
    int pages_used = 0;
    int bound = 0;
    std::string validator_status;
};
EmbeddingDocument parse_embedding(const std::string &text);

std::string serialize_witness(const MapWitness &w);
MapWitness parse_witness(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace bookem
