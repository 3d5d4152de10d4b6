#pragma once

#include <string>

#include <json.hpp>

#include "weyldual/derham.hpp"
#include "weyldual/presentation.hpp"

namespace weyldual {

using Json = nlohmann::ordered_json;

Json label_to_json(const Label& a);
Label label_from_json(const Json& j);

Json window_to_json(const Window& w);
Window window_from_json(const Json& j);

/// Entries are [row, col, "p/q"] triplets in row-major order.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json presentation_to_json(const GradedPresentation& m);
/// Throws ParseError on malformed documents.
GradedPresentation presentation_from_json(const Json& j);

Json table_to_json(const CohomologyTable& t);
/// Header "label,i,dim,certified"; rank-1 labels print as integers, others
/// as "a;b;c".
std::string table_to_csv(const CohomologyTable& t);
std::string table_to_text(const CohomologyTable& t);

}  // namespace weyldual
