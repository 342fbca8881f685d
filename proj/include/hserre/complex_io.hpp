#pragma once

#include <string>
#include <string_view>

#include "hserre/complex.hpp"

namespace hserre {

/// Complex documents.
///
/// Text form, one item per line:
///
///     # comment (a '#' anywhere starts a comment running to end of line)
///     n 7
///     3 4 5 6 7
///     2 4 5 6 7
///
/// The first non-blank, non-comment line is `n <count>`; each later
/// non-blank line lists one facet as space-separated labels. The JSON form
/// is {"n": 7, "facets": [[3,4,5,6,7], ...]}.
enum class DocumentFormat { Text, Json };

/// Parses either form (JSON when the first non-space character is '{').
/// Malformed text throws SyntaxError naming the line; a well-formed document
/// describing an invalid complex throws whatever from_facets throws.
SimplicialComplex parse_complex(std::string_view text);

/// Newline-terminated document; facets in face_less order.
std::string write_complex(const SimplicialComplex& complex, DocumentFormat format,
                          const std::string& comment = {});

} // namespace hserre
