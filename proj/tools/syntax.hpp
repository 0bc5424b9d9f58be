#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bicyclic/endomorphism.hpp"
#include "bicyclic/family.hpp"

namespace bicyclic::cli {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// "(i,j,b)" with b the base of the inductive set. Whitespace is ignored.
Elem parse_elem(std::string_view text);
inline std::string format_elem(const Elem& x) { return to_string(x); }

/// One or more elements, optionally separated by commas or whitespace:
/// "(0,1,0),(1,0,0)".
std::vector<Elem> parse_elem_list(std::string_view text);

/// "a:k,p" or "b:k,p". Well-formed text with out-of-range parameters
/// throws ParameterRangeError, not ParseError.
InjEndo parse_endo(std::string_view text);
inline std::string format_endo(const InjEndo& e) { return to_string(e); }

/// "0,1,..." list of bases. A member spelled "empty" names the empty set,
/// which is rejected with FamilyError.
Family parse_family(std::string_view text);

}  // namespace bicyclic::cli
