#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace ggms {

// Exact rational scalar used throughout the library.  No floating point
// is used anywhere: stability slopes, polytope vertices and basis
// coefficients are all mpq values.
using Rat = boost::multiprecision::mpq_rational;

inline std::string rat_str(const Rat& x) { return x.str(); }

// Parses "p", "-p" or "p/q".  Throws std::runtime_error on bad input.
Rat rat_parse(const std::string& s);

} // namespace ggms
