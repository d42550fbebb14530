#ifndef ROUTELAB_WEIGHT_HPP
#define ROUTELAB_WEIGHT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace routelab {

// Exact edge weight. mpq_class keeps values canonicalized after every
// arithmetic operation, so == is structural equality.
using Weight = mpq_class;

// Accepts integers ("-3"), decimals ("2.125", converted exactly) and
// fractions ("7/4"). Throws Error{ParseError} on anything else.
Weight parse_weight(std::string_view text);

// Canonical text: "n" for integers, "n/d" otherwise. Round-trips through parse_weight.
std::string format_weight(const Weight& w);

}  // namespace routelab

#endif  // ROUTELAB_WEIGHT_HPP
