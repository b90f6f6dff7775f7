#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "muharm/betti_w.hpp"
#include "muharm/derham.hpp"
#include "muharm/group_algebra.hpp"
#include "muharm/mu_bridge.hpp"
#include "muharm/valuation.hpp"

namespace muharm {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Printers. All element printers emit "0" for zero and round-trip through
// the matching parser (element equality, not byte equality of strings).
std::string to_string(const Rational& r);
std::string to_string(const ReducedWord& w);
std::string to_string(const GroupAlgebraElement& v);
std::string to_string(const TensorElement& t);
std::string to_string(const GenWord& w);
std::string to_string(const GeneratorPoly& p);
std::string to_string(const ZWord& w);
std::string to_string(const ZWordElement& z);
std::string to_string(const ZTensorElement& z);
std::string to_string(const DRMonomial& m);
std::string to_string(const DRElement& d);
std::string to_string(const DRTensorElement& t);
std::string to_string(const FiltrationDegree& d);
std::string to_string(const LaurentPoly& p);

// Parsers. Whitespace-insensitive; '*' between factors is optional. Throw
// ParseError with a position hint on malformed input.
GroupAlgebraElement parse_group_element(std::string_view s);
TensorElement parse_tensor_element(std::string_view s);
ZWordElement parse_zword_element(std::string_view s, int n);
ZTensorElement parse_ztensor_element(std::string_view s, int n);
DRElement parse_dr_element(std::string_view s, int n);
GeneratorPoly parse_generator_poly(std::string_view s);
LaurentPoly parse_laurent(std::string_view s);

}  // namespace muharm
