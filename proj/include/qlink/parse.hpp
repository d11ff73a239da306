#pragma once

#include <string_view>

#include "qlink/poly.hpp"

namespace qlink {

struct ParseOptions {
  /// Accept exponents of q that are affine in the symbol M, as in q^{6M+22}.
  /// q^{aM+b} is returned as q^b * x^a: the x slot carries powers of q^M,
  /// which is only meaningful for coefficients that are otherwise x-free.
  bool carrier_exponents = false;
};

/// Parses integer polynomials in q, x, y written in the usual notation:
/// "1 + x(q^7 + yq^8)", "-q^{12(M+1)}(q^22 + y q^23)", "2*y^2*q^3".
/// Juxtaposition multiplies; exponents may be braced.
MultiPoly parse_poly(std::string_view text, const ParseOptions& options = {});

}  // namespace qlink
