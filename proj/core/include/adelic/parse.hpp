#pragma once

#include <string>

#include "adelic/curve.hpp"
#include "adelic/series2d.hpp"

namespace adelic::parse {

using algebra::FqPtr;

// Plain-text input grammars: integer-coefficient polynomial expressions with
// + - * / ^ and parentheses. Parse errors throw ContractViolation with the
// source offset.

Poly<FqHandle> poly_1d(const FqPtr& F, const std::string& text);    // in t
Poly<FqHandle> poly_in_u(const FqPtr& F, const std::string& text);  // in u
series::FqRat rational_1d(const FqPtr& F, const std::string& text);
series::BivPoly biv_poly(const FqPtr& F, const std::string& text);
series::BivRatFn rational_2d(const FqPtr& F, const std::string& text);

// "P(u,t)/Q(u,t) * du^dt" with the denominator's factor structure retained.
series::TwoForm two_form(const FqPtr& F, const std::string& text);

// e.g. "2*(t) + 1*(t^2+t+1) - 3*(inf)"
curve::Divisor divisor(const FqPtr& F, const std::string& text);

// {"q":2,"model":"p1"} or {"q":2,"model":"plane","poly":"y^2*z+y*z^2+x^3"}
curve::CurveModel curve_model_json(const std::string& json_text);

}  // namespace adelic::parse
