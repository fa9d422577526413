#pragma once

#include <array>
#include <string>

#include "json.hpp"

#include "hadstar/fiber.hpp"
#include "hadstar/groebner.hpp"
#include "hadstar/identify.hpp"
#include "hadstar/polynomial.hpp"
#include "hadstar/product.hpp"
#include "hadstar/projective.hpp"
#include "hadstar/quadric.hpp"

namespace hadstar::io {

/// Order-preserving JSON: emitted keys stay in insertion order, so equal
/// values always serialize to identical bytes.
using ojson = nlohmann::ordered_json;

/// Wraps ojson::parse; throws InputError("<where>: ...") on syntax errors.
ojson parse_json_text(const std::string& text, const std::string& where = "$");

/// All parsers throw InputError with the JSON path of the offending value
/// ("$.centers[2][1]: ..."), including when a structurally valid value is
/// mathematically inadmissible (zero denominator, coincident line points,
/// rank-deficient conic frame, ...).

Rat parse_rat(const ojson& j, const std::string& path);
std::string emit_rat(const Rat& r);

/// Point: array of four rationals, not all zero.
ProjPoint parse_point(const ojson& j, const std::string& path);
ojson emit_point(const ProjPoint& p);

/// Line: {"points": [pt, pt]} or {"pluecker": [r0..r5]}; when both keys are
/// present they must describe the same line.  Pluecker input must satisfy
/// the quadratic relation; the spanning points are rebuilt from the column
/// space of the antisymmetric matrix.
LineP3 parse_line(const ojson& j, const std::string& path);
ojson emit_line(const LineP3& l);

/// Parametrized curve: {"line": <line>}, {"conic": {"through": pt, "B": pt,
/// "C": pt}} (the conic s^2 A + s t B + t^2 C through A and C), or
/// {"forms": [poly x4]} over a 2-variable ring.
ParamCurve parse_curve(const ojson& j, const std::string& path);
ojson emit_curve(const ParamCurve& c);

/// Polynomial: {"vars": n, "terms": [{"exp": [e0..], "coef": rat}, ...]}.
/// Terms may repeat (coefficients accumulate); emission orders terms by
/// descending graded reverse lex, leading term first.
Poly parse_poly(const ojson& j, const std::string& path);
ojson emit_poly(const Poly& p);

/// Ideal: {"vars": n, "generators": [poly, ...]}, each generator in the
/// same ring.
Ideal parse_ideal(const ojson& j, const std::string& path);
ojson emit_ideal(const Ideal& i);

/// Quadric: {"coeffs": [c0..c9]}, {"gram": [[..] x4]} (symmetric), or
/// {"poly": <poly>} (4 variables, homogeneous of degree 2).
Quadric parse_quadric(const ojson& j, const std::string& path);
ojson emit_quadric(const Quadric& q);

/// Array of exactly four points.
std::array<ProjPoint, 4> parse_centers(const ojson& j, const std::string& path);

ojson emit_implicit_result(const ImplicitResult& r);
ojson emit_morphism(const MorphismResult& m);
ojson emit_plane_section(const PlaneSection& s);
ojson emit_scl(const SclResult& s);
ojson emit_family_check(const FamilyCheck& f);
ojson emit_survey(const SurveyResult& s);
ojson emit_chart_component(const ChartComponent& c);
/// Includes the reference dimension figure and a discrepancy note comparing
/// it with the computed value.
ojson emit_chart_analysis(const ChartAnalysis& a);
ojson emit_gb(const GroebnerBasis& gb, int dimension);

}  // namespace hadstar::io
