#pragma once

#include "romik/ergodic_stats.hpp"
#include "romik/maps.hpp"
#include "romik/natural_extension.hpp"
#include "romik/rcf.hpp"
#include "romik/rewrite.hpp"
#include "romik/romik_expansion.hpp"
#include "romik/scalar.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace romik {

/// "p/q", "p", or an arithmetic expression over integers and sqrt(D) such as
/// "(250*sqrt(5)-250)/1969". Throws ParseError.
Scalar parse_scalar(std::string_view s);
Rational parse_rational(std::string_view s);
/// "[0;6,2,1]" or "[0;4,(2,1,2,4,1,1,6)]" (the parenthesized block repeats).
RcfExpansion parse_rcf(std::string_view s);
/// "[0;2,-1/3]": c/d terms, a bare d means c = +1.
SignedCF parse_signed_cf(std::string_view s);
/// "[0;1/2,1/0,-1/2]"
std::vector<RomikTerm> parse_romik_terms(std::string_view s);
/// "(-1,1),(1,-1)" as (delta, epsilon) pairs.
std::vector<DigitPair> parse_digit_pairs(std::string_view s);

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json integer_json(const Integer& n);

void to_json(json& j, const Rational& r);
void to_json(json& j, const QuadSurd& s);
void to_json(json& j, const Scalar& s);
void to_json(json& j, const Mobius& m);
void to_json(json& j, const Convergent& c);
void to_json(json& j, const RcfExpansion& e);
void to_json(json& j, const RomikTerm& t);
void to_json(json& j, const RomikExpansion& e);
void to_json(json& j, const OrbitRecord& o);
void to_json(json& j, const Interval& i);
void to_json(json& j, const RationalRect& r);
void to_json(json& j, const InvarianceRecord& r);
void to_json(json& j, const SignedCF& cf);
void to_json(json& j, const OpenInterval& i);
void to_json(json& j, const RatioExperiment& r);
void to_json(json& j, const SkippedReport& r);

}  // namespace romik
