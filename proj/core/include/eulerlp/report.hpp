#pragma once

#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "eulerlp/padic.hpp"
#include "eulerlp/rational.hpp"

namespace eulerlp {

using ReportValue = std::variant<Rational, PadicNumber>;

/// Outcome of one identity or congruence check. p-adic checks carry both
/// sides reduced to `precision` digits; exact checks carry rationals and
/// leave p and precision unset.
struct CongruenceReport {
    std::string check;
    std::optional<unsigned long> p;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    ReportValue lhs;
    ReportValue rhs;
    std::optional<int> precision;
    std::optional<long> lhs_valuation;
    bool match = false;
};

/// Compares x and y modulo p^m and stores both reduced to m digits.
CongruenceReport make_padic_report(std::string check, nlohmann::ordered_json params, const PadicNumber& lhs,
                                   const PadicNumber& rhs, int m);

CongruenceReport make_exact_report(std::string check, nlohmann::ordered_json params, const Rational& lhs,
                                   const Rational& rhs);

/// {p, precision, digits (little-endian base p), valuation}; a value that
/// is zero to its precision also gets "valuation_is_lower_bound": true.
nlohmann::ordered_json to_json(const PadicNumber& x);
nlohmann::ordered_json to_json(const CongruenceReport& report);

/// Single-line compact JSON.
std::string to_json_line(const CongruenceReport& report);

std::string csv_header();
std::string to_csv_row(const CongruenceReport& report);

}  // namespace eulerlp
