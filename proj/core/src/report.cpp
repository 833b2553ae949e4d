#include "eulerlp/report.hpp"

#include <sstream>

namespace eulerlp {

CongruenceReport make_padic_report(std::string check, nlohmann::ordered_json params, const PadicNumber& lhs,
                                   const PadicNumber& rhs, int m) {
    CongruenceReport out;
    out.check = std::move(check);
    out.p = lhs.context().prime();
    out.params = std::move(params);
    out.match = lhs.congruent(rhs, m);
    out.lhs = lhs.reduced(m);
    out.rhs = rhs.reduced(m);
    out.precision = m;
    out.lhs_valuation = std::get<PadicNumber>(out.lhs).valuation();
    return out;
}

CongruenceReport make_exact_report(std::string check, nlohmann::ordered_json params, const Rational& lhs,
                                   const Rational& rhs) {
    CongruenceReport out;
    out.check = std::move(check);
    out.params = std::move(params);
    out.lhs = lhs;
    out.rhs = rhs;
    out.match = lhs == rhs;
    return out;
}

nlohmann::ordered_json to_json(const PadicNumber& x) {
    nlohmann::ordered_json out;
    out["p"] = x.context().prime();
    out["precision"] = x.precision();
    out["digits"] = x.digits();
    out["valuation"] = x.valuation();
    if (x.is_zero()) out["valuation_is_lower_bound"] = true;
    return out;
}

namespace {

nlohmann::ordered_json value_json(const ReportValue& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return q->to_string();
    return to_json(std::get<PadicNumber>(v));
}

std::string value_text(const ReportValue& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return q->to_string();
    std::string out;
    for (const auto d : std::get<PadicNumber>(v).digits()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(d);
    }
    return out;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

nlohmann::ordered_json to_json(const CongruenceReport& report) {
    nlohmann::ordered_json out;
    out["check"] = report.check;
    out["p"] = report.p ? nlohmann::ordered_json(*report.p) : nlohmann::ordered_json(nullptr);
    out["params"] = report.params;
    out["precision"] = report.precision ? nlohmann::ordered_json(*report.precision) : nlohmann::ordered_json(nullptr);
    out["lhs"] = value_json(report.lhs);
    out["rhs"] = value_json(report.rhs);
    if (const auto* x = std::get_if<PadicNumber>(&report.lhs)) out["lhs_digits"] = x->digits();
    if (const auto* y = std::get_if<PadicNumber>(&report.rhs)) out["rhs_digits"] = y->digits();
    out["lhs_valuation"] =
        report.lhs_valuation ? nlohmann::ordered_json(*report.lhs_valuation) : nlohmann::ordered_json(nullptr);
    out["match"] = report.match;
    return out;
}

std::string to_json_line(const CongruenceReport& report) { return to_json(report).dump(); }

std::string csv_header() { return "check,p,params,precision,lhs,rhs,lhs_valuation,match"; }

std::string to_csv_row(const CongruenceReport& report) {
    std::ostringstream os;
    os << report.check << ',' << (report.p ? std::to_string(*report.p) : "") << ','
       << csv_quote(report.params.dump()) << ',' << (report.precision ? std::to_string(*report.precision) : "")
       << ',' << csv_quote(value_text(report.lhs)) << ',' << csv_quote(value_text(report.rhs)) << ','
       << (report.lhs_valuation ? std::to_string(*report.lhs_valuation) : "") << ','
       << (report.match ? "true" : "false");
    return os.str();
}

}  // namespace eulerlp
