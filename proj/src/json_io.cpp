#include "diopell/json_io.hpp"

#include <stdexcept>

namespace diopell::json_io {

namespace {

std::string dec(const Natural& n) { return n.get_str(); }

Natural nat(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw std::invalid_argument(std::string("missing decimal-string field: ") + field);
    return Natural(j[field].get<std::string>());
}

unsigned uns(const json& j, const char* field) {
    Natural v = nat(j, field);
    if (!v.fits_uint_p()) throw std::invalid_argument(std::string("field out of range: ") + field);
    return unsigned(v.get_ui());
}

}  // namespace

json to_json(const pell::PellFundamental& f) {
    return {{"d", dec(f.d)}, {"u1", dec(f.u1)}, {"v1", dec(f.v1)}};
}

json to_json(const pell::PellPoint& p) {
    return {{"d", dec(p.d)}, {"k", std::to_string(p.k)}, {"u", dec(p.u)}, {"v", dec(p.v)}};
}

json to_json(const lucas::LemmaViolation& v) {
    return {{"lemma", lucas::lemma_name(v.lemma_id)},
            {"d", dec(v.d)},
            {"k", std::to_string(v.k)},
            {"detail", v.detail}};
}

json to_json(const lucas::PrimitiveDivisorSet& s) {
    json primes = json::array();
    for (const auto& p : s.primes) primes.push_back(dec(p));
    return {{"d", dec(s.d)}, {"n", std::to_string(s.n)}, {"primes", primes}};
}

json to_json(const ljunggren::LjunggrenSolution& s) {
    return {{"p", std::to_string(s.p)}, {"x", dec(s.x)}, {"y", dec(s.y)}};
}

json to_json(const diophantine::SolutionCertificate& c) {
    return {{"a", dec(c.a)}, {"b", dec(c.b)}, {"n", std::to_string(c.n)}, {"x", dec(c.x)},
            {"D", dec(c.D)}, {"y", dec(c.y)}, {"z", dec(c.z)}};
}

json to_json(const diophantine::Obstruction& o) {
    return {{"D", dec(o.D)},
            {"a_quotient", dec(o.a_quotient)},
            {"a_quotient_square", o.a_quotient_square},
            {"b_quotient", dec(o.b_quotient)},
            {"b_quotient_square", o.b_quotient_square}};
}

json to_json(const diophantine::VerificationReport& r) {
    json exceptions = json::array();
    for (const auto& c : r.expected_exceptions) exceptions.push_back(to_json(c));
    json violations = json::array();
    for (const auto& c : r.violations) violations.push_back(to_json(c));
    return {{"scope", diophantine::scope_name(r.scope)},
            {"bounds",
             {{"a_max", dec(r.bounds.a_max)},
              {"b_max", dec(r.bounds.b_max)},
              {"n_max", std::to_string(r.bounds.n_max)}}},
            {"pairs_checked", r.pairs_checked},
            {"instances_checked", r.instances_checked},
            {"expected_exceptions", exceptions},
            {"violations", violations}};
}

diophantine::SolutionCertificate certificate_from_json(const json& j) {
    return {nat(j, "a"), nat(j, "b"), uns(j, "n"), nat(j, "x"),
            nat(j, "D"), nat(j, "y"), nat(j, "z")};
}

diophantine::VerificationReport report_from_json(const json& j) {
    diophantine::VerificationReport r;
    auto scope = diophantine::scope_from_name(j.at("scope").get<std::string>());
    if (!scope) throw std::invalid_argument("unknown scope name in report");
    r.scope = *scope;
    const json& b = j.at("bounds");
    r.bounds = {nat(b, "a_max"), nat(b, "b_max"), uns(b, "n_max")};
    r.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
    r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
    for (const auto& c : j.at("expected_exceptions")) r.expected_exceptions.push_back(certificate_from_json(c));
    for (const auto& c : j.at("violations")) r.violations.push_back(certificate_from_json(c));
    return r;
}

}  // namespace diopell::json_io
