#pragma once

#include <json.hpp>

#include "pickpoly/engine.hpp"

namespace pickpoly::io {

using json = nlohmann::ordered_json;

json to_json(Complex z);
// {"re": .., "im": ..} with numbers or rational strings; a bare number is real.
Complex complex_from_json(const json& j);

json to_json(const mpoly::CPoly& q);
mpoly::CPoly poly_from_json(const json& j);

json to_json(const rif::Unimodular& u);
rif::Unimodular unimodular_from_json(const json& j);

json to_json(const rif::RationalInner& f);
// "verified" inputs are re-checked; Unknown demotes them to asserted.
rif::RationalInner inner_from_json(const json& j);

json to_json(const pick::BlaschkeProduct& b);
pick::BlaschkeProduct blaschke_from_json(const json& j);

json to_json(const pick::PsdVerdict& v);

json to_json(const engine::ProblemData& d);
engine::ProblemData problem_from_json(const json& j);

json to_json(const engine::CandidateH& h);
engine::CandidateH candidate_from_json(const json& j, std::size_t n);

json to_json(const engine::Interpolant& f);
engine::Interpolant interpolant_from_json(const json& j);

json to_json(const engine::VerifyReport& r);
json to_json(const rif::InnerReport& r);
json to_json(const engine::FeasibilityReport& r, bool timing = false);

const char* to_string(engine::CandidateSource s);
const char* to_string(mpoly::Irreducibility s);
const char* to_string(mpoly::ZeroFreeStatus s);

json read_json_file(const std::string& path);

}  // namespace pickpoly::io
