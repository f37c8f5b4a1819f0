/*
   Copyright 2026 The polysep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYSEP_SERIALIZE_HPP
#define POLYSEP_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "polysep/eisenstein.hpp"
#include "polysep/family.hpp"
#include "polysep/poly.hpp"
#include "polysep/rootfind.hpp"
#include "polysep/sep.hpp"

namespace polysep {

using Json = nlohmann::ordered_json;

// Big numbers are serialized as decimal strings everywhere so consumers
// never overflow a native integer.

inline Json poly_json(const IntPolynomial& p) {
    Json j;
    j["degree"] = p.degree();
    Json coeffs = Json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline std::string rat_decimal(const BigRat& q, int digits = 40) {
    return Real::of(q, 256).str(digits);
}

inline Json prediction_json(const ClosePairPrediction& pr) {
    Json j;
    j["x0_mid"] = rat_decimal(pr.x0);
    j["delta0"] = pr.delta0.str(40);
    j["sep_pred"] = pr.sep_pred.str(40);
    j["exp_pred"] = rat_string(pr.exp_pred);
    return j;
}

inline Json instance_json(const FamilyInstance& inst) {
    Json j;
    j["d"] = inst.d;
    j["a"] = inst.a;
    j["degree"] = inst.poly.degree();
    Json coeffs = Json::array();
    for (const BigInt& c : inst.poly.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = std::move(coeffs);
    j["prediction"] = prediction_json(inst.prediction);
    return j;
}

inline Json rootset_json(const RootSet& rs) {
    Json j;
    j["prec_bits"] = rs.prec_bits;
    Json roots = Json::array();
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        Json r;
        r["re"] = rs.roots[i].re.str();
        r["im"] = rs.roots[i].im.str();
        r["radius"] = rs.error_radii[i].str();
        roots.push_back(std::move(r));
    }
    j["roots"] = std::move(roots);
    j["converged"] = rs.converged;
    return j;
}

inline Json report_json(const SepReport& rep) {
    Json j;
    j["d"] = rep.d;
    j["a"] = rep.a;
    j["monic_variant"] = rep.monic_variant;
    j["H"] = to_string(rep.H);
    j["sep"] = rep.sep.str();
    j["pair"] = {rep.pair.first, rep.pair.second};
    j["e"] = rep.e;
    j["e_pred"] = rat_string(rep.e_pred);
    j["sep_pred"] = rep.sep_pred.str(40);
    j["ratio"] = rep.ratio;
    if (rep.e_certified)
        j["e_certified"] = *rep.e_certified;
    else
        j["e_certified"] = nullptr;
    j["mahler_ok"] = rep.mahler_ok;
    j["disc_nonzero"] = rep.disc_nonzero;
    j["prec_bits"] = rep.prec_bits;
    if (rep.reciprocal) {
        Json r;
        r["pair_is_inverse"] = rep.reciprocal->pair_is_inverse;
        r["sep_identity_ratio"] = rep.reciprocal->sep_identity_ratio;
        r["inv_root_bound_ratio"] = rep.reciprocal->inv_root_bound_ratio;
        j["reciprocal_checks"] = std::move(r);
    }
    return j;
}

inline Json certificate_json(const EisensteinCertificate& cert) {
    Json e;
    e["prime"] = cert.prime;
    e["reciprocal"] = cert.applied_to_reciprocal;
    e["passed"] = cert.passed;
    if (cert.failing_condition) e["failing_condition"] = to_string(*cert.failing_condition);
    Json j;
    j["eisenstein"] = std::move(e);
    return j;
}

}  // namespace polysep

#endif
