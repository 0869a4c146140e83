#include "mdscodex/serialize.hpp"

#include <stdexcept>

namespace mdscodex {

namespace {

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error("deserialize: " + msg);
}

std::string guarantee_name(PairGuarantee g) {
    switch (g) {
        case PairGuarantee::Nicely:
            return "nicely";
        case PairGuarantee::Germain:
            return "germain";
        case PairGuarantee::None:
            return "none";
    }
    return "none";
}

}  // namespace

Json field_to_json(const FieldSpec& field) {
    Json j;
    j["char"] = field.characteristic();
    j["degree"] = field.degree();
    if (field.kind() != FieldKind::Prime) j["modulus"] = field.modulus();
    return j;
}

const FieldSpec& field_from_json(const Json& j) {
    check(j.contains("char") && j.contains("degree"), "field object needs char and degree");
    const std::int64_t q = j.at("char").get<std::int64_t>();
    const int m = j.at("degree").get<int>();
    if (q == 0) {
        check(j.contains("modulus"), "cyclotomic field needs its modulus");
        const auto modulus = j.at("modulus").get<std::vector<std::int64_t>>();
        const std::int64_t p = static_cast<std::int64_t>(modulus.size());
        check(m == p - 1, "cyclotomic degree must be p-1");
        for (std::int64_t c : modulus) check(c == 1, "cyclotomic modulus must be Phi_p");
        return field_make_cyclotomic(p);
    }
    if (m == 1) return field_make(q, 1);
    check(j.contains("modulus"), "extension field needs a modulus");
    return field_make(q, m, j.at("modulus").get<std::vector<std::int64_t>>());
}

Json element_to_json(const FieldElement& e) {
    Json j = Json::array();
    if (e.field().kind() == FieldKind::Cyclotomic) {
        for (const Rational& c : e.rational_coeffs()) j.push_back(c.get_str());
    } else {
        for (std::int64_t c : e.finite_coeffs()) j.push_back(c);
    }
    return j;
}

FieldElement element_from_json(const FieldSpec& field, const Json& j) {
    check(j.is_array(), "element must be a coefficient array");
    if (field.kind() == FieldKind::Cyclotomic) {
        RationalCoeffs coeffs;
        for (const auto& c : j) {
            if (c.is_string()) {
                Rational r(c.get<std::string>());
                r.canonicalize();
                coeffs.push_back(std::move(r));
            } else {
                coeffs.emplace_back(c.get<std::int64_t>());
            }
        }
        return field.element(coeffs);
    }
    return field.element(j.get<std::vector<std::int64_t>>());
}

Json matrix_to_json(const MatrixF& m) {
    Json j = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m.at(r, c)));
        j.push_back(std::move(row));
    }
    return j;
}

MatrixF matrix_from_json(const FieldSpec& field, const Json& j) {
    check(j.is_array() && !j.empty() && j.at(0).is_array() && !j.at(0).empty(), "matrix must be a nested array");
    MatrixF m(field, static_cast<int>(j.size()), static_cast<int>(j.at(0).size()));
    for (std::size_t r = 0; r < j.size(); ++r) {
        check(j.at(r).size() == j.at(0).size(), "ragged matrix rows");
        for (std::size_t c = 0; c < j.at(r).size(); ++c) {
            m.set(static_cast<int>(r), static_cast<int>(c), element_from_json(field, j.at(r).at(c)));
        }
    }
    return m;
}

Json code_to_json(const LinearCode& code) {
    Json j;
    j["field"] = field_to_json(code.field());
    j["n"] = code.n();
    j["k"] = code.k();
    Json prov;
    if (code.provenance().kind == ProvenanceKind::UnitRows) {
        prov["unit-rows"] = code.provenance().indices;
    } else {
        prov["idempotent-indices"] = code.provenance().indices;
    }
    j["provenance"] = std::move(prov);
    j["omega"] = element_to_json(code.omega());
    j["generator"] = matrix_to_json(code.generator());
    j["check"] = matrix_to_json(code.check());
    if (auto d = code.cached_distance()) j["distance"] = *d;
    return j;
}

LinearCode code_from_json(const Json& j) {
    const FieldSpec& field = field_from_json(j.at("field"));
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    FieldElement omega = element_from_json(field, j.at("omega"));
    const Json& prov = j.at("provenance");

    std::optional<LinearCode> rebuilt;
    if (prov.contains("unit-rows")) {
        FourierMatrix fourier = fourier_build(field, n, omega);
        rebuilt = unit_code_build(fourier, prov.at("unit-rows").get<std::vector<int>>());
    } else if (prov.contains("idempotent-indices")) {
        IdempotentSet set = idempotent_set_build(field, n, omega);
        rebuilt = idempotent_code_build(set, prov.at("idempotent-indices").get<std::vector<int>>());
    } else {
        check(false, "unknown provenance kind");
    }

    check(rebuilt->k() == k, "stored k disagrees with the rebuilt code");
    check(matrix_from_json(field, j.at("generator")) == rebuilt->generator(),
          "stored generator disagrees with the rebuilt code");
    check(matrix_from_json(field, j.at("check")) == rebuilt->check(),
          "stored check matrix disagrees with the rebuilt code");
    if (j.contains("distance")) rebuilt->store_distance(j.at("distance").get<int>());
    return std::move(*rebuilt);
}

Json pair_to_json(const ErrorCorrectingPair& pair) {
    Json j;
    j["code"] = code_to_json(pair.code);
    j["t"] = pair.t;
    j["start"] = pair.start;
    j["step"] = pair.step;
    j["u_rows"] = pair.u_rows;
    j["v_rows"] = pair.v_rows;
    j["u_basis"] = matrix_to_json(pair.u_basis);
    j["v_basis"] = matrix_to_json(pair.v_basis);
    return j;
}

ErrorCorrectingPair pair_from_json(const Json& j) {
    LinearCode code = code_from_json(j.at("code"));
    check(code.provenance().kind == ProvenanceKind::UnitRows, "pair files require unit-row provenance");
    FourierMatrix fourier = fourier_build(code.field(), code.n(), code.omega());
    ErrorCorrectingPair pair =
        ecp_build(fourier, j.at("start").get<int>(), j.at("step").get<int>(), code.k());
    check(pair.t == j.at("t").get<int>(), "stored t disagrees with the rebuilt pair");
    check(pair.u_rows == j.at("u_rows").get<std::vector<int>>(), "stored u_rows disagree");
    check(pair.v_rows == j.at("v_rows").get<std::vector<int>>(), "stored v_rows disagree");
    check(matrix_from_json(code.field(), j.at("u_basis")) == pair.u_basis, "stored u_basis disagrees");
    check(matrix_from_json(code.field(), j.at("v_basis")) == pair.v_basis, "stored v_basis disagrees");
    return pair;
}

Json chebotarev_report_to_json(const ChebotarevReport& report) {
    Json j;
    j["holds"] = report.holds;
    j["submatrices_checked"] = report.submatrices_checked;
    if (report.witness.has_value()) {
        Json w;
        w["rows"] = report.witness->rows;
        w["cols"] = report.witness->cols;
        w["determinant"] = element_to_json(report.witness->det);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json isaacs_report_to_json(const IsaacsReport& report) {
    Json j;
    j["t"] = report.t;
    j["deg_h"] = report.deg_h;
    j["d"] = report.d;
    j["violates"] = report.violates;
    return j;
}

Json prime_pairs_to_json(const std::vector<PrimePair>& pairs) {
    Json j = Json::array();
    for (const auto& pair : pairs) {
        Json entry;
        entry["p"] = pair.p;
        entry["q"] = pair.q;
        entry["guarantee"] = guarantee_name(pair.guarantee);
        j.push_back(std::move(entry));
    }
    return j;
}

Json decode_result_to_json(const DecodeResult& result) {
    Json j;
    switch (result.status) {
        case DecodeStatus::NoError:
            j["status"] = "no-error";
            break;
        case DecodeStatus::Corrected:
            j["status"] = "corrected";
            break;
        case DecodeStatus::Failure:
            j["status"] = "failure";
            break;
    }
    auto vec = [](const std::optional<std::vector<FieldElement>>& v) -> Json {
        if (!v.has_value()) return nullptr;
        Json arr = Json::array();
        for (const auto& e : *v) arr.push_back(element_to_json(e));
        return arr;
    };
    j["codeword"] = vec(result.codeword);
    j["error_vector"] = vec(result.error_vector);
    j["error_positions"] = result.error_positions.has_value() ? Json(*result.error_positions) : Json(nullptr);
    return j;
}

Json ecp_conditions_to_json(const EcpConditions& conditions) {
    Json j;
    j["star_products_in_dual"] = conditions.star_products_in_dual;
    j["u_dimension"] = conditions.u_dimension;
    j["v_perp_distance"] = conditions.v_perp_distance;
    j["distance_sum"] = conditions.distance_sum;
    j["all"] = conditions.all();
    return j;
}

Json trial_report_to_json(const TrialReport& report) {
    Json j;
    j["trials"] = report.trials;
    j["failures"] = report.failures;
    Json buckets = Json::array();
    for (std::size_t w = 0; w < report.per_weight.size(); ++w) {
        Json b;
        b["weight"] = w;
        b["trials"] = report.per_weight[w].trials;
        b["failures"] = report.per_weight[w].failures;
        buckets.push_back(std::move(b));
    }
    j["per_weight"] = std::move(buckets);
    if (report.counterexample.has_value()) {
        Json c;
        c["message_index"] = report.counterexample->message_index;
        Json err = Json::array();
        for (const auto& e : report.counterexample->error) err.push_back(element_to_json(e));
        c["error"] = std::move(err);
        j["counterexample"] = std::move(c);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json channel_stats_to_json(const ChannelStats& stats) {
    Json j;
    j["trials"] = stats.trials;
    j["seed"] = stats.seed;
    Json buckets = Json::array();
    for (const auto& [weight, bucket] : stats.per_weight) {
        Json b;
        b["weight"] = weight;
        b["trials"] = bucket.trials;
        b["no_error"] = bucket.no_error;
        b["corrected"] = bucket.corrected;
        b["miscorrected"] = bucket.miscorrected;
        b["failed"] = bucket.failed;
        buckets.push_back(std::move(b));
    }
    j["per_weight"] = std::move(buckets);
    return j;
}

}  // namespace mdscodex
