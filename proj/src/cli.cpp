#include "mdscodex/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mdscodex/numutil.hpp"
#include "mdscodex/serialize.hpp"

namespace mdscodex {

namespace {

struct GlobalFlags {
    bool human = false;
    bool timestamps = false;
    std::uint64_t seed = 1;
};

struct FieldFlags {
    std::int64_t characteristic = -1;
    int degree = 1;
    std::string modulus;
};

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty entry in list '" + csv + "'");
        out.push_back(std::stoll(token));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<int> parse_index_list(const std::string& csv) {
    std::vector<int> out;
    for (std::int64_t v : parse_int_list(csv)) out.push_back(static_cast<int>(v));
    return out;
}

// Fields on the command line: --char 0 selects Q(w_p) for the ambient prime,
// otherwise Z_q / GF(q^m) with the optional explicit modulus.
const FieldSpec& resolve_field(const FieldFlags& flags, std::int64_t ambient_prime) {
    if (flags.characteristic == 0) {
        if (ambient_prime <= 0) {
            throw std::invalid_argument("--char 0 (cyclotomic rationals) needs --p or --n");
        }
        return field_make_cyclotomic(ambient_prime);
    }
    if (flags.characteristic < 0) throw std::invalid_argument("--char is required");
    std::optional<std::vector<std::int64_t>> modulus;
    if (!flags.modulus.empty()) modulus = parse_int_list(flags.modulus);
    return field_make(flags.characteristic, flags.degree, modulus);
}

std::optional<FieldElement> parse_omega(const FieldSpec& field, const std::string& csv) {
    if (csv.empty()) return std::nullopt;
    return field.element(parse_int_list(csv));
}

// Words arrive as comma-separated integers or as a JSON array (nested arrays
// address extension-field coefficients directly).
std::vector<FieldElement> parse_word(const FieldSpec& field, const std::string& text, int expected) {
    std::vector<FieldElement> out;
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && trimmed.front() == '[') {
        Json j = Json::parse(trimmed);
        for (const auto& entry : j) {
            if (entry.is_number_integer()) {
                out.push_back(field.from_integer(entry.get<std::int64_t>()));
            } else {
                out.push_back(element_from_json(field, entry));
            }
        }
    } else {
        for (std::int64_t v : parse_int_list(trimmed)) out.push_back(field.from_integer(v));
    }
    if (expected > 0 && static_cast<int>(out.size()) != expected) {
        throw std::invalid_argument("expected " + std::to_string(expected) + " symbols, got " +
                                    std::to_string(out.size()));
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// One exit point for every handler: validates first, then writes.
struct Emit {
    const GlobalFlags& flags;
    std::ostream& out;

    int operator()(Json j, const std::string& human_text, int code = 0,
                   const std::string& out_file = "") const {
        if (flags.timestamps && j.is_object()) j["timestamp"] = iso_timestamp();
        if (!out_file.empty()) {
            std::ofstream file(out_file);
            if (!file) throw std::invalid_argument("cannot write '" + out_file + "'");
            file << j.dump(2) << "\n";
        }
        if (flags.human) {
            out << human_text << "\n";
        } else {
            out << j.dump(2) << "\n";
        }
        return code;
    }
};

std::string human_witness(const ChebotarevReport& r) {
    std::ostringstream text;
    if (r.holds) {
        text << "chebotarev: holds (" << r.submatrices_checked << " submatrices checked)";
    } else {
        text << "chebotarev: FAILS after " << r.submatrices_checked << " submatrices; zero determinant at rows=[";
        for (std::size_t i = 0; i < r.witness->rows.size(); ++i) text << (i ? "," : "") << r.witness->rows[i];
        text << "] cols=[";
        for (std::size_t i = 0; i < r.witness->cols.size(); ++i) text << (i ? "," : "") << r.witness->cols[i];
        text << "]";
    }
    return text.str();
}

LinearCode load_code(const Json& j) {
    if (j.contains("code")) return code_from_json(j.at("code"));
    return code_from_json(j);
}

ErrorCorrectingPair load_or_build_pair(const Json& j) {
    if (j.contains("code")) return pair_from_json(j);
    LinearCode code = code_from_json(j);
    // An idempotent-derived code spans the same space as the unit-derived
    // code on the same indices, so both provenances decode through the pair
    // built on the Fourier rows.
    FourierMatrix fourier = fourier_build(code.field(), code.n(), code.omega());
    return ecp_build_for_code(fourier, code.provenance().indices);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact MDS codes from Fourier matrices and cyclic idempotents"};
    app.name("mdscodex");

    GlobalFlags flags;
    app.add_flag("--human", flags.human, "human-readable tables instead of JSON");
    app.add_flag("--timestamps", flags.timestamps, "append a timestamp field to reports");
    app.add_option("--seed", flags.seed, "seed for every randomized harness")->capture_default_str();
    app.fallthrough();
    app.require_subcommand(1);
    Emit emit{flags, out};

    int status = 0;
    auto run = [&status](auto&& fn) {
        return [&status, fn]() { status = fn(); };
    };

    // field ------------------------------------------------------------
    auto* field_cmd = app.add_subcommand("field", "construct and inspect fields");
    field_cmd->require_subcommand(1);

    {
        auto* make = field_cmd->add_subcommand("make", "build a field spec");
        auto ff = std::make_shared<FieldFlags>();
        auto cyclotomic_p = std::make_shared<std::int64_t>(0);
        make->add_option("--char", ff->characteristic, "prime characteristic (0 with --cyclotomic)");
        make->add_option("--degree", ff->degree, "extension degree")->capture_default_str();
        make->add_option("--modulus", ff->modulus, "monic modulus, little-endian comma list");
        make->add_option("--cyclotomic", *cyclotomic_p, "prime p for Q[x]/Phi_p");
        make->callback(run([=]() {
            const FieldSpec& field = *cyclotomic_p > 0 ? field_make_cyclotomic(*cyclotomic_p)
                                                       : resolve_field(*ff, 0);
            return emit(field_to_json(field), field.describe());
        }));
    }
    {
        auto* root = field_cmd->add_subcommand("root", "deterministic root of unity of order p");
        auto ff = std::make_shared<FieldFlags>();
        auto p = std::make_shared<std::int64_t>(0);
        auto omega = std::make_shared<std::string>();
        root->add_option("--char", ff->characteristic, "field characteristic")->required();
        root->add_option("--degree", ff->degree, "extension degree");
        root->add_option("--modulus", ff->modulus, "explicit modulus");
        root->add_option("--p", *p, "order of the requested root")->required();
        root->add_option("--omega", *omega, "override element to validate");
        root->callback(run([=]() {
            const FieldSpec& field = resolve_field(*ff, *p);
            FieldElement w = field.kind() == FieldKind::Cyclotomic
                                 ? fourier_build(field, *p, parse_omega(field, *omega)).omega
                                 : find_root_of_unity(field, *p, parse_omega(field, *omega));
            Json j;
            j["field"] = field_to_json(field);
            j["p"] = *p;
            j["omega"] = element_to_json(w);
            return emit(j, field.describe() + ": omega = " + w.to_string());
        }));
    }
    {
        auto* order = field_cmd->add_subcommand("order", "multiplicative order of an element");
        auto ff = std::make_shared<FieldFlags>();
        auto element = std::make_shared<std::string>();
        order->add_option("--char", ff->characteristic, "field characteristic")->required();
        order->add_option("--degree", ff->degree, "extension degree");
        order->add_option("--modulus", ff->modulus, "explicit modulus");
        order->add_option("--element", *element, "element coefficients")->required();
        order->callback(run([=]() {
            const FieldSpec& field = resolve_field(*ff, 0);
            FieldElement a = field.element(parse_int_list(*element));
            Json j;
            j["element"] = element_to_json(a);
            j["order"] = element_order(a);
            return emit(j, "order " + std::to_string(element_order(a)));
        }));
    }

    // fourier ------------------------------------------------------------
    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier matrices and Chebotarev checks");
    fourier_cmd->require_subcommand(1);

    {
        auto* build = fourier_cmd->add_subcommand("build", "construct F_p with its inverse");
        auto ff = std::make_shared<FieldFlags>();
        auto p = std::make_shared<std::int64_t>(0);
        auto omega = std::make_shared<std::string>();
        build->add_option("--char", ff->characteristic, "field characteristic (0 for Q(w))")->required();
        build->add_option("--degree", ff->degree, "extension degree");
        build->add_option("--modulus", ff->modulus, "explicit modulus");
        build->add_option("--p", *p, "matrix size, prime")->required();
        build->add_option("--omega", *omega, "root of unity override");
        build->callback(run([=]() {
            const FieldSpec& field = resolve_field(*ff, *p);
            FourierMatrix f = fourier_build(field, *p, parse_omega(field, *omega));
            Json j;
            j["field"] = field_to_json(field);
            j["p"] = f.p;
            j["omega"] = element_to_json(f.omega);
            j["forward"] = matrix_to_json(f.forward);
            j["inverse"] = matrix_to_json(f.inverse);
            return emit(j, "F_" + std::to_string(f.p) + " over " + field.describe() +
                               ", omega = " + f.omega.to_string());
        }));
    }
    {
        auto* check = fourier_cmd->add_subcommand("check", "exhaustive Chebotarev verification");
        auto ff = std::make_shared<FieldFlags>();
        auto p = std::make_shared<std::int64_t>(0);
        auto omega = std::make_shared<std::string>();
        auto max_order = std::make_shared<int>(0);
        auto jobs = std::make_shared<int>(1);
        auto force = std::make_shared<bool>(false);
        check->add_option("--char", ff->characteristic, "field characteristic (0 for Q(w))")->required();
        check->add_option("--degree", ff->degree, "extension degree");
        check->add_option("--modulus", ff->modulus, "explicit modulus");
        check->add_option("--p", *p, "matrix size, prime")->required();
        check->add_option("--omega", *omega, "root of unity override");
        check->add_option("--max-order", *max_order, "scan submatrices up to this size only");
        check->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
        check->add_flag("--force", *force, "allow scans beyond the default budget");
        check->callback(run([=]() {
            const FieldSpec& field = resolve_field(*ff, *p);
            FourierMatrix f = fourier_build(field, *p, parse_omega(field, *omega));
            ChebotarevOptions opts;
            if (*max_order > 0) opts.max_order = *max_order;
            opts.jobs = *jobs;
            opts.force = *force;
            ChebotarevReport report = chebotarev_check(f.forward, opts);
            return emit(chebotarev_report_to_json(report), human_witness(report), report.holds ? 0 : 1);
        }));
    }
    {
        auto* scan = fourier_cmd->add_subcommand("scan", "prime pairs with their guarantees");
        auto p_max = std::make_shared<std::int64_t>(0);
        auto q_max = std::make_shared<std::int64_t>(0);
        scan->add_option("--p-max", *p_max, "largest matrix prime")->required();
        scan->add_option("--q-max", *q_max, "largest characteristic")->required();
        scan->callback(run([=]() {
            auto pairs = scan_prime_pairs(*p_max, *q_max);
            std::ostringstream text;
            text << "p\tq\tguarantee";
            for (const auto& pr : pairs) {
                text << "\n" << pr.p << "\t" << pr.q << "\t"
                     << (pr.guarantee == PairGuarantee::Germain
                             ? "germain"
                             : pr.guarantee == PairGuarantee::Nicely ? "nicely" : "none");
            }
            return emit(prime_pairs_to_json(pairs), text.str());
        }));
    }
    {
        auto* isaacs = fourier_cmd->add_subcommand("isaacs", "support-versus-span criterion for one f");
        auto ff = std::make_shared<FieldFlags>();
        auto p = std::make_shared<std::int64_t>(0);
        auto poly = std::make_shared<std::string>();
        isaacs->add_option("--char", ff->characteristic, "base field characteristic")->required();
        isaacs->add_option("--degree", ff->degree, "extension degree");
        isaacs->add_option("--modulus", ff->modulus, "explicit modulus");
        isaacs->add_option("--p", *p, "group order, prime")->required();
        isaacs->add_option("--poly", *poly, "f as a little-endian coefficient list")->required();
        isaacs->callback(run([=]() {
            const FieldSpec& field = resolve_field(*ff, 0);
            IsaacsReport r = isaacs_criterion(Poly::from_integers(field, parse_int_list(*poly)), *p);
            std::ostringstream text;
            text << "t=" << r.t << " deg_h=" << r.deg_h << " d=" << r.d
                 << (r.violates ? " VIOLATES (Chebotarev fails over extensions with p-th roots)"
                                : " consistent");
            return emit(isaacs_report_to_json(r), text.str());
        }));
    }

    // idem ------------------------------------------------------------
    auto* idem_cmd = app.add_subcommand("idem", "circulant idempotent families");
    idem_cmd->require_subcommand(1);

    {
        auto* build = idem_cmd->add_subcommand("build", "construct and verify E_0..E_{n-1}");
        auto ff = std::make_shared<FieldFlags>();
        auto n = std::make_shared<std::int64_t>(0);
        auto omega = std::make_shared<std::string>();
        build->add_option("--char", ff->characteristic, "field characteristic (0 for Q(w))")->required();
        build->add_option("--degree", ff->degree, "extension degree");
        build->add_option("--modulus", ff->modulus, "explicit modulus");
        build->add_option("--n", *n, "group order")->required();
        build->add_option("--omega", *omega, "root of unity override");
        build->callback(run([=]() {
            const FieldSpec& field = resolve_field(*ff, *n);
            FieldElement w = field.kind() == FieldKind::Cyclotomic
                                 ? (parse_omega(field, *omega).value_or(field.generator_x()))
                                 : find_root_of_unity(field, *n, parse_omega(field, *omega));
            IdempotentSet set = idempotent_set_build(field, *n, w);
            Json j;
            j["field"] = field_to_json(field);
            j["n"] = set.n;
            j["omega"] = element_to_json(set.omega);
            Json members = Json::array();
            for (const auto& e : set.members) members.push_back(matrix_to_json(e));
            j["members"] = std::move(members);
            return emit(j, "complete orthogonal set of " + std::to_string(set.n) + " idempotents over " +
                               field.describe());
        }));
    }
    {
        auto* code_sub = idem_cmd->add_subcommand("code", "code from an idempotent index subset");
        auto ff = std::make_shared<FieldFlags>();
        auto n = std::make_shared<std::int64_t>(0);
        auto omega = std::make_shared<std::string>();
        auto indices = std::make_shared<std::string>();
        auto out_file = std::make_shared<std::string>();
        code_sub->add_option("--char", ff->characteristic, "field characteristic (0 for Q(w))")->required();
        code_sub->add_option("--degree", ff->degree, "extension degree");
        code_sub->add_option("--modulus", ff->modulus, "explicit modulus");
        code_sub->add_option("--n", *n, "group order")->required();
        code_sub->add_option("--omega", *omega, "root of unity override");
        code_sub->add_option("--indices", *indices, "idempotent indices, e.g. 0,1,2")->required();
        code_sub->add_option("--out", *out_file, "also write the code file here");
        code_sub->callback(run([=]() {
            const FieldSpec& field = resolve_field(*ff, *n);
            FieldElement w = field.kind() == FieldKind::Cyclotomic
                                 ? (parse_omega(field, *omega).value_or(field.generator_x()))
                                 : find_root_of_unity(field, *n, parse_omega(field, *omega));
            IdempotentSet set = idempotent_set_build(field, *n, w);
            LinearCode code = idempotent_code_build(set, parse_index_list(*indices));
            return emit(code_to_json(code),
                        "(" + std::to_string(code.n()) + "," + std::to_string(code.k()) + ") code over " +
                            field.describe(),
                        0, *out_file);
        }));
    }

    // code ------------------------------------------------------------
    auto* code_cmd = app.add_subcommand("code", "unit-derived codes and their parameters");
    code_cmd->require_subcommand(1);

    {
        auto* build = code_cmd->add_subcommand("build", "code from Fourier matrix rows");
        auto ff = std::make_shared<FieldFlags>();
        auto p = std::make_shared<std::int64_t>(0);
        auto omega = std::make_shared<std::string>();
        auto rows = std::make_shared<std::string>();
        auto out_file = std::make_shared<std::string>();
        build->add_option("--p", *p, "matrix size, prime")->required();
        build->add_option("--char", ff->characteristic, "field characteristic (0 for Q(w))")->required();
        build->add_option("--degree", ff->degree, "extension degree");
        build->add_option("--modulus", ff->modulus, "explicit modulus");
        build->add_option("--omega", *omega, "root of unity override");
        build->add_option("--rows", *rows, "generator row indices, e.g. 0,1,2")->required();
        build->add_option("--out", *out_file, "also write the code file here");
        build->callback(run([=]() {
            const FieldSpec& field = resolve_field(*ff, *p);
            FourierMatrix f = fourier_build(field, *p, parse_omega(field, *omega));
            LinearCode code = unit_code_build(f, parse_index_list(*rows));
            return emit(code_to_json(code),
                        "(" + std::to_string(code.n()) + "," + std::to_string(code.k()) + ") code over " +
                            field.describe(),
                        0, *out_file);
        }));
    }
    {
        auto* distance = code_cmd->add_subcommand("distance", "exact minimum distance");
        auto file = std::make_shared<std::string>();
        auto budget = std::make_shared<std::uint64_t>(0);
        distance->add_option("file", *file, "code file")->required();
        distance->add_option("--budget", *budget, "column-subset budget per size class");
        distance->callback(run([=]() {
            LinearCode code = load_code(load_json_file(*file));
            int d = min_distance(code, *budget > 0 ? std::optional<std::uint64_t>(*budget) : std::nullopt);
            Json j;
            j["n"] = code.n();
            j["k"] = code.k();
            j["distance"] = d;
            return emit(j, "distance " + std::to_string(d));
        }));
    }
    {
        auto* mds = code_cmd->add_subcommand("mds", "certify the Singleton bound is attained");
        auto file = std::make_shared<std::string>();
        auto budget = std::make_shared<std::uint64_t>(0);
        mds->add_option("file", *file, "code file")->required();
        mds->add_option("--budget", *budget, "column-subset budget per size class");
        mds->callback(run([=]() {
            LinearCode code = load_code(load_json_file(*file));
            int d = min_distance(code, *budget > 0 ? std::optional<std::uint64_t>(*budget) : std::nullopt);
            const bool ok = d == code.n() - code.k() + 1;
            Json j;
            j["n"] = code.n();
            j["k"] = code.k();
            j["distance"] = d;
            j["mds"] = ok;
            return emit(j, ok ? "mds: yes" : "mds: NO (distance " + std::to_string(d) + ")", ok ? 0 : 1);
        }));
    }
    {
        auto* enc = code_cmd->add_subcommand("encode", "message times generator");
        auto file = std::make_shared<std::string>();
        auto message = std::make_shared<std::string>();
        enc->add_option("file", *file, "code file")->required();
        enc->add_option("--message", *message, "k symbols")->required();
        enc->callback(run([=]() {
            LinearCode code = load_code(load_json_file(*file));
            auto msg = parse_word(code.field(), *message, code.k());
            auto word = encode(code, msg);
            Json j;
            j["message"] = Json::array();
            for (const auto& e : msg) j["message"].push_back(element_to_json(e));
            j["codeword"] = Json::array();
            for (const auto& e : word) j["codeword"].push_back(element_to_json(e));
            std::ostringstream text;
            text << "codeword:";
            for (const auto& e : word) text << " " << e.to_string();
            return emit(j, text.str());
        }));
    }
    {
        auto* dual = code_cmd->add_subcommand("dual", "dual code via the index involution");
        auto file = std::make_shared<std::string>();
        auto out_file = std::make_shared<std::string>();
        dual->add_option("file", *file, "code file")->required();
        dual->add_option("--out", *out_file, "also write the dual code file here");
        dual->callback(run([=]() {
            LinearCode code = load_code(load_json_file(*file));
            std::vector<int> dual_rows = dual_row_indices(code.provenance().indices, code.n());
            LinearCode dual_code = [&]() {
                if (code.provenance().kind == ProvenanceKind::UnitRows) {
                    FourierMatrix f = fourier_build(code.field(), code.n(), code.omega());
                    return unit_code_build(f, dual_rows);
                }
                IdempotentSet set = idempotent_set_build(code.field(), code.n(), code.omega());
                return idempotent_code_build(set, dual_rows);
            }();
            // the dual generator must annihilate the primal generator
            if (!(code.generator() * dual_code.generator().transpose()).is_zero()) {
                throw std::runtime_error("dual verification failed");
            }
            Json j = code_to_json(dual_code);
            std::ostringstream text;
            text << "dual rows:";
            for (int r : dual_rows) text << " " << r;
            return emit(j, text.str(), 0, *out_file);
        }));
    }
    {
        auto* enumerate = code_cmd->add_subcommand("enum", "stream all size-r row subsets as codes");
        auto ff = std::make_shared<FieldFlags>();
        auto p = std::make_shared<std::int64_t>(0);
        auto omega = std::make_shared<std::string>();
        auto r = std::make_shared<int>(0);
        auto limit = std::make_shared<std::uint64_t>(0);
        enumerate->add_option("--p", *p, "matrix size, prime")->required();
        enumerate->add_option("--char", ff->characteristic, "field characteristic (0 for Q(w))")->required();
        enumerate->add_option("--degree", ff->degree, "extension degree");
        enumerate->add_option("--modulus", ff->modulus, "explicit modulus");
        enumerate->add_option("--omega", *omega, "root of unity override");
        enumerate->add_option("--r", *r, "code dimension")->required();
        enumerate->add_option("--limit", *limit, "emit at most this many codes");
        enumerate->callback(run([=, &out, &flags]() {
            const FieldSpec& field = resolve_field(*ff, *p);
            FourierMatrix f = fourier_build(field, *p, parse_omega(field, *omega));
            std::optional<std::uint64_t> cap;
            if (*limit > 0) cap = *limit;
            // one code per line so streams can be counted and filtered
            for_each_code(f, *r, cap, [&](const LinearCode& code) {
                if (flags.human) {
                    out << "(" << code.n() << "," << code.k() << ") rows=[";
                    const auto& idx = code.provenance().indices;
                    for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
                    out << "]\n";
                } else {
                    out << code_to_json(code).dump() << "\n";
                }
            });
            return 0;
        }));
    }

    // decode ------------------------------------------------------------
    auto* decode_cmd = app.add_subcommand("decode", "error-correcting pairs and harnesses");
    decode_cmd->require_subcommand(1);

    {
        auto* build = decode_cmd->add_subcommand("ecp-build", "pair for a progression row-set code");
        auto file = std::make_shared<std::string>();
        auto out_file = std::make_shared<std::string>();
        build->add_option("file", *file, "code file (unit-row provenance)")->required();
        build->add_option("--out", *out_file, "also write the pair file here");
        build->callback(run([=]() {
            ErrorCorrectingPair pair = load_or_build_pair(load_json_file(*file));
            EcpConditions conditions = ecp_verify(pair);
            Json j = pair_to_json(pair);
            j["conditions"] = ecp_conditions_to_json(conditions);
            return emit(j,
                        "t=" + std::to_string(pair.t) + " pair for the (" + std::to_string(pair.code.n()) +
                            "," + std::to_string(pair.code.k()) + ") code",
                        conditions.all() ? 0 : 1, *out_file);
        }));
    }
    {
        auto* runc = decode_cmd->add_subcommand("run", "decode one received word");
        auto file = std::make_shared<std::string>();
        auto received = std::make_shared<std::string>();
        runc->add_option("file", *file, "code or pair file")->required();
        runc->add_option("--received", *received, "n symbols, comma list or JSON array")->required();
        runc->callback(run([=]() {
            ErrorCorrectingPair pair = load_or_build_pair(load_json_file(*file));
            auto word = parse_word(pair.code.field(), *received, pair.code.n());
            DecodeResult result = ecp_decode(pair, word);
            std::ostringstream text;
            switch (result.status) {
                case DecodeStatus::NoError:
                    text << "no error";
                    break;
                case DecodeStatus::Corrected: {
                    text << "corrected positions";
                    for (int pos : *result.error_positions) text << " " << pos;
                    break;
                }
                case DecodeStatus::Failure:
                    text << "failure: more than t errors or inconsistent locator";
                    break;
            }
            return emit(decode_result_to_json(result), text.str(),
                        result.status == DecodeStatus::Failure ? 1 : 0);
        }));
    }
    {
        auto* exhaust = decode_cmd->add_subcommand("exhaust", "decode every pattern up to a weight");
        auto file = std::make_shared<std::string>();
        auto max_weight = std::make_shared<int>(0);
        auto jobs = std::make_shared<int>(1);
        auto messages = std::make_shared<std::uint64_t>(1);
        auto budget = std::make_shared<std::uint64_t>(0);
        exhaust->add_option("file", *file, "code or pair file")->required();
        exhaust->add_option("--max-weight", *max_weight, "largest error weight")->required();
        exhaust->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
        exhaust->add_option("--messages", *messages, "number of sampled messages (zero message first)")
            ->capture_default_str();
        exhaust->add_option("--budget", *budget, "pattern budget");
        exhaust->callback(run([=, &flags]() {
            ErrorCorrectingPair pair = load_or_build_pair(load_json_file(*file));
            auto msgs = sample_messages(pair.code, *messages, flags.seed);
            TrialReport report = exhaustive_trial(pair, *max_weight, msgs, *jobs,
                                                  *budget > 0 ? std::optional<std::uint64_t>(*budget)
                                                              : std::nullopt);
            std::ostringstream text;
            text << report.trials << " trials, " << report.failures << " failures";
            return emit(trial_report_to_json(report), text.str(), report.failures == 0 ? 0 : 1);
        }));
    }
    {
        auto* simulate = decode_cmd->add_subcommand("simulate", "seeded random channel");
        auto file = std::make_shared<std::string>();
        auto trials = std::make_shared<std::uint64_t>(0);
        auto weight = std::make_shared<int>(-1);
        auto weight_min = std::make_shared<int>(-1);
        auto weight_max = std::make_shared<int>(-1);
        simulate->add_option("file", *file, "code or pair file")->required();
        simulate->add_option("--trials", *trials, "number of trials")->required();
        simulate->add_option("--weight", *weight, "fixed error weight (default t)");
        simulate->add_option("--weight-min", *weight_min, "uniform weight range lower bound");
        simulate->add_option("--weight-max", *weight_max, "uniform weight range upper bound");
        simulate->callback(run([=, &flags]() {
            ErrorCorrectingPair pair = load_or_build_pair(load_json_file(*file));
            WeightDistribution dist{pair.t, pair.t};
            if (*weight >= 0) {
                dist = {*weight, *weight};
            }
            if (*weight_min >= 0 || *weight_max >= 0) {
                if (*weight_min < 0 || *weight_max < 0) {
                    throw std::invalid_argument("--weight-min and --weight-max go together");
                }
                dist = {*weight_min, *weight_max};
            }
            ChannelStats stats = channel_simulate(pair, *trials, dist, flags.seed);
            std::ostringstream text;
            text << stats.trials << " trials (seed " << stats.seed << ")";
            for (const auto& [w, bucket] : stats.per_weight) {
                text << "\n  weight " << w << ": " << bucket.corrected << " corrected, "
                     << bucket.no_error << " clean, " << bucket.miscorrected << " miscorrected, "
                     << bucket.failed << " failed";
            }
            return emit(channel_stats_to_json(stats), text.str());
        }));
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

}  // namespace mdscodex
