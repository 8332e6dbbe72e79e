#include "monocert/json_io.hpp"

#include "monocert/errors.hpp"
#include "monocert/rational.hpp"

namespace mono::jsonio {

namespace {

json word_to_json(const certify::Word& w) { return json(w); }

certify::Word word_from_json(const json& j) { return j.get<certify::Word>(); }

json span_witness_to_json(const certify::SpanWitness& w) {
    return json{{"seed", w.seed}, {"word", word_to_json(w.word)}};
}

certify::SpanWitness span_witness_from_json(const json& j) {
    return {j.at("seed").get<long>(), word_from_json(j.at("word"))};
}

json infinite_to_json(const certify::InfiniteOrderResult& r) {
    json j{{"proven", r.proven}, {"word", word_to_json(r.word)}, {"reason", r.reason}};
    j["element"] = r.element ? matrix_to_json(*r.element) : json(nullptr);
    return j;
}

certify::InfiniteOrderResult infinite_from_json(const json& j) {
    certify::InfiniteOrderResult r;
    r.proven = j.at("proven").get<bool>();
    r.word = word_from_json(j.at("word"));
    r.reason = j.at("reason").get<std::string>();
    if (!j.at("element").is_null()) r.element = matrix_from_json(j.at("element"));
    return r;
}

json rep_checks_to_json(const certify::RepChecks& rc) {
    json witnesses = json::array();
    for (const auto& w : rc.span_witnesses) witnesses.push_back(span_witness_to_json(w));
    json basis = json::array();
    for (const auto& v : rc.proper_closure_basis) basis.push_back(vec_to_json(v));
    return json{{"dim", rc.dim},
                {"span_full", rc.span_full},
                {"span_budget_exhausted", rc.span_budget_exhausted},
                {"span_dim", rc.span_dim},
                {"seed_count", rc.seed_count},
                {"span_witnesses", witnesses},
                {"closure_dims", rc.closure_dims},
                {"allowed_closure_dims", rc.allowed_closure_dims},
                {"closures_ok", rc.closures_ok},
                {"proper_closure_basis", basis},
                {"infinite", infinite_to_json(rc.infinite)},
                {"ok", rc.ok}};
}

certify::RepChecks rep_checks_from_json(const json& j) {
    certify::RepChecks rc;
    rc.dim = j.at("dim").get<long>();
    rc.span_full = j.at("span_full").get<bool>();
    rc.span_budget_exhausted = j.at("span_budget_exhausted").get<bool>();
    rc.span_dim = j.at("span_dim").get<long>();
    rc.seed_count = j.at("seed_count").get<long>();
    for (const auto& w : j.at("span_witnesses")) rc.span_witnesses.push_back(span_witness_from_json(w));
    rc.closure_dims = j.at("closure_dims").get<std::vector<long>>();
    rc.allowed_closure_dims = j.at("allowed_closure_dims").get<std::vector<long>>();
    rc.closures_ok = j.at("closures_ok").get<bool>();
    for (const auto& v : j.at("proper_closure_basis")) rc.proper_closure_basis.push_back(vec_from_json(v));
    rc.infinite = infinite_from_json(j.at("infinite"));
    rc.ok = j.at("ok").get<bool>();
    return rc;
}

json meridian_to_json(const certify::MeridianRecord& m) {
    return json{{"index", m.index},
                {"type", certify::reflection_type_name(m.type)},
                {"order", m.order},
                {"eigenvalue", cyclo_to_json(m.eigenvalue)},
                {"self_pairing", cyclo_to_json(m.self_pairing)}};
}

certify::MeridianRecord meridian_from_json(const json& j) {
    certify::MeridianRecord m;
    m.index = j.at("index").get<long>();
    m.type = certify::reflection_type_from_name(j.at("type").get<std::string>());
    m.order = j.at("order").get<long>();
    m.eigenvalue = cyclo_from_json(j.at("eigenvalue"));
    m.self_pairing = cyclo_from_json(j.at("self_pairing"));
    return m;
}

}  // namespace

json cyclo_to_json(const CycloNum& a) {
    json coeffs = json::array();
    for (const Rat& c : a.coeffs()) coeffs.push_back(rat_to_string(c));
    return json{{"conductor", a.conductor()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const json& j) {
    const long n = j.at("conductor").get<long>();
    std::vector<Rat> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(rat_from_string(s.get<std::string>()));
    return CycloNum::from_coeffs(n, std::move(coeffs));
}

json vec_to_json(const Vec& v) {
    json entries = json::array();
    for (const CycloNum& c : v) entries.push_back(cyclo_to_json(c));
    return json{{"dim", v.size()}, {"entries", entries}};
}

Vec vec_from_json(const json& j) {
    Vec v;
    for (const auto& e : j.at("entries")) v.push_back(cyclo_from_json(e));
    if (j.at("dim").get<std::size_t>() != v.size())
        throw BadParameters("vector dim field disagrees with entry count");
    return v;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j2 = 0; j2 < m.cols(); ++j2) {
            json coeffs = json::array();
            for (const Rat& c : m.at(i, j2).coeffs()) coeffs.push_back(rat_to_string(c));
            row.push_back(coeffs);
        }
        rows.push_back(row);
    }
    return json{
        {"rows", m.rows()}, {"cols", m.cols()}, {"conductor", m.conductor()}, {"entries", rows}};
}

Matrix matrix_from_json(const json& j) {
    const long rows = j.at("rows").get<long>();
    const long cols = j.at("cols").get<long>();
    const long n = j.at("conductor").get<long>();
    const auto& entries = j.at("entries");
    if (static_cast<long>(entries.size()) != rows)
        throw BadParameters("matrix row count disagrees with entries");
    Matrix m(rows, cols, n);
    for (long i = 0; i < rows; ++i) {
        const auto& row = entries[static_cast<std::size_t>(i)];
        if (static_cast<long>(row.size()) != cols)
            throw BadParameters("matrix column count disagrees with entries");
        for (long c = 0; c < cols; ++c) {
            std::vector<Rat> coeffs;
            for (const auto& s : row[static_cast<std::size_t>(c)])
                coeffs.push_back(rat_from_string(s.get<std::string>()));
            m.set(i, c, CycloNum::from_coeffs(n, std::move(coeffs)));
        }
    }
    return m;
}

json pl_datum_to_json(const pham::PLDatum& d) {
    return json{{"c", cyclo_to_json(d.c)},
                {"self_pairing", cyclo_to_json(d.self_pairing)},
                {"eigenvalue", cyclo_to_json(d.eigenvalue)}};
}

pham::PLDatum pl_datum_from_json(const json& j) {
    return {cyclo_from_json(j.at("c")), cyclo_from_json(j.at("self_pairing")),
            cyclo_from_json(j.at("eigenvalue"))};
}

json params_to_json(const invariants::Params& p) {
    return json{{"n", p.n}, {"m", p.m}, {"r", p.r}, {"i", p.i}};
}

invariants::Params params_from_json(const json& j) {
    return {j.at("n").get<long>(), j.at("m").get<long>(), j.at("r").get<long>(),
            j.at("i").get<long>()};
}

json certificate_to_json(const certify::DensityCertificate& c) {
    json meridians = json::array();
    for (const auto& m : c.meridians) meridians.push_back(meridian_to_json(m));
    json j{{"params", params_to_json(c.params)},
           {"status", c.status},
           {"verdict", c.verdict},
           {"mode", c.mode},
           {"assumptions", c.assumptions},
           {"failures", c.failures},
           {"rep_dim", c.rep_dim},
           {"wedge_order", c.wedge_order},
           {"burau_parameter", c.burau_parameter},
           {"signature_target", {c.signature_target.first, c.signature_target.second}},
           {"signature_computed", {c.signature_computed.first, c.signature_computed.second}},
           {"meridians", meridians},
           {"base", rep_checks_to_json(c.base)},
           {"dichotomy_applicable", c.dichotomy_applicable},
           {"dichotomy_ok", c.dichotomy_ok},
           {"isotypic_dims", c.isotypic_dims},
           {"word_budget", c.word_budget},
           {"precision_bits", c.precision_bits}};
    j["pl_meridian"] = c.pl_meridian ? pl_datum_to_json(*c.pl_meridian) : json(nullptr);
    j["wedge"] = c.wedge ? rep_checks_to_json(*c.wedge) : json(nullptr);
    return j;
}

certify::DensityCertificate certificate_from_json(const json& j) {
    certify::DensityCertificate c;
    c.params = params_from_json(j.at("params"));
    c.status = j.at("status").get<std::string>();
    c.verdict = j.at("verdict").get<std::string>();
    c.mode = j.at("mode").get<std::string>();
    c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    c.failures = j.at("failures").get<std::vector<std::string>>();
    c.rep_dim = j.at("rep_dim").get<long>();
    c.wedge_order = j.at("wedge_order").get<long>();
    c.burau_parameter = j.at("burau_parameter").get<std::string>();
    c.signature_target = {j.at("signature_target")[0].get<long>(),
                          j.at("signature_target")[1].get<long>()};
    c.signature_computed = {j.at("signature_computed")[0].get<long>(),
                            j.at("signature_computed")[1].get<long>()};
    for (const auto& m : j.at("meridians")) c.meridians.push_back(meridian_from_json(m));
    if (!j.at("pl_meridian").is_null()) c.pl_meridian = pl_datum_from_json(j.at("pl_meridian"));
    c.base = rep_checks_from_json(j.at("base"));
    if (!j.at("wedge").is_null()) c.wedge = rep_checks_from_json(j.at("wedge"));
    c.dichotomy_applicable = j.at("dichotomy_applicable").get<bool>();
    c.dichotomy_ok = j.at("dichotomy_ok").get<bool>();
    c.isotypic_dims = j.at("isotypic_dims").get<std::vector<long>>();
    c.word_budget = j.at("word_budget").get<long>();
    c.precision_bits = j.at("precision_bits").get<unsigned>();
    return c;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mono::jsonio
