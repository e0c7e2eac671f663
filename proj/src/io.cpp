#include "distvar/io.hpp"

#include <fstream>
#include <sstream>

#include "distvar/errors.hpp"

namespace distvar::io {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::size_t count_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
        bad(std::string("missing or invalid \"") + key + "\"");
    return j[key].get<std::size_t>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
    return j[key];
}

std::string num(double x) { return json(x).dump(); }

json certificate_list(const std::vector<CertificateRecord>& ev) {
    json out = json::array();
    for (const auto& r : ev)
        out.push_back({{"name", r.name}, {"value", r.value}, {"threshold", r.threshold},
                       {"pass", r.pass}});
    return out;
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const ModelTriple& t) {
    return {{"dim", t.dim()}, {"P", to_json(t.p())}, {"U", to_json(t.u())}};
}

json to_json(const ModelTuple& t) {
    json ps = json::array(), us = json::array();
    for (const auto& p : t.ps()) ps.push_back(to_json(p));
    for (const auto& u : t.us()) us.push_back(to_json(u));
    return {{"dim", t.dim()}, {"d", t.d()}, {"P_list", ps}, {"U_list", us}};
}

json to_json(const Colligation& c) {
    return {{"dim_e", c.dim_e}, {"dim_h", c.dim_h}, {"A", to_json(c.a)},
            {"B", to_json(c.b)}, {"C", to_json(c.c)}, {"D", to_json(c.d)}};
}

json to_json(const BivariatePoly& p) {
    json rows = json::array();
    for (const auto& r : p.coeffs) {
        json row = json::array();
        for (const cplx c : r) row.push_back(to_json(c));
        rows.push_back(std::move(row));
    }
    return {{"deg1", p.deg1()}, {"deg2", p.deg2()}, {"coeffs", rows}};
}

json to_json(const ValidationReport& r) {
    json items = json::array();
    for (const auto& it : r.items)
        items.push_back({{"name", it.name}, {"defect", it.defect}, {"tol", it.tol}, {"ok", it.ok}});
    return {{"ok", r.ok}, {"items", items}};
}

json to_json(const CertificateBundle& b) {
    return {{"compatible", b.compatible},
            {"nonconstant", b.nonconstant},
            {"max_nu_phi1", b.max_nu_phi1},
            {"max_nu_phi2", b.max_nu_phi2},
            {"spread1", b.spread1},
            {"spread2", b.spread2},
            {"open_points", b.open_points},
            {"mixed_points", b.mixed_points},
            {"verdict", std::string(to_string(b.verdict))},
            {"evidence", certificate_list(b.evidence)}};
}

json to_json(const TupleCertificate& c) {
    json out = points_to_json(c.points, c.verdict);
    out["compatible"] = c.compatible;
    out["nonconstant"] = c.nonconstant;
    out["pure"] = c.pure;
    out["max_nu"] = c.max_nu;
    out["spreads"] = c.spreads;
    out["max_fiber_size"] = c.max_fiber_size;
    out["max_distinct"] = c.max_distinct;
    out["evidence"] = certificate_list(c.evidence);
    return out;
}

json to_json(const VarietySample& s) {
    json out = points_to_json(s.points, s.verdict);
    out["evidence"] = certificate_list(s.evidence);
    return out;
}

json to_json(const SymmSample& s) {
    json pts = json::array();
    for (const auto& p : s.points)
        pts.push_back({{"s", to_json(p.s)}, {"p", to_json(p.p)},
                       {"region", std::string(to_string(p.region))}});
    return {{"points", pts}, {"verdict", std::string(to_string(s.verdict))}};
}

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        bad("complex entries must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array of rows");
    Matrix m(idx(rows), idx(cols));
    if (rows == 0) {
        if (!j.empty()) bad(what + " must be empty");
        return m;
    }
    if (j.size() != rows) bad(what + " has the wrong number of rows");
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols) bad(what + " has a row of the wrong length");
        for (std::size_t k = 0; k < cols; ++k) m(idx(i), idx(k)) = complex_from_json(row[k]);
    }
    if (!m.allFinite()) bad(what + " has non-finite entries");
    return m;
}

ModelTriple triple_from_json(const json& j) {
    const std::size_t n = count_field(j, "dim");
    if (n < 1) bad("dim must be positive");
    return ModelTriple(matrix_from_json(field(j, "P"), n, n, "P"),
                       matrix_from_json(field(j, "U"), n, n, "U"));
}

ModelTuple tuple_from_json(const json& j) {
    const std::size_t n = count_field(j, "dim");
    const std::size_t d = count_field(j, "d");
    if (n < 1) bad("dim must be positive");
    const json& pl = field(j, "P_list");
    const json& ul = field(j, "U_list");
    if (!pl.is_array() || !ul.is_array() || pl.size() != d || ul.size() != d)
        bad("P_list and U_list must have d entries");
    std::vector<Matrix> ps, us;
    for (std::size_t i = 0; i < d; ++i) {
        ps.push_back(matrix_from_json(pl[i], n, n, "P_list[" + std::to_string(i) + "]"));
        us.push_back(matrix_from_json(ul[i], n, n, "U_list[" + std::to_string(i) + "]"));
    }
    return ModelTuple(std::move(ps), std::move(us));
}

Colligation colligation_from_json(const json& j) {
    Colligation c;
    c.dim_e = count_field(j, "dim_e");
    c.dim_h = count_field(j, "dim_h");
    if (c.dim_e < 1) bad("dim_e must be positive");
    c.a = matrix_from_json(field(j, "A"), c.dim_e, c.dim_e, "A");
    c.b = matrix_from_json(field(j, "B"), c.dim_e, c.dim_h, "B");
    c.c = matrix_from_json(field(j, "C"), c.dim_h, c.dim_e, "C");
    c.d = matrix_from_json(field(j, "D"), c.dim_h, c.dim_h, "D");
    return c;
}

BivariatePoly poly_from_json(const json& j) {
    const std::size_t d1 = count_field(j, "deg1");
    const std::size_t d2 = count_field(j, "deg2");
    const json& rows = field(j, "coeffs");
    if (!rows.is_array() || rows.size() != d1 + 1) bad("coeffs must have deg1+1 rows");
    BivariatePoly p;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != d2 + 1) bad("coeffs rows must have deg2+1 entries");
        std::vector<cplx> r;
        for (const auto& c : row) r.push_back(complex_from_json(c));
        p.coeffs.push_back(std::move(r));
    }
    return p;
}

json points_to_json(const std::vector<VarietyPoint>& pts, Verdict verdict) {
    json arr = json::array();
    for (const auto& p : pts) {
        json coords = json::array();
        for (const cplx c : p.coords) coords.push_back(to_json(c));
        arr.push_back({{"z", to_json(p.fiber_param)}, {"coords", coords},
                       {"region", std::string(to_string(p.region))}});
    }
    return {{"points", arr}, {"verdict", std::string(to_string(verdict))}};
}

std::string points_to_csv(const std::vector<VarietyPoint>& pts) {
    std::ostringstream os;
    const std::size_t d = pts.empty() ? 2 : pts.front().coords.size();
    os << "z_re,z_im";
    for (std::size_t i = 1; i <= d; ++i) os << ",z" << i << "_re,z" << i << "_im";
    os << ",region\n";
    for (const auto& p : pts) {
        os << num(p.fiber_param.real()) << ',' << num(p.fiber_param.imag());
        for (const cplx c : p.coords) os << ',' << num(c.real()) << ',' << num(c.imag());
        os << ',' << to_string(p.region) << '\n';
    }
    return os.str();
}

std::string symm_to_csv(const std::vector<SymmPoint>& pts) {
    std::ostringstream os;
    os << "s_re,s_im,p_re,p_im,region\n";
    for (const auto& p : pts)
        os << num(p.s.real()) << ',' << num(p.s.imag()) << ',' << num(p.p.real()) << ','
           << num(p.p.imag()) << ',' << to_string(p.region) << '\n';
    return os.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace distvar::io
