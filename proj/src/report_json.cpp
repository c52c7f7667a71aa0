#include "subdiv/report_json.hpp"

#include "subdiv/export.hpp"

namespace subdiv {

namespace {

Json rationals(const RationalVector& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

Json doubles(const Vector<double>& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Json optional_rational(const std::optional<Rational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

}  // namespace

Json to_json(const Mask& mask) {
    Json j;
    j["support_min"] = mask.support_min();
    j["coeffs"] = rationals(mask.coeffs());
    return j;
}

Json to_json(const SchemeRecord& record) {
    Json j;
    j["name"] = record.name;
    j["support_min"] = record.mask.support_min();
    j["coeffs"] = rationals(record.mask.coeffs());
    j["smoothness"] = record.documented_smoothness ? Json(*record.documented_smoothness) : Json(nullptr);
    j["symmetry"] = to_string(classify_symmetry(record.mask).cls);
    j["width"] = record.mask.width();
    return j;
}

Json to_json(const ConvergenceReport& report) {
    Json j;
    j["s_at_1"] = to_string(report.s_at_1);
    j["s_at_minus1"] = to_string(report.s_at_minus1);
    j["necessary_ok"] = report.necessary_ok;
    j["difference_mask"] = report.difference_mask ? to_json(*report.difference_mask) : Json(nullptr);
    j["norm"] = optional_rational(report.norm);
    j["verdict"] = to_string(report.verdict);
    j["certified_smoothness"] = report.certified_smoothness ? Json(*report.certified_smoothness) : Json(nullptr);
    Json rungs = Json::array();
    for (const auto& r : report.rungs) {
        Json rj;
        rj["m"] = r.m;
        rj["quotient"] = to_json(r.quotient);
        rj["necessary_ok"] = r.necessary_ok;
        rj["norm"] = optional_rational(r.norm);
        rj["contractive"] = r.contractive;
        rungs.push_back(std::move(rj));
    }
    j["rungs"] = std::move(rungs);
    return j;
}

Json to_json(const LocalMatrix& matrix) {
    Json j;
    j["n"] = matrix.n();
    j["column_offset"] = matrix.column_offset;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < matrix.entries.rows(); ++i) rows.push_back(rationals(matrix.entries.row(i).transpose()));
    j["entries"] = std::move(rows);
    return j;
}

Json to_json(const Spectrum& spectrum) {
    Json j;
    Json values = Json::array();
    for (const auto& mu : spectrum.eigenvalues) values.push_back({{"re", mu.real()}, {"im", mu.imag()}});
    j["eigenvalues"] = std::move(values);
    j["has_complex"] = spectrum.has_complex;
    j["negative_real_count"] = spectrum.negative_real_count;
    j["subdominant_modulus"] = spectrum.subdominant_modulus;
    j["max_residual"] = spectrum.max_residual;
    return j;
}

Json to_json(const SearchCell& cell) {
    Json j;
    Json params = Json::array();
    for (const auto& p : cell.params) params.push_back(to_string(p));
    j["params"] = std::move(params);
    j["class"] = to_string(cell.cls);
    j["max_imag"] = cell.max_imag;
    j["negative_real_count"] = cell.negative_real_count;
    j["norm"] = optional_rational(cell.norm);
    j["degenerate"] = cell.degenerate;
    return j;
}

Json to_json(const SearchResult& result) {
    Json j;
    j["width"] = result.width;
    j["parameters"] = parameter_names(result.width);
    j["cells"] = result.cells.size();
    Json counts;
    for (std::size_t k = 0; k < result.counts.size(); ++k) {
        counts[to_string(static_cast<SpectrumClass>(k))] = result.counts[k];
    }
    j["counts"] = std::move(counts);
    j["degenerate"] = result.degenerate_count;
    Json witnesses;
    for (const auto& [cls, list] : result.witnesses) {
        Json arr = Json::array();
        for (const auto& w : list) {
            Json wj = to_json(result.cells[w.cell]);
            wj["kind"] = w.kind;
            wj["cell"] = w.cell;
            arr.push_back(std::move(wj));
        }
        witnesses[to_string(cls)] = std::move(arr);
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json to_json(const MinWidthReport& report) {
    Json j;
    j["min_width"] = report.width ? Json(*report.width) : Json(nullptr);
    Json witnesses = Json::array();
    for (const auto& c : report.witnesses) witnesses.push_back(to_json(c));
    j["witnesses"] = std::move(witnesses);
    Json scans = Json::array();
    for (const auto& [w, r] : report.scans) scans.push_back(to_json(r));
    j["scans"] = std::move(scans);
    return j;
}

Json to_json(const TrajectoryReport& report) {
    Json j;
    j["status"] = to_string(report.status);
    j["diagnostic"] = report.diagnostic;
    j["fixed_point"] = doubles(report.fixed_point);
    j["distances"] = report.distances;
    j["monotonicity_violations"] = report.monotonicity_violations;
    j["rotation"] = report.rotation ? Json{{"rho", report.rotation->rho}, {"theta", report.rotation->theta}}
                                    : Json(nullptr);
    Json modes = Json::array();
    for (const auto& m : report.modes) {
        Json mj;
        mj["eigenvalue"] = {{"re", m.eigenvalue.real()}, {"im", m.eigenvalue.imag()}};
        mj["complex_pair"] = m.complex_pair;
        mj["exact"] = m.exact;
        mj["magnitudes"] = m.magnitudes;
        if (!m.complex_pair) {
            mj["sign_flips"] = m.sign_flips;
            mj["sign_steps"] = m.sign_steps;
        }
        modes.push_back(std::move(mj));
    }
    j["modes"] = std::move(modes);
    return j;
}

}  // namespace subdiv
