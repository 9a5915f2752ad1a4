#include "moore/serialize.hpp"

namespace moore {

Json to_json(const Rational& r) {
    return r.to_string();
}

Json to_json(const QSeries& f) {
    Json coeffs = Json::array();
    for (Eigen::Index i = 0; i < f.modulus(); ++i) {
        coeffs.push_back(f[i].to_string());
    }
    return Json{{"modulus", f.modulus()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const PsiMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.n; ++j) {
            row.push_back(m.entries(i, j).to_string());
        }
        rows.push_back(std::move(row));
    }
    return Json{{"q", m.q}, {"n", m.n}, {"entries", std::move(rows)}};
}

Json to_json(const ObstructionReport& report) {
    Json valuations = Json::array();
    for (const auto& [i, v] : report.valuations) {
        valuations.push_back(Json::array({i, v}));
    }
    return Json{{"p", report.p},
                {"k", report.k},
                {"c", report.c.to_string()},
                {"first_failure", report.first_failure},
                {"n_max", report.n_max},
                {"valuations", std::move(valuations)}};
}

Json to_json(const std::vector<RationalVector>& basis) {
    Json out = Json::array();
    for (const auto& v : basis) {
        Json vec = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            vec.push_back(v[i].to_string());
        }
        out.push_back(std::move(vec));
    }
    return out;
}

std::string csv_row(const ObstructionReport& report) {
    return std::to_string(report.p) + "," + std::to_string(report.k) + "," +
           report.c.to_string() + "," + std::to_string(report.first_failure) + "," +
           std::to_string(report.n_max);
}

}  // namespace moore
